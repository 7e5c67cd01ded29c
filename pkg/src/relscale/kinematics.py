"""Events, x-axis boosts, the Lorentz factor, and the spacetime interval.

Everything here works in natural units (c = 1), so coordinates x and t
share a dimension.  Boosts are restricted to the x axis; the transverse
coordinates y and z pass through untouched.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Event",
    "RelativeSpeed",
    "LorentzFactor",
    "Interval",
    "gamma",
    "lorentz_transform",
    "inverse_transform",
    "interval",
]


def _check_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class Event:
    """A spacetime point (x, y, z, t) in natural units."""

    x: float
    y: float = 0.0
    z: float = 0.0
    t: float = 0.0

    def __post_init__(self):
        for name in ("x", "y", "z", "t"):
            _check_finite(name, getattr(self, name))


@dataclass(frozen=True)
class RelativeSpeed:
    """Boost parameter beta = v/c; must lie strictly inside (-1, 1)."""

    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.beta) and abs(self.beta) < 1.0):
            raise ValueError("beta must satisfy |beta| < 1")

    def __neg__(self) -> "RelativeSpeed":
        return RelativeSpeed(-self.beta)


@dataclass(frozen=True)
class LorentzFactor:
    """The dimensionless ratio r >= 1.

    Not meant to be built by hand: obtain one from :func:`gamma`,
    :func:`relscale.scale.scale_ratio`, or
    :func:`relscale.linac.gamma_from_kinetic`, which guarantee the
    invariant at the creation site.
    """

    value: float

    def __post_init__(self):
        if not (math.isfinite(self.value) and self.value >= 1.0):
            raise ValueError(f"Lorentz factor must be finite and >= 1, got {self.value!r}")


@dataclass(frozen=True)
class Interval:
    """Signed squared spacetime interval x^2 + y^2 + z^2 - t^2.

    Positive means spacelike, negative timelike, zero lightlike.
    """

    value: float

    def __post_init__(self):
        _check_finite("interval", self.value)


def gamma(speed: RelativeSpeed) -> LorentzFactor:
    """Lorentz factor r = (1 - beta^2)^(-1/2)."""
    return LorentzFactor(1.0 / math.sqrt(1.0 - speed.beta * speed.beta))


def lorentz_transform(e: Event, speed: RelativeSpeed) -> Event:
    """Boost an event into the frame moving at ``speed`` along x.

    x' = r (x - V t),  t' = r (t - V x),  y' = y,  z' = z.
    """
    v = speed.beta
    r = gamma(speed).value
    xp = r * (e.x - v * e.t)
    tp = r * (e.t - v * e.x)
    if not (math.isfinite(xp) and math.isfinite(tp)):
        raise OverflowError("boost overflowed to non-finite coordinates")
    return Event(x=xp, y=e.y, z=e.z, t=tp)


def inverse_transform(e_prime: Event, speed: RelativeSpeed) -> Event:
    """Map an event back from the moving frame.

    x = r (x' + V t'),  t = r (t' + V x').  Identical to a boost with
    the velocity sign flipped, and implemented that way so the duality
    holds bit for bit.
    """
    return lorentz_transform(e_prime, -speed)


def interval(e: Event) -> Interval:
    """Signed squared interval x^2 + y^2 + z^2 - t^2 of an event."""
    return Interval(e.x * e.x + e.y * e.y + e.z * e.z - e.t * e.t)
