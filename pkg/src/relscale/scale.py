"""Light-clock periods and the Lorentz factor as a scale-conversion ratio.

This module is dimensional: the clock geometry carries an explicit
light speed c, and speeds v share its units.  Conversion to the natural
units used elsewhere happens only through the ratio v/c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from relscale.kinematics import LorentzFactor, RelativeSpeed, gamma

__all__ = [
    "ClockGeometry",
    "ScaleReport",
    "stationary_period",
    "moving_period",
    "scale_ratio",
    "clock_report",
    "scaled_interval_relation",
    "covarying_scale",
]


@dataclass(frozen=True)
class ClockGeometry:
    """Light clock with emitter-to-mirror distance d and light speed c."""

    d: float
    c: float

    def __post_init__(self):
        if not (math.isfinite(self.d) and self.d > 0):
            raise ValueError(f"mirror distance d must be positive and finite, got {self.d!r}")
        if not (math.isfinite(self.c) and self.c > 0):
            raise ValueError(f"light speed c must be positive and finite, got {self.c!r}")


@dataclass(frozen=True)
class ScaleReport:
    """Stationary and moving clock periods with their conversion ratio."""

    t1: float
    t2: float
    ratio: LorentzFactor
    covarying_scale: float


def _check_speed(g: ClockGeometry, v: float) -> None:
    if not (math.isfinite(v) and 0.0 <= v < g.c):
        raise ValueError(f"clock speed must satisfy 0 <= v < c, got v={v!r} with c={g.c!r}")


def stationary_period(g: ClockGeometry) -> float:
    """One round-trip period of the clock at rest: t1 = 2d / c."""
    return 2.0 * g.d / g.c


def moving_period(g: ClockGeometry, v: float) -> float:
    """One period of the same clock moving at speed v.

    t2 = 2d / sqrt(c^2 - v^2); diverges as v -> c, so v >= c is rejected.
    """
    _check_speed(g, v)
    return 2.0 * g.d / math.sqrt(g.c * g.c - v * v)


def scale_ratio(g: ClockGeometry, v: float) -> LorentzFactor:
    """Moving-to-stationary period ratio t2 / t1 = (1 - (v/c)^2)^(-1/2).

    Equals gamma(v/c) independently of the clock geometry; this is the
    scale-conversion ratio between the covarying and invariant scales.
    """
    _check_speed(g, v)
    ratio = moving_period(g, v) / stationary_period(g)
    # guard against the ratio landing one ulp below 1 at v = 0
    return LorentzFactor(max(ratio, 1.0))


def clock_report(g: ClockGeometry, v: float) -> ScaleReport:
    """Both periods plus the conversion ratio for one clock geometry."""
    t1 = stationary_period(g)
    ratio = scale_ratio(g, v)
    return ScaleReport(t1=t1, t2=moving_period(g, v), ratio=ratio, covarying_scale=t1 * ratio.value)


def scaled_interval_relation(
    x: float, t: float, speed: RelativeSpeed
) -> tuple[float, float]:
    """Both sides of the scaled-interval identity X'^2 - T'^2 = r^2 (x^2 - t^2).

    With X' = r x and T' = r t, the two sides agree exactly in algebra;
    in floating point they agree to roundoff on the scale of the terms.
    """
    r = gamma(speed).value
    xp = r * x
    tp = r * t
    lhs = xp * xp - tp * tp
    rhs = (r * r) * (x * x - t * t)
    return lhs, rhs


def covarying_scale(invariant_scale: float, speed: RelativeSpeed) -> float:
    """Covarying scale = invariant scale * Lorentz factor."""
    if not (math.isfinite(invariant_scale) and invariant_scale > 0):
        raise ValueError(f"invariant scale must be positive and finite, got {invariant_scale!r}")
    return invariant_scale * gamma(speed).value
