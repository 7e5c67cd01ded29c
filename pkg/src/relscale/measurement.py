"""Differential boosts and the four interval-measurement cases.

A length or duration reading only means something once you fix the
measurement condition: simultaneity in one frame (zero the time
differential there) or locality (zero the spatial differential).  Each
of the four conditions pins down exactly one stretched relation between
the frames, and the diagnoser flags claimed relations that pair a
condition with the wrong frame's differential.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass

from relscale.kinematics import LorentzFactor, RelativeSpeed, gamma

__all__ = [
    "DifferentialPair",
    "MeasurementCondition",
    "MeasurementRelation",
    "Verdict",
    "ParadigmVerdict",
    "ClaimedFormError",
    "lt_differential",
    "it_differential",
    "relation_for",
    "diagnose_paradigm",
]


@dataclass(frozen=True)
class DifferentialPair:
    """Spatial and temporal differentials (dx, dt) in natural units."""

    dx: float
    dt: float

    def __post_init__(self):
        if not (math.isfinite(self.dx) and math.isfinite(self.dt)):
            raise ValueError("differentials must be finite")


class MeasurementCondition(enum.Enum):
    """Necessary condition attached to an interval measurement."""

    SIMULTANEOUS_IN_F = "dT=0"
    SIMULTANEOUS_IN_F_PRIME = "dT'=0"
    LOCAL_IN_F = "dX=0"
    LOCAL_IN_F_PRIME = "dX'=0"

    @classmethod
    def from_text(cls, text: str) -> "MeasurementCondition":
        normalized = text.replace(" ", "")
        for cond in cls:
            if cond.value == normalized:
                return cond
        accepted = ", ".join(c.value for c in cls)
        raise ValueError(f"unrecognized condition {text!r}; accepted: {accepted}")


class Verdict(enum.Enum):
    MATCHED = "Matched"
    MISMATCHED = "Mismatched"


# stretched quantity -> the differential on the right-hand side
_PARTNER = {"dX'": "dX", "dX": "dX'", "dT'": "dT", "dT": "dT'"}

# condition -> (stretched quantity, equation id)
_RELATION_TABLE = {
    MeasurementCondition.SIMULTANEOUS_IN_F: ("dX'", 11),
    MeasurementCondition.SIMULTANEOUS_IN_F_PRIME: ("dX", 12),
    MeasurementCondition.LOCAL_IN_F: ("dT'", 13),
    MeasurementCondition.LOCAL_IN_F_PRIME: ("dT", 14),
}


@dataclass(frozen=True)
class MeasurementRelation:
    """One of the four stretched relations, e.g. dX' = r * dX."""

    stretched_quantity: str
    factor: LorentzFactor
    equation_id: int
    contracted_view_frame: str

    def canonical_form(self) -> str:
        return f"{self.stretched_quantity}=r*{_PARTNER[self.stretched_quantity]}"


@dataclass(frozen=True)
class ParadigmVerdict:
    classification: Verdict
    expected_relation: MeasurementRelation
    claimed_form: str


class ClaimedFormError(ValueError):
    """Raised when a claimed relation is not one of the canonical forms."""


def lt_differential(d: DifferentialPair, speed: RelativeSpeed) -> DifferentialPair:
    """dx' = r (dx - V dt),  dt' = r (dt - V dx)."""
    v = speed.beta
    r = gamma(speed).value
    return DifferentialPair(dx=r * (d.dx - v * d.dt), dt=r * (d.dt - v * d.dx))


def it_differential(d_prime: DifferentialPair, speed: RelativeSpeed) -> DifferentialPair:
    """dx = r (dx' + V dt'),  dt = r (dt' + V dx')."""
    return lt_differential(d_prime, -speed)


def relation_for(cond: MeasurementCondition, speed: RelativeSpeed) -> MeasurementRelation:
    """Stretched relation selected by a measurement condition.

    dT=0  -> dX' = r dX    dT'=0 -> dX = r dX'
    dX=0  -> dT' = r dT    dX'=0 -> dT = r dT'

    The contracted reading is never observed directly; it is inferred
    from the frame whose differential sits on the right-hand side, so
    that frame is recorded as ``contracted_view_frame``.
    """
    stretched, eq_id = _RELATION_TABLE[cond]
    rhs = _PARTNER[stretched]
    frame = "F'" if rhs.endswith("'") else "F"
    return MeasurementRelation(
        stretched_quantity=stretched,
        factor=gamma(speed),
        equation_id=eq_id,
        contracted_view_frame=frame,
    )


_CLAIM_RE = re.compile(
    r"^(d[XT]'?)=(?:r\*(d[XT]'?)|(d[XT]'?)/r)$",
    re.IGNORECASE,
)

_ACCEPTED_FORMS = (
    "dX'=r*dX", "dX=r*dX'", "dX'=dX/r", "dX=dX'/r",
    "dT'=r*dT", "dT=r*dT'", "dT'=dT/r", "dT=dT'/r",
)


def _canonicalize_quantity(q: str) -> str:
    return "d" + q[1].upper() + q[2:]


def parse_claimed_relation(text: str) -> str:
    """Reduce a claimed relation to its stretched quantity.

    Accepts the eight canonical forms (whitespace-insensitive): the
    stretched form ``A=r*B`` and its algebraic rearrangement ``B=A/r``
    both reduce to stretched quantity ``A``.
    """
    compact = re.sub(r"\s+", "", text)
    m = _CLAIM_RE.match(compact)
    if m is None:
        raise ClaimedFormError(
            f"unrecognized relation {text!r}; accepted forms: " + ", ".join(_ACCEPTED_FORMS)
        )
    lhs = _canonicalize_quantity(m.group(1))
    if m.group(2) is not None:
        stretched, rhs = lhs, _canonicalize_quantity(m.group(2))
    else:
        rhs, stretched = lhs, _canonicalize_quantity(m.group(3))
    if _PARTNER[stretched] != rhs:
        raise ClaimedFormError(
            f"relation {text!r} mixes unrelated differentials; accepted forms: "
            + ", ".join(_ACCEPTED_FORMS)
        )
    return stretched


def diagnose_paradigm(
    cond: MeasurementCondition, claimed: str, speed: RelativeSpeed
) -> ParadigmVerdict:
    """Check a claimed relation against the one the condition demands.

    Matched means the claim is algebraically the relation selected by
    ``cond``; Mismatched means the claim stretches the wrong frame's
    differential for that condition.
    """
    claimed_stretched = parse_claimed_relation(claimed)
    expected = relation_for(cond, speed)
    verdict = (
        Verdict.MATCHED
        if claimed_stretched == expected.stretched_quantity
        else Verdict.MISMATCHED
    )
    return ParadigmVerdict(
        classification=verdict, expected_relation=expected, claimed_form=claimed
    )
