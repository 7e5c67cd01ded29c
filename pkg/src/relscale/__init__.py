"""Special-relativity kinematics with explicit scale-conversion bookkeeping.

Boosts along x, the four interval-measurement cases, the light-clock
derivation of the Lorentz factor as a scale-conversion ratio, and the
fixed-length linac worked example.
"""

from relscale.kinematics import (
    Event,
    Interval,
    LorentzFactor,
    RelativeSpeed,
    gamma,
    interval,
    inverse_transform,
    lorentz_transform,
)
from relscale.measurement import (
    DifferentialPair,
    MeasurementCondition,
    MeasurementRelation,
    ParadigmVerdict,
    Verdict,
    diagnose_paradigm,
    it_differential,
    lt_differential,
    relation_for,
)
from relscale.scale import (
    ClockGeometry,
    ScaleReport,
    clock_report,
    covarying_scale,
    moving_period,
    scale_ratio,
    scaled_interval_relation,
    stationary_period,
)
from relscale.linac import (
    LinacRow,
    LinacSpec,
    gamma_from_kinetic,
    generate_table,
    table_row,
)

__version__ = "0.1.0"

__all__ = [
    "Event",
    "Interval",
    "LorentzFactor",
    "RelativeSpeed",
    "gamma",
    "interval",
    "inverse_transform",
    "lorentz_transform",
    "DifferentialPair",
    "MeasurementCondition",
    "MeasurementRelation",
    "ParadigmVerdict",
    "Verdict",
    "diagnose_paradigm",
    "it_differential",
    "lt_differential",
    "relation_for",
    "ClockGeometry",
    "ScaleReport",
    "clock_report",
    "covarying_scale",
    "moving_period",
    "scale_ratio",
    "scaled_interval_relation",
    "stationary_period",
    "LinacRow",
    "LinacSpec",
    "gamma_from_kinetic",
    "generate_table",
    "table_row",
]
