import pytest
from hypothesis import given
from hypothesis import strategies as st

from relscale import (
    DifferentialPair,
    MeasurementCondition,
    RelativeSpeed,
    Verdict,
    diagnose_paradigm,
    gamma,
    it_differential,
    lt_differential,
    relation_for,
)
from relscale.measurement import ClaimedFormError, parse_claimed_relation

betas = st.floats(min_value=-0.99, max_value=0.99, allow_nan=False)
diffs = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)


class TestDifferentials:
    def test_lt_hand_values(self):
        s = RelativeSpeed(0.6)
        out = lt_differential(DifferentialPair(dx=1.0, dt=0.0), s)
        assert (out.dx, out.dt) == (pytest.approx(1.25), pytest.approx(-0.75))
        # r (1 - V) = 1.25 * 0.4 on both components
        out = lt_differential(DifferentialPair(dx=1.0, dt=1.0), s)
        assert (out.dx, out.dt) == (pytest.approx(0.5), pytest.approx(0.5))

    def test_it_hand_values(self):
        s = RelativeSpeed(0.6)
        out = it_differential(DifferentialPair(dx=1.25, dt=-0.75), s)
        assert out.dx == pytest.approx(1.0)
        assert abs(out.dt) < 1e-12
        out = it_differential(DifferentialPair(dx=1.0, dt=0.0), s)
        assert (out.dx, out.dt) == (pytest.approx(1.25), pytest.approx(0.75))

    @given(b=betas)
    def test_zero_differential_passes_through(self, b):
        zero = DifferentialPair(0.0, 0.0)
        for f in (lt_differential, it_differential):
            out = f(zero, RelativeSpeed(b))
            assert (out.dx, out.dt) == (0.0, 0.0)


_EXPECTED = {
    MeasurementCondition.SIMULTANEOUS_IN_F: ("dX'", 11, "F"),
    MeasurementCondition.SIMULTANEOUS_IN_F_PRIME: ("dX", 12, "F'"),
    MeasurementCondition.LOCAL_IN_F: ("dT'", 13, "F"),
    MeasurementCondition.LOCAL_IN_F_PRIME: ("dT", 14, "F'"),
}


class TestRelationFor:
    @pytest.mark.parametrize("cond", list(MeasurementCondition))
    def test_mapping(self, cond):
        rel = relation_for(cond, RelativeSpeed(0.6))
        stretched, eq_id, frame = _EXPECTED[cond]
        assert rel.stretched_quantity == stretched
        assert rel.equation_id == eq_id
        assert rel.contracted_view_frame == frame
        assert rel.factor.value == pytest.approx(1.25)

    def test_no_relative_motion(self):
        rel = relation_for(MeasurementCondition.SIMULTANEOUS_IN_F, RelativeSpeed(0.0))
        assert rel.factor.value == 1.0

    @given(b=betas)
    def test_factor_equals_gamma_exactly(self, b):
        s = RelativeSpeed(b)
        for cond in MeasurementCondition:
            assert relation_for(cond, s).factor.value == gamma(s).value

    @given(dx=diffs, b=betas)
    def test_consistent_with_zeroed_differentials(self, dx, b):
        """Each stretched relation is the matching transform with one
        differential zeroed."""
        s = RelativeSpeed(b)
        r = gamma(s).value
        tol = 1e-12 * (1.0 + abs(r * dx))
        # dT = 0: dX' = r dX
        assert abs(lt_differential(DifferentialPair(dx, 0.0), s).dx - r * dx) <= tol
        # dT' = 0: dX = r dX'
        assert abs(it_differential(DifferentialPair(dx, 0.0), s).dx - r * dx) <= tol
        # dX = 0: dT' = r dT
        assert abs(lt_differential(DifferentialPair(0.0, dx), s).dt - r * dx) <= tol
        # dX' = 0: dT = r dT'
        assert abs(it_differential(DifferentialPair(0.0, dx), s).dt - r * dx) <= tol

    def test_reciprocity_under_tag_exchange(self):
        s = RelativeSpeed(0.6)
        mirrors = {
            MeasurementCondition.SIMULTANEOUS_IN_F: MeasurementCondition.SIMULTANEOUS_IN_F_PRIME,
            MeasurementCondition.LOCAL_IN_F: MeasurementCondition.LOCAL_IN_F_PRIME,
        }
        for cond, mirror in mirrors.items():
            a = relation_for(cond, s)
            b = relation_for(mirror, s)
            # swapping frames swaps primed and unprimed quantities
            assert a.stretched_quantity.rstrip("'") == b.stretched_quantity.rstrip("'")
            assert a.stretched_quantity != b.stretched_quantity
            assert a.contracted_view_frame != b.contracted_view_frame


class TestClaimedFormParsing:
    @pytest.mark.parametrize(
        "text,stretched",
        [
            ("dX'=r*dX", "dX'"),
            ("dX=r*dX'", "dX"),
            ("dX'=dX/r", "dX"),
            ("dX=dX'/r", "dX'"),
            ("dT'=r*dT", "dT'"),
            ("dT=r*dT'", "dT"),
            ("dT'=dT/r", "dT"),
            ("dT=dT'/r", "dT'"),
            ("dX' = r * dX", "dX'"),
        ],
    )
    def test_canonical_forms(self, text, stretched):
        assert parse_claimed_relation(text) == stretched

    @pytest.mark.parametrize("text", ["dX'=r+dX", "dX'=dT/r", "gibberish", "dX'=r*dT'"])
    def test_rejects_non_canonical(self, text):
        with pytest.raises(ClaimedFormError, match="accepted forms"):
            parse_claimed_relation(text)


class TestDiagnoseParadigm:
    def test_historical_form_is_mismatched(self):
        verdict = diagnose_paradigm(
            MeasurementCondition.SIMULTANEOUS_IN_F, "dX' = dX / r", RelativeSpeed(0.6)
        )
        assert verdict.classification is Verdict.MISMATCHED
        assert verdict.expected_relation.canonical_form() == "dX'=r*dX"

    def test_matched_cases(self):
        s = RelativeSpeed(0.6)
        v = diagnose_paradigm(MeasurementCondition.SIMULTANEOUS_IN_F, "dX'=r*dX", s)
        assert v.classification is Verdict.MATCHED
        v = diagnose_paradigm(MeasurementCondition.SIMULTANEOUS_IN_F_PRIME, "dX=r*dX'", s)
        assert v.classification is Verdict.MATCHED

    @pytest.mark.parametrize("cond", list(MeasurementCondition))
    def test_canonical_pairing_always_matches(self, cond):
        s = RelativeSpeed(0.3)
        claimed = relation_for(cond, s).canonical_form()
        assert diagnose_paradigm(cond, claimed, s).classification is Verdict.MATCHED

    def test_condition_parsing(self):
        assert MeasurementCondition.from_text("dT = 0") is MeasurementCondition.SIMULTANEOUS_IN_F
        with pytest.raises(ValueError, match="unrecognized condition"):
            MeasurementCondition.from_text("dQ=0")
