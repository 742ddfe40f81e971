import random

import pytest

from conftest import ring_for
from tauideal import (
    GF,
    LinearForm,
    PairSpec,
    ZeroPolynomialError,
    augmentation_test,
    dim2_probe,
    dim4_family,
    homogeneous_detect,
    hyperplane_scan,
    lines_family,
    restriction_test,
    slice_independence,
)
from tauideal.bertini import (
    DegenerateHyperplaneError,
    ScanBudgetExceeded,
    evaluate_hyperplane,
    resolve_filter_mask,
)

QUARTIC_POLY = "x^3*y*z*w + x*y^3*z^3"


def quartic_pair(p=2, r=1):
    ring = ring_for(p, r=r, nvars=4)
    return PairSpec(ring.parse(QUARTIC_POLY) if p == 2 else dim4_family(GF(p, r)).pair.f)


class TestLinearForm:
    def test_construction(self):
        ring = ring_for(3, nvars=3)
        l = LinearForm.from_polynomial(ring.parse("1 + x + 2*z"))
        assert l.codes == (1, 1, 0, 2)
        assert l.constant == 1
        assert l.gradient == (1, 0, 2)
        assert l.pattern() == "1101"
        assert str(l) == "x + 2*z + 1"

    def test_round_trip(self):
        ring = ring_for(3, nvars=2)
        l = LinearForm(ring, (2, 0, 1))
        assert LinearForm.from_polynomial(l.polynomial) == l

    def test_normalized(self):
        ring = ring_for(3, nvars=2)
        l = LinearForm(ring, (2, 2, 1)).normalized()
        assert l.codes == (1, 1, 2)
        assert LinearForm(ring, (0, 1, 2)).normalized().codes == (0, 1, 2)

    def test_degenerate_rules(self):
        ring = ring_for(3, nvars=2)
        with pytest.raises(DegenerateHyperplaneError):
            LinearForm(ring, (0, 0, 0))
        with pytest.raises(DegenerateHyperplaneError):
            LinearForm(ring, (1, 0, 0))
        LinearForm(ring, (1, 0, 0), allow_degenerate=True)

    def test_arity_checked(self):
        ring = ring_for(3, nvars=2)
        with pytest.raises(ValueError):
            LinearForm(ring, (1, 2))

    def test_masks(self):
        ring = ring_for(3, nvars=2)
        l = LinearForm(ring, (1, 0, 2))
        assert l.matches("1*1")
        assert l.matches("10*")
        assert not l.matches("111")
        assert resolve_filter_mask("all-nonzero", 2) == "111"
        assert resolve_filter_mask("none", 2) == "***"
        assert resolve_filter_mask(None, 2) == "***"
        assert resolve_filter_mask("1*0", 2) == "1*0"
        with pytest.raises(ValueError):
            resolve_filter_mask("11", 2)
        with pytest.raises(ValueError):
            resolve_filter_mask("1x1", 2)


class TestAugmentation:
    def test_failing_hyperplane_golden(self):
        pair = quartic_pair()
        l = LinearForm(pair.ring, (1, 1, 1, 1, 1))
        out = augmentation_test(pair, l)
        assert out.equal is False
        assert str(out.witness) == "x"
        assert out.containment_ok is True
        assert out.product_ideal.contains_ideal(out.product_ideal)

    def test_constant_line_is_noop(self):
        pair = quartic_pair()
        l = LinearForm(pair.ring, (1, 0, 0, 0, 0), allow_degenerate=True)
        out = augmentation_test(pair, l)
        assert out.equal is True
        assert out.witness is None

    def test_witness_lies_outside_product_ideal(self):
        pair = quartic_pair(3)
        l = LinearForm(pair.ring, (1, 1, 1, 1, 1))
        out = augmentation_test(pair, l)
        assert out.equal is False
        assert pair.ideal.contains(out.witness)
        assert not out.product_ideal.contains(out.witness)


class TestRestriction:
    def test_failing_hyperplane_golden(self):
        pair = quartic_pair()
        l = LinearForm(pair.ring, (1, 1, 1, 1, 1))
        out = restriction_test(pair, l)
        assert out.equal is False
        assert str(out.witness) == "x"
        assert out.witness_side == "image"
        assert out.eliminated == "w"
        assert out.chart_ring.names == ("x", "y", "z")
        assert [str(g) for g in out.image_ideal.groebner] == ["x", "y*z"]
        assert [str(g) for g in out.intrinsic_ideal.groebner] == [
            "y*z + x",
            "x*z",
            "x*y",
            "x^2",
        ]

    def test_eliminate_override(self):
        pair = quartic_pair()
        l = LinearForm(pair.ring, (1, 1, 1, 1, 1))
        out = restriction_test(pair, l, eliminate="y")
        assert out.eliminated == "y"
        assert out.chart_ring.names == ("x", "z", "w")
        assert out.equal is False

    def test_eliminate_zero_coefficient_rejected(self):
        pair = quartic_pair()
        l = LinearForm(pair.ring, (1, 1, 1, 1, 0))
        with pytest.raises(ValueError):
            restriction_test(pair, l, eliminate="w")
        out = restriction_test(pair, l)  # default picks z instead
        assert out.eliminated == "z"

    def test_dividing_line_raises(self):
        ring = ring_for(2, nvars=2)
        pair = PairSpec(ring.parse("x*y"))
        with pytest.raises(ZeroPolynomialError):
            restriction_test(pair, LinearForm(ring, (0, 1, 0)))

    def test_constant_form_rejected(self):
        pair = quartic_pair()
        l = LinearForm(pair.ring, (1, 0, 0, 0, 0), allow_degenerate=True)
        with pytest.raises(DegenerateHyperplaneError):
            restriction_test(pair, l)


class TestSliceIndependence:
    def test_quartic_family_passes(self):
        fam = dim4_family(GF(3))
        ok, bad = slice_independence(fam.slices)
        assert ok and bad is None

    def test_zero_slice_fails(self):
        ring = ring_for(2, nvars=3)
        ok, bad = slice_independence([ring.zero, ring.parse("x")])
        assert not ok and bad == 0

    def test_dependent_slice_fails(self):
        ring = ring_for(2, nvars=3)
        ok, bad = slice_independence([ring.parse("x"), ring.parse("x*y")])
        assert not ok and bad == 1

    def test_wrong_count_rejected(self):
        ring = ring_for(3, nvars=3)
        with pytest.raises(ValueError):
            slice_independence([ring.parse("x")])

    def test_last_variable_rejected(self):
        ring = ring_for(2, nvars=3)
        with pytest.raises(ValueError):
            slice_independence([ring.parse("z"), ring.parse("x")])


class TestFamilies:
    def test_dim4_golden(self):
        fam2 = dim4_family(2)
        assert str(fam2.pair.f) == "x*y^3*z^3 + x^3*y*z*w"
        assert [str(s) for s in fam2.slices] == ["y*z", "x"]
        fam3 = dim4_family(GF(3))
        assert str(fam3.pair.f) == (
            "x^2*y^8*z^5*w + x^2*y^5*z^8 + x^5*y^2*z^2*w^2"
        )
        assert [str(s) for s in fam3.slices] == ["y*z^2", "y^2*z", "x"]
        assert fam3.lines is None

    def test_lines_golden(self):
        fam = lines_family(GF(2, 2), n=3, seed=5)
        assert str(fam.pair.f) == "x1^3*x2*x3 + x1*x2^3*x3 + x1*x2^3"
        assert fam.lines is not None and len(fam.lines) == 2
        ok, _ = slice_independence(fam.slices)
        assert ok

    def test_lines_distinct_directions(self):
        fam = lines_family(GF(3, 2), n=3, seed=1)
        assert len({str(l) for l in fam.lines}) == 3
        for line in fam.lines:
            assert line.is_homogeneous() and line.total_degree() == 1
            assert line.degree_in("x3") == 0

    def test_lines_needs_three_vars(self):
        with pytest.raises(ValueError, match="n >= 3"):
            lines_family(GF(2), n=2)
        with pytest.raises(ValueError, match="n >= 3"):
            lines_family(GF(5), n=1)


class TestHomogeneousDetect:
    def test_lines_family_applicable(self):
        fam = lines_family(GF(2, 2), n=3, seed=5)
        det = homogeneous_detect(fam.pair)
        assert det.applicable
        assert det.common_degree == 1
        assert det.span_dim >= 2
        assert "nonzero" in det.prediction

    def test_dim4_not_applicable(self):
        det = homogeneous_detect(dim4_family(GF(3)).pair)
        assert not det.applicable
        assert "mixed degrees" in det.reason
        assert det.prediction is None

    def test_deep_level_rejected(self):
        ring = ring_for(2, nvars=2)
        with pytest.raises(ValueError):
            homogeneous_detect(PairSpec(ring.parse("x^3*y"), e=2))

    def test_off_block_support(self):
        ring = ring_for(2, nvars=3)
        det = homogeneous_detect(PairSpec(ring.parse("x^2")))
        assert not det.applicable

    def test_one_dimensional_span(self):
        # both slices equal y: span dimension 1, not applicable
        ring = ring_for(2, nvars=3)
        f = ring.parse("x*y^3 + x*y^3*z")
        det = homogeneous_detect(PairSpec(f))
        assert not det.applicable
        assert det.span_dim == 1


class TestScan:
    def test_enumerate_counts_match_brute_force(self):
        field = GF(3)
        ring = ring_for(3, nvars=2)
        pair = PairSpec(ring.parse("x^3*y + x*y^3"))
        report = hyperplane_scan(pair, mode="enumerate")
        brute = 0
        for c0 in range(3):
            for c1 in range(3):
                for c2 in range(3):
                    codes = (c0, c1, c2)
                    if not any(codes[1:]):
                        continue
                    lead = next(c for c in codes if c)
                    if lead == 1:
                        brute += 1
        assert report.total == brute == 12
        assert report.tally.consistent()
        assert sum(t.tested for t in report.by_pattern.values()) == report.total

    def test_degenerate_tally(self):
        ring = ring_for(2, nvars=2)
        pair = PairSpec(ring.parse("x*y"))
        report = hyperplane_scan(pair, mode="enumerate")
        assert report.total == 6
        assert report.tally.degenerate == 2  # l = x and l = y divide f
        degat = {str(v.hyperplane) for v in report.verdicts if v.degenerate}
        assert degat == {"x", "y"}

    def test_filter_enforced(self):
        pair = quartic_pair()
        report = hyperplane_scan(pair, mode="enumerate", coefficient_filter="all-nonzero")
        assert report.total == 1
        assert report.coefficient_filter == "11111"
        assert all(v.pattern == "11111" for v in report.verdicts)

    def test_sample_mode_deterministic(self):
        pair = quartic_pair()
        a = hyperplane_scan(pair, mode="sample", count=10, seed=3)
        b = hyperplane_scan(pair, mode="sample", count=10, seed=3)
        assert [v.hyperplane.codes for v in a.verdicts] == [
            v.hyperplane.codes for v in b.verdicts
        ]
        c = hyperplane_scan(pair, mode="sample", count=10, seed=4)
        assert [v.hyperplane.codes for v in a.verdicts] != [
            v.hyperplane.codes for v in c.verdicts
        ]
        assert a.total == 10 and a.requested == 10

    def test_sample_respects_filter(self):
        pair = quartic_pair()
        report = hyperplane_scan(
            pair, mode="sample", count=8, seed=0, coefficient_filter="0****"
        )
        assert all(v.hyperplane.constant == 0 for v in report.verdicts)

    def test_budget(self):
        pair = quartic_pair()
        with pytest.raises(ScanBudgetExceeded):
            hyperplane_scan(pair, mode="enumerate", budget=10)

    def test_bad_mode_and_count(self):
        pair = quartic_pair()
        with pytest.raises(ValueError):
            hyperplane_scan(pair, mode="walk")
        with pytest.raises(ValueError):
            hyperplane_scan(pair, mode="sample", count=0)

    def test_jobs_preserve_order(self):
        pair = quartic_pair()
        seq = hyperplane_scan(pair, mode="enumerate", coefficient_filter="111*1")
        par = hyperplane_scan(pair, mode="enumerate", coefficient_filter="111*1", jobs=2)
        assert [v.hyperplane.codes for v in seq.verdicts] == [
            v.hyperplane.codes for v in par.verdicts
        ]
        assert seq.tally == par.tally

    def test_universal_failure_smallest_field(self):
        pair = quartic_pair()
        report = hyperplane_scan(pair, mode="enumerate", coefficient_filter="all-nonzero")
        assert report.tally.both_fail == report.total == 1
        v = report.verdicts[0]
        assert v.failed and not v.degenerate
        assert str(v.restriction_witness) == "x"


class TestEvaluateHyperplane:
    def test_degenerate_verdict(self):
        ring = ring_for(2, nvars=2)
        pair = PairSpec(ring.parse("x*y"))
        v = evaluate_hyperplane(pair, LinearForm(ring, (0, 1, 0)))
        assert v.degenerate
        assert v.restriction_equal is None
        assert v.eliminated is None
        # the augmentation comparison is still meaningful for l = x
        assert v.augmentation_equal is False

    def test_clean_verdict(self):
        pair = quartic_pair()
        v = evaluate_hyperplane(pair, LinearForm(pair.ring, (1, 1, 1, 1, 1)))
        assert not v.degenerate
        assert v.pattern == "11111"
        assert v.failed


class TestDim2Probe:
    def test_positive_cases(self):
        ring = ring_for(5, nvars=2)
        for text in ("x^5", "x*y", "x^2 + x*y"):
            report = dim2_probe(ring.parse(text), coefficient_filter="1**")
            assert report.total == 24
            assert report.tally.degenerate == 0
            assert all(v.restriction_equal for v in report.verdicts), text

    def test_wrong_arity(self):
        ring = ring_for(5, nvars=3)
        with pytest.raises(ValueError):
            dim2_probe(ring.parse("x*y"))
