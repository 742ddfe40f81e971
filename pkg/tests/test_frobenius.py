import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_linear, random_poly, ring_for
from tauideal import test_ideal as compute_test_ideal
from tauideal import (
    GF,
    Ideal,
    PairSpec,
    SlotBudgetExceeded,
    ZeroPolynomialError,
    decompose,
    ideal_equal,
    product_pair_generators,
    projective_chart_test_ideal,
    recompose,
    trace,
)


class TestDecompose:
    def test_golden_char2(self):
        ring = ring_for(2, nvars=1)
        comps = decompose(ring.parse("x^3 + x^2"))
        assert {a: str(s) for a, s in comps.items()} == {(0,): "x", (1,): "x"}

    def test_extension_coefficient_root(self):
        # the slot stores the p-th root of each coefficient: root(g) = g^3
        ring = ring_for(3, r=2, nvars=1)
        comps = decompose(ring.parse("g*x^3"))
        assert str(comps[(0,)]) == "(2*g+1)*x"

    def test_mapping_protocol(self):
        ring = ring_for(3, nvars=2)
        comps = decompose(ring.parse("x^4*y + 2*x"))
        assert len(comps) == 2
        assert (1, 1) in comps
        assert comps.slot((0, 0)).is_zero()
        assert set(comps.keys()) == {(1, 0), (1, 1)}
        assert comps.get((9, 9)) is None

    def test_level_validation(self):
        ring = ring_for(3, nvars=1)
        with pytest.raises(ValueError):
            decompose(ring.parse("x"), 0)

    def test_recompose_explicit(self):
        ring = ring_for(3, nvars=2)
        f = ring.parse("x^4*y^3 + 2*x^2 + y + 1")
        comps = decompose(f, 1)
        total = ring.zero
        for alpha, s in comps.items():
            total = total + s.frobenius_power(1).shift(alpha)
        assert total == f
        assert recompose(comps) == f
        assert recompose(dict(comps.items()), e=1) == f

    def test_recompose_needs_level(self):
        ring = ring_for(3, nvars=1)
        with pytest.raises(ValueError):
            recompose({(0,): ring.one})


class TestTrace:
    def test_top_slot_constant(self):
        ring = ring_for(3, nvars=2)
        assert trace(ring.parse("x^2*y^2")) == ring.one
        assert trace(ring.parse("x*y")).is_zero()

    def test_projection_shape(self):
        # only exponents congruent to (p-1, ..., p-1) survive
        ring = ring_for(3, nvars=2)
        f = ring.parse("x^5*y^2 + x^2*y^2 + x*y")
        assert str(trace(f)) == "x + 1"


class TestTestIdeal:
    def test_quartic_family_golden(self):
        from tauideal import dim4_family

        expected = {
            2: ["x", "y*z"],
            3: ["x", "y*z^2", "y^2*z"],
        }
        for p, gens in expected.items():
            fam = dim4_family(GF(p))
            assert [str(g) for g in fam.pair.canonical_generators()] == gens

    def test_unit_ideal_when_slot_is_constant(self):
        ring = ring_for(3, nvars=1)
        ideal = compute_test_ideal(ring.parse("x^2"))
        assert [str(g) for g in ideal.groebner] == ["1"]

    def test_small_multiplicity_is_unit(self):
        ring = ring_for(5, nvars=2)
        assert [str(g) for g in compute_test_ideal(ring.parse("x*y")).groebner] == ["1"]

    def test_zero_rejected(self):
        ring = ring_for(3, nvars=1)
        with pytest.raises(ZeroPolynomialError):
            compute_test_ideal(ring.zero)

    def test_membership_in_bracket_power(self):
        rng = random.Random(23)
        for p, e, nvars in ((2, 1, 3), (3, 1, 2), (2, 2, 2), (3, 2, 2)):
            ring = ring_for(p, nvars=nvars)
            for _ in range(10):
                f = random_poly(ring, rng, max_exp=p**e + 2)
                tau = compute_test_ideal(f, e)
                assert tau.bracket_power(e).contains(f)


class TestPairSpec:
    def test_caches(self):
        ring = ring_for(2, nvars=2)
        pair = PairSpec(ring.parse("x^3*y + x"))
        assert pair.components is pair.components
        assert pair.ideal is pair.ideal
        assert pair.canonical_generators() == pair.ideal.groebner

    def test_validation(self):
        ring = ring_for(5, nvars=2)
        with pytest.raises(ZeroPolynomialError):
            PairSpec(ring.zero)
        with pytest.raises(ValueError):
            PairSpec(ring.parse("x"), e=0)
        with pytest.raises(SlotBudgetExceeded) as info:
            PairSpec(ring.parse("x"), e=3, budget=100)
        assert info.value.slots == 5**6
        assert info.value.budget == 100


class TestProductFormula:
    def test_constant_line(self):
        # multiplying by a nonzero constant never changes the ideal
        ring = ring_for(3, nvars=2)
        f = ring.parse("x^4*y + x*y^2")
        gens = product_pair_generators(f, ring.constant(2))
        assert ideal_equal(Ideal(gens), compute_test_ideal(f))

    def test_matches_direct_route(self):
        rng = random.Random(101)
        cases = 0
        for p in (2, 3, 5):
            for nvars in (1, 2, 3):
                ring = ring_for(p, nvars=nvars)
                for _ in range(8):
                    f = random_poly(ring, rng, max_exp=2 * p)
                    l = random_linear(ring, rng)
                    direct = compute_test_ideal(f * l)
                    formula = Ideal(
                        product_pair_generators(f, l), ring=ring
                    )
                    assert ideal_equal(formula, direct), (str(f), str(l))
                    cases += 1
        assert cases == 72

    def test_rejects_nonlinear(self):
        ring = ring_for(3, nvars=2)
        with pytest.raises(ValueError):
            product_pair_generators(ring.parse("x"), ring.parse("x^2"))

    def test_rejects_zero(self):
        ring = ring_for(3, nvars=2)
        with pytest.raises(ZeroPolynomialError):
            product_pair_generators(ring.zero, ring.parse("x"))
        with pytest.raises(ZeroPolynomialError):
            product_pair_generators(ring.parse("x"), ring.zero)


class TestChart:
    def test_golden(self):
        from tauideal import polynomial_ring

        ring5 = polynomial_ring(GF(2), ("v", "x", "y", "z", "w"))
        hom = ring5.parse("v*x^3*y*z*w + x*y^3*z^3")
        assert hom.is_homogeneous()
        ideal = projective_chart_test_ideal(hom, 0)
        assert [str(g) for g in ideal.groebner] == ["x", "y*z"]
        assert ideal.ring.names == ("x", "y", "z", "w")

    def test_nonhomogeneous_rejected(self):
        ring = ring_for(2, nvars=2)
        with pytest.raises(ValueError):
            projective_chart_test_ideal(ring.parse("x^2 + x"), 0)

    def test_chart_bounds(self):
        ring = ring_for(2, nvars=2)
        with pytest.raises(ValueError):
            projective_chart_test_ideal(ring.parse("x^2"), 5)


@st.composite
def poly_and_level(draw):
    p = draw(st.sampled_from((2, 3)))
    e = draw(st.sampled_from((1, 2)))
    nvars = draw(st.integers(min_value=1, max_value=3))
    n = draw(st.integers(min_value=1, max_value=4))
    terms = []
    for _ in range(n):
        mono = tuple(
            draw(st.integers(min_value=0, max_value=p**e + 3))
            for _ in range(nvars)
        )
        terms.append((mono, draw(st.integers(min_value=0, max_value=p - 1))))
    return p, e, nvars, terms


class TestRoundTrip:
    @given(poly_and_level())
    @settings(max_examples=80, deadline=None)
    def test_recompose_inverts_decompose(self, case):
        p, e, nvars, terms = case
        ring = ring_for(p, nvars=nvars)
        f = ring.from_terms(terms)
        assert decompose(f, e).recompose() == f

    @given(st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=30, deadline=None)
    def test_extension_round_trip(self, seed):
        rng = random.Random(seed)
        ring = ring_for(2, r=2, nvars=2)
        f = random_poly(ring, rng, max_exp=5)
        for e in (1, 2):
            assert decompose(f, e).recompose() == f
