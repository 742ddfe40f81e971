import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_poly, ring_for
from tauideal import (
    DegreeGuardExceeded,
    Ideal,
    groebner_basis,
    ideal_contains,
    ideal_equal,
    ideal_member,
    normal_form,
)
from tauideal.poly import monomial_divides


def gb_strings(gens, **kw):
    return [str(g) for g in groebner_basis(gens, **kw)]


class TestGoldenBases:
    def test_two_quadrics_char3(self):
        # S-pair of x^2 + y^2 and x*y reduces to y^3; basis is then closed
        ring = ring_for(3, nvars=2)
        gens = [ring.parse("x^2 + y^2"), ring.parse("x*y")]
        assert gb_strings(gens) == ["x*y", "x^2 + y^2", "y^3"]

    def test_symmetric_cubic_system_char7(self):
        ring = ring_for(7, nvars=3)
        gens = [
            ring.parse("x + y + z"),
            ring.parse("x*y + y*z + z*x"),
            ring.parse("x*y*z + 6"),
        ]
        assert gb_strings(gens) == [
            "x + y + z",
            "y^2 + y*z + z^2",
            "z^3 + 6",
        ]

    def test_lex_elimination(self):
        # from x = y^2 and x*y = 1 the smallest lex element is y^3 - 1
        ring = ring_for(5, nvars=2, order="lex")
        gens = [ring.parse("x + 4*y^2"), ring.parse("x*y + 4")]
        gb = groebner_basis(gens)
        assert str(gb[0]) == "y^3 + 4"

    def test_unit_ideal(self):
        ring = ring_for(3, nvars=2)
        gb = groebner_basis([ring.parse("x + 1"), ring.parse("x")])
        assert [str(g) for g in gb] == ["1"]

    def test_zero_gens_dropped(self):
        ring = ring_for(3, nvars=2)
        assert groebner_basis([ring.zero]) == []
        assert gb_strings([ring.zero, ring.parse("x")]) == ["x"]


class TestNormalForm:
    def setup_method(self):
        self.ring = ring_for(3, nvars=2)
        self.gb = groebner_basis(
            [self.ring.parse("x^2 + y^2"), self.ring.parse("x*y")]
        )

    def test_reduction_golden(self):
        assert str(normal_form(self.ring.parse("x^2"), self.gb)) == "2*y^2"
        assert normal_form(self.ring.parse("y^3"), self.gb).is_zero()
        assert str(normal_form(self.ring.parse("y^2"), self.gb)) == "y^2"

    def test_idempotent(self):
        f = self.ring.parse("x^3 + x*y + y + 1")
        r = normal_form(f, self.gb)
        assert normal_form(r, self.gb) == r

    def test_difference_in_ideal(self):
        f = self.ring.parse("x^3 + x*y + y + 1")
        r = normal_form(f, self.gb)
        assert normal_form(f - r, self.gb).is_zero()


class TestDegreeGuard:
    def test_guard_raises(self):
        # the S-pair of the two quadrics produces a cubic, beyond the guard
        ring = ring_for(3, nvars=2)
        gens = [ring.parse("x^2 + y^2"), ring.parse("x*y")]
        with pytest.raises(DegreeGuardExceeded) as info:
            groebner_basis(gens, degree_guard=2)
        assert info.value.guard == 2
        assert info.value.degree == 3


class TestIdealApi:
    def test_contains(self):
        ring = ring_for(3, nvars=2)
        ideal = Ideal([ring.parse("x^2 + y^2"), ring.parse("x*y")])
        assert ideal.contains(ring.parse("y^3"))
        assert not ideal.contains(ring.parse("y^2"))
        assert ideal_member(ring.parse("y^3"), ideal)

    def test_equality_and_hash(self):
        ring = ring_for(3, nvars=2)
        a = Ideal([ring.parse("x^2 + y^2"), ring.parse("x*y")])
        b = Ideal([ring.parse("x*y"), ring.parse("x^2 + y^2 + 2*x*y")])
        assert a == b
        assert len({a, b}) == 1

    def test_contains_ideal(self):
        ring = ring_for(3, nvars=2)
        big = Ideal([ring.parse("x"), ring.parse("y")])
        small = Ideal([ring.parse("x^2 + x*y")])
        assert big.contains_ideal(small)
        assert not small.contains_ideal(big)
        assert ideal_contains(big, small)

    def test_zero_ideal(self):
        ring = ring_for(3, nvars=2)
        z = Ideal([ring.zero], ring=ring)
        assert z.is_zero()
        assert not Ideal([ring.parse("x")]).is_zero()

    def test_bracket_power(self):
        ring = ring_for(2, nvars=2)
        bracketed = Ideal([ring.parse("x + y")]).bracket_power(1)
        assert [str(g) for g in bracketed.gens] == ["x^2 + y^2"]

    def test_groebner_cached(self):
        ring = ring_for(3, nvars=2)
        ideal = Ideal([ring.parse("x*y + 1")])
        assert ideal.groebner is ideal.groebner


def _basis_is_reduced(gb, ring):
    for i, g in enumerate(gb):
        assert g.leading_coefficient().code == 1
        for j, h in enumerate(gb):
            if i == j:
                continue
            # no term of g is divisible by another leading monomial
            for mono in g.terms:
                assert not monomial_divides(h.leading_monomial(), mono)
    keys = [ring.order_key(g.leading_monomial()) for g in gb]
    assert keys == sorted(keys)


class TestInvariants:
    def test_reduced_and_sorted(self):
        rng = random.Random(3)
        ring = ring_for(3, nvars=3)
        for _ in range(20):
            gens = [random_poly(ring, rng, max_exp=3) for _ in range(2)]
            gb = groebner_basis(gens)
            _basis_is_reduced(gb, ring)

    def test_gb_idempotent(self):
        rng = random.Random(5)
        for p, nvars in ((2, 3), (3, 2), (5, 2)):
            ring = ring_for(p, nvars=nvars)
            for _ in range(10):
                gens = [random_poly(ring, rng, max_exp=3) for _ in range(2)]
                gb = groebner_basis(gens)
                assert groebner_basis(gb) == gb

    def test_members_reduce_to_zero(self):
        rng = random.Random(11)
        ring = ring_for(3, nvars=2)
        for _ in range(25):
            gens = [random_poly(ring, rng, max_exp=3) for _ in range(2)]
            gb = groebner_basis(gens)
            combo = ring.zero
            for g in gens:
                combo = combo + random_poly(ring, rng, max_exp=2) * g
            assert normal_form(combo, gb).is_zero()

    @given(st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=25, deadline=None)
    def test_equal_under_regeneration(self, seed):
        rng = random.Random(seed)
        ring = ring_for(2, nvars=2)
        gens = [random_poly(ring, rng, max_exp=3) for _ in range(2)]
        shuffled = list(gens)
        rng.shuffle(shuffled)
        # adding a combination of the originals never changes the ideal
        shuffled.append(gens[0] * random_poly(ring, rng, max_exp=2))
        assert ideal_equal(Ideal(gens), Ideal(shuffled))
