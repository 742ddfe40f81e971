import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tauideal import GF, FieldMismatchError
from tauideal.ff import format_g_polynomial, parse_g_polynomial


class TestPrimeField:
    def test_arithmetic(self):
        F = GF(5)
        assert F.add(2, 4) == 1
        assert F.mul(3, 4) == 2
        assert F.neg(2) == 3
        assert F.sub(1, 3) == 3
        assert F.inv(3) == 2
        assert F.div(1, 4) == 4
        assert F.power(2, 4) == 1
        assert F.power(2, 0) == 1

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            GF(5).inv(0)

    def test_composite_characteristic_rejected(self):
        with pytest.raises(ValueError):
            GF(6)
        with pytest.raises(ValueError):
            GF(1)

    def test_elements(self):
        F = GF(7)
        codes = [e.code for e in F.elements()]
        assert codes == list(range(7))

    def test_element_wrapper_ops(self):
        F = GF(5)
        a, b = F.element(3), F.element(4)
        assert (a + b).code == 2
        assert (a * b).code == 2
        assert (a - b).code == 4
        assert (a / b).code == 2
        assert (-a).code == 2
        assert (a ** 2).code == 4
        assert a != b and a == F.element(3)
        assert bool(a) and not bool(F.zero)


class TestExtensionField:
    def test_generator_relation(self):
        # default modulus for GF(9) is g^2 + 2g + 2, so g^2 = g + 1
        F = GF(3, 2)
        g = F.generator
        assert g.code == 3
        assert (g * g).code == (g + F.one).code

    def test_generator_order(self):
        F = GF(3, 2)
        g = F.generator
        acc = F.one
        seen = set()
        for _ in range(F.q - 1):
            acc = acc * g
            seen.add(acc.code)
        assert acc == F.one
        assert len(seen) == F.q - 1  # multiplicative order is exactly q - 1

    def test_frobenius_fixes_prime_subfield(self):
        F = GF(2, 3)
        fixed = [x for x in F.elements() if F.frobenius(x.code) == x.code]
        assert len(fixed) == 2

    def test_pth_root_inverts_frobenius(self):
        for F in (GF(2, 2), GF(3, 2), GF(5, 2)):
            for x in F.elements():
                root = F.pth_root(x.code)
                assert F.power(root, F.p) == x.code

    def test_pth_root_deeper_level(self):
        F = GF(3, 2)
        for x in F.elements():
            root = F.pth_root(x.code, 2)
            assert F.power(root, F.p ** 2) == x.code

    def test_pth_root_multiplicative(self):
        F = GF(2, 3)
        for x in F.elements():
            for y in F.elements():
                lhs = F.pth_root(F.mul(x.code, y.code))
                rhs = F.mul(F.pth_root(x.code), F.pth_root(y.code))
                assert lhs == rhs

    def test_custom_modulus(self):
        F = GF(3, 2, "g^2 + 1")
        g = F.generator
        assert (g * g).code == F.neg(F.one.code)

    def test_reducible_modulus_rejected(self):
        with pytest.raises(ValueError):
            GF(3, 2, "g^2 + 2")  # has roots 1 and 2

    def test_no_builtin_modulus(self):
        with pytest.raises(ValueError):
            GF(2, 9)

    def test_large_field_without_add_table(self):
        # q = 2^11 exceeds the table threshold, exercising digit arithmetic
        F = GF(2, 11, "g^11 + g^2 + 1")
        a, b, c = 37, 1025, 900
        assert F.mul(F.add(a, b), c) == F.add(F.mul(a, c), F.mul(b, c))
        assert F.mul(a, F.inv(a)) == 1
        assert F.power(F.pth_root(a), 2) == a

    def test_field_mixing_rejected(self):
        a = GF(3, 2).element(1)
        b = GF(3, 2, "g^2 + 1").element(1)
        with pytest.raises(FieldMismatchError):
            a + b

    def test_pickle_identity(self):
        F = GF(3, 2)
        assert pickle.loads(pickle.dumps(F)) is F
        x = F.generator + F.one
        assert pickle.loads(pickle.dumps(x)) == x

    def test_element_parsing(self):
        F = GF(3, 2)
        assert F.element("g + 1").code == 4
        assert F.element(4).code == 1  # integers reduce mod p
        assert F.from_code(4).code == 4

    def test_format_code(self):
        F = GF(3, 2)
        assert F.format_code(0) == "0"
        assert F.format_code(2) == "2"
        assert F.format_code(3) == "g"
        assert F.format_code(7) == "2*g+1"


class TestGPolynomialText:
    def test_parse(self):
        assert parse_g_polynomial("g^2+2*g+2", 3) == (2, 2, 1)
        assert parse_g_polynomial("g^2 + 1", 3) == (1, 0, 1)

    def test_round_trip(self):
        for text in ("g^2+2*g+2", "g^3+2*g+1", "g^11+g^2+1"):
            coeffs = parse_g_polynomial(text, 13)
            assert parse_g_polynomial(format_g_polynomial(coeffs), 13) == coeffs

    def test_bad_text(self):
        with pytest.raises(ValueError):
            parse_g_polynomial("x^2+1", 3)


codes9 = st.integers(min_value=0, max_value=8)


class TestFieldAxioms:
    @given(codes9, codes9, codes9)
    @settings(max_examples=60, deadline=None)
    def test_ring_axioms(self, a, b, c):
        F = GF(3, 2)
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1

    @given(codes9, codes9)
    @settings(max_examples=40, deadline=None)
    def test_frobenius_is_additive(self, a, b):
        F = GF(3, 2)
        assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
        assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
