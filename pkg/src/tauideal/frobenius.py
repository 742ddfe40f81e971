"""Frobenius decomposition and test ideals of principal pairs.

Over a perfect field of characteristic p, every polynomial f splits
uniquely as

    f = sum over alpha in [0, p^e)^n of (s_alpha)^(p^e) * x^alpha,

since each term c*x^beta lands in the slot alpha = beta mod p^e with
quotient exponent (beta - alpha)/p^e and coefficient the unique p^e-th
root of c.  The slot components s_alpha are exactly the images of f
under the projections of the e-th Frobenius pushforward, so the ideal
they generate is the test ideal of the pair (A^n, f^(1/p^e)).

``product_pair_generators`` produces generators of the test ideal of
(f*l)^(1/p) directly from the slot components of f and the coefficients
of an affine-linear l, without decomposing the product: multiplying by
x_j shifts slot indices by one in coordinate j, and the shift wraps
around to slot p-1 while depositing a visible factor x_j.
"""

from __future__ import annotations

import itertools
from typing import Dict, List, Optional, Tuple

from .groebner import DEFAULT_DEGREE_GUARD, Ideal
from .poly import Monomial, Polynomial, PolynomialRing

DEFAULT_SLOT_BUDGET = 10**6


class ZeroPolynomialError(ValueError):
    """The zero polynomial does not define a principal pair."""


class SlotBudgetExceeded(ValueError):
    """p^(e*n) slot count exceeds the configured budget."""

    def __init__(self, slots: int, budget: int):
        super().__init__(
            f"decomposition has {slots} slots, over the budget of {budget}; "
            f"raise the budget to proceed"
        )
        self.slots = slots
        self.budget = budget


class FrobeniusDecomposition:
    """The slot components {s_alpha} of one polynomial at level e.

    Behaves as a read-only mapping from slot exponents (tuples in
    [0, p^e)^n) to nonzero polynomials; absent slots are zero.
    """

    __slots__ = ("ring", "e", "components")

    def __init__(self, ring: PolynomialRing, e: int, components: Dict[Monomial, Polynomial]):
        self.ring = ring
        self.e = e
        self.components = components

    def __getitem__(self, alpha: Monomial) -> Polynomial:
        return self.components[alpha]

    def get(self, alpha: Monomial, default=None):
        return self.components.get(alpha, default)

    def slot(self, alpha: Monomial) -> Polynomial:
        """Component at a slot, zero when absent."""
        return self.components.get(tuple(alpha), self.ring.zero)

    def __iter__(self):
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __contains__(self, alpha) -> bool:
        return alpha in self.components

    def keys(self):
        return self.components.keys()

    def values(self):
        return self.components.values()

    def items(self):
        return self.components.items()

    def recompose(self) -> Polynomial:
        result = self.ring.zero
        for alpha, s in self.components.items():
            result = result + s.frobenius_power(self.e).shift(alpha)
        return result

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}: {s}" for a, s in self.components.items())
        return f"FrobeniusDecomposition(e={self.e}, {{{inner}}})"


def decompose(f: Polynomial, e: int = 1) -> FrobeniusDecomposition:
    """Slot components of f at Frobenius level e.

    Each term c*x^beta of f contributes root(c, e)*x^gamma to the slot
    alpha = beta mod p^e, with gamma = (beta - alpha) / p^e.  Only slots
    with nonzero component are stored, and
    ``decompose(f, e).recompose() == f``.
    """
    if e < 1:
        raise ValueError(f"Frobenius level must be >= 1, got {e}")
    ring = f.ring
    field = ring.field
    q = field.p**e
    root = field.pth_root
    buckets: Dict[Monomial, dict] = {}
    for mono, code in f.terms.items():
        alpha = tuple(b % q for b in mono)
        gamma = tuple(b // q for b in mono)
        buckets.setdefault(alpha, {})[gamma] = root(code, e)
    components = {alpha: Polynomial(ring, terms) for alpha, terms in sorted(buckets.items())}
    return FrobeniusDecomposition(ring, e, components)


def recompose(
    components,
    e: Optional[int] = None,
    ring: Optional[PolynomialRing] = None,
) -> Polynomial:
    """Inverse of ``decompose``: sum of s_alpha^(p^e) * x^alpha."""
    if isinstance(components, FrobeniusDecomposition):
        return components.recompose()
    if e is None:
        raise ValueError("plain component maps need an explicit level e")
    if ring is None:
        if not components:
            raise ValueError("empty component map needs an explicit ring")
        ring = next(iter(components.values())).ring
    result = ring.zero
    for alpha, s in components.items():
        result = result + s.frobenius_power(e).shift(alpha)
    return result


def trace(f: Polynomial, e: int = 1) -> Polynomial:
    """Image of f under the trace projection at level e.

    This is the slot component at (p^e - 1, ..., p^e - 1), the
    coefficient of the top Frobenius basis element.
    """
    q = f.ring.field.p**e
    top = (q - 1,) * f.ring.nvars
    return decompose(f, e).slot(top)


def test_ideal(
    f: Polynomial,
    e: int = 1,
    degree_guard: int = DEFAULT_DEGREE_GUARD,
) -> Ideal:
    """Test ideal of the pair (A^n, f^(1/p^e)): generated by the slot components."""
    if f.is_zero():
        raise ZeroPolynomialError("test ideal of the zero polynomial is undefined")
    comps = decompose(f, e)
    return Ideal(tuple(comps.values()), ring=f.ring, degree_guard=degree_guard)


def projective_chart_test_ideal(
    big_f: Polynomial,
    chart: int,
    e: int = 1,
    degree_guard: int = DEFAULT_DEGREE_GUARD,
) -> Ideal:
    """Test ideal of a homogeneous form on the affine chart x_chart = 1.

    The big test ideal of projective space is defined locally, so each
    chart is just the test ideal of the dehomogenization in the chart's
    coordinate ring (the ambient ring minus the chart variable).
    """
    if big_f.is_zero():
        raise ZeroPolynomialError("chart test ideal of the zero form is undefined")
    if not big_f.is_homogeneous():
        raise ValueError("chart computation needs a homogeneous form")
    ring = big_f.ring
    if not 0 <= chart < ring.nvars:
        raise ValueError(f"chart index {chart} out of range for {ring.nvars} variables")
    from .poly import polynomial_ring

    chart_names = tuple(n for i, n in enumerate(ring.names) if i != chart)
    if not chart_names:
        raise ValueError("chart ring needs at least one remaining variable")
    chart_ring = polynomial_ring(ring.field, chart_names, ring.order)
    dehom = chart_ring.from_terms(
        (tuple(x for i, x in enumerate(mono) if i != chart), code)
        for mono, code in big_f.terms.items()
    )
    return test_ideal(dehom, e, degree_guard=degree_guard)


def _linear_coefficients(l: Polynomial) -> Tuple[int, Tuple[int, ...]]:
    """Split an affine-linear polynomial into (constant, gradient) codes."""
    ring = l.ring
    if l.is_zero():
        raise ZeroPolynomialError("the zero form does not define a product pair")
    if l.total_degree() > 1:
        raise ValueError(f"expected an affine-linear form, got degree {l.total_degree()}")
    const = 0
    grad = [0] * ring.nvars
    for mono, code in l.terms.items():
        if sum(mono) == 0:
            const = code
        else:
            grad[mono.index(1)] = code
    return const, tuple(grad)


def product_pair_generators(f: Polynomial, l: Polynomial) -> List[Polynomial]:
    """Generators of the test ideal of (f*l)^(1/p) from the slots of f.

    For l = c_0 + sum c_j x_j, the slot-beta generator is

        root(c_0) * s_beta + sum_j root(c_j) * shifted_j(beta)

    where shifted_j(beta) is s at beta lowered by one in coordinate j,
    wrapping to p-1 with an extra factor x_j when beta_j = 0.  The
    returned list generates the same ideal as
    ``test_ideal(f * l, 1)``.
    """
    ring = f.ring
    if l.ring != ring:
        raise ValueError("f and l live in different rings")
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial does not define a product pair")
    field = ring.field
    p = field.p
    const, grad = _linear_coefficients(l)
    comps = decompose(f, 1)
    root_const = field.pth_root(const, 1)
    root_grad = [field.pth_root(c, 1) for c in grad]
    gens: List[Polynomial] = []

    touched = set()
    for alpha in comps:
        touched.add(alpha)
        for j, c in enumerate(grad):
            if c:
                beta = list(alpha)
                beta[j] = (beta[j] + 1) % p
                touched.add(tuple(beta))

    for beta in sorted(touched):
        g = ring.zero
        if root_const:
            s = comps.get(beta)
            if s is not None:
                g = g + s * field.from_code(root_const)
        for j, rc in enumerate(root_grad):
            if not rc:
                continue
            source = list(beta)
            source[j] -= 1
            wrapped = source[j] < 0
            if wrapped:
                source[j] = p - 1
            s = comps.get(tuple(source))
            if s is None:
                continue
            piece = s * field.from_code(rc)
            if wrapped:
                shift = [0] * ring.nvars
                shift[j] = 1
                piece = piece.shift(shift)
            g = g + piece
        if not g.is_zero():
            gens.append(g)
    return gens


class PairSpec:
    """A principal pair (polynomial, Frobenius level) with cached results.

    Validates the slot budget p^(e*n) <= budget up front so oversized
    decompositions fail fast with a clear message.
    """

    __slots__ = ("f", "e", "degree_guard", "budget", "_components", "_ideal")

    def __init__(
        self,
        f: Polynomial,
        e: int = 1,
        degree_guard: int = DEFAULT_DEGREE_GUARD,
        budget: int = DEFAULT_SLOT_BUDGET,
    ):
        if f.is_zero():
            raise ZeroPolynomialError("a principal pair needs a nonzero polynomial")
        if e < 1:
            raise ValueError(f"Frobenius level must be >= 1, got {e}")
        slots = f.ring.field.p ** (e * f.ring.nvars)
        if slots > budget:
            raise SlotBudgetExceeded(slots, budget)
        self.f = f
        self.e = e
        self.degree_guard = degree_guard
        self.budget = budget
        self._components = None
        self._ideal = None

    @property
    def ring(self) -> PolynomialRing:
        return self.f.ring

    @property
    def components(self) -> Dict[Monomial, Polynomial]:
        if self._components is None:
            self._components = decompose(self.f, self.e)
        return self._components

    @property
    def ideal(self) -> Ideal:
        if self._ideal is None:
            self._ideal = Ideal(
                tuple(self.components.values()),
                ring=self.ring,
                degree_guard=self.degree_guard,
            )
        return self._ideal

    def canonical_generators(self) -> Tuple[Polynomial, ...]:
        """Reduced Groebner basis of the test ideal, ascending leading monomials."""
        return self.ideal.groebner

    def __repr__(self) -> str:
        return f"PairSpec({self.f}, e={self.e})"
