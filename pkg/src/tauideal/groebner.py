"""Groebner bases and ideal arithmetic via Buchberger's algorithm.

The engine computes the unique reduced monic Groebner basis for the
ring's term order, with S-pairs processed in normal-selection order
(smallest lcm first) and pruned by the coprime and chain criteria.
A configurable degree guard aborts runaway computations with a
diagnostic instead of looping forever.

Basis elements are returned sorted ascending by leading monomial, so
the generator listing of an ideal is canonical: two ideals are equal
exactly when their listings match.
"""

from __future__ import annotations

import heapq
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .poly import (
    Monomial,
    Polynomial,
    PolynomialRing,
    monomial_div,
    monomial_divides,
    monomial_lcm,
)

DEFAULT_DEGREE_GUARD = 512

TermMap = Dict[Monomial, int]


class DegreeGuardExceeded(RuntimeError):
    """An intermediate polynomial outgrew the configured degree guard."""

    def __init__(self, degree: int, guard: int, basis_size: int, pairs_left: int):
        super().__init__(
            f"intermediate degree {degree} exceeds guard {guard} "
            f"(basis size {basis_size}, {pairs_left} pairs pending); "
            f"raise the guard to continue"
        )
        self.degree = degree
        self.guard = guard
        self.basis_size = basis_size
        self.pairs_left = pairs_left


def _reduce_full(
    terms: TermMap,
    reducers: Sequence[Tuple[Monomial, int, tuple]],
    ring: PolynomialRing,
) -> TermMap:
    """Full normal form of ``terms`` against ``reducers``.

    Each reducer is (leading monomial, inverse leading coefficient,
    tail items); the first reducer whose leading monomial divides the
    current maximal monomial is used, so the result is deterministic
    for a fixed reducer list.
    """
    field = ring.field
    order_key = ring.order_key
    mul, sub = field.mul, field.sub
    work = dict(terms)
    out: TermMap = {}
    while work:
        m = max(work, key=order_key)
        c = work.pop(m)
        hit = None
        for lm, inv_lc, tail in reducers:
            if monomial_divides(lm, m):
                hit = (lm, inv_lc, tail)
                break
        if hit is None:
            out[m] = c
            continue
        lm, inv_lc, tail = hit
        factor = mul(c, inv_lc)
        shift = monomial_div(m, lm)
        for tm, tc in tail:
            mono = tuple(a + b for a, b in zip(tm, shift))
            prev = work.get(mono, 0)
            val = sub(prev, mul(factor, tc))
            if val:
                work[mono] = val
            elif prev:
                del work[mono]
    return out


def _prepare(terms: TermMap, ring: PolynomialRing) -> Tuple[Monomial, int, tuple]:
    lm = max(terms, key=ring.order_key)
    inv_lc = ring.field.inv(terms[lm])
    tail = tuple((m, c) for m, c in terms.items() if m != lm)
    return (lm, inv_lc, tail)


def _spoly(
    a: Tuple[Monomial, int, tuple],
    b: Tuple[Monomial, int, tuple],
    lcm: Monomial,
    ring: PolynomialRing,
) -> TermMap:
    """S-polynomial of two prepared (monic-normalized) reducers."""
    field = ring.field
    mul, sub = field.mul, field.sub
    out: TermMap = {}
    shift_a = monomial_div(lcm, a[0])
    for m, c in a[2]:
        mono = tuple(x + y for x, y in zip(m, shift_a))
        out[mono] = mul(c, a[1])
    shift_b = monomial_div(lcm, b[0])
    for m, c in b[2]:
        mono = tuple(x + y for x, y in zip(m, shift_b))
        val = sub(out.get(mono, 0), mul(c, b[1]))
        if val:
            out[mono] = val
        elif mono in out:
            del out[mono]
    return out


def groebner_basis(
    gens: Iterable[Polynomial],
    degree_guard: int = DEFAULT_DEGREE_GUARD,
) -> List[Polynomial]:
    """Reduced monic Groebner basis, sorted ascending by leading monomial."""
    gens = [f for f in gens if not f.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    for f in gens[1:]:
        if f.ring != ring:
            raise ValueError("generators live in different rings")
    order_key = ring.order_key

    basis: List[TermMap] = []
    prepared: List[Tuple[Monomial, int, tuple]] = []
    for f in gens:
        red = _reduce_full(f.terms, prepared, ring)
        if red:
            basis.append(red)
            prepared.append(_prepare(red, ring))

    # Pair queue in normal-selection order (smallest lcm first).
    heap: list = []
    counter = 0
    for j in range(len(basis)):
        for i in range(j):
            lcm = monomial_lcm(prepared[i][0], prepared[j][0])
            heapq.heappush(heap, (order_key(lcm), counter, i, j, lcm))
            counter += 1

    done: set = set()
    while heap:
        _, _, i, j, lcm = heapq.heappop(heap)
        done.add((i, j))
        lm_i, lm_j = prepared[i][0], prepared[j][0]
        # Coprime criterion: disjoint leading supports reduce to zero.
        if all(a == 0 or b == 0 for a, b in zip(lm_i, lm_j)):
            continue
        # Chain criterion: a third element dividing the lcm whose pairs
        # with both ends were already handled makes this pair redundant.
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if monomial_divides(prepared[k][0], lcm):
                pik = (i, k) if i < k else (k, i)
                pjk = (j, k) if j < k else (k, j)
                if pik in done and pjk in done:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(prepared[i], prepared[j], lcm, ring)
        red = _reduce_full(s, prepared, ring)
        if not red:
            continue
        deg = max(sum(m) for m in red)
        if deg > degree_guard:
            raise DegreeGuardExceeded(deg, degree_guard, len(basis), len(heap))
        t = len(basis)
        basis.append(red)
        prepared.append(_prepare(red, ring))
        for i2 in range(t):
            lcm2 = monomial_lcm(prepared[i2][0], prepared[t][0])
            heapq.heappush(heap, (order_key(lcm2), counter, i2, t, lcm2))
            counter += 1

    return _inter_reduce(basis, ring)


def _inter_reduce(basis: List[TermMap], ring: PolynomialRing) -> List[Polynomial]:
    """Minimalize, tail-reduce, and normalize to the reduced monic basis."""
    order_key = ring.order_key
    lead = [max(b, key=order_key) for b in basis]
    keep = []
    for i, lm in enumerate(lead):
        if not any(
            j != i
            and monomial_divides(lead[j], lm)
            and (lead[j] != lm or j < i)
            for j in range(len(basis))
        ):
            keep.append(i)
    mul = ring.field.mul
    reduced: List[TermMap] = []
    kept = [basis[i] for i in keep]
    kept_lead = [lead[i] for i in keep]
    for i, b in enumerate(kept):
        others = [
            _prepare(kept[j], ring) for j in range(len(kept)) if j != i
        ]
        red = _reduce_full(b, others, ring)
        if not red:
            continue
        lm = max(red, key=order_key)
        inv = ring.field.inv(red[lm])
        reduced.append({m: mul(c, inv) for m, c in red.items()})
    reduced.sort(key=lambda t: order_key(max(t, key=order_key)))
    return [Polynomial(ring, t) for t in reduced]


def normal_form(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Remainder of ``f`` on full division by ``basis`` (in list order)."""
    ring = f.ring
    reducers = []
    for b in basis:
        if b.is_zero():
            continue
        if b.ring != ring:
            raise ValueError("basis element in a different ring")
        reducers.append(_prepare(b.terms, ring))
    return Polynomial(ring, _reduce_full(f.terms, reducers, ring))


class Ideal:
    """An ideal with a lazily computed, cached reduced Groebner basis."""

    __slots__ = ("ring", "gens", "degree_guard", "_gb")

    def __init__(
        self,
        gens: Sequence[Polynomial],
        ring: Optional[PolynomialRing] = None,
        degree_guard: int = DEFAULT_DEGREE_GUARD,
    ):
        gens = tuple(gens)
        if ring is None:
            if not gens:
                raise ValueError("zero ideal needs an explicit ring")
            ring = gens[0].ring
        for f in gens:
            if f.ring != ring:
                raise ValueError("generators live in different rings")
        self.ring = ring
        self.gens = gens
        self.degree_guard = degree_guard
        self._gb = None

    @property
    def groebner(self) -> Tuple[Polynomial, ...]:
        if self._gb is None:
            self._gb = tuple(groebner_basis(self.gens, self.degree_guard))
        return self._gb

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.groebner).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        gb = self.groebner
        return all(normal_form(f, gb).is_zero() for f in other.gens)

    def is_zero(self) -> bool:
        return not self.groebner

    def bracket_power(self, e: int) -> "Ideal":
        """The ideal generated by the p^e-th powers of the generators.

        Over a polynomial ring this is the Frobenius image ideal: it does
        not depend on the choice of generators.
        """
        if e < 0:
            raise ValueError("bracket power level must be >= 0")
        return Ideal(
            tuple(f.frobenius_power(e) for f in self.gens),
            ring=self.ring,
            degree_guard=self.degree_guard,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.groebner == other.groebner

    def __hash__(self) -> int:
        return hash((self.ring, self.groebner))

    def __repr__(self) -> str:
        inside = ", ".join(str(f) for f in self.gens) or "0"
        return f"Ideal({inside})"


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    return a.groebner == b.groebner


def ideal_contains(a: Ideal, b: Ideal) -> bool:
    """True when b is a subset of a."""
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    return a.contains_ideal(b)


def ideal_member(f: Polynomial, a: Ideal) -> bool:
    return a.contains(f)
