"""Linear-algebra oracle for ideal membership, independent of Buchberger.

``macaulay_membership`` decides whether f = sum h_i g_i is solvable with
every product h_i g_i of total degree at most a bound D, by building the
Macaulay matrix of all shifts m*g_i (deg m*g_i <= D) and testing whether
f lies in its row span.  A positive answer is always a genuine
membership certificate; a negative answer only rules out representations
within the bound.  Products are assembled by raw exponent shifts so the
oracle shares no reduction machinery with the Groebner engine.

Arithmetic over GF(p^r) is lowered to GF(p): each row is added in r
copies scaled by powers of the field generator, and every coefficient
is expanded into its r prime-field coordinates, turning F_q-span
questions into F_p-span questions of r times the size.  Row reduction
mod p runs vectorized in numpy.
"""

from __future__ import annotations

from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .poly import Monomial, Polynomial


def monomials_up_to(nvars: int, degree: int) -> Iterator[Monomial]:
    """All exponent tuples with total degree <= degree, deterministic order."""
    if nvars == 1:
        for d in range(degree + 1):
            yield (d,)
        return
    for first in range(degree + 1):
        for rest in monomials_up_to(nvars - 1, degree - first):
            yield (first,) + rest


def _echelon(A: np.ndarray, p: int) -> List[Tuple[int, int]]:
    """In-place row echelon of A mod p; returns [(pivot_col, pivot_row)]."""
    rows, cols = A.shape
    pivots: List[Tuple[int, int]] = []
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(A[rank:, col])[0]
        if nz.size == 0:
            continue
        pr = rank + int(nz[0])
        if pr != rank:
            A[[rank, pr]] = A[[pr, rank]]
        lead = int(A[rank, col])
        if lead != 1:
            A[rank] = (A[rank] * pow(lead, -1, p)) % p
        below = A[rank + 1 :, col]
        mask = below != 0
        if mask.any():
            A[rank + 1 :][mask] = (
                A[rank + 1 :][mask] - np.outer(below[mask], A[rank])
            ) % p
        pivots.append((col, rank))
        rank += 1
    return pivots


def _reduce_vector(b: np.ndarray, A: np.ndarray, pivots: Sequence[Tuple[int, int]], p: int) -> np.ndarray:
    for col, row in pivots:
        c = int(b[col])
        if c:
            b = (b - c * A[row]) % p
    return b


def _expand_rows(
    polys: Sequence[dict],
    field,
    col_index: dict,
) -> np.ndarray:
    """Encode F_q term maps as F_p row vectors (r-fold blocking)."""
    p, r = field.p, field.r
    ncols = len(col_index) * r
    scalars = [field.power(field.p if r > 1 else 1, j) if r > 1 else 1 for j in range(r)]
    rows = np.zeros((len(polys) * r, ncols), dtype=np.int16)
    for i, terms in enumerate(polys):
        for j in range(r):
            out = rows[i * r + j]
            s = scalars[j]
            for mono, code in terms.items():
                scaled = field.mul(code, s) if r > 1 else code
                base = col_index[mono] * r
                for t, digit in enumerate(field.decode(scaled)):
                    out[base + t] = digit
    return rows


def macaulay_membership(
    f: Polynomial,
    gens: Sequence[Polynomial],
    degree: Optional[int] = None,
) -> bool:
    """Does f have a representation sum h_i g_i with deg(h_i g_i) <= degree?

    The default bound is deg(f) + max(deg(g_i)).  "True" certifies
    membership; "False" only certifies the absence of a representation
    within the bound.
    """
    gens = [g for g in gens if not g.is_zero()]
    if f.is_zero():
        return True
    if not gens:
        return False
    ring = f.ring
    for gpoly in gens:
        if gpoly.ring != ring:
            raise ValueError("generators live in a different ring")
    if degree is None:
        degree = f.total_degree() + max(g.total_degree() for g in gens)
    if f.total_degree() > degree:
        return False

    field = ring.field
    products: List[dict] = []
    for gpoly in gens:
        gdeg = gpoly.total_degree()
        room = degree - gdeg
        if room < 0:
            continue
        for shift in monomials_up_to(ring.nvars, room):
            shifted = {
                tuple(a + b for a, b in zip(mono, shift)): code
                for mono, code in gpoly.terms.items()
            }
            products.append(shifted)
    if not products:
        return False

    col_index = {m: i for i, m in enumerate(monomials_up_to(ring.nvars, degree))}
    A = _expand_rows(products, field, col_index)
    b = _expand_rows([dict(f.terms)], field, col_index)[: 1][0].astype(np.int16)
    # Only the unscaled copy of f is the target; the blocking of the
    # expansion above would also emit g-scaled copies of it.
    pivots = _echelon(A, field.p)
    residual = _reduce_vector(b, A, pivots, field.p)
    return not residual.any()


def span_dimension(polys: Sequence[Polynomial]) -> int:
    """Dimension over F_q of the linear span of the given polynomials."""
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        return 0
    ring = polys[0].ring
    field = ring.field
    support = sorted({m for f in polys for m in f.terms})
    col_index = {m: i for i, m in enumerate(support)}
    A = _expand_rows([dict(f.terms) for f in polys], field, col_index)
    rank_p = len(_echelon(A, field.p))
    if rank_p % field.r:
        raise AssertionError("blocked rank not divisible by extension degree")
    return rank_p // field.r
