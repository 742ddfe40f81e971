"""Shared helpers for the test suite."""

import random
from typing import Sequence

from tauideal import GF, polynomial_ring

VAR_POOL: Sequence[str] = ("x", "y", "z", "w")


def ring_for(p: int, r: int = 1, nvars: int = 2, order: str = "grevlex"):
    return polynomial_ring(GF(p, r), VAR_POOL[:nvars], order)


def random_poly(ring, rng: random.Random, max_terms: int = 4, max_exp: int = 4):
    """Random nonzero polynomial with uniformly chosen terms."""
    q = ring.field.q
    while True:
        terms = []
        for _ in range(rng.randint(1, max_terms)):
            mono = tuple(rng.randrange(max_exp + 1) for _ in range(ring.nvars))
            terms.append((mono, rng.randrange(q)))
        f = ring.from_terms(terms)
        if not f.is_zero():
            return f


def random_linear(ring, rng: random.Random, constant_ok: bool = True):
    """Random nonzero affine-linear polynomial c0 + sum c_j x_j."""
    q = ring.field.q
    while True:
        codes = [rng.randrange(q) for _ in range(ring.nvars + 1)]
        if not constant_ok and not any(codes[1:]):
            continue
        if not any(codes):
            continue
        terms = [((0,) * ring.nvars, codes[0])]
        for j in range(ring.nvars):
            mono = [0] * ring.nvars
            mono[j] = 1
            terms.append((tuple(mono), codes[j + 1]))
        return ring.from_terms(terms)
