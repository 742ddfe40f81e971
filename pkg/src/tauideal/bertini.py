"""Bertini-type hyperplane checks for test ideals of principal pairs.

Two comparisons are made per hyperplane H = V(l):

* augmentation: tau(f^(1/p^e)) versus tau((l*f)^(1/p^e)) in the ambient
  ring.  The product ideal is always contained in tau(f), so inequality
  means strict shrinking.
* restriction: the image of tau(f^(1/p^e)) on H versus the test ideal
  computed intrinsically on H, after eliminating one variable with
  nonzero coefficient.

"General hyperplane" over a finite field is operationalized as explicit
nonvanishing conditions on the coefficients (c_0, ..., c_n): scans
filter by a mask over those positions and partition tallies by the
zero/nonzero pattern.  Hyperplanes are enumerated in normalized form
(first nonzero coefficient scaled to 1) since V(l) = V(c*l).

The two built-in families realize the failure construction

    f = sum over i of f_i^p * (x_1...x_{n-1})^(p-1) * x_n^i

whose slot components in the Frobenius basis are exactly the slices
f_i.  ``slice_independence`` checks the hypothesis that makes the
construction work: no f_i falls inside the ideal generated by the
earlier slices together with all x_j-multiples of the later ones.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .ff import FieldDescriptor, FieldElement, GF
from .frobenius import (
    DEFAULT_SLOT_BUDGET,
    PairSpec,
    ZeroPolynomialError,
    _linear_coefficients,
    decompose,
    product_pair_generators,
    test_ideal,
)
from .groebner import DEFAULT_DEGREE_GUARD, Ideal, normal_form
from .linalg import span_dimension
from .poly import Polynomial, PolynomialRing, polynomial_ring

DEFAULT_SCAN_BUDGET = 10**6
LINES_FAMILY_ATTEMPTS = 32


class DegenerateHyperplaneError(ValueError):
    """The coefficient vector does not define a hyperplane."""


class ScanBudgetExceeded(ValueError):
    def __init__(self, size: int, budget: int):
        super().__init__(
            f"enumerating {size} coefficient vectors exceeds the budget of "
            f"{budget}; use sample mode or raise the budget"
        )
        self.size = size
        self.budget = budget


class LinearForm:
    """An affine-linear form l = c_0 + c_1 x_1 + ... + c_n x_n.

    The gradient (c_1, ..., c_n) must be nonzero so that V(l) is a
    hyperplane, unless ``allow_degenerate`` is set (used for comparisons
    against constant forms such as l = 1).
    """

    __slots__ = ("ring", "codes")

    def __init__(
        self,
        ring: PolynomialRing,
        coefficients: Sequence[Union[int, str, FieldElement]],
        allow_degenerate: bool = False,
    ):
        field = ring.field
        codes = tuple(field.element(c).code for c in coefficients)
        if len(codes) != ring.nvars + 1:
            raise ValueError(
                f"need {ring.nvars + 1} coefficients (constant first), got {len(codes)}"
            )
        if not any(codes):
            raise DegenerateHyperplaneError("the zero form defines nothing")
        if not any(codes[1:]) and not allow_degenerate:
            raise DegenerateHyperplaneError(
                "constant form has no hyperplane; pass allow_degenerate to compare anyway"
            )
        self.ring = ring
        self.codes = codes

    @classmethod
    def from_polynomial(cls, l: Polynomial, allow_degenerate: bool = False) -> "LinearForm":
        const, grad = _linear_coefficients(l)
        return cls(l.ring, (const,) + grad, allow_degenerate=allow_degenerate)

    @property
    def constant(self) -> int:
        return self.codes[0]

    @property
    def gradient(self) -> Tuple[int, ...]:
        return self.codes[1:]

    @property
    def polynomial(self) -> Polynomial:
        ring = self.ring
        terms = []
        if self.codes[0]:
            terms.append(((0,) * ring.nvars, self.codes[0]))
        for i, c in enumerate(self.codes[1:]):
            if c:
                mono = [0] * ring.nvars
                mono[i] = 1
                terms.append((tuple(mono), c))
        return ring.from_terms(terms)

    def pattern(self) -> str:
        """Zero/nonzero signature over (c_0, ..., c_n): '1' = nonzero."""
        return "".join("1" if c else "0" for c in self.codes)

    def normalized(self) -> "LinearForm":
        """Scale so the first nonzero coefficient is 1 (canonical per V(l))."""
        field = self.ring.field
        lead = next(c for c in self.codes if c)
        if lead == 1:
            return self
        inv = field.inv(lead)
        return LinearForm(
            self.ring,
            tuple(field.from_code(field.mul(c, inv)) for c in self.codes),
            allow_degenerate=True,
        )

    def matches(self, mask: str) -> bool:
        for c, m in zip(self.codes, mask):
            if m == "1" and not c:
                return False
            if m == "0" and c:
                return False
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearForm)
            and self.ring == other.ring
            and self.codes == other.codes
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.codes))

    def __str__(self) -> str:
        return str(self.polynomial)

    def __repr__(self) -> str:
        return f"LinearForm({self})"


def resolve_filter_mask(mask: Optional[str], nvars: int) -> str:
    """Expand filter shortcuts to an explicit mask over (c_0, ..., c_n)."""
    width = nvars + 1
    if mask is None or mask == "none":
        return "*" * width
    if mask == "all-nonzero":
        return "1" * width
    if len(mask) != width or any(ch not in "01*" for ch in mask):
        raise ValueError(
            f"filter mask must be 'all-nonzero', 'none', or {width} characters over 0/1/*"
        )
    return mask


@dataclass
class AugmentationOutcome:
    equal: bool
    witness: Optional[Polynomial]
    containment_ok: bool
    product_ideal: Ideal


@dataclass
class RestrictionOutcome:
    equal: bool
    witness: Optional[Polynomial]
    witness_side: Optional[str]  # 'image' or 'intrinsic'
    eliminated: str
    chart_ring: PolynomialRing
    image_ideal: Ideal
    intrinsic_ideal: Ideal


def augmentation_test(pair: PairSpec, l: LinearForm) -> AugmentationOutcome:
    """Compare tau(f) with tau(l*f) at the pair's level.

    The witness, present exactly when the ideals differ, is the first
    canonical generator of tau(f) outside tau(l*f).
    """
    ring = pair.ring
    if l.ring != ring:
        raise ValueError("hyperplane lives in a different ring")
    if pair.e == 1:
        gens = product_pair_generators(pair.f, l.polynomial)
    else:
        gens = list(decompose(pair.f * l.polynomial, pair.e).values())
    product_ideal = Ideal(gens, ring=ring, degree_guard=pair.degree_guard)
    tau_gb = pair.ideal.groebner
    containment_ok = all(normal_form(g, tau_gb).is_zero() for g in gens)
    equal = product_ideal.groebner == tau_gb
    witness = None
    if not equal:
        for g in tau_gb:
            if not product_ideal.contains(g):
                witness = g
                break
    return AugmentationOutcome(equal, witness, containment_ok, product_ideal)


def _elimination_image(l: LinearForm, j: int) -> Polynomial:
    """The substitute for x_j on V(l): x_j = -c_j^{-1}(c_0 + sum_{k!=j} c_k x_k)."""
    ring = l.ring
    field = ring.field
    cj = l.codes[j + 1]
    scale = field.neg(field.inv(cj))
    terms = []
    if l.codes[0]:
        terms.append(((0,) * ring.nvars, field.mul(scale, l.codes[0])))
    for k, c in enumerate(l.gradient):
        if k == j or not c:
            continue
        mono = [0] * ring.nvars
        mono[k] = 1
        terms.append((tuple(mono), field.mul(scale, c)))
    return ring.from_terms(terms)


def restriction_test(
    pair: PairSpec,
    l: LinearForm,
    eliminate: Optional[Union[int, str]] = None,
) -> RestrictionOutcome:
    """Compare tau(f) restricted to V(l) against the intrinsic test ideal.

    Eliminates one variable with nonzero coefficient (by default the
    highest-index one), identifying V(l) with a polynomial ring in the
    remaining variables.  Raises ZeroPolynomialError when l divides f,
    since the pair does not restrict to V(l).
    """
    ring = pair.ring
    if l.ring != ring:
        raise ValueError("hyperplane lives in a different ring")
    if eliminate is None:
        j = max((k for k, c in enumerate(l.gradient) if c), default=None)
        if j is None:
            raise DegenerateHyperplaneError("constant form has no hyperplane to restrict to")
    else:
        j = eliminate if isinstance(eliminate, int) else ring.var_index(eliminate)
        if not 0 <= j < ring.nvars:
            raise ValueError(f"variable index {j} out of range")
        if not l.gradient[j]:
            raise ValueError(
                f"cannot eliminate {ring.names[j]}: its coefficient in l is zero"
            )
    if ring.nvars < 2:
        raise ValueError("restriction needs at least two variables")

    image = _elimination_image(l, j)
    chart_names = tuple(n for i, n in enumerate(ring.names) if i != j)
    chart_ring = polynomial_ring(ring.field, chart_names, ring.order)

    f_bar = pair.f.substitute({j: image}).map_ring(chart_ring)
    if f_bar.is_zero():
        raise ZeroPolynomialError(
            f"l divides f: the pair does not restrict to V({l})"
        )
    intrinsic = test_ideal(f_bar, pair.e, degree_guard=pair.degree_guard)

    image_gens = []
    for g in pair.ideal.groebner:
        gg = g.substitute({j: image}).map_ring(chart_ring)
        if not gg.is_zero():
            image_gens.append(gg)
    image_ideal = Ideal(image_gens, ring=chart_ring, degree_guard=pair.degree_guard)

    equal = image_ideal == intrinsic
    witness = None
    side = None
    if not equal:
        for g in image_ideal.groebner:
            if not intrinsic.contains(g):
                witness, side = g, "image"
                break
        if witness is None:
            for g in intrinsic.groebner:
                if not image_ideal.contains(g):
                    witness, side = g, "intrinsic"
                    break
    return RestrictionOutcome(
        equal, witness, side, ring.names[j], chart_ring, image_ideal, intrinsic
    )


def slice_independence(slices: Sequence[Polynomial]) -> Tuple[bool, Optional[int]]:
    """Check the independence hypothesis on the slice list (f_0, ..., f_{p-1}).

    For each i the check requires

        f_i not in <f_0, ..., f_{i-1}> + <x_j * f_k : k >= i, j < n>

    where x_j ranges over all variables except the last.  Returns
    (True, None) when every index passes, else (False, first bad index).
    """
    slices = list(slices)
    if not slices:
        raise ValueError("empty slice list")
    ring = slices[0].ring
    p = ring.field.p
    if len(slices) != p:
        raise ValueError(f"need exactly p = {p} slices, got {len(slices)}")
    last = ring.nvars - 1
    for s in slices:
        if s.ring != ring:
            raise ValueError("slices live in different rings")
        if s.degree_in(last) > 0:
            raise ValueError(f"slice {s} involves the last variable {ring.names[last]}")
    xs = ring.gens[:last]
    for i in range(p):
        gens = list(slices[:i])
        for k in range(i, p):
            for xj in xs:
                gens.append(xj * slices[k])
        gens = [g for g in gens if not g.is_zero()]
        if Ideal(gens, ring=ring).contains(slices[i]):
            return False, i
    return True, None


@dataclass
class FamilyInstance:
    """A constructed counterexample pair plus its building data."""

    pair: PairSpec
    slices: List[Polynomial]
    lines: Optional[List[Polynomial]] = None


def _assemble_family(slices: Sequence[Polynomial]) -> Polynomial:
    """f = sum f_i^p * (x_1...x_{n-1})^(p-1) * x_n^i."""
    ring = slices[0].ring
    p = ring.field.p
    n = ring.nvars
    block = [p - 1] * (n - 1) + [0]
    f = ring.zero
    for i, s in enumerate(slices):
        mono = list(block)
        mono[n - 1] = i
        f = f + s.frobenius_power(1).shift(mono)
    return f


def dim4_family(field: Union[FieldDescriptor, int]) -> FamilyInstance:
    """The four-variable counterexample family over the given field.

    Slices are f_i = y^(i+1) z^(p-1-i) for i < p-1 and f_{p-1} = x, so

        f = (xyz)^(p-1) * (f_0^p + f_1^p w + ... + x^p w^(p-1))

    and the test ideal comes out <x, y z^(p-1), ..., y^(p-1) z>.
    """
    if isinstance(field, int):
        field = GF(field)
    p = field.p
    ring = polynomial_ring(field, ("x", "y", "z", "w"))
    x, y, z, w = ring.gens
    slices = []
    for i in range(p - 1):
        slices.append(y ** (i + 1) * z ** (p - 1 - i))
    slices.append(x)
    f = _assemble_family(slices)
    ok, bad = slice_independence(slices)
    if not ok:  # pragma: no cover - construction guarantees independence
        raise AssertionError(f"dim-4 family slices failed independence at index {bad}")
    return FamilyInstance(PairSpec(f, 1), slices)


def _sample_direction(rng: random.Random, field: FieldDescriptor, nvars: int) -> Tuple[int, ...]:
    """A nonzero coefficient vector, normalized so its first nonzero entry is 1."""
    q = field.q
    while True:
        codes = tuple(rng.randrange(q) for _ in range(nvars))
        if any(codes):
            break
    lead = next(c for c in codes if c)
    if lead != 1:
        inv = field.inv(lead)
        codes = tuple(field.mul(c, inv) for c in codes)
    return codes


def lines_family(
    field: Union[FieldDescriptor, int],
    n: int = 3,
    seed: int = 0,
    attempts: int = LINES_FAMILY_ATTEMPTS,
) -> FamilyInstance:
    """Counterexample from p distinct lines through the origin in n-1 variables.

    Draws p pairwise non-proportional linear forms l_0, ..., l_{p-1} in
    x_1..x_{n-1}, sets f_i to the product of all but the i-th, and
    assembles f as in the family construction.  Redraws (up to
    ``attempts`` times) until the slices pass ``slice_independence``.
    """
    if isinstance(field, int):
        field = GF(field)
    if n < 3:
        raise ValueError("the lines family needs n >= 3")
    p, q = field.p, field.q
    directions = (q ** (n - 1) - 1) // (q - 1)
    if directions < p:
        raise ValueError(
            f"field of order {q} admits only {directions} line directions in "
            f"{n - 1} variables; need at least p = {p}"
        )
    names = tuple(f"x{i + 1}" for i in range(n))
    ring = polynomial_ring(field, names)
    rng = random.Random(seed)
    last_bad: Optional[int] = None
    for _ in range(attempts):
        seen = []
        while len(seen) < p:
            d = _sample_direction(rng, field, n - 1)
            if d not in seen:
                seen.append(d)
        lines = [
            ring.from_terms(
                (tuple(1 if k == i else 0 for k in range(n)), c)
                for i, c in enumerate(d)
                if c
            )
            for d in seen
        ]
        slices = []
        for i in range(p):
            s = ring.one
            for jj, line in enumerate(lines):
                if jj != i:
                    s = s * line
            slices.append(s)
        ok, bad = slice_independence(slices)
        if ok:
            f = _assemble_family(slices)
            return FamilyInstance(PairSpec(f, 1), slices, lines)
        last_bad = bad
    raise RuntimeError(
        f"no independent slice list after {attempts} attempts over order-{q} field "
        f"(last violation at index {last_bad}); try another seed or a larger field"
    )


@dataclass
class HomogeneousDetection:
    applicable: bool
    reason: str
    common_degree: Optional[int] = None
    span_dim: Optional[int] = None

    @property
    def prediction(self) -> Optional[str]:
        if not self.applicable:
            return None
        return "restriction fails for every hyperplane whose last coefficient is nonzero"


def homogeneous_detect(pair: PairSpec) -> HomogeneousDetection:
    """Check the homogeneous-slice criterion that forces restriction failure.

    Applicable when the decomposition is supported on slots
    (p-1, ..., p-1, i) with slices free of the last variable, all
    homogeneous of one degree, spanning at least a 2-dimensional space.
    In that case the degree-d part of the restricted ideal is at most
    1-dimensional while the image of tau(f) keeps the full span, so the
    two ideals differ for every hyperplane with nonzero last coefficient.
    """
    if pair.e != 1:
        raise ValueError("homogeneous detection applies to level e = 1 only")
    ring = pair.ring
    p = ring.field.p
    n = ring.nvars
    top = (p - 1,) * (n - 1)
    slices: Dict[int, Polynomial] = {}
    for alpha, s in pair.components.items():
        if alpha[: n - 1] != top:
            return HomogeneousDetection(
                False, "decomposition not supported on the top block of slots"
            )
        if s.degree_in(n - 1) > 0:
            return HomogeneousDetection(
                False, f"slice at slot {alpha} involves {ring.names[n - 1]}"
            )
        slices[alpha[n - 1]] = s
    nonzero = [s for s in slices.values() if not s.is_zero()]
    if not nonzero:
        return HomogeneousDetection(False, "no nonzero slices")
    degrees = set()
    for s in nonzero:
        if not s.is_homogeneous():
            return HomogeneousDetection(False, f"slice {s} is not homogeneous")
        degrees.add(s.total_degree())
    if len(degrees) > 1:
        return HomogeneousDetection(
            False, f"slices have mixed degrees {sorted(degrees)}"
        )
    d = degrees.pop()
    dim = span_dimension(nonzero)
    if dim < 2:
        return HomogeneousDetection(
            False, "slices span less than 2 dimensions", common_degree=d, span_dim=dim
        )
    return HomogeneousDetection(True, "criterion satisfied", common_degree=d, span_dim=dim)


@dataclass
class BertiniVerdict:
    hyperplane: LinearForm
    augmentation_equal: bool
    augmentation_witness: Optional[Polynomial]
    restriction_equal: Optional[bool]  # None when degenerate
    restriction_witness: Optional[Polynomial]
    restriction_witness_side: Optional[str]
    eliminated: Optional[str]
    degenerate: bool

    @property
    def pattern(self) -> str:
        return self.hyperplane.pattern()

    @property
    def failed(self) -> bool:
        return (not self.augmentation_equal) or self.restriction_equal is False


@dataclass
class Tally:
    tested: int = 0
    both_equal: int = 0
    augmentation_fail_only: int = 0
    restriction_fail_only: int = 0
    both_fail: int = 0
    degenerate: int = 0

    def record(self, v: BertiniVerdict) -> None:
        self.tested += 1
        if v.degenerate:
            self.degenerate += 1
        elif v.augmentation_equal and v.restriction_equal:
            self.both_equal += 1
        elif not v.augmentation_equal and not v.restriction_equal:
            self.both_fail += 1
        elif not v.augmentation_equal:
            self.augmentation_fail_only += 1
        else:
            self.restriction_fail_only += 1

    def consistent(self) -> bool:
        return self.tested == (
            self.both_equal
            + self.augmentation_fail_only
            + self.restriction_fail_only
            + self.both_fail
            + self.degenerate
        )


@dataclass
class ScanReport:
    pair: PairSpec
    mode: str
    seed: int
    coefficient_filter: str
    budget: int
    requested: Optional[int]
    tally: Tally
    by_pattern: Dict[str, Tally]
    verdicts: List[BertiniVerdict]

    @property
    def total(self) -> int:
        return self.tally.tested

    @property
    def failures(self) -> List[BertiniVerdict]:
        return [v for v in self.verdicts if v.failed]


def evaluate_hyperplane(pair: PairSpec, l: LinearForm) -> BertiniVerdict:
    """Run both tests against one hyperplane; degenerate when l divides f."""
    aug = augmentation_test(pair, l)
    try:
        res = restriction_test(pair, l)
        return BertiniVerdict(
            hyperplane=l,
            augmentation_equal=aug.equal,
            augmentation_witness=aug.witness,
            restriction_equal=res.equal,
            restriction_witness=res.witness,
            restriction_witness_side=res.witness_side,
            eliminated=res.eliminated,
            degenerate=False,
        )
    except ZeroPolynomialError:
        return BertiniVerdict(
            hyperplane=l,
            augmentation_equal=aug.equal,
            augmentation_witness=aug.witness,
            restriction_equal=None,
            restriction_witness=None,
            restriction_witness_side=None,
            eliminated=None,
            degenerate=True,
        )


_WORKER_PAIRS: dict = {}


def _scan_chunk(args) -> List[BertiniVerdict]:
    f, e, degree_guard, codes_chunk = args
    key = (f, e, degree_guard)
    pair = _WORKER_PAIRS.get(key)
    if pair is None:
        pair = PairSpec(f, e, degree_guard=degree_guard)
        _WORKER_PAIRS[key] = pair
    ring = f.ring
    out = []
    for codes in codes_chunk:
        l = LinearForm(ring, [ring.field.from_code(c) for c in codes])
        out.append(evaluate_hyperplane(pair, l))
    return out


def _enumerate_coefficients(field: FieldDescriptor, nvars: int, mask: str):
    """Normalized coefficient tuples (first nonzero entry 1), mask-filtered."""
    q = field.q
    width = nvars + 1

    def rec(prefix: Tuple[int, ...], normalized: bool):
        pos = len(prefix)
        if pos == width:
            if any(prefix[1:]):
                yield prefix
            return
        m = mask[pos]
        if not normalized:
            # Entries before the first nonzero one are 0; the first
            # nonzero entry is scaled to 1.
            if m != "1":
                yield from rec(prefix + (0,), False)
            if m != "0":
                yield from rec(prefix + (1,), True)
        else:
            choices = range(q)
            if m == "0":
                choices = (0,)
            elif m == "1":
                choices = range(1, q)
            for c in choices:
                yield from rec(prefix + (c,), True)

    yield from rec((), False)


def hyperplane_scan(
    pair: PairSpec,
    mode: str = "enumerate",
    count: Optional[int] = None,
    seed: int = 0,
    coefficient_filter: Optional[str] = None,
    budget: int = DEFAULT_SCAN_BUDGET,
    jobs: int = 1,
) -> ScanReport:
    """Test every (or a sampled set of) hyperplane against the pair.

    Enumerate mode walks all normalized coefficient vectors matching the
    filter mask; sample mode draws ``count`` vectors from the seeded
    generator.  Identical arguments produce identical reports, also
    with jobs > 1 (work is only distributed, never reordered).
    """
    ring = pair.ring
    field = ring.field
    mask = resolve_filter_mask(coefficient_filter, ring.nvars)

    if mode == "enumerate":
        size = field.q ** (ring.nvars + 1)
        if size > budget:
            raise ScanBudgetExceeded(size, budget)
        coeff_list = list(_enumerate_coefficients(field, ring.nvars, mask))
    elif mode == "sample":
        if not count or count < 1:
            raise ValueError("sample mode needs a positive count")
        rng = random.Random(seed)
        coeff_list = []
        q = field.q
        while len(coeff_list) < count:
            codes = tuple(rng.randrange(q) for _ in range(ring.nvars + 1))
            if not any(codes[1:]):
                continue
            l = LinearForm(ring, [field.from_code(c) for c in codes]).normalized()
            if not l.matches(mask):
                continue
            coeff_list.append(l.codes)
    else:
        raise ValueError(f"unknown scan mode {mode!r}")

    if jobs > 1 and len(coeff_list) > 1:
        chunk_size = max(8, len(coeff_list) // (jobs * 8) + 1)
        chunks = [
            coeff_list[i : i + chunk_size]
            for i in range(0, len(coeff_list), chunk_size)
        ]
        tasks = [(pair.f, pair.e, pair.degree_guard, chunk) for chunk in chunks]
        verdicts: List[BertiniVerdict] = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(_scan_chunk, tasks):
                verdicts.extend(result)
    else:
        verdicts = _scan_chunk((pair.f, pair.e, pair.degree_guard, coeff_list))

    tally = Tally()
    by_pattern: Dict[str, Tally] = {}
    for v in verdicts:
        tally.record(v)
        by_pattern.setdefault(v.pattern, Tally()).record(v)
    return ScanReport(
        pair=pair,
        mode=mode,
        seed=seed,
        coefficient_filter=mask,
        budget=budget,
        requested=count if mode == "sample" else None,
        tally=tally,
        by_pattern=dict(sorted(by_pattern.items())),
        verdicts=verdicts,
    )


def dim2_probe(
    f: Polynomial,
    e: int = 1,
    degree_guard: int = DEFAULT_DEGREE_GUARD,
    **scan_kwargs,
) -> ScanReport:
    """Scan lines against a two-variable pair.

    For pairs with mild singularities the expectation is that failures
    are confined to lines through the singular locus; lines with nonzero
    constant term should report both tests equal.
    """
    if f.ring.nvars != 2:
        raise ValueError("dim2 probe needs a polynomial in exactly two variables")
    pair = PairSpec(f, e, degree_guard=degree_guard)
    return hyperplane_scan(pair, **scan_kwargs)
