"""Handlers mapping request models to response models.

This is the single implementation behind both the HTTP service and the
CLI: each handler is a pure function from a request model to a response
model, raising ``ServiceError`` for anything wrong with the input.
"""

from __future__ import annotations

import os
from typing import Optional

from . import bertini
from .bertini import (
    DEFAULT_SCAN_BUDGET,
    LinearForm,
    ScanBudgetExceeded,
    ScanReport,
    dim4_family,
    lines_family,
)
from .ff import GF, parse_g_polynomial, format_g_polynomial
from .frobenius import (
    PairSpec,
    SlotBudgetExceeded,
    ZeroPolynomialError,
    projective_chart_test_ideal,
)
from .groebner import DegreeGuardExceeded
from .models import (
    AugmentRequest,
    AugmentResponse,
    CexRequest,
    CexResponse,
    ChartRequest,
    ChartResponse,
    ComputeRequest,
    ComputeResponse,
    DetectionModel,
    Dim2Request,
    FieldInfo,
    RestrictRequest,
    RestrictResponse,
    RingRequest,
    ScanRequest,
    ScanResponse,
    ScanSettings,
    TallyModel,
    VerdictModel,
)
from .poly import ParseError, PolynomialRing, polynomial_ring

BUDGET_ENV_VAR = "TAUIDEAL_BUDGET"


class ServiceError(ValueError):
    """Invalid input or configuration; maps to CLI exit 2 / HTTP 422."""


def resolve_budget(explicit: Optional[int]) -> int:
    if explicit is not None:
        if explicit < 1:
            raise ServiceError("budget must be positive")
        return explicit
    env = os.environ.get(BUDGET_ENV_VAR)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ServiceError(
                f"{BUDGET_ENV_VAR} must be an integer, got {env!r}"
            ) from None
        if value < 1:
            raise ServiceError(f"{BUDGET_ENV_VAR} must be positive, got {value}")
        return value
    return DEFAULT_SCAN_BUDGET


def _build_field(char: int, ext_degree: int, modulus: Optional[str]):
    try:
        coeffs = None
        if modulus is not None:
            coeffs = parse_g_polynomial(modulus, char)
        return GF(char, ext_degree, coeffs)
    except (ValueError, ZeroDivisionError) as exc:
        raise ServiceError(f"bad field: {exc}") from None


def _build_ring(req: RingRequest) -> PolynomialRing:
    field = _build_field(req.char, req.ext_degree, req.modulus)
    try:
        return polynomial_ring(field, tuple(req.vars), req.order)
    except ValueError as exc:
        raise ServiceError(f"bad ring: {exc}") from None


def _parse_poly(ring: PolynomialRing, text: str, what: str = "polynomial"):
    try:
        return ring.parse(text)
    except ParseError as exc:
        raise ServiceError(f"bad {what}: {exc}") from None


def _parse_line(ring: PolynomialRing, text: str, allow_degenerate: bool) -> LinearForm:
    poly = _parse_poly(ring, text, what="line")
    try:
        return LinearForm.from_polynomial(poly, allow_degenerate=allow_degenerate)
    except ValueError as exc:
        raise ServiceError(f"bad line: {exc}") from None


def _field_info(field) -> FieldInfo:
    return FieldInfo(
        char=field.p,
        ext_degree=field.r,
        order=field.q,
        modulus=format_g_polynomial(field.modulus) if field.r > 1 else None,
    )


def _make_pair(f, e: int, degree_guard: int, budget: int) -> PairSpec:
    try:
        return PairSpec(f, e, degree_guard=degree_guard, budget=budget)
    except (ZeroPolynomialError, SlotBudgetExceeded, ValueError) as exc:
        raise ServiceError(str(exc)) from None


def compute(req: ComputeRequest) -> ComputeResponse:
    ring = _build_ring(req)
    f = _parse_poly(ring, req.poly)
    budget = resolve_budget(req.budget)
    pair = _make_pair(f, req.e, req.degree_guard, budget)
    try:
        gens = pair.canonical_generators()
    except DegreeGuardExceeded as exc:
        raise ServiceError(str(exc)) from None
    return ComputeResponse(
        field=_field_info(ring.field),
        vars=list(ring.names),
        term_order=ring.order,
        poly=str(f),
        e=req.e,
        generators=[str(g) for g in gens],
    )


def augment(req: AugmentRequest) -> AugmentResponse:
    ring = _build_ring(req)
    f = _parse_poly(ring, req.poly)
    line = _parse_line(ring, req.line, allow_degenerate=True)
    budget = resolve_budget(req.budget)
    pair = _make_pair(f, req.e, req.degree_guard, budget)
    try:
        outcome = bertini.augmentation_test(pair, line)
    except DegreeGuardExceeded as exc:
        raise ServiceError(str(exc)) from None
    return AugmentResponse(
        field=_field_info(ring.field),
        vars=list(ring.names),
        poly=str(f),
        e=req.e,
        line=str(line),
        equal=outcome.equal,
        containment_ok=outcome.containment_ok,
        witness=str(outcome.witness) if outcome.witness is not None else None,
        tau_generators=[str(g) for g in pair.canonical_generators()],
        product_generators=[str(g) for g in outcome.product_ideal.groebner],
    )


def restrict(req: RestrictRequest) -> RestrictResponse:
    ring = _build_ring(req)
    f = _parse_poly(ring, req.poly)
    line = _parse_line(ring, req.line, allow_degenerate=False)
    budget = resolve_budget(req.budget)
    pair = _make_pair(f, req.e, req.degree_guard, budget)
    try:
        outcome = bertini.restriction_test(pair, line, eliminate=req.eliminate)
    except (DegreeGuardExceeded, ZeroPolynomialError, ValueError) as exc:
        raise ServiceError(str(exc)) from None
    return RestrictResponse(
        field=_field_info(ring.field),
        vars=list(ring.names),
        poly=str(f),
        e=req.e,
        line=str(line),
        eliminated=outcome.eliminated,
        chart_vars=list(outcome.chart_ring.names),
        equal=outcome.equal,
        witness=str(outcome.witness) if outcome.witness is not None else None,
        witness_side=outcome.witness_side,
        image_generators=[str(g) for g in outcome.image_ideal.groebner],
        intrinsic_generators=[str(g) for g in outcome.intrinsic_ideal.groebner],
    )


def _verdict_model(v: bertini.BertiniVerdict) -> VerdictModel:
    return VerdictModel(
        hyperplane=str(v.hyperplane),
        pattern=v.pattern,
        augmentation_equal=v.augmentation_equal,
        augmentation_witness=(
            str(v.augmentation_witness) if v.augmentation_witness is not None else None
        ),
        restriction_equal=v.restriction_equal,
        restriction_witness=(
            str(v.restriction_witness) if v.restriction_witness is not None else None
        ),
        restriction_witness_side=v.restriction_witness_side,
        eliminated=v.eliminated,
        degenerate=v.degenerate,
    )


def _tally_model(t: bertini.Tally) -> TallyModel:
    return TallyModel(
        tested=t.tested,
        both_equal=t.both_equal,
        augmentation_fail_only=t.augmentation_fail_only,
        restriction_fail_only=t.restriction_fail_only,
        both_fail=t.both_fail,
        degenerate=t.degenerate,
    )


def _scan_response(report: ScanReport, include_rows: bool) -> ScanResponse:
    ring = report.pair.ring
    return ScanResponse(
        field=_field_info(ring.field),
        vars=list(ring.names),
        poly=str(report.pair.f),
        e=report.pair.e,
        mode=report.mode,
        seed=report.seed,
        filter=report.coefficient_filter,
        budget=report.budget,
        requested=report.requested,
        total=report.total,
        tally=_tally_model(report.tally),
        by_pattern={k: _tally_model(t) for k, t in report.by_pattern.items()},
        failures=[_verdict_model(v) for v in report.failures],
        rows=[_verdict_model(v) for v in report.verdicts] if include_rows else None,
    )


def _run_scan(pair: PairSpec, settings: ScanSettings, budget: int) -> ScanResponse:
    try:
        report = bertini.hyperplane_scan(
            pair,
            mode=settings.mode,
            count=settings.samples,
            seed=settings.seed,
            coefficient_filter=settings.filter,
            budget=budget,
            jobs=settings.jobs,
        )
    except (ScanBudgetExceeded, DegreeGuardExceeded, ValueError) as exc:
        raise ServiceError(str(exc)) from None
    return _scan_response(report, settings.include_rows)


def scan(req: ScanRequest) -> ScanResponse:
    ring = _build_ring(req)
    f = _parse_poly(ring, req.poly)
    budget = resolve_budget(req.budget)
    pair = _make_pair(f, req.e, req.degree_guard, budget)
    return _run_scan(pair, req, budget)


def dim2(req: Dim2Request) -> ScanResponse:
    ring = _build_ring(req)
    if ring.nvars != 2:
        raise ServiceError("dim2 needs a ring with exactly two variables")
    return scan(req)


def cex(req: CexRequest) -> CexResponse:
    field = _build_field(req.char, req.ext_degree, req.modulus)
    budget = resolve_budget(req.budget)
    try:
        if req.family == "dim4":
            fam = dim4_family(field)
        else:
            fam = lines_family(field, n=req.n, seed=req.seed)
    except (ValueError, RuntimeError) as exc:
        raise ServiceError(str(exc)) from None
    pair = fam.pair
    independence_ok, _ = bertini.slice_independence(fam.slices)
    det = bertini.homogeneous_detect(pair)
    scan_resp = None
    if req.scan is not None:
        scan_resp = _run_scan(pair, req.scan, budget)
    return CexResponse(
        family=req.family,
        field=_field_info(field),
        vars=list(pair.ring.names),
        poly=str(pair.f),
        e=pair.e,
        slices=[str(s) for s in fam.slices],
        lines=[str(l) for l in fam.lines] if fam.lines is not None else None,
        tau_generators=[str(g) for g in pair.canonical_generators()],
        independence_ok=independence_ok,
        detection=DetectionModel(
            applicable=det.applicable,
            reason=det.reason,
            common_degree=det.common_degree,
            span_dim=det.span_dim,
            prediction=det.prediction,
        ),
        scan=scan_resp,
    )


def chart(req: ChartRequest) -> ChartResponse:
    ring = _build_ring(req)
    big_f = _parse_poly(ring, req.poly)
    try:
        idx = ring.var_index(req.chart)
    except ValueError as exc:
        raise ServiceError(str(exc)) from None
    try:
        ideal = projective_chart_test_ideal(big_f, idx, req.e, degree_guard=req.degree_guard)
    except (ZeroPolynomialError, DegreeGuardExceeded, ValueError) as exc:
        raise ServiceError(str(exc)) from None
    return ChartResponse(
        field=_field_info(ring.field),
        vars=list(ring.names),
        poly=str(big_f),
        chart=req.chart,
        e=req.e,
        chart_vars=[n for n in ring.names if n != req.chart],
        generators=[str(g) for g in ideal.groebner],
    )
