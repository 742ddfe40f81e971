"""Command-line interface.

Each subcommand builds a request model, runs the matching service
handler (in process by default, or against a running server via
``--server``), and prints the response as canonical JSON or a plain
text summary.  Exit codes: 0 success; 1 when ``--expect-equal`` is set
and a verdict came back unequal; 2 for input or configuration errors.
"""

from __future__ import annotations

import argparse
import csv
import sys
from typing import List, Optional

from . import __version__, service
from .models import (
    AugmentRequest,
    AugmentResponse,
    CexRequest,
    CexResponse,
    ChartRequest,
    ChartResponse,
    ComputeRequest,
    ComputeResponse,
    Dim2Request,
    RestrictRequest,
    RestrictResponse,
    ScanRequest,
    ScanResponse,
    ScanSettings,
    VerdictModel,
    to_json,
)
from .service import ServiceError

_CSV_COLUMNS = [
    "hyperplane",
    "pattern",
    "augmentation_equal",
    "augmentation_witness",
    "restriction_equal",
    "restriction_witness",
    "restriction_witness_side",
    "eliminated",
    "degenerate",
]


def _add_ring_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--char", type=int, required=True, help="prime characteristic p")
    p.add_argument("--ext-degree", type=int, default=1, help="extension degree r of F_{p^r}")
    p.add_argument("--modulus", help="defining polynomial in g for the extension")
    p.add_argument("--vars", required=True, help="comma-separated variable names")
    p.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")


def _add_pair_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--poly", required=True, help="polynomial text")
    p.add_argument("--e", type=int, default=1, help="Frobenius level")
    p.add_argument("--degree-guard", type=int, default=512)
    p.add_argument("--budget", type=int, help="enumeration budget (default from TAUIDEAL_BUDGET)")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--server", help="base URL of a running service (default: in process)")


def _add_scan_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", choices=("enumerate", "sample"), default="enumerate")
    p.add_argument("--samples", type=int, help="sample count (sample mode)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--filter", help="coefficient mask: all-nonzero, none, or string over 0/1/*")
    p.add_argument("--jobs", type=int, default=1, help="parallel scan workers")
    p.add_argument("--csv", help="write one CSV row per tested hyperplane to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tauideal",
        description="Test ideals of principal pairs over finite fields, "
        "with Bertini-type hyperplane checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="test ideal of (A^n, f^(1/p^e))")
    _add_ring_args(p)
    _add_pair_args(p)
    _add_output_args(p)

    p = sub.add_parser("augment", help="compare tau(f) with tau(l*f)")
    _add_ring_args(p)
    _add_pair_args(p)
    p.add_argument("--line", required=True, help="affine-linear form l")
    p.add_argument("--expect-equal", action="store_true")
    _add_output_args(p)

    p = sub.add_parser("restrict", help="compare tau(f) on V(l) with the intrinsic test ideal")
    _add_ring_args(p)
    _add_pair_args(p)
    p.add_argument("--line", required=True, help="affine-linear form l")
    p.add_argument("--eliminate", help="variable to eliminate (default: last with c != 0)")
    p.add_argument("--expect-equal", action="store_true")
    _add_output_args(p)

    p = sub.add_parser("scan", help="run both tests against many hyperplanes")
    _add_ring_args(p)
    _add_pair_args(p)
    _add_scan_args(p)
    p.add_argument("--expect-equal", action="store_true")
    _add_output_args(p)

    p = sub.add_parser("cex", help="build a counterexample family, optionally scan it")
    p.add_argument("--family", choices=("dim4", "lines"), required=True)
    p.add_argument("--char", type=int, required=True)
    p.add_argument("--ext-degree", type=int, default=1)
    p.add_argument("--modulus")
    p.add_argument("--n", type=int, default=3, help="ambient dimension for the lines family")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degree-guard", type=int, default=512)
    p.add_argument("--budget", type=int)
    p.add_argument("--scan", choices=("enumerate", "sample"), help="also scan hyperplanes")
    p.add_argument("--samples", type=int)
    p.add_argument("--filter", help="coefficient mask for the scan")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", help="CSV path for scan rows")
    p.add_argument("--expect-equal", action="store_true")
    _add_output_args(p)

    p = sub.add_parser("chart", help="test ideal of a homogeneous form on one affine chart")
    _add_ring_args(p)
    p.add_argument("--poly", required=True, help="homogeneous polynomial text")
    p.add_argument("--chart", required=True, help="chart variable set to 1")
    p.add_argument("--e", type=int, default=1)
    p.add_argument("--degree-guard", type=int, default=512)
    p.add_argument("--budget", type=int)
    _add_output_args(p)

    p = sub.add_parser("dim2", help="scan lines against a two-variable pair")
    _add_ring_args(p)
    _add_pair_args(p)
    _add_scan_args(p)
    p.add_argument("--expect-equal", action="store_true")
    _add_output_args(p)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _vars_list(text: str) -> List[str]:
    return [v.strip() for v in text.split(",") if v.strip()]


_ENDPOINTS = {
    "compute": ("compute", ComputeResponse),
    "augment": ("augment", AugmentResponse),
    "restrict": ("restrict", RestrictResponse),
    "scan": ("scan", ScanResponse),
    "cex": ("cex", CexResponse),
    "chart": ("chart", ChartResponse),
    "dim2": ("dim2", ScanResponse),
}


def _dispatch(command: str, request, server: Optional[str]):
    name, response_type = _ENDPOINTS[command]
    if server is None:
        handler = getattr(service, name)
        return handler(request)
    import httpx

    url = server.rstrip("/") + f"/v1/{name}"
    resp = httpx.post(url, json=request.model_dump(mode="json"), timeout=None)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("error") or resp.json().get("detail")
        except ValueError:
            detail = resp.text
        raise ServiceError(f"server returned {resp.status_code}: {detail}")
    return response_type.model_validate(resp.json())


def _write_csv(path: str, rows: List[VerdictModel]) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(_CSV_COLUMNS)
        for row in rows:
            data = row.model_dump()
            writer.writerow(["" if data[c] is None else data[c] for c in _CSV_COLUMNS])


def _render_scan_text(resp: ScanResponse, out: List[str]) -> None:
    t = resp.tally
    out.append(
        f"scan mode={resp.mode} seed={resp.seed} filter={resp.filter} total={resp.total}"
    )
    out.append(
        f"  both_equal={t.both_equal} augmentation_fail_only={t.augmentation_fail_only} "
        f"restriction_fail_only={t.restriction_fail_only} both_fail={t.both_fail} "
        f"degenerate={t.degenerate}"
    )
    for pattern, pt in resp.by_pattern.items():
        out.append(f"  pattern {pattern}: tested={pt.tested} both_fail={pt.both_fail}")
    out.append(f"failures: {len(resp.failures)}")
    for v in resp.failures[:10]:
        out.append(
            f"  l = {v.hyperplane}  augmentation_equal={v.augmentation_equal} "
            f"restriction_equal={v.restriction_equal}"
        )
    if len(resp.failures) > 10:
        out.append(f"  ... {len(resp.failures) - 10} more")


def _render_text(resp) -> str:
    out: List[str] = []
    if isinstance(resp, ComputeResponse):
        out.append(f"GF({resp.field.order})[{', '.join(resp.vars)}], {resp.term_order}")
        out.append(f"f = {resp.poly}, e = {resp.e}")
        out.append("generators:")
        out.extend(f"  {g}" for g in resp.generators)
    elif isinstance(resp, AugmentResponse):
        out.append(f"f = {resp.poly}, e = {resp.e}, l = {resp.line}")
        out.append(f"equal: {resp.equal}")
        if resp.witness is not None:
            out.append(f"witness in tau(f) only: {resp.witness}")
    elif isinstance(resp, RestrictResponse):
        out.append(f"f = {resp.poly}, e = {resp.e}, l = {resp.line}")
        out.append(f"eliminated {resp.eliminated}; chart vars {', '.join(resp.chart_vars)}")
        out.append(f"equal: {resp.equal}")
        if resp.witness is not None:
            out.append(f"witness ({resp.witness_side} side): {resp.witness}")
    elif isinstance(resp, CexResponse):
        out.append(f"family {resp.family} over GF({resp.field.order})")
        out.append(f"f = {resp.poly}")
        out.append(f"slices: {', '.join(resp.slices)}")
        if resp.lines is not None:
            out.append(f"lines: {', '.join(resp.lines)}")
        out.append(f"tau = <{', '.join(resp.tau_generators)}>")
        out.append(f"independence: {resp.independence_ok}")
        out.append(f"detection: applicable={resp.detection.applicable} ({resp.detection.reason})")
        if resp.scan is not None:
            _render_scan_text(resp.scan, out)
    elif isinstance(resp, ChartResponse):
        out.append(f"chart {resp.chart} = 1 of {resp.poly}")
        out.append(f"generators: {', '.join(resp.generators)}")
    elif isinstance(resp, ScanResponse):
        out.append(f"f = {resp.poly}, e = {resp.e} over GF({resp.field.order})")
        _render_scan_text(resp, out)
    else:  # pragma: no cover - exhaustive above
        out.append(str(resp))
    return "\n".join(out)


def _build_request(args: argparse.Namespace):
    cmd = args.command
    if cmd in ("compute", "augment", "restrict", "scan", "dim2"):
        base = dict(
            char=args.char,
            ext_degree=args.ext_degree,
            modulus=args.modulus,
            vars=_vars_list(args.vars),
            order=args.order,
            poly=args.poly,
            e=args.e,
            degree_guard=args.degree_guard,
            budget=args.budget,
        )
        if cmd == "compute":
            return ComputeRequest(**base)
        if cmd == "augment":
            return AugmentRequest(line=args.line, **base)
        if cmd == "restrict":
            return RestrictRequest(line=args.line, eliminate=args.eliminate, **base)
        scan_bits = dict(
            mode=args.mode,
            samples=args.samples,
            seed=args.seed,
            filter=args.filter,
            jobs=args.jobs,
            include_rows=bool(args.csv),
        )
        if cmd == "scan":
            return ScanRequest(**base, **scan_bits)
        return Dim2Request(**base, **scan_bits)
    if cmd == "cex":
        scan_settings = None
        if args.scan is not None:
            scan_settings = ScanSettings(
                mode=args.scan,
                samples=args.samples,
                seed=args.seed,
                filter=args.filter,
                jobs=args.jobs,
                include_rows=bool(args.csv),
            )
        return CexRequest(
            family=args.family,
            char=args.char,
            ext_degree=args.ext_degree,
            modulus=args.modulus,
            n=args.n,
            seed=args.seed,
            degree_guard=args.degree_guard,
            budget=args.budget,
            scan=scan_settings,
        )
    if cmd == "chart":
        return ChartRequest(
            char=args.char,
            ext_degree=args.ext_degree,
            modulus=args.modulus,
            vars=_vars_list(args.vars),
            order=args.order,
            poly=args.poly,
            chart=args.chart,
            e=args.e,
            degree_guard=args.degree_guard,
            budget=args.budget,
        )
    raise ServiceError(f"unknown command {cmd!r}")  # pragma: no cover


def _unequal(resp) -> bool:
    if isinstance(resp, (AugmentResponse, RestrictResponse)):
        return not resp.equal
    if isinstance(resp, ScanResponse):
        return bool(resp.failures)
    if isinstance(resp, CexResponse):
        return resp.scan is not None and bool(resp.scan.failures)
    return False


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .app import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port)
        return 0

    try:
        request = _build_request(args)
        response = _dispatch(args.command, request, args.server)
    except ServiceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    csv_path = getattr(args, "csv", None)
    if csv_path:
        rows = None
        if isinstance(response, ScanResponse):
            rows = response.rows
        elif isinstance(response, CexResponse) and response.scan is not None:
            rows = response.scan.rows
        if rows is None:
            print("error: no scan rows to write to CSV", file=sys.stderr)
            return 2
        _write_csv(csv_path, rows)

    if args.format == "text":
        print(_render_text(response))
    else:
        print(to_json(response, exclude=_json_exclude(response)))

    if getattr(args, "expect_equal", False) and _unequal(response):
        return 1
    return 0


def _json_exclude(response):
    if isinstance(response, ScanResponse):
        return {"rows"}
    if isinstance(response, CexResponse):
        return {"scan": {"rows"}}
    return None


if __name__ == "__main__":
    sys.exit(main())
