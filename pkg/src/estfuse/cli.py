"""
Command-line front end.

    estfuse combine estimates.csv --method virtual-sampling --diagnostics
    estfuse compare estimates.csv
    estfuse audit --method intersect --desideratum D9 --cases 500

Exit codes: 0 success, 1 undefined resultant or failed audit, 2 bad input
or usage.  ``FUSE_SEED`` sets the default audit seed.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional, Sequence

from estfuse.desiderata import AuditConfig, Desideratum, run_audit
from estfuse.estimates import CalibrationPolicy, Method
from estfuse.io import InputError, read_estimates
from estfuse.reports import (
    audit_dict,
    audit_table,
    build_combine_report,
    combine_table,
    compare_reports,
    dumps,
)

EXIT_OK, EXIT_UNDEFINED, EXIT_USAGE = 0, 1, 2

_METHODS = [m.value for m in Method]


def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (x > 0 and x != float("inf")):
        raise argparse.ArgumentTypeError(f"must be positive and finite: {text!r}")
    return x


def _positive_int(text: str) -> int:
    try:
        x = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if x < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {text!r}")
    return x


def _desideratum(text: str) -> str:
    t = text.strip().upper()
    if t == "ALL":
        return "all"
    if t.isdigit():
        t = "D" + t
    try:
        return Desideratum(t).value
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown desideratum {text!r} (use D1..D10 or all)") from None


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", help="estimate file (CSV or JSON lines), or - for stdin")
    p.add_argument("--input-format", choices=["auto", "csv", "jsonl"], default="auto")
    p.add_argument("--sigma-scale", type=_positive_float, default=1.0, help="standard deviation per unit of reported uncertainty")
    p.add_argument("--format", choices=["json", "table"], default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="estfuse", description="Combine uncertain estimates and audit combination rules.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("combine", help="combine estimates with one rule")
    _add_input_args(p)
    p.add_argument("--method", choices=_METHODS, default=Method.VIRTUAL_SAMPLING.value)
    p.add_argument("--diagnostics", action="store_true", help="include virtual-sampling intermediates")

    p = sub.add_parser("compare", help="combine estimates with every rule")
    _add_input_args(p)

    p = sub.add_parser("audit", help="check a rule against the desiderata")
    p.add_argument("--method", choices=_METHODS, required=True)
    p.add_argument("--desideratum", type=_desideratum, action="append", help="D1..D10 or all; repeatable (default all)")
    p.add_argument("--cases", type=_positive_int, default=1000)
    p.add_argument("--seed", type=int, default=None, help="default: $FUSE_SEED or 0")
    p.add_argument("--tolerance", type=_positive_float, default=1e-9)
    p.add_argument("--weak", action="store_true", help="check weak forms of the strict inequalities")
    p.add_argument("--min-sources", type=_positive_int, default=2)
    p.add_argument("--max-sources", type=_positive_int, default=6)
    p.add_argument("--max-counterexamples", type=int, default=20)
    p.add_argument("--sigma-scale", type=_positive_float, default=1.0)
    p.add_argument("--format", choices=["json", "table"], default="json")
    return parser


def _seed(args, parser) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("FUSE_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        parser.error(f"FUSE_SEED is not an integer: {env!r}")


def _read(args) -> Optional[list]:
    try:
        return read_estimates(args.input, args.input_format)
    except InputError as exc:
        print(f"estfuse: {exc}", file=sys.stderr)
        return None


def cmd_combine(args) -> int:
    estimates = _read(args)
    if estimates is None:
        return EXIT_USAGE
    report = build_combine_report(estimates, args.method, CalibrationPolicy(args.sigma_scale), args.diagnostics)
    out = dumps(report.to_dict()) if args.format == "json" else combine_table([report])
    sys.stdout.write(out)
    return EXIT_OK if report.ok else EXIT_UNDEFINED


def cmd_compare(args) -> int:
    estimates = _read(args)
    if estimates is None:
        return EXIT_USAGE
    reports = compare_reports(estimates, CalibrationPolicy(args.sigma_scale))
    if args.format == "json":
        sys.stdout.write(dumps({"rows": [r.to_dict() for r in reports]}))
    else:
        sys.stdout.write(combine_table(reports))
    return EXIT_OK


def cmd_audit(args, parser) -> int:
    requested: List[str] = args.desideratum or ["all"]
    if "all" in requested:
        ids = list(Desideratum)
    else:
        ids = [Desideratum(d) for d in dict.fromkeys(requested)]
    try:
        cfg = AuditConfig(
            seed=_seed(args, parser),
            cases=args.cases,
            tolerance=args.tolerance,
            min_sources=args.min_sources,
            max_sources=args.max_sources,
            weak=args.weak,
            max_counterexamples=args.max_counterexamples,
        )
    except ValueError as exc:
        parser.error(str(exc))
    method = Method(args.method)
    reports = run_audit(method, ids, cfg, CalibrationPolicy(args.sigma_scale))
    if args.format == "json":
        sys.stdout.write(dumps(audit_dict(method, cfg, reports)))
    else:
        sys.stdout.write(audit_table(reports))
    return EXIT_OK if all(r.verdict != "fail" for r in reports) else EXIT_UNDEFINED


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "combine":
        return cmd_combine(args)
    if args.command == "compare":
        return cmd_compare(args)
    return cmd_audit(args, parser)


if __name__ == "__main__":
    sys.exit(main())
