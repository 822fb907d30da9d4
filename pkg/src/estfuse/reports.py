"""
Machine-readable reports for the command line.

Floats are written with 17 significant digits so every binary64 value
round-trips; infinities are written as the string ``"inf"``.  Output carries
no timestamps, so equal inputs give byte-identical text.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from estfuse.combinators import VirtualSamplingDiagnostics, combine, combine_virtual_sampling
from estfuse.desiderata import AuditConfig, DesideratumReport
from estfuse.estimates import (
    DEFAULT_POLICY,
    CalibrationPolicy,
    Method,
    SourceEstimate,
    UndefinedResultant,
)

METHOD_ORDER = (
    Method.VIRTUAL_SAMPLING,
    Method.WEIGHTED_MEAN,
    Method.UNWEIGHTED_MEAN,
    Method.INTERSECT,
    Method.COVER,
)


def format_float(x: float) -> str:
    if math.isnan(x):
        raise ValueError("NaN has no report representation")
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    return "%.17g" % x


def _encode(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return _encode_str(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{_encode_str(str(k))}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + _encode(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _encode_str(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def dumps(obj: Any, indent: int = 2) -> str:
    """JSON text for plain data, with floats at 17 significant digits."""
    return _encode(obj, indent, 0) + "\n"


@dataclass(frozen=True)
class CombineReport:
    method: Method
    status: str
    value: Optional[float] = None
    uncertainty: Optional[float] = None
    reason: Optional[str] = None
    diagnostics: Optional[VirtualSamplingDiagnostics] = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "method": self.method.value,
            "status": self.status,
            "reason": self.reason,
            "value": self.value,
            "uncertainty": self.uncertainty,
        }
        if self.diagnostics is not None:
            out["diagnostics"] = diagnostics_dict(self.diagnostics)
        return out


def diagnostics_dict(d: VirtualSamplingDiagnostics) -> Dict[str, Any]:
    labels = d.labels or (None,) * len(d.sample_sizes)
    return {
        "v_star": d.v_star,
        "n": d.n,
        "u_bar": d.u_bar,
        "between_variance": d.between_variance,
        "v": d.v,
        "sources": [
            {"index": i, "label": label, "n_i": n_i, "u_i": u_i}
            for i, (label, n_i, u_i) in enumerate(zip(labels, d.sample_sizes, d.u_values))
        ],
    }


def build_combine_report(
    estimates: Sequence[SourceEstimate],
    method: Method | str,
    policy: CalibrationPolicy = DEFAULT_POLICY,
    diagnostics: bool = False,
) -> CombineReport:
    method = Method(method)
    try:
        if method is Method.VIRTUAL_SAMPLING:
            result, diag = combine_virtual_sampling(estimates, policy)
        else:
            result, diag = combine(estimates, method, policy), None
    except UndefinedResultant as exc:
        return CombineReport(method, "undefined", reason=str(exc))
    return CombineReport(
        method,
        "ok",
        value=result.value,
        uncertainty=result.uncertainty,
        diagnostics=diag if diagnostics else None,
    )


def compare_reports(estimates: Sequence[SourceEstimate], policy: CalibrationPolicy = DEFAULT_POLICY) -> List[CombineReport]:
    return [build_combine_report(estimates, m, policy) for m in METHOD_ORDER]


# -- tables ----------------------------------------------------------------


def _cell(x: Any) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        return format_float(x).strip('"')
    return str(x)


def _table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [list(header)] + [[_cell(c) for c in row] for row in rows]
    widths = [max(len(r[j]) for r in cells) for j in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def combine_table(reports: Sequence[CombineReport]) -> str:
    rows = [(r.method.value, r.status if r.ok else f"undefined({r.reason})", r.value, r.uncertainty) for r in reports]
    text = _table(("method", "status", "value", "uncertainty"), rows)
    for r in reports:
        if r.diagnostics is not None:
            d = diagnostics_dict(r.diagnostics)
            text += "\n" + _table(("quantity", "value"), [(k, d[k]) for k in ("v_star", "n", "u_bar", "between_variance", "v")])
            text += "\n" + _table(
                ("index", "label", "n_i", "u_i"), [(s["index"], s["label"], s["n_i"], s["u_i"]) for s in d["sources"]]
            )
    return text


def audit_dict(method: Method, cfg: AuditConfig, reports: Sequence[DesideratumReport]) -> Dict[str, Any]:
    return {
        "method": method.value,
        "config": {
            "seed": cfg.seed,
            "cases": cfg.cases,
            "tolerance": cfg.tolerance,
            "weak": cfg.weak,
            "min_sources": cfg.min_sources,
            "max_sources": cfg.max_sources,
        },
        "passed": all(r.verdict != "fail" for r in reports),
        "reports": [r.to_dict() for r in reports],
    }


def audit_table(reports: Sequence[DesideratumReport]) -> str:
    rows = [
        (
            r.id.value,
            r.id.title,
            r.method.value,
            "weak" if r.weak else "strict",
            r.verdict,
            r.cases_run,
            r.skipped,
            r.violation_count,
        )
        for r in reports
    ]
    return _table(("id", "title", "method", "form", "verdict", "cases", "skipped", "violations"), rows)
