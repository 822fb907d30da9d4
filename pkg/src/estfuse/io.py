"""
Reading source estimates from CSV or JSON-lines text.

CSV rows are ``value,uncertainty[,label]`` with an optional header row.
JSON lines are objects with ``value``, ``uncertainty`` and optional
``label``.  Uncertainty may be the token ``inf``.  Numbers use ``.`` as the
radix point regardless of locale.
"""

from __future__ import annotations

import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass
from typing import Iterable, List, Optional, TextIO, Union

from estfuse.estimates import SourceEstimate

_DECIMAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_INFINITY = {"inf", "+inf", "infinity", "+infinity"}


class InputError(ValueError):
    """Malformed estimate input."""


@dataclass(frozen=True)
class InputRecord:
    value: str
    uncertainty: str
    label: Optional[str] = None
    line: int = 0

    def to_estimate(self) -> SourceEstimate:
        value = _parse_number(self.value, "value", self.line, allow_inf=False)
        uncertainty = _parse_number(self.uncertainty, "uncertainty", self.line, allow_inf=True)
        if uncertainty < 0:
            raise InputError(f"line {self.line}: uncertainty must be non-negative, got {self.uncertainty!r}")
        return SourceEstimate(value, uncertainty, self.label or None)


def _parse_number(text: str, what: str, line: int, allow_inf: bool) -> float:
    t = text.strip()
    if allow_inf and t.lower() in _INFINITY:
        return math.inf
    if not _DECIMAL.fullmatch(t):
        raise InputError(f"line {line}: {what} is not a decimal literal: {text!r}")
    x = float(t)
    if not math.isfinite(x):
        raise InputError(f"line {line}: {what} overflows: {text!r}")
    return x


def _is_blank(line: str) -> bool:
    s = line.strip()
    return not s or s.startswith("#")


def _csv_records(text: str) -> List[InputRecord]:
    records = []
    columns = None
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or _is_blank(",".join(row)):
            continue
        cells = [c.strip() for c in row]
        if columns is None and not records and "value" in (c.lower() for c in cells):
            columns = [c.lower() for c in cells]
            missing = {"value", "uncertainty"} - set(columns)
            if missing:
                raise InputError(f"line {lineno}: header lacks column(s) {sorted(missing)}")
            continue
        if columns is not None:
            if len(cells) > len(columns):
                raise InputError(f"line {lineno}: expected at most {len(columns)} fields, got {len(cells)}")
            named = dict(zip(columns, cells))
            value, unc, label = named.get("value", ""), named.get("uncertainty", ""), named.get("label")
        else:
            if not 2 <= len(cells) <= 3:
                raise InputError(f"line {lineno}: expected value,uncertainty[,label], got {len(cells)} fields")
            value, unc = cells[0], cells[1]
            label = cells[2] if len(cells) == 3 else None
        records.append(InputRecord(value, unc, label, lineno))
    return records


def _json_field(obj: dict, key: str, lineno: int) -> str:
    if key not in obj:
        raise InputError(f"line {lineno}: missing field {key!r}")
    x = obj[key]
    if isinstance(x, bool) or not isinstance(x, (int, float, str)):
        raise InputError(f"line {lineno}: field {key!r} must be a number or string")
    if isinstance(x, float) and math.isinf(x) and x > 0:
        return "inf"
    return x if isinstance(x, str) else repr(x)


def _jsonl_records(text: str) -> List[InputRecord]:
    records = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if _is_blank(line):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise InputError(f"line {lineno}: invalid JSON: {exc.msg}") from None
        if not isinstance(obj, dict):
            raise InputError(f"line {lineno}: expected a JSON object")
        label = obj.get("label")
        records.append(
            InputRecord(
                _json_field(obj, "value", lineno),
                _json_field(obj, "uncertainty", lineno),
                None if label is None else str(label),
                lineno,
            )
        )
    return records


def detect_format(text: str) -> str:
    for line in text.splitlines():
        if not _is_blank(line):
            return "jsonl" if line.lstrip().startswith("{") else "csv"
    return "csv"


def parse_records(text: str, fmt: str = "auto") -> List[InputRecord]:
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "csv":
        return _csv_records(text)
    if fmt == "jsonl":
        return _jsonl_records(text)
    raise InputError(f"unknown input format {fmt!r}")


def parse_estimates(text: str, fmt: str = "auto") -> List[SourceEstimate]:
    return [r.to_estimate() for r in parse_records(text, fmt)]


def read_estimates(source: Union[str, TextIO], fmt: str = "auto") -> List[SourceEstimate]:
    """Read estimates from a path, ``"-"`` for stdin, or an open text stream."""
    if hasattr(source, "read"):
        text = source.read()
    elif source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc.strerror}") from None
    return parse_estimates(text, fmt)


def format_estimates_csv(estimates: Iterable[SourceEstimate]) -> str:
    lines = ["value,uncertainty,label"]
    for e in estimates:
        u = "inf" if math.isinf(e.uncertainty) else repr(e.uncertainty)
        lines.append(f"{e.value!r},{u},{e.label or ''}")
    return "\n".join(lines) + "\n"
