"""CSV / JSON report serialization.

Both formats carry the same columns.  Floats are written with 12 significant
digits; JSON numbers are rounded to the same digits, so converting a JSON
report to CSV reproduces the CSV byte for byte.  Absent parameters and
non-finite values become empty CSV fields and JSON nulls.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Iterable, Optional

from .verify import MarginReport

COLUMNS = ("theorem_id", "function_id", "a", "b", "alpha", "p", "q", "lhs", "rhs", "margin", "status", "notes")
_FLOAT_COLUMNS = frozenset({"a", "b", "alpha", "p", "q", "lhs", "rhs", "margin"})


def format_float(x: Optional[float]) -> str:
    if x is None or not math.isfinite(x):
        return ""
    return f"{x:.12g}"


def _round(x: Optional[float]) -> Optional[float]:
    if x is None or not math.isfinite(x):
        return None
    return float(f"{x:.12g}")


def report_to_dict(r: MarginReport) -> dict:
    row = {}
    for col in COLUMNS:
        v = getattr(r, col)
        row[col] = _round(v) if col in _FLOAT_COLUMNS else v
    return row


def _csv_text(rows: Iterable[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(
            format_float(row[c]) if c in _FLOAT_COLUMNS else ("" if row[c] is None else row[c]) for c in COLUMNS
        )
    return buf.getvalue()


def to_csv(reports: Iterable[MarginReport]) -> str:
    return _csv_text(report_to_dict(r) for r in reports)


def to_json(reports: Iterable[MarginReport]) -> str:
    return json.dumps([report_to_dict(r) for r in reports], indent=2, allow_nan=False) + "\n"


def json_to_csv(text: str) -> str:
    """Re-encode a JSON report as CSV."""
    rows = json.loads(text)
    for row in rows:
        if set(row) != set(COLUMNS):
            raise ValueError(f"report object has fields {sorted(row)}, expected {list(COLUMNS)}")
    return _csv_text(rows)


def to_text(reports: Iterable[MarginReport]) -> str:
    """Aligned table for terminals."""
    rows = [[format_float(getattr(r, c)) if c in _FLOAT_COLUMNS else (getattr(r, c) or "") for c in COLUMNS]
            for r in reports]
    widths = [max(len(c), *(len(row[i]) for row in rows)) if rows else len(c) for i, c in enumerate(COLUMNS)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(COLUMNS, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


WRITERS = {"csv": to_csv, "json": to_json, "text": to_text}
