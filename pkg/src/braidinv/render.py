"""Table container and the text, JSON, and CSV emitters for the CLI.

Exact rationals render as canonical 'p/q' strings; some of them run to
thousands of digits, so the integer-to-string guard is raised once here.
Floating point cells are produced by the callers, already formatted at
their chosen precision, and appear only in columns whose names carry a
digit tag.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

if hasattr(sys, "set_int_max_str_digits"):
    if sys.get_int_max_str_digits() < 100000:
        sys.set_int_max_str_digits(100000)


@dataclass
class Table:
    title: str
    columns: list
    rows: list
    notes: list = field(default_factory=list)


def fmt_rational(x) -> str:
    return str(Fraction(x))


def fmt_float(x, digits: int) -> str:
    return mpmath.nstr(x, digits)


def float_column(name: str, digits: int) -> str:
    """Column label tagged with its precision."""
    return f"{name}[{digits}d]"


def render_text(tables) -> str:
    blocks = []
    for table in tables:
        widths = [len(c) for c in table.columns]
        for row in table.rows:
            for i, cell in enumerate(row):
                widths[i] = max(widths[i], len(cell))
        lines = [table.title, "-" * len(table.title)]
        lines.append("  ".join(c.ljust(widths[i])
                               for i, c in enumerate(table.columns)).rstrip())
        for row in table.rows:
            lines.append("  ".join(cell.ljust(widths[i])
                                   for i, cell in enumerate(row)).rstrip())
        for note in table.notes:
            lines.append(f"note: {note}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def render_json(tables) -> str:
    payload = {"tables": [{"title": t.title,
                           "columns": list(t.columns),
                           "rows": [list(r) for r in t.rows],
                           "notes": list(t.notes)} for t in tables]}
    return json.dumps(payload, indent=2) + "\n"


def tables_from_json(text: str) -> list[Table]:
    payload = json.loads(text)
    return [Table(t["title"], list(t["columns"]),
                  [list(r) for r in t["rows"]], list(t["notes"]))
            for t in payload["tables"]]


def render_csv(tables) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    for index, table in enumerate(tables):
        if index:
            writer.writerow([])
        writer.writerow(["table", table.title])
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow(row)
        for note in table.notes:
            writer.writerow(["note", note])
    return out.getvalue()
