"""Deterministic JSON, CSV and text rendering of report rows.

A report is anything with ``to_dict()`` or a plain dict.  Output carries no
timestamps, keys are sorted in JSON, and every format ends with a newline,
so equal inputs give equal bytes.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path
from typing import Iterable, Optional

from .config import FORMATS, ConfigError

__all__ = ["as_rows", "render_report", "emit_report"]

_PREFERRED = ("claim", "status", "expected", "family", "truncation", "K", "conflict")


def as_rows(reports: Iterable) -> list[dict]:
    return [r.to_dict() if hasattr(r, "to_dict") else dict(r) for r in reports]


def _columns(rows: list[dict]) -> list[str]:
    seen: list[str] = []
    for row in rows:
        for key in row:
            if key not in seen:
                seen.append(key)
    head = [k for k in _PREFERRED if k in seen]
    return head + [k for k in seen if k not in head]


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def _render_json(rows: list[dict]) -> str:
    return json.dumps(rows, sort_keys=True, indent=2) + "\n"


def _render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    cols = _columns(rows)
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in cols])
    return buf.getvalue()


def _render_text(rows: list[dict]) -> str:
    # evidence blobs stay out of the table; json carries them
    cols = [c for c in _columns(rows) if c != "evidence"]
    cells = [[_cell(row.get(c)) for c in cols] for row in rows]
    cells = [[c if len(c) <= 48 else c[:45] + "..." for c in line] for line in cells]
    widths = [max([len(c)] + [len(line[i]) for line in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in cells]
    if rows and "status" in cols:
        tally: dict[str, int] = {}
        for row in rows:
            tally[row["status"]] = tally.get(row["status"], 0) + 1
        lines.append("")
        lines.append(", ".join(f"{k}: {v}" for k, v in sorted(tally.items())))
    return "\n".join(lines) + "\n"


def render_report(reports: Iterable, fmt: str = "text") -> str:
    if fmt not in FORMATS:
        raise ConfigError(f"format must be one of {', '.join(FORMATS)}")
    rows = as_rows(reports)
    return {"json": _render_json, "csv": _render_csv, "text": _render_text}[fmt](rows)


def emit_report(reports: Iterable, fmt: str = "text", path: Optional[str] = None) -> None:
    """Write the rendered report to ``path``, or to stdout when ``path`` is None."""
    text = render_report(reports, fmt)
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise ConfigError(f"cannot write report to {path}: {exc}") from None
