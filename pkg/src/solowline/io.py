"""Reading point sets from CSV / JSON and writing reports."""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from .errors import ParseError


def _parse_float(cell: str, row: int, col: int) -> float:
    try:
        x = float(cell)
    except ValueError:
        raise ParseError(f"not a number: {cell.strip()!r}", row=row, column=col) from None
    if not math.isfinite(x):
        raise ParseError(f"non-finite value {cell.strip()!r}", row=row, column=col)
    return x


def _is_numeric(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def parse_csv(text: str) -> np.ndarray:
    """One point per row, comma separated; a non-numeric first row is a header."""
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise ParseError("no data rows")
    start = 0 if all(_is_numeric(c) for c in rows[0]) else 1
    width = None
    out = []
    for r_i, row in enumerate(rows[start:], start=start + 1):
        vals = [_parse_float(c, r_i, c_i) for c_i, c in enumerate(row, start=1)]
        if width is None:
            width = len(vals)
        elif len(vals) != width:
            raise ParseError(f"expected {width} columns, found {len(vals)}", row=r_i)
        out.append(vals)
    if not out:
        raise ParseError("header without data rows")
    return np.asarray(out, dtype=float)


def parse_json(text: str) -> np.ndarray:
    """A flat array of numbers, an array of arrays, or an object holding
    either under ``"points"`` or ``"coordinates"``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", row=exc.lineno, column=exc.colno) from None
    if isinstance(data, dict):
        for key in ("points", "coordinates"):
            if key in data:
                data = data[key]
                break
        else:
            raise ParseError('JSON object needs a "points" or "coordinates" entry')
    if not isinstance(data, list) or not data:
        raise ParseError("expected a non-empty JSON array")
    rows = [r if isinstance(r, list) else [r] for r in data]
    width = len(rows[0])
    out = []
    for r_i, row in enumerate(rows, start=1):
        if len(row) != width:
            raise ParseError(f"expected {width} columns, found {len(row)}", row=r_i)
        vals = []
        for c_i, x in enumerate(row, start=1):
            if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
                raise ParseError(f"not a finite number: {x!r}", row=r_i, column=c_i)
            vals.append(float(x))
        out.append(vals)
    return np.asarray(out, dtype=float)


def read_points(path: str | Path | None) -> np.ndarray:
    """Load an ``(n, m)`` point array from ``path`` (stdin when ``None``)."""
    if path is None or str(path) == "-":
        text = sys.stdin.read()
        is_json = text.lstrip().startswith(("[", "{"))
    else:
        p = Path(path)
        try:
            text = p.read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {p}: {exc.strerror}") from None
        is_json = p.suffix.lower() == ".json"
    return parse_json(text) if is_json else parse_csv(text)


def fmt(x: float) -> str:
    """12 significant digits, the precision used for CSV output."""
    return f"{x:.12g}"


def to_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def to_csv(rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in rows:
        w.writerow([fmt(c) if isinstance(c, float) else c for c in row])
    return buf.getvalue()
