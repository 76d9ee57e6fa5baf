"""Readers and writers for surveys, interval tables and analysis results.

Formats
-------
Survey CSV
    Header with two variable names; each cell holds one or more modality
    labels joined by ``|``.
Interval table CSV
    First row: a corner cell followed by column labels. Each further row:
    a row label followed by ``lo:hi`` cells.
Interval table JSON
    ``{"row_labels": [...], "col_labels": [...], "cells": [[[lo, hi], ...], ...]}``
Result JSON
    ``{"eigenvalues", "inertia_share", "rows", "cols"}``; every modality is
    ``{"label", "coords", "rect_lo", "rect_hi"}`` with one entry per axis.

Every writer is canonical (sorted keys, 15 significant digits), so output
bytes depend only on the values.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .errors import SymCAError
from .interval_table import IntervalTable
from .multivalued import MultiValuedVariable, parse_observations

SEPARATOR = "|"


def _text(data) -> str:
    if isinstance(data, str):
        return data
    try:
        return bytes(data).decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise SymCAError(f"input is not valid UTF-8: {exc}") from exc


def _rows(text: str) -> list[list[str]]:
    try:
        rows = list(csv.reader(io.StringIO(text), strict=True))
    except csv.Error as exc:
        raise SymCAError(f"malformed CSV: {exc}") from exc
    return [r for r in rows if r]


def read_survey_csv(data) -> tuple[MultiValuedVariable, MultiValuedVariable]:
    """Parse a two-column multiple-selection survey."""
    rows = _rows(_text(data))
    if not rows:
        raise SymCAError("empty survey file")
    header = [h.strip() for h in rows[0]]
    if len(header) < 2:
        raise SymCAError(f"survey needs 2 columns, header has {len(header)}")
    if len(header) > 2:
        raise SymCAError(f"survey must have exactly 2 columns, header has {len(header)}")
    body = rows[1:]
    if not body:
        raise SymCAError("survey has no data rows")
    sets: list[list[set[str]]] = [[], []]
    for r, row in enumerate(body, start=1):
        if len(row) != 2:
            raise SymCAError(f"row {r}: expected 2 cells, got {len(row)}")
        for c, cell in enumerate(row):
            labels = {s.strip() for s in cell.split(SEPARATOR)}
            if "" in labels:
                raise SymCAError(f"row {r}: empty cell or label in column {header[c]!r}")
            sets[c].append(labels)
    return (
        parse_observations(sets[0], name=header[0]),
        parse_observations(sets[1], name=header[1]),
    )


def write_survey_csv(x: MultiValuedVariable, y: MultiValuedVariable) -> bytes:
    if x.n_individuals != y.n_individuals:
        raise SymCAError("variables observed on different individuals")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([x.name or "x", y.name or "y"])
    for a, b in zip(x.labels(), y.labels()):
        w.writerow([SEPARATOR.join(a), SEPARATOR.join(b)])
    return buf.getvalue().encode("utf-8")


def _parse_int(token: str, r: int, c: int) -> int:
    try:
        return int(token.strip())
    except ValueError:
        raise SymCAError(f"cannot parse bound {token!r} at ({r},{c})") from None


def _check_bounds(lo: int, hi: int, r: int, c: int):
    if lo < 0 or hi < 0:
        raise SymCAError(f"negative bound at ({r},{c})")
    if lo > hi:
        raise SymCAError(f"inverted interval at ({r},{c})")


def _table_from_csv(text: str) -> IntervalTable:
    rows = _rows(text)
    if len(rows) < 2:
        raise SymCAError("interval table CSV needs a header and at least one row")
    col_labels = [s.strip() for s in rows[0][1:]]
    if not col_labels:
        raise SymCAError("interval table CSV has no columns")
    row_labels, lo, hi = [], [], []
    for r, row in enumerate(rows[1:]):
        if len(row) != len(col_labels) + 1:
            raise SymCAError(
                f"ragged row {r}: expected {len(col_labels)} cells, got {len(row) - 1}"
            )
        row_labels.append(row[0].strip())
        lo_row, hi_row = [], []
        for c, cell in enumerate(row[1:]):
            parts = cell.split(":")
            if len(parts) != 2:
                raise SymCAError(f"cell {cell!r} at ({r},{c}) is not of the form lo:hi")
            a, b = _parse_int(parts[0], r, c), _parse_int(parts[1], r, c)
            _check_bounds(a, b, r, c)
            lo_row.append(a)
            hi_row.append(b)
        lo.append(lo_row)
        hi.append(hi_row)
    return IntervalTable(tuple(row_labels), tuple(col_labels), lo, hi)


def _table_from_json(text: str) -> IntervalTable:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SymCAError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise SymCAError("interval table JSON must be an object")
    missing = {"row_labels", "col_labels", "cells"} - obj.keys()
    if missing:
        raise SymCAError(f"interval table JSON missing keys: {sorted(missing)}")
    row_labels, col_labels, cells = obj["row_labels"], obj["col_labels"], obj["cells"]
    if not isinstance(cells, list) or len(cells) != len(row_labels):
        raise SymCAError(f"expected {len(row_labels)} rows of cells")
    lo, hi = [], []
    for r, row in enumerate(cells):
        if not isinstance(row, list) or len(row) != len(col_labels):
            raise SymCAError(f"ragged row {r}: expected {len(col_labels)} cells")
        lo_row, hi_row = [], []
        for c, cell in enumerate(row):
            if (
                not isinstance(cell, list)
                or len(cell) != 2
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in cell)
            ):
                raise SymCAError(f"cell at ({r},{c}) must be a [lo, hi] integer pair")
            _check_bounds(cell[0], cell[1], r, c)
            lo_row.append(cell[0])
            hi_row.append(cell[1])
        lo.append(lo_row)
        hi.append(hi_row)
    return IntervalTable(tuple(row_labels), tuple(col_labels), lo, hi)


def read_interval_table(data, format: str = "csv") -> IntervalTable:
    text = _text(data)
    if format == "csv":
        return _table_from_csv(text)
    if format == "json":
        return _table_from_json(text)
    raise SymCAError(f"unknown table format {format!r}")


def write_interval_table(t: IntervalTable, format: str = "json") -> bytes:
    if format == "json":
        obj = {
            "row_labels": list(t.row_labels),
            "col_labels": list(t.col_labels),
            "cells": [[list(c) for c in row] for row in t.cells],
        }
        return _dumps(obj)
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + list(t.col_labels))
        for label, row in zip(t.row_labels, t.cells):
            w.writerow([label] + [f"{a}:{b}" for a, b in row])
        return buf.getvalue().encode("utf-8")
    raise SymCAError(f"unknown table format {format!r}")


def table_format_for(path) -> str:
    return "json" if str(path).lower().endswith(".json") else "csv"


# -- results ---------------------------------------------------------------


@dataclass(frozen=True)
class ModalityPlacement:
    label: str
    coords: tuple[float, ...]
    rect_lo: tuple[float, ...]
    rect_hi: tuple[float, ...]


@dataclass(frozen=True)
class ResultSummary:
    """Serializable view of a SymCA result: what gets plotted."""

    eigenvalues: tuple[float, ...]
    inertia_share: tuple[float, ...]
    rows: tuple[ModalityPlacement, ...]
    cols: tuple[ModalityPlacement, ...]

    @property
    def n_axes(self) -> int:
        return len(self.eigenvalues)


def canonical_float(x) -> float:
    """Round to 15 significant digits; negative zero becomes zero."""
    v = float(f"{float(x):.15g}")
    return 0.0 if v == 0 else v


def _vec(values) -> tuple[float, ...]:
    return tuple(canonical_float(v) for v in values)


def summarize(result) -> ResultSummary:
    """Canonical summary of a :class:`~symca.projection.SymCAResult`."""
    if isinstance(result, ResultSummary):
        return result
    ca = result.ca
    rows = tuple(
        ModalityPlacement(
            label, _vec(ca.row_coords[:, i]), _vec(result.row_lo[:, i]), _vec(result.row_hi[:, i])
        )
        for i, label in enumerate(ca.row_labels)
    )
    cols = tuple(
        ModalityPlacement(
            label, _vec(ca.col_coords[:, j]), _vec(result.col_lo[:, j]), _vec(result.col_hi[:, j])
        )
        for j, label in enumerate(ca.col_labels)
    )
    return ResultSummary(_vec(ca.eigenvalues), _vec(ca.inertia_share), rows, cols)


def _dumps(obj) -> bytes:
    return (json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def write_result_json(result) -> bytes:
    s = summarize(result)

    def placement(m: ModalityPlacement):
        return {
            "label": m.label,
            "coords": list(m.coords),
            "rect_lo": list(m.rect_lo),
            "rect_hi": list(m.rect_hi),
        }

    return _dumps(
        {
            "eigenvalues": list(s.eigenvalues),
            "inertia_share": list(s.inertia_share),
            "rows": [placement(m) for m in s.rows],
            "cols": [placement(m) for m in s.cols],
        }
    )


def read_result_json(data) -> ResultSummary:
    try:
        obj = json.loads(_text(data))
    except json.JSONDecodeError as exc:
        raise SymCAError(f"malformed JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise SymCAError("result JSON must be an object")
    missing = {"eigenvalues", "inertia_share", "rows", "cols"} - obj.keys()
    if missing:
        raise SymCAError(f"result JSON missing keys: {sorted(missing)}")
    n_axes = len(obj["eigenvalues"])

    def placement(m, where):
        try:
            out = ModalityPlacement(
                str(m["label"]), _vec(m["coords"]), _vec(m["rect_lo"]), _vec(m["rect_hi"])
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SymCAError(f"bad modality entry in {where}: {exc}") from exc
        if not (len(out.coords) == len(out.rect_lo) == len(out.rect_hi) == n_axes):
            raise SymCAError(f"{where} entry {out.label!r} does not have {n_axes} axes")
        return out

    return ResultSummary(
        _vec(obj["eigenvalues"]),
        _vec(obj["inertia_share"]),
        tuple(placement(m, "rows") for m in obj["rows"]),
        tuple(placement(m, "cols") for m in obj["cols"]),
    )
