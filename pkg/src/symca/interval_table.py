"""Interval contingency tables: construction, centering and diagnostics."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .errors import AnalysisError, EnumerationTooLarge, SymCAError
from .multivalued import (
    DEFAULT_ENUMERATION_LIMIT,
    MultiValuedVariable,
    enumerate_completions,
    join_matrix,
    meet_matrix,
)


def _labels(labels, size, what):
    labels = tuple(str(s) for s in labels)
    if len(labels) != size:
        raise SymCAError(f"expected {size} {what} labels, got {len(labels)}")
    return labels


@dataclass(frozen=True)
class IntervalTable:
    """``n x p`` table of integer count intervals ``[lo, hi]``.

    Rows are modalities of the first variable, columns of the second.
    """

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        lo = np.array(self.lo, dtype=np.int64)
        hi = np.array(self.hi, dtype=np.int64)
        if lo.ndim != 2 or lo.shape != hi.shape:
            raise SymCAError(f"bound arrays must be 2-D of equal shape, got {lo.shape} and {hi.shape}")
        n, p = lo.shape
        if n < 1 or p < 1:
            raise SymCAError("an interval table needs at least one row and one column")
        neg = np.argwhere((lo < 0) | (hi < 0))
        if len(neg):
            r, c = neg[0]
            raise SymCAError(f"negative bound at ({r},{c})")
        inv = np.argwhere(lo > hi)
        if len(inv):
            r, c = inv[0]
            raise SymCAError(f"inverted interval at ({r},{c})")
        lo.flags.writeable = False
        hi.flags.writeable = False
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "row_labels", _labels(self.row_labels, n, "row"))
        object.__setattr__(self, "col_labels", _labels(self.col_labels, p, "column"))

    @classmethod
    def from_cells(cls, cells, row_labels=None, col_labels=None):
        """Build from a nested ``[[(lo, hi), ...], ...]`` list."""
        arr = np.asarray(cells, dtype=np.int64)
        if arr.ndim != 3 or arr.shape[2] != 2:
            raise SymCAError("cells must be an n x p grid of (lo, hi) pairs")
        n, p, _ = arr.shape
        if row_labels is None:
            row_labels = [f"r{i}" for i in range(n)]
        if col_labels is None:
            col_labels = [f"c{j}" for j in range(p)]
        return cls(tuple(row_labels), tuple(col_labels), arr[..., 0], arr[..., 1])

    @classmethod
    def degenerate(cls, counts, row_labels=None, col_labels=None):
        """Classical table viewed as an interval table with ``lo == hi``."""
        k = np.asarray(counts, dtype=np.int64)
        return cls.from_cells(np.stack([k, k], axis=-1), row_labels, col_labels)

    @property
    def shape(self) -> tuple[int, int]:
        return self.lo.shape

    @property
    def cells(self) -> list[list[tuple[int, int]]]:
        return [
            [(int(a), int(b)) for a, b in zip(lo_row, hi_row)]
            for lo_row, hi_row in zip(self.lo, self.hi)
        ]

    def transpose(self) -> "IntervalTable":
        return IntervalTable(self.col_labels, self.row_labels, self.lo.T, self.hi.T)

    def __eq__(self, other):
        if not isinstance(other, IntervalTable):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
            and np.array_equal(self.lo, other.lo)
            and np.array_equal(self.hi, other.hi)
        )

    __hash__ = None


@dataclass(frozen=True)
class CenterTable:
    """Nonnegative real table, usually the midpoints of an interval table."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        k = np.array(self.values, dtype=np.float64)
        if k.ndim != 2 or k.shape[0] < 1 or k.shape[1] < 1:
            raise SymCAError(f"center table must be a non-empty 2-D array, got shape {k.shape}")
        if not np.all(np.isfinite(k)):
            raise SymCAError("center table contains non-finite values")
        if np.any(k < 0):
            r, c = np.argwhere(k < 0)[0]
            raise SymCAError(f"negative cell at ({r},{c})")
        k.flags.writeable = False
        object.__setattr__(self, "values", k)
        n, p = k.shape
        object.__setattr__(self, "row_labels", _labels(self.row_labels, n, "row"))
        object.__setattr__(self, "col_labels", _labels(self.col_labels, p, "column"))

    @classmethod
    def from_array(cls, values, row_labels=None, col_labels=None):
        k = np.asarray(values, dtype=np.float64)
        n, p = k.shape
        if row_labels is None:
            row_labels = [f"r{i}" for i in range(n)]
        if col_labels is None:
            col_labels = [f"c{j}" for j in range(p)]
        return cls(tuple(row_labels), tuple(col_labels), k)

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    @property
    def grand_total(self) -> float:
        return float(self.values.sum())

    def transpose(self) -> "CenterTable":
        return CenterTable(self.col_labels, self.row_labels, self.values.T)


def interval_contingency(
    x: MultiValuedVariable, y: MultiValuedVariable
) -> IntervalTable:
    """Interval contingency table from two products of 0/1 matrices.

    The lower bound of cell ``(i, j)`` counts individuals forced into both
    modalities (meet matrices), the upper bound those that may take both
    (join matrices).
    """
    if x.n_individuals != y.n_individuals:
        raise SymCAError(
            f"variables observed on different individuals: {x.n_individuals} vs {y.n_individuals}"
        )
    lo = meet_matrix(x).T @ meet_matrix(y)
    hi = join_matrix(x).T @ join_matrix(y)
    return IntervalTable(x.modalities, y.modalities, lo, hi)


def brute_force_interval_contingency(
    x: MultiValuedVariable,
    y: MultiValuedVariable,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> IntervalTable:
    """Entrywise min/max of ``X_a^T Y_b`` over every pair of completions.

    Exponential in the number of individuals; meant as an oracle for
    :func:`interval_contingency` on small inputs.
    """
    if x.n_individuals != y.n_individuals:
        raise SymCAError(
            f"variables observed on different individuals: {x.n_individuals} vs {y.n_individuals}"
        )
    pairs = x.n_completions * y.n_completions
    if pairs > limit:
        raise EnumerationTooLarge(pairs, limit, "completion pairs")
    ys = np.stack(list(enumerate_completions(y, limit)))  # (B, m, n)
    lo = hi = None
    for xa in enumerate_completions(x, limit):
        tables = np.einsum("mp,bmn->bpn", xa, ys)
        tmin, tmax = tables.min(axis=0), tables.max(axis=0)
        if lo is None:
            lo, hi = tmin, tmax
        else:
            lo, hi = np.minimum(lo, tmin), np.maximum(hi, tmax)
    return IntervalTable(x.modalities, y.modalities, lo, hi)


def centers(t: IntervalTable) -> CenterTable:
    """Midpoint table ``(lo + hi) / 2``; half-integers, hence exact."""
    return CenterTable(t.row_labels, t.col_labels, (t.lo + t.hi) / 2.0)


@dataclass(frozen=True)
class Diagnostics:
    grand_total: float
    zero_rows: tuple[int, ...]
    zero_cols: tuple[int, ...]
    rank_bound: int
    problems: tuple[str, ...] = field(default=())

    @property
    def analyzable(self) -> bool:
        return not self.problems


def validate_for_analysis(t: CenterTable) -> Diagnostics:
    """Report margins and dimensionality problems without raising."""
    k = t.values
    n, p = k.shape
    zero_rows = tuple(int(i) for i in np.flatnonzero(k.sum(axis=1) == 0))
    zero_cols = tuple(int(j) for j in np.flatnonzero(k.sum(axis=0) == 0))
    rank_bound = min(n - 1, p - 1)
    problems = []
    total = float(k.sum())
    if total <= 0:
        problems.append("zero grand total")
    if zero_rows:
        problems.append("zero row margin")
    if zero_cols:
        problems.append("zero column margin")
    if rank_bound < 1:
        problems.append("no non-trivial axes")
    return Diagnostics(total, zero_rows, zero_cols, rank_bound, tuple(problems))


def drop_empty(t: IntervalTable) -> IntervalTable:
    """Remove rows and columns whose centers are all zero, with a warning.

    A center cell is zero only when ``lo == hi == 0``.
    """
    c = centers(t).values
    keep_r = c.sum(axis=1) > 0
    keep_c = c.sum(axis=0) > 0
    if keep_r.all() and keep_c.all():
        return t
    dropped = [t.row_labels[i] for i in np.flatnonzero(~keep_r)]
    dropped += [t.col_labels[j] for j in np.flatnonzero(~keep_c)]
    warnings.warn(f"dropping empty modalities: {', '.join(dropped)}", stacklevel=2)
    if not keep_r.any() or not keep_c.any():
        raise AnalysisError("table is empty after dropping zero rows/columns")
    return IntervalTable(
        tuple(np.asarray(t.row_labels, dtype=object)[keep_r]),
        tuple(np.asarray(t.col_labels, dtype=object)[keep_c]),
        t.lo[np.ix_(keep_r, keep_c)],
        t.hi[np.ix_(keep_r, keep_c)],
    )


def require_analyzable(t: CenterTable) -> Diagnostics:
    diag = validate_for_analysis(t)
    if not diag.analyzable:
        raise AnalysisError("table not analyzable: " + "; ".join(diag.problems))
    return diag


__all__ = [
    "IntervalTable",
    "CenterTable",
    "Diagnostics",
    "interval_contingency",
    "brute_force_interval_contingency",
    "centers",
    "validate_for_analysis",
    "drop_empty",
]
