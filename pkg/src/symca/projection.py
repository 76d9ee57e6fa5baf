"""Rectangle projections of interval profiles on the factorial axes.

Every interval profile is a hypercube. Projecting it as a supplementary
element onto an axis gives a linear function of the cube's coordinates,
so its extremes sit on vertices and are found by picking, term by term,
the lower or upper bound according to the sign of the axis weight.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .classic_ca import (
    CAResult,
    correspondence_analysis,
    fsum_rows,
    supplementary_projection,
    transition_terms,
)
from .errors import EnumerationTooLarge, SymCAError
from .interval_table import IntervalTable, centers, drop_empty as _drop_empty, require_analyzable

DEFAULT_VERTEX_LIMIT = 2**20

SIDES = ("row", "column")


@dataclass(frozen=True, eq=False)
class IntervalProfileMatrix:
    """Interval profiles ``[lower, upper]``, one profile per line.

    Row side: shape ``(n, p)``, bounds divided by the row margins of the
    center table. Column side: shape ``(p, n)``, divided by its column
    margins.
    """

    side: str
    lower: np.ndarray
    upper: np.ndarray
    center: np.ndarray


def _check_side(side):
    if side not in SIDES:
        raise SymCAError(f"side must be 'row' or 'column', got {side!r}")


def _scaled_bounds(t: IntervalTable, grand_total: float):
    return t.lo / grand_total, t.hi / grand_total


def interval_profiles(t: IntervalTable, side: str) -> IntervalProfileMatrix:
    _check_side(side)
    k = centers(t)
    require_analyzable(k)
    kc = k.values.sum()
    f = k.values / kc
    flo, fhi = _scaled_bounds(t, kc)
    if side == "row":
        r = f.sum(axis=1)[:, None]
        return IntervalProfileMatrix(side, flo / r, fhi / r, f / r)
    c = f.sum(axis=0)[:, None]
    return IntervalProfileMatrix(side, flo.T / c, fhi.T / c, f.T / c)


def _check_table(t: IntervalTable, ca: CAResult):
    if t.shape != (ca.n, ca.p):
        raise SymCAError(f"table shape {t.shape} does not match analysis ({ca.n}, {ca.p})")


def _bound_terms(t: IntervalTable, ca: CAResult, side: str):
    """Per-term ratios ``f_lo / (r c)`` and ``f_hi / (r c)``, one profile per line."""
    flo, fhi = _scaled_bounds(t, ca.grand_total)
    lo = transition_terms(flo, ca.row_margins, ca.col_margins)
    hi = transition_terms(fhi, ca.row_margins, ca.col_margins)
    if side == "row":
        return lo, hi, ca.col_axis_vectors
    return lo.T, hi.T, ca.row_axis_vectors


def _extremes(lo, hi, w):
    """Sign-partitioned sums over the last axis; ``w`` broadcasts against ``lo``."""
    neg = w < 0
    pos = w > 0
    zero = np.zeros_like(lo)
    low = np.where(neg, hi, np.where(pos, lo, zero)) * w
    high = np.where(neg, lo, np.where(pos, hi, zero)) * w
    return fsum_rows(low), fsum_rows(high)


def _rectangle(t, ca, index, axis, side):
    _check_table(t, ca)
    ca.check_axis(axis)
    lo, hi, w = _bound_terms(t, ca, side)
    size = lo.shape[0]
    if not (0 <= index < size):
        raise IndexError(f"{side} index {index} out of range [0, {size})")
    a, b = _extremes(lo[index : index + 1], hi[index : index + 1], w[axis])
    return float(a[0]), float(b[0])


def column_rectangle(t: IntervalTable, ca: CAResult, j: int, axis: int) -> tuple[float, float]:
    """Extremes of column ``j``'s interval profile projected on ``axis``.

    Lower bound takes upper cell bounds where ``v`` is negative and lower
    bounds where it is positive; the upper bound does the opposite.
    """
    return _rectangle(t, ca, j, axis, "column")


def row_rectangle(t: IntervalTable, ca: CAResult, i: int, axis: int) -> tuple[float, float]:
    """Extremes of row ``i``'s interval profile projected on ``axis`` (weights ``u``)."""
    return _rectangle(t, ca, i, axis, "row")


def vertex_projection_oracle(
    t: IntervalTable,
    ca: CAResult,
    index: int,
    axis: int,
    side: str,
    limit: int = DEFAULT_VERTEX_LIMIT,
) -> tuple[float, float]:
    """Min and max projection over every vertex of one interval hypercube.

    Brute force, exponential in the profile length.
    """
    _check_side(side)
    _check_table(t, ca)
    ca.check_axis(axis)
    flo, fhi = _scaled_bounds(t, ca.grand_total)
    if side == "column":
        lo, hi = flo[:, index], fhi[:, index]
    else:
        lo, hi = flo[index], fhi[index]
    count = 2 ** len(lo)
    if count > limit:
        raise EnumerationTooLarge(count, limit, "vertices")
    values = [
        supplementary_projection(np.array(z), ca, index, axis, side)
        for z in itertools.product(*zip(lo, hi))
    ]
    return min(values), max(values)


@dataclass(frozen=True, eq=False)
class SymCAResult:
    """Classic CA of the centers plus per-axis rectangles.

    ``row_lo[a, i]`` / ``row_hi[a, i]`` bound row ``i`` on axis ``a``;
    ``col_lo`` / ``col_hi`` likewise for columns. A rectangle on the plane
    of axes ``(a, b)`` is the product of the two per-axis intervals.
    """

    table: IntervalTable
    ca: CAResult
    row_lo: np.ndarray
    row_hi: np.ndarray
    col_lo: np.ndarray
    col_hi: np.ndarray

    @property
    def row_labels(self):
        return self.ca.row_labels

    @property
    def col_labels(self):
        return self.ca.col_labels

    @property
    def n_axes(self) -> int:
        return self.ca.n_axes

    def row_rect(self, axis: int, i: int) -> tuple[float, float]:
        return float(self.row_lo[axis, i]), float(self.row_hi[axis, i])

    def col_rect(self, axis: int, j: int) -> tuple[float, float]:
        return float(self.col_lo[axis, j]), float(self.col_hi[axis, j])

    def plane_area(self, side: str, index: int, axes=(0, 1)) -> float:
        _check_side(side)
        lo, hi = (self.row_lo, self.row_hi) if side == "row" else (self.col_lo, self.col_hi)
        a, b = axes
        return float((hi[a, index] - lo[a, index]) * (hi[b, index] - lo[b, index]))


def all_rectangles(t: IntervalTable, ca: CAResult):
    """Row and column bounds on every retained axis, ``(row_lo, row_hi, col_lo, col_hi)``."""
    _check_table(t, ca)
    out = []
    for side in SIDES:
        lo, hi, w = _bound_terms(t, ca, side)
        pairs = [_extremes(lo, hi, w[a]) for a in range(ca.n_axes)]
        out.append(np.stack([p[0] for p in pairs]))
        out.append(np.stack([p[1] for p in pairs]))
    return tuple(out)


def symca(t: IntervalTable, n_axes: int | None = None, drop_empty: bool = False) -> SymCAResult:
    """Centers, then classic CA, then rectangles for every modality and axis."""
    if drop_empty:
        t = _drop_empty(t)
    ca = correspondence_analysis(centers(t), n_axes)
    row_lo, row_hi, col_lo, col_hi = all_rectangles(t, ca)
    return SymCAResult(t, ca, row_lo, row_hi, col_lo, col_hi)
