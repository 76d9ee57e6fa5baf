"""Classic correspondence analysis of a nonnegative two-way table.

Notation follows the usual CA conventions: ``F`` is the table of relative
frequencies, ``r`` and ``c`` its row and column margins. Axis vectors are
eigenvectors of

    S = F^T D_r^{-1} F D_c^{-1}    (column space, vectors ``u``)
    T = F D_c^{-1} F^T D_r^{-1}    (row space, vectors ``v``)

with the trivial eigenvalue 1 removed. They are obtained from the SVD of
the standardized residuals ``A = D_r^{-1/2} (F - r c^T) D_c^{-1/2}``
restricted to the complements of ``sqrt(r)`` and ``sqrt(c)``:

    lambda = sigma^2,  u = D_c^{1/2} V,  v = D_r^{1/2} U

so that ``u^T D_c^{-1} u = v^T D_r^{-1} v = 1``. Factorial coordinates are
the transition formulas

    psi_i = sum_j f_ij / (r_i c_j) u_j,   phi_j = sum_i f_ij / (r_i c_j) v_i

which are principal coordinates with weighted variance ``lambda``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import AnalysisError, SymCAError
from .interval_table import CenterTable, require_analyzable


def fsum_rows(terms: np.ndarray) -> np.ndarray:
    """Correctly rounded row sums.

    Correct rounding makes the sum monotone in every term, which keeps
    center coordinates inside rectangle bounds to the last bit.
    """
    return np.array([math.fsum(row) for row in terms], dtype=np.float64)


def transition_terms(numerators, row_margins, col_margins) -> np.ndarray:
    """``numerators[i, j] / (row_margins[i] * col_margins[j])``."""
    return np.asarray(numerators, dtype=np.float64) / np.outer(row_margins, col_margins)


@dataclass(frozen=True, eq=False)
class CAResult:
    """Output of :func:`correspondence_analysis`.

    Per-axis arrays are indexed ``[axis, modality]``: ``row_coords[a, i]``
    is the coordinate of row ``i`` on axis ``a``.
    """

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    grand_total: float
    rel_freq: np.ndarray
    row_margins: np.ndarray
    col_margins: np.ndarray
    eigenvalues: np.ndarray
    col_axis_vectors: np.ndarray  # u, shape (n_axes, p)
    row_axis_vectors: np.ndarray  # v, shape (n_axes, n)
    row_coords: np.ndarray  # psi via transition formula, (n_axes, n)
    col_coords: np.ndarray  # phi via transition formula, (n_axes, p)
    solver_row_coords: np.ndarray  # sigma * D_r^{-1/2} U
    solver_col_coords: np.ndarray  # sigma * D_c^{-1/2} V
    total_inertia: float

    @property
    def n(self) -> int:
        return self.rel_freq.shape[0]

    @property
    def p(self) -> int:
        return self.rel_freq.shape[1]

    @property
    def n_axes(self) -> int:
        return len(self.eigenvalues)

    @property
    def inertia_share(self) -> np.ndarray:
        if self.total_inertia <= 0:
            return np.zeros_like(self.eigenvalues)
        return self.eigenvalues / self.total_inertia

    def check_axis(self, axis: int) -> None:
        if not (0 <= axis < self.n_axes):
            raise SymCAError(f"axis {axis} not retained (n_axes={self.n_axes})")


def _complement_basis(w: np.ndarray) -> np.ndarray:
    """Orthonormal basis (columns) of the complement of unit vector ``w``."""
    k = len(w)
    q, _ = np.linalg.qr(np.column_stack([w, np.eye(k)]))
    return q[:, 1:]


def _frequencies(k: CenterTable):
    f = k.values / k.values.sum()
    return f, f.sum(axis=1), f.sum(axis=0)


def correspondence_analysis(k: CenterTable, n_axes: int | None = None) -> CAResult:
    """Run correspondence analysis on ``k``.

    Parameters
    ----------
    k : CenterTable
        Nonnegative table with positive margins and at least two rows and
        two columns.
    n_axes : int, optional
        Number of non-trivial axes to keep. Defaults to all
        ``min(n - 1, p - 1)``.
    """
    require_analyzable(k)
    f, r, c = _frequencies(k)
    n, p = f.shape
    max_axes = min(n - 1, p - 1)
    if n_axes is None:
        n_axes = max_axes
    if n_axes < 1:
        raise SymCAError(f"n_axes must be >= 1, got {n_axes}")
    n_axes = min(n_axes, max_axes)

    sr, sc = np.sqrt(r), np.sqrt(c)
    a = (f - np.outer(r, c)) / np.outer(sr, sc)
    P = _complement_basis(sr)
    Q = _complement_basis(sc)
    try:
        uu, sigma, wt = np.linalg.svd(P.T @ a @ Q, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise AnalysisError(f"SVD did not converge: {exc}") from exc
    # svd returns descending singular values; argsort(kind="stable") keeps that order on ties
    order = np.argsort(-sigma, kind="stable")[:n_axes]
    sigma = sigma[order]
    U = (P @ uu[:, order]).T  # (n_axes, n)
    V = (Q @ wt.T[:, order]).T  # (n_axes, p)

    u = V * sc
    v = U * sr
    for a_idx in range(n_axes):
        lead = int(np.argmax(np.abs(u[a_idx])))
        if u[a_idx, lead] < 0:
            u[a_idx] *= -1
            v[a_idx] *= -1
            U[a_idx] *= -1
            V[a_idx] *= -1

    ratio = transition_terms(f, r, c)
    row_coords = np.stack([fsum_rows(ratio * u[a_idx]) for a_idx in range(n_axes)])
    col_coords = np.stack([fsum_rows(ratio.T * v[a_idx]) for a_idx in range(n_axes)])

    eigenvalues = sigma**2
    return CAResult(
        row_labels=k.row_labels,
        col_labels=k.col_labels,
        grand_total=float(k.values.sum()),
        rel_freq=f,
        row_margins=r,
        col_margins=c,
        eigenvalues=eigenvalues,
        col_axis_vectors=u,
        row_axis_vectors=v,
        row_coords=row_coords,
        col_coords=col_coords,
        solver_row_coords=sigma[:, None] * U / sr,
        solver_col_coords=sigma[:, None] * V / sc,
        total_inertia=float(np.sum(a**2)),
    )


def row_profiles(k: CenterTable) -> np.ndarray:
    """Rows of ``k`` divided by their sums, shape ``(n, p)``."""
    sums = k.values.sum(axis=1)
    zero = np.flatnonzero(sums == 0)
    if len(zero):
        raise AnalysisError(f"zero row sum at row {zero[0]}")
    return k.values / sums[:, None]


def column_profiles(k: CenterTable) -> np.ndarray:
    """Columns of ``k`` divided by their sums, shape ``(p, n)``."""
    return row_profiles(k.transpose())


def _freqs_of(obj):
    if isinstance(obj, CAResult):
        return obj.rel_freq, obj.row_margins, obj.col_margins
    require_analyzable(obj)
    return _frequencies(obj)


def chi2_row_distance(obj, i: int, k: int) -> float:
    """Squared chi-square distance between row profiles ``i`` and ``k``.

    ``obj`` is a :class:`CenterTable` or a :class:`CAResult`.
    """
    f, r, c = _freqs_of(obj)
    n = f.shape[0]
    for idx in (i, k):
        if not (0 <= idx < n):
            raise IndexError(f"row index {idx} out of range [0, {n})")
    diff = f[i] / r[i] - f[k] / r[k]
    return float(np.sum(diff**2 / c))


def chi2_col_distance(obj, j: int, s: int) -> float:
    """Squared chi-square distance between column profiles ``j`` and ``s``."""
    f, r, c = _freqs_of(obj)
    p = f.shape[1]
    for idx in (j, s):
        if not (0 <= idx < p):
            raise IndexError(f"column index {idx} out of range [0, {p})")
    diff = f[:, j] / c[j] - f[:, s] / c[s]
    return float(np.sum(diff**2 / r))


def total_inertia(k: CenterTable) -> float:
    """Chi-square statistic over grand total, summed cell by cell."""
    require_analyzable(k)
    f, r, c = _frequencies(k)
    e = np.outer(r, c)
    return float(np.sum((f - e) ** 2 / e))


def supplementary_projection(
    numerators, result: CAResult, index: int, axis: int, side: str
) -> float:
    """Project a profile given by its numerators onto a factorial axis.

    For ``side="column"``, ``numerators`` has length ``n`` and stands in for
    column ``index`` of the relative-frequency table; the result is
    ``sum_i z_i / (r_i c_index) v_i``. ``side="row"`` mirrors this with
    ``u``. Margins are always those of the analysed table.
    """
    result.check_axis(axis)
    z = np.asarray(numerators, dtype=np.float64)
    if side == "column":
        if z.shape != (result.n,):
            raise SymCAError(f"expected {result.n} numerators, got shape {z.shape}")
        if not (0 <= index < result.p):
            raise IndexError(f"column index {index} out of range")
        weights = result.row_axis_vectors[axis] / (result.row_margins * result.col_margins[index])
    elif side == "row":
        if z.shape != (result.p,):
            raise SymCAError(f"expected {result.p} numerators, got shape {z.shape}")
        if not (0 <= index < result.n):
            raise IndexError(f"row index {index} out of range")
        weights = result.col_axis_vectors[axis] / (result.row_margins[index] * result.col_margins)
    else:
        raise SymCAError(f"side must be 'row' or 'column', got {side!r}")
    return float(np.dot(z, weights))
