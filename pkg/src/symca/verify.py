"""Seeded random instances and the brute-force oracle suites.

Every instance ``k`` of a suite draws from ``numpy.random.default_rng((seed,
suite_tag, k))``, so a failure is reproduced from the seed and the instance
index alone.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .classic_ca import correspondence_analysis
from .interval_table import (
    IntervalTable,
    brute_force_interval_contingency,
    centers,
    interval_contingency,
    validate_for_analysis,
)
from .multivalued import DEFAULT_ENUMERATION_LIMIT, MultiValuedVariable
from .projection import DEFAULT_VERTEX_LIMIT, symca, vertex_projection_oracle

RECT_TOL = 1e-10
EXACT_TOL = 1e-12

_TAGS = {"theorem1": 1, "rectangles": 2, "theorem4": 3}


def instance_rng(seed: int, suite: str, k: int) -> np.random.Generator:
    return np.random.default_rng((seed, _TAGS[suite], k))


def random_variable(
    rng: np.random.Generator,
    m: int,
    n_modalities=(2, 4),
    set_sizes=(1, 3),
    name: str = "",
) -> MultiValuedVariable:
    q = int(rng.integers(n_modalities[0], n_modalities[1] + 1))
    obs = []
    for _ in range(m):
        size = int(rng.integers(set_sizes[0], min(set_sizes[1], q) + 1))
        obs.append(frozenset(int(v) for v in rng.choice(q, size=size, replace=False)))
    return MultiValuedVariable(name, tuple(f"{name}{j}" for j in range(q)), tuple(obs))


def random_survey(rng, max_individuals=6, n_modalities=(2, 4), set_sizes=(1, 3)):
    m = int(rng.integers(1, max_individuals + 1))
    x = random_variable(rng, m, n_modalities, set_sizes, "x")
    y = random_variable(rng, m, n_modalities, set_sizes, "y")
    return x, y


def random_interval_table(
    rng: np.random.Generator, max_rows=5, max_cols=5, max_count=20, max_width=10
) -> IntervalTable:
    """Random table with positive center margins and at least two rows and columns."""
    while True:
        n = int(rng.integers(2, max_rows + 1))
        p = int(rng.integers(2, max_cols + 1))
        lo = rng.integers(0, max_count + 1, size=(n, p))
        hi = lo + rng.integers(0, max_width + 1, size=(n, p))
        t = IntervalTable.from_cells(np.stack([lo, hi], axis=-1))
        if validate_for_analysis(centers(t)).analyzable:
            return t


def random_degenerate_table(rng: np.random.Generator, max_rows=5, max_cols=5, max_count=30):
    while True:
        n = int(rng.integers(2, max_rows + 1))
        p = int(rng.integers(2, max_cols + 1))
        t = IntervalTable.degenerate(rng.integers(0, max_count + 1, size=(n, p)))
        if validate_for_analysis(centers(t)).analyzable:
            return t


@dataclass
class SuiteReport:
    name: str
    instances: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name}: {self.instances} instances, {self.checks} checks, "
            f"{len(self.failures)} failures ({self.seconds:.2f}s)"
        )


def check_theorem1(x, y, limit=DEFAULT_ENUMERATION_LIMIT) -> list[str]:
    fast = interval_contingency(x, y)
    slow = brute_force_interval_contingency(x, y, limit)
    problems = []
    if not np.array_equal(fast.lo, slow.lo):
        problems.append(f"lower bounds differ: fast={fast.lo.tolist()} brute={slow.lo.tolist()}")
    if not np.array_equal(fast.hi, slow.hi):
        problems.append(f"upper bounds differ: fast={fast.hi.tolist()} brute={slow.hi.tolist()}")
    return problems


def check_rectangles(t: IntervalTable, tol=RECT_TOL, limit=DEFAULT_VERTEX_LIMIT):
    """Closed-form bounds vs vertex enumeration, plus center containment.

    Returns ``(n_checks, problems)``.
    """
    res = symca(t)
    ca = res.ca
    problems = []
    checks = 0
    for a in range(ca.n_axes):
        for side, lo, hi, coords in (
            ("row", res.row_lo, res.row_hi, ca.row_coords),
            ("column", res.col_lo, res.col_hi, ca.col_coords),
        ):
            for idx in range(lo.shape[1]):
                vmin, vmax = vertex_projection_oracle(t, ca, idx, a, side, limit)
                checks += 1
                if abs(vmin - lo[a, idx]) > tol or abs(vmax - hi[a, idx]) > tol:
                    problems.append(
                        f"{side} {idx} axis {a}: closed form [{lo[a, idx]!r}, {hi[a, idx]!r}] "
                        f"vs vertices [{vmin!r}, {vmax!r}]"
                    )
                if not (lo[a, idx] <= coords[a, idx] <= hi[a, idx]):
                    problems.append(
                        f"{side} {idx} axis {a}: center {coords[a, idx]!r} outside "
                        f"[{lo[a, idx]!r}, {hi[a, idx]!r}]"
                    )
    return checks, problems


def check_theorem4(t: IntervalTable, tol=EXACT_TOL):
    res = symca(t)
    classic = correspondence_analysis(centers(t))
    problems = []
    d_rows = np.max(np.abs(res.ca.row_coords - classic.row_coords))
    d_cols = np.max(np.abs(res.ca.col_coords - classic.col_coords))
    if max(d_rows, d_cols) > tol:
        problems.append(f"coordinates differ from classic CA by {max(d_rows, d_cols):.3e}")
    width = max(np.max(res.row_hi - res.row_lo), np.max(res.col_hi - res.col_lo))
    if width > tol:
        problems.append(f"rectangle width {width:.3e} on a degenerate table")
    if (
        np.any(res.row_lo > res.ca.row_coords)
        or np.any(res.row_hi < res.ca.row_coords)
        or np.any(res.col_lo > res.ca.col_coords)
        or np.any(res.col_hi < res.ca.col_coords)
    ):
        problems.append("center outside its (degenerate) rectangle")
    return problems


def run_theorem1(seed=0, instances=200, max_individuals=6, limit=DEFAULT_ENUMERATION_LIMIT):
    rep = SuiteReport("theorem1 fast-vs-brute")
    start = time.perf_counter()
    for k in range(instances):
        x, y = random_survey(instance_rng(seed, "theorem1", k), max_individuals)
        rep.instances += 1
        rep.checks += 1
        for msg in check_theorem1(x, y, limit):
            rep.failures.append(f"seed={seed} instance={k}: {msg}")
    rep.seconds = time.perf_counter() - start
    return rep


def run_rectangles(seed=0, instances=100, max_size=5, limit=DEFAULT_VERTEX_LIMIT):
    rep = SuiteReport("rectangle-vs-vertex")
    start = time.perf_counter()
    for k in range(instances):
        t = random_interval_table(instance_rng(seed, "rectangles", k), max_size, max_size)
        rep.instances += 1
        checks, problems = check_rectangles(t, limit=limit)
        rep.checks += checks
        rep.failures += [f"seed={seed} instance={k}: {msg}" for msg in problems]
    rep.seconds = time.perf_counter() - start
    return rep


def run_theorem4(seed=0, instances=50, max_size=5):
    rep = SuiteReport("theorem4 degenerate tables")
    start = time.perf_counter()
    for k in range(instances):
        t = random_degenerate_table(instance_rng(seed, "theorem4", k), max_size, max_size)
        rep.instances += 1
        rep.checks += 1
        rep.failures += [f"seed={seed} instance={k}: {msg}" for msg in check_theorem4(t)]
    rep.seconds = time.perf_counter() - start
    return rep


def run_all(seed=0, instances=200, max_individuals=6, limit=DEFAULT_ENUMERATION_LIMIT):
    """Run the three suites; ``instances`` sizes the first, the others scale down."""
    return [
        run_theorem1(seed, instances, max_individuals, limit),
        run_rectangles(seed, max(1, instances // 2)),
        run_theorem4(seed, max(1, instances // 4)),
    ]
