"""Command-line driver.

    symca build-table --survey s.csv -o table.json
    symca analyze --table table.json [--axes N] [--drop-empty] -o result.json
    symca plot --result result.json [--axes 0,1] -o plane.svg
    symca verify [--seed S] [--instances N] [--max-individuals M] [--limit L]

Exit status: 0 on success, 1 on invalid input, 2 when a verification
suite fails.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from . import fileio
from .errors import SymCAError
from .interval_table import interval_contingency
from .multivalued import DEFAULT_ENUMERATION_LIMIT, MultiValuedVariable, parse_observations
from .projection import symca
from .svg import PlotSpec, render_principal_plane_svg
from .verify import run_all

EXIT_OK, EXIT_INVALID, EXIT_VERIFY_FAILED = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    inputs: tuple[str, ...] = ()
    output: str | None = None
    n_axes: int | None = None
    plot_axes: tuple[int, int] = (0, 1)
    limit: int = DEFAULT_ENUMERATION_LIMIT
    drop_empty: bool = False
    seed: int = 0
    instances: int = 200
    max_individuals: int = 6
    row_order: tuple[str, ...] | None = None
    col_order: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.limit < 1:
            raise SymCAError(f"guard limit must be >= 1, got {self.limit}")
        if self.subcommand != "verify":
            if not self.inputs or not all(self.inputs):
                raise SymCAError(f"{self.subcommand}: input path required")
            if not self.output:
                raise SymCAError(f"{self.subcommand}: output path required")
        if self.n_axes is not None and self.n_axes < 1:
            raise SymCAError(f"--axes must be >= 1, got {self.n_axes}")
        if self.instances < 1 or self.max_individuals < 1:
            raise SymCAError("--instances and --max-individuals must be >= 1")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SymCAError(message)


def _axis_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two comma-separated integers, got {text!r}")
    return a, b


def _label_list(text: str) -> tuple[str, ...]:
    return tuple(s.strip() for s in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="symca", description="Correspondence analysis for multi-valued variables.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    b = sub.add_parser("build-table", help="survey CSV -> interval contingency table")
    b.add_argument("--survey", required=True)
    b.add_argument("-o", "--output", required=True)
    b.add_argument("--row-order", type=_label_list, help="comma-separated modality order of the first variable")
    b.add_argument("--col-order", type=_label_list, help="comma-separated modality order of the second variable")

    a = sub.add_parser("analyze", help="interval table -> SymCA result JSON")
    a.add_argument("--table", required=True)
    a.add_argument("--axes", type=int, dest="n_axes")
    a.add_argument("--drop-empty", action="store_true")
    a.add_argument("-o", "--output", required=True)

    pl = sub.add_parser("plot", help="result JSON -> SVG of a factorial plane")
    pl.add_argument("--result", required=True)
    pl.add_argument("--axes", type=_axis_pair, default=(0, 1), dest="plot_axes")
    pl.add_argument("-o", "--output", required=True)

    v = sub.add_parser("verify", help="run the brute-force oracle suites")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--instances", type=int, default=200)
    v.add_argument("--max-individuals", type=int, default=6)
    v.add_argument("--limit", type=int, default=DEFAULT_ENUMERATION_LIMIT)
    return p


def parse_config(argv) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    cmd = ns.pop("subcommand")
    inputs = tuple(ns.pop(k) for k in ("survey", "table", "result") if k in ns)
    return RunConfig(subcommand=cmd, inputs=inputs, **ns)


def _reorder(v: MultiValuedVariable, order) -> MultiValuedVariable:
    if order is None:
        return v
    if sorted(order) != sorted(v.modalities):
        raise SymCAError(f"order {list(order)} is not a permutation of {list(v.modalities)}")
    return parse_observations(v.labels(), vocabulary=order, name=v.name)


def _write(path: str, data: bytes):
    Path(path).write_bytes(data)


def _build_table(cfg: RunConfig):
    x, y = fileio.read_survey_csv(Path(cfg.inputs[0]).read_bytes())
    x, y = _reorder(x, cfg.row_order), _reorder(y, cfg.col_order)
    table = interval_contingency(x, y)
    _write(cfg.output, fileio.write_interval_table(table, fileio.table_format_for(cfg.output)))


def _analyze(cfg: RunConfig):
    path = cfg.inputs[0]
    table = fileio.read_interval_table(Path(path).read_bytes(), fileio.table_format_for(path))
    result = symca(table, cfg.n_axes, drop_empty=cfg.drop_empty)
    _write(cfg.output, fileio.write_result_json(result))


def _plot(cfg: RunConfig):
    summary = fileio.read_result_json(Path(cfg.inputs[0]).read_bytes())
    svg = render_principal_plane_svg(summary, PlotSpec(axes=cfg.plot_axes))
    _write(cfg.output, svg)


def _verify(cfg: RunConfig) -> int:
    reports = run_all(cfg.seed, cfg.instances, cfg.max_individuals, cfg.limit)
    for rep in reports:
        print(rep.line())
        for msg in rep.failures[:20]:
            print(f"  {msg}")
    ok = all(r.passed for r in reports)
    print("ALL SUITES PASSED" if ok else "VERIFICATION FAILED")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def run(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
        if cfg.subcommand == "verify":
            return _verify(cfg)
        {"build-table": _build_table, "analyze": _analyze, "plot": _plot}[cfg.subcommand](cfg)
    except (SymCAError, OSError) as exc:
        print(f"symca: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def main():
    sys.exit(run())
