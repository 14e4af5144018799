"""Command-line interface: ``solowline {evaluate,optimize,reduce,certify-kernel,reproduce}``.

Exit codes: 0 success, 2 parse/argument error, 3 numerical degeneracy,
4 golden mismatch.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import characterization as chz
from .diversity import (
    LineInstance,
    diversity_from_similarity,
    diversity_gap_sum,
    gap_excess,
    l1_distance_matrix,
    similarity_from_distances,
)
from .dp import solve_with_table
from .errors import (
    ArgumentError,
    DegenerateTriple,
    DomainError,
    GoldenMismatch,
    InstanceTooLarge,
    NotOrdered,
    ParseError,
    SingularMatrix,
)
from .io import read_points, to_csv, to_json
from .kernels import BUILTIN_KERNELS, KernelFunction
from .l1 import OrderedCurveSample, reduce
from .reproduce import EXAMPLES, reproduce

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_GOLDEN = 0, 2, 3, 4
COMMANDS = ("evaluate", "optimize", "reduce", "certify-kernel", "reproduce")


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    output_path: str | None = None
    beta: float = 1.0
    k: int | None = None
    format: str = "json"
    example: str | None = None
    kernel: str = "exponential"
    sort: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ArgumentError(f"unknown command {self.command!r}")
        if not self.beta > 0:
            raise ArgumentError(f"--beta must be positive, got {self.beta}")
        if self.command == "optimize" and self.k is None:
            raise ArgumentError("optimize needs --k")
        if self.format not in ("csv", "json"):
            raise ArgumentError(f"--format must be csv or json, got {self.format!r}")
        if self.command == "reproduce" and self.example not in EXAMPLES:
            raise ArgumentError(f"reproduce needs --example {{{','.join(EXAMPLES)}}}")


def _line_or_reduction(points: np.ndarray, sort: bool):
    """Line instance for ``points`` plus the map back to input rows (0-based)."""
    if points.shape[1] == 1:
        x = points[:, 0]
        if sort:
            order = np.argsort(x, kind="stable")
            return LineInstance(x[order]), tuple(int(i) for i in order)
        return LineInstance(x), tuple(range(x.size))
    red = reduce(OrderedCurveSample.from_points(points, sort=sort), anchored=False)
    return red.instance, red.index_map


def cmd_evaluate(cfg: RunConfig) -> tuple[dict, list[list]]:
    points = read_points(cfg.input_path)
    kernel = KernelFunction.exponential(cfg.beta)
    matrix = diversity_from_similarity(similarity_from_distances(l1_distance_matrix(points), kernel))
    report = {"n": int(points.shape[0]), "m": int(points.shape[1]), "beta": cfg.beta,
              "value_matrix": matrix.value}
    try:
        if points.shape[1] == 1:
            line = LineInstance(np.sort(points[:, 0]))
        else:
            line = reduce(OrderedCurveSample.from_points(points, sort=cfg.sort), anchored=False).instance
    except (NotOrdered, ArgumentError) as exc:
        report.update(value_gap_sum=None, abs_difference=None, gap_sum_unavailable=str(exc),
                      gaps=[], gap_contributions=[])
    else:
        gs = diversity_gap_sum(line, cfg.beta)
        gaps = np.diff(line.coords)
        report.update(value_gap_sum=gs.value, abs_difference=abs(gs.value - matrix.value),
                      gaps=gaps.tolist(), gap_contributions=gap_excess(gaps, cfg.beta).tolist())
    rows = [["quantity", "value"]]
    for key in ("n", "m", "beta", "value_matrix", "value_gap_sum", "abs_difference"):
        rows.append([key, report[key] if report[key] is not None else ""])
    rows += [["gap_contribution", c] for c in report["gap_contributions"]]
    return report, rows


def cmd_optimize(cfg: RunConfig) -> tuple[dict, list[list]]:
    points = read_points(cfg.input_path)
    line, rows_map = _line_or_reduction(points, cfg.sort)
    sel, table = solve_with_table(line, cfg.k, cfg.beta)
    input_rows = [rows_map[i - 1] for i in sel.indices]
    report = {
        "n": len(line),
        "k": cfg.k,
        "beta": cfg.beta,
        "indices": [r + 1 for r in input_rows],
        "line_coordinates": sel.coords.tolist(),
        "points": points[input_rows].tolist() if points.shape[1] > 1 else sel.coords.tolist(),
        "diversity": sel.value.value,
        "target_spacing": sel.target_spacing,
        "gaps": sel.gaps.gaps.tolist(),
        "max_gap_deviation": sel.max_gap_deviation,
        "states": table.states,
        "transitions": table.transitions,
    }
    rows = [["index", "line_coordinate"] + [f"x{j + 1}" for j in range(points.shape[1])]]
    for idx, c in zip(report["indices"], report["line_coordinates"]):
        rows.append([idx, c] + [float(v) for v in points[idx - 1]])
    return report, rows


def cmd_reduce(cfg: RunConfig) -> tuple[dict, list[list]]:
    points = read_points(cfg.input_path)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        red = reduce(OrderedCurveSample.from_points(points, sort=cfg.sort), anchored=False)
    report = {
        "n": len(red.instance),
        "sigma": list(red.sample.sigma),
        "length": red.length,
        "coordinates": red.instance.coords.tolist(),
        "index_map": [i + 1 for i in red.index_map],
        "collapsed": [[a + 1, b + 1] for a, b in red.collapsed],
    }
    rows = [["index", "coordinate"]] + [[i, c] for i, c in zip(report["index_map"], report["coordinates"])]
    return report, rows


def cmd_certify_kernel(cfg: RunConfig) -> tuple[dict, list[list]]:
    if cfg.kernel not in BUILTIN_KERNELS:
        raise ArgumentError(f"unknown kernel {cfg.kernel!r}; choose from {sorted(BUILTIN_KERNELS)}")
    kernel = KernelFunction.exponential(cfg.beta) if cfg.kernel == "exponential" else BUILTIN_KERNELS[cfg.kernel]()
    rep = chz.certify_kernel(kernel)
    report = rep.to_dict()
    report["fitted_beta"] = chz.fit_beta_from_unit_value(kernel)
    report["cauchy_deviation"] = chz.cauchy_linearity_check(kernel)
    rows = [["quantity", "value"]] + [[k, v if v is not None else ""] for k, v in report.items()
                                      if not isinstance(v, list)]
    return report, rows


def cmd_reproduce(cfg: RunConfig) -> tuple[dict, list[list]]:
    bundle = reproduce(cfg.example)
    report = bundle.report()
    if cfg.output_path:
        out = Path(cfg.output_path)
        out.mkdir(parents=True, exist_ok=True)
        (out / "summary.json").write_text(to_json(report))
        (out / "plot_data.csv").write_text(to_csv(bundle.plot_rows()))
    if not bundle.passed:
        bad = bundle.failures[0]
        raise GoldenMismatch(bad.quantity, bad.expected, bad.actual)
    rows = [["quantity", "passed"]] + [[c.quantity, int(c.passed)] for c in bundle.checks]
    return report, rows


HANDLERS = {
    "evaluate": cmd_evaluate,
    "optimize": cmd_optimize,
    "reduce": cmd_reduce,
    "certify-kernel": cmd_certify_kernel,
    "reproduce": cmd_reproduce,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="solowline", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--beta", type=float, default=1.0)
        p.add_argument("--format", choices=("csv", "json"), default="json", help="output format")
        p.add_argument("--output", dest="output_path", help="output file (directory for reproduce)")
        if name != "reproduce" and name != "certify-kernel":
            p.add_argument("--input", dest="input_path", help="CSV or .json file; stdin if omitted")
            p.add_argument("--sort", action="store_true", help="sort rows by the first varying coordinate")
        if name == "optimize":
            p.add_argument("--k", type=int, required=True)
        if name == "reproduce":
            p.add_argument("--example", choices=EXAMPLES, required=True)
        if name == "certify-kernel":
            p.add_argument("--kernel", choices=sorted(BUILTIN_KERNELS), default="exponential")
    return parser


def run(cfg: RunConfig) -> str:
    report, rows = HANDLERS[cfg.command](cfg)
    text = to_json(report) if cfg.format == "json" else to_csv(rows)
    if cfg.output_path and cfg.command != "reproduce":
        Path(cfg.output_path).write_text(text)
        return ""
    return text


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(**vars(args))
        sys.stdout.write(run(cfg))
    except GoldenMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GOLDEN
    except (SingularMatrix, DegenerateTriple, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ParseError, ArgumentError, NotOrdered, InstanceTooLarge, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
