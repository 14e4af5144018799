"""Regenerate the dense parabola-front and ZDT3 selections and compare them
with their reference values."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dp import solve_with_table, state_transition_counts
from .l1 import generate_parabola_front, generate_zdt3_front, reduce
from .line_optimal import optimum_value

DIVERSITY_ATOL = 1e-6
PRINTED_6DP_ATOL = 1e-6  # values printed with six decimals
PRINTED_9DP_ATOL = 1e-8

DENSE_FRONT = {
    "n": 70,
    "k": 10,
    "beta": 1.0,
    "indices": (1, 14, 24, 32, 40, 47, 53, 59, 65, 70),
    "diversity": 1.995878,
    "continuous_optimum": 1.995905,
    "target_spacing": 2.0 / 9.0,
    "max_gap_deviation": 0.018484,
    "gaps": (0.223903, 0.220542, 0.206679, 0.233564, 0.226423, 0.210460, 0.225583, 0.240706, 0.212140),
    "selected_points": (
        (0.000000, 1.000000), (0.188406, 0.964503), (0.333333, 0.888889), (0.449275, 0.798152),
        (0.565217, 0.680529), (0.666667, 0.555556), (0.753623, 0.432052), (0.840580, 0.293426),
        (0.927536, 0.139677), (1.000000, 0.000000),
    ),
    "states": 700,
    "transitions": 21_735,
}

ZDT3 = {
    "per_component": 20,
    "n": 100,
    "k": 20,
    "beta": 1.0,
    "indices": (1, 4, 10, 20, 23, 28, 32, 40, 41, 45, 50, 60, 61, 65, 70, 80, 81, 85, 90, 100),
    "diversity": 2.310417,
    "target_spacing": 0.138169,
    "max_gap_deviation": 0.032652,
    "selected_points": (
        (0.000000000, 1.000000000), (0.013105506, 0.880276059), (0.039316517, 0.764593318),
        (0.083001535, 0.669652357), (0.190179637, 0.621651164), (0.210056909, 0.476412118),
        (0.225958727, 0.360132712), (0.257762363, 0.242161085), (0.409313675, 0.242161085),
        (0.418696502, 0.120902501), (0.430425036, -0.007636135), (0.453882104, -0.124218445),
        (0.618396794, -0.124218445), (0.625578881, -0.241257552), (0.634556488, -0.357915810),
        (0.652511704, -0.458263326), (0.823331798, -0.458263326), (0.829332023, -0.571243811),
        (0.836832304, -0.681030545), (0.851832865, -0.773369012),
    ),
    "states": 2_000,
    "transitions": 94_050,
}

EXAMPLES = ("dense-front", "zdt3")


@dataclass
class GoldenCheck:
    quantity: str
    expected: object
    actual: object
    tolerance: float | None  # None: exact match

    @property
    def passed(self) -> bool:
        if self.tolerance is None:
            return self.expected == self.actual
        exp = np.asarray(self.expected, dtype=float)
        act = np.asarray(self.actual, dtype=float)
        return exp.shape == act.shape and bool(np.all(np.abs(exp - act) <= self.tolerance))

    def to_dict(self) -> dict:
        return {"quantity": self.quantity, "tolerance": self.tolerance, "passed": self.passed}


@dataclass
class ReproductionBundle:
    example: str
    summary: dict
    candidates: np.ndarray
    selected_rows: tuple[int, ...]  # 0-based rows of ``candidates``
    checks: list[GoldenCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[GoldenCheck]:
        return [c for c in self.checks if not c.passed]

    def plot_rows(self) -> list[list]:
        chosen = set(self.selected_rows)
        rows: list[list] = [["f1", "f2", "selected"]]
        for i, (f1, f2) in enumerate(self.candidates):
            rows.append([float(f1), float(f2), int(i in chosen)])
        return rows

    def report(self) -> dict:
        return {**self.summary, "checks": [c.to_dict() for c in self.checks], "passed": self.passed}


def _run(sample, k: int, beta: float):
    red = reduce(sample, anchored=False)
    sel, table = solve_with_table(red.instance, k, beta)
    rows = tuple(red.index_map[i - 1] for i in sel.indices)
    summary = {
        "n": len(red.instance),
        "k": k,
        "beta": beta,
        "indices": list(sel.indices),
        "diversity": sel.value.value,
        "line_coordinates": sel.coords.tolist(),
        "selected_points": sample.points[list(rows)].tolist(),
        "target_spacing": sel.target_spacing,
        "gaps": sel.gaps.gaps.tolist(),
        "max_gap_deviation": sel.max_gap_deviation,
        "states": table.states,
        "transitions": table.transitions,
        "formula_counts": state_transition_counts(len(red.instance), k),
    }
    return red, sel, rows, summary


def _common_checks(golden: dict, summary: dict) -> list[GoldenCheck]:
    return [
        GoldenCheck("indices", list(golden["indices"]), summary["indices"], None),
        GoldenCheck("diversity", golden["diversity"], summary["diversity"], DIVERSITY_ATOL),
        GoldenCheck("target_spacing", golden["target_spacing"], summary["target_spacing"], PRINTED_6DP_ATOL),
        GoldenCheck("max_gap_deviation", golden["max_gap_deviation"], summary["max_gap_deviation"],
                    PRINTED_6DP_ATOL),
        GoldenCheck("states", golden["states"], summary["states"], None),
        GoldenCheck("transitions", golden["transitions"], summary["transitions"], None),
    ]


def dense_front() -> ReproductionBundle:
    g = DENSE_FRONT
    sample = generate_parabola_front(g["n"])
    red, sel, rows, summary = _run(sample, g["k"], g["beta"])
    cont = optimum_value(g["k"], red.instance.span, g["beta"])
    summary = {"example": "dense-front", **summary, "continuous_optimum": cont}
    checks = _common_checks(g, summary) + [
        GoldenCheck("continuous_optimum", g["continuous_optimum"], cont, DIVERSITY_ATOL),
        GoldenCheck("gaps", list(g["gaps"]), summary["gaps"], PRINTED_6DP_ATOL),
        GoldenCheck("selected_points", [list(p) for p in g["selected_points"]], summary["selected_points"],
                    PRINTED_6DP_ATOL),
    ]
    return ReproductionBundle("dense-front", summary, sample.points, rows, checks)


def zdt3() -> ReproductionBundle:
    g = ZDT3
    sample = generate_zdt3_front(g["per_component"])
    red, sel, rows, summary = _run(sample, g["k"], g["beta"])
    summary = {"example": "zdt3", **summary,
               "continuous_optimum": optimum_value(g["k"], red.instance.span, g["beta"])}
    checks = _common_checks(g, summary) + [
        GoldenCheck("selected_points", [list(p) for p in g["selected_points"]], summary["selected_points"],
                    PRINTED_9DP_ATOL),
    ]
    return ReproductionBundle("zdt3", summary, sample.points, rows, checks)


def reproduce(example: str) -> ReproductionBundle:
    if example == "dense-front":
        return dense_front()
    if example == "zdt3":
        return zdt3()
    raise ValueError(f"unknown example {example!r}; choose from {EXAMPLES}")
