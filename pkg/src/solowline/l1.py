"""Reduction of ordered l1 curves (monotone in every coordinate) to the line.

For a sample whose every coordinate is monotone along the curve order, the
scalar ``phi_i = sum_r sigma_r * (p_i[r] - p_1[r])`` (``sigma_r`` the direction
of coordinate ``r``) satisfies ``||p_i - p_j||_1 = |phi_i - phi_j|``. Diversity
under the l1 metric then equals line diversity of the ``phi`` values.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .diversity import (
    DiversityValue,
    LineInstance,
    diversity_from_similarity,
    l1_distance_matrix,
    similarity_from_distances,
)
from .errors import ArgumentError, DuplicateCollapsed, NotOrdered
from .kernels import KernelFunction

# Backward steps up to this fraction of a coordinate's range count as ties.
MONOTONE_RTOL = 1e-9
ISOMETRY_RTOL = 1e-10
ISOMETRY_MAX_PAIRS = 10_000

ZDT3_INTERVALS: tuple[tuple[float, float], ...] = (
    (0.0, 0.0830015349),
    (0.1822287280, 0.2577623634),
    (0.4093136748, 0.4538821041),
    (0.6183967944, 0.6525117038),
    (0.8233317983, 0.8518328654),
)


def _as_matrix(points) -> np.ndarray:
    p = np.asarray(points, dtype=float)
    if p.ndim == 1:
        p = p[:, None]
    if p.ndim != 2 or p.shape[0] < 1 or p.shape[1] < 1:
        raise ArgumentError(f"expected an (n, m) array of points, got shape {p.shape}")
    if not np.all(np.isfinite(p)):
        raise ArgumentError("points must be finite")
    return p


def _coordinate_tolerance(col: np.ndarray, rtol: float) -> float:
    return rtol * float(np.ptp(col))


def detect_signs(points, rtol: float = MONOTONE_RTOL) -> tuple[int, ...]:
    """Direction (+1 nondecreasing, -1 nonincreasing) of every coordinate.

    Constant coordinates get +1. Adjacent backward steps no larger than
    ``rtol`` times the coordinate's range are treated as ties.

    Raises:
        NotOrdered: naming the offending coordinate and adjacent pair (1-based).
    """
    p = _as_matrix(points)
    signs = []
    for r in range(p.shape[1]):
        col = p[:, r]
        tol = _coordinate_tolerance(col, rtol)
        steps = np.diff(col)
        total = float(col[-1] - col[0]) if col.size > 1 else 0.0
        sign = -1 if total < -tol else 1
        bad = np.nonzero(sign * steps < -tol)[0]
        if bad.size:
            if total == 0.0 or abs(total) <= tol:
                # no dominant direction: report whichever direction fails first
                bad = np.nonzero(steps < -tol)[0]
                bad = bad if bad.size else np.nonzero(steps > tol)[0]
            i = int(bad[0])
            direction = "nonincreasing" if sign < 0 else "nondecreasing"
            raise NotOrdered(
                f"coordinate {r + 1} is not monotone: samples {i + 1} and {i + 2} "
                f"({float(col[i])!r} -> {float(col[i + 1])!r}) break the {direction} order",
                coordinate=r + 1,
                pair=(i + 1, i + 2),
            )
        signs.append(sign)
    return tuple(signs)


@dataclass(frozen=True, eq=False)
class OrderedCurveSample:
    """Finite sample of a curve in R^m, listed in curve order.

    ``order`` maps curve positions to rows of ``points`` (identity unless the
    sample was sorted on construction).
    """

    points: np.ndarray
    sigma: tuple[int, ...]
    order: tuple[int, ...]

    def __post_init__(self):
        p = _as_matrix(self.points)
        p.setflags(write=False)
        object.__setattr__(self, "points", p)
        if len(self.sigma) != p.shape[1] or any(s not in (-1, 1) for s in self.sigma):
            raise ArgumentError(f"sigma must hold one sign in {{-1, +1}} per coordinate, got {self.sigma}")
        if sorted(self.order) != list(range(p.shape[0])):
            raise ArgumentError("order must be a permutation of the sample rows")
        q = p[list(self.order)] * np.asarray(self.sigma, dtype=float)
        for r in range(q.shape[1]):
            tol = _coordinate_tolerance(q[:, r], MONOTONE_RTOL)
            bad = np.nonzero(np.diff(q[:, r]) < -tol)[0]
            if bad.size:
                i = int(bad[0])
                raise NotOrdered(
                    f"coordinate {r + 1} with sign {self.sigma[r]:+d} decreases between "
                    f"curve positions {i + 1} and {i + 2}",
                    coordinate=r + 1, pair=(i + 1, i + 2),
                )

    @classmethod
    def from_points(cls, points, sigma=None, sort: bool = False) -> "OrderedCurveSample":
        """Build a sample, detecting ``sigma`` when not given.

        With ``sort=True`` rows are stably sorted by the first non-constant
        coordinate; otherwise the input order is the curve order.
        """
        p = _as_matrix(points)
        order = np.arange(p.shape[0])
        if sort:
            nonconst = [r for r in range(p.shape[1]) if np.ptp(p[:, r]) > 0]
            if nonconst:
                order = np.argsort(p[:, nonconst[0]], kind="stable")
        if sigma is None:
            sigma = detect_signs(p[order])
        return cls(points=p, sigma=tuple(int(s) for s in sigma), order=tuple(int(i) for i in order))

    @property
    def ordered_points(self) -> np.ndarray:
        return self.points[list(self.order)]

    def __len__(self) -> int:
        return int(self.points.shape[0])


@dataclass(frozen=True, eq=False)
class ScalarReduction:
    """Line instance induced by an ordered curve sample.

    ``index_map[i]`` is the 0-based row of ``sample.points`` represented by
    instance position ``i``; ``collapsed`` lists ``(kept_row, dropped_row)``
    pairs merged because they sit at zero l1 distance.
    """

    instance: LineInstance
    length: float
    index_map: tuple[int, ...]
    sample: OrderedCurveSample
    collapsed: tuple[tuple[int, int], ...] = field(default=())

    @property
    def points(self) -> np.ndarray:
        return self.sample.points[list(self.index_map)]


def _backward_slack(q: np.ndarray) -> float:
    """Largest possible |l1 - |dphi|| mismatch caused by tolerated ties."""
    steps = np.diff(q, axis=0)
    return 2.0 * float(np.sum(np.clip(-steps, 0.0, None)))


def verify_isometry(points: np.ndarray, phi: np.ndarray, slack: float = 0.0,
                    max_pairs: int = ISOMETRY_MAX_PAIRS, seed: int = 0) -> float:
    """Check ``||p_i - p_j||_1 == |phi_i - phi_j|`` on (a sample of) pairs.

    Returns the largest relative error seen; raises ``ArithmeticError`` if
    any pair is off by more than ``ISOMETRY_RTOL`` relative plus ``slack``.
    """
    n = phi.size
    if n < 2:
        return 0.0
    total = n * (n - 1) // 2
    if total <= max_pairs:
        i, j = np.triu_indices(n, 1)
    else:
        rng = np.random.default_rng(seed)
        i = rng.integers(0, n, max_pairs)
        j = rng.integers(0, n, max_pairs)
        keep = i != j
        i, j = i[keep], j[keep]
    d1 = np.abs(points[i] - points[j]).sum(axis=1)
    dphi = np.abs(phi[i] - phi[j])
    # phi is a sum of m coordinate differences: allow a few ulps of the data scale
    rounding = 8.0 * points.shape[1] * np.finfo(float).eps * float(np.max(np.abs(points)))
    err = np.abs(d1 - dphi)
    allowed = ISOMETRY_RTOL * d1 + rounding + slack
    if np.any(err > allowed):
        w = int(np.argmax(err - allowed))
        raise ArithmeticError(
            f"l1 isometry violated between positions {i[w] + 1} and {j[w] + 1}: "
            f"l1={d1[w]!r}, |dphi|={dphi[w]!r}"
        )
    with np.errstate(divide="ignore", invalid="ignore"):
        rel = np.where(d1 > 0, err / d1, 0.0)
    return float(np.max(rel))


def reduce(sample: OrderedCurveSample, anchored: bool = True) -> ScalarReduction:
    """Map an ordered curve sample to its induced line coordinates.

    ``anchored=True`` starts the coordinate at 0 at the first curve point;
    ``anchored=False`` returns ``sum_r sigma_r * p[r]`` (for a biobjective
    front with sigma = (+1, -1) this is ``f1 - f2``). Points that do not
    advance the coordinate are merged into their predecessor with a
    :class:`DuplicateCollapsed` warning.
    """
    ordered = sample.ordered_points
    sig = np.asarray(sample.sigma, dtype=float)
    q = ordered * sig
    raw = q.sum(axis=1)
    phi = (q - q[0]).sum(axis=1)
    keep = [0]
    collapsed = []
    for i in range(1, phi.size):
        if phi[i] > phi[keep[-1]]:
            keep.append(i)
        else:
            collapsed.append((sample.order[keep[-1]], sample.order[i]))
    if collapsed:
        warnings.warn(f"merged {len(collapsed)} sample(s) at zero l1 distance", DuplicateCollapsed,
                      stacklevel=2)
    keep_arr = np.asarray(keep)
    verify_isometry(ordered[keep_arr], phi[keep_arr], slack=_backward_slack(q))
    coords = phi[keep_arr] if anchored else raw[keep_arr]
    length = float(np.sum(np.abs(ordered[-1] - ordered[0])))
    return ScalarReduction(
        instance=LineInstance(coords),
        length=length,
        index_map=tuple(sample.order[i] for i in keep),
        sample=sample,
        collapsed=tuple(collapsed),
    )


def reduce_points(points, sort: bool = False, anchored: bool = True) -> ScalarReduction:
    return reduce(OrderedCurveSample.from_points(points, sort=sort), anchored=anchored)


def generate_parabola_front(n: int) -> OrderedCurveSample:
    """``n`` points ``(x, 1 - x^2)`` with ``x`` evenly spaced on [0, 1]."""
    if n < 2:
        raise ArgumentError(f"need n >= 2, got {n}")
    x = np.arange(n) / (n - 1)
    return OrderedCurveSample.from_points(np.column_stack([x, 1.0 - x**2]))


def zdt3_f2(f1):
    f1 = np.asarray(f1, dtype=float)
    return 1.0 - np.sqrt(f1) - f1 * np.sin(10.0 * np.pi * f1)


def generate_zdt3_front(per_component: int = 20) -> OrderedCurveSample:
    """Evenly spaced samples on each of the five Pareto-optimal ZDT3 pieces."""
    if per_component < 2:
        raise ArgumentError(f"need per_component >= 2, got {per_component}")
    f1 = np.concatenate([np.linspace(a, b, per_component) for a, b in ZDT3_INTERVALS])
    return OrderedCurveSample.from_points(np.column_stack([f1, zdt3_f2(f1)]))


def l1_diversity_matrix_route(points, beta: float) -> DiversityValue:
    """Matrix-route diversity of raw points under the l1 exponential kernel."""
    return diversity_from_similarity(
        similarity_from_distances(l1_distance_matrix(points), KernelFunction.exponential(beta))
    )
