"""Exact fixed-cardinality subset selection on ordered line instances.

Because the excess diversity of an ordered set is a sum over consecutive
gaps, the best ``j``-point subset ending at candidate ``i`` extends the best
``(j-1)``-point subset ending at some earlier candidate ``p``::

    best[i][1] = 0
    best[i][j] = max_{p < i} best[p][j-1] + tanh(beta * (t_i - t_p) / 2)

The optimum is ``1 + max_i best[i][k]``.

Ties are decided by exact floating-point equality. Excess sums are always
accumulated left to right, so the table and :func:`brute_force` assign
bitwise-identical values to every subset and agree on which sets tie.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .diversity import DiversityValue, GapVector, LineInstance, diversity_gap_sum, gap_excess
from .errors import ArgumentError, InstanceTooLarge

VERIFY_ATOL = 1e-12
BRUTE_FORCE_MAX_N = 22


@dataclass(frozen=True, eq=False)
class Selection:
    """A chosen subset of a line instance with its spacing diagnostics.

    ``indices`` are 1-based positions into the instance.
    """

    indices: tuple[int, ...]
    coords: np.ndarray
    value: DiversityValue
    gaps: GapVector
    target_spacing: float
    max_gap_deviation: float

    @classmethod
    def build(cls, instance: LineInstance, indices, beta: float, value: float | None = None) -> "Selection":
        """Assemble a selection from 1-based ``indices``.

        If ``value`` is given it must agree with the gap-sum diversity of the
        selected coordinates to ``VERIFY_ATOL``.
        """
        idx = tuple(int(i) for i in indices)
        n = len(instance)
        if len(idx) < 1 or any(b <= a for a, b in zip(idx, idx[1:])) or idx[0] < 1 or idx[-1] > n:
            raise ArgumentError(f"indices must be strictly increasing within [1, {n}]: {idx}")
        coords = instance.coords[np.asarray(idx) - 1]
        coords.setflags(write=False)
        div = diversity_gap_sum(coords, beta)
        if value is not None and abs(div.value - value) > VERIFY_ATOL:
            raise ArgumentError(f"claimed diversity {value!r} differs from recomputed {div.value!r}")
        gaps = GapVector.from_points(coords)
        if len(idx) > 1:
            target = float(coords[-1] - coords[0]) / (len(idx) - 1)
            dev = float(np.max(np.abs(gaps.gaps - target)))
        else:
            target, dev = 0.0, 0.0
        return cls(indices=idx, coords=coords, value=div, gaps=gaps,
                   target_spacing=target, max_gap_deviation=dev)

    @property
    def k(self) -> int:
        return len(self.indices)


@dataclass(eq=False)
class DpTable:
    """Filled Bellman table plus instrumentation counters.

    ``best[i, j]`` holds the best excess of a ``j``-point subset ending at
    0-based candidate ``i`` (column 0 unused); ``parent[i, j]`` is the
    0-based predecessor or -1.
    """

    best: np.ndarray
    parent: np.ndarray
    states: int = 0
    transitions: int = 0
    ties: bool = False  # some predecessor maximum was attained more than once


def state_transition_counts(n: int, k: int) -> dict[str, int]:
    if not 2 <= k <= n:
        raise ArgumentError(f"need 2 <= k <= n, got k={k}, n={n}")
    return {"states": k * n, "transitions": (k - 1) * n * (n - 1) // 2}


def _check_args(instance: LineInstance, k: int, beta: float) -> None:
    n = len(instance)
    if int(k) != k or not 2 <= k <= n:
        raise ArgumentError(f"need 2 <= k <= n, got k={k!r}, n={n}")
    if beta <= 0:
        raise ArgumentError(f"beta must be positive, got {beta!r}")


def _left_to_right_sum(terms: np.ndarray) -> np.ndarray:
    """Row sums accumulated in the same order as the Bellman recursion."""
    acc = np.zeros(terms.shape[0])
    for c in range(terms.shape[1]):
        acc = acc + terms[:, c]
    return acc


def _candidates(table: DpTable, t: np.ndarray, i: int, j: int, beta: float) -> np.ndarray:
    return table.best[:i, j - 1] + gap_excess(t[i] - t[:i], beta)


def fill_table(instance: LineInstance, k: int, beta: float) -> DpTable:
    _check_args(instance, k, beta)
    t = instance.coords
    n = t.size
    best = np.full((n, k + 1), -np.inf)
    parent = np.full((n, k + 1), -1, dtype=np.int64)
    table = DpTable(best=best, parent=parent)
    best[:, 1] = 0.0
    table.states += n
    for j in range(2, k + 1):
        table.states += 1  # i = 0 has no predecessor; the state stays -inf
        for i in range(1, n):
            cand = _candidates(table, t, i, j, beta)
            table.transitions += i
            table.states += 1
            if np.isneginf(cand).all():
                continue
            p = int(np.argmax(cand))  # first maximum: smallest predecessor
            best[i, j] = cand[p]
            parent[i, j] = p
            if np.count_nonzero(cand == cand[p]) > 1:
                table.ties = True
    return table


def _trace(table: DpTable, end: int, k: int) -> list[int]:
    path = [end]
    for j in range(k, 1, -1):
        path.append(int(table.parent[path[-1], j]))
    return path[::-1]


def _lexmin_optimal_path(table: DpTable, t: np.ndarray, ends: np.ndarray, k: int, beta: float) -> list[int]:
    """Lexicographically smallest optimal index set when ties are present.

    Marks every state lying on some optimal path (backwards from the optimal
    end points through exactly tight transitions), then walks forward taking
    the smallest admissible candidate at each step.
    """
    n = t.size
    on_opt = np.zeros((n, k + 1), dtype=bool)
    on_opt[ends, k] = True
    for j in range(k, 1, -1):
        for i in np.nonzero(on_opt[:, j])[0]:
            cand = _candidates(table, t, int(i), j, beta)
            on_opt[:i, j - 1] |= cand == table.best[i, j]
    path = [int(np.argmax(on_opt[:, 1]))]
    for j in range(2, k + 1):
        s = path[-1]
        for i in range(s + 1, n):
            if on_opt[i, j] and _candidates(table, t, i, j, beta)[s] == table.best[i, j]:
                path.append(i)
                break
    return path


def solve_with_table(instance: LineInstance, k: int, beta: float = 1.0) -> tuple[Selection, DpTable]:
    table = fill_table(instance, k, beta)
    last = table.best[:, k]
    ends = np.nonzero(last == np.max(last))[0]
    if table.ties or ends.size > 1:
        path = _lexmin_optimal_path(table, instance.coords, ends, k, beta)
    else:
        path = _trace(table, int(ends[0]), k)
    value = 1.0 + float(table.best[path[-1], k])
    sel = Selection.build(instance, [p + 1 for p in path], beta, value=value)
    return sel, table


def solve(instance: LineInstance, k: int, beta: float = 1.0) -> Selection:
    """Best ``k``-point subset of ``instance`` under gap-sum diversity."""
    return solve_with_table(instance, k, beta)[0]


def brute_force(instance: LineInstance, k: int, beta: float = 1.0, chunk: int = 65536) -> Selection:
    """Enumerate every ``k``-subset; exact ties go to the lexicographically smallest.

    Raises:
        InstanceTooLarge: for more than ``BRUTE_FORCE_MAX_N`` candidates.
    """
    n = len(instance)
    if n > BRUTE_FORCE_MAX_N:
        raise InstanceTooLarge(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got n={n}")
    _check_args(instance, k, beta)
    t = instance.coords
    best_val, best_idx = -math.inf, None
    combos = itertools.combinations(range(n), k)
    while True:
        block = np.fromiter(itertools.chain.from_iterable(itertools.islice(combos, chunk)),
                            dtype=np.int64)
        if block.size == 0:
            break
        block = block.reshape(-1, k)
        vals = _left_to_right_sum(gap_excess(np.diff(t[block], axis=1), beta))
        r = int(np.argmax(vals))
        # combinations arrive in lexicographic order, so earlier blocks win ties
        if vals[r] > best_val:
            best_val, best_idx = float(vals[r]), block[r]
    return Selection.build(instance, best_idx + 1, beta, value=1.0 + best_val)
