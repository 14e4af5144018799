"""Solow-Polasky diversity of finite point sets.

Two evaluation routes are provided. :func:`diversity_matrix` solves
``Z y = 1`` for the similarity matrix ``Z`` and sums ``y`` (valid for any
kernel and any metric). :func:`diversity_gap_sum` uses the ordered-line
identity ``D = 1 + sum_i tanh(beta * gap_i / 2)`` for the exponential kernel
and runs in linear time.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ArgumentError, DegenerateTriple, DomainError, SingularMatrix
from .kernels import KernelFunction

PIVOT_RTOL = 1e-12
TRIPLE_DET_TOL = 1e-14


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class LineInstance:
    """Strictly increasing coordinates of candidate points on the real line."""

    coords: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coords, dtype=float)
        if c.ndim != 1 or c.size == 0:
            raise ArgumentError("a line instance needs a non-empty 1-D coordinate list")
        if not np.all(np.isfinite(c)):
            raise ArgumentError("line coordinates must be finite")
        d = np.diff(c)
        if np.any(d <= 0):
            i = int(np.argmax(d <= 0))
            raise ArgumentError(
                f"coordinates must be strictly increasing: x[{i + 1}]={c[i]!r} >= x[{i + 2}]={c[i + 1]!r}"
            )
        object.__setattr__(self, "coords", _frozen(c))

    @classmethod
    def dedupe_then_build(cls, values) -> "LineInstance":
        """Sort ``values`` and collapse exact duplicates before validating."""
        return cls(np.unique(np.asarray(values, dtype=float)))

    def __len__(self) -> int:
        return int(self.coords.size)

    def __eq__(self, other) -> bool:
        return isinstance(other, LineInstance) and np.array_equal(self.coords, other.coords)

    __hash__ = None

    @property
    def span(self) -> float:
        return float(self.coords[-1] - self.coords[0])

    def gaps(self) -> "GapVector":
        return GapVector.from_points(self.coords)

    def subset(self, indices) -> "LineInstance":
        """Instance restricted to 0-based ``indices`` (kept in sorted order)."""
        return LineInstance(self.coords[np.sort(np.asarray(indices, dtype=int))])

    def reflected(self) -> "LineInstance":
        return LineInstance(-self.coords[::-1])


@dataclass(frozen=True, eq=False)
class GapVector:
    """Consecutive differences of an ordered point set."""

    gaps: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.gaps, dtype=float)
        if g.ndim != 1:
            raise ArgumentError("gaps must be a 1-D sequence")
        if np.any(~np.isfinite(g)) or np.any(g <= 0):
            raise ArgumentError("every gap must be a positive finite number")
        object.__setattr__(self, "gaps", _frozen(g))

    @classmethod
    def from_points(cls, coords) -> "GapVector":
        return cls(np.diff(np.asarray(coords, dtype=float)))

    @property
    def span(self) -> float:
        return float(np.sum(self.gaps))

    @property
    def mean(self) -> float:
        return self.span / self.gaps.size if self.gaps.size else 0.0

    def __len__(self) -> int:
        return int(self.gaps.size)


@dataclass(frozen=True)
class DiversityValue:
    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))

    @property
    def excess(self) -> float:
        return self.value - 1.0

    def __float__(self) -> float:
        return self.value


def _as_instance(points) -> LineInstance:
    return points if isinstance(points, LineInstance) else LineInstance(points)


def similarity_from_distances(distances: np.ndarray, kernel: KernelFunction) -> np.ndarray:
    """Apply ``kernel`` entrywise to a symmetric distance matrix."""
    d = np.asarray(distances, dtype=float)
    kernel.validate(float(d.max()) if d.size else 1.0)
    z = np.asarray(kernel(d), dtype=float).reshape(d.shape)
    np.fill_diagonal(z, 1.0)
    return z


def build_similarity_matrix(points, kernel: KernelFunction) -> np.ndarray:
    c = _as_instance(points).coords
    return similarity_from_distances(np.abs(c[:, None] - c[None, :]), kernel)


def l1_distance_matrix(points) -> np.ndarray:
    p = np.asarray(points, dtype=float)
    if p.ndim == 1:
        p = p[:, None]
    return np.abs(p[:, None, :] - p[None, :, :]).sum(axis=2)


def diversity_from_similarity(z: np.ndarray) -> DiversityValue:
    """Return ``1^T Z^{-1} 1`` via an LU solve with an all-ones right-hand side.

    Raises:
        SingularMatrix: if some pivot falls below ``PIVOT_RTOL`` times the
            largest entry of its column, which usually means duplicated or
            nearly duplicated points.
    """
    z = np.asarray(z, dtype=float)
    if z.ndim != 2 or z.shape[0] != z.shape[1] or z.shape[0] == 0:
        raise ArgumentError("similarity matrix must be square and non-empty")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(z, check_finite=True)
    col_scale = np.max(np.abs(z), axis=0)
    pivots = np.abs(np.diag(lu))
    bad = np.nonzero(pivots < PIVOT_RTOL * col_scale)[0]
    if bad.size:
        raise SingularMatrix(
            f"similarity matrix is numerically singular (pivot {int(bad[0]) + 1} = {pivots[bad[0]]:.3e}); "
            "check for duplicate or nearly duplicate points"
        )
    y = scipy.linalg.lu_solve((lu, piv), np.ones(z.shape[0]))
    return DiversityValue(float(np.sum(y)))


def diversity_matrix(points, kernel: KernelFunction) -> DiversityValue:
    return diversity_from_similarity(build_similarity_matrix(points, kernel))


def gap_excess(gaps, beta: float) -> np.ndarray:
    """Per-gap excess contributions ``tanh(beta * gap / 2)``."""
    return np.tanh(0.5 * float(beta) * np.asarray(gaps, dtype=float))


def diversity_gap_sum(points, beta: float) -> DiversityValue:
    if beta <= 0:
        raise ArgumentError(f"beta must be positive, got {beta!r}")
    c = _as_instance(points).coords
    return DiversityValue(1.0 + float(np.sum(gap_excess(np.diff(c), beta))))


def two_point_excess(r: float) -> float:
    """Excess diversity ``(1 - r) / (1 + r)`` of two points with similarity ``r``."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"two-point similarity must lie in (0, 1), got {r!r}")
    return (1.0 - r) / (1.0 + r)


def three_point_det(u: float, v: float, w: float) -> float:
    # (1-u^2)(1-v^2) - (w-uv)^2 == 1 + 2uvw - u^2 - v^2 - w^2, without the
    # cancellation of the expanded form when all similarities are near 1
    return (1.0 - u * u) * (1.0 - v * v) - (w - u * v) ** 2


def three_point_excess(u: float, v: float, w: float) -> float:
    """Excess diversity of ``{0, a, a+b}`` with ``u=K(a), v=K(b), w=K(a+b)``."""
    for name, s in (("u", u), ("v", v), ("w", w)):
        if not 0.0 < s < 1.0:
            raise DomainError(f"{name} must lie in (0, 1), got {s!r}")
    det = three_point_det(u, v, w)
    if abs(det) < TRIPLE_DET_TOL:
        raise DegenerateTriple(f"three-point determinant {det:.3e} is numerically zero")
    return 2.0 * (1.0 - u) * (1.0 - v) * (1.0 - w) / det
