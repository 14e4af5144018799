"""Continuous optima on intervals and the concavity certificate behind them."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diversity import GapVector, gap_excess
from .errors import ArgumentError

TIGHT_RTOL = 1e-10


@dataclass(frozen=True, eq=False)
class ContinuousOptimum:
    k: int
    length: float
    beta: float
    points: np.ndarray
    value: float

    @property
    def spacing(self) -> float:
        return self.length / (self.k - 1)


def optimum_value(k: int, length: float, beta: float) -> float:
    """Maximum diversity of ``k`` points on an interval of the given length."""
    return 1.0 + (k - 1) * float(np.tanh(beta * length / (2.0 * (k - 1))))


def uniform_optimum(k: int, interval: tuple[float, float], beta: float) -> ContinuousOptimum:
    """Equally spaced ``k``-point set on ``interval`` and its diversity.

    The endpoints are returned bit-identical to the interval bounds.
    """
    lo, hi = (float(x) for x in interval)
    if int(k) != k or k < 2:
        raise ArgumentError(f"k must be an integer >= 2, got {k!r}")
    if not hi > lo:
        raise ArgumentError(f"empty interval [{lo}, {hi}]")
    if beta <= 0:
        raise ArgumentError(f"beta must be positive, got {beta!r}")
    k = int(k)
    length = hi - lo
    pts = lo + np.arange(k) * (length / (k - 1))
    pts[0], pts[-1] = lo, hi
    pts.setflags(write=False)
    return ContinuousOptimum(k=k, length=length, beta=float(beta), points=pts,
                             value=optimum_value(k, length, beta))


def gap_contribution(t, beta: float):
    return gap_excess(t, beta) if np.ndim(t) else float(gap_excess(t, beta))


def gap_contribution_second_derivative(t, beta: float):
    h = 0.5 * beta * np.asarray(t, dtype=float)
    out = -0.5 * beta**2 * np.tanh(h) / np.cosh(h) ** 2
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class JensenCertificate:
    lhs: float
    rhs: float
    slack: float
    tight: bool


def jensen_certificate(gaps, beta: float) -> JensenCertificate:
    """Compare the gap-sum objective against the equal-gap vector of the same span.

    ``lhs`` is the realized excess, ``rhs`` the excess of the uniform gap
    vector with identical total; ``slack = rhs - lhs`` is never negative
    beyond rounding. ``tight`` flags gap vectors that are equal to within
    ``TIGHT_RTOL`` relative to their mean.
    """
    g = gaps.gaps if isinstance(gaps, GapVector) else GapVector(gaps).gaps
    n = g.size
    if n == 0:
        return JensenCertificate(0.0, 0.0, 0.0, True)
    mean = float(np.sum(g)) / n
    lhs = float(np.sum(gap_excess(g, beta)))
    rhs = n * float(np.tanh(0.5 * beta * mean))
    tight = float(np.max(np.abs(g - mean))) <= TIGHT_RTOL * mean
    return JensenCertificate(lhs=lhs, rhs=rhs, slack=rhs - lhs, tight=bool(tight))
