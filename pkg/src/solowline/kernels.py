"""Normalized non-increasing similarity kernels K(t) on distances t >= 0."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ArgumentError

PROBE_POINTS = 1024


@dataclass(frozen=True)
class KernelFunction:
    """Similarity kernel of a distance.

    Use :meth:`exponential` for ``K(t) = exp(-beta * t)`` and :meth:`custom`
    for an arbitrary evaluator. Calling the kernel evaluates it elementwise.
    """

    kind: str
    beta: float | None = None
    evaluator: Callable | None = field(default=None, compare=False)
    name: str = "exponential"

    def __post_init__(self):
        if self.kind == "exponential":
            if self.beta is None or not np.isfinite(self.beta) or self.beta <= 0:
                raise ArgumentError(f"exponential kernel needs beta > 0, got {self.beta!r}")
        elif self.kind == "custom":
            if not callable(self.evaluator):
                raise ArgumentError("custom kernel needs a callable evaluator")
        else:
            raise ArgumentError(f"unknown kernel kind {self.kind!r}")

    @classmethod
    def exponential(cls, beta: float) -> "KernelFunction":
        return cls(kind="exponential", beta=float(beta), name=f"exponential(beta={float(beta):g})")

    @classmethod
    def custom(cls, evaluator: Callable, name: str = "custom", vectorized: bool = True) -> "KernelFunction":
        """Wrap ``evaluator``; pass ``vectorized=False`` for scalar-only callables."""
        fn = evaluator if vectorized else np.vectorize(evaluator, otypes=[float])
        return cls(kind="custom", evaluator=fn, name=name)

    @property
    def is_exponential(self) -> bool:
        return self.kind == "exponential"

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "exponential":
            out = np.exp(-self.beta * t)
        else:
            out = np.asarray(self.evaluator(t), dtype=float)
            if out.shape != t.shape:
                out = np.broadcast_to(out, t.shape).astype(float)
        return out if out.ndim else float(out)

    def validate(self, max_distance: float = 1.0) -> None:
        """Check K(0) = 1, values in (0, 1] and monotonicity on a probe grid.

        Monotonicity of an opaque evaluator can only be checked on finitely
        many points: ``PROBE_POINTS`` evenly spaced distances in
        ``[0, max_distance]``.
        """
        k0 = self(0.0)
        if k0 != 1.0:
            raise ArgumentError(f"kernel {self.name} is not normalized: K(0) = {k0!r}")
        if self.kind == "exponential":
            return
        hi = max(float(max_distance), np.finfo(float).tiny)
        grid = np.linspace(0.0, hi, PROBE_POINTS)
        vals = np.asarray(self(grid), dtype=float)
        if not np.all(np.isfinite(vals)) or np.any(vals <= 0) or np.any(vals > 1):
            raise ArgumentError(f"kernel {self.name} leaves (0, 1] on [0, {hi:g}]")
        steps = np.diff(vals)
        if np.any(steps > 0):
            i = int(np.argmax(steps > 0))
            raise ArgumentError(
                f"kernel {self.name} increases between t={grid[i]:.6g} and t={grid[i + 1]:.6g}"
            )


def gaussian_kernel() -> KernelFunction:
    return KernelFunction.custom(lambda t: np.exp(-np.square(t)), name="gaussian")


def rational_kernel() -> KernelFunction:
    return KernelFunction.custom(lambda t: 1.0 / (1.0 + t), name="rational")


def truncated_linear_kernel(floor: float = 1e-6) -> KernelFunction:
    # floored so the kernel stays strictly positive
    return KernelFunction.custom(lambda t: np.maximum(floor, 1.0 - t / 2.0), name="truncated-linear")


BUILTIN_KERNELS: dict[str, Callable[..., KernelFunction]] = {
    "exponential": KernelFunction.exponential,
    "gaussian": gaussian_kernel,
    "rational": rational_kernel,
    "truncated-linear": truncated_linear_kernel,
}
