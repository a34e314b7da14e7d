"""Discrete Mellin transform pair through x = exp(-t).

Under that substitution the Mellin transform int_0^inf x^(s-1) f(x) dx is
the two-sided Laplace transform of f(exp(-t)), so the Laplace operator is
reused unchanged on resampled data.  No Jacobian appears.

The inverse returns approximations to f(exp(-t_j)), indexed by t_j, not
resampled onto x.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .hermite_core import HermiteGrid
from .laplace import LaplaceOperator, laplace_forward, laplace_inverse
from .samples import SampleVector, check_finite

__all__ = ["MellinNodes", "mellin_nodes", "mellin_forward", "mellin_inverse"]


@dataclass(frozen=True, eq=False)
class MellinNodes:
    """Abscissae x_j = exp(-t_j); strictly decreasing, x_j x_{N+1-j} = 1."""

    grid: HermiteGrid
    abscissae: np.ndarray = field(repr=False)


def mellin_nodes(grid: HermiteGrid) -> MellinNodes:
    x = np.exp(-grid.zeros)
    x.setflags(write=False)
    return MellinNodes(grid, x)


def mellin_forward(op: LaplaceOperator, f) -> SampleVector:
    """g_M(s_k) ~ int_0^inf x^(s_k - 1) f(x) dx at s_k = i t_k.

    ``f`` is a callable of x, evaluated at the Mellin nodes, or an array
    of values already taken at x_j = exp(-t_j).
    """
    x = mellin_nodes(op.grid).abscissae
    if callable(f):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            values = np.asarray(f(x), dtype=complex)
        values = np.broadcast_to(values, x.shape)
    else:
        values = f.values if isinstance(f, SampleVector) else np.asarray(f, dtype=complex)
    check_finite(values, x, "Mellin sample")
    return laplace_forward(op, SampleVector(op.grid, values, "mellin"))


def mellin_inverse(op: LaplaceOperator, g) -> SampleVector:
    """Approximants to f(exp(-t_j)) from g sampled at s_k = i t_k."""
    out = laplace_inverse(op, g)
    return SampleVector(op.grid, out.values, "mellin")
