"""Discrete two-sided Laplace transform on the imaginary axis and its inverse.

With s_k = i t_k,

    L_kj      = sqrt(2 pi) (-1)^(j+k) F_kj
    Linv_jk   = (-1)^(j+k) conj(F_jk) / sqrt(2 pi)

``laplace_inverse`` is a quadrature of the Bromwich integral taken along
the imaginary axis, so g must have its singularities strictly to the left.
One-sided transforms go through :func:`causal_embed`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .fourier import SQRT_2PI, FourierMatrix, build_fourier_matrix, sign_mask
from .hermite_core import HermiteGrid, basis_matrix, hermite_zeros
from .samples import SampleVector, as_samples, check_finite

__all__ = [
    "LaplaceOperator",
    "build_laplace",
    "laplace_operator",
    "laplace_forward",
    "laplace_inverse",
    "causal_embed",
]


@dataclass(frozen=True, eq=False)
class LaplaceOperator:
    fourier: FourierMatrix
    forward: np.ndarray = field(repr=False)
    inverse: np.ndarray = field(repr=False)

    @property
    def grid(self) -> HermiteGrid:
        return self.fourier.grid

    @property
    def order(self) -> int:
        return self.fourier.order

    @property
    def frequencies(self) -> np.ndarray:
        """Transform-domain nodes s_k = i t_k."""
        return 1j * self.grid.zeros

    def apply(self, x, inverse=False) -> np.ndarray:
        """L @ x or Linv @ x along axis 0, matrix-free."""
        x = np.asarray(x, dtype=complex)
        D = sign_mask(self.order).reshape((-1,) + (1,) * (x.ndim - 1))
        if inverse:
            return D * self.fourier.apply(D * x, conjugate=True) / SQRT_2PI
        return SQRT_2PI * D * self.fourier.apply(D * x)


def build_laplace(F: FourierMatrix) -> LaplaceOperator:
    D = sign_mask(F.order)
    mask = np.outer(D, D)
    fwd = SQRT_2PI * mask * F.entries
    inv = mask * F.entries.conj() / SQRT_2PI
    fwd.setflags(write=False)
    inv.setflags(write=False)
    return LaplaceOperator(F, fwd, inv)


@lru_cache(maxsize=32)
def laplace_operator(N: int) -> LaplaceOperator:
    """Zeros, basis, Fourier matrix and Laplace operator of order N (cached)."""
    return build_laplace(build_fourier_matrix(basis_matrix(hermite_zeros(N))))


def laplace_forward(op: LaplaceOperator, f) -> SampleVector:
    """g(s_k) ~ int exp(-s_k t) f(t) dt for s_k = i t_k."""
    f = as_samples(f, op.grid, "time")
    return SampleVector(op.grid, op.apply(f.values), "frequency")


def laplace_inverse(op: LaplaceOperator, g) -> SampleVector:
    """f(t_j) ~ (1 / 2 pi i) int_{-i inf}^{i inf} exp(t_j s) g(s) ds."""
    g = as_samples(g, op.grid, "frequency")
    check_finite(g.values, op.frequencies, "transform sample")
    return SampleVector(op.grid, op.apply(g.values, inverse=True), "time")


def causal_embed(h, grid: HermiteGrid) -> SampleVector:
    """Zero out negative nodes; keep h(t_j) for t_j >= 0.

    ``h`` is either a callable evaluated at the nonnegative nodes only, or
    an array of N node values whose negative-node entries are ignored.  A
    node at t = 0 (odd N) keeps the full value h(0).
    """
    t = grid.zeros
    keep = t >= 0.0
    out = np.zeros(grid.order, dtype=complex)
    if callable(h):
        vals = np.asarray(h(t[keep]), dtype=complex)
        out[keep] = np.broadcast_to(vals, (int(keep.sum()),))
    else:
        vals = np.asarray(h, dtype=complex).reshape(-1)
        if vals.shape[0] != grid.order:
            raise ValueError(f"expected {grid.order} node values, got {vals.shape[0]}")
        out[keep] = vals[keep]
    check_finite(np.where(keep, out, 0.0), t, "causal sample")
    return SampleVector(grid, out, "time")
