"""Discrete Fourier matrix on Hermite zeros and the Fourier quadrature.

F = U^T diag((-i)^m) U, so F is complex symmetric and unitary.  The
quadrature

    int exp(-i w_k t) f(t) dt  ~  sqrt(2 pi) sum_j (-1)^(j+k) F_kj f(t_j)

is applied through that factorisation in O(N^2) without forming F.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .hermite_core import BasisMatrix, HermiteGrid
from .samples import SampleVector, as_samples

__all__ = [
    "FourierMatrix",
    "build_fourier_matrix",
    "asymptotic_kernel",
    "fourier_quadrature",
    "sign_mask",
]

SQRT_2PI = np.sqrt(2.0 * np.pi)


def sign_mask(N: int) -> np.ndarray:
    """(-1)^(j-1) for j = 1..N over ascending zeros."""
    return np.where(np.arange(N) % 2 == 0, 1.0, -1.0)


def _phases(N: int) -> np.ndarray:
    # (-i)^m exactly, no pow() rounding
    return np.array([1, -1j, -1, 1j])[np.arange(N) % 4]


@dataclass(frozen=True, eq=False)
class FourierMatrix:
    basis: BasisMatrix
    entries: np.ndarray = field(repr=False)

    @property
    def grid(self) -> HermiteGrid:
        return self.basis.grid

    @property
    def order(self) -> int:
        return self.basis.order

    def apply(self, x, conjugate=False) -> np.ndarray:
        """F @ x (or conj(F) @ x) via the U factorisation.

        ``x`` may carry trailing axes; the transform acts on axis 0.
        """
        U = self.basis.entries
        ph = _phases(self.order)
        if conjugate:
            ph = ph.conj()
        x = np.asarray(x, dtype=complex)
        y = U @ x
        y = ph.reshape((-1,) + (1,) * (y.ndim - 1)) * y
        return U.T @ y


def build_fourier_matrix(basis: BasisMatrix) -> FourierMatrix:
    U = basis.entries
    F = U.T @ (_phases(basis.order)[:, None] * U)
    # symmetric by construction; enforce it bitwise
    F = 0.5 * (F + F.T)
    F.setflags(write=False)
    return FourierMatrix(basis, F)


def asymptotic_kernel(grid: HermiteGrid, k: int, j: int) -> complex:
    """Large-N limit of F_kj: (dt / sqrt(2 pi)) (-1)^(j+k) exp(-i t_j w_k).

    ``k`` and ``j`` are 1-based, dt = pi / sqrt(2N).
    """
    N = grid.order
    if not (1 <= k <= N and 1 <= j <= N):
        raise IndexError(f"indices must lie in 1..{N}, got k={k}, j={j}")
    t = grid.zeros
    sign = -1.0 if (j + k) % 2 else 1.0
    return grid.spacing / SQRT_2PI * sign * np.exp(-1j * t[j - 1] * t[k - 1])


def fourier_quadrature(F: FourierMatrix, f) -> SampleVector:
    """Approximate int exp(-i w_k t) f(t) dt at every w_k = t_k."""
    f = as_samples(f, F.grid, "time")
    D = sign_mask(F.order)
    out = SQRT_2PI * D * F.apply(D * f.values)
    return SampleVector(F.grid, out, "frequency")
