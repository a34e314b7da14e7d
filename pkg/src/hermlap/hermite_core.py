"""Hermite zeros, orthonormal Hermite functions and the eigenvector matrix U.

The zeros of H_N are the eigenvalues of the N x N symmetric tridiagonal
matrix with zero diagonal and off-diagonal sqrt(n/2), n = 1..N-1.  They are
shared by the time and frequency grids (omega_k = t_k).

All Hermite-function values go through the orthonormal recurrence

    psi_0(x)     = pi**-0.25 * exp(-x**2 / 2)
    psi_1(x)     = sqrt(2) * x * psi_0(x)
    psi_{m+1}(x) = x sqrt(2/(m+1)) psi_m(x) - sqrt(m/(m+1)) psi_{m-1}(x)

which stays bounded where the closed-form normalisation 2**(N-1) (N-1)!
overflows.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

__all__ = [
    "DEFAULT_MAX_ORDER",
    "MAX_ORDER_ENV",
    "HermiteGrid",
    "BasisMatrix",
    "max_order",
    "jacobi_matrix",
    "hermite_zeros",
    "weighted_hermite_values",
    "basis_matrix",
]

DEFAULT_MAX_ORDER = 512
MAX_ORDER_ENV = "HERMLAP_MAX_ORDER"


def max_order() -> int:
    """Largest accepted order; overridable through ``HERMLAP_MAX_ORDER``."""
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_ORDER
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_ORDER_ENV} must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError(f"{MAX_ORDER_ENV} must be a positive integer, got {raw!r}")
    return cap


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class HermiteGrid:
    """The N zeros of H_N in ascending order."""

    order: int
    zeros: np.ndarray = field(repr=False)

    def __post_init__(self):
        zeros = np.asarray(self.zeros, dtype=float)
        if zeros.shape != (self.order,):
            raise ValueError(f"expected {self.order} zeros, got shape {zeros.shape}")
        object.__setattr__(self, "zeros", _frozen(zeros))

    def __len__(self):
        return self.order

    @property
    def spacing(self) -> float:
        """Asymptotic node spacing pi / sqrt(2N)."""
        return np.pi / np.sqrt(2.0 * self.order)

    @property
    def bound(self) -> float:
        """All zeros lie in (-bound, bound) with bound = sqrt(2N+1)."""
        return np.sqrt(2.0 * self.order + 1.0)

    def same_as(self, other: "HermiteGrid") -> bool:
        return self is other or (
            self.order == other.order and np.array_equal(self.zeros, other.zeros)
        )


@dataclass(frozen=True, eq=False)
class BasisMatrix:
    """Real orthogonal U with ``entries[m, k] = phi_m(t_k)`` (0-based m, k)."""

    grid: HermiteGrid
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", _frozen(np.asarray(self.entries, dtype=float)))

    @property
    def order(self) -> int:
        return self.grid.order


def jacobi_matrix(N: int) -> np.ndarray:
    """Dense symmetric tridiagonal T of order N (zero diagonal, sqrt(n/2) off it)."""
    off = np.sqrt(np.arange(1, N) / 2.0)
    return np.diag(off, 1) + np.diag(off, -1)


def _check_order(N) -> int:
    if isinstance(N, bool) or int(N) != N:
        raise TypeError(f"order must be an integer, got {N!r}")
    N = int(N)
    if N < 1:
        raise ValueError(f"order must be >= 1, got {N}")
    cap = max_order()
    if N > cap:
        raise ValueError(
            f"order {N} exceeds the validated cap {cap} (set {MAX_ORDER_ENV} to raise it)"
        )
    return N


def weighted_hermite_values(N: int, x) -> np.ndarray:
    """Orthonormal Hermite functions psi_0..psi_{N-1} at ``x``.

    Returns an array of shape ``(N,) + np.shape(x)``; for scalar ``x`` a
    plain vector of length N.
    """
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("x must be finite")
    out = np.empty((N,) + x.shape)
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if N > 1:
        out[1] = np.sqrt(2.0) * x * out[0]
    for m in range(1, N - 1):
        out[m + 1] = x * np.sqrt(2.0 / (m + 1)) * out[m] - np.sqrt(m / (m + 1.0)) * out[m - 1]
    return out


def _newton_ratio(N: int, x: np.ndarray) -> np.ndarray:
    # H_N / H_N' = psi_N / (sqrt(2N) psi_{N-1}); the Gaussian weight cancels.
    psi = weighted_hermite_values(N + 1, x)
    return psi[N] / (np.sqrt(2.0 * N) * psi[N - 1])


def hermite_zeros(N: int) -> HermiteGrid:
    """Zeros of the physicists' Hermite polynomial H_N, ascending.

    Eigenvalues of the Jacobi matrix, polished by one Newton step and then
    symmetrised so that ``t[k] == -t[N-1-k]`` holds exactly.
    """
    N = _check_order(N)
    if N == 1:
        return HermiteGrid(1, np.zeros(1))
    off = np.sqrt(np.arange(1, N) / 2.0)
    t = eigh_tridiagonal(np.zeros(N), off, eigvals_only=True)
    t = np.sort(t)
    t = t - _newton_ratio(N, t)
    t = 0.5 * (t - t[::-1])
    if N % 2:
        t[N // 2] = 0.0
    return HermiteGrid(N, t)


def basis_matrix(grid: HermiteGrid) -> BasisMatrix:
    """Eigenvector matrix U of T, columns normalised, signs fixed by phi_m.

    ``U[m, k] = psi_m(t_k) / (sqrt(N) psi_{N-1}(t_k))``.
    """
    N = grid.order
    psi = weighted_hermite_values(N, grid.zeros)
    last = psi[N - 1]
    if np.any(last == 0.0) or not np.all(np.isfinite(last)):
        bad = int(np.flatnonzero((last == 0.0) | ~np.isfinite(last))[0])
        raise ValueError(
            f"psi_{N - 1} vanishes at node {bad} (t={grid.zeros[bad]!r}); grid is not a set of H_N zeros"
        )
    return BasisMatrix(grid, psi / (np.sqrt(N) * last))
