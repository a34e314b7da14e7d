import math

import numpy as np
import pytest

from hermlap.fourier import SQRT_2PI, asymptotic_kernel, build_fourier_matrix, fourier_quadrature, sign_mask
from hermlap.hermite_core import basis_matrix, hermite_zeros
from hermlap.samples import GridMismatchError, SampleVector

import oracles

SIZES = [2, 5, 10, 40, 100]


def fourier(N):
    return build_fourier_matrix(basis_matrix(hermite_zeros(N)))


def test_order_one():
    assert fourier(1).entries.tolist() == [[1 + 0j]]


def test_order_two_exact():
    expected = np.array([[0.5 - 0.5j, -0.5 - 0.5j], [-0.5 - 0.5j, 0.5 - 0.5j]])
    np.testing.assert_allclose(fourier(2).entries, expected, rtol=0, atol=1e-15)


@pytest.mark.parametrize("N", [2, 3, 6, 9, 12])
def test_matches_closed_form_in_high_precision(N):
    _, F_ref = oracles.fourier_closed_form(N)
    ref = np.array([[complex(v) for v in row] for row in F_ref])
    np.testing.assert_allclose(fourier(N).entries, ref, rtol=0, atol=1e-13)


@pytest.mark.parametrize("N", SIZES)
def test_unitary_symmetric_factorised(N):
    F = fourier(N)
    E = F.entries
    assert np.abs(E.conj().T @ E - np.eye(N)).max() <= 1e-12 * N
    assert np.abs(E - E.T).max() <= 1e-12
    U = F.basis.entries
    ph = (-1j) ** np.arange(N)
    assert np.abs(E - U.T @ np.diag(ph) @ U).max() <= 1e-13


def test_unitarity_n40_bound():
    E = fourier(40).entries
    assert np.abs(E.conj().T @ E - np.eye(40)).max() <= 4e-11


@pytest.mark.parametrize("N", [1, 2, 7, 20, 40])
def test_discrete_eigenfunctions(N):
    # V^T = F U^T: column n of U^T maps to (-i)^n times itself
    F = fourier(N)
    Ut = F.basis.entries.T
    out = F.entries @ Ut
    expected = Ut * ((-1j) ** np.arange(N))
    assert np.abs(out - expected).max() <= 1e-12
    np.testing.assert_allclose(F.apply(Ut), expected, rtol=0, atol=1e-12)


@pytest.mark.parametrize("N", [1, 3, 16, 40])
def test_matrix_free_equals_dense(N):
    rng = np.random.default_rng(N)
    F = fourier(N)
    x = rng.normal(size=N) + 1j * rng.normal(size=N)
    np.testing.assert_allclose(F.apply(x), F.entries @ x, rtol=0, atol=1e-13)
    np.testing.assert_allclose(F.apply(x, conjugate=True), F.entries.conj() @ x, rtol=0, atol=1e-13)
    D = sign_mask(N)
    dense = SQRT_2PI * (np.outer(D, D) * F.entries) @ x
    np.testing.assert_allclose(fourier_quadrature(F, x).values, dense, rtol=0, atol=1e-12)


@pytest.mark.parametrize("N", SIZES)
def test_parseval(N):
    rng = np.random.default_rng(100 + N)
    x = rng.normal(size=N) + 1j * rng.normal(size=N)
    F = fourier(N)
    assert abs(np.linalg.norm(F.apply(x)) - np.linalg.norm(x)) <= 1e-12 * np.linalg.norm(x)


def test_kernel_order_one():
    assert asymptotic_kernel(hermite_zeros(1), 1, 1) == pytest.approx(math.sqrt(math.pi) / 2, abs=1e-15)


def test_kernel_order_two_is_same_magnitude():
    k = asymptotic_kernel(hermite_zeros(2), 1, 1)
    F11 = fourier(2).entries[0, 0]
    assert 0.1 < abs(k) / abs(F11) < 10


def test_kernel_rejects_bad_index():
    with pytest.raises(IndexError):
        asymptotic_kernel(hermite_zeros(3), 0, 1)


def _central_deviation(N):
    F = fourier(N)
    lo, hi = N // 3, N - N // 3
    return max(
        abs(F.entries[k - 1, j - 1] - asymptotic_kernel(F.grid, k, j))
        for k in range(lo + 1, hi + 1) for j in range(lo + 1, hi + 1)
    )


def test_kernel_deviation_shrinks():
    devs = [_central_deviation(N) for N in (20, 40, 80)]
    assert devs[0] > devs[1] > devs[2]


def test_gaussian_self_transform():
    F = fourier(40)
    t = F.grid.zeros
    out = fourier_quadrature(F, np.exp(-t * t / 2)).values
    exact = SQRT_2PI * np.exp(-t * t / 2)
    assert np.linalg.norm(out - exact) / np.linalg.norm(exact) <= 5e-2


def test_zero_in_zero_out():
    F = fourier(9)
    assert np.all(fourier_quadrature(F, np.zeros(9)).values == 0)


def test_grid_mismatch():
    F = fourier(5)
    with pytest.raises(GridMismatchError):
        fourier_quadrature(F, np.ones(4))
    with pytest.raises(GridMismatchError):
        fourier_quadrature(F, SampleVector(hermite_zeros(6), np.ones(6)))
