import math

import numpy as np
import pytest

from hermlap.hermite_core import hermite_zeros
from hermlap.laplace import (
    build_laplace,
    causal_embed,
    laplace_forward,
    laplace_inverse,
    laplace_operator,
)
from hermlap.reference import relative_l2_error
from hermlap.samples import GridMismatchError, NonFiniteSampleError


def random_complex(rng, n):
    return rng.normal(size=n) + 1j * rng.normal(size=n)


def test_order_one_entries():
    op = laplace_operator(1)
    assert op.forward[0, 0] == pytest.approx(math.sqrt(2 * math.pi))
    assert op.inverse[0, 0] == pytest.approx(1 / math.sqrt(2 * math.pi))


def test_order_two_inverse_times_forward():
    op = laplace_operator(2)
    assert np.abs(op.inverse @ op.forward - np.eye(2)).max() <= 1e-15


@pytest.mark.parametrize("N", [1, 2, 5, 10, 40, 100])
def test_inverse_is_exact_inverse(N):
    op = laplace_operator(N)
    assert np.abs(op.inverse @ op.forward - np.eye(N)).max() <= 1e-12 * N
    assert np.abs(op.forward - op.forward.T).max() <= 1e-12


def test_build_laplace_from_fourier():
    op = laplace_operator(6)
    again = build_laplace(op.fourier)
    np.testing.assert_array_equal(again.forward, op.forward)


@pytest.mark.parametrize("N", [3, 8, 40, 100])
def test_matrix_free_matches_dense(N):
    rng = np.random.default_rng(N)
    op = laplace_operator(N)
    x = random_complex(rng, N)
    np.testing.assert_allclose(laplace_forward(op, x).values, op.forward @ x, rtol=0, atol=1e-12 * N)
    np.testing.assert_allclose(laplace_inverse(op, x).values, op.inverse @ x, rtol=0, atol=1e-13 * N)


@pytest.mark.parametrize("N", [1, 2, 7, 40, 100])
def test_round_trip(N):
    rng = np.random.default_rng(7 * N)
    op = laplace_operator(N)
    f = random_complex(rng, N)
    back = laplace_inverse(op, laplace_forward(op, f)).values
    assert np.abs(back - f).max() <= 1e-12 * N
    again = laplace_forward(op, laplace_inverse(op, f)).values
    assert np.abs(again - f).max() <= 1e-12 * N


@pytest.mark.parametrize("direction", [laplace_forward, laplace_inverse])
def test_linearity(direction):
    rng = np.random.default_rng(3)
    op = laplace_operator(24)
    a, b = random_complex(rng, 24), random_complex(rng, 24)
    alpha, beta = complex(*rng.normal(size=2)), complex(*rng.normal(size=2))
    lhs = direction(op, alpha * a + beta * b).values
    rhs = alpha * direction(op, a).values + beta * direction(op, b).values
    assert np.abs(lhs - rhs).max() <= 1e-12 * max(1, np.abs(rhs).max())


def test_zero_maps_to_zero():
    op = laplace_operator(10)
    assert np.all(laplace_forward(op, np.zeros(10)).values == 0)


def test_gaussian_pair():
    op = laplace_operator(40)
    t = op.grid.zeros
    g = laplace_forward(op, np.exp(-t * t / 2)).values
    s = 1j * t
    assert relative_l2_error(g, math.sqrt(2 * math.pi) * np.exp(s * s / 2)) <= 5e-2


def test_one_sided_example_forward_and_inverse():
    op = laplace_operator(40)
    f = causal_embed(lambda t: np.exp(-t) * np.sin(t), op.grid)
    s = op.frequencies
    g = 1 / ((s + 1) ** 2 + 1)
    assert relative_l2_error(laplace_forward(op, f).values, g) == pytest.approx(0.023758, abs=1e-3)
    assert relative_l2_error(laplace_inverse(op, g).values, f.values) == pytest.approx(0.0236836, abs=1e-3)


def test_inverse_rejects_nonfinite():
    op = laplace_operator(4)
    with pytest.raises(NonFiniteSampleError) as info:
        laplace_inverse(op, [1, np.inf, 0, 0])
    assert info.value.index == 1


def test_grid_mismatch():
    with pytest.raises(GridMismatchError):
        laplace_forward(laplace_operator(4), np.ones(5))


def test_causal_embed_examples():
    assert causal_embed(lambda t: np.ones_like(t), hermite_zeros(2)).values.tolist() == [0, 1]
    assert causal_embed(lambda t: np.ones_like(t), hermite_zeros(3)).values.tolist() == [0, 1, 1]
    grid = hermite_zeros(40)
    f = causal_embed(lambda t: np.exp(-t) * np.sin(t), grid).values
    assert np.all(f[:20] == 0)
    np.testing.assert_array_equal(f[20:], np.exp(-grid.zeros[20:]) * np.sin(grid.zeros[20:]))


def test_causal_embed_array_and_errors():
    grid = hermite_zeros(4)
    out = causal_embed(np.array([np.nan, np.inf, 2.0, 3.0]), grid).values
    assert out.tolist() == [0, 0, 2, 3]
    with pytest.raises(NonFiniteSampleError):
        causal_embed(np.array([0, 0, np.nan, 1.0]), grid)
    with pytest.raises(ValueError):
        causal_embed(np.ones(3), grid)


def test_delta_train_peaks_and_imaginary_part():
    from hermlap.experiments import delta_train_peaks

    for n, N in ((1, 40), (4, 40)):
        t = hermite_zeros(N).zeros
        peaks, imag = delta_train_peaks(N, n)
        nearest = [t[np.argmin(np.abs(t - m))] for m in range(1, n + 1)]
        np.testing.assert_array_equal(peaks, nearest)
        assert imag <= 1e-10
