"""The published numerical experiments, as plain functions.

Each returns the computed quantity; :mod:`hermlap.demo` compares them to
the published values.
"""
from __future__ import annotations

import numpy as np

from .laplace import laplace_forward, laplace_inverse, laplace_operator
from .mellin import mellin_forward, mellin_inverse
from .reference import delta_train_pair, evaluate_pair, get_pair, relative_l2_error, trapezoid_area

__all__ = [
    "PUBLISHED",
    "transform_errors",
    "delta_train_inverse",
    "delta_train_area",
    "delta_train_peaks",
    "convergence_slope",
]

# value, absolute tolerance
PUBLISHED = {
    ("ex2", 40): {"forward": (0.023758, 1e-3), "inverse": (0.0236836, 1e-3)},
    ("ex3", 40): {"forward": (0.156919, 2e-3), "inverse": (0.0739943, 2e-3)},
    ("ex4", 40): {"forward": (0.00702041, 1e-3), "inverse": (0.00701767, 1e-3)},
    "ex1_area": {50: (2.0052, 5e-3), 80: (2.0032, 5e-3), 100: (2.0025, 5e-3)},
    "ex3_slope": (-0.5, 0.15),
}


def transform_errors(pair_id: str, N: int = 40):
    """Relative L2 errors (forward, inverse) of a builtin pair at order N."""
    pair = get_pair(pair_id)
    op = laplace_operator(N)
    f = evaluate_pair(pair, "time", op.grid)
    g = evaluate_pair(pair, "transform", op.grid)
    if pair.kind == "mellin":
        g_approx = mellin_forward(op, f.values)
        f_approx = mellin_inverse(op, g)
    else:
        g_approx = laplace_forward(op, f)
        f_approx = laplace_inverse(op, g)
    return (
        relative_l2_error(g_approx.values, g.values),
        relative_l2_error(f_approx.values, f.values),
    )


def delta_train_inverse(N: int, n: int = 1):
    """Numerical inverse of 2 sum_{m<=n} cosh(m s) on the order-N grid."""
    op = laplace_operator(N)
    g = evaluate_pair(delta_train_pair(n), "transform", op.grid)
    return laplace_inverse(op, g)


def delta_train_area(N: int, n: int = 1) -> float:
    f = delta_train_inverse(N, n)
    return trapezoid_area(f.values, f.grid.zeros)


def delta_train_peaks(N: int, n: int):
    """Positions of the n tallest positive-axis local maxima of Re f, ascending,
    together with max |Im f|."""
    f = delta_train_inverse(N, n)
    t = f.grid.zeros
    re = f.values.real
    inner = np.arange(1, N - 1)
    is_max = (re[inner] > re[inner - 1]) & (re[inner] > re[inner + 1]) & (t[inner] > 0)
    peaks = inner[is_max]
    tallest = peaks[np.argsort(re[peaks])[::-1][:n]]
    return np.sort(t[tallest]), float(np.abs(f.values.imag).max())


def convergence_slope(pair_id: str = "ex3", orders=(20, 40, 80, 160)) -> float:
    """Least-squares slope of log(forward error) against log(N)."""
    errs = [transform_errors(pair_id, N)[0] for N in orders]
    slope, _ = np.polyfit(np.log(orders), np.log(errs), 1)
    return float(slope)
