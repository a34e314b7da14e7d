"""Analytic transform pairs, a complex Gamma function and error metrics."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .hermite_core import HermiteGrid
from .samples import InadmissibleOrderError, SampleVector, check_finite

__all__ = [
    "complex_gamma",
    "relative_l2_error",
    "trapezoid_area",
    "AnalyticPair",
    "PAIRS",
    "get_pair",
    "delta_train_pair",
    "evaluate_pair",
]

# Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _gamma_scalar(z: complex) -> complex:
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise ZeroDivisionError(f"Gamma has a pole at {z.real:g}")
    if z.real < 0.5:
        # reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (cmath.sin(math.pi * z) * _gamma_scalar(1.0 - z))
    z = z - 1.0
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (z + i)
    w = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * cmath.exp((z + 0.5) * cmath.log(w) - w) * acc


def complex_gamma(z):
    """Gamma(z) for complex z (scalar or array); raises at nonpositive integers."""
    if np.ndim(z) == 0:
        return _gamma_scalar(complex(z))
    z = np.asarray(z, dtype=complex)
    return np.array([_gamma_scalar(complex(v)) for v in z.ravel()]).reshape(z.shape)


def relative_l2_error(approx, exact) -> float:
    """||exact - approx||_2 / ||exact||_2 over complex vectors."""
    a = np.asarray(approx, dtype=complex).reshape(-1)
    b = np.asarray(exact, dtype=complex).reshape(-1)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape[0]} vs {b.shape[0]}")
    ref = np.linalg.norm(b)
    if ref == 0.0:
        raise ZeroDivisionError("reference vector has zero norm")
    return float(np.linalg.norm(b - a) / ref)


def trapezoid_area(values, nodes) -> float:
    """Area under the piecewise-linear interpolant of Re(values) over all nodes."""
    return float(np.trapezoid(np.real(np.asarray(values)), np.asarray(nodes, dtype=float)))


@dataclass(frozen=True)
class AnalyticPair:
    """A function and its transform.

    ``kind`` is ``"two-sided"``, ``"one-sided"`` or ``"mellin"``.  For
    ``"mellin"`` the time side is f(x) and is sampled at x = exp(-t).
    ``time`` is None when the time side is not pointwise evaluable.
    """

    identifier: str
    time: Optional[Callable]
    transform: Callable
    kind: str
    note: str = ""
    even_order_only: bool = False
    min_order: int = 1
    area: Optional[float] = None


def _ex2_time(t):
    return np.exp(-t) * np.sin(t)


def _ex2_transform(s):
    return 1.0 / ((s + 1.0) ** 2 + 1.0)


def _ex3_time(x):
    return np.sqrt(x) / (1.0 - x)


def _ex3_transform(s):
    return -np.pi * np.tan(np.pi * s)


def _ex4_time(x):
    return np.exp(-x / np.sqrt(2.0)) * np.sin(x / np.sqrt(2.0))


def _ex4_transform(s):
    s = np.asarray(s, dtype=complex)
    at_zero = s == 0
    # removable singularity: sin(pi s/4) Gamma(s) -> pi/4 as s -> 0
    safe = np.where(at_zero, 1.0, s)
    return np.where(at_zero, np.pi / 4.0, np.sin(np.pi * safe / 4.0) * complex_gamma(safe))


def delta_train_pair(n: int = 1) -> AnalyticPair:
    """2 sum_{m=1}^n cosh(m s): unit impulses at +-1, ..., +-n.

    The time side has no pointwise values; its reference is the total
    area 2n.  Needs N > n^2 / 2 so that [-n, n] lies inside the grid.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")

    def transform(s):
        s = np.asarray(s, dtype=complex)
        return 2.0 * sum(np.cosh(m * s) for m in range(1, n + 1))

    return AnalyticPair(
        f"ex1:n={n}" if n != 1 else "ex1",
        None,
        transform,
        "two-sided",
        note=f"requires N > {n * n / 2:g}",
        min_order=n * n // 2 + 1,
        area=2.0 * n,
    )


PAIRS = {
    "ex1": delta_train_pair(1),
    "ex2": AnalyticPair(
        "ex2", _ex2_time, _ex2_transform, "one-sided",
        note="exp(-t) sin(t), t >= 0  <->  1/((s+1)^2+1)",
    ),
    "ex3": AnalyticPair(
        "ex3", _ex3_time, _ex3_transform, "mellin",
        note="sqrt(x)/(1-x)  <->  -pi tan(pi s) (principal value); even N only",
        even_order_only=True,
    ),
    "ex4": AnalyticPair(
        "ex4", _ex4_time, _ex4_transform, "mellin",
        note="exp(-x/sqrt2) sin(x/sqrt2)  <->  sin(pi s/4) Gamma(s)",
    ),
}


def get_pair(identifier: str) -> AnalyticPair:
    """Look up ``ex1``..``ex4``; ``ex1:n=4`` selects a longer delta train."""
    key = identifier.strip().lower()
    if key.startswith("builtin:"):
        key = key[len("builtin:"):]
    if key.startswith("ex1:"):
        opt = key[4:]
        if not opt.startswith("n="):
            raise KeyError(identifier)
        return delta_train_pair(int(opt[2:]))
    try:
        return PAIRS[key]
    except KeyError:
        raise KeyError(f"unknown builtin pair {identifier!r}; choose from {sorted(PAIRS)}") from None


def check_admissible(pair: AnalyticPair, N: int):
    if pair.even_order_only and N % 2:
        raise InadmissibleOrderError(
            f"{pair.identifier} needs an even order (odd N puts a node on the singularity x=1)"
        )
    if N < pair.min_order:
        raise InadmissibleOrderError(f"{pair.identifier} {pair.note}, got N={N}")


def evaluate_pair(pair: AnalyticPair, side: str, grid: HermiteGrid) -> SampleVector:
    """Exact values of one side of ``pair`` on the nodes of ``grid``.

    ``side="transform"`` evaluates at s_k = i t_k.  ``side="time"`` gives
    f(t_j) (causally embedded for one-sided pairs) or, for Mellin pairs,
    f(exp(-t_j)).
    """
    check_admissible(pair, grid.order)
    t = grid.zeros
    if side == "transform":
        s = 1j * t
        with np.errstate(all="ignore"):
            values = np.asarray(pair.transform(s), dtype=complex)
        check_finite(values, s, f"{pair.identifier} transform value")
        return SampleVector(grid, values, "frequency")
    if side != "time":
        raise ValueError(f"side must be 'time' or 'transform', got {side!r}")
    if pair.time is None:
        raise ValueError(
            f"{pair.identifier} has no pointwise time side; compare areas (target {pair.area:g})"
        )
    if pair.kind == "mellin":
        x = np.exp(-t)
        with np.errstate(all="ignore"):
            values = np.asarray(pair.time(x), dtype=complex)
        check_finite(values, x, f"{pair.identifier} sample")
        return SampleVector(grid, values, "mellin")
    with np.errstate(all="ignore"):
        values = np.asarray(pair.time(t), dtype=complex)
    if pair.kind == "one-sided":
        values = np.where(t >= 0.0, values, 0.0)
    check_finite(values, t, f"{pair.identifier} sample")
    return SampleVector(grid, values, "time")
