"""Reproduce the published experiments and print a pass/fail table."""
from __future__ import annotations

import sys
from pathlib import Path

import numpy as np

from . import experiments as ex
from .hermite_core import hermite_zeros
from .laplace import laplace_forward, laplace_inverse, laplace_operator
from .reference import evaluate_pair, get_pair

_ROW = "{:<8} {:<26} {:>5} {:>12} {:>12} {:>8}  {}"


def _row(out, example, quantity, N, value, published, tol):
    if published is None:
        status, pub = "-", "n/a"
    else:
        status = "PASS" if abs(value - published) <= tol else "FAIL"
        pub = f"{published:.6g}"
    out.write(_ROW.format(example, quantity, N, f"{value:.6g}", pub,
                          "" if tol is None else f"{tol:.2g}", status) + "\n")
    return status != "FAIL"


def _write_series(path, nodes, values):
    values = np.asarray(values, dtype=complex)
    lines = ["index,node,re,im"]
    for i, (x, v) in enumerate(zip(nodes, values), start=1):
        lines.append(f"{i},{float(x):.17g},{v.real:.17g},{v.imag:.17g}")
    Path(path).write_text("\n".join(lines) + "\n")


def _pair_figure(outdir, tag, pair_id, N):
    op = laplace_operator(N)
    pair = get_pair(pair_id)
    f = evaluate_pair(pair, "time", op.grid)
    g = evaluate_pair(pair, "transform", op.grid)
    t = op.grid.zeros
    _write_series(outdir / f"{tag}a_exact.csv", t, g.values)
    _write_series(outdir / f"{tag}a_approx.csv", t, laplace_forward(op, f.values).values)
    _write_series(outdir / f"{tag}b_exact.csv", t, f.values)
    _write_series(outdir / f"{tag}b_approx.csv", t, laplace_inverse(op, g).values)


def _bracketing(t, m):
    """The two nodes on either side of m."""
    k = int(np.searchsorted(t, m))
    return t[max(k - 1, 0)], t[min(k, len(t) - 1)]


def _example_1(out, N, outdir):
    ok = True
    # n=4 must peak at the node nearest each integer; for n=13 the node
    # spacing is comparable to the distance ties, so either bracketing node counts
    for n, order, strict in ((4, N or 40, True), (13, N or 100, False)):
        peaks, imag = ex.delta_train_peaks(order, n)
        t = hermite_zeros(order).zeros
        if strict:
            nearest = np.array([t[np.argmin(np.abs(t - m))] for m in range(1, n + 1)])
            hit = peaks.shape == nearest.shape and np.array_equal(peaks, nearest)
            label = f"n={n} peaks nearest integers"
        else:
            hit = len(peaks) == n and all(
                p in _bracketing(t, m) for p, m in zip(peaks, range(1, n + 1))
            )
            label = f"n={n} peaks beside integers"
        ok &= _row(out, "1", label, order, float(hit), 1.0, 0.0)
        ok &= _row(out, "1", f"n={n} max |Im f|", order, imag, 0.0, 1e-10)
        if outdir:
            f = ex.delta_train_inverse(order, n)
            _write_series(outdir / f"fig1{'a' if n == 4 else 'b'}.csv", t, f.values)
    return ok


def _example_pair(out, number, pair_id, N, outdir):
    N = N or 40
    fwd, inv = ex.transform_errors(pair_id, N)
    pub = ex.PUBLISHED.get((pair_id, N), {})
    ok = True
    for name, value in (("forward", fwd), ("inverse", inv)):
        published, tol = pub.get(name, (None, None))
        ok &= _row(out, str(number), f"{name} rel. L2 error", N, value, published, tol)
    if outdir:
        _pair_figure(outdir, f"fig{number}", pair_id, N)
    return ok


def _example_5(out, N, outdir):
    ok = True
    for order, (published, tol) in ex.PUBLISHED["ex1_area"].items():
        ok &= _row(out, "5", "delta train area (n=1)", order,
                   ex.delta_train_area(order, 1), published, tol)
    orders = (20, 40, 80, 160)
    target, tol = ex.PUBLISHED["ex3_slope"]
    ok &= _row(out, "5", "ex3 log-log error slope", "20-160",
               ex.convergence_slope("ex3", orders), target, tol)
    if outdir:
        f = ex.delta_train_inverse(100, 1)
        _write_series(outdir / "fig5.csv", f.grid.zeros, f.values)
    return ok


def run(example=None, order=None, outdir=None, out=None) -> bool:
    """Run one example (1-5) or all of them; True when nothing FAILs."""
    out = out or sys.stdout
    if outdir is not None:
        outdir = Path(outdir)
        outdir.mkdir(parents=True, exist_ok=True)
    out.write(_ROW.format("example", "quantity", "N", "value", "published", "tol", "status") + "\n")
    todo = [example] if example else [1, 2, 3, 4, 5]
    ok = True
    for number in todo:
        if number == 1:
            ok &= _example_1(out, order, outdir)
        elif number in (2, 3, 4):
            ok &= _example_pair(out, number, f"ex{number}", order, outdir)
        else:
            ok &= _example_5(out, order, outdir)
    out.write(("PASS" if ok else "FAIL") + "\n")
    return ok
