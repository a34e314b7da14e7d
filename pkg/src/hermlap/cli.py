"""Command-line front end.

    hermlap zeros -N 3
    hermlap laplace -N 40 --builtin ex2 --compare builtin:ex2
    hermlap laplace-inv -N 40 --expr "1/((s+1)^2+1)" -o f.csv
    hermlap mellin -N 40 --expr "exp(-x/sqrt(2))*sin(x/sqrt(2))" --compare builtin:ex4
    hermlap laplace -N 3,4 --expr "exp(-(t1^2+t2^2)/2)"
    hermlap demo --example 2 -N 40

Exit status: 0 success, 1 usage error, 2 numerical failure (non-finite
samples, inadmissible order, or a demo check that does not reproduce).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from . import demo as demo_mod
from .expression import ExpressionDomainError, ExpressionSyntaxError, parse_expression
from .fourier import fourier_quadrature
from .hermite_core import hermite_zeros, max_order
from .laplace import causal_embed, laplace_operator
from .reference import evaluate_pair, get_pair, relative_l2_error, trapezoid_area
from .samples import GridMismatchError, InadmissibleOrderError, NonFiniteSampleError
from .tensor import tensor_apply, tensor_operator

SUBCOMMANDS = ("zeros", "fourier", "laplace", "laplace-inv", "mellin", "mellin-inv", "demo")

# which side of the transform the input and the output live on
_INPUT_SIDE = {
    "fourier": "time", "laplace": "time", "mellin": "mellin",
    "laplace-inv": "frequency", "mellin-inv": "frequency",
}
_OUTPUT_SIDE = {
    "fourier": "frequency", "laplace": "frequency", "mellin": "frequency",
    "laplace-inv": "time", "mellin-inv": "mellin",
}


class UsageError(Exception):
    pass


@dataclass
class JobSpec:
    subcommand: str
    orders: tuple = (40,)
    builtin: Optional[str] = None
    input_file: Optional[str] = None
    expr: Optional[str] = None
    output: Optional[str] = None
    fmt: str = "csv"
    compare: Optional[str] = None
    causal: bool = False
    example: Optional[int] = None
    outdir: Optional[str] = None

    def validate(self):
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if self.fmt not in ("csv", "json"):
            raise UsageError(f"format must be csv or json, got {self.fmt!r}")
        if self.subcommand in _INPUT_SIDE:
            given = [x for x in (self.builtin, self.input_file, self.expr) if x is not None]
            if len(given) != 1:
                raise UsageError("give exactly one of --builtin, --input, --expr")
        if self.subcommand in ("zeros", "fourier", "demo") and len(self.orders) > 1:
            raise UsageError(f"{self.subcommand} takes a single order")
        if (self.builtin or self.compare) and len(self.orders) != 1:
            raise UsageError("builtin pairs are one-dimensional")
        if any(n < 1 or n > max_order() for n in self.orders):
            raise UsageError(f"orders must lie in 1..{max_order()}, got {self.orders}")


# node bookkeeping ------------------------------------------------------------

def _axis_nodes(n, side):
    t = hermite_zeros(n).zeros
    return np.exp(-t) if side == "mellin" else t


def _node_columns(orders, side):
    """Per-node coordinates in flat (first-axis-fastest) order."""
    axes = [_axis_nodes(n, side) for n in orders]
    mesh = np.meshgrid(*axes, indexing="ij")
    return [m.reshape(-1, order="F") for m in mesh]


# sampling --------------------------------------------------------------------

def _sample_expression(text, orders, side):
    expr = parse_expression(text)
    var = {"time": "t", "frequency": "s", "mellin": "x"}[side]
    coords = _node_columns(orders, side)
    if side == "frequency":
        coords = [1j * c for c in coords]
    env = {}
    for name in expr.variables:
        if name == var and len(orders) == 1:
            env[name] = coords[0]
        elif name[0] == var and name[1:].isdigit() and 1 <= int(name[1:]) <= len(orders):
            env[name] = coords[int(name[1:]) - 1]
        else:
            raise UsageError(
                f"variable {name!r} not available here; use {var}"
                + (f"1..{var}{len(orders)}" if len(orders) > 1 else "")
            )
    size = int(np.prod(orders))
    values = expr.evaluate(**env) if env else expr.evaluate(_=np.zeros(size))
    return np.broadcast_to(np.asarray(values, dtype=complex), (size,)).copy()


def _sample_builtin(pair_id, n, side):
    pair = get_pair(pair_id)
    grid = hermite_zeros(n)
    want = "transform" if side == "frequency" else "time"
    return evaluate_pair(pair, want, grid).values


def read_samples(path):
    """Values from a CSV (index,node,re,im) or JSON file, in index order."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        return np.asarray(obj["re"], float) + 1j * np.asarray(obj["im"], float)
    rows = list(csv.DictReader(io.StringIO(text)))
    if not rows or not {"index", "re", "im"} <= set(rows[0]):
        raise UsageError(f"{path}: expected a CSV header index,node,re,im")
    rows.sort(key=lambda r: int(r["index"]))
    return np.array([float(r["re"]) + 1j * float(r["im"]) for r in rows])


# output ------------------------------------------------------------------------

def _fmt(v):
    return format(float(v), ".17g")


def render(kind, orders, nodes, values, fmt):
    values = np.asarray(values, dtype=complex)
    if fmt == "json":
        obj = {
            "kind": kind,
            "order": orders[0] if len(orders) == 1 else list(orders),
            "nodes": [float(c[i]) for i in range(len(values)) for c in nodes]
            if len(nodes) == 1 else [[float(c[i]) for c in nodes] for i in range(len(values))],
            "re": [float(v) for v in values.real],
            "im": [float(v) for v in values.imag],
        }
        return json.dumps(obj, indent=1) + "\n"
    lines = ["index,node,re,im"]
    for i, v in enumerate(values):
        node = ";".join(_fmt(c[i]) for c in nodes)
        lines.append(f"{i + 1},{node},{_fmt(v.real)},{_fmt(v.imag)}")
    return "\n".join(lines) + "\n"


def _emit(spec, text, stdout):
    if spec.output:
        Path(spec.output).write_text(text)
    else:
        stdout.write(text)


# jobs ----------------------------------------------------------------------------

def _compare(spec, result, report):
    pair = get_pair(spec.compare)
    grid = hermite_zeros(spec.orders[0])
    side = _OUTPUT_SIDE[spec.subcommand]
    if side == "time" and pair.time is None:
        area = trapezoid_area(result, grid.zeros)
        report.write(f"area: {area:.6g} (exact {pair.area:g})\n")
        return
    exact = evaluate_pair(pair, "transform" if side == "frequency" else "time", grid)
    err = relative_l2_error(result, exact.values)
    report.write(f"relative L2 error: {err:.6g}\n")


def _transform(spec, stdout, report):
    sub = spec.subcommand
    in_side = _INPUT_SIDE[sub]
    if spec.builtin is not None:
        data = _sample_builtin(spec.builtin, spec.orders[0], in_side)
    elif spec.expr is not None:
        data = _sample_expression(spec.expr, spec.orders, in_side)
    else:
        data = read_samples(spec.input_file)
        if data.shape[0] != int(np.prod(spec.orders)):
            raise GridMismatchError(
                f"{spec.input_file} holds {data.shape[0]} samples, expected {int(np.prod(spec.orders))}"
            )
    if spec.causal:
        if len(spec.orders) != 1 or in_side != "time":
            raise UsageError("--causal applies to one-dimensional time-domain input")
        data = causal_embed(data, hermite_zeros(spec.orders[0])).values

    if sub == "fourier":
        op = laplace_operator(spec.orders[0])
        result = fourier_quadrature(op.fourier, data).values
    else:
        op = tensor_operator(spec.orders, inverse=sub.endswith("-inv"))
        result = tensor_apply(op, data).values

    out_side = _OUTPUT_SIDE[sub]
    nodes = _node_columns(spec.orders, out_side)
    _emit(spec, render(sub, spec.orders, nodes, result, spec.fmt), stdout)
    if spec.compare:
        _compare(spec, result, report)
    return 0


def run_job(spec: JobSpec, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        spec.validate()
        if spec.subcommand == "zeros":
            z = hermite_zeros(spec.orders[0]).zeros
            _emit(spec, render("zeros", spec.orders, [z], z, spec.fmt), stdout)
            return 0
        if spec.subcommand == "demo":
            ok = demo_mod.run(
                example=spec.example,
                order=spec.orders[0] if spec.orders else None,
                outdir=spec.outdir,
                out=stdout,
            )
            return 0 if ok else 2
        report = stdout if spec.output else stderr
        return _transform(spec, stdout, report)
    except (UsageError, ExpressionSyntaxError, KeyError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    except (NonFiniteSampleError, InadmissibleOrderError, ExpressionDomainError,
            GridMismatchError, ZeroDivisionError, FloatingPointError) as exc:
        stderr.write(f"numerical failure: {exc}\n")
        return 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _orders(text):
    try:
        orders = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid order list {text!r}") from None
    return orders


def build_parser():
    parser = _Parser(prog="hermlap", description="Hermite-zero Laplace and Mellin transforms")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("-N", "--order", type=_orders, default=None,
                       help="order N, or per-axis orders like 3,4")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("-o", "--output")
        if name == "demo":
            p.add_argument("--example", type=int, choices=(1, 2, 3, 4, 5))
            p.add_argument("--outdir", help="write figure data files here")
            continue
        if name == "zeros":
            continue
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--builtin", help="ex1 (or ex1:n=4), ex2, ex3, ex4")
        src.add_argument("--input", dest="input_file", help="CSV or JSON sample file")
        src.add_argument("--expr", help="expression in t (time), s (transform) or x (Mellin)")
        p.add_argument("--compare", help="builtin:exK; print the relative L2 error")
        if name in ("fourier", "laplace"):
            p.add_argument("--causal", action="store_true", help="zero the samples at t < 0")
    return parser


def parse_args(argv) -> JobSpec:
    ns = build_parser().parse_args(argv)
    orders = ns.order
    if orders is None:
        if ns.subcommand == "zeros":
            raise UsageError("zeros needs -N")
        orders = () if ns.subcommand == "demo" else (40,)
    return JobSpec(
        subcommand=ns.subcommand,
        orders=orders,
        builtin=getattr(ns, "builtin", None),
        input_file=getattr(ns, "input_file", None),
        expr=getattr(ns, "expr", None),
        output=ns.output,
        fmt=ns.format,
        compare=getattr(ns, "compare", None),
        causal=getattr(ns, "causal", False),
        example=getattr(ns, "example", None),
        outdir=getattr(ns, "outdir", None),
    )


def main(argv=None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    try:
        spec = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return 1
    return run_job(spec, stdout, stderr)


if __name__ == "__main__":
    sys.exit(main())
