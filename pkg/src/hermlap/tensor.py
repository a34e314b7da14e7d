"""Multidimensional transforms as Kronecker products of per-axis operators.

Flat vectors are ordered with the first axis varying fastest:

    r = j_1 + (j_2 - 1) N_1 + (j_3 - 1) N_1 N_2 + ...     (1-based)

which is column-major (Fortran) order.  ``tensor_apply`` computes
(L_n x ... x L_1) f by contracting one axis at a time, axis 1 first, and
never builds the P x P matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

import numpy as np

from .laplace import LaplaceOperator, laplace_operator
from .samples import GridMismatchError, SampleVector, check_finite

__all__ = [
    "TensorLayout",
    "TensorOperator",
    "flatten_index",
    "unflatten_index",
    "tensor_operator",
    "tensor_apply",
    "kronecker_matrix",
]


@dataclass(frozen=True)
class TensorLayout:
    orders: tuple

    def __post_init__(self):
        orders = tuple(int(n) for n in self.orders)
        if not orders or any(n < 1 for n in orders):
            raise ValueError(f"axis orders must be positive, got {self.orders!r}")
        object.__setattr__(self, "orders", orders)

    @property
    def ndim(self) -> int:
        return len(self.orders)

    @property
    def size(self) -> int:
        return prod(self.orders)


def flatten_index(indices, layout: TensorLayout) -> int:
    """1-based multi-index (j_1, ..., j_n) to 1-based flat index r."""
    indices = tuple(int(j) for j in indices)
    if len(indices) != layout.ndim:
        raise IndexError(f"expected {layout.ndim} indices, got {len(indices)}")
    for axis, (j, n) in enumerate(zip(indices, layout.orders), start=1):
        if not 1 <= j <= n:
            raise IndexError(f"index j_{axis}={j} outside 1..{n}")
    r, stride = 1, 1
    for j, n in zip(indices, layout.orders):
        r += (j - 1) * stride
        stride *= n
    return r


def unflatten_index(r: int, layout: TensorLayout) -> tuple:
    if not 1 <= r <= layout.size:
        raise IndexError(f"flat index {r} outside 1..{layout.size}")
    rem, out = r - 1, []
    for n in layout.orders:
        rem, j = divmod(rem, n)
        out.append(j + 1)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class TensorOperator:
    axes: tuple
    inverse: bool = False

    @property
    def layout(self) -> TensorLayout:
        return TensorLayout(tuple(op.order for op in self.axes))

    def nodes(self) -> list:
        """Per-axis zeros, axis 1 first."""
        return [op.grid.zeros for op in self.axes]


def tensor_operator(orders, inverse=False) -> TensorOperator:
    """Operator for per-axis orders (N_1, ..., N_n); equal orders share one L."""
    layout = TensorLayout(tuple(orders))
    return TensorOperator(tuple(laplace_operator(n) for n in layout.orders), inverse)


def tensor_apply(op: TensorOperator, data) -> SampleVector:
    layout = op.layout
    if isinstance(data, SampleVector):
        if data.grid != layout:
            raise GridMismatchError("sample vector was built on a different layout")
        data = data.values
    flat = np.asarray(data, dtype=complex).reshape(-1)
    if flat.shape[0] != layout.size:
        raise GridMismatchError(f"expected {layout.size} values, got {flat.shape[0]}")
    check_finite(flat)
    x = flat.reshape(layout.orders, order="F")
    for axis, L in enumerate(op.axes):
        x = np.moveaxis(x, axis, 0)
        x = L.apply(x.reshape(L.order, -1), inverse=op.inverse).reshape(x.shape)
        x = np.moveaxis(x, 0, axis)
    domain = "time" if op.inverse else "frequency"
    return SampleVector(layout, x.reshape(-1, order="F"), domain)


def kronecker_matrix(op: TensorOperator) -> np.ndarray:
    """Dense L_n x ... x L_1; for checking small cases only."""
    mats = [L.inverse if op.inverse else L.forward for L in op.axes]
    out = np.ones((1, 1), dtype=complex)
    for M in mats:
        out = np.kron(M, out)
    return out
