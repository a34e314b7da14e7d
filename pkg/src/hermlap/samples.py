"""Node-indexed sample vectors and the errors raised when they don't fit."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .hermite_core import HermiteGrid

__all__ = [
    "GridMismatchError",
    "NonFiniteSampleError",
    "InadmissibleOrderError",
    "SampleVector",
    "as_samples",
    "check_finite",
]


class GridMismatchError(ValueError):
    """Samples live on a different grid (or have a different length)."""


class NonFiniteSampleError(ValueError):
    """A sample is inf or nan; ``index`` and ``node`` locate the first one."""

    def __init__(self, message, index=None, node=None):
        super().__init__(message)
        self.index = index
        self.node = node


class InadmissibleOrderError(ValueError):
    """The requested order cannot be used for this problem."""


@dataclass(frozen=True, eq=False)
class SampleVector:
    """Complex values, one per node of ``grid``.

    ``grid`` is a :class:`HermiteGrid` for 1-D data or a
    :class:`~hermlap.tensor.TensorLayout` for flattened n-D data.
    ``domain`` says which side of the transform the values live on:
    ``"time"`` (t_j), ``"frequency"`` (s_k = i t_k) or ``"mellin"`` (x_j).
    """

    grid: object
    values: np.ndarray = field(repr=False)
    domain: str = "time"

    def __post_init__(self):
        values = np.array(self.values, dtype=complex).reshape(-1)
        if values.shape[0] != _size(self.grid):
            raise GridMismatchError(
                f"{values.shape[0]} values for a grid with {_size(self.grid)} nodes"
            )
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.values.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)


def _size(grid) -> int:
    if isinstance(grid, HermiteGrid):
        return grid.order
    return int(grid.size)


def _same_grid(a, b) -> bool:
    if isinstance(a, HermiteGrid) and isinstance(b, HermiteGrid):
        return a.same_as(b)
    return a == b


def as_samples(data, grid, domain="time") -> SampleVector:
    """Coerce ``data`` (SampleVector or array-like) onto ``grid``."""
    if isinstance(data, SampleVector):
        if not _same_grid(data.grid, grid):
            raise GridMismatchError("sample vector was built on a different grid")
        return data
    values = np.asarray(data, dtype=complex).reshape(-1)
    if values.shape[0] != _size(grid):
        raise GridMismatchError(f"expected {_size(grid)} samples, got {values.shape[0]}")
    return SampleVector(grid, values, domain)


def check_finite(values, nodes=None, what="sample"):
    bad = ~np.isfinite(values)
    if np.any(bad):
        j = int(np.flatnonzero(bad)[0])
        node = None if nodes is None else np.asarray(nodes)[j].item()
        where = f"index {j}" if node is None else f"index {j} (node {node!r})"
        raise NonFiniteSampleError(f"non-finite {what} at {where}", index=j, node=node)
