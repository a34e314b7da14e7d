"""Discrete Fourier, Laplace and Mellin transforms on the zeros of H_N.

Typical use::

    import numpy as np
    from hermlap import laplace_operator, laplace_forward, laplace_inverse

    op = laplace_operator(40)
    t = op.grid.zeros
    f = np.where(t >= 0, np.exp(-t) * np.sin(t), 0.0)
    g = laplace_forward(op, f)          # ~ 1/((s+1)^2+1) at s = i t_k
    f_back = laplace_inverse(op, g)
"""
from .fourier import FourierMatrix, asymptotic_kernel, build_fourier_matrix, fourier_quadrature
from .hermite_core import (
    BasisMatrix,
    HermiteGrid,
    basis_matrix,
    hermite_zeros,
    jacobi_matrix,
    weighted_hermite_values,
)
from .laplace import (
    LaplaceOperator,
    build_laplace,
    causal_embed,
    laplace_forward,
    laplace_inverse,
    laplace_operator,
)
from .mellin import MellinNodes, mellin_forward, mellin_inverse, mellin_nodes
from .reference import (
    AnalyticPair,
    complex_gamma,
    evaluate_pair,
    get_pair,
    relative_l2_error,
    trapezoid_area,
)
from .samples import (
    GridMismatchError,
    InadmissibleOrderError,
    NonFiniteSampleError,
    SampleVector,
)
from .tensor import (
    TensorLayout,
    TensorOperator,
    flatten_index,
    tensor_apply,
    tensor_operator,
    unflatten_index,
)

__version__ = "0.1.0"
