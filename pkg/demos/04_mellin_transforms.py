# %% [markdown]
# # Mellin transforms through x = exp(-t)
#
# The Mellin transform of f(x) is the two-sided Laplace transform of
# f(exp(-t)), so the same operator applies to resampled data.  The inverse
# gives f(exp(-t_j)) on the t grid, not f on an x grid.

# %%
import numpy as np

from hermlap import complex_gamma, laplace_operator, mellin_forward, mellin_inverse, mellin_nodes, relative_l2_error

op = laplace_operator(40)
s = op.frequencies
x = mellin_nodes(op.grid).abscissae

# %% [markdown]
# Smooth example: exp(-x/sqrt2) sin(x/sqrt2)  <->  sin(pi s / 4) Gamma(s).

# %%
f = lambda x: np.exp(-x / np.sqrt(2)) * np.sin(x / np.sqrt(2))
g = np.sin(np.pi * s / 4) * complex_gamma(s)
print("smooth  forward:", relative_l2_error(mellin_forward(op, f).values, g))
print("smooth  inverse:", relative_l2_error(mellin_inverse(op, g).values, f(x)))

# %% [markdown]
# Singular example: sqrt(x)/(1-x), whose transform exists only as a principal
# value, -pi tan(pi s).  Even N keeps every node off x = 1.

# %%
f = lambda x: np.sqrt(x) / (1 - x)
g = -np.pi * np.tan(np.pi * s)
print("singular forward:", relative_l2_error(mellin_forward(op, f).values, g))
print("singular inverse:", relative_l2_error(mellin_inverse(op, g).values, f(x)))

# %%
from hermlap import NonFiniteSampleError

try:
    mellin_forward(laplace_operator(41), f)
except NonFiniteSampleError as exc:
    print("odd N:", exc)
