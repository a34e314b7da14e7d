# %% [markdown]
# # Several variables: Kronecker-product operators
#
# In n variables the discrete transform is L_n x ... x L_1, applied one axis
# at a time.  Flat vectors put the first axis fastest:
# r = j_1 + (j_2 - 1) N_1 + ...

# %%
import numpy as np

from hermlap import TensorLayout, flatten_index, relative_l2_error, tensor_apply, tensor_operator

layout = TensorLayout((3, 4))
print([flatten_index((j1, j2), layout) for j2 in (1, 2) for j1 in (1, 2, 3)])

# %% [markdown]
# A causal 2-D function with a known transform:
# f = exp(-t1) sin(t1) exp(-t2) sin(t2) for t1, t2 >= 0
#   <->  1/((s1+1)^2+1) * 1/((s2+1)^2+1).

# %%
orders = (40, 30)
op = tensor_operator(orders)
t1, t2 = (L.grid.zeros for L in op.axes)
T1, T2 = np.meshgrid(t1, t2, indexing="ij")
f = np.where((T1 >= 0) & (T2 >= 0), np.exp(-T1 - T2) * np.sin(T1) * np.sin(T2), 0.0)
S1, S2 = 1j * T1, 1j * T2
g_exact = 1 / ((S1 + 1) ** 2 + 1) / ((S2 + 1) ** 2 + 1)

g = tensor_apply(op, f.reshape(-1, order="F")).values
print("2-D forward relative error:", relative_l2_error(g, g_exact.reshape(-1, order="F")))

back = tensor_apply(tensor_operator(orders, inverse=True), g).values
print("round trip:", np.abs(back - f.reshape(-1, order="F")).max())
