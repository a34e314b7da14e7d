# %% [markdown]
# # Laplace transform and Bromwich inversion of exp(-t) sin(t)
#
# A one-sided transform is a two-sided transform of the causal function
# that vanishes for t < 0.  The discrete operator evaluates it at s_k = i t_k,
# i.e. along the imaginary axis, and its inverse is a quadrature of the
# Bromwich integral along that same line.

# %%
import numpy as np

from hermlap import causal_embed, laplace_forward, laplace_inverse, laplace_operator, relative_l2_error

op = laplace_operator(40)
s = op.frequencies
f = causal_embed(lambda t: np.exp(-t) * np.sin(t), op.grid)
g_exact = 1 / ((s + 1) ** 2 + 1)

g = laplace_forward(op, f)
f_back = laplace_inverse(op, g_exact)

print("forward relative L2 error:", relative_l2_error(g.values, g_exact))   # ~0.023758
print("inverse relative L2 error:", relative_l2_error(f_back.values, f.values))  # ~0.0236836

# %% [markdown]
# The inverse is exact on discrete data: L^-1 L = I.

# %%
print("round trip:", np.abs(laplace_inverse(op, g).values - f.values).max())

# %% [markdown]
# Plot (optional; needs matplotlib).

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    w = op.grid.zeros
    fig, (a, b) = plt.subplots(1, 2, figsize=(10, 4))
    a.plot(w, g_exact.real, "k-", label="Re g")
    a.plot(w, g.values.real, "o", ms=3, label="Re g (discrete)")
    a.plot(w, g_exact.imag, "k--", label="Im g")
    a.plot(w, g.values.imag, "s", ms=3, label="Im g (discrete)")
    a.set_xlabel("omega")
    a.legend()
    b.plot(w, f.values.real, "k-", label="f")
    b.plot(w, f_back.values.real, "o", ms=3, label="inverse")
    b.set_xlabel("t")
    b.legend()
    fig.savefig("laplace_example.png", dpi=120)
    print("wrote laplace_example.png")
