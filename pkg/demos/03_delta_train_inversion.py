# %% [markdown]
# # Inverting a train of delta functions
#
# g(s) = 2 sum_{m=1}^n cosh(m s) is the two-sided transform of unit impulses
# at +-1, ..., +-n.  Nothing pointwise can be compared, but the inverse
# should peak at the integers, be real, and carry area 2n.  The grid has
# to cover [-n, n], which needs N > n^2 / 2.

# %%
import numpy as np

from hermlap.experiments import delta_train_area, delta_train_inverse, delta_train_peaks

for n, N in ((4, 40), (13, 100)):
    peaks, imag = delta_train_peaks(N, n)
    print(f"n={n:2d} N={N:3d}  peaks at {np.round(peaks, 2).tolist()}  max|Im|={imag:.1e}")

# %% [markdown]
# Area under the piecewise-linear interpolant, n = 1 (exact value 2).

# %%
for N in (50, 80, 100):
    print(f"N={N:3d}  area = {delta_train_area(N, 1):.4f}")

# %%
f = delta_train_inverse(100, 1)
for t, v in zip(f.grid.zeros[::5], f.values[::5]):
    print(f"{t:8.3f} {v.real:10.4f}")
