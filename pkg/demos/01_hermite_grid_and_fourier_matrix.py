# %% [markdown]
# # The Hermite grid and the discrete Fourier matrix
#
# Every transform in `hermlap` lives on one grid: the N zeros of the
# Hermite polynomial H_N.  They are the eigenvalues of a small symmetric
# tridiagonal matrix, and the eigenvectors (normalised Hermite functions
# sampled at the zeros) give a unitary Fourier matrix F.

# %%
import numpy as np

from hermlap import asymptotic_kernel, basis_matrix, build_fourier_matrix, hermite_zeros, jacobi_matrix

grid = hermite_zeros(8)
print("zeros of H_8:", np.round(grid.zeros, 6))
print("eigenvalues of T:", np.round(np.linalg.eigvalsh(jacobi_matrix(8)), 6))

# %% [markdown]
# The columns of U are orthonormal eigenvectors of T.  F = U^T diag((-i)^m) U.

# %%
U = basis_matrix(grid)
F = build_fourier_matrix(U)
E = F.entries
print("max |U^T U - I|   =", np.abs(U.entries.T @ U.entries - np.eye(8)).max())
print("max |F^H F - I|   =", np.abs(E.conj().T @ E - np.eye(8)).max())
print("max |F - F^T|     =", np.abs(E - E.T).max())

# %% [markdown]
# Sampled Hermite functions are exact discrete eigenvectors of F, the
# discrete counterpart of the continuous Fourier eigenfunctions.

# %%
for n in range(4):
    col = U.entries[n]
    i = np.argmax(np.abs(col))
    print(f"n={n}: (F phi_n) / phi_n =", np.round((E @ col)[i] / col[i], 12))

# %% [markdown]
# For large N the central block of F approaches a plain Riemann-sum kernel
# (dt / sqrt(2 pi)) (-1)^(j+k) exp(-i t_j w_k), dt = pi / sqrt(2N).

# %%
for N in (20, 40, 80, 160):
    g = hermite_zeros(N)
    E = build_fourier_matrix(basis_matrix(g)).entries
    k = j = N // 2
    print(f"N={N:4d}  |F_kj - kernel| at the centre = {abs(E[k - 1, j - 1] - asymptotic_kernel(g, k, j)):.3e}")
