# %% [markdown]
# # How the errors change with N
#
# Forward errors of the four builtin pairs as N grows, and the log-log slope
# for the singular Mellin example.

# %%
import numpy as np

from hermlap.experiments import convergence_slope, transform_errors

orders = (20, 40, 80, 160)
for pair in ("ex2", "ex3", "ex4"):
    errs = [transform_errors(pair, N)[0] for N in orders]
    print(pair, "  ".join(f"N={N}: {e:.4g}" for N, e in zip(orders, errs)))

print("ex3 slope:", round(convergence_slope("ex3", orders), 3))
