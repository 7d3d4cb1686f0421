# Closed-form constants and their quadrature cross-checks.
#
# Run with:  python3 demos/01_constants.py

# %%
import numpy as np

from frachardy import constants as K

# %% [markdown]
# The constant C_{N,q} has a Gamma-function closed form and a radial integral.
# The two agree to machine precision.

# %%
for N in (2, 3, 4, 5):
    for q in (0.0, 0.5, 1.5):
        closed = K.c_constant(N, q)
        quad = K.c_constant_quadrature(N, q)
        print(f"N={N} q={q:<4} closed={closed:.15f} quad={quad:.15f} rel={abs(quad / closed - 1):.1e}")

# %% [markdown]
# The half-line constant Lambda_{s,p}. At p = 1 it equals 4/s. For p > 1 it stays
# strictly below 4/(sp), and the gap closes as p -> 1.

# %%
s = 0.4
for p in (1.0, 1.2, 1.5, 2.0):
    lam = K.lambda_constant(s, p)
    print(f"s={s} p={p}: Lambda={lam:.10f}  4/(sp)={4 / (s * p):.10f}")
print("forced quadrature at p=1:", K.lambda_constant(s, 1.0, force_quadrature=True), "vs", 4 / s)

# %% [markdown]
# Sharp p = 1 constants on the half-space and the punctured space, plus the
# ball-to-half-space ratio bound, which tends to 1/2 as s -> 1.

# %%
for s in (0.25, 0.5, 0.75):
    print(f"s={s}: half-space N=1 {K.sharp_halfspace(1, s, 1.0):.6f}, "
          f"punctured N=3 {K.sharp_punctured(3, s):.6f}")
for s in np.array([0.5, 0.9, 0.99, 0.999]):
    print(f"ball_ratio_bound(2, {s}) = {K.ball_ratio_bound(2, s):.6f}")
