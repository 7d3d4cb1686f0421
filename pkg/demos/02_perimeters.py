# Fractional perimeters and distance-weighted volumes of interval unions.
#
# Run with:  python3 demos/02_perimeters.py

# %%
from frachardy.fracmeasures import (
    perimeter_interval_union,
    perimeter_monte_carlo,
    perimeter_oracle,
    seminorm_s1_step,
    weighted_volume,
)
from frachardy.sets1d import Bounded, HalfLine, IntervalUnion, StepFunction, parse_domain

# %% [markdown]
# Three independent routes to P_s of two unit intervals: the closed form,
# adaptive quadrature, and seeded Monte Carlo with a standard error.

# %%
E = parse_domain("union[(0,1),(2,3)]").union
s = 0.5
closed = perimeter_interval_union(E, s)
quad = perimeter_oracle(E, s)
mc = perimeter_monte_carlo(E, s, n_samples=200_000, seed=1)
print(f"closed form {closed.value:.12f}")
print(f"quadrature  {quad.value:.12f}  (err est {quad.err_estimate:.1e})")
print(f"monte carlo {mc.value:.6f}  (std err {mc.err_estimate:.1e})")

# %% [markdown]
# Touching pieces are kept apart in the data structure, but the perimeter sees
# only the union.

# %%
split = IntervalUnion([(-1.0, 0.0), (0.0, 1.0)])
print(perimeter_interval_union(split, s).value, perimeter_interval_union(split.merged(), s).value)

# %% [markdown]
# Weighted volumes use the distance to the boundary of the ambient domain.

# %%
I = IntervalUnion([(-1.0, 1.0)])
print("V_0.5 of (-1,1) inside itself:", weighted_volume(Bounded(I), I, 0.5).value)
print("V_0.5 of (0,1) in the half-line:", weighted_volume(HalfLine(), IntervalUnion([(0.0, 1.0)]), 0.5).value)

# %% [markdown]
# For step functions the W^{s,1} seminorm is a sum of level-set perimeters.

# %%
u = StepFunction([0.0, 1.0, 2.0, 3.0], [1.0, 2.0, 1.0])
print("seminorm of 1_(0,3) + 1_(1,2):", seminorm_s1_step(u, 0.3))
