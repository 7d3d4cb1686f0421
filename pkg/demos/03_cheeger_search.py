# Searching for the optimal set of the fractional Cheeger problem.
#
# Run with:  python3 demos/03_cheeger_search.py

# %%
from frachardy.sets1d import Bounded, IntervalUnion, hausdorff_distance
from frachardy.variational import cheeger_quotient, cheeger_search

# %% [markdown]
# On (-1,1) the whole interval is optimal and the constant is 2^(2-s)/s.

# %%
omega = Bounded(IntervalUnion([(-1.0, 1.0)]))
for s in (0.25, 0.5, 0.75):
    r = cheeger_search(omega, s)
    print(f"s={s}: quotient {r.quotient:.10f}  exact {2 ** (2 - s) / s:.10f}  "
          f"best set {r.best_set}  hausdorff {hausdorff_distance(r.best_set, omega.union):.1e}")

# %% [markdown]
# A smaller subset has a larger quotient.

# %%
print(cheeger_quotient(omega, IntervalUnion([(-0.5, 0.5)]), 0.5))

# %% [markdown]
# n touching copies of (-1,1) behave like (-n,n) with the points in between removed.

# %%
s = 0.5
for n in (1, 2, 3):
    omega_n = Bounded(IntervalUnion([(-n + 2.0 * i, -n + 2.0 * i + 2.0) for i in range(n)]))
    r = cheeger_search(omega_n, s)
    print(f"n={n}: search {r.quotient:.8f}  formula {2 ** (2 - s) / (s * n ** s):.8f}  "
          f"({r.evaluations} evaluations)")

# %% [markdown]
# Two separated intervals: the search stays above the explicit lower bound.

# %%
ell, delta, s = 1.0, 0.5, 0.6
omega = Bounded(IntervalUnion([(0.0, ell), (ell + delta, 2 * ell + delta)]))
bound = (2 ** (2 - s) / s) * (1 - (ell / (ell + delta)) ** s)
print(f"search {cheeger_search(omega, s).quotient:.6f} >= bound {bound:.6f}")
