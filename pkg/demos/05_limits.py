# Limits of the fractional perimeter as s -> 1 and s -> 0, with extrapolation.
#
# Run with:  python3 demos/05_limits.py

# %%
import math

from frachardy import constants as K
from frachardy.fracmeasures import perimeter_interval_union
from frachardy.sets1d import IntervalUnion
from frachardy.verify import ladder, richardson

# %% [markdown]
# (1-s) P_s(E) tends to 2 omega_{N-1} times the classical perimeter. For an
# interval union that is 2 per endpoint. s P_s(E) tends to 2 N omega_N |E|.

# %%
E = IntervalUnion([(0.0, 1.0), (2.0, 3.0)])
hs = ladder(0.1, 5)
upper = [e * perimeter_interval_union(E, 1 - e).value for e in hs]
lower = [e * perimeter_interval_union(E, e).value for e in hs]
for e, a, b in zip(hs, upper, lower):
    print(f"eps={e:.5f}  (1-s)P at s=1-eps: {a:.6f}   sP at s=eps: {b:.6f}")
print("extrapolated:", richardson(hs, upper)[0], "target 8;", richardson(hs, lower)[0], "target 8")

# %% [markdown]
# The same limits for the unit disc, from the closed form.

# %%
up = [e * K.perimeter_ball_closed(2, 1 - e) for e in hs]
lo = [e * K.perimeter_ball_closed(2, e) for e in hs]
print(f"disc: {richardson(hs, up)[0]:.8f} vs 8 pi = {8 * math.pi:.8f}")
print(f"disc: {richardson(hs, lo)[0]:.8f} vs 4 pi^2 = {4 * math.pi ** 2:.8f}")
