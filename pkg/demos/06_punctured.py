# Domains with removed points: the punctured line and (-m,m) minus the integers.
#
# Run with:  python3 demos/06_punctured.py

# %%
from frachardy import constants as K
from frachardy.sets1d import Bounded, punctured_box
from frachardy.variational import cheeger_quotient, cheeger_search

# %% [markdown]
# On R^N minus the origin the unit ball is optimal, so its quotient equals the
# sharp constant.

# %%
for N in (1, 2, 3):
    s = 0.5
    ball = K.perimeter_ball_closed(N, s) / (N * K.unit_ball_volume(N) / (N - s))
    print(f"N={N}: ball quotient {ball:.12f}  sharp constant {K.sharp_punctured(N, s):.12f}")

# %% [markdown]
# Removing the integers from (-m,m) makes every piece a unit interval. The
# quotient of the full set is m^-q 4^(1-q)/q, which tends to 0 as m grows.

# %%
q = 0.5
for m in (1, 2, 4, 8):
    box = punctured_box(m)
    print(f"m={m}: full-set quotient {cheeger_quotient(Bounded(box), box, q):.8f}  "
          f"formula {m ** -q * 4 ** (1 - q) / q:.8f}")
print("search on m=2:", cheeger_search(Bounded(punctured_box(2)), q).quotient)
