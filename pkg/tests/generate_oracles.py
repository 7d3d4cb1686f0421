"""Regenerate the frozen oracle values in oracle_values.py.

Each oracle avoids the package code path it checks:
  * Lambda(0.25, 2): composite 2-point Gauss rule on 10^6 panels per half,
    after power substitutions that flatten both endpoint singularities.
  * log Gamma(7.25): recurrence up to x + 30, then the Stirling series with
    Bernoulli numbers, in 50-digit arithmetic.
  * Near-critical Lambda values: 40-digit tanh-sinh with expm1/log1p forms.
  * P_s of (0,1) u (2,3): 2-D tanh-sinh over E x complement rectangles.
  * Two-level coarea seminorm: 2-D tanh-sinh of |u(x)-u(y)| |x-y|^(-1-s).

Run: python tests/generate_oracles.py > tests/oracle_values.py
"""
import mpmath as mp
import numpy as np


def lambda_fixed_grid(s, p, panels=10**6):
    q = s * p
    a = (q - 1.0) / p
    gx = np.array([-1.0, 1.0]) / np.sqrt(3.0)

    def composite(f):
        edges = np.linspace(0.0, 1.0, panels + 1)
        mid = 0.5 * (edges[1:] + edges[:-1])
        half = 0.5 * (edges[1:] - edges[:-1])
        tot = 0.0
        for x in gx:
            tot += np.sum(half * f(mid + half * x))
        return tot

    # t in (0, 1/2): t = sigma^(1/q) / 2; integrand t^(q-1) (1 - t^c)^p (1-t)^(-1-q)
    c = (1.0 - q) / p

    def f0(sig):
        t = 0.5 * sig ** (1.0 / q)
        return (0.5**q / q) * (-np.expm1(c * np.log(t))) ** p * (1.0 - t) ** (-1.0 - q)

    # v in (0, 1/2): v = sigma^(1/(p-q)) / 2; integrand v^(p-1-q) (|1-(1-v)^a| / v)^p
    e = p - 1.0 - q

    def f1(sig):
        v = 0.5 * sig ** (1.0 / (1.0 + e))
        return (0.5 ** (1.0 + e) / (1.0 + e)) * (np.abs(np.expm1(a * np.log1p(-v))) / v) ** p

    return 2.0 * (composite(f0) + composite(f1)) + 2.0 / q


def lambda_mp(s, p):
    mp.mp.dps = 40
    s, p = mp.mpf(s), mp.mpf(p)
    q = s * p
    a = (q - 1) / p

    def half(expo, g):
        gam = 1 / (1 + expo)
        sc = mp.mpf(0.5) ** (1 + expo) * gam
        return sc * mp.quad(lambda sg: g(mp.mpf(0.5) * sg**gam), mp.linspace(0, 1, 21))

    g0 = lambda t: (-mp.expm1((1 - q) / p * mp.log(t))) ** p * (1 - t) ** (-1 - q) if t != 0 else mp.mpf(1)
    g1 = lambda v: (abs(mp.expm1(a * mp.log1p(-v))) / v) ** p if v != 0 else abs(a) ** p
    return float(2 * (half(q - 1, g0) + half(p - 1 - q, g1)) + 2 / q)


def log_gamma_stirling(x, shift=30):
    mp.mp.dps = 50
    x = mp.mpf(x)
    acc = mp.mpf(0)
    for k in range(shift):
        acc += mp.log(x + k)
    z = x + shift
    series = (z - mp.mpf(0.5)) * mp.log(z) - z + mp.log(2 * mp.pi) / 2
    for k in range(1, 15):
        b = mp.bernoulli(2 * k)
        series += b / (2 * k * (2 * k - 1) * z ** (2 * k - 1))
    return float(series - acc)


def _rect(a, b, c, d, s):
    """Integral of |x-y|^(-1-s) over (a,b) x (c,d) with b <= c, d possibly inf.

    A shared corner b == c is handled by a Duffy split of the corner square,
    which leaves only one-dimensional endpoint singularities.
    """
    k = lambda x, y: abs(x - y) ** (-1 - s)
    if mp.isinf(d):
        # tail y = e tau^(-1/s) for tau in (0, 1] turns the algebraic decay into a bounded integrand
        e = c + (b - a) if c + (b - a) > 0 else mp.mpf(1)
        head = _rect(a, b, c, e, s)
        tail = mp.quad(lambda x, t: k(x, e * t ** (-1 / s)) * e / s * t ** (-1 / s - 1),
                       [a, b], [0, 1])
        return head + tail
    if b < c:
        return mp.quad(k, [a, b], [c, d])
    L, M = b - a, d - c
    m = min(L, M)
    # corner square in local coordinates x' = b - x, y' = y - c; two equal triangles
    # x = xi^(1/(1-s)) absorbs the x^(-s) factor left by the Duffy map
    g = 1 / (1 - s)
    tri = mp.quad(lambda xi, t: g * (1 + t) ** (-1 - s), [0, m ** (1 - s)], [0, 1])
    out = 2 * tri
    if L > m:
        out += mp.quad(lambda x, y: (x + y) ** (-1 - s), [m, L], [0, m])
    if M > m:
        out += _rect(c - m, c, c + m, d, s)
    return out


def _pair(a, b, c, d, s):
    # reflect so that the first interval lies to the left
    if d <= a:
        return _rect(-b, -a, -d, -c, s)
    return _rect(a, b, c, d, s)


def perimeter_2d(ivs, s):
    mp.mp.dps = 20
    s = mp.mpf(s)
    comp = [(-mp.inf, ivs[0][0])]
    for (_, b), (a, _) in zip(ivs, ivs[1:]):
        if a > b:
            comp.append((b, a))
    comp.append((ivs[-1][1], mp.inf))
    tot = mp.mpf(0)
    for a, b in ivs:
        for c, d in comp:
            tot += _pair(mp.mpf(a), mp.mpf(b), c, d, s)
    return float(2 * tot)


def two_level_2d(s):
    # u = 1 on (0,1) and (2,3), 2 on (1,2), 0 elsewhere
    mp.mp.dps = 20
    s = mp.mpf(s)
    cells = [(-mp.inf, 0, 0), (0, 1, 1), (1, 2, 2), (2, 3, 1), (3, mp.inf, 0)]
    tot = mp.mpf(0)
    for i, (a, b, u) in enumerate(cells):
        for j, (c, d, w) in enumerate(cells):
            if j <= i or u == w:
                continue
            if mp.isinf(a):
                # mirror so the finite cell comes first
                val = _pair(-mp.mpf(d), -mp.mpf(c), -b, -a, s)
            else:
                val = _pair(mp.mpf(a), mp.mpf(b), mp.mpf(c), d, s)
            tot += 2 * abs(u - w) * val
    return float(tot)


if __name__ == "__main__":
    print('"""Frozen oracle values; regenerate with tests/generate_oracles.py."""')
    print(f"LAMBDA_025_2 = {float(lambda_fixed_grid(0.25, 2.0))!r}")
    print(f"LAMBDA_09_105 = {lambda_mp(0.9, 1.05)!r}")
    print(f"LAMBDA_0995_1002 = {lambda_mp(0.995, 1.002)!r}")
    print(f"LOG_GAMMA_725 = {log_gamma_stirling(7.25)!r}")
    print(f"PERIMETER_TWO_UNIT_S05 = {perimeter_2d([(0, 1), (2, 3)], 0.5)!r}")
    print(f"PERIMETER_TWO_UNIT_S025 = {perimeter_2d([(0, 1), (2, 3)], 0.25)!r}")
    print(f"TWO_LEVEL_S03 = {two_level_2d(0.3)!r}")
    print(f"TWO_LEVEL_S07 = {two_level_2d(0.7)!r}")
