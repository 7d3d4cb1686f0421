"""Fractional perimeters and distance-weighted volumes in one dimension.

Closed forms come from the antiderivative G(t) = t^(1-s) of the kernel
interaction; the oracle path is fully numerical and shares no code with it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .constants import unit_ball_volume
from .sets1d import Bounded, Domain1D, HalfLine, IntervalUnion, PuncturedLine, StepFunction
from .specfun import DomainError, QuadratureSpec, integrate, log_gamma

__all__ = [
    "Method",
    "MeasureResult",
    "interaction",
    "perimeter_interval_union",
    "perimeter_oracle",
    "perimeter_monte_carlo",
    "weighted_volume",
    "weighted_volume_ball",
    "seminorm_s1_step",
    "hardy_ratio_step",
]


class Method(str, Enum):
    closed_form = "closed_form"
    quadrature = "quadrature"
    monte_carlo = "monte_carlo"


@dataclass(frozen=True)
class MeasureResult:
    value: float
    method: Method
    err_estimate: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise DomainError(f"non-finite measure value {self.value}")
        if not self.err_estimate >= 0:
            raise DomainError("error estimate must be nonnegative")

    def __float__(self):
        return float(self.value)


def _check_s(s):
    if not 0.0 < s < 1.0:
        raise DomainError(f"s must lie in (0, 1), got {s}")


def _G(t: float, s: float) -> float:
    return t ** (1.0 - s) if t > 0 else 0.0


def interaction(I: tuple, J: tuple, s: float) -> float:
    """Integral of |x-y|^(-1-s) over I x J for intervals with I to the left of J."""
    a1, a2 = I
    b1, b2 = J
    if b1 < a2:
        raise DomainError("interaction needs I entirely to the left of J")
    num = math.fsum([_G(b1 - a1, s), -_G(b1 - a2, s), -_G(b2 - a1, s), _G(b2 - a2, s)])
    return num / (s * (1.0 - s))


def perimeter_interval_union(E: IntervalUnion, s: float) -> MeasureResult:
    """P_s(E) = sum of single-interval perimeters minus 4 times pairwise interactions."""
    _check_s(s)
    if len(E) == 0:
        raise DomainError("empty union")
    c = 4.0 / (s * (1.0 - s))
    terms = [c * ell ** (1.0 - s) for ell in E.lengths]
    ivs = E.intervals
    for i in range(len(ivs)):
        for j in range(i + 1, len(ivs)):
            terms.append(-4.0 * interaction(ivs[i], ivs[j], s))
    return MeasureResult(math.fsum(terms), Method.closed_form, 0.0)


def _inner_pieces(E: IntervalUnion, i: int):
    """Complement pieces relative to component i, as offsets from its endpoints.

    Left pieces are (near, far) gaps measured from a_i, right ones from b_i;
    far may be inf.
    """
    ivs = E.intervals
    a, b = ivs[i]
    left, right = [], []
    prev_end = -math.inf
    for j in range(i + 1):
        lo = prev_end
        hi = ivs[j][0]
        if hi > lo:
            left.append((a - hi, a - lo))
        prev_end = ivs[j][1]
    nxt_start = math.inf
    for j in range(len(ivs) - 1, i - 1, -1):
        lo = ivs[j][1]
        hi = nxt_start
        if hi > lo:
            right.append((lo - b, hi - b))
        nxt_start = ivs[j][0]
    return left, right


def _gap_potential(dist, near, far, s):
    # integral over a gap at offsets [near, far] beyond the endpoint of 1/(dist+y)^(1+s)
    out = (dist + near) ** (-s)
    if math.isfinite(far):
        out = out - (dist + far) ** (-s)
    return out / s


def _cell_integral(ell, left, right, s, spec):
    # inner integral at local coordinate w from a_i, summed over pieces; split at
    # the midpoint so each half measures distances from its own endpoint
    def from_left(w):
        tot = 0.0
        for near, far in left:
            tot = tot + _gap_potential(w, near, far, s)
        for near, far in right:
            tot = tot + _gap_potential(ell - w, near, far, s)
        return tot

    def from_right(w):
        tot = 0.0
        for near, far in right:
            tot = tot + _gap_potential(w, near, far, s)
        for near, far in left:
            tot = tot + _gap_potential(ell - w, near, far, s)
        return tot

    half = 0.5 * ell
    sp = spec.with_exponents(left=-s)
    v1, e1 = integrate(from_left, 0.0, half, sp)
    v2, e2 = integrate(from_right, 0.0, half, sp)
    return v1 + v2, e1 + e2


def perimeter_oracle(E: IntervalUnion, s: float, budget: int = 2**16,
                     tol: float = 1e-10) -> MeasureResult:
    """P_s(E) from 2 int_E int_{E^c} |x-y|^(-1-s): analytic inner integral, adaptive outer one."""
    _check_s(s)
    spec = QuadratureSpec(abs_tol=tol, rel_tol=tol, max_subdivisions=budget)
    total, err = [], 0.0
    for i, (a, b) in enumerate(E.intervals):
        left, right = _inner_pieces(E, i)
        v, e = _cell_integral(b - a, left, right, s, spec)
        total.append(v)
        err += e
    return MeasureResult(2.0 * math.fsum(total), Method.quadrature, 2.0 * err)


def perimeter_monte_carlo(E: IntervalUnion, s: float, n_samples: int = 200_000,
                          seed: int = 0) -> MeasureResult:
    """Monte Carlo P_s(E) in the endpoint-flattened variable; deterministic per seed."""
    _check_s(s)
    rng = np.random.default_rng(seed)
    gam = 1.0 / (1.0 - s)
    total, var = 0.0, 0.0
    for i, (a, b) in enumerate(E.intervals):
        left, right = _inner_pieces(E, i)
        ell = b - a
        half = 0.5 * ell
        for first, second in ((left, right), (right, left)):
            sig = rng.random(n_samples)
            w = half * sig**gam
            f = np.zeros_like(w)
            for near, far in first:
                f += _gap_potential(w, near, far, s)
            for near, far in second:
                f += _gap_potential(ell - w, near, far, s)
            f *= half * gam * sig ** (gam - 1.0)
            total += f.mean()
            var += f.var() / n_samples
    return MeasureResult(float(2.0 * total), Method.monte_carlo, float(6.0 * math.sqrt(var)))


def _power_integral(u0: float, u1: float, q: float) -> float:
    # integral of u^(-q) over [u0, u1], u0 >= 0
    return (u1 ** (1.0 - q) - u0 ** (1.0 - q)) / (1.0 - q)


def _interval_weighted(c: float, d: float, a: float, b: float, q: float) -> float:
    # integral of dist(x, {c, d})^(-q) over (a, b) subset of (c, d)
    m = 0.5 * (c + d)
    out = 0.0
    if a < m:
        out += _power_integral(a - c, min(b, m) - c, q)
    if b > m:
        out += _power_integral(d - b, d - max(a, m), q)
    return out


def _bounded_pieces(omega: IntervalUnion, E: IntervalUnion):
    """Split E along the components of omega; E must be covered up to null sets."""
    pieces = []
    for a, b in E.intervals:
        covered = 0.0
        for c, d in omega.intervals:
            lo, hi = max(a, c), min(b, d)
            if hi > lo:
                pieces.append((c, d, lo, hi))
                covered += hi - lo
        if covered < (b - a) * (1.0 - 1e-14):
            raise DomainError(f"component ({a}, {b}) is not contained in the domain")
    return pieces


def weighted_volume(omega: Domain1D, E: IntervalUnion, q: float) -> MeasureResult:
    """V_{q,omega}(E) = integral over E of d_omega^(-q), exactly by the power rule."""
    if not 0.0 < q < 1.0:
        raise DomainError(f"q must lie in (0, 1), got {q}")
    terms = []
    if isinstance(omega, Bounded):
        for c, d, lo, hi in _bounded_pieces(omega.union, E):
            terms.append(_interval_weighted(c, d, lo, hi, q))
    elif isinstance(omega, HalfLine):
        for a, b in E.intervals:
            if a < 0:
                raise DomainError(f"component ({a}, {b}) leaves the half-line")
            terms.append(_power_integral(a, b, q))
    elif isinstance(omega, PuncturedLine):
        for a, b in E.intervals:
            if a >= 0:
                terms.append(_power_integral(a, b, q))
            elif b <= 0:
                terms.append(_power_integral(-b, -a, q))
            else:
                terms.append(_power_integral(0.0, -a, q) + _power_integral(0.0, b, q))
    else:
        raise DomainError(f"unsupported domain {omega!r}")
    return MeasureResult(math.fsum(terms), Method.closed_form, 0.0)


def weighted_volume_ball(N: int, s: float, domain_kind: str = "ball_domain") -> float:
    """Weighted volume of the unit ball: in the ball itself, or with weight |x|^-s."""
    _check_s(s)
    if domain_kind == "ball_domain":
        return N * unit_ball_volume(N) * math.exp(log_gamma(N) + log_gamma(1.0 - s) - log_gamma(N + 1.0 - s))
    if domain_kind == "punctured_space":
        return N * unit_ball_volume(N) / (N - s)
    raise DomainError(f"unknown domain kind {domain_kind!r}")


def seminorm_s1_step(u: StepFunction, s: float) -> float:
    """[u]_{W^{s,1}} of a step function through the coarea formula."""
    _check_s(s)
    return math.fsum(gap * perimeter_interval_union(E, s).value for gap, E in u.layers())


def hardy_ratio_step(u: StepFunction, omega: Domain1D, s: float) -> float:
    """[u]_{s,1} / integral of u d^-s; an upper bound for the p = 1 Hardy constant."""
    _check_s(s)
    layers = u.layers()
    if not layers:
        raise DomainError("the zero function has no Hardy ratio")
    den = math.fsum(gap * weighted_volume(omega, E, s).value for gap, E in layers)
    num = math.fsum(gap * perimeter_interval_union(E, s).value for gap, E in layers)
    return num / den
