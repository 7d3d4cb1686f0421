"""Closed-form constants of the fractional Hardy problem, plus quadrature routes.

All Gamma quotients are assembled in log space and exponentiated last.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .specfun import (
    DomainError,
    QuadratureSpec,
    integrate,
    integrate_weighted,
    log_gamma,
)

__all__ = [
    "FracParams",
    "unit_ball_volume",
    "c_constant",
    "c_constant_quadrature",
    "lambda_constant",
    "sharp_halfspace",
    "sharp_punctured",
    "perimeter_ball_closed",
    "ball_ratio_bound",
    "classical_constant",
    "halfline_tail_integral",
]

_LOG_PI = math.log(math.pi)


@dataclass(frozen=True)
class FracParams:
    """The triple (N, s, p) with the admissibility flags formulas check."""

    N: int
    s: float
    p: float = 1.0

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise DomainError(f"N must be an integer >= 1, got {self.N}")
        if not 0.0 < self.s < 1.0:
            raise DomainError(f"s must lie in (0, 1), got {self.s}")
        if not self.p >= 1.0:
            raise DomainError(f"p must be >= 1, got {self.p}")

    @property
    def sp(self) -> float:
        return self.s * self.p

    @property
    def sp_lt_1(self) -> bool:
        return self.s * self.p < 1.0

    @property
    def sp_le_1(self) -> bool:
        return self.s * self.p <= 1.0


def _check_s(s):
    if not 0.0 < s < 1.0:
        raise DomainError(f"s must lie in (0, 1), got {s}")


def _log_unit_ball_volume(k: int) -> float:
    return 0.5 * k * _LOG_PI - log_gamma(0.5 * k + 1.0)


def unit_ball_volume(k: int) -> float:
    """Lebesgue measure of the unit ball of R^k (k = 0 gives 1)."""
    if int(k) != k or k < 0:
        raise DomainError(f"k must be a nonnegative integer, got {k}")
    return math.exp(_log_unit_ball_volume(int(k)))


def c_constant(N: int, q: float) -> float:
    """pi^((N-1)/2) Gamma((q+1)/2) / Gamma((N+q)/2); exactly 1 for N = 1."""
    if not q >= 0:
        raise DomainError(f"q must be >= 0, got {q}")
    if int(N) != N or N < 1:
        raise DomainError(f"N must be an integer >= 1, got {N}")
    if N == 1:
        return 1.0
    return math.exp(0.5 * (N - 1) * _LOG_PI + log_gamma(0.5 * (q + 1.0)) - log_gamma(0.5 * (N + q)))


def c_constant_quadrature(N: int, q: float, spec: QuadratureSpec = None) -> float:
    """Same constant from its radial integral over (0, inf), mapped by t = u/(1-u)."""
    if int(N) != N or N < 2:
        raise DomainError(f"the integral form needs N >= 2, got {N}")
    if not q >= 0:
        raise DomainError(f"q must be >= 0, got {q}")
    if spec is None:
        spec = QuadratureSpec(abs_tol=1e-14, rel_tol=1e-13)
    e = 0.5 * (N + q)

    # t = u/(1-u) maps (0, inf) to (0, 1); near u = 1 the integrand is (1-u)^q
    value, _ = integrate_weighted(lambda u: u ** (N - 2) * ((1.0 - u) ** 2 + u * u) ** (-e),
                                  0.0, 1.0, right=q, spec=spec)
    return (N - 1) * unit_ball_volume(N - 1) * value


def halfline_tail_integral(N: int, s: float, spec: QuadratureSpec = None) -> float:
    """Integral of (1+t^2)^(-(N+s)/2) over (0, inf), by quadrature."""
    if spec is None:
        spec = QuadratureSpec(abs_tol=1e-14, rel_tol=1e-13)
    e = 0.5 * (N + s)
    # t = u/(1-u): (1-u)^(N+s-2) ((1-u)^2+u^2)^(-e)
    value, _ = integrate_weighted(lambda u: ((1.0 - u) ** 2 + u * u) ** (-e),
                                  0.0, 1.0, right=N + s - 2.0, spec=spec)
    return value


def _lambda_integral(s: float, p: float, spec: QuadratureSpec) -> float:
    q = s * p
    a = (q - 1.0) / p  # exponent of t inside |1 - t^a|

    # half near t = 0, in the variable t
    if q < 1.0:
        c = (1.0 - q) / p

        def g0(t):
            with np.errstate(divide="ignore"):
                lt = np.log(t)
            return (-np.expm1(c * lt)) ** p * (1.0 - t) ** (-1.0 - q)

        left, _ = integrate_weighted(g0, 0.0, 0.5, left=q - 1.0, spec=spec)
    else:
        def g0(t):
            with np.errstate(divide="ignore"):
                lt = np.log(t)
            return np.abs(np.expm1(a * lt)) ** p * (1.0 - t) ** (-1.0 - q)

        left, _ = integrate(g0, 0.0, 0.5, spec)

    # half near t = 1, in v = 1 - t; |1-(1-v)^a|^p v^(-1-q) = v^(p-1-q) * (|.|/v)^p
    def g1(v):
        v = np.asarray(v, dtype=float)
        out = np.empty_like(v)
        small = v == 0.0
        out[small] = abs(a) ** p
        vv = v[~small]
        out[~small] = (np.abs(np.expm1(a * np.log1p(-vv))) / vv) ** p
        return out

    right, _ = integrate_weighted(g1, 0.0, 0.5, left=p - 1.0 - q, spec=spec)
    return left + right


def lambda_constant(s: float, p: float, spec: QuadratureSpec = None,
                    force_quadrature: bool = False) -> float:
    """The one-dimensional half-line constant: 4/s at p = 1, quadrature otherwise.

    With force_quadrature the integral is evaluated even where a closed form
    exists, which gives an independent check of those values.
    """
    _check_s(s)
    if not p >= 1.0:
        raise DomainError(f"p must be >= 1, got {p}")
    q = s * p
    if not force_quadrature:
        if p == 1.0:
            return 4.0 / s
        if q == 1.0:
            return 2.0
    if spec is None:
        spec = QuadratureSpec(abs_tol=1e-13, rel_tol=1e-12)
    return 2.0 * _lambda_integral(s, p, spec) + 2.0 / q


def sharp_halfspace(N: int, s: float, p: float = 1.0) -> float:
    """Sharp Hardy constant of the half-space: C_{N,sp} times the 1-D constant."""
    _check_s(s)
    return c_constant(N, s * p) * lambda_constant(s, p)


def sharp_punctured(N: int, s: float) -> float:
    """Sharp p = 1 Hardy constant on R^N minus the origin (weight |x|^-s)."""
    _check_s(s)
    return (4.0 / s) * math.exp(
        0.5 * N * _LOG_PI + log_gamma(1.0 - s) - log_gamma(0.5 * (N - s)) - log_gamma(1.0 - 0.5 * s)
    )


def perimeter_ball_closed(N: int, s: float) -> float:
    """Fractional s-perimeter of the unit ball of R^N in closed form."""
    _check_s(s)
    log_w = _log_unit_ball_volume(N)
    log_val = (
        (1.0 - s / N) * log_w
        + math.log(N)
        + 0.5 * (N + s) * _LOG_PI
        + log_gamma(1.0 - s)
        - math.log(0.5 * s)
        - (s / N) * log_gamma(0.5 * N + 1.0)
        - log_gamma(1.0 - 0.5 * s)
        - log_gamma(0.5 * (N - s) + 1.0)
    )
    return math.exp(log_val)


def ball_ratio_bound(N: int, s: float) -> float:
    """Upper bound for h_{s,1}(ball) / h_{s,1}(half-space), N >= 2."""
    _check_s(s)
    if int(N) != N or N < 2:
        raise DomainError(f"ball_ratio_bound needs N >= 2, got {N}")
    return math.exp(
        0.5 * _LOG_PI
        - log_gamma(1.0 - 0.5 * s)
        - log_gamma(0.5 + 0.5 * s)
        + log_gamma(0.5 * (N + s))
        - log_gamma(0.5 * (N - s))
        + log_gamma(N - s)
        - log_gamma(N)
    )


def classical_constant(p: float) -> float:
    """((p-1)/p)^p, the sharp constant of the local Hardy inequality."""
    if not p >= 1.0:
        raise DomainError(f"p must be >= 1, got {p}")
    if p == 1.0:
        return 0.0
    return ((p - 1.0) / p) ** p
