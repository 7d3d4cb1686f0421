"""One-dimensional geometry: interval unions, distance functions, rearrangements.

Touching intervals are kept apart on purpose: the shared endpoint is a
boundary point of the domain even though it is invisible to P_s.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .specfun import DomainError

__all__ = [
    "IntervalUnion",
    "Domain1D",
    "Bounded",
    "HalfLine",
    "PuncturedLine",
    "parse_domain",
    "format_domain",
    "punctured_box",
    "distance",
    "delta_levelset_measure",
    "RadialProfile",
    "rearrange_delta_equal",
    "rearrange_radius",
    "StepFunction",
    "rearrange_step",
    "ball_delta_rearranged",
    "hausdorff_distance",
]

PUNCTURED_BOX_LIMIT = 1.0e4
STEP_VALUE_TOL = 1e-12


@dataclass(frozen=True)
class IntervalUnion:
    """Finite union of open intervals, sorted, with disjoint interiors."""

    intervals: tuple

    def __init__(self, intervals: Sequence):
        ivs = tuple((float(a), float(b)) for a, b in intervals)
        for a, b in ivs:
            if not (math.isfinite(a) and math.isfinite(b)):
                raise DomainError(f"interval endpoints must be finite, got ({a}, {b})")
            if not a < b:
                raise DomainError(f"empty or reversed interval ({a}, {b})")
        for (_, b0), (a1, _) in zip(ivs, ivs[1:]):
            if b0 > a1:
                raise DomainError(f"intervals overlap or are unsorted near {b0} > {a1}")
        object.__setattr__(self, "intervals", ivs)

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    @property
    def lengths(self) -> np.ndarray:
        return np.array([b - a for a, b in self.intervals])

    @property
    def measure(self) -> float:
        return math.fsum(b - a for a, b in self.intervals)

    @property
    def hull(self) -> tuple:
        return self.intervals[0][0], self.intervals[-1][1]

    def contains(self, x: float) -> bool:
        return any(a < x < b for a, b in self.intervals)

    def component_of(self, x: float) -> int:
        """Index of the open component holding x, or -1."""
        for i, (a, b) in enumerate(self.intervals):
            if a < x < b:
                return i
        return -1

    def scaled(self, lam: float) -> "IntervalUnion":
        if not lam > 0:
            raise DomainError("scale factor must be positive")
        return IntervalUnion([(lam * a, lam * b) for a, b in self.intervals])

    def shifted(self, c: float) -> "IntervalUnion":
        return IntervalUnion([(a + c, b + c) for a, b in self.intervals])

    def merged(self) -> "IntervalUnion":
        """Explicitly fuse components that touch; never done implicitly."""
        out = [list(self.intervals[0])]
        for a, b in self.intervals[1:]:
            if a == out[-1][1]:
                out[-1][1] = b
            else:
                out.append([a, b])
        return IntervalUnion(out)

    def is_subset_of(self, other: "IntervalUnion") -> bool:
        """True when every component lies inside a single component of other."""
        return all(any(c <= a and b <= d for c, d in other.intervals) for a, b in self.intervals)

    def __str__(self):
        return format_union(self)


def format_union(E: IntervalUnion) -> str:
    if len(E) == 1:
        a, b = E.intervals[0]
        return f"interval({a!r},{b!r})"
    return "union[" + ",".join(f"({a!r},{b!r})" for a, b in E.intervals) + "]"


class Domain1D:
    """Base class of the admissible one-dimensional domains."""

    kind = "abstract"
    bounded = False

    def contains(self, x: float) -> bool:
        raise NotImplementedError

    def distance(self, x: float) -> float:
        raise NotImplementedError


@dataclass(frozen=True)
class Bounded(Domain1D):
    union: IntervalUnion
    kind = "bounded"
    bounded = True

    def contains(self, x):
        return self.union.contains(x)

    def distance(self, x):
        i = self.union.component_of(x)
        if i < 0:
            raise DomainError(f"x = {x} is not inside the domain")
        a, b = self.union.intervals[i]
        return min(x - a, b - x)

    def __str__(self):
        return format_union(self.union)


@dataclass(frozen=True)
class HalfLine(Domain1D):
    """The open half-line (0, inf)."""

    kind = "halfline"

    def contains(self, x):
        return x > 0

    def distance(self, x):
        if not x > 0:
            raise DomainError(f"x = {x} is not inside (0, inf)")
        return float(x)

    def __str__(self):
        return "halfline"


@dataclass(frozen=True)
class PuncturedLine(Domain1D):
    """The real line with the origin removed."""

    kind = "punctured"

    def contains(self, x):
        return x != 0

    def distance(self, x):
        if x == 0:
            raise DomainError("the origin is not inside the punctured line")
        return abs(float(x))

    def __str__(self):
        return "punctured"


def punctured_box(R: float) -> IntervalUnion:
    """(-R, R) with the integers removed, as a union of touching pieces."""
    R = float(R)
    if not 0 < R <= PUNCTURED_BOX_LIMIT:
        raise DomainError(f"punctured_box needs 0 < R <= {PUNCTURED_BOX_LIMIT:g}, got {R}")
    cuts = [-R] + [float(k) for k in range(math.floor(-R) + 1, math.ceil(R)) if -R < k < R] + [R]
    return IntervalUnion(list(zip(cuts[:-1], cuts[1:])))


_NUM = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_PAIR = re.compile(rf"\(\s*({_NUM})\s*,\s*({_NUM})\s*\)")


def parse_domain(text: str) -> Domain1D:
    """Parse interval(a,b), union[(a1,b1),...], halfline, punctured, punctured_box(R)."""
    t = text.strip()
    low = t.replace(" ", "").lower()
    if low == "halfline":
        return HalfLine()
    if low == "punctured":
        return PuncturedLine()
    m = re.fullmatch(rf"interval\(\s*({_NUM})\s*,\s*({_NUM})\s*\)", t.replace(" ", ""))
    if m:
        return Bounded(IntervalUnion([(float(m.group(1)), float(m.group(2)))]))
    m = re.fullmatch(rf"punctured_box\(\s*({_NUM})\s*\)", t.replace(" ", ""))
    if m:
        return Bounded(punctured_box(float(m.group(1))))
    m = re.fullmatch(r"union\[(.*)\]", t.replace(" ", ""))
    if m:
        body = m.group(1)
        pairs = _PAIR.findall(body)
        rebuilt = ",".join(f"({a},{b})" for a, b in pairs)
        if not pairs or rebuilt != body:
            raise DomainError(f"malformed union body: {body!r}")
        return Bounded(IntervalUnion([(float(a), float(b)) for a, b in pairs]))
    raise DomainError(f"unrecognized domain: {text!r}")


def format_domain(omega: Domain1D) -> str:
    return str(omega)


def distance(omega: Domain1D, x: float) -> float:
    """Distance from x to the boundary of omega; x must lie in omega."""
    return omega.distance(x)


def delta_levelset_measure(interval, s: float, t: float) -> float:
    """|{d_I^{-s} > t}| for a single interval I (given as (a, b) or a length)."""
    if not t > 0:
        raise DomainError(f"level must be positive, got {t}")
    if not 0 < s < 1:
        raise DomainError(f"s must lie in (0, 1), got {s}")
    length = float(interval) if np.isscalar(interval) else float(interval[1] - interval[0])
    if not length > 0:
        raise DomainError("interval must have positive length")
    if t <= 2.0**s * length ** (-s):
        return length
    return 2.0 * t ** (-1.0 / s)


@dataclass(frozen=True)
class RadialProfile:
    """x -> coef * |x|^{-s} on (-support, support), zero elsewhere."""

    coef: float
    s: float
    support: float

    def __call__(self, x):
        x = np.abs(np.asarray(x, dtype=float))
        with np.errstate(divide="ignore"):
            val = self.coef * x ** (-self.s)
        return np.where(x < self.support, val, 0.0)

    def distribution(self, t):
        """|{profile > t}| for t > 0."""
        t = np.asarray(t, dtype=float)
        return 2.0 * np.minimum(self.support, (self.coef / t) ** (1.0 / self.s))

    def integral_power(self, q_scale: float = 1.0) -> float:
        """Integral of profile^q_scale over its support (finite when s*q_scale < 1)."""
        e = self.s * q_scale
        if not e < 1:
            raise DomainError("profile power is not integrable")
        return 2.0 * self.coef**q_scale * self.support ** (1.0 - e) / (1.0 - e)


def rearrange_delta_equal(n: int, r: float, s: float) -> RadialProfile:
    """Rearrangement of d^{-s} on n disjoint intervals of half-length r.

    The profile is n^s |x|^{-s} on (-n r, n r); only the support depends on r.
    """
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if not r > 0:
        raise DomainError("half-length must be positive")
    if not 0 < s < 1:
        raise DomainError(f"s must lie in (0, 1), got {s}")
    return RadialProfile(coef=float(n) ** s, s=s, support=n * r)


def rearrange_radius(radii: Sequence[float], s: float, t: float) -> float:
    """Radius r(t) of the rearranged superlevel set {d^{-s} > t}^* for components of half-lengths radii."""
    if not t > 0:
        raise DomainError(f"level must be positive, got {t}")
    r = np.asarray(radii, dtype=float)
    if r.size == 0 or np.any(r <= 0):
        raise DomainError("radii must be positive")
    if np.any(np.diff(r) < 0):
        raise DomainError("radii must be sorted nondecreasingly")
    n = r.size
    # thresholds[j] = r_j^{-s}, j = 0..n+1 with r_0 = 0, r_{n+1} = inf
    thresholds = np.concatenate(([math.inf], r ** (-s), [0.0]))
    csum = np.concatenate(([0.0], np.cumsum(r)))
    for k in range(n + 1):
        lo, hi = thresholds[n + 1 - k], thresholds[n - k]
        if lo < t <= hi:
            return k * t ** (-1.0 / s) + csum[n - k]
    raise AssertionError("bins cover (0, inf)")


@dataclass(frozen=True, eq=False)
class StepFunction:
    """Nonnegative piecewise-constant function, zero outside [x_0, x_m]."""

    breakpoints: np.ndarray
    values: np.ndarray

    def __init__(self, breakpoints, values):
        x = np.asarray(breakpoints, dtype=float)
        v = np.asarray(values, dtype=float)
        if x.ndim != 1 or v.ndim != 1 or x.size != v.size + 1 or v.size == 0:
            raise DomainError("need m+1 breakpoints for m values, m >= 1")
        if not np.all(np.isfinite(x)) or np.any(np.diff(x) <= 0):
            raise DomainError("breakpoints must be finite and strictly increasing")
        if not np.all(np.isfinite(v)) or np.any(v < 0):
            raise DomainError("values must be finite and nonnegative")
        x.flags.writeable = False
        v.flags.writeable = False
        object.__setattr__(self, "breakpoints", x)
        object.__setattr__(self, "values", v)

    @classmethod
    def indicator(cls, E: IntervalUnion, c: float = 1.0) -> "StepFunction":
        xs, vs = [E.intervals[0][0]], []
        for (a, b), nxt in zip(E.intervals, list(E.intervals[1:]) + [None]):
            vs.append(c)
            xs.append(b)
            if nxt is not None and nxt[0] > b:
                vs.append(0.0)
                xs.append(nxt[0])
        return cls(xs, vs)

    def canonical(self) -> "StepFunction":
        """Merge equal neighbours (tolerance 1e-12) and strip zero end cells."""
        x, v = list(self.breakpoints), list(self.values)
        xs, vs = [x[0]], []
        for i, val in enumerate(v):
            if vs and abs(val - vs[-1]) <= STEP_VALUE_TOL:
                xs[-1] = x[i + 1]
            else:
                vs.append(val)
                xs.append(x[i + 1])
        while len(vs) > 1 and vs[0] <= STEP_VALUE_TOL:
            vs.pop(0)
            xs.pop(0)
        while len(vs) > 1 and vs[-1] <= STEP_VALUE_TOL:
            vs.pop()
            xs.pop()
        return StepFunction(xs, vs)

    def equals(self, other: "StepFunction", tol: float = STEP_VALUE_TOL) -> bool:
        a, b = self.canonical(), other.canonical()
        return (a.values.size == b.values.size
                and np.allclose(a.breakpoints, b.breakpoints, rtol=0, atol=tol)
                and np.allclose(a.values, b.values, rtol=0, atol=tol))

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.breakpoints)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        idx = np.searchsorted(self.breakpoints, x, side="right") - 1
        inside = (idx >= 0) & (idx < self.values.size)
        return np.where(inside, self.values[np.clip(idx, 0, self.values.size - 1)], 0.0)

    def integral(self, power: float = 1.0) -> float:
        return math.fsum(self.widths * self.values**power)

    def power(self, p: float) -> "StepFunction":
        return StepFunction(self.breakpoints, self.values**p)

    def scaled(self, c: float) -> "StepFunction":
        return StepFunction(self.breakpoints, c * self.values)

    def levels(self) -> np.ndarray:
        """Distinct positive values, increasing."""
        v = np.unique(self.values[self.values > STEP_VALUE_TOL])
        return v

    def superlevel(self, t: float):
        """{u > t} as an IntervalUnion (adjacent cells fused), or None if empty."""
        mask = self.values > t
        if not mask.any():
            return None
        out = []
        for i in np.flatnonzero(mask):
            a, b = self.breakpoints[i], self.breakpoints[i + 1]
            if out and out[-1][1] == a:
                out[-1][1] = b
            else:
                out.append([a, b])
        return IntervalUnion(out)

    def layers(self):
        """(gap, superlevel set) pairs with u = sum gap * indicator(superlevel)."""
        lv = self.levels()
        prev = 0.0
        out = []
        for val in lv:
            out.append((val - prev, self.superlevel(prev + 0.5 * (val - prev))))
            prev = val
        return out

    @property
    def support_hull(self) -> tuple:
        c = self.canonical()
        return float(c.breakpoints[0]), float(c.breakpoints[-1])


def rearrange_step(u: StepFunction) -> StepFunction:
    """Symmetric decreasing rearrangement of a step function."""
    lv = u.levels()
    if lv.size == 0:
        return StepFunction([-0.5, 0.5], [0.0])
    radii, vals = [], []
    for val in lv[::-1]:
        radii.append(0.5 * math.fsum(u.widths[u.values >= val - STEP_VALUE_TOL]))
        vals.append(val)
    # radii grow as the level drops; the top level is one centered cell
    breaks = [-r for r in radii[::-1]] + radii
    cells = vals[::-1][:-1] + [vals[0]] + vals[1:]
    return StepFunction(breaks, cells).canonical()


def ball_delta_rearranged(N: int, s: float, rho: float) -> float:
    """Rearranged d^{-s} of the unit ball of R^N at radius rho: (1-(1-rho^N)^{1/N})^{-s}."""
    if not 0 < rho < 1:
        raise DomainError(f"radius must lie in (0, 1), got {rho}")
    if int(N) != N or N < 1:
        raise DomainError(f"N must be a positive integer, got {N}")
    inner = -math.expm1(math.log1p(-(rho**N)) / N)
    return inner ** (-s)


def _dist_to_union(x: float, E: IntervalUnion) -> float:
    best = math.inf
    for a, b in E.intervals:
        if a <= x <= b:
            return 0.0
        best = min(best, abs(x - a), abs(x - b))
    return best


def _one_sided(A: IntervalUnion, B: IntervalUnion) -> float:
    pts = [c for iv in A.intervals for c in iv]
    gaps = [(B.intervals[i][1], B.intervals[i + 1][0]) for i in range(len(B) - 1)]
    for a, b in A.intervals:
        for g0, g1 in gaps:
            m = 0.5 * (g0 + g1)
            if a <= m <= b:
                pts.append(m)
    return max(_dist_to_union(x, B) for x in pts)


def hausdorff_distance(A: IntervalUnion, B: IntervalUnion) -> float:
    """Hausdorff distance between the closures of two interval unions."""
    return max(_one_sided(A, B), _one_sided(B, A))
