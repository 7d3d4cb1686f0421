"""Optimization engines: Cheeger search over interval unions and grid Rayleigh descent.

Grid functions are piecewise constant on cells, so for sp < 1 every discrete
energy below is the exact continuous energy of an admissible function and
each reported quotient is a rigorous upper bound for the continuous problem.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import networkx as nx
import numpy as np

from .constants import c_constant, halfline_tail_integral, perimeter_ball_closed, unit_ball_volume
from .fracmeasures import (
    hardy_ratio_step,
    perimeter_interval_union,
    weighted_volume,
)
from .sets1d import Bounded, Domain1D, HalfLine, IntervalUnion, StepFunction
from .specfun import DomainError

__all__ = [
    "MinimizationError",
    "MinimizeConfig",
    "CheegerResult",
    "GridFunction",
    "RayleighResult",
    "cheeger_quotient",
    "cheeger_search",
    "grid_operator",
    "seminorm_p_grid",
    "weighted_lp_grid",
    "rayleigh_gradient",
    "minimize_rayleigh",
    "product_upper_bound",
]

COARSE_CELLS = 64
GOLDEN_TOL = 1e-8
ARMIJO = 1e-4
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


class MinimizationError(RuntimeError):
    """Raised when descent cannot produce a valid iterate; carries the offending state."""

    def __init__(self, message, iterate=None):
        super().__init__(message)
        self.iterate = iterate


@dataclass(frozen=True)
class MinimizeConfig:
    restarts: int = 4
    max_iters: int = 400
    step0: float = 1.0
    backtrack: float = 0.5
    tol: float = 1e-10
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 0 or self.max_iters < 1:
            raise DomainError("restarts must be >= 0 and max_iters >= 1")
        if not self.step0 > 0 or not self.tol > 0:
            raise DomainError("step0 and tol must be positive")
        if not 0 < self.backtrack < 1:
            raise DomainError("backtrack must lie in (0, 1)")


@dataclass
class CheegerResult:
    best_set: IntervalUnion
    quotient: float
    trace: list = field(default_factory=list)
    evaluations: int = 0


def _check_s(s):
    if not 0.0 < s < 1.0:
        raise DomainError(f"s must lie in (0, 1), got {s}")


def cheeger_quotient(omega: Domain1D, E: IntervalUnion, s: float) -> float:
    """P_s(E) / V_{s,omega}(E), both in closed form."""
    _check_s(s)
    if not E.measure > 0:
        raise DomainError("E must have positive measure")
    return perimeter_interval_union(E, s).value / weighted_volume(omega, E, s).value


# ---------------------------------------------------------------- cheeger search

def _G(t, s):
    t = np.asarray(t, dtype=float)
    with np.errstate(invalid="ignore"):
        return np.where(t > 0, np.abs(t) ** (1.0 - s), 0.0)


def _cell_system(omega: IntervalUnion, s: float, per_comp: int):
    """Cells, pair interactions K, exterior interactions X and weighted volumes V."""
    lo, hi, comp = [], [], []
    for c_idx, (c, d) in enumerate(omega.intervals):
        edges = np.linspace(c, d, per_comp + 1)
        edges[0], edges[-1] = c, d
        lo.append(edges[:-1])
        hi.append(edges[1:])
        comp.append(np.full(per_comp, c_idx))
    lo, hi, comp = np.concatenate(lo), np.concatenate(hi), np.concatenate(comp)
    ss = s * (1.0 - s)

    # K[i, j] for i left of j
    a1, a2 = lo[:, None], hi[:, None]
    b1, b2 = lo[None, :], hi[None, :]
    K = (_G(b1 - a1, s) - _G(b1 - a2, s) - _G(b2 - a1, s) + _G(b2 - a2, s)) / ss
    K = np.triu(K, 1)
    K = K + K.T

    # complement pieces: two half-lines and the nonempty gaps
    left_end, right_end = omega.intervals[0][0], omega.intervals[-1][1]
    X = (_G(hi - left_end, s) - _G(lo - left_end, s)) / ss
    X = X + (_G(right_end - lo, s) - _G(right_end - hi, s)) / ss
    for (_, g0), (g1, _) in zip(omega.intervals, omega.intervals[1:]):
        if g1 > g0:
            gap = np.zeros_like(lo)
            left_of = hi <= g0
            # cell left of the gap: interaction(cell, gap)
            gap[left_of] = (_G(g0 - lo[left_of], s) - _G(g0 - hi[left_of], s)
                            - _G(g1 - lo[left_of], s) + _G(g1 - hi[left_of], s)) / ss
            right_of = ~left_of
            gap[right_of] = (_G(lo[right_of] - g0, s) - _G(lo[right_of] - g1, s)
                             - _G(hi[right_of] - g0, s) + _G(hi[right_of] - g1, s)) / ss
            X = X + gap
    om = Bounded(omega)
    V = np.array([weighted_volume(om, IntervalUnion([(a, b)]), s).value for a, b in zip(lo, hi)])
    return lo, hi, comp, K, X, V


def _min_cut_set(K, X, V, lam):
    """Minimize P(S) - lam V(S) over unions of cells via an s-t minimum cut."""
    n = len(V)
    unary = 2.0 * X - lam * V
    g = nx.DiGraph()
    g.add_nodes_from(range(n))
    g.add_node("src")
    g.add_node("snk")
    for i in range(n):
        if unary[i] >= 0:
            g.add_edge(i, "snk", capacity=float(unary[i]))
        else:
            g.add_edge("src", i, capacity=float(-unary[i]))
    ii, jj = np.nonzero(np.triu(K, 1))
    for i, j in zip(ii, jj):
        w = 2.0 * K[i, j]
        g.add_edge(int(i), int(j), capacity=w)
        g.add_edge(int(j), int(i), capacity=w)
    _, (src_side, _) = nx.minimum_cut(g, "src", "snk")
    mask = np.zeros(n, dtype=bool)
    for v in src_side:
        if v != "src":
            mask[v] = True
    return mask


def _runs(mask, lo, hi, comp):
    """Maximal runs of selected cells inside each component, as intervals."""
    out = []
    i, n = 0, len(mask)
    while i < n:
        if mask[i]:
            j = i
            while j + 1 < n and mask[j + 1] and comp[j + 1] == comp[i]:
                j += 1
            out.append((lo[i], hi[j], int(comp[i])))
            i = j + 1
        else:
            i += 1
    return out


class _Objective:
    """Quotient of a parametrized union, counting evaluations."""

    def __init__(self, omega: Bounded, s: float):
        self.omega = omega
        self.s = s
        self.count = 0

    def __call__(self, ivs):
        self.count += 1
        live = [(a, b) for a, b in ivs if b > a]
        if not live:
            return math.inf
        E = IntervalUnion(sorted(live))
        return cheeger_quotient(self.omega, E, self.s)


def _better(q1, x1, q0, x0):
    if q1 < q0:
        return True
    return q1 == q0 and tuple(x1) < tuple(x0)


def _golden(f, lo, hi, tol=GOLDEN_TOL):
    """Golden-section minimizer on [lo, hi]; the endpoints are also compared."""
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    cands = [(fc, c), (fd, d), (f(lo), lo), (f(hi), hi)]
    return min(cands, key=lambda t: (t[0], t[1]))


def _refine(obj, ivs, comps, comp_bounds, max_sweeps, trace, q0):
    """Coordinate-wise golden-section refinement of all 2k endpoints."""
    x = [list(iv) for iv in ivs]
    best = q0
    it = len(trace)
    for _ in range(max_sweeps):
        improved = False
        for j in range(len(x)):
            c_lo, c_hi = comp_bounds[comps[j]]
            prev_hi = max([x[i][1] for i in range(j) if comps[i] == comps[j]], default=c_lo)
            next_lo = min([x[i][0] for i in range(j + 1, len(x)) if comps[i] == comps[j]], default=c_hi)
            for side in (0, 1):
                lo_b = prev_hi if side == 0 else x[j][0]
                hi_b = x[j][1] if side == 0 else next_lo
                if not hi_b > lo_b:
                    continue

                def f(t, j=j, side=side):
                    trial = [list(v) for v in x]
                    trial[j][side] = t
                    return obj(trial)

                qn, tn = _golden(f, lo_b, hi_b)
                if qn < best:
                    x[j][side] = tn
                    best = qn
                    improved = True
                    it += 1
                    trace.append((it, best))
        if not improved:
            break
    return x, best


def cheeger_search(omega: Domain1D, s: float, k: Optional[int] = None,
                   cfg: Optional[MinimizeConfig] = None,
                   cells_per_component: int = COARSE_CELLS) -> CheegerResult:
    """Upper bound for the fractional Cheeger constant of a bounded 1-D domain.

    A coarse phase minimizes exactly over unions of grid cells (Dinkelbach
    iteration on P - lam V, each step a minimum cut) and over all single grid
    intervals; the best candidate with at most k pieces is then refined by
    golden-section sweeps on its endpoints.
    """
    _check_s(s)
    if not isinstance(omega, Bounded):
        raise DomainError("cheeger_search needs a bounded domain")
    cfg = cfg or MinimizeConfig()
    U = omega.union
    ncomp = len(U)
    if k is None:
        k = ncomp
    if not 1 <= k <= ncomp + 2:
        raise DomainError(f"k must lie in [1, {ncomp + 2}], got {k}")
    obj = _Objective(omega, s)
    lo, hi, comp, K, X, V = _cell_system(U, s, cells_per_component)

    candidates = []  # (quotient, flat endpoints, [(a, b, comp)])

    def add(pieces):
        pieces = sorted(pieces)
        if not pieces or len(pieces) > k:
            return
        q = obj([(a, b) for a, b, _ in pieces])
        flat = [v for a, b, _ in pieces for v in (a, b)]
        candidates.append((q, flat, pieces))

    # whole domain and each whole component
    add([(c, d, i) for i, (c, d) in enumerate(U.intervals)])
    for i, (c, d) in enumerate(U.intervals):
        add([(c, d, i)])

    # every single interval with grid endpoints inside one component
    for ci, (c, d) in enumerate(U.intervals):
        e = np.linspace(c, d, cells_per_component + 1)
        e[0], e[-1] = c, d
        a_idx, b_idx = np.triu_indices(e.size, 1)
        A, B = e[a_idx], e[b_idx]
        P = 4.0 * (B - A) ** (1.0 - s) / (s * (1.0 - s))
        Vv = _vec_weighted(c, d, A, B, s)
        qv = P / Vv
        best = int(np.argmin(qv))
        add([(float(A[best]), float(B[best]), ci)])

    # Dinkelbach on unions of cells
    mask = np.ones(len(V), dtype=bool)
    lam = _union_quotient(mask, K, X, V)
    for _ in range(50):
        new = _min_cut_set(K, X, V, lam)
        if not new.any():
            break
        q_new = _union_quotient(new, K, X, V)
        if not q_new < lam * (1.0 - 1e-14):
            break
        lam, mask = q_new, new
    runs = _runs(mask, lo, hi, comp)
    while len(runs) > k:
        # greedily drop the run whose removal hurts least
        trials = []
        for r in range(len(runs)):
            rest = runs[:r] + runs[r + 1:]
            trials.append((obj([(a, b) for a, b, _ in rest]), r))
        runs.pop(min(trials)[1])
    add(runs)

    q0, x0, pieces = candidates[0]
    for q, x, pc in candidates[1:]:
        if _better(q, x, q0, x0):
            q0, x0, pieces = q, x, pc

    trace = [(0, q0)]
    comp_bounds = list(U.intervals)
    ivs = [(a, b) for a, b, _ in pieces]
    comps = [c for _, _, c in pieces]
    x, best = _refine(obj, ivs, comps, comp_bounds, cfg.max_iters, trace, q0)
    live = sorted((a, b) for a, b in x if b > a)
    E = IntervalUnion(live)
    return CheegerResult(best_set=E, quotient=cheeger_quotient(omega, E, s),
                         trace=trace, evaluations=obj.count)


def _vec_weighted(c, d, A, B, q):
    # exact integral of dist(., {c, d})^-q over (A, B) inside (c, d), vectorized
    m = 0.5 * (c + d)
    e = 1.0 - q
    left = np.where(A < m, (np.minimum(B, m) - c) ** e - (A - c) ** e, 0.0)
    right = np.where(B > m, (d - np.maximum(A, m)) ** e - (d - B) ** e, 0.0)
    return (left + right) / e


def _union_quotient(mask, K, X, V):
    P = 2.0 * (K[np.ix_(mask, ~mask)].sum() + X[mask].sum())
    return P / V[mask].sum()


# ---------------------------------------------------------------- grid functions

@dataclass(frozen=True, eq=False)
class GridFunction:
    """Piecewise-constant function: values[i] on [origin + i h, origin + (i+1) h]."""

    origin: float
    h: float
    values: np.ndarray

    def __init__(self, origin, h, values):
        v = np.array(values, dtype=float)
        if not h > 0:
            raise DomainError("grid spacing must be positive")
        if v.ndim != 1 or v.size == 0:
            raise DomainError("values must be a nonempty 1-D array")
        if not np.all(np.isfinite(v)) or np.any(v < 0):
            raise DomainError("values must be finite and nonnegative")
        v.flags.writeable = False
        object.__setattr__(self, "origin", float(origin))
        object.__setattr__(self, "h", float(h))
        object.__setattr__(self, "values", v)

    @property
    def edges(self) -> np.ndarray:
        return self.origin + self.h * np.arange(self.values.size + 1)

    def with_values(self, values) -> "GridFunction":
        return GridFunction(self.origin, self.h, values)

    def to_step(self) -> StepFunction:
        return StepFunction(self.edges, self.values).canonical()


def _kernel_tables(M: int, h: float, q: float):
    """Toeplitz pair weights W[m] (m = 0..M-1) and exterior weights X[i]."""
    if not 0 < q < 1:
        raise DomainError(f"piecewise-constant energies need 0 < sp < 1, got {q}")
    m = np.arange(M, dtype=float)
    G = lambda t: np.where(t > 0, np.abs(t) ** (1.0 - q), 0.0)
    c = h ** (1.0 - q) / (q * (1.0 - q))
    W = c * (2.0 * G(m) - G(m - 1.0) - G(m + 1.0))
    W[0] = 0.0
    i = np.arange(M, dtype=float)
    X = c * (G(i + 1.0) - G(i) + G(M - i) - G(M - i - 1.0))
    return W, X


class GridOperator:
    """Precomputed tables for the discrete numerator and denominator."""

    def __init__(self, M, h, s, p, D):
        self.M, self.h, self.s, self.p = M, h, s, p
        q = s * p
        self.W, self.X = _kernel_tables(M, h, q)
        idx = np.arange(M)
        self.Kmat = self.W[np.abs(idx[:, None] - idx[None, :])]
        self.D = D

    def numerator(self, v):
        diff = np.abs(v[:, None] - v[None, :]) ** self.p
        return float(np.sum(diff * self.Kmat) + 2.0 * np.sum(np.abs(v) ** self.p * self.X))

    def denominator(self, v):
        return float(np.sum(np.abs(v) ** self.p * self.D))

    def grad_numerator(self, v):
        p = self.p
        d = v[:, None] - v[None, :]
        if p == 1.0:
            core = np.sign(d)
        else:
            core = p * np.abs(d) ** (p - 1.0) * np.sign(d)
        g = 2.0 * np.sum(core * self.Kmat, axis=1)
        if p == 1.0:
            g += 2.0 * np.sign(v) * self.X
        else:
            g += 2.0 * p * np.abs(v) ** (p - 1.0) * np.sign(v) * self.X
        return g

    def grad_denominator(self, v):
        p = self.p
        if p == 1.0:
            return np.sign(v) * self.D
        return p * np.abs(v) ** (p - 1.0) * np.sign(v) * self.D


def grid_operator(u: GridFunction, omega: Optional[Domain1D], s: float, p: float) -> GridOperator:
    D = None
    q = s * p
    if omega is not None:
        support = u.values > 0
        D = np.zeros(u.values.size)
        if support.any():
            e = u.edges
            idx = np.flatnonzero(support)
            for i in idx:
                D[i] = weighted_volume(omega, IntervalUnion([(e[i], e[i + 1])]), q).value
    return GridOperator(u.values.size, u.h, s, p, D)


def seminorm_p_grid(u: GridFunction, s: float, p: float) -> float:
    """[u]^p_{W^{s,p}(R)} of the piecewise-constant function, exact for sp < 1."""
    _check_s(s)
    if not p >= 1:
        raise DomainError("p must be >= 1")
    if not np.any(u.values > 0):
        raise DomainError("empty support")
    return grid_operator(u, None, s, p).numerator(u.values)


def weighted_lp_grid(u: GridFunction, omega: Domain1D, s: float, p: float) -> float:
    """Integral of |u|^p d_omega^-sp with the weight integrated exactly on each cell."""
    _check_s(s)
    if not s * p < 1:
        raise DomainError("weighted L^p term needs sp < 1")
    op = grid_operator(u, omega, s, p)
    return op.denominator(u.values)


def rayleigh_gradient(op: GridOperator, v: np.ndarray):
    """Quotient value and its (sub)gradient at v."""
    N, D = op.numerator(v), op.denominator(v)
    Q = N / D
    g = (op.grad_numerator(v) - Q * op.grad_denominator(v)) / D
    return Q, g


class RayleighResult(NamedTuple):
    quotient: float
    u: GridFunction
    trace: list


def _window_grid(omega: Domain1D, window: Optional[IntervalUnion], grid_n: int):
    if window is None:
        if not isinstance(omega, Bounded):
            raise DomainError("unbounded domains need an explicit computational window")
        window = omega.union
    a, b = window.hull
    h = (b - a) / grid_n
    edges = a + h * np.arange(grid_n + 1)
    edges[-1] = b
    return a, h, edges, window


def _admissible(omega: Domain1D, window: IntervalUnion, edges: np.ndarray) -> np.ndarray:
    """Cells lying inside both the window and the domain (up to null sets)."""
    mask = np.zeros(edges.size - 1, dtype=bool)
    for i in range(mask.size):
        cell = IntervalUnion([(edges[i], edges[i + 1])])
        inside_window = any(c <= edges[i] + 1e-12 * abs(edges[i]) and edges[i + 1] <= d + 1e-12 * abs(d)
                            for c, d in window.intervals)
        if not inside_window:
            continue
        try:
            weighted_volume(omega, cell, 0.5)
        except DomainError:
            continue
        mask[i] = True
    return mask


def _polish_levels(op: GridOperator, v: np.ndarray):
    """Best superlevel-set indicator (discrete coarea, exact for p = 1)."""
    best_q, best_v = math.inf, None
    for t in np.unique(v[v > 0]):
        ind = (v >= t).astype(float)
        q = op.numerator(ind) / op.denominator(ind)
        if q < best_q:
            best_q, best_v = q, ind
    return best_q, best_v


def minimize_rayleigh(omega: Domain1D, s: float, p: float, grid_n: int,
                      cfg: Optional[MinimizeConfig] = None,
                      window: Optional[IntervalUnion] = None,
                      initial: Optional[np.ndarray] = None) -> RayleighResult:
    """Projected descent on the discrete Hardy quotient [u]^p / int |u|^p d^-sp.

    Starts: the constant function on admissible cells, an optional user start,
    and cfg.restarts random starts.  Every accepted step satisfies the
    projected Armijo condition, so each start's quotient never increases.
    """
    _check_s(s)
    if not p >= 1:
        raise DomainError("p must be >= 1")
    if not s * p < 1:
        raise DomainError("minimize_rayleigh needs sp < 1")
    if grid_n < 16:
        raise DomainError("grid_n must be >= 16")
    cfg = cfg or MinimizeConfig()
    a, h, edges, window = _window_grid(omega, window, grid_n)
    mask = _admissible(omega, window, edges)
    if not mask.any():
        raise DomainError("no grid cell fits inside the domain and window")
    D = np.zeros(grid_n)
    for i in np.flatnonzero(mask):
        D[i] = weighted_volume(omega, IntervalUnion([(edges[i], edges[i + 1])]), s * p).value
    op = GridOperator(grid_n, h, s, p, D)
    rng = np.random.default_rng(cfg.seed)

    starts = [mask.astype(float)]
    if initial is not None:
        init = np.asarray(initial, dtype=float)
        if init.shape != (grid_n,):
            raise DomainError(f"initial guess must have {grid_n} entries")
        if not np.any(init[mask] > 0):
            raise DomainError("the zero function cannot be normalized")
        starts.append(np.where(mask, np.maximum(init, 0.0), 0.0))
    for _ in range(cfg.restarts):
        starts.append(np.where(mask, rng.random(grid_n), 0.0))

    best_q, best_v = math.inf, None
    trace = []  # (iteration, running best quotient) after every accepted step
    it = 0
    collapsed = 0
    for v in starts:
        v = v / op.denominator(v) ** (1.0 / p)
        Q, g = rayleigh_gradient(op, v)
        it += 1
        trace.append((it, min(best_q, Q)))
        step = cfg.step0
        for _ in range(cfg.max_iters):
            if not np.all(np.isfinite(g)):
                raise MinimizationError("non-finite gradient", iterate=v.copy())
            accepted = False
            t = step
            while t > 1e-16:
                w = np.where(mask, np.maximum(v - t * g, 0.0), 0.0)
                den = op.denominator(w)
                if den > 0:
                    Qw = op.numerator(w) / den
                    # projected Armijo condition
                    if Qw <= Q + ARMIJO * float(np.dot(g, w - v)) and Qw < Q:
                        accepted = True
                        break
                t *= cfg.backtrack
            if not accepted:
                break
            w = w / den ** (1.0 / p)
            rel = (Q - Qw) / Q
            v, Q = w, Qw
            _, g = rayleigh_gradient(op, v)
            it += 1
            trace.append((it, min(best_q, Q)))
            step = min(t / cfg.backtrack, 1e6 * cfg.step0)
            if rel < cfg.tol:
                break
        if p == 1.0:
            qp, vp = _polish_levels(op, v)
            if qp < Q:
                Q, v = qp, vp / op.denominator(vp)
                it += 1
                trace.append((it, min(best_q, Q)))
        if not np.any(v > 0):
            collapsed += 1
            continue
        if Q < best_q:
            best_q, best_v = Q, v
    if best_v is None:
        raise MinimizationError(f"all {collapsed} starts collapsed to zero")
    return RayleighResult(best_q, GridFunction(a, h, best_v), trace)


# ---------------------------------------------------------------- product bound

def product_upper_bound(N: int, s: float, psi: StepFunction,
                        k_ladder: Sequence[float]) -> list:
    """Upper bounds for the half-space constant from u_k(x) = phi(x'/k) psi(x_N).

    phi is the indicator of the unit ball of R^(N-1); its s-perimeter is known
    in closed form, so every term of the bound is exact except the tail
    integral of (1+t^2)^(-(N+s)/2).
    """
    _check_s(s)
    if int(N) != N or N < 2:
        raise DomainError("product bounds need N >= 2")
    lo, _ = psi.support_hull
    if lo <= 0:
        raise DomainError("psi must be supported in (0, inf)")
    if psi.integral() <= 0:
        raise DomainError("psi must not vanish identically")
    q_psi = hardy_ratio_step(psi, HalfLine(), s)
    den = math.fsum(gap * weighted_volume(HalfLine(), E, s).value for gap, E in psi.layers())
    phi_ratio = perimeter_ball_closed(N - 1, s) / unit_ball_volume(N - 1)
    tail = halfline_tail_integral(N, s)
    main = c_constant(N, s) * q_psi
    # the cross term integrates over the whole line, hence the factor 2
    cross = phi_ratio * 2.0 * psi.integral() * tail / den
    return [main + float(k) ** (-s) * cross for k in k_ladder]
