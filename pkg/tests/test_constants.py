import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from frachardy.constants import (
    FracParams,
    ball_ratio_bound,
    c_constant,
    c_constant_quadrature,
    classical_constant,
    lambda_constant,
    perimeter_ball_closed,
    sharp_halfspace,
    sharp_punctured,
    unit_ball_volume,
)
from frachardy.specfun import DomainError

from oracle_values import LAMBDA_025_2, LAMBDA_09_105, LAMBDA_0995_1002

S_GRID = [0.1 * i for i in range(1, 10)]


def test_frac_params_flags():
    fp = FracParams(N=2, s=0.4, p=2.5)
    assert fp.sp == pytest.approx(1.0)
    assert fp.sp_le_1
    assert not FracParams(N=1, s=0.5, p=3.0).sp_lt_1
    assert FracParams(N=1, s=0.5, p=1.5).sp_lt_1
    with pytest.raises(DomainError):
        FracParams(N=1, s=1.0, p=1.0)
    with pytest.raises(DomainError):
        FracParams(N=0, s=0.5, p=1.0)
    with pytest.raises(DomainError):
        FracParams(N=1, s=0.5, p=0.9)


@pytest.mark.parametrize("k,expected", [(0, 1.0), (1, 2.0), (2, math.pi), (3, 4 * math.pi / 3)])
def test_unit_ball_volume(k, expected):
    assert unit_ball_volume(k) == pytest.approx(expected, rel=1e-14)


def test_c_constant_examples():
    assert c_constant(1, 0.37) == 1.0
    assert c_constant(2, 1.0) == pytest.approx(2.0, rel=1e-14)
    assert c_constant(2, 0.0) == pytest.approx(math.pi, rel=1e-14)
    for N in range(1, 7):
        assert 4 * c_constant(N, 0.0) == pytest.approx(2 * N * unit_ball_volume(N), rel=1e-13)
        assert c_constant(N, 1.0) == pytest.approx(unit_ball_volume(N - 1), rel=1e-13)
    with pytest.raises(DomainError):
        c_constant(2, -0.1)


@pytest.mark.parametrize("N,q", [(2, 0.5), (3, 1.2), (2, 1.0), (5, 0.0), (4, 1.5)])
def test_c_constant_quadrature_matches(N, q):
    assert c_constant_quadrature(N, q) == pytest.approx(c_constant(N, q), rel=1e-9)


@pytest.mark.parametrize("N", [2, 3, 5])
def test_c_constant_continuous_in_q(N):
    gaps = [abs(c_constant(N, 0.5 + e) - c_constant(N, 0.5)) for e in (1e-1, 1e-2, 1e-3, 1e-4)]
    assert all(g2 < g1 for g1, g2 in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-3


def test_lambda_p1_is_four_over_s():
    assert lambda_constant(0.5, 1.0) == 8.0
    for s in S_GRID:
        assert lambda_constant(s, 1.0, force_quadrature=True) == pytest.approx(4.0 / s, rel=1e-8)


def test_lambda_sp_one_is_two():
    assert lambda_constant(0.5, 2.0) == pytest.approx(2.0, rel=1e-14)
    assert lambda_constant(0.5, 2.0, force_quadrature=True) == pytest.approx(2.0, rel=1e-12)


def test_lambda_against_fixed_grid_oracle():
    val = lambda_constant(0.25, 2.0)
    assert val == pytest.approx(LAMBDA_025_2, rel=1e-9)
    assert val < 8.0


def test_lambda_near_critical_against_extended_precision_oracle():
    assert lambda_constant(0.9, 1.05) == pytest.approx(LAMBDA_09_105, rel=1e-9)
    assert lambda_constant(0.995, 1.002) == pytest.approx(LAMBDA_0995_1002, rel=1e-8)


@given(st.floats(0.05, 0.95), st.floats(0.02, 0.98))
def test_lambda_strictly_below_critical_value(s, f):
    p = 1.0 + f * (1.0 / s - 1.0)
    assert lambda_constant(s, p) < 4.0 / (s * p)


def test_lambda_gap_shrinks_as_p_decreases():
    gaps = [abs(lambda_constant(0.5, p) - 8.0) for p in (1.2, 1.1, 1.05, 1.01)]
    assert all(g2 < g1 for g1, g2 in zip(gaps, gaps[1:]))


def test_lambda_sp_above_one_is_finite():
    # the t = 0 singularity disappears once sp >= 1
    v = lambda_constant(0.6, 3.0)
    assert math.isfinite(v) and v > 0


def test_sharp_halfspace():
    assert sharp_halfspace(1, 0.5, 1.0) == 8.0
    assert sharp_halfspace(2, 0.5, 2.0) == pytest.approx(4.0, rel=1e-12)
    for N in (1, 2, 3):
        for s in (0.2, 0.6):
            assert sharp_halfspace(N, s, 1.0) == pytest.approx(4.0 / s * c_constant(N, s), rel=1e-15)
            for p in (1.0, 1.3, 2.0):
                assert sharp_halfspace(N, s, p) >= 2.0 * c_constant(N, s * p) / (s * p) - 1e-12


def test_sharp_punctured():
    for s in S_GRID:
        assert sharp_punctured(1, s) * s * 2.0 ** (s - 2.0) == pytest.approx(1.0, abs=1e-12)
    assert sharp_punctured(1, 0.5) == pytest.approx(5.6568542, abs=1e-7)
    assert sharp_punctured(1, 0.9) == pytest.approx(2.0**1.1 / 0.9, rel=1e-13)
    expected = 8 * math.pi * math.sqrt(math.pi) / math.gamma(0.75) ** 2
    assert sharp_punctured(2, 0.5) == pytest.approx(expected, rel=1e-12)


def test_perimeter_ball_one_dimension():
    for s in (0.25, 0.5, 0.75):
        assert perimeter_ball_closed(1, s) == pytest.approx(2.0 ** (1 - s) * 4 / (s * (1 - s)), rel=1e-12)
    assert perimeter_ball_closed(1, 0.5) == pytest.approx(16 * math.sqrt(2), rel=1e-12)


def test_ball_ratio_bound():
    assert ball_ratio_bound(2, 0.999) == pytest.approx(0.5, rel=0.01)
    assert ball_ratio_bound(2, 0.99) == pytest.approx(0.5, rel=0.05)
    assert 0.5 < ball_ratio_bound(2, 0.5) < 1.0
    for N in (2, 3, 5):
        for s in np.linspace(0.01, 0.999, 25):
            assert ball_ratio_bound(N, s) >= 0.5 - 1e-9
    with pytest.raises(DomainError):
        ball_ratio_bound(1, 0.5)


def test_classical_constant():
    assert classical_constant(1.0) == 0.0
    assert classical_constant(2.0) == pytest.approx(0.25)
    assert classical_constant(3.0) == pytest.approx(8.0 / 27.0)
