"""Special functions and 1-D solvers: stability, calculus properties, solver contracts."""

import math

import mpmath
import numpy as np
import pytest

from stacktol import (
    Bracket,
    BracketError,
    NonFiniteError,
    StackChain,
    h_stable,
    invert_monotone,
    log_sinh_over_x,
    minimize_1d,
    phi,
    chernov_prob,
)
from oracles import grid_bound_t, grid_min_exponent

# 50-digit reference evaluations of log((1 - e^-x)/x), frozen
H_AT_2 = -0.83856063842880436639
H_AT_1E6 = -4.9999995833333333333e-7
LOG_SINH_OVER_X_AT_1 = 0.16143936157119563361


def _h_ref(x: float) -> float:
    # -expm1(-x) = 1 - e^-x without the catastrophic rounding a literal
    # subtraction suffers below x ~ 1e-50 even at 50 digits
    with mpmath.workdps(50):
        mx = mpmath.mpf(x)
        return float(mpmath.log(-mpmath.expm1(-mx) / mx))


class TestHStable:
    def test_frozen_values(self):
        assert h_stable(2.0) == pytest.approx(H_AT_2, rel=1e-13)
        assert h_stable(1e-6) == pytest.approx(H_AT_1E6, rel=1e-13)
        assert h_stable(700.0) == pytest.approx(-math.log(700.0), rel=1e-12)

    def test_limit_at_zero(self):
        assert abs(h_stable(1e-12)) < 1e-9
        assert abs(h_stable(1e-300)) < 1e-12

    def test_against_high_precision_sweep(self):
        xs = np.logspace(-300, math.log10(700.0), 400)
        for x in xs:
            ref = _h_ref(float(x))
            assert h_stable(float(x)) == pytest.approx(ref, rel=1e-12)

    def test_branches_agree_in_crossover_window(self):
        for x in np.linspace(5e-4, 5e-3, 200):
            series = -0.5 * x + x * x / 24.0 - x**4 / 2880.0
            direct = math.log(-math.expm1(-x) / x)
            assert series == pytest.approx(direct, abs=1e-11)

    def test_lipschitz_half(self, rng):
        xs = 10 ** rng.uniform(-6, 2, 10_000)
        ys = 10 ** rng.uniform(-6, 2, 10_000)
        for x, y in zip(xs, ys):
            assert abs(h_stable(x) - h_stable(y)) <= 0.5 * abs(x - y) + 1e-15

    def test_derivative_range(self, rng):
        xs = 10 ** rng.uniform(-6, 2, 2_000)
        for x in xs:
            d = 1e-6 * x
            fd = (h_stable(x + d) - h_stable(x - d)) / (2.0 * d)
            assert -0.5 < fd < 0.0

    def test_convexity_second_differences(self, rng):
        xs = 10 ** rng.uniform(-5, 2, 2_000)
        for x in xs:
            s = 1e-3 * x
            dd = (h_stable(x - s) - 2.0 * h_stable(x) + h_stable(x + s)) / (s * s)
            assert dd >= -1e-9

    @pytest.mark.parametrize("bad", [0.0, -1.0, math.nan, math.inf])
    def test_domain_errors(self, bad):
        with pytest.raises(ValueError):
            h_stable(bad)


class TestLogSinhOverX:
    def test_frozen_value(self):
        assert log_sinh_over_x(1.0) == pytest.approx(LOG_SINH_OVER_X_AT_1, rel=1e-13)

    def test_large_argument_asymptotic(self):
        assert log_sinh_over_x(1000.0) == pytest.approx(
            1000.0 - math.log(2000.0), rel=1e-9
        )

    def test_limit_at_zero_and_nonnegative(self):
        assert abs(log_sinh_over_x(1e-12)) < 1e-12
        for x in np.logspace(-10, 5, 300):
            assert log_sinh_over_x(float(x)) >= 0.0

    def test_taylor_lower_bound(self):
        for x in np.linspace(1e-6, 1.0, 500):
            assert log_sinh_over_x(float(x)) >= x * x / 6.0 - x**4 / 180.0 - 1e-9

    def test_against_high_precision(self):
        with mpmath.workdps(50):
            for x in (0.01, 0.5, 3.0, 40.0, 500.0):
                ref = float(mpmath.log(mpmath.sinh(x) / x))
                assert log_sinh_over_x(x) == pytest.approx(ref, rel=1e-12)

    @pytest.mark.parametrize("bad", [0.0, -2.0, math.nan, math.inf])
    def test_domain_errors(self, bad):
        with pytest.raises(ValueError):
            log_sinh_over_x(bad)


class TestBracket:
    def test_valid(self):
        assert Bracket(0.0, 1.0).hi == 1.0
        assert Bracket(1e-9, 500.0).lo == 1e-9

    @pytest.mark.parametrize("lo,hi", [(-1.0, 1.0), (1.0, 1.0), (2.0, 1.0), (0.0, math.inf), (math.nan, 1.0)])
    def test_invalid(self, lo, hi):
        with pytest.raises(BracketError):
            Bracket(lo, hi)


class TestMinimize1D:
    def test_quadratic(self):
        x, fx = minimize_1d(lambda x: (x - 2.0) ** 2, (0.1, 10.0))
        assert x == pytest.approx(2.0, abs=1e-8)
        assert fx == pytest.approx(0.0, abs=1e-15)

    def test_monotone_returns_endpoint(self):
        x, fx = minimize_1d(lambda x: x, (1.0, 5.0))
        assert x == 1.0 and fx == 1.0
        x, fx = minimize_1d(lambda x: -x, (1.0, 5.0))
        assert x == 5.0 and fx == -5.0

    def test_beats_dense_grid(self, table_chain):
        f = lambda lam: phi(table_chain, lam, 10.0)
        _, fmin = minimize_1d(f, (1e-9 / 3.0, 500.0))
        grid_min = grid_min_exponent((5.0, 4.0, 3.0, 2.0, 1.0), 10.0, "phi")
        assert fmin <= grid_min + 1e-10

    def test_nonfinite_objective(self):
        with pytest.raises(NonFiniteError):
            minimize_1d(lambda x: math.nan, (0.1, 1.0))

    def test_bad_bracket(self):
        with pytest.raises(BracketError):
            minimize_1d(lambda x: x, (3.0, 1.0))


class TestInvertMonotone:
    def test_linear(self):
        assert invert_monotone(lambda t: 1.0 - t, 0.25, (0.0, 1.0)) == pytest.approx(0.75, abs=1e-9)

    def test_exponential(self):
        root = invert_monotone(lambda t: math.exp(-t), 0.5, (0.0, 10.0))
        assert root == pytest.approx(math.log(2.0), abs=1e-9)

    def test_no_straddle(self):
        with pytest.raises(BracketError):
            invert_monotone(lambda t: 1.0 - t, 5.0, (0.0, 1.0))

    def test_chernov_prob_inversion_matches_grid_oracle(self):
        pair = StackChain.from_bounds((1.0, 1.0))
        root = invert_monotone(lambda t: chernov_prob(pair, t), 0.05, (0.0, 2.0))
        oracle = grid_bound_t((1.0, 1.0), 0.05, "phi")
        assert root == pytest.approx(oracle, abs=1e-6)
