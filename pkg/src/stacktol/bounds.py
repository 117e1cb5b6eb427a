"""Analytic tolerance-interval methods for uniform stack chains.

Model: the output deviation is Y = sum_i X_i with independent X_i uniform
on [-w_i, w_i], where w_i are the chain's weighted bounds.  Each method
produces a half-width t such that P(|Y| >= t) <= rho (or a fixed
convention for the rho-free methods):

* WC         sum of bounds, never exceeded.
* RSS        sqrt(sum of squares), the classical 3-sigma convention.
* GAUSSIAN   l_rho * T_RSS, the Gaussian deviation inequality with each
             input modeled as N(0, (w_i/3)^2).  Not guaranteed for
             uniform inputs; kept for comparison.
* HOEFFDING  3 * l_rho * T_RSS, the sub-Gaussian bound with parameter
             w_i per input.  Guaranteed, often very conservative.
* CHERNOV    exact optimized exponential bound, the tightest of the
             family; requires a 1-D minimization per evaluation.
* LIPSCHITZ  closed-form relaxation of CHERNOV paying lambda*sum|w-wbar|
             for imbalance.
* QUADRATIC  relaxation paying a curvature term n*lambda^2*Var(w)*c.
* AIRBUS     industrial balance-corrected RSS rule, no rho attached.

Probability-at-t and t-at-rho directions are both provided for the
Chernoff family.  All functions are pure; results are frozen records.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .chain import StackChain, balance_report, t_rss, t_wc
from .numerics import h_stable, invert_monotone, log_sinh_over_x, minimize_1d

__all__ = [
    "Method",
    "ConfidenceLevel",
    "ToleranceResult",
    "gaussian_l",
    "hoeffding_t",
    "phi",
    "chernov_prob",
    "chernov_t",
    "s_lambda",
    "psi",
    "psi_tilde",
    "lipschitz_t",
    "quadratic_t",
    "airbus_t",
    "analyze_all",
    "tolerance",
]

# lambda search window [LAM_LO_SCALE/wbar, LAM_HI_SCALE/wmin]; widened
# tenfold per endpoint hit, at most MAX_EXPAND times
_LAM_LO_SCALE = 1e-9
_LAM_HI_SCALE = 500.0
_MAX_EXPAND = 3

_LAMBDA_REL_TOL = 1e-10
_T_REL_TOL = 1e-9


class Method(str, Enum):
    """Tolerance-interval methods, in canonical reporting order."""

    WC = "wc"
    RSS = "rss"
    GAUSSIAN = "gaussian"
    HOEFFDING = "hoeffding"
    CHERNOV = "chernov"
    LIPSCHITZ = "lipschitz"
    QUADRATIC = "quadratic"
    AIRBUS = "airbus"
    MONTE_CARLO = "mc"


@dataclass(frozen=True)
class ConfidenceLevel:
    """Two-sided out-of-tolerance probability, strictly inside (0, 1)."""

    rho: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.rho) and 0.0 < self.rho < 1.0):
            raise ValueError(f"confidence level must lie in (0, 1), got {self.rho!r}")


def _rho_value(rho: "float | ConfidenceLevel") -> float:
    if isinstance(rho, ConfidenceLevel):
        return rho.rho
    return ConfidenceLevel(float(rho)).rho


@dataclass(frozen=True)
class ToleranceResult:
    """One method's half-width with its derived coefficients.

    t is the raw formula value and may exceed the worst case on small or
    unbalanced chains; t_clamped = min(t, t_wc) is the physically
    meaningful interval.  f = t / (l_rho * T_RSS) is the shape
    coefficient (None when the method carries no rho), coverage is
    t / T_RSS.
    """

    method: Method
    t: float
    t_clamped: float
    f: Optional[float]
    coverage: float
    rho: Optional[float]


def gaussian_l(rho: "float | ConfidenceLevel") -> float:
    """Gaussian deviation coefficient l_rho = (1/3) sqrt(2 ln(2/rho)).

    With inputs modeled as N(0, (w_i/3)^2), P(|Y| >= l_rho * T_RSS) <= rho
    by the sub-Gaussian tail bound.  Strictly decreasing in rho.
    """
    r = _rho_value(rho)
    return math.sqrt(2.0 * math.log(2.0 / r)) / 3.0


def _result(
    method: Method, chain: StackChain, t: float, rho: Optional[float]
) -> ToleranceResult:
    rss = t_rss(chain)
    f = t / (gaussian_l(rho) * rss) if rho is not None else None
    return ToleranceResult(
        method=method,
        t=t,
        t_clamped=min(t, t_wc(chain)),
        f=f,
        coverage=t / rss,
        rho=rho,
    )


def hoeffding_t(chain: StackChain, rho: "float | ConfidenceLevel") -> ToleranceResult:
    """Sub-Gaussian half-width t = sqrt(2 ln(2/rho) sum w_i^2) = 3 l_rho T_RSS.

    The shape coefficient is exactly 3: the bound treats each uniform
    input as sub-Gaussian with parameter w_i, three times the standard
    deviation the GAUSSIAN model assumes.
    """
    r = _rho_value(rho)
    t = 3.0 * (gaussian_l(r) * t_rss(chain))
    return _result(Method.HOEFFDING, chain, t, r)


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not (math.isfinite(lam) and lam > 0.0):
        raise ValueError(f"lambda must be finite and > 0, got {lam!r}")
    return lam


def _check_t(t: float) -> float:
    t = float(t)
    if not (math.isfinite(t) and t >= 0.0):
        raise ValueError(f"t must be finite and >= 0, got {t!r}")
    return t


def phi(chain: StackChain, lam: float, t: float) -> float:
    """Exponential-bound exponent: sum_i log(sinh(lam w_i)/(lam w_i)) - lam t.

    P(|Y| >= t) <= 2 exp(phi(lam, t)) for every lam > 0.  Convex in lam,
    strictly decreasing in t, finite for lam up to ~1e6/min(w).
    """
    lam = _check_lambda(lam)
    t = _check_t(t)
    s = math.fsum(log_sinh_over_x(lam * w) for w in chain.weighted_bounds)
    return s - lam * t


def s_lambda(chain: StackChain, lam: float) -> float:
    """Imbalance functional S_lambda = sum_i [h(2 lam w_i) - h(2 lam wbar)].

    Nonnegative by convexity of h; zero iff all bounds are equal.  This is
    exactly what the balance-agnostic relaxations give away versus the
    optimized exponent at scale lam.
    """
    lam = _check_lambda(lam)
    w = chain.weighted_bounds
    wbar = math.fsum(w) / len(w)
    val = math.fsum(h_stable(2.0 * lam * wi) for wi in w) - len(w) * h_stable(
        2.0 * lam * wbar
    )
    return val if val > 0.0 else 0.0


def psi(chain: StackChain, lam: float, t: float) -> float:
    """Imbalance-linear relaxation of phi.

    psi = -lam t + lam n wbar + n h(2 lam wbar) + lam sum|w_i - wbar|,
    an upper bound on phi because S_lambda <= lam sum|w_i - wbar| (h is
    1/2-Lipschitz).  Equals phi exactly on all-equal chains.
    """
    lam = _check_lambda(lam)
    t = _check_t(t)
    w = chain.weighted_bounds
    n = len(w)
    wbar = math.fsum(w) / n
    abs_dev = math.fsum(abs(wi - wbar) for wi in w)
    return -lam * t + lam * n * wbar + n * h_stable(2.0 * lam * wbar) + lam * abs_dev


def psi_tilde(chain: StackChain, lam: float, t: float, curvature: float = 0.5) -> float:
    """Variance-quadratic relaxation of phi.

    psi_tilde = -lam t + lam n wbar + n h(2 lam wbar)
                + n lam^2 Var(w) * curvature,
    an upper bound on phi for any curvature >= 1/6 (the sharp constant,
    from sup h'' = 1/12); the conservative default is 0.5.  Equals phi
    exactly on all-equal chains.
    """
    lam = _check_lambda(lam)
    t = _check_t(t)
    if curvature < 1.0 / 6.0:
        raise ValueError(f"curvature must be >= 1/6 to keep the bound valid, got {curvature}")
    w = chain.weighted_bounds
    n = len(w)
    wbar = math.fsum(w) / n
    var = math.fsum((wi - wbar) ** 2 for wi in w) / n
    return (
        -lam * t
        + lam * n * wbar
        + n * h_stable(2.0 * lam * wbar)
        + n * lam * lam * var * curvature
    )


def _min_exponent(chain: StackChain, exponent: Callable[[float], float]) -> float:
    """Minimum of a convex exponent over the adaptive lambda window."""
    w = chain.weighted_bounds
    wbar = math.fsum(w) / len(w)
    lo = _LAM_LO_SCALE / wbar
    hi = _LAM_HI_SCALE / min(w)
    expansions = 0
    while True:
        arg, val = minimize_1d(exponent, (lo, hi), rel_tol=_LAMBDA_REL_TOL)
        if expansions >= _MAX_EXPAND:
            return val
        if arg <= lo * 1.01:
            lo /= 10.0
        elif arg >= hi * 0.99:
            hi *= 10.0
        else:
            return val
        expansions += 1


def chernov_prob(chain: StackChain, t: float) -> float:
    """Optimized exponential tail bound min(1, 2 exp(inf_lam phi(lam, t))).

    Returns 0 for t >= the worst case (the infimum diverges to -inf
    there).  Nonincreasing in t.  The minimization runs on the exponent
    itself, never on its exp, so extreme tails cannot underflow the
    search.
    """
    t = _check_t(t)
    if t >= t_wc(chain):
        return 0.0
    val = _min_exponent(chain, lambda lam: phi(chain, lam, t))
    return min(1.0, 2.0 * math.exp(val))


def _invert_bound(
    chain: StackChain,
    rho: float,
    prob: Callable[[float], float],
    hi: float,
) -> float:
    """Smallest t with prob(t) <= rho, expanding hi until it brackets."""
    for _ in range(200):
        if prob(hi) <= rho:
            break
        hi *= 2.0
    return invert_monotone(prob, rho, (0.0, hi), rel_tol=_T_REL_TOL)


def chernov_t(chain: StackChain, rho: "float | ConfidenceLevel") -> ToleranceResult:
    """Half-width from inverting the optimized exponential bound at rho.

    Always strictly below the worst case; the tightest guaranteed method
    in this family.
    """
    r = _rho_value(rho)
    t = invert_monotone(
        lambda x: chernov_prob(chain, x), r, (0.0, t_wc(chain)), rel_tol=_T_REL_TOL
    )
    return _result(Method.CHERNOV, chain, t, r)


def lipschitz_t(chain: StackChain, rho: "float | ConfidenceLevel") -> ToleranceResult:
    """Half-width from inverting the imbalance-linear relaxation at rho.

    May exceed the worst case on unbalanced chains; both raw and clamped
    values are reported.
    """
    r = _rho_value(rho)

    def prob(x: float) -> float:
        val = _min_exponent(chain, lambda lam: psi(chain, lam, x))
        return min(1.0, 2.0 * math.exp(val))

    start = 3.0 * gaussian_l(r) * t_rss(chain)
    t = _invert_bound(chain, r, prob, start)
    return _result(Method.LIPSCHITZ, chain, t, r)


def quadratic_t(
    chain: StackChain, rho: "float | ConfidenceLevel", curvature: float = 0.5
) -> ToleranceResult:
    """Half-width from inverting the variance-quadratic relaxation at rho.

    The quadratic-in-lambda exponent keeps the minimizer interior for
    every t, so this inversion is the best behaved of the relaxations;
    tighter than LIPSCHITZ when the imbalance is small.
    """
    r = _rho_value(rho)

    def prob(x: float) -> float:
        val = _min_exponent(chain, lambda lam: psi_tilde(chain, lam, x, curvature))
        return min(1.0, 2.0 * math.exp(val))

    start = 3.0 * gaussian_l(r) * t_rss(chain)
    t = _invert_bound(chain, r, prob, start)
    return _result(Method.QUADRATIC, chain, t, r)


def airbus_t(chain: StackChain) -> ToleranceResult:
    """Industrial balance-corrected rule t = 1.6 (1.04 - 0.56 D) T_RSS.

    D is the dominance factor from the balance report.  The constants
    embed the rule's own quantile calibration, so no rho is attached.
    """
    d = balance_report(chain).d_factor
    t = 1.6 * (-0.56 * d + 1.04) * t_rss(chain)
    return _result(Method.AIRBUS, chain, t, None)


def tolerance(
    chain: StackChain, method: Method, rho: "float | ConfidenceLevel | None" = None
) -> ToleranceResult:
    """Dispatch a single analytic method; rho required for the rho-aware ones."""
    if method in (Method.WC, Method.RSS, Method.AIRBUS):
        if method is Method.WC:
            return _result(Method.WC, chain, t_wc(chain), None)
        if method is Method.RSS:
            return _result(Method.RSS, chain, t_rss(chain), None)
        return airbus_t(chain)
    if method is Method.MONTE_CARLO:
        raise ValueError("Monte Carlo estimates need a sampling config; use the montecarlo module")
    if rho is None:
        raise ValueError(f"method {method.value} requires a confidence level")
    r = _rho_value(rho)
    if method is Method.GAUSSIAN:
        return _result(Method.GAUSSIAN, chain, gaussian_l(r) * t_rss(chain), r)
    if method is Method.HOEFFDING:
        return hoeffding_t(chain, r)
    if method is Method.CHERNOV:
        return chernov_t(chain, r)
    if method is Method.LIPSCHITZ:
        return lipschitz_t(chain, r)
    if method is Method.QUADRATIC:
        return quadratic_t(chain, r)
    raise ValueError(f"unknown method {method!r}")


_ANALYZE_ORDER = (
    Method.WC,
    Method.RSS,
    Method.GAUSSIAN,
    Method.HOEFFDING,
    Method.CHERNOV,
    Method.LIPSCHITZ,
    Method.QUADRATIC,
    Method.AIRBUS,
)


def analyze_all(chain: StackChain, rho: "float | ConfidenceLevel") -> list[ToleranceResult]:
    """All eight analytic methods at one confidence level, fixed order.

    Order: WC, RSS, GAUSSIAN, HOEFFDING, CHERNOV, LIPSCHITZ, QUADRATIC,
    AIRBUS.  WC, RSS and AIRBUS do not consume rho and report f = None.
    """
    r = _rho_value(rho)
    return [tolerance(chain, m, r) for m in _ANALYZE_ORDER]
