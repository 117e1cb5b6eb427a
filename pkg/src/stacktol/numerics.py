"""Stable special functions and 1-D solvers shared by the bound engines.

The two special functions here are the building blocks of every analytic
tolerance bound in this package:

* ``h_stable(x) = log((1 - exp(-x)) / x)`` -- convex, 1/2-Lipschitz, with
  h(0+) = 0 and h(x) ~ -log(x) for large x.
* ``log_sinh_over_x(x) = log(sinh(x) / x)`` -- the log moment generating
  function of a uniform variable on [-1, 1] evaluated at x, nonnegative.

Both are evaluated without overflow or cancellation across the full double
range actually exercised by the solvers (x from 1e-300 up to ~1e6).

The solvers are deliberately tiny: a golden-section minimizer for convex
one-dimensional functions and a bisection inverter for nonincreasing ones.
Everything in this module is pure and stateless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

__all__ = [
    "Bracket",
    "BracketError",
    "NonFiniteError",
    "h_stable",
    "log_sinh_over_x",
    "minimize_1d",
    "invert_monotone",
]

# Below this point the 3-term even series for h is more accurate than the
# expm1/log route; both branches agree to ~1e-14 in [5e-4, 5e-3].
_H_SERIES_SWITCH = 1e-3

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0  # golden ratio conjugate, ~0.618


class BracketError(ValueError):
    """Search interval is malformed or does not straddle the target."""


class NonFiniteError(ArithmeticError):
    """A callee returned NaN or infinity where a finite value was required."""


@dataclass(frozen=True)
class Bracket:
    """Closed search interval [lo, hi] for a 1-D solver.

    Requires 0 <= lo < hi with both edges finite.  Inversion over t uses
    lo = 0; the lambda searches always pass strictly positive edges.
    """

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise BracketError(f"bracket edges must be finite, got [{self.lo}, {self.hi}]")
        if not 0.0 <= self.lo < self.hi:
            raise BracketError(f"bracket must satisfy 0 <= lo < hi, got [{self.lo}, {self.hi}]")


def _as_bracket(bracket: Bracket | tuple[float, float]) -> Bracket:
    if isinstance(bracket, Bracket):
        return bracket
    lo, hi = bracket
    return Bracket(float(lo), float(hi))


def _checked(f: Callable[[float], float], x: float) -> float:
    y = f(x)
    if not math.isfinite(y):
        raise NonFiniteError(f"objective returned {y!r} at x={x!r}")
    return y


def h_stable(x: float) -> float:
    """log((1 - exp(-x)) / x) for x > 0, relative error below 1e-12.

    For x < 1e-3 uses the even series -x/2 + x^2/24 - x^4/2880 (next term
    is O(x^6), < 1e-22 at the switch point).  Above the switch the single
    log of -expm1(-x)/x is used; the ratio is well conditioned so no
    cancellation occurs even though h itself is tiny near the switch.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"h_stable requires finite x > 0, got {x!r}")
    if x < _H_SERIES_SWITCH:
        x2 = x * x
        return -0.5 * x + x2 / 24.0 - x2 * x2 / 2880.0
    # -expm1(-x) = 1 - exp(-x) in (0, 1]; for x > ~37 it is exactly 1.0
    return math.log(-math.expm1(-x) / x)


def log_sinh_over_x(x: float) -> float:
    """log(sinh(x) / x) for x > 0, overflow-free, always >= 0.

    Uses sinh(x)/x = exp(x) * (1 - exp(-2x)) / (2x), i.e. the value is
    x + h_stable(2x), which stays finite for x up to ~1e308 instead of
    overflowing at x ~ 710 like a naive sinh call.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise ValueError(f"log_sinh_over_x requires finite x > 0, got {x!r}")
    v = x + h_stable(2.0 * x)
    # mathematically >= 0; clip the ~1-ulp negatives from the subtraction
    return v if v > 0.0 else 0.0


def minimize_1d(
    f: Callable[[float], float],
    bracket: Bracket | tuple[float, float],
    rel_tol: float = 1e-10,
    max_iter: int = 300,
) -> tuple[float, float]:
    """Golden-section minimum of a unimodal f on the bracket.

    Returns ``(argmin, min_value)``.  The caller guarantees unimodality
    (all the bound exponents are convex in lambda); for monotone f the
    result is the cheaper bracket endpoint.  Stops once the interval width
    falls below ``rel_tol`` times the current argmin scale.

    Raises NonFiniteError if f evaluates to NaN/inf anywhere it is probed.
    """
    b = _as_bracket(bracket)
    lo, hi = b.lo, b.hi
    a, d = lo, hi
    c = d - _INVPHI * (d - a)
    e = a + _INVPHI * (d - a)
    fc = _checked(f, c)
    fe = _checked(f, e)
    for _ in range(max_iter):
        if d - a <= rel_tol * max(abs(a), abs(d)):
            break
        if fc <= fe:
            d, e, fe = e, c, fc
            c = d - _INVPHI * (d - a)
            fc = _checked(f, c)
        else:
            a, c, fc = c, e, fe
            e = a + _INVPHI * (d - a)
            fe = _checked(f, e)
    if fc <= fe:
        x_in, f_in = c, fc
    else:
        x_in, f_in = e, fe
    # A monotone f has its true minimum at an endpoint; report it exactly.
    f_lo = _checked(f, lo)
    f_hi = _checked(f, hi)
    best_x, best_f = x_in, f_in
    if f_hi < best_f:
        best_x, best_f = hi, f_hi
    if f_lo < best_f:
        best_x, best_f = lo, f_lo
    return best_x, best_f


def invert_monotone(
    g: Callable[[float], float],
    target: float,
    bracket: Bracket | tuple[float, float],
    rel_tol: float = 1e-9,
    max_iter: int = 256,
) -> float:
    """Bisection root of a nonincreasing g: the t with g(t) = target.

    Requires g(lo) >= target >= g(hi); raises BracketError otherwise so the
    caller can widen or clamp.  Deterministic: pure midpoint bisection until
    the interval width falls below rel_tol relative to the root scale.
    """
    b = _as_bracket(bracket)
    lo, hi = b.lo, b.hi
    g_lo = _checked(g, lo)
    g_hi = _checked(g, hi)
    if not (g_lo >= target >= g_hi):
        raise BracketError(
            f"bracket does not straddle target: g({lo})={g_lo}, g({hi})={g_hi}, target={target}"
        )
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= rel_tol * max(abs(mid), 1e-300):
            break
        if _checked(g, mid) > target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
