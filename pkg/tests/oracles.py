"""Independent oracles used to freeze expected values.

Every oracle here deliberately avoids the code paths it checks: conjugates
come from dense grid maximization instead of golden section, distribution
functions from grid counting instead of monotone inversion, modulars from
direct summation instead of layer-cake quadrature.
"""

from __future__ import annotations

import math

import numpy as np

from orlicz_kit.measure import IndicatorFunction, SimpleFunction, measure_of


def brute_conjugate(phi, t: float, s_hi: float, n: int = 400_001) -> float:
    """max_s (s*t - phi(s)) by dense grid scan plus one local refinement."""
    s = np.linspace(0.0, s_hi, n)
    obj = s * t - phi(s)
    i = int(np.argmax(obj))
    lo = s[max(i - 2, 0)]
    hi = s[min(i + 2, n - 1)]
    s2 = np.linspace(lo, hi, 200_001)
    return float(np.max(s2 * t - phi(s2)))


def grid_count_distribution(f, t: float, x_hi: float, n: int = 2_000_001) -> float:
    """Lebesgue measure of {|f| > t} by midpoint counting on [-x_hi, x_hi]."""
    x = np.linspace(-x_hi, x_hi, n)
    dx = x[1] - x[0]
    vals = np.abs(np.array([f(v) for v in x[::100]]))  # coarse pass
    fine = np.abs(np.array([f(v) for v in x])) if n <= 400_001 else None
    if fine is None:
        return float(np.count_nonzero(vals > t) * dx * 100)
    return float(np.count_nonzero(fine > t) * dx)


def direct_simple_modular(phi, f, space) -> float:
    """integral Phi(|f|) dmu as an explicit sum over the pieces."""
    pieces = f.pieces if isinstance(f, SimpleFunction) else ((f.support, 1.0),)
    return sum(phi.value(abs(v)) * measure_of(space, e) for e, v in pieces)


def direct_simple_lp_norm(f, p: float, space) -> float:
    """The L^p norm of a simple function by direct summation."""
    pieces = f.pieces if isinstance(f, SimpleFunction) else ((f.support, 1.0),)
    return sum(abs(v) ** p * measure_of(space, e) for e, v in pieces) ** (1.0 / p)


def layer_lorentz_p1(f, p: float, space) -> float:
    """||f||_{p,1} = sum over value layers of (v_k - v_{k+1}) M_k^{1/p}.

    Exact for simple functions: the distribution function is the staircase
    with M_k the measure of {|f| >= v_k} for descending distinct values v_k.
    """
    pieces = f.pieces if isinstance(f, SimpleFunction) else ((f.support, 1.0),)
    values = sorted({abs(v) for _, v in pieces}, reverse=True)
    total = 0.0
    for k, v in enumerate(values):
        nxt = values[k + 1] if k + 1 < len(values) else 0.0
        mk = sum(measure_of(space, e) for e, w in pieces if abs(w) >= v)
        total += (v - nxt) * mk ** (1.0 / p)
    return total
