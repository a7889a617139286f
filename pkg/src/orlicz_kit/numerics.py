"""Shared scalar numeric kernels: grids, golden-section search, bisection.

All routines are pure and operate on plain floats; +inf is a legal value
wherever a monotone quantity can saturate.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

INF = math.inf

#: invphi = 1/golden ratio, used by the unimodal maximizer
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0


def log_grid(lo: float, hi: float, n: int) -> np.ndarray:
    """n log-spaced points in [lo, hi], lo > 0."""
    if not (0.0 < lo < hi) or n < 2:
        raise ValueError("log_grid needs 0 < lo < hi and n >= 2")
    return np.geomspace(lo, hi, n)


def golden_section_max(
    fn: Callable[[float], float],
    a: float,
    b: float,
    rel_width: float = 1e-12,
) -> tuple[float, float]:
    """Maximize a unimodal (concave) function on [a, b].

    Returns (argmax, max).  Exact for unimodal objectives up to the bracket
    width; the value error is quadratically small in the final width.
    """
    if b < a:
        a, b = b, a
    h = b - a
    if h <= rel_width * max(abs(a), abs(b), 1.0):
        x = 0.5 * (a + b)
        return x, fn(x)
    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    yc = fn(c)
    yd = fn(d)
    # enough iterations to shrink the bracket below the relative target
    n_iter = int(math.ceil(math.log(rel_width / 2.0) / math.log(_INVPHI)))
    for _ in range(max(n_iter, 1)):
        if yc > yd:
            b, d, yd = d, c, yc
            h = b - a
            c = a + _INVPHI2 * h
            yc = fn(c)
        else:
            a, c, yc = c, d, yd
            h = b - a
            d = a + _INVPHI * h
            yd = fn(d)
        if h <= rel_width * max(abs(a), abs(b), 1.0):
            break
    if yc > yd:
        return c, yc
    return d, yd


def bisect_increasing(
    fn: Callable[[float], float],
    target: float,
    lo: float,
    hi: float,
    rel_tol: float = 1e-13,
    max_iter: int = 200,
) -> float:
    """Root of fn(x) = target for nondecreasing fn with fn(lo) <= target <= fn(hi).

    Bisection on the bracket; returns the midpoint of the final bracket.
    Flat regions resolve to the crossing boundary in the limit.
    """
    flo = fn(lo)
    fhi = fn(hi)
    if flo > target or fhi < target:
        raise ValueError("bisect_increasing: target not bracketed")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if fn(mid) <= target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= rel_tol * max(abs(hi), 1e-30):
            break
    return 0.5 * (lo + hi)


def expand_until(
    pred: Callable[[float], bool],
    start: float = 1.0,
    factor: float = 2.0,
    limit: float = 1e280,
) -> float | None:
    """Smallest value start*factor^k (k >= 0) satisfying pred, or None below limit."""
    x = start
    while x <= limit:
        if pred(x):
            return x
        x *= factor
    return None


def backward_difference(fn: Callable[[float], float], t: float) -> float:
    """Left derivative of fn at t > 0 by backward differencing.

    Uses steps h, h/2, h/4 with two levels of Richardson extrapolation, so the
    one-sided limit is approached from below as the definition requires.
    """
    h = max(t * 1e-6, 1e-12)
    while t - h <= 0.0:
        h *= 0.5
    d = [(fn(t) - fn(t - s)) / s for s in (h, h / 2.0, h / 4.0)]
    r1 = 2.0 * d[1] - d[0]
    r2 = 2.0 * d[2] - d[1]
    return (4.0 * r2 - r1) / 3.0
