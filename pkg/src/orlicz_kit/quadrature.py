"""Adaptive quadrature over (0, inf) for nonnegative, piecewise-smooth integrands.

The core window is integrated under the compactifying substitution
u = t/(1+t) (adaptive Simpson on the image interval), with known kinks of the
integrand registered as mandatory subdivision knots.  The two tails are then
extended decade by decade; each decade increment is tracked, so convergence is
an auditable statement about the increment sequence rather than a hope:

  * increments shrinking below tolerance -> status "finite", with a
    geometric/power-law continuation of the increments as the tail estimate;
  * running total crossing 1/absolute_floor -> status "infinite", with the
    truncation window recorded (a certified diverging lower bound, since the
    integrand is nonnegative);
  * an integrand value of +inf on a positive-length piece -> "infinite".

Deep upper decades (t beyond ~1e12) switch to the reciprocal substitution
s = 1/t, which is exact there while u = t/(1+t) runs out of float resolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import ArgumentError
from .numerics import INF

__all__ = ["QuadratureSettings", "IntegralResult", "integrate_halfline",
           "integrate_interval"]


@dataclass(frozen=True)
class QuadratureSettings:
    """Tolerances and domain handling for the improper integrals."""

    relative_tolerance: float = 1e-8
    absolute_floor: float = 1e-14
    max_subdivisions: int = 2000
    transform: str = "compactified"  # "compactified" | "truncated"
    t_max: float | None = None       # upper cutoff for the truncated transform

    def __post_init__(self):
        if not (self.relative_tolerance > 0.0 and self.absolute_floor > 0.0):
            raise ArgumentError("quadrature tolerances must be positive")
        if self.transform not in ("compactified", "truncated"):
            raise ArgumentError(f"unknown transform {self.transform!r}")
        if self.transform == "truncated" and not (self.t_max and self.t_max > 0.0):
            raise ArgumentError("truncated transform needs a positive t_max")


@dataclass(frozen=True)
class IntegralResult:
    value: float
    status: str                      # "finite" | "infinite"
    error_estimate: float
    truncation: tuple[float, float]  # realized t-window
    subdivisions: int
    notes: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "status": self.status,
            "error_estimate": self.error_estimate,
            "truncation": list(self.truncation),
            "subdivisions": self.subdivisions,
            "notes": list(self.notes),
        }


class _Budget:
    __slots__ = ("left", "spent")

    def __init__(self, n: int):
        self.left = n
        self.spent = 0

    def take(self) -> bool:
        if self.left <= 0:
            return False
        self.left -= 1
        self.spent += 1
        return True


def _adaptive_simpson(f: Callable[[float], float], a: float, b: float,
                      eps: float, budget: _Budget) -> tuple[float, float]:
    """Adaptive Simpson on [a, b]; returns (value, error_estimate).

    Returns value +inf as soon as a non-finite sample appears (nonnegative
    integrands only, so +inf samples certify divergence on the piece).
    """
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    if math.isinf(fa) or math.isinf(fb) or math.isinf(fm):
        return INF, 0.0
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_rec(f, a, b, fa, fm, fb, whole, eps, budget, 0)


def _simpson_rec(f, a, b, fa, fm, fb, whole, eps, budget, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    if math.isinf(flm) or math.isinf(frm):
        return INF, 0.0
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    s2 = left + right
    diff = s2 - whole
    if depth > 48 or abs(diff) <= 15.0 * eps or not budget.take():
        return s2 + diff / 15.0, abs(diff) / 15.0
    lv, le = _simpson_rec(f, a, m, fa, flm, fm, left, eps / 2.0, budget, depth + 1)
    if math.isinf(lv):
        return INF, 0.0
    rv, re = _simpson_rec(f, m, b, fm, frm, fb, right, eps / 2.0, budget, depth + 1)
    if math.isinf(rv):
        return INF, 0.0
    return lv + rv, le + re


def integrate_interval(f: Callable[[float], float], a: float, b: float,
                       rel_tol: float = 1e-10,
                       breakpoints: Sequence[float] = (),
                       max_subdivisions: int = 4000) -> tuple[float, float]:
    """Plain adaptive Simpson of a nonnegative f over the finite interval [a, b].

    Breakpoints inside (a, b) become mandatory segment boundaries.
    Returns (value, error_estimate).
    """
    if not b > a:
        return 0.0, 0.0
    knots = sorted({a, b, *(x for x in breakpoints if a < x < b)})
    budget = _Budget(max_subdivisions)
    total = err = 0.0
    # pilot pass to scale the per-segment absolute tolerance
    pilot = sum(max(abs(f(0.5 * (x + y))), 0.0) * (y - x)
                for x, y in zip(knots, knots[1:]))
    eps_total = rel_tol * max(pilot, 1e-300)
    for x, y in zip(knots, knots[1:]):
        v, e = _adaptive_simpson(f, x, y, eps_total * (y - x) / (b - a), budget)
        if math.isinf(v):
            return INF, 0.0
        total += v
        err += e
    return total, err


# -- transforms ---------------------------------------------------------------

_RECIPROCAL_SWITCH = 1e10  # above this t the u = t/(1+t) map loses resolution


def _segment_integral(F, t_lo, t_hi, eps, budget, inner_knots=()):
    """Integral of F over [t_lo, t_hi] under the compactifying substitution."""
    if t_hi <= t_lo:
        return 0.0, 0.0
    if t_hi <= _RECIPROCAL_SWITCH:
        # u = t/(1+t):  dt = du/(1-u)^2
        def g(u):
            om = 1.0 - u
            return F(u / om) / (om * om)
        a = t_lo / (1.0 + t_lo)
        b = t_hi / (1.0 + t_hi)
        knots = sorted({a, b, *(t / (1.0 + t) for t in inner_knots if t_lo < t < t_hi)})
    else:
        # s = 1/t:  dt = ds/s^2
        def g(s):
            return F(1.0 / s) / (s * s)
        a = 1.0 / t_hi
        b = 1.0 / t_lo
        knots = sorted({a, b, *(1.0 / t for t in inner_knots if t_lo < t < t_hi)})
    total = err = 0.0
    for x, y in zip(knots, knots[1:]):
        v, e = _adaptive_simpson(g, x, y, eps * (y - x) / max(b - a, 1e-300), budget)
        if math.isinf(v):
            return INF, 0.0
        total += v
        err += e
    return total, err


def _fit_tail_estimate(increments: list[float], window: int = 8) -> float:
    """Continuation of a decaying decade-increment sequence.

    Geometric decay is continued geometrically; slower decay is fit as
    eta_j ~ c * j^(-alpha) and continued by the integral comparison, which is
    conservative for alpha > 1.  Returns +inf when the fitted exponent shows
    the increments are not summable (alpha <= 1.05): the ladder then
    certifies divergence rather than a value.
    """
    tail = [e for e in increments[-window:] if e > 0.0]
    if len(tail) < 2:
        return tail[-1] if tail else 0.0
    ratios = [b / a for a, b in zip(tail, tail[1:])]
    rho = max(ratios)
    if rho < 0.5:
        return tail[-1] * rho / (1.0 - rho)
    if rho >= 1.0 + 1e-12:
        return INF  # increments still growing
    # power-law fit eta_j ~ c j^(-alpha) on the last increments
    n0 = len(increments) - len(tail) + 1
    xs = [math.log(n0 + i) for i in range(len(tail))]
    ys = [math.log(e) for e in tail]
    n = len(xs)
    sx, sy = sum(xs), sum(ys)
    sxx = sum(x * x for x in xs)
    sxy = sum(x * y for x, y in zip(xs, ys))
    denom = n * sxx - sx * sx
    alpha = -(n * sxy - sx * sy) / denom if denom > 0 else 0.0
    j_last = n0 + len(tail) - 1
    if alpha > 1.05:
        return tail[-1] * j_last / (alpha - 1.0)
    return INF  # harmonic or slower decay: not summable on this evidence


def integrate_halfline(
    F: Callable[[float], float],
    settings: QuadratureSettings | None = None,
    breakpoints: Sequence[float] = (),
    zero_beyond: float | None = None,
) -> IntegralResult:
    """Integral of a nonnegative F over (0, inf) with auditable tail handling.

    ``breakpoints`` are t-values where F may kink or jump; ``zero_beyond`` is
    an optional t past which F is identically zero (skips the upper ladder).
    """
    if settings is None:
        settings = QuadratureSettings()
    rel_tol = settings.relative_tolerance
    budget = _Budget(settings.max_subdivisions)
    notes: list[str] = []

    bps = sorted({float(b) for b in breakpoints if b > 0.0 and math.isfinite(b)})

    if settings.transform == "truncated":
        lo = 1e-12
        hi = settings.t_max
    else:
        lo = min(1e-3, *(b / 4.0 for b in bps[:1])) if bps else 1e-3
        hi = max(1e3, *(b * 4.0 for b in bps[-1:])) if bps else 1e3
        hi = min(hi, 1e12)
    if zero_beyond is not None and math.isfinite(zero_beyond) and zero_beyond > 0.0:
        hi = min(hi, zero_beyond * 1.0000001)
        if hi <= lo:
            lo = hi / 1e6  # keep a nondegenerate window inside the support

    pilot = sum(max(F(t), 0.0) * t for t in (lo * 10.0, math.sqrt(lo * hi), hi / 10.0))
    eps0 = rel_tol * max(pilot, 1e-300)

    total, err = _segment_integral(F, lo, hi, eps0, budget, inner_knots=bps)
    if math.isinf(total):
        return IntegralResult(INF, "infinite", 0.0, (lo, hi), budget.spent,
                              ("non-finite integrand sample",))

    divergence_cap = 1.0 / settings.absolute_floor
    realized_lo, realized_hi = lo, hi

    def extend(side: str, edge: float, max_rungs: int):
        nonlocal total, err, realized_lo, realized_hi
        increments: list[float] = []
        for j in range(max_rungs):
            if side == "down":
                t1, t0 = edge, edge / 10.0
                edge = t0
            else:
                t0, t1 = edge, edge * 10.0
                edge = t1
            eta, e = _segment_integral(F, t0, t1, eps0, budget)
            if math.isinf(eta):
                total = INF
                return increments, "infinite"
            increments.append(eta)
            total += eta
            err += e
            if side == "down":
                realized_lo = t0
            else:
                realized_hi = t1
            if total > divergence_cap:
                return increments, "infinite"
            # stop on *relative* smallness only: an absolute floor would mask
            # divergent integrals with tiny prefactors (e.g. huge lambda)
            if eta <= rel_tol * abs(total) * 0.1 or (total == 0.0 and eta == 0.0):
                if len(increments) >= 2 and increments[-2] <= rel_tol * abs(total):
                    return increments, "converged"
        return increments, "exhausted"

    status = "finite"
    for side, edge, rungs in (("down", lo, 46), ("up", hi, 46)):
        if side == "up" and settings.transform == "truncated":
            continue  # the integral is explicitly cut at t_max
        if side == "up" and zero_beyond is not None and hi >= zero_beyond:
            continue  # F vanishes beyond; no upper ladder needed
        incs, verdict = extend(side, edge, rungs)
        if verdict == "infinite":
            return IntegralResult(INF, "infinite", 0.0,
                                  (realized_lo, realized_hi), budget.spent,
                                  (f"{side} ladder crossed 1/absolute_floor",))
        if verdict == "converged":
            err += _fit_tail_estimate(incs)
        else:  # exhausted: classify the remaining tail by its increment decay
            tail = _fit_tail_estimate(incs)
            if math.isinf(tail):
                return IntegralResult(
                    INF, "infinite", 0.0, (realized_lo, realized_hi),
                    budget.spent,
                    (f"{side} ladder increments not summable "
                     f"(truncated value {total!r})",))
            err += tail
            notes.append(f"{side} tail estimated by increment continuation")

    if budget.left <= 0:
        notes.append("subdivision budget exhausted")
    return IntegralResult(total, status, err, (realized_lo, realized_hi),
                          budget.spent, tuple(notes))
