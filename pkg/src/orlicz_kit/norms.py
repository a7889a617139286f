"""Orlicz modulars, Luxemburg norms, Lorentz quasi-norms, and their identities.

The Orlicz modular is integral Phi(|f|/lambda) dmu.  On counting spaces it is
a sum with a certified tail bracket; on the Lebesgue line it goes through the
layer-cake route

    integral Phi(|f|) dmu = integral_0^inf phi(t) mu_f(t) dt

with phi the left derivative of Phi, evaluated by the adaptive machinery in
``quadrature``.  The Luxemburg norm is the infimum inf{lambda : modular <= 1},
found by geometric bracketing plus bisection in log(lambda); the Lorentz
quasi-norm integrates [t mu_f(t)^(1/p)]^q dt/t (supremum for q = inf).

The layer-cake checker, the scaling-identity checker, and the embedding ratio
keep two independent computation routes alive so each can audit the other.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ArgumentError, InconsistencyError
from .measure import (
    FunctionSpec,
    IndicatorFunction,
    MeasureSpace,
    PowerLogDecay,
    SimpleFunction,
    measure_of,
)
from .numerics import INF, golden_section_max, log_grid
from .quadrature import IntegralResult, QuadratureSettings, integrate_halfline
from .young import TabulatedYoung, YoungFunction, power_compose

__all__ = [
    "QuadratureSettings",
    "NormResult",
    "modular",
    "modular_result",
    "luxemburg_norm",
    "luxemburg_norm_result",
    "lorentz_quasinorm",
    "lorentz_quasinorm_result",
    "LayerCakeReport",
    "layer_cake_check",
    "ScalingReport",
    "scaling_identity_check",
    "embedding_ratio",
    "power_transform",
]

_LAMBDA_STEPS = 60  # bracket expansion budget: lambda in [4^-60, 4^60]


@dataclass(frozen=True)
class NormResult:
    """A norm/modular value with its convergence status and audit trail."""

    value: float
    status: str  # "finite" | "infinite" | "zero"
    tolerance: float
    error_estimate: float
    truncation: tuple[float, float] | None = None
    notes: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "status": self.status,
            "tolerance": self.tolerance,
            "error_estimate": self.error_estimate,
            "truncation": list(self.truncation) if self.truncation else None,
            "notes": list(self.notes),
        }


def _as_result(res: IntegralResult, tolerance: float) -> NormResult:
    status = res.status if res.value != 0.0 else "zero"
    return NormResult(res.value, status, tolerance, res.error_estimate,
                      res.truncation, res.notes)


# ---------------------------------------------------------------------------
# Fast distribution lookups
# ---------------------------------------------------------------------------


def _staircase_distribution(space: MeasureSpace, f) -> Callable[[float], float]:
    """O(log k) right-continuous staircase mu_f for simple/indicator functions."""
    if isinstance(f, IndicatorFunction):
        m = measure_of(space, f.support)
        return lambda t: m if t < 1.0 else 0.0
    levels = sorted({abs(v) for _, v in f.pieces})
    cum = []
    acc = 0.0
    # cumulative measure of {|f| > t} for t just below each level boundary
    for lv in levels:
        acc = sum(measure_of(space, e) for e, v in f.pieces if abs(v) >= lv)
        cum.append(acc)

    def mu(t: float) -> float:
        i = bisect_right(levels, t)
        return cum[i] if i < len(levels) else 0.0

    return mu


def _distribution_fn(space: MeasureSpace, f: FunctionSpec) -> Callable[[float], float]:
    if isinstance(f, (SimpleFunction, IndicatorFunction)):
        return _staircase_distribution(space, f)
    return lambda t: f.distribution(space, t)


# ---------------------------------------------------------------------------
# Modular
# ---------------------------------------------------------------------------


def modular_result(
    phi: YoungFunction,
    f: FunctionSpec,
    lam: float,
    space: MeasureSpace,
    settings: QuadratureSettings | None = None,
) -> NormResult:
    """integral Phi(|f|/lambda) dmu with status and error information."""
    if not (lam > 0.0 and math.isfinite(lam)):
        raise ArgumentError(f"modular scale lambda must be positive, got {lam}")
    if settings is None:
        settings = QuadratureSettings()
    if space.is_counting:
        return _modular_counting(phi, f, lam, space, settings)
    return _modular_layer_cake(phi, f, lam, space, settings)


def modular(phi, f, lam, space, settings=None) -> float:
    return modular_result(phi, f, lam, space, settings).value


def _modular_counting(phi, f, lam, space, settings) -> NormResult:
    tol = settings.relative_tolerance
    if isinstance(f, (SimpleFunction, IndicatorFunction)):
        pieces = f.pieces if isinstance(f, SimpleFunction) else ((f.support, 1.0),)
        total = 0.0
        for e, v in pieces:
            if v == 0.0:
                continue
            total += phi.value(abs(v) / lam) * measure_of(space, e)
            if math.isinf(total):
                return NormResult(INF, "infinite", tol, 0.0)
        status = "zero" if total == 0.0 else "finite"
        return NormResult(total, status, tol, 0.0)

    if isinstance(f, PowerLogDecay):
        return _modular_counting_decay(phi, f, lam, space, settings)
    raise ArgumentError(
        f"counting-space modular not implemented for {type(f).__name__}")


def _modular_counting_decay(phi, f: PowerLogDecay, lam, space, settings) -> NormResult:
    """Symmetric sum over the integers with an integral-test tail bracket."""
    tol = settings.relative_tolerance
    if space.kind == "counting_finite":
        n = np.arange(1, space.size + 1, dtype=float)
        vals = (1.0 + n) ** (-1.0 / f.p) * np.log(3.0 + n) ** (-1.0 / f.r)
        total = float(np.sum(phi.value_array(vals / lam)))
        return NormResult(total, "finite" if total else "zero", tol, 0.0)

    total = phi.value(f(0) / lam)
    n_lo, block = 1, 4096
    cap = 1.0 / settings.absolute_floor
    last_term = INF
    while n_lo < 2 ** 21:
        n = np.arange(n_lo, n_lo + block, dtype=float)
        vals = (1.0 + n) ** (-1.0 / f.p) * np.log(3.0 + n) ** (-1.0 / f.r)
        terms = phi.value_array(vals / lam)
        total += 2.0 * float(np.sum(terms))
        last_term = float(terms[-1])
        if total > cap:
            return NormResult(INF, "infinite", tol, 0.0,
                              notes=("partial sums crossed 1/absolute_floor",))
        n_lo += block
        block *= 2
        if last_term <= tol * max(total, 1e-300):
            break
    n_last = n_lo - 1

    # integral test: sum_{n > N} g(n) in [int_{N+1}^inf g, int_N^inf g]
    def g(x: float) -> float:
        return phi.value(f(x) / lam)

    upper = integrate_halfline(lambda t: g(t + n_last), settings)
    lower = integrate_halfline(lambda t: g(t + n_last + 1.0), settings)
    if upper.status == "infinite":
        return NormResult(INF, "infinite", tol, 0.0,
                          notes=("tail integral diverges",))
    tail_mid = (upper.value + lower.value) / 2.0
    tail_err = (upper.value - lower.value) / 2.0 + upper.error_estimate
    total += 2.0 * tail_mid
    return NormResult(total, "finite" if total else "zero", tol, 2.0 * tail_err,
                      notes=(f"tail bracket beyond n={n_last}",))


def _modular_layer_cake(phi, f, lam, space, settings) -> NormResult:
    mu = _distribution_fn(space, f)

    def integrand(t: float) -> float:
        m = mu(lam * t)
        if m == 0.0:
            return 0.0
        d = phi.left_derivative(t)
        if m == INF or d == INF:
            return INF
        return d * m

    sup = f.sup_abs()
    zero_beyond = sup / lam if math.isfinite(sup) and sup > 0.0 else None
    if sup == 0.0:
        return NormResult(0.0, "zero", settings.relative_tolerance, 0.0)
    bps = [v / lam for v in f.value_breakpoints()]
    if isinstance(phi, TabulatedYoung):
        bps.extend(t for t, _ in phi.knots if t > 0.0)
    res = integrate_halfline(integrand, settings, breakpoints=bps,
                             zero_beyond=zero_beyond)
    return _as_result(res, settings.relative_tolerance)


# ---------------------------------------------------------------------------
# Luxemburg norm
# ---------------------------------------------------------------------------


def luxemburg_norm_result(
    phi: YoungFunction,
    f: FunctionSpec,
    space: MeasureSpace,
    settings: QuadratureSettings | None = None,
) -> NormResult:
    """inf{lambda > 0 : modular(phi, f, lambda) <= 1} by monotone bisection."""
    if settings is None:
        settings = QuadratureSettings()
    tol = settings.relative_tolerance
    if f.sup_abs() == 0.0:
        return NormResult(0.0, "zero", tol, 0.0)

    def mval(lam: float) -> float:
        return modular_result(phi, f, lam, space, settings).value

    lam_min = 4.0 ** (-_LAMBDA_STEPS)
    lam_max = 4.0 ** _LAMBDA_STEPS
    if mval(1.0) <= 1.0:
        # shrink toward zero; if even the tiniest scale passes, the norm is 0
        if mval(lam_min) <= 1.0:
            return NormResult(0.0, "zero", tol, 0.0,
                              notes=("modular <= 1 down to the bracket floor",))
        lo, hi = lam_min, 1.0
        while hi / 4.0 > lo:
            if mval(hi / 4.0) > 1.0:
                lo = hi / 4.0
                break
            hi /= 4.0
        else:
            lo = lam_min
    else:
        # expand upward; certify +inf cheaply by probing the bracket roof first
        if mval(lam_max) > 1.0:
            return NormResult(INF, "infinite", tol, 0.0,
                              notes=("modular > 1 up to the bracket roof",))
        lo, hi = 1.0, 4.0
        while mval(hi) > 1.0:
            lo = hi
            hi *= 4.0

    while hi / lo > 1.0 + tol:
        mid = math.sqrt(lo * hi)
        if mval(mid) <= 1.0:
            hi = mid
        else:
            lo = mid
    value = math.sqrt(lo * hi)
    return NormResult(value, "finite", tol, value * tol)


def luxemburg_norm(phi, f, space, settings=None) -> float:
    return luxemburg_norm_result(phi, f, space, settings).value


# ---------------------------------------------------------------------------
# Lorentz quasi-norm
# ---------------------------------------------------------------------------


def lorentz_quasinorm_result(
    p: float,
    q: float,
    f: FunctionSpec,
    space: MeasureSpace,
    settings: QuadratureSettings | None = None,
) -> NormResult:
    """([t mu_f(t)^(1/p)]^q dt/t)^(1/q); supremum of t mu_f(t)^(1/p) at q = inf."""
    if not (0.0 < p < INF):
        raise ArgumentError(f"Lorentz exponent p must be in (0, inf), got {p}")
    if not (q > 0.0):
        raise ArgumentError(f"Lorentz exponent q must be positive, got {q}")
    if settings is None:
        settings = QuadratureSettings()
    tol = settings.relative_tolerance
    if f.sup_abs() == 0.0:
        return NormResult(0.0, "zero", tol, 0.0)
    if math.isinf(q):
        value = _weak_lorentz_sup(p, f, space)
        status = "infinite" if math.isinf(value) else ("zero" if value == 0.0 else "finite")
        return NormResult(value, status, tol, value * tol if math.isfinite(value) else 0.0)

    mu = _distribution_fn(space, f)
    qp = q / p

    def integrand(t: float) -> float:
        m = mu(t)
        if m == 0.0:
            return 0.0
        if m == INF:
            return INF
        return t ** (q - 1.0) * m ** qp

    sup = f.sup_abs()
    res = integrate_halfline(integrand, settings,
                             breakpoints=f.value_breakpoints(),
                             zero_beyond=sup if math.isfinite(sup) else None)
    if res.status == "infinite":
        return NormResult(INF, "infinite", tol, 0.0, res.truncation, res.notes)
    value = res.value ** (1.0 / q)
    err = res.error_estimate
    rel_err = (err / res.value / q) * value if res.value > 0.0 else 0.0
    return NormResult(value, "finite" if value else "zero", tol, rel_err,
                      res.truncation, res.notes)


def lorentz_quasinorm(p, q, f, space, settings=None) -> float:
    return lorentz_quasinorm_result(p, q, f, space, settings).value


def _weak_lorentz_sup(p: float, f: FunctionSpec, space: MeasureSpace) -> float:
    """sup_t t mu_f(t)^(1/p); exact at the jump values of step distributions."""
    if isinstance(f, (SimpleFunction, IndicatorFunction)):
        pieces = f.pieces if isinstance(f, SimpleFunction) else ((f.support, 1.0),)
        best = 0.0
        for _, v in pieces:
            lv = abs(v)
            # mu({|f| >= lv}) is the left limit of mu_f at lv, where the sup sits
            m = sum(measure_of(space, e) for e, w in pieces if abs(w) >= lv)
            best = max(best, lv * m ** (1.0 / p))
        return best

    sup = f.sup_abs()
    candidates = list(f.value_breakpoints())
    hi = sup * (1.0 - 1e-12) if math.isfinite(sup) else 1e9
    lo = hi * 1e-12
    grid = list(log_grid(lo, hi, 4096)) + [c for c in candidates if 0.0 < c <= hi]

    def g(t: float) -> float:
        m = f.distribution(space, t)
        if m == INF:
            return INF
        return t * m ** (1.0 / p)

    vals = [g(t) for t in grid]
    if any(math.isinf(v) for v in vals):
        return INF
    i = max(range(len(grid)), key=lambda j: vals[j])
    a = grid[max(i - 1, 0)]
    b = grid[min(i + 1, len(grid) - 1)]
    _, refined = golden_section_max(g, a, b, rel_width=1e-12)
    return max(max(vals), refined)


# ---------------------------------------------------------------------------
# Identity checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LayerCakeReport:
    lhs: float           # direct modular
    rhs: float           # layer-cake quadrature
    relative_gap: float

    def to_dict(self) -> dict:
        return {"direct": self.lhs, "layer_cake": self.rhs,
                "relative_gap": self.relative_gap}


def layer_cake_check(
    phi: YoungFunction,
    f: FunctionSpec,
    space: MeasureSpace,
    settings: QuadratureSettings | None = None,
) -> LayerCakeReport:
    """Both sides of integral Phi(|f|) dmu = integral_0^inf phi(t) mu_f(t) dt.

    The direct side is the exact superlevel decomposition (simple/indicator
    functions only); the layer-cake side runs the quadrature engine.
    """
    if settings is None:
        settings = QuadratureSettings()
    if not isinstance(f, (SimpleFunction, IndicatorFunction)):
        raise ArgumentError("layer_cake_check direct route needs a simple function")
    pieces = f.pieces if isinstance(f, SimpleFunction) else ((f.support, 1.0),)
    lhs = sum(phi.value(abs(v)) * measure_of(space, e) for e, v in pieces)

    mu = _distribution_fn(space, f)

    def integrand(t: float) -> float:
        m = mu(t)
        return 0.0 if m == 0.0 else phi.left_derivative(t) * m

    res = integrate_halfline(integrand, settings, breakpoints=f.value_breakpoints(),
                             zero_beyond=f.sup_abs())
    rhs = res.value
    if math.isinf(lhs) != math.isinf(rhs):
        raise InconsistencyError(
            f"layer-cake sides disagree on finiteness: direct={lhs}, quadrature={rhs}")
    gap = abs(lhs - rhs) / max(abs(lhs), 1e-300)
    return LayerCakeReport(lhs, rhs, gap)


def power_transform(f: FunctionSpec, q: float) -> FunctionSpec:
    """|f|^q within the closed families (simple values and exponent shifts)."""
    if not q > 0.0:
        raise ArgumentError("power_transform needs q > 0")
    powered = getattr(f, "powered", None)
    if powered is None:
        raise ArgumentError(f"|f|^q not representable for {type(f).__name__}")
    return powered(q)


@dataclass(frozen=True)
class ScalingReport:
    """The two change-of-exponent identities evaluated on both routes."""

    lorentz_direct: float      # ||f||_{p,q}
    lorentz_scaled: float      # || |f|^q ||_{p/q,1}^{1/q}
    orlicz_direct: float       # ||f||_Phi
    orlicz_scaled: float       # || |f|^q ||_{Phi((.)^{1/q})}^{1/q}
    lorentz_gap: float
    orlicz_gap: float

    def to_dict(self) -> dict:
        return {
            "lorentz_direct": self.lorentz_direct,
            "lorentz_scaled": self.lorentz_scaled,
            "lorentz_gap": self.lorentz_gap,
            "orlicz_direct": self.orlicz_direct,
            "orlicz_scaled": self.orlicz_scaled,
            "orlicz_gap": self.orlicz_gap,
        }


def scaling_identity_check(
    p: float,
    q: float,
    phi: YoungFunction,
    f: FunctionSpec,
    space: MeasureSpace,
    settings: QuadratureSettings | None = None,
) -> ScalingReport:
    """Verify ||f||_{p,q} = q^{-1/q} || |f|^q ||_{p/q,1}^{1/q} and the Orlicz analogue.

    Under the dt/t distribution-function normalization used here, the
    substitution s = t^q gives || |f|^q ||_{p/q,1} = q ||f||_{p,q}^q exactly,
    so the change-of-exponent identity carries the constant q^{-1/q} (the
    same constant that appears in the indicator closed form).  The Orlicz
    identity is constant-free: the modular substitution is verbatim.
    """
    fq = power_transform(f, q)
    l_direct = lorentz_quasinorm(p, q, f, space, settings)
    l_scaled = q ** (-1.0 / q) * lorentz_quasinorm(p / q, 1.0, fq, space,
                                                   settings) ** (1.0 / q)
    o_direct = luxemburg_norm(phi, f, space, settings)
    o_scaled = luxemburg_norm(power_compose(phi, q), fq, space, settings) ** (1.0 / q)

    def gap(a, b):
        if math.isinf(a) or math.isinf(b):
            return 0.0 if a == b else INF
        return abs(a - b) / max(abs(a), 1e-300)

    return ScalingReport(l_direct, l_scaled, o_direct, o_scaled,
                         gap(l_direct, l_scaled), gap(o_direct, o_scaled))


def embedding_ratio(
    p: float,
    q1: float,
    q2: float,
    f: FunctionSpec,
    space: MeasureSpace,
    settings: QuadratureSettings | None = None,
) -> float:
    """||f||_{p,q2} / ||f||_{p,q1} for q1 <= q2 (the finer space on the left)."""
    if not q1 <= q2:
        raise ArgumentError("embedding_ratio needs q1 <= q2")
    denom = lorentz_quasinorm(p, q1, f, space, settings)
    if denom == 0.0:
        raise ArgumentError("embedding_ratio is degenerate: ||f||_{p,q1} = 0")
    if math.isinf(denom):
        raise ArgumentError("embedding_ratio needs both quasinorms finite")
    num = lorentz_quasinorm(p, q2, f, space, settings)
    if math.isinf(num):
        raise ArgumentError("embedding_ratio needs both quasinorms finite")
    return num / denom
