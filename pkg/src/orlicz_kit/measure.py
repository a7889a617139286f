"""Measure spaces, measurable sets, evaluable functions, distribution functions.

Three sigma-finite spaces are supported: the real line with Lebesgue measure,
the integers with counting measure, and finite index sets {1, ..., k} with
counting measure.  Real measurable sets are normalized finite unions of
half-open intervals [a, b); integer sets are sorted duplicate-free tuples.

Half-open intervals make the preimages of the floor-based composition maps
exactly representable.  A set that mathematically contains a left-open piece
(-b, -a] is stored as [-b, -a): the difference is a single endpoint, which is
Lebesgue-null, and a single convention avoids a four-way interval taxonomy.

Function families implement pointwise evaluation, the superlevel set
{|f| > t} as a measurable set, and the distribution function
mu_f(t) = mu({x : |f(x)| > t}) in closed form or by monotone inversion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ArgumentError, DomainError
from .numerics import INF

__all__ = [
    "MeasureSpace",
    "LEBESGUE_LINE",
    "COUNTING_INTEGERS",
    "counting_finite",
    "IntervalSet",
    "IntegerSet",
    "MeasurableSet",
    "empty_set_for",
    "set_union",
    "set_intersect",
    "set_normalize",
    "measure_of",
    "FunctionSpec",
    "SimpleFunction",
    "IndicatorFunction",
    "PowerLogDecay",
    "RadialPower",
    "ComposedFunction",
    "distribution",
    "superlevel_set",
]


# ---------------------------------------------------------------------------
# Spaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MeasureSpace:
    """One of: lebesgue_line, counting_integers, counting_finite(size)."""

    kind: str
    size: int | None = None

    def __post_init__(self):
        if self.kind not in ("lebesgue_line", "counting_integers", "counting_finite"):
            raise ArgumentError(f"unknown measure space kind {self.kind!r}")
        if self.kind == "counting_finite":
            if self.size is None or self.size < 1:
                raise ArgumentError("counting_finite needs a positive size")
        elif self.size is not None:
            raise ArgumentError(f"{self.kind} does not take a size")

    @property
    def is_counting(self) -> bool:
        return self.kind != "lebesgue_line"

    def describe(self):
        if self.kind == "counting_finite":
            return {"kind": self.kind, "size": self.size}
        return self.kind


LEBESGUE_LINE = MeasureSpace("lebesgue_line")
COUNTING_INTEGERS = MeasureSpace("counting_integers")


def counting_finite(size: int) -> MeasureSpace:
    return MeasureSpace("counting_finite", size)


# ---------------------------------------------------------------------------
# Sets
# ---------------------------------------------------------------------------


class IntervalSet:
    """Normalized finite union of half-open intervals [a, b) on the line.

    Intervals are pairwise disjoint, nonempty, sorted by left endpoint;
    touching intervals (b_i == a_{i+1}) are merged during normalization.
    """

    __slots__ = ("intervals",)

    def __init__(self, intervals: Sequence[tuple[float, float]] = ()):
        self.intervals = _normalize_intervals(intervals)

    @property
    def is_empty(self) -> bool:
        return not self.intervals

    def measure(self) -> float:
        total = 0.0
        for a, b in self.intervals:
            if math.isinf(b) or math.isinf(a):
                return INF
            total += b - a
        return total

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self.intervals + other.intervals)

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        i = j = 0
        a, b = self.intervals, other.intervals
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo < hi:
                out.append((lo, hi))
            if a[i][1] <= b[j][1]:
                i += 1
            else:
                j += 1
        return IntervalSet(out)

    def contains(self, x: float) -> bool:
        return any(a <= x < b for a, b in self.intervals)

    def describe(self) -> dict:
        return {"intervals": [[a, b] for a, b in self.intervals]}

    def __eq__(self, other):
        return isinstance(other, IntervalSet) and self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def __repr__(self):
        return f"IntervalSet({list(self.intervals)})"


def _normalize_intervals(intervals) -> tuple[tuple[float, float], ...]:
    pairs = []
    for a, b in intervals:
        a, b = float(a), float(b)
        if math.isnan(a) or math.isnan(b):
            raise ArgumentError("interval endpoints must not be NaN")
        if a < b:
            pairs.append((a, b))
        elif a > b:
            raise ArgumentError(f"interval [{a}, {b}) has negative length")
        # a == b: empty, dropped
    pairs.sort()
    merged: list[tuple[float, float]] = []
    for a, b in pairs:
        if merged and a <= merged[-1][1]:
            if b > merged[-1][1]:
                merged[-1] = (merged[-1][0], b)
        else:
            merged.append((a, b))
    return tuple(merged)


class IntegerSet:
    """Finite set of integers, stored sorted and duplicate-free."""

    __slots__ = ("elements",)

    def __init__(self, elements: Sequence[int] = ()):
        elems = sorted({int(n) for n in elements})
        self.elements = tuple(elems)

    @classmethod
    def block(cls, n: int, m: int) -> "IntegerSet":
        """The contiguous block {n, ..., m-1}."""
        if m <= n:
            raise ArgumentError(f"block needs n < m, got [{n}, {m})")
        return cls(range(n, m))

    @property
    def is_empty(self) -> bool:
        return not self.elements

    def measure(self) -> float:
        return float(len(self.elements))

    def union(self, other: "IntegerSet") -> "IntegerSet":
        return IntegerSet(set(self.elements) | set(other.elements))

    def intersect(self, other: "IntegerSet") -> "IntegerSet":
        return IntegerSet(set(self.elements) & set(other.elements))

    def contains(self, n: int) -> bool:
        return n in set(self.elements)

    def runs(self) -> list[tuple[int, int]]:
        """Maximal contiguous runs as half-open integer ranges [n, m)."""
        out: list[tuple[int, int]] = []
        for n in self.elements:
            if out and n == out[-1][1]:
                out[-1] = (out[-1][0], n + 1)
            else:
                out.append((n, n + 1))
        return out

    def describe(self) -> dict:
        return {"integers": list(self.elements)}

    def __eq__(self, other):
        return isinstance(other, IntegerSet) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"IntegerSet({list(self.elements)})"


MeasurableSet = IntervalSet | IntegerSet


def empty_set_for(space: MeasureSpace) -> MeasurableSet:
    return IntervalSet() if space.kind == "lebesgue_line" else IntegerSet()


def _check_kind(space: MeasureSpace, e: MeasurableSet) -> None:
    if space.kind == "lebesgue_line":
        if not isinstance(e, IntervalSet):
            raise ArgumentError("lebesgue_line sets must be interval unions")
    else:
        if not isinstance(e, IntegerSet):
            raise ArgumentError("counting-space sets must be integer sets")
        if space.kind == "counting_finite" and e.elements:
            if e.elements[0] < 1 or e.elements[-1] > space.size:
                raise ArgumentError(
                    f"set {e.elements} leaves the finite index set 1..{space.size}")


def measure_of(space: MeasureSpace, e: MeasurableSet) -> float:
    """Lebesgue: total interval length; counting: cardinality."""
    _check_kind(space, e)
    return e.measure()


def set_union(a: MeasurableSet, b: MeasurableSet) -> MeasurableSet:
    if type(a) is not type(b):
        raise ArgumentError("set_union requires sets of the same kind")
    return a.union(b)


def set_intersect(a: MeasurableSet, b: MeasurableSet) -> MeasurableSet:
    if type(a) is not type(b):
        raise ArgumentError("set_intersect requires sets of the same kind")
    return a.intersect(b)


def set_normalize(e: MeasurableSet) -> MeasurableSet:
    """Idempotent re-normalization (construction already normalizes)."""
    if isinstance(e, IntervalSet):
        return IntervalSet(e.intervals)
    return IntegerSet(e.elements)


# ---------------------------------------------------------------------------
# Functions
# ---------------------------------------------------------------------------


class FunctionSpec:
    """Base for evaluable functions with a distribution-function procedure."""

    def __call__(self, x):
        raise NotImplementedError

    def superlevel_set(self, space: MeasureSpace, t: float) -> MeasurableSet:
        """The set {x : |f(x)| > t} as a measurable set of the space."""
        raise NotImplementedError

    def distribution(self, space: MeasureSpace, t: float) -> float:
        """mu_f(t) = mu({|f| > t}); default route goes through the superlevel set."""
        return measure_of(space, self.superlevel_set(space, t))

    def value_breakpoints(self) -> tuple[float, ...]:
        """Values of |f| where the distribution function can jump; quadrature knots."""
        return ()

    def sup_abs(self) -> float:
        """Supremum of |f| (may be +inf)."""
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.describe()})"


class SimpleFunction(FunctionSpec):
    """Finite-valued function sum_i v_i * chi_{E_i} with disjoint supports."""

    def __init__(self, pieces: Sequence[tuple[MeasurableSet, float]]):
        pieces = [(e, float(v)) for e, v in pieces]
        kinds = {type(e) for e, _ in pieces}
        if len(kinds) > 1:
            raise ArgumentError("simple-function supports must share a set kind")
        for i, (e1, _) in enumerate(pieces):
            for e2, _ in pieces[i + 1:]:
                inter = e1.intersect(e2)
                if not inter.is_empty:
                    raise ArgumentError("simple-function supports must be disjoint")
        self.pieces = tuple((e, v) for e, v in pieces if v != 0.0 and not e.is_empty)

    def __call__(self, x):
        for e, v in self.pieces:
            if e.contains(x):
                return v
        return 0.0

    def superlevel_set(self, space: MeasureSpace, t: float) -> MeasurableSet:
        out = empty_set_for(space)
        for e, v in self.pieces:
            if abs(v) > t:
                out = set_union(out, e)
        return out

    def distribution(self, space: MeasureSpace, t: float) -> float:
        return sum(measure_of(space, e) for e, v in self.pieces if abs(v) > t)

    def value_breakpoints(self) -> tuple[float, ...]:
        return tuple(sorted({abs(v) for _, v in self.pieces}))

    def sup_abs(self) -> float:
        return max((abs(v) for _, v in self.pieces), default=0.0)

    def scaled(self, c: float) -> "SimpleFunction":
        return SimpleFunction([(e, c * v) for e, v in self.pieces])

    def powered(self, q: float) -> "SimpleFunction":
        return SimpleFunction([(e, abs(v) ** q) for e, v in self.pieces])

    def describe(self) -> dict:
        return {"family": "simple",
                "pieces": [[e.describe(), v] for e, v in self.pieces]}


class IndicatorFunction(FunctionSpec):
    """chi_E: value 1 on the set, 0 elsewhere."""

    def __init__(self, support: MeasurableSet):
        self.support = support

    def __call__(self, x):
        return 1.0 if self.support.contains(x) else 0.0

    def superlevel_set(self, space: MeasureSpace, t: float) -> MeasurableSet:
        _check_kind(space, self.support)
        if t < 1.0:
            return self.support
        return empty_set_for(space)

    def distribution(self, space: MeasureSpace, t: float) -> float:
        return measure_of(space, self.support) if t < 1.0 else 0.0

    def value_breakpoints(self) -> tuple[float, ...]:
        return (1.0,)

    def sup_abs(self) -> float:
        return 0.0 if self.support.is_empty else 1.0

    def powered(self, q: float) -> "IndicatorFunction":
        return self

    def describe(self) -> dict:
        return {"family": "indicator", "set": self.support.describe()}


class PowerLogDecay(FunctionSpec):
    """f(x) = (1 + |x|)^(-1/p) * (log(3 + |x|))^(-1/r).

    Strictly decreasing in |x|, so superlevel sets are symmetric intervals
    found by monotone bisection on |x|.  Works on the Lebesgue line and,
    restricted to integer arguments, on the counting integers.
    """

    def __init__(self, p: float, r: float):
        if not (p > 0.0 and r > 0.0):
            raise ArgumentError("power_log_decay needs p > 0 and r > 0")
        self.p = float(p)
        self.r = float(r)

    def __call__(self, x) -> float:
        ax = abs(float(x))
        return (1.0 + ax) ** (-1.0 / self.p) * math.log(3.0 + ax) ** (-1.0 / self.r)

    def _radius(self, t: float) -> float:
        """R with f(R) = t for 0 < t < f(0), by bisection (f strictly decreasing)."""
        lo, hi = 0.0, 1.0
        while self(hi) > t:
            hi *= 4.0
            if hi > 1e300:
                return INF
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            if self(mid) > t:
                lo = mid
            else:
                hi = mid
            if hi - lo <= 1e-14 * max(hi, 1e-30):
                break
        return 0.5 * (lo + hi)

    def superlevel_set(self, space: MeasureSpace, t: float) -> MeasurableSet:
        if t >= self(0.0):
            return empty_set_for(space)
        if t <= 0.0:
            raise ArgumentError("superlevel set of power_log_decay is unbounded at t <= 0")
        r = self._radius(t)
        if space.kind == "lebesgue_line":
            return IntervalSet([(-r, r)])
        k = self._integer_radius(t, r)
        if k < 0:
            return IntegerSet()
        return IntegerSet(range(-k, k + 1))

    def _integer_radius(self, t: float, r: float) -> int:
        # largest integer k >= 0 with f(k) > t; r is the continuous radius
        k = int(math.floor(r))
        while k >= 0 and not self(k) > t:
            k -= 1
        while self(k + 1) > t:
            k += 1
        return k

    def distribution(self, space: MeasureSpace, t: float) -> float:
        if t <= 0.0:
            return INF
        if t >= self(0.0):
            return 0.0
        r = self._radius(t)
        if space.kind == "lebesgue_line":
            return 2.0 * r
        return float(2 * self._integer_radius(t, r) + 1)

    def sup_abs(self) -> float:
        return self(0.0)

    def powered(self, q: float) -> "PowerLogDecay":
        return PowerLogDecay(self.p / q, self.r / q)

    def tail_integral_bound(self, exponent: float, cutoff: float) -> float:
        """Certified upper bound for integral_{x >= cutoff} f(x)^exponent dx.

        Requires exponent/r > 1 (log-integrability) and exponent/p >= 1.
        Uses f(x)^e <= (3/(3+x)) * (1+x)^(1 - e/p) / log(3+x)^(e/r) and the
        closed-form integral of 1/((3+x) log(3+x)^a).
        """
        a = exponent / self.r
        if a <= 1.0:
            return INF
        if exponent / self.p < 1.0:
            return INF
        x0 = max(cutoff, 0.0)
        # (1+x)^{-e/p} <= (1+x)^{-1} <= 3/(3+x) for x >= 0
        return 3.0 * math.log(3.0 + x0) ** (1.0 - a) / (a - 1.0)

    def sum_tail_bound(self, exponent: float, n0: int) -> float:
        """Certified upper bound for sum_{n > n0} f(n)^exponent (integral test)."""
        return self.tail_integral_bound(exponent, float(n0))

    def describe(self) -> dict:
        return {"family": "power_log_decay", "p": self.p, "r": self.r}


class RadialPower(FunctionSpec):
    """f(x) = |x|^(-gamma) * chi_{B(0, radius)} on the Lebesgue line."""

    def __init__(self, gamma: float, radius: float):
        if not (gamma > 0.0 and radius > 0.0):
            raise ArgumentError("radial_power needs gamma > 0 and radius > 0")
        self.gamma = float(gamma)
        self.radius = float(radius)

    def __call__(self, x) -> float:
        ax = abs(float(x))
        if ax >= self.radius:
            return 0.0
        if ax == 0.0:
            return INF
        return ax ** (-self.gamma)

    def _level_radius(self, t: float) -> float:
        # {|x|^-gamma > t} = {|x| < t^(-1/gamma)}, clipped to the support ball
        return min(self.radius, t ** (-1.0 / self.gamma))

    def superlevel_set(self, space: MeasureSpace, t: float) -> MeasurableSet:
        if space.kind != "lebesgue_line":
            raise ArgumentError("radial_power lives on the Lebesgue line")
        if t < 0.0:
            raise DomainError("superlevel threshold must be >= 0")
        r = self.radius if t == 0.0 else self._level_radius(t)
        return IntervalSet([(-r, r)])

    def distribution(self, space: MeasureSpace, t: float) -> float:
        if space.kind != "lebesgue_line":
            raise ArgumentError("radial_power lives on the Lebesgue line")
        if t <= 0.0:
            return 2.0 * self.radius
        return 2.0 * self._level_radius(t)

    def value_breakpoints(self) -> tuple[float, ...]:
        return (self.radius ** (-self.gamma),)

    def sup_abs(self) -> float:
        return INF

    def essential_sup_on_ball(self, radius: float) -> float:
        """ess sup of f over B(0, radius) intersected with the support ball."""
        r = min(radius, self.radius)
        return r ** (-self.gamma)

    def powered(self, q: float) -> "RadialPower":
        return RadialPower(self.gamma * q, self.radius)

    def describe(self) -> dict:
        return {"family": "radial_power", "gamma": self.gamma, "radius": self.radius}


class ComposedFunction(FunctionSpec):
    """C_tau f = f o tau, evaluated lazily.

    The distribution under the target measure nu is
    nu({|f o tau| > t}) = nu(tau^{-1}({|f| > t})): the superlevel set is taken
    in the source space of f and pulled back through the map's exact preimage.
    """

    def __init__(self, tau, f: FunctionSpec):
        self.tau = tau
        self.f = f

    def __call__(self, y):
        return self.f(self.tau(y))

    def superlevel_set(self, space: MeasureSpace, t: float) -> MeasurableSet:
        level = self.f.superlevel_set(self.tau.codomain_space, t)
        return self.tau.preimage(level)

    def distribution(self, space: MeasureSpace, t: float) -> float:
        level = self.f.superlevel_set(self.tau.codomain_space, t)
        return self.tau.preimage_measure(level)

    def value_breakpoints(self) -> tuple[float, ...]:
        return self.f.value_breakpoints()

    def sup_abs(self) -> float:
        return self.f.sup_abs()

    def describe(self) -> dict:
        return {"family": "composed", "map": self.tau.describe(),
                "inner": self.f.describe()}


def distribution(space: MeasureSpace, f: FunctionSpec, t: float) -> float:
    """mu_f(t) = mu({x : |f(x)| > t}); nonincreasing and right-continuous in t."""
    if t < 0.0:
        raise DomainError("distribution threshold must be >= 0")
    return f.distribution(space, t)


def superlevel_set(space: MeasureSpace, f: FunctionSpec, t: float) -> MeasurableSet:
    return f.superlevel_set(space, t)
