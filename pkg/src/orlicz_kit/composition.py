"""Composition maps, exact preimages, and the volume-condition certifier.

A map tau: Y -> X is nonsingular when preimages of null sets are null; the
composition operator C_tau f = f o tau is then well defined on equivalence
classes.  Boundedness of C_tau from the Lorentz space L^{p,1}(X) into the
Orlicz space L^Phi(Y) is equivalent to a volume condition on measurable sets:

    nu(tau^{-1}(E)) <= 1 / Phi(1 / (D mu(E)^{1/p}))      for some D >= 1.

This module certifies that condition over finite set families (exactly, via
closed-form preimage measures), searches for the minimal admissible D by
monotone bisection, checks the modular-side bound that drives the sufficiency
proof, reproduces the classical example maps (floor powers, Orlicz-inverse
floors, logarithmic floors), and runs the divergence/obstruction
demonstrations that witness unboundedness in the out-of-range regimes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ArgumentError, PreconditionError
from .measure import (
    COUNTING_INTEGERS,
    LEBESGUE_LINE,
    ComposedFunction,
    FunctionSpec,
    IndicatorFunction,
    IntegerSet,
    IntervalSet,
    MeasurableSet,
    MeasureSpace,
    PowerLogDecay,
    RadialPower,
    SimpleFunction,
    counting_finite,
    measure_of,
)
from .norms import (
    QuadratureSettings,
    NormResult,
    lorentz_quasinorm,
    lorentz_quasinorm_result,
    luxemburg_norm,
    modular_result,
)
from .numerics import INF, log_grid
from .quadrature import integrate_interval
from .young import (
    ASYMPTOTIC_NABLA2_CANDIDATES,
    ASYMPTOTIC_NABLA2_GRID,
    PowerYoung,
    YoungFunction,
    check_nabla2,
    check_power_equivalence,
    nabla2_comparison_constant,
)

__all__ = [
    "TauMap",
    "IdentityMap",
    "GaussPowerMap",
    "OrliczInverseMap",
    "LogFloorMap",
    "FiniteRestrictionMap",
    "tau_preimage",
    "BlockFamily",
    "RandomSubsetFamily",
    "DyadicIntervalFamily",
    "CertificationReport",
    "check_volume_condition",
    "certify_min_D",
    "ModularBoundReport",
    "modular_bound_check",
    "IndicatorSharpnessReport",
    "indicator_sharpness_check",
    "DivergenceEvidence",
    "counterexample_suite",
    "HolderBoundReport",
    "holder_bound_check",
    "ObstructionReport",
    "continuity_obstruction_demo",
]


# ---------------------------------------------------------------------------
# Maps
# ---------------------------------------------------------------------------


class TauMap:
    """Base class for measurable nonsingular maps tau: Y -> X.

    ``domain_space`` is Y (where C_tau f lives), ``codomain_space`` is X
    (where f and the tested sets E live).  Preimages of codomain sets are
    exactly representable as normalized interval unions.
    """

    domain_space: MeasureSpace
    codomain_space: MeasureSpace

    def __call__(self, y: float):
        raise NotImplementedError

    def preimage(self, e: MeasurableSet) -> MeasurableSet:
        raise NotImplementedError

    def preimage_measure(self, e: MeasurableSet) -> float:
        return measure_of(self.domain_space, self.preimage(e))

    def describe(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        return f"{type(self).__name__}({self.describe()})"


class IdentityMap(TauMap):
    """tau(y) = y on the Lebesgue line; preimages are the sets themselves."""

    domain_space = LEBESGUE_LINE
    codomain_space = LEBESGUE_LINE

    def __call__(self, y: float) -> float:
        return y

    def preimage(self, e: MeasurableSet) -> IntervalSet:
        if not isinstance(e, IntervalSet):
            raise ArgumentError("identity-map sets must be interval unions")
        return e

    def describe(self) -> dict:
        return {"map": "identity"}


class _FloorBoundaryMap(TauMap):
    """Common machinery for maps R -> Z of the form tau(y) = floor(g(|y|)).

    Subclasses provide the increasing boundary function a_k = boundary(k)
    with a_0 = 0; the singleton preimage of {k >= 1} is the symmetric pair
    [-a_{k+1}, -a_k) u [a_k, a_{k+1}) (stored in the half-open convention),
    and the preimage of {0} is the symmetric interval [-a_1, a_1).
    """

    domain_space = LEBESGUE_LINE
    codomain_space = COUNTING_INTEGERS

    def boundary(self, k: int) -> float:
        raise NotImplementedError

    def boundary_array(self, k: np.ndarray) -> np.ndarray:
        return np.array([self.boundary(int(x)) for x in k])

    def preimage(self, e: MeasurableSet) -> IntervalSet:
        if not isinstance(e, IntegerSet):
            raise ArgumentError("floor-map preimages act on finite integer sets")
        pieces: list[tuple[float, float]] = []
        for n, m in e.runs():
            n = max(n, 0)  # the map is nonnegative: negative integers pull back to nothing
            if m <= n:
                continue
            a_n, a_m = self.boundary(n), self.boundary(m)
            pieces.append((a_n, a_m))
            pieces.append((-a_m, -a_n))
        return IntervalSet(pieces)

    def run_measure(self, n: int, m: int) -> float:
        """nu(tau^{-1}({n, ..., m-1})) for a contiguous block, in closed form."""
        n = max(n, 0)
        if m <= n:
            return 0.0
        return 2.0 * (self.boundary(m) - self.boundary(n))

    def preimage_measure(self, e: MeasurableSet) -> float:
        if not isinstance(e, IntegerSet):
            raise ArgumentError("floor-map preimages act on finite integer sets")
        return sum(self.run_measure(n, m) for n, m in e.runs())

    def run_measure_arrays(self, n: np.ndarray, m: np.ndarray) -> np.ndarray:
        n = np.maximum(n, 0)
        return 2.0 * (self.boundary_array(m) - self.boundary_array(n))


class GaussPowerMap(_FloorBoundaryMap):
    """tau(y) = floor(|y|^(p/q)): R -> Z, with preimage boundaries k^(q/p)."""

    def __init__(self, p: float, q: float):
        if not (p > 0.0 and q > 0.0):
            raise ArgumentError("gauss_power needs p > 0 and q > 0")
        self.p = float(p)
        self.q = float(q)

    def __call__(self, y: float) -> int:
        return int(math.floor(abs(y) ** (self.p / self.q)))

    def boundary(self, k: int) -> float:
        return float(k) ** (self.q / self.p)

    def boundary_array(self, k: np.ndarray) -> np.ndarray:
        return np.power(k.astype(float), self.q / self.p)

    def describe(self) -> dict:
        return {"map": "gauss_power", "p": self.p, "q": self.q}


class OrliczInverseMap(_FloorBoundaryMap):
    """tau(y) = floor({Phi^{-1}(1/|y|)}^{-p}): R -> Z.

    The boundary points are a_k = 1 / Phi(k^{-1/p}): the map value reaches k
    exactly when |y| passes the reciprocal of Phi at the k-th scale.
    """

    def __init__(self, phi: YoungFunction, p: float):
        if not p >= 1.0:
            raise ArgumentError("orlicz_inverse needs p >= 1")
        self.phi = phi
        self.p = float(p)

    def __call__(self, y: float) -> int:
        ay = abs(y)
        if ay == 0.0:
            return 0
        inv = self.phi.inverse(1.0 / ay)
        if inv == 0.0 or math.isinf(inv):
            return 0 if math.isinf(inv) else 10 ** 18
        return int(math.floor(inv ** (-self.p)))

    def boundary(self, k: int) -> float:
        if k <= 0:
            return 0.0
        v = self.phi.value(float(k) ** (-1.0 / self.p))
        return INF if v == 0.0 else 1.0 / v

    def boundary_array(self, k: np.ndarray) -> np.ndarray:
        k = k.astype(float)
        out = np.zeros_like(k)
        pos = k > 0
        with np.errstate(divide="ignore"):
            vals = self.phi.value_array(np.power(k[pos], -1.0 / self.p))
            out[pos] = 1.0 / vals
        return out

    def describe(self) -> dict:
        return {"map": "orlicz_inverse", "phi": self.phi.describe(), "p": self.p}


class LogFloorMap(_FloorBoundaryMap):
    """tau(y) = floor({log(1 + 1/|y|)}^{-p}): R -> Z.

    Boundaries a_k = 1/(exp(k^{-1/p}) - 1), obtained by inverting the
    defining expression at integer levels.
    """

    def __init__(self, p: float):
        if not p >= 1.0:
            raise ArgumentError("log_map needs p >= 1")
        self.p = float(p)

    def __call__(self, y: float) -> int:
        ay = abs(y)
        if ay == 0.0:
            return 0
        return int(math.floor(math.log1p(1.0 / ay) ** (-self.p)))

    def boundary(self, k: int) -> float:
        if k <= 0:
            return 0.0
        return 1.0 / math.expm1(float(k) ** (-1.0 / self.p))

    def boundary_array(self, k: np.ndarray) -> np.ndarray:
        k = k.astype(float)
        out = np.zeros_like(k)
        pos = k > 0
        out[pos] = 1.0 / np.expm1(np.power(k[pos], -1.0 / self.p))
        return out

    def describe(self) -> dict:
        return {"map": "log_map", "p": self.p}


class FiniteRestrictionMap(TauMap):
    """A base map with the tested sets restricted to the index set {1,...,k}.

    The pointwise map is unchanged; only the family of admissible codomain
    sets shrinks, which makes every certification finite (finitely many sets).
    """

    domain_space = LEBESGUE_LINE

    def __init__(self, base: TauMap, k: int):
        if k < 1:
            raise ArgumentError("finite restriction needs k >= 1")
        if base.codomain_space.kind != "counting_integers":
            raise ArgumentError("finite restriction needs an integer-codomain base map")
        self.base = base
        self.k = int(k)
        self.codomain_space = counting_finite(k)

    def __call__(self, y: float):
        return self.base(y)

    def _check(self, e: MeasurableSet) -> IntegerSet:
        if not isinstance(e, IntegerSet):
            raise ArgumentError("finite-restriction sets must be integer sets")
        if e.elements and (e.elements[0] < 1 or e.elements[-1] > self.k):
            raise ArgumentError(f"set leaves the index set 1..{self.k}")
        return e

    def preimage(self, e: MeasurableSet) -> IntervalSet:
        return self.base.preimage(self._check(e))

    def preimage_measure(self, e: MeasurableSet) -> float:
        return self.base.preimage_measure(self._check(e))

    def run_measure_arrays(self, n: np.ndarray, m: np.ndarray) -> np.ndarray:
        return self.base.run_measure_arrays(n, m)

    def describe(self) -> dict:
        return {"map": "finite_restriction", "base": self.base.describe(), "k": self.k}


def tau_preimage(tau: TauMap, e: MeasurableSet) -> MeasurableSet:
    """Exact preimage of a measurable codomain set, as a normalized set."""
    return tau.preimage(e)


# ---------------------------------------------------------------------------
# Set families
# ---------------------------------------------------------------------------


class BlockFamily:
    """All contiguous integer blocks {n, ..., m-1} with n_min <= n < m <= n_max.

    Zero is excluded by default; ``include_zero=True`` admits blocks starting
    at 0.  Exposes vectorized (mu, lhs) arrays against a floor map, so the
    certifier can sweep half a million blocks without materializing sets.
    """

    def __init__(self, n_max: int, include_zero: bool = False):
        if n_max < 2:
            raise ArgumentError("block family needs n_max >= 2")
        self.n_max = int(n_max)
        self.include_zero = include_zero
        n0 = 0 if include_zero else 1
        pairs = [(n, m) for n in range(n0, self.n_max)
                 for m in range(n + 1, self.n_max + 1)]
        self._n = np.array([a for a, _ in pairs], dtype=np.int64)
        self._m = np.array([b for _, b in pairs], dtype=np.int64)

    def __len__(self) -> int:
        return len(self._n)

    def arrays(self, tau: TauMap) -> tuple[np.ndarray, np.ndarray]:
        mu = (self._m - self._n).astype(float)
        lhs = tau.run_measure_arrays(self._n, self._m)
        return mu, lhs

    def labels(self) -> Iterable[str]:
        for n, m in zip(self._n, self._m):
            yield f"block_{n}_{m}"

    def label_of(self, i: int) -> str:
        return f"block_{self._n[i]}_{self._m[i]}"

    def set_of(self, i: int) -> IntegerSet:
        return IntegerSet.block(int(self._n[i]), int(self._m[i]))

    def scales(self) -> np.ndarray:
        """Per-set scale (the block's upper endpoint), for stability analysis."""
        return self._m.astype(float)

    def describe(self) -> str:
        return (f"contiguous blocks up to n_max={self.n_max}"
                f" (zero {'included' if self.include_zero else 'excluded'})")


class RandomSubsetFamily:
    """Seeded random finite integer subsets (bounded cardinality and elements)."""

    def __init__(self, seed: int, draws: int = 500, max_card: int = 50,
                 max_element: int = 200, include_zero: bool = False):
        import random

        rng = random.Random(seed)
        low = 0 if include_zero else 1
        sets = []
        for _ in range(draws):
            card = rng.randint(1, max_card)
            elems = rng.sample(range(low, max_element + 1),
                               min(card, max_element + 1 - low))
            sets.append(IntegerSet(elems))
        self._sets = sets
        self.seed = seed

    def __len__(self):
        return len(self._sets)

    def arrays(self, tau: TauMap) -> tuple[np.ndarray, np.ndarray]:
        mu = np.array([s.measure() for s in self._sets])
        lhs = np.array([tau.preimage_measure(s) for s in self._sets])
        return mu, lhs

    def labels(self) -> Iterable[str]:
        for i in range(len(self._sets)):
            yield f"random_{i}"

    def label_of(self, i: int) -> str:
        return f"random_{i}"

    def set_of(self, i: int) -> IntegerSet:
        return self._sets[i]

    def describe(self) -> str:
        return f"{len(self._sets)} seeded random subsets (seed={self.seed})"


class DyadicIntervalFamily:
    """Dyadic intervals [j 2^-l, (j+1) 2^-l) across scales, for line-target maps."""

    def __init__(self, levels: int = 8, span: float = 8.0):
        sets = []
        labels = []
        level = -int(math.log2(span))
        for l in range(level, levels + 1):
            h = 2.0 ** (-l)
            count = min(int(span / h), 64) if h < span else 1
            for j in range(count):
                sets.append(IntervalSet([(j * h, (j + 1) * h)]))
                labels.append(f"dyadic_l{l}_j{j}")
        self._sets = sets
        self._labels = labels

    def __len__(self):
        return len(self._sets)

    def arrays(self, tau: TauMap) -> tuple[np.ndarray, np.ndarray]:
        mu = np.array([s.measure() for s in self._sets])
        lhs = np.array([tau.preimage_measure(s) for s in self._sets])
        return mu, lhs

    def labels(self) -> Iterable[str]:
        return iter(self._labels)

    def label_of(self, i: int) -> str:
        return self._labels[i]

    def set_of(self, i: int) -> IntervalSet:
        return self._sets[i]

    def describe(self) -> str:
        return f"{len(self._sets)} dyadic intervals"


class _ExplicitFamily:
    """Adapter giving plain sequences of sets the vectorized family surface."""

    def __init__(self, sets: Sequence[MeasurableSet]):
        self._sets = list(sets)

    def __len__(self):
        return len(self._sets)

    def arrays(self, tau: TauMap) -> tuple[np.ndarray, np.ndarray]:
        mu_space = tau.codomain_space
        mu = np.array([measure_of(mu_space, s) for s in self._sets])
        lhs = np.array([tau.preimage_measure(s) for s in self._sets])
        return mu, lhs

    def labels(self) -> Iterable[str]:
        for i in range(len(self._sets)):
            yield f"set_{i}"

    def label_of(self, i: int) -> str:
        return f"set_{i}"

    def set_of(self, i: int) -> MeasurableSet:
        return self._sets[i]

    def describe(self) -> str:
        return f"{len(self._sets)} explicit sets"


def _as_family(family) -> object:
    if hasattr(family, "arrays"):
        return family
    sets = list(family)
    if not sets:
        raise ArgumentError("certification family must be nonempty")
    return _ExplicitFamily(sets)


# ---------------------------------------------------------------------------
# Volume-condition certification
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CertificationReport:
    """Outcome of a volume-condition sweep over a family of sets.

    ``min_D_estimate`` is the tested D (for the fixed-D check) or the maximal
    per-set minimal D (for the search); the per-set table keeps the exact
    lhs = nu(tau^{-1}(E)), the rhs at the reference D, their ratio, and the
    per-set minimal admissible D.
    """

    passed: bool
    min_D_estimate: float
    witness_label: str
    witness_index: int
    family_description: str
    reference_d: float
    set_count: int
    mu: np.ndarray
    lhs: np.ndarray
    rhs: np.ndarray
    ratio: np.ndarray
    min_d: np.ndarray
    _family: object
    scale_estimates: tuple[tuple[float, float], ...] = ()

    def rows(self, limit: int | None = None):
        n = self.set_count if limit is None else min(limit, self.set_count)
        for i in range(n):
            yield {
                "set_id": self._family.label_of(i),
                "mu_E": float(self.mu[i]),
                "nu_preimage": float(self.lhs[i]),
                "rhs": float(self.rhs[i]),
                "ratio": float(self.ratio[i]),
                "min_d": float(self.min_d[i]),
            }

    def witness_set(self) -> MeasurableSet:
        return self._family.set_of(self.witness_index)

    def to_dict(self, row_limit: int = 200) -> dict:
        return {
            "passed": self.passed,
            "min_D_estimate": self.min_D_estimate,
            "witness_set": self.witness_label,
            "family": self.family_description,
            "reference_d": self.reference_d,
            "set_count": self.set_count,
            "worst_ratio": float(np.max(self.ratio[np.isfinite(self.ratio)]))
            if np.any(np.isfinite(self.ratio)) else INF,
            "scale_estimates": [[s, e] for s, e in self.scale_estimates],
            "margins": list(self.rows(row_limit)),
            "margins_truncated": self.set_count > row_limit,
        }


def _rhs_at(phi: YoungFunction, p: float, d, mu: np.ndarray) -> np.ndarray:
    """1 / Phi(1/(d mu^{1/p})) with the measure-zero rows pinned to rhs = 0.

    ``d`` may be a scalar or an array aligned with ``mu`` (the bisection path).
    """
    out = np.zeros_like(mu, dtype=float)
    pos = mu > 0.0
    d_pos = d[pos] if isinstance(d, np.ndarray) else d
    with np.errstate(divide="ignore", over="ignore"):
        arg = 1.0 / (d_pos * np.power(mu[pos], 1.0 / p))
        vals = phi.value_array(arg)
        out[pos] = np.where(vals > 0.0, 1.0 / vals, INF)
    return out


def check_volume_condition(
    tau: TauMap,
    phi: YoungFunction,
    p: float,
    d: float,
    family,
    rel_slack: float = 1e-9,
) -> CertificationReport:
    """Test nu(tau^{-1}(E)) <= 1/Phi(1/(d mu(E)^{1/p})) for every E in the family."""
    if not d >= 1.0:
        raise ArgumentError(f"volume-condition constant must satisfy d >= 1, got {d}")
    if not p > 0.0:
        raise ArgumentError(f"Lorentz exponent p must be positive, got {p}")
    fam = _as_family(family)
    mu, lhs = fam.arrays(tau)
    _check_nonsingular(mu, lhs, fam)

    rhs = _rhs_at(phi, p, d, mu)
    ok = lhs <= rhs * (1.0 + rel_slack) + 1e-300
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(rhs > 0.0, lhs / rhs, np.where(lhs > 0.0, INF, 0.0))
    worst = int(np.argmax(ratio))
    min_d = np.where(ok, float(d), INF)  # admissibility of the tested d per set
    return CertificationReport(
        passed=bool(np.all(ok)),
        min_D_estimate=float(d),
        witness_label=fam.label_of(worst),
        witness_index=worst,
        family_description=fam.describe(),
        reference_d=float(d),
        set_count=len(mu),
        mu=mu, lhs=lhs, rhs=rhs, ratio=ratio, min_d=min_d,
        _family=fam,
    )


def _check_nonsingular(mu: np.ndarray, lhs: np.ndarray, fam) -> None:
    bad = (mu == 0.0) & (lhs > 0.0)
    if np.any(bad):
        i = int(np.argmax(bad))
        raise ArgumentError(
            f"nonsingularity violation on {fam.label_of(i)}: "
            f"mu(E) = 0 but nu(preimage) = {lhs[i]}")


_D_ROOF = 2.0 ** 64


_SCALE_GROWTH_CAP = 1.6  # admissible per-decade growth of the min-D estimate


def certify_min_D(
    tau: TauMap,
    phi: YoungFunction,
    p: float,
    family,
) -> CertificationReport:
    """Minimal admissible D per set (monotone bisection), maximized over the family.

    The rhs is nondecreasing in D because Phi is nondecreasing, so per-set
    bisection on [1, 2^64] is exact; sets whose preimage survives even
    D = 2^64 mark the certification as failed (min_D_estimate = +inf).

    The condition quantifies over all measurable sets, so a finite-family
    maximum certifies only if it has stabilized: when the family carries a
    scale (block endpoints), the estimate is recomputed on decade sub-scales,
    and an estimate still growing by more than a factor 1.6 over the last
    decade is reported as +inf (power-law growth, no uniform D).
    """
    if not p > 0.0:
        raise ArgumentError(f"Lorentz exponent p must be positive, got {p}")
    fam = _as_family(family)
    if len(fam) == 0:
        raise ArgumentError("certification family must be nonempty")
    mu, lhs = fam.arrays(tau)
    _check_nonsingular(mu, lhs, fam)

    min_d = np.full(len(mu), 1.0)
    rhs_at_one = _rhs_at(phi, p, 1.0, mu)
    unresolved = lhs > rhs_at_one * (1.0 + 1e-12)
    if np.any(unresolved):
        rhs_roof = _rhs_at(phi, p, _D_ROOF, mu[unresolved])
        hopeless_mask = lhs[unresolved] > rhs_roof * (1.0 + 1e-12)
        idx = np.flatnonzero(unresolved)
        min_d[idx[hopeless_mask]] = INF
        active = idx[~hopeless_mask]
        lo = np.full(len(active), 1.0)
        hi = np.full(len(active), _D_ROOF)
        mua, lhsa = mu[active], lhs[active]
        for _ in range(64):
            if len(active) == 0 or np.max(hi / lo) <= 1.0 + 1e-8:
                break
            mid = np.sqrt(lo * hi)
            rhs_mid = _rhs_at(phi, p, mid, mua)
            ok = lhsa <= rhs_mid * (1.0 + 1e-12)
            hi = np.where(ok, mid, hi)
            lo = np.where(ok, lo, mid)
        min_d[active] = hi  # upper bracket end: certified admissible

    worst = int(np.argmax(min_d))
    estimate = float(np.max(min_d))

    scale_estimates: tuple[tuple[float, float], ...] = ()
    scales = fam.scales() if hasattr(fam, "scales") else None
    if scales is not None and math.isfinite(estimate):
        s_max = float(np.max(scales))
        thresholds = [s_max / 100.0, s_max / 10.0, s_max]
        thresholds = [s for s in thresholds if s >= 10.0]
        if len(thresholds) >= 2:
            finite_d = np.where(np.isfinite(min_d), min_d, 0.0)
            ests = [float(np.max(finite_d[scales <= s], initial=1.0))
                    for s in thresholds]
            scale_estimates = tuple(zip(thresholds, ests))
            if ests[-1] > _SCALE_GROWTH_CAP * ests[-2]:
                estimate = INF  # still growing: no uniform D on this evidence

    passed = math.isfinite(estimate)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(rhs_at_one > 0.0, lhs / rhs_at_one,
                         np.where(lhs > 0.0, INF, 0.0))
    return CertificationReport(
        passed=passed,
        min_D_estimate=estimate,
        witness_label=fam.label_of(worst),
        witness_index=worst,
        family_description=fam.describe(),
        reference_d=1.0,
        set_count=len(mu),
        mu=mu, lhs=lhs, rhs=rhs_at_one, ratio=ratio, min_d=min_d,
        _family=fam,
        scale_estimates=scale_estimates,
    )


def require_power_equivalence_gate(tau: OrliczInverseMap) -> None:
    """Certification hypothesis for Orlicz-inverse maps.

    The map's defining expression t -> {Phi^{-1}(1/t)}^{-p} must be equivalent
    to a power on (1, 1e4); certification refuses to run otherwise.
    """
    report = check_power_equivalence(
        lambda t: tau.phi.inverse(1.0 / t) ** (-tau.p), tau.p, (1.0, 1e4),
        n_points=160)
    if not report.holds:
        raise PreconditionError(
            "orlicz_inverse certification requires the power-equivalence "
            f"hypothesis on (1, 1e4); scan found band [{report.c1}, {report.c2}]")


# ---------------------------------------------------------------------------
# Modular-side bound
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModularBoundReport:
    modular: float
    bound: float
    holds: bool
    weak_norm: float
    lorentz_p1: float

    def to_dict(self) -> dict:
        return {"modular": self.modular, "bound": self.bound, "holds": self.holds,
                "weak_norm": self.weak_norm, "lorentz_p1": self.lorentz_p1}


def modular_bound_check(
    tau: TauMap,
    phi: YoungFunction,
    p: float,
    d: float,
    f: FunctionSpec,
    settings: QuadratureSettings | None = None,
    tolerance: float = 1e-6,
) -> ModularBoundReport:
    """integral Phi(|C_tau f|) dnu <= 2 d ||f||_{L^{p,1}} for normalized f.

    Preconditions: the volume condition holds at (tau, phi, p, d) on the
    superlevel sets of f, and ||f||_{p,inf} <= (2d)^{-1} (the caller rescales).
    """
    if settings is None:
        settings = QuadratureSettings()
    x_space = tau.codomain_space
    weak = lorentz_quasinorm(p, INF, f, x_space, settings)
    if weak > (1.0 + 1e-9) / (2.0 * d):
        raise PreconditionError(
            f"modular bound needs ||f||_(p,inf) <= 1/(2d): got {weak} > {1/(2*d)}")

    levels = sorted({abs(v) for v in f.value_breakpoints()})
    level_sets = [f.superlevel_set(x_space, lv * (1.0 - 1e-12)) for lv in levels]
    level_sets = [e for e in level_sets if not e.is_empty]
    if level_sets:
        cert = check_volume_condition(tau, phi, p, d, level_sets)
        if not cert.passed:
            raise PreconditionError(
                "volume condition fails on the superlevel sets at the given d "
                f"(worst set {cert.witness_label})")

    composed = ComposedFunction(tau, f)
    mod = modular_result(phi, composed, 1.0, tau.domain_space, settings)
    p1 = lorentz_quasinorm(p, 1.0, f, x_space, settings)
    bound = 2.0 * d * p1
    holds = mod.value <= bound + tolerance
    return ModularBoundReport(mod.value, bound, holds, weak, p1)


# ---------------------------------------------------------------------------
# Indicator sharpness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndicatorSharpnessReport:
    engine_norm: float       # ||C_tau chi_E||_Phi via the general engine
    closed_form: float       # 1/Phi^{-1}(1/nu(preimage))
    relative_gap: float
    preimage_measure: float
    lorentz_reference: float  # ||chi_E||_{p,1} = mu(E)^{1/p}
    ratio_vs_reference: float

    def to_dict(self) -> dict:
        return {
            "engine_norm": self.engine_norm,
            "closed_form": self.closed_form,
            "relative_gap": self.relative_gap,
            "preimage_measure": self.preimage_measure,
            "lorentz_reference": self.lorentz_reference,
            "ratio_vs_reference": self.ratio_vs_reference,
        }


def indicator_sharpness_check(
    tau: TauMap,
    phi: YoungFunction,
    p: float,
    e: MeasurableSet,
    settings: QuadratureSettings | None = None,
) -> IndicatorSharpnessReport:
    """C_tau chi_E = chi_{preimage}: general engine vs the indicator closed form."""
    if settings is None:
        settings = QuadratureSettings(relative_tolerance=1e-10)
    pre = tau.preimage(e)
    nu_pre = measure_of(tau.domain_space, pre)
    if nu_pre == 0.0:
        closed = 0.0
        engine = 0.0
    else:
        inv = phi.inverse(1.0 / nu_pre)
        closed = INF if inv == 0.0 else 1.0 / inv
        engine = luxemburg_norm(phi, IndicatorFunction(pre), tau.domain_space, settings)
    gap = abs(engine - closed) / max(closed, 1e-300) if math.isfinite(closed) else 0.0
    mu_e = measure_of(tau.codomain_space, e)
    reference = lorentz_quasinorm(p, 1.0, IndicatorFunction(e), tau.codomain_space,
                                  settings)
    ratio = engine / reference if reference > 0.0 else INF
    return IndicatorSharpnessReport(engine, closed, gap, nu_pre, reference, ratio)


# ---------------------------------------------------------------------------
# Counterexample ladders
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DivergenceEvidence:
    """Finite-norm side plus a rising truncation ladder for the failing side."""

    kind: str
    params: dict
    finite_norm: float
    finite_norm_status: str
    tail_bound: float
    ladder: tuple[tuple[float, float], ...]   # (R, truncated value)
    log_slope: float
    strictly_increasing: bool
    lower_bound_checked: bool

    @property
    def passed(self) -> bool:
        return (self.finite_norm_status == "finite"
                and math.isfinite(self.tail_bound)
                and self.strictly_increasing and self.log_slope > 0.0
                and self.lower_bound_checked)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "finite_norm": self.finite_norm,
            "finite_norm_status": self.finite_norm_status,
            "certified_tail_bound": self.tail_bound,
            "ladder": [[r, v] for r, v in self.ladder],
            "log_slope": self.log_slope,
            "strictly_increasing": self.strictly_increasing,
            "lower_bound_checked": self.lower_bound_checked,
            "passed": self.passed,
        }


_DEFAULT_LADDER = (1e3, 1e4, 1e5, 1e6)


def _fitted_log_slope(ladder: Sequence[tuple[float, float]]) -> float:
    xs = [math.log10(r) for r, _ in ladder]
    ys = [v for _, v in ladder]
    n = len(xs)
    sx, sy = sum(xs), sum(ys)
    sxx = sum(x * x for x in xs)
    sxy = sum(x * y for x, y in zip(xs, ys))
    return (n * sxy - sx * sy) / (n * sxx - sx * sx)


def counterexample_suite(
    kind: str,
    p: float,
    q: float | None = None,
    ladder: Sequence[float] = _DEFAULT_LADDER,
    settings: QuadratureSettings | None = None,
) -> DivergenceEvidence:
    """Numeric evidence for the two classical unboundedness examples.

    kind="ex1" (0 < p < 1): the identity map on the line with
    f = (1+|x|)^{-1/p} log(3+|x|)^{-1/p}; f has finite L^{p,1} quasi-norm but
    the truncated L^p modular rises without bound along the R-ladder.

    kind="ex2_3" (0 < q < p): the floor-power map; f(n) =
    (1+|n|)^{-1/p} log(3+|n|)^{-1/q} lies in l^p but the composition leaves
    L^q, witnessed through the pointwise lower bound
    (p/q)^{-1/q} (1+|y|)^{-1/q} log(3+|y|)^{-1/q} for |C_tau f|.
    """
    if settings is None:
        settings = QuadratureSettings()
    if kind == "ex1":
        if not 0.0 < p < 1.0:
            raise PreconditionError(f"ex1 needs 0 < p < 1, got p={p}")
        f = PowerLogDecay(p, p)
        norm = lorentz_quasinorm_result(p, 1.0, f, LEBESGUE_LINE, settings)
        tail = f.tail_integral_bound(1.0, _ex1_tail_cutoff(f, norm))
        rungs = []
        for r in ladder:
            val, _ = integrate_interval(lambda x: 2.0 * f(x) ** p, 0.0, float(r),
                                        rel_tol=1e-10)
            rungs.append((float(r), val))
        slope = _fitted_log_slope(rungs)
        increasing = all(b > a for (_, a), (_, b) in zip(rungs, rungs[1:]))
        return DivergenceEvidence("ex1", {"p": p}, norm.value, norm.status,
                                  tail, tuple(rungs), slope, increasing, True)

    if kind == "ex2_3":
        if q is None or not 0.0 < q < p:
            raise PreconditionError(f"ex2_3 needs 0 < q < p, got p={p}, q={q}")
        f = PowerLogDecay(p, q)
        norm = modular_result(PowerYoung(p), f, 1.0, COUNTING_INTEGERS, settings)
        lp_norm = norm.value ** (1.0 / p) if math.isfinite(norm.value) else INF
        tail = f.sum_tail_bound(p, 4096)
        tau = GaussPowerMap(p, q)
        composed = ComposedFunction(tau, f)
        scale = (p / q) ** (-1.0 / q)

        def lower_bound(y: float) -> float:
            return scale * (1.0 + abs(y)) ** (-1.0 / q) \
                * math.log(3.0 + abs(y)) ** (-1.0 / q)

        checked = all(abs(composed(y)) >= lower_bound(y) * (1.0 - 1e-12)
                      for y in log_grid(1e-3, float(ladder[-1]), 64))
        rungs = []
        for r in ladder:
            val, _ = integrate_interval(lambda y: 2.0 * lower_bound(y) ** q,
                                        0.0, float(r), rel_tol=1e-10)
            rungs.append((float(r), val))
        slope = _fitted_log_slope(rungs)
        increasing = all(b > a for (_, a), (_, b) in zip(rungs, rungs[1:]))
        return DivergenceEvidence("ex2_3", {"p": p, "q": q}, lp_norm, norm.status,
                                  tail, tuple(rungs), slope, increasing, checked)

    raise ArgumentError(f"unknown counterexample kind {kind!r}")


def _ex1_tail_cutoff(f: PowerLogDecay, norm: NormResult) -> float:
    t_lo = norm.truncation[0] if norm.truncation else 1e-12
    return f._radius(max(t_lo, 1e-300)) if t_lo > 0.0 else INF


# ---------------------------------------------------------------------------
# Growth-condition consequences (the obstruction lemmas, numerically)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HolderBoundReport:
    """The difference-quotient majorant h -> h^{-1} / Phi(1/(d h)) on a grid."""

    gamma: float
    constant: float          # C / Phi(1/d), the bound constant
    quantities: tuple[float, ...]
    bound_holds: bool
    monotone_decreasing: bool
    final_value: float

    def to_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "constant": self.constant,
            "bound_holds": self.bound_holds,
            "monotone_decreasing": self.monotone_decreasing,
            "final_value": self.final_value,
            "quantities": list(self.quantities),
        }


def holder_bound_check(
    phi: YoungFunction,
    d: float,
    gamma: float,
    h_grid: Sequence[float] | None = None,
) -> HolderBoundReport:
    """Check h^{-1} {Phi(1/(d h))}^{-1} <= C h^{gamma-1} and the decay to 0.

    The constant is C_hat / Phi(1/d) with C_hat the comparison constant of
    Phi(t)/t^gamma at the supplied gamma, scanned over a grid covering the
    arguments 1/(d h) that actually occur.  Requires the growth condition.
    """
    if h_grid is None:
        h_grid = tuple(2.0 ** (-k) for k in range(1, 21))
    h = sorted({float(x) for x in h_grid}, reverse=True)
    if not h or h[0] >= 1.0 or h[-1] <= 0.0:
        raise ArgumentError("h grid must lie in (0, 1)")
    gate = check_nabla2(phi, ASYMPTOTIC_NABLA2_CANDIDATES, ASYMPTOTIC_NABLA2_GRID)
    if not gate.holds:
        raise PreconditionError("holder_bound_check requires the nabla_2 condition")
    if not gamma > 1.0:
        raise ArgumentError("holder_bound_check needs gamma > 1")

    scan = log_grid(1.0 / d * 0.99, 1.0 / (d * h[-1]) * 1.01, 400)
    c_hat = nabla2_comparison_constant(phi, gamma, scan)
    base = phi.value(1.0 / d)
    const = c_hat / base

    quantities = []
    ok = True
    for x in h:
        v = phi.value(1.0 / (d * x))
        qty = 0.0 if math.isinf(v) else 1.0 / (x * v)
        quantities.append(qty)
        if qty > const * x ** (gamma - 1.0) * (1.0 + 1e-9) + 1e-300:
            ok = False
    monotone = all(b <= a * (1.0 + 1e-12) for a, b in zip(quantities, quantities[1:]))
    return HolderBoundReport(gamma, const, tuple(quantities), ok, monotone,
                             quantities[-1])


@dataclass(frozen=True)
class ObstructionReport:
    """Finite L^p norm of the radial spike vs its exploding local sup."""

    p: float
    gamma: float
    lp_norm_engine: float
    lp_norm_closed: float
    ladder: tuple[tuple[float, float], ...]   # (radius, essential sup)
    diverges: bool

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "gamma": self.gamma,
            "lp_norm_engine": self.lp_norm_engine,
            "lp_norm_closed": self.lp_norm_closed,
            "ladder": [[r, s] for r, s in self.ladder],
            "diverges": self.diverges,
        }


def continuity_obstruction_demo(
    p: float,
    gamma: float,
    shrink_ladder: Sequence[float] | None = None,
    settings: QuadratureSettings | None = None,
) -> ObstructionReport:
    """The one-dimensional witness that no continuous map can be certified.

    f = |x|^{-gamma} chi_{B(0,1)} lies in L^p for gamma < 1/p, yet the
    essential sup of |x - a|^{-gamma} over shrinking balls B(a, eps) explodes
    (here a = 0, eps along the ladder), so composing with any continuous map
    that hits a cannot stay bounded into L^inf-type targets.
    """
    if not p > 0.0:
        raise ArgumentError("p must be positive")
    if not 0.0 < gamma < 1.0 / p:
        raise PreconditionError(
            f"obstruction demo needs 0 < gamma < 1/p (f in L^p); got gamma={gamma}")
    if shrink_ladder is None:
        shrink_ladder = tuple(2.0 ** (-k) for k in range(1, 31))
    if settings is None:
        settings = QuadratureSettings(relative_tolerance=1e-10)
    f = RadialPower(gamma, 1.0)
    engine = luxemburg_norm(PowerYoung(p), f, LEBESGUE_LINE, settings)
    closed = (2.0 / (1.0 - gamma * p)) ** (1.0 / p)
    ladder = tuple((float(r), f.essential_sup_on_ball(float(r)))
                   for r in shrink_ladder)
    sups = [s for _, s in ladder]
    diverges = all(b > a for a, b in zip(sups, sups[1:])) and sups[-1] > 10.0 * sups[0]
    return ObstructionReport(p, gamma, engine, closed, ladder, diverges)
