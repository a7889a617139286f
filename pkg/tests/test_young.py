"""Young-function calculus: evaluation, derivatives, conjugates, inverses,
growth conditions, product bounds."""

import math

import numpy as np
import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from orlicz_kit.errors import ArgumentError, DomainError, PreconditionError
from orlicz_kit.numerics import backward_difference, log_grid
from orlicz_kit.young import (
    DEFAULT_NABLA2_CANDIDATES,
    ASYMPTOTIC_NABLA2_CANDIDATES,
    ASYMPTOTIC_NABLA2_GRID,
    ExpMinusOneYoung,
    LLogLYoung,
    LinearYoung,
    PowerComposedYoung,
    PowerYoung,
    TabulatedYoung,
    check_nabla2,
    check_oneil,
    check_power_equivalence,
    complementary,
    conjugate_inverse,
    estimate_nabla2_exponent,
    eval_young,
    generalized_inverse,
    left_derivative,
    nabla2_comparison_constant,
    power_compose,
    validate_young,
)

from oracles import brute_conjugate

INF = math.inf

ALL_FAMILIES = [
    PowerYoung(1.3),
    PowerYoung(2.0),
    PowerYoung(3.0),
    LinearYoung(),
    LLogLYoung(),
    ExpMinusOneYoung(),
    PowerComposedYoung(PowerYoung(4.0), 2.0),
]


def half_square_tabulated(s_max=8.0, n=4001):
    ts = np.linspace(0.0, s_max, n)
    return TabulatedYoung(list(zip(ts, ts * ts / 2.0)))


# -- evaluation ---------------------------------------------------------------


def test_eval_examples():
    assert eval_young(PowerYoung(2.0), 3.0) == 9.0
    assert eval_young(LLogLYoung(), 0.0) == 0.0
    assert eval_young(ExpMinusOneYoung(), 1.0) == pytest.approx(math.e - 1.0, rel=1e-15)


def test_eval_domain_errors():
    with pytest.raises(DomainError):
        eval_young(PowerYoung(2.0), -1.0)
    with pytest.raises(DomainError):
        eval_young(LLogLYoung(), math.inf)


def test_domain_cap_gives_infinity():
    phi = TabulatedYoung([(0.0, 0.0), (1.0, 0.0)], domain_cap=1.0)
    assert phi.value(0.5) == 0.0
    assert phi.value(2.0) == INF


def test_overflow_saturates():
    assert eval_young(ExpMinusOneYoung(), 1e4) == INF


# -- left derivative ----------------------------------------------------------


def test_left_derivative_examples():
    assert left_derivative(PowerYoung(2.0), 1.0) == pytest.approx(2.0, rel=1e-14)
    assert left_derivative(LinearYoung(), 5.0) == 1.0


def test_llogl_derivative_matches_symbolic_oracle():
    import sympy as sp

    t = sp.Symbol("t", positive=True)
    oracle = float(sp.diff(t * sp.log(3 + t), t).subs(t, 1))
    assert oracle == pytest.approx(1.6362943611198906, abs=1e-15)  # frozen
    got = left_derivative(LLogLYoung(), 1.0)
    assert got == pytest.approx(oracle, rel=1e-14)
    # sandwich at t = 1 per the derivative bounds
    phi = LLogLYoung()
    assert phi.value(1.0) / 1.0 <= got <= phi.value(2.0) / 1.0


def test_left_derivative_domain_error():
    with pytest.raises(DomainError):
        left_derivative(PowerYoung(2.0), 0.0)


def test_numeric_backward_difference_fallback():
    got = backward_difference(lambda t: t * math.log(3.0 + t), 1.0)
    assert got == pytest.approx(1.6362943611198906, rel=1e-8)


def test_tabulated_left_derivative_is_incoming_slope():
    phi = TabulatedYoung([(0.0, 0.0), (1.0, 0.0), (2.0, 1.0)])
    assert phi.left_derivative(1.0) == 0.0   # left slope at the knot
    assert phi.left_derivative(1.5) == 1.0
    assert phi.left_derivative(3.0) == 1.0   # extension slope


@pytest.mark.parametrize("phi", ALL_FAMILIES + [half_square_tabulated()],
                         ids=lambda p: type(p).__name__ + str(id(p))[-3:])
def test_derivative_sandwich_all_families(phi):
    for t in log_grid(1e-4, 1e4, 60):
        t = float(t)
        d = phi.left_derivative(t)
        lo = phi.value(t) / t
        hi_val = phi.value(2.0 * t)
        hi = hi_val / t if not math.isinf(hi_val) else INF
        assert lo <= d * (1.0 + 1e-12) + 1e-300
        assert d <= hi * (1.0 + 1e-12) + 1e-300


# -- conjugates ---------------------------------------------------------------


def test_conjugate_of_half_square():
    # conjugate of s^2/2 is t^2/2; tabulated interpolation + brute oracle
    phi = half_square_tabulated()
    oracle = brute_conjugate(lambda s: s * s / 2.0, 2.0, 8.0)
    assert oracle == pytest.approx(2.0, abs=1e-9)  # frozen closed form
    assert complementary(phi, 2.0) == pytest.approx(2.0, abs=1e-5)


def test_conjugate_linear():
    assert complementary(LinearYoung(), 0.5) == 0.0
    assert complementary(LinearYoung(), 1.0) == 0.0
    assert complementary(LinearYoung(), 2.0) == INF


def test_conjugate_llogl_band():
    # frozen from the brute-force maximization oracle at t in {4, 5, 6, 8}
    frozen = {4.0: 17.290375657696778, 5.0: 51.67772447926828,
              6.0: 145.44308029784656, 8.0: 1093.6372544364885}
    phi = LLogLYoung()
    for t, expected in frozen.items():
        live = brute_conjugate(lambda s: s * np.log(3.0 + s), t, 5000.0)
        assert live == pytest.approx(expected, rel=1e-9)
        assert complementary(phi, t) == pytest.approx(expected, rel=1e-9)
        assert 0.31 <= complementary(phi, t) / math.exp(t) <= 0.37


def test_conjugate_exp_closed_form():
    phi = ExpMinusOneYoung()
    assert phi.conjugate(0.5) == 0.0
    for t in (1.5, 3.0, 10.0):
        assert phi.conjugate(t) == pytest.approx(t * math.log(t) - t + 1.0, rel=1e-14)
        oracle = brute_conjugate(lambda s: np.expm1(s), t, 50.0)
        assert phi.conjugate(t) == pytest.approx(oracle, rel=1e-8)


def test_conjugate_power_closed_form():
    phi = PowerYoung(2.0)
    for t in (0.5, 1.0, 7.0):
        assert phi.conjugate(t) == pytest.approx(t * t / 4.0, rel=1e-14)


def test_conjugate_at_zero_is_zero():
    for phi in ALL_FAMILIES:
        assert phi.conjugate(0.0) == 0.0


# -- generalized inverse ------------------------------------------------------


def test_inverse_examples():
    assert generalized_inverse(PowerYoung(2.0), 9.0) == pytest.approx(3.0, rel=1e-14)
    assert generalized_inverse(ExpMinusOneYoung(), math.e - 1.0) == \
        pytest.approx(1.0, rel=1e-14)


def test_inverse_flat_piece_returns_right_endpoint():
    # nondecreasing, identically 0 on [0,1], strictly increasing after
    psi = TabulatedYoung([(0.0, 0.0), (1.0, 0.0), (2.0, 1.0)])
    assert generalized_inverse(psi, 0.0) == pytest.approx(1.0, abs=1e-9)


def test_inverse_saturated_is_infinite():
    flat = TabulatedYoung([(0.0, 0.0), (1.0, 0.0)])  # zero slope forever
    assert generalized_inverse(flat, 0.5) == INF


def test_inverse_of_infinity():
    assert generalized_inverse(PowerYoung(2.0), INF) == INF


@pytest.mark.parametrize("phi", [PowerYoung(1.7), LLogLYoung(), ExpMinusOneYoung()],
                         ids=["power", "llogl", "exp"])
def test_inverse_roundtrip(phi):
    for t in log_grid(1e-3, 1e3, 25):
        t = float(t)
        v = phi.value(t)
        if math.isinf(v):
            continue  # saturated: the roundtrip is only defined at finite values
        assert generalized_inverse(phi, v) == pytest.approx(t, rel=1e-10)


# -- validity -----------------------------------------------------------------


def test_validate_examples():
    rep = validate_young(PowerYoung(0.5))
    assert not rep.convex and not rep.passed
    assert validate_young(PowerYoung(2.0)).passed
    assert validate_young(LLogLYoung()).passed
    assert validate_young(ExpMinusOneYoung()).passed
    assert validate_young(LinearYoung()).passed


def test_validate_empty_grid_rejected():
    with pytest.raises(ArgumentError):
        validate_young(PowerYoung(2.0), [])


def test_tabulated_convexity_enforced():
    with pytest.raises(ArgumentError):
        TabulatedYoung([(0.0, 0.0), (1.0, 1.0), (2.0, 1.5)])  # slope decreases


# -- nabla_2 ------------------------------------------------------------------


def test_nabla2_defaults():
    rep = check_nabla2(PowerYoung(2.0))
    assert rep.holds and rep.witness_k == 2.0
    assert not check_nabla2(LinearYoung()).holds
    assert not check_nabla2(LLogLYoung()).holds


def test_nabla2_llogl_asymptotic_ratio_oracle():
    # Phi(kt)/(2k Phi(t)) -> 1/2 as t -> inf for every fixed k
    phi = LLogLYoung()
    t = 1e6
    for k in DEFAULT_NABLA2_CANDIDATES:
        ratio = phi.value(k * t) / (2.0 * k * phi.value(t))
        assert ratio < 1.0


def test_nabla2_asymptotic_gate_classification():
    assert check_nabla2(PowerYoung(2.0), ASYMPTOTIC_NABLA2_CANDIDATES,
                        ASYMPTOTIC_NABLA2_GRID).holds
    assert check_nabla2(ExpMinusOneYoung(), ASYMPTOTIC_NABLA2_CANDIDATES,
                        ASYMPTOTIC_NABLA2_GRID).holds
    assert not check_nabla2(LinearYoung(), ASYMPTOTIC_NABLA2_CANDIDATES,
                            ASYMPTOTIC_NABLA2_GRID).holds
    assert not check_nabla2(LLogLYoung(), ASYMPTOTIC_NABLA2_CANDIDATES,
                            ASYMPTOTIC_NABLA2_GRID).holds


def test_nabla2_report_invariant():
    rep = check_nabla2(PowerYoung(2.0))
    k = rep.witness_k
    phi = PowerYoung(2.0)
    for t in rep.test_grid[::10]:
        assert phi.value(t) <= phi.value(k * t) / (2.0 * k) * (1.0 + 1e-12)


def test_nabla2_grid_precondition():
    with pytest.raises(ArgumentError):
        check_nabla2(PowerYoung(2.0), grid=log_grid(1e-3, 1e3, 50))


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_exponent_estimate_power(p):
    gamma, c = estimate_nabla2_exponent(PowerYoung(p))
    assert gamma == pytest.approx(p, abs=1e-3)
    assert c == pytest.approx(1.0, abs=1e-6)


def test_exponent_estimate_composed_identity():
    gamma, c = estimate_nabla2_exponent(PowerComposedYoung(PowerYoung(2.0), 1.0))
    assert gamma == pytest.approx(2.0, abs=1e-3)
    assert c == pytest.approx(1.0, abs=1e-6)


def test_exponent_estimate_exp():
    gamma, c = estimate_nabla2_exponent(ExpMinusOneYoung())
    assert gamma > 1.0
    assert math.isfinite(c) and c >= 1.0
    # the claimed comparison inequality actually holds at the returned pair
    grid = log_grid(1e-3, 1e3, 160)
    assert nabla2_comparison_constant(ExpMinusOneYoung(), gamma, grid) <= c * (1 + 1e-9)


def test_exponent_estimate_requires_nabla2():
    with pytest.raises(PreconditionError):
        estimate_nabla2_exponent(LinearYoung())


# -- O'Neil -------------------------------------------------------------------


def test_oneil_examples(standard_phi):
    rep = check_oneil(standard_phi)
    assert rep.passed
    assert rep.min_ratio >= 1.0 - 1e-8
    assert rep.max_ratio <= 2.0 + 1e-8


def test_oneil_power2_upper_equality():
    phi = PowerYoung(2.0)
    t = 1.0
    prod = generalized_inverse(phi, t) * conjugate_inverse(phi, t)
    assert prod == pytest.approx(2.0 * t, rel=1e-10)


def test_oneil_linear_lower_equality():
    phi = LinearYoung()
    for t in (0.1, 1.0, 10.0):
        prod = generalized_inverse(phi, t) * conjugate_inverse(phi, t)
        assert prod == pytest.approx(t, rel=1e-12)


# -- power equivalence --------------------------------------------------------


def test_power_equivalence_log_map():
    rep = check_power_equivalence(
        lambda t: math.log1p(1.0 / t) ** (-1.0), 1.0, (1.0, 1e6))
    assert rep.holds
    # g(t)/t -> 1 as t -> infinity
    g = 1e6 * math.log1p(1e-6) ** -1.0 / 1e6
    assert math.log1p(1e-6) ** -1.0 / 1e6 == pytest.approx(1.0, rel=1e-5)
    assert rep.c1 >= 1.0 - 1e-9  # log(1+1/t) <= 1/t pointwise


def test_power_equivalence_exact_power():
    rep = check_power_equivalence(lambda t: t ** 2.5, 2.5, (2.0, 100.0))
    assert rep.c1 == pytest.approx(1.0, rel=1e-12)
    assert rep.c2 == pytest.approx(1.0, rel=1e-12)


def test_power_equivalence_llogl_inverse():
    phi = LLogLYoung()
    rep = check_power_equivalence(
        lambda t: phi.inverse(1.0 / t) ** (-1.0), 1.0, (1.0, 1e4), n_points=120)
    assert rep.holds
    assert rep.c1 > 0.5 and rep.c2 < 5.0  # derived band from the inverse oracle


# -- power composition --------------------------------------------------------


def test_power_compose_examples():
    composed = power_compose(PowerYoung(3.0), 2.0)
    for t in (0.5, 2.0, 9.0):
        assert composed.value(t) == pytest.approx(t ** 1.5, rel=1e-14)
    same = power_compose(LLogLYoung(), 1.0)
    for t in (0.3, 1.0, 7.0):
        assert same.value(t) == LLogLYoung().value(t)  # q=1: bitwise identity
    sqrt_like = power_compose(PowerYoung(1.0), 2.0)
    assert not validate_young(sqrt_like).passed


def test_power_compose_exact_roundtrip():
    # (t^q)^(1/q) is exact for q = 2 on these floats, so values match bitwise
    phi = LLogLYoung()
    composed = power_compose(phi, 2.0)
    for t in (1.0, 2.0, 3.0, 4.0, 9.0):
        assert composed.value(t ** 2) == phi.value(t)


def test_power_compose_inverse_and_derivative():
    composed = power_compose(PowerYoung(4.0), 2.0)  # t^2 in disguise
    assert composed.inverse(9.0) == pytest.approx(3.0, rel=1e-12)
    assert composed.left_derivative(3.0) == pytest.approx(6.0, rel=1e-12)


# -- property-based invariants -----------------------------------------------


@given(s=st.floats(0.0, 50.0), t=st.floats(0.0, 50.0))
@hyp_settings(max_examples=150, deadline=None)
def test_fenchel_young_inequality(s, t):
    for phi in (PowerYoung(2.0), LLogLYoung(), ExpMinusOneYoung()):
        conj = phi.conjugate(t)
        if math.isinf(conj):
            continue
        assert s * t <= phi.value(s) + conj + 1e-8 * max(1.0, s * t)


@given(t=st.floats(1e-3, 1e3))
@hyp_settings(max_examples=80, deadline=None)
def test_conjugate_monotone(t):
    for phi in (PowerYoung(2.0), LLogLYoung(), ExpMinusOneYoung()):
        c1 = phi.conjugate(t)
        c2 = phi.conjugate(t * 1.5)
        if math.isinf(c1):
            assert math.isinf(c2)  # beyond float range stays saturated
        else:
            assert c2 >= c1 - 1e-9 * max(1.0, abs(c1))


def test_conjugate_convexity_on_grid(standard_phi):
    ts = log_grid(1e-2, 50.0, 40)
    vals = [standard_phi.conjugate(float(t)) for t in ts]
    for i in range(len(ts) - 2):
        s_l = (vals[i + 1] - vals[i]) / (ts[i + 1] - ts[i])
        s_r = (vals[i + 2] - vals[i + 1]) / (ts[i + 2] - ts[i + 1])
        assert s_r >= s_l - 1e-7 * max(1.0, abs(s_r))
