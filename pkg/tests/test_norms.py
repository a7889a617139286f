"""Orlicz modulars, Luxemburg norms, Lorentz quasi-norms, identity checks."""

import math

import pytest

from orlicz_kit.corpus import simple_corpus
from orlicz_kit.errors import ArgumentError
from orlicz_kit.measure import (
    COUNTING_INTEGERS,
    LEBESGUE_LINE,
    IndicatorFunction,
    IntegerSet,
    IntervalSet,
    PowerLogDecay,
    SimpleFunction,
)
from orlicz_kit.norms import (
    QuadratureSettings,
    embedding_ratio,
    layer_cake_check,
    lorentz_quasinorm,
    lorentz_quasinorm_result,
    luxemburg_norm,
    luxemburg_norm_result,
    modular,
    modular_result,
    power_transform,
    scaling_identity_check,
)
from orlicz_kit.young import ExpMinusOneYoung, LLogLYoung, PowerYoung

from oracles import direct_simple_lp_norm, direct_simple_modular, layer_lorentz_p1

INF = math.inf


# -- modular --------------------------------------------------------------------


def test_modular_indicator_example():
    f = IndicatorFunction(IntervalSet([(0, 4)]))
    assert modular(PowerYoung(2.0), f, 2.0, LEBESGUE_LINE) == \
        pytest.approx(1.0, rel=1e-8)


def test_modular_simple_exact_sum():
    f = SimpleFunction([(IntervalSet([(0, 2)]), 1.5), (IntervalSet([(3, 4)]), 0.5)])
    for p in (1.0, 2.0, 3.5):
        want = direct_simple_modular(PowerYoung(p), f, LEBESGUE_LINE)
        got = modular(PowerYoung(p), f, 1.0, LEBESGUE_LINE)
        assert got == pytest.approx(want, rel=1e-8)


def test_modular_counting_simple_is_exact():
    f = SimpleFunction([(IntegerSet([0, 1, 2]), 2.0), (IntegerSet([5]), 1.0)])
    got = modular(PowerYoung(2.0), f, 1.0, COUNTING_INTEGERS)
    assert got == 3 * 4.0 + 1.0


def test_modular_divergence_certified():
    # the quasi-power case: f in L^{p,1} \ L^p for p < 1
    f = PowerLogDecay(0.5, 0.5)
    res = modular_result(PowerYoung(0.5), f, 1.0, LEBESGUE_LINE)
    assert res.status == "infinite"
    assert res.value == INF


def test_modular_rejects_bad_lambda():
    f = IndicatorFunction(IntervalSet([(0, 1)]))
    with pytest.raises(ArgumentError):
        modular(PowerYoung(2.0), f, 0.0, LEBESGUE_LINE)


def test_modular_monotone_in_lambda():
    f = SimpleFunction([(IntervalSet([(0, 1)]), 2.0), (IntervalSet([(2, 4)]), 0.3)])
    for phi in (PowerYoung(2.0), LLogLYoung(), ExpMinusOneYoung()):
        vals = [modular(phi, f, lam, LEBESGUE_LINE)
                for lam in (0.25, 0.5, 1.0, 2.0, 4.0)]
        assert all(a >= b - 1e-10 for a, b in zip(vals, vals[1:]))


def test_modular_counting_decay_tail_bracket():
    # l^2 modular of the decaying sequence, bracketed by a direct partial sum
    # plus a scipy integral-test tail (independent oracle for the slow tail)
    import numpy as np
    from scipy.integrate import quad

    f = PowerLogDecay(2.0, 1.0)
    res = modular_result(PowerYoung(2.0), f, 1.0, COUNTING_INTEGERS)
    n = np.arange(1, 3_000_000)
    partial = f(0) ** 2 + 2.0 * float(
        np.sum((1.0 + n) ** -1.0 * np.log(3.0 + n) ** -2.0))
    g = lambda x: (1.0 + x) ** -1.0 * math.log(3.0 + x) ** -2.0
    mid, _ = quad(g, 3_000_000, 1e12, limit=400)
    far_tail = 2.0 / math.log(1e12)  # int_X^inf g <= 1/log(3+X)
    lo = partial + 2.0 * mid
    hi = lo + far_tail
    assert res.status == "finite"
    assert lo * (1 - 2e-3) <= res.value <= hi * (1 + 2e-3)


# -- Luxemburg norm ---------------------------------------------------------------


def test_luxemburg_is_lp_norm_for_powers():
    f = IndicatorFunction(IntervalSet([(0, 4)]))
    assert luxemburg_norm(PowerYoung(2.0), f, LEBESGUE_LINE) == \
        pytest.approx(2.0, rel=1e-7)


def test_luxemburg_indicator_closed_form(standard_phi):
    for m in (0.25, 1.0, 4.0):
        f = IndicatorFunction(IntervalSet([(0.0, m)]))
        got = luxemburg_norm(standard_phi, f, LEBESGUE_LINE)
        want = 1.0 / standard_phi.inverse(1.0 / m)
        assert got == pytest.approx(want, rel=1e-7)


def test_luxemburg_llogl_unit_interval_frozen_oracle():
    # bisection oracle for t log(3+t) = 1 (scipy brentq), frozen
    f = IndicatorFunction(IntervalSet([(0, 1)]))
    got = luxemburg_norm(LLogLYoung(), f, LEBESGUE_LINE)
    assert got == pytest.approx(1.323274916467843, rel=1e-7)


def test_luxemburg_zero_function():
    res = luxemburg_norm_result(PowerYoung(2.0), SimpleFunction([]), LEBESGUE_LINE)
    assert res.value == 0.0 and res.status == "zero"


def test_luxemburg_infinite_norm():
    f = PowerLogDecay(0.5, 0.5)
    res = luxemburg_norm_result(PowerYoung(0.5), f, LEBESGUE_LINE)
    assert res.status == "infinite" and res.value == INF


def test_luxemburg_homogeneity():
    f = SimpleFunction([(IntervalSet([(0, 1)]), 1.2), (IntervalSet([(2, 3)]), 0.4)])
    for phi in (PowerYoung(2.0), LLogLYoung()):
        base = luxemburg_norm(phi, f, LEBESGUE_LINE)
        for c in (0.5, 3.0):
            scaled = luxemburg_norm(phi, f.scaled(c), LEBESGUE_LINE)
            assert scaled == pytest.approx(c * base, rel=1e-7)


def test_unit_modular_characterization():
    f = SimpleFunction([(IntervalSet([(0, 2)]), 1.5), (IntervalSet([(3, 4)]), 0.5)])
    for phi in (PowerYoung(2.0), LLogLYoung(), ExpMinusOneYoung()):
        norm = luxemburg_norm(phi, f, LEBESGUE_LINE)
        assert modular(phi, f, norm, LEBESGUE_LINE) == pytest.approx(1.0, rel=1e-6)


def test_luxemburg_counting_decay():
    f = PowerLogDecay(2.0, 1.0)
    res = luxemburg_norm_result(PowerYoung(2.0), f, COUNTING_INTEGERS)
    assert res.status == "finite"
    assert 1.0 < res.value < 3.0


# -- Lorentz quasi-norm -----------------------------------------------------------


def test_lorentz_indicator_closed_forms():
    f = IndicatorFunction(IntervalSet([(0, 4)]))
    assert lorentz_quasinorm(2.0, 1.0, f, LEBESGUE_LINE) == pytest.approx(2.0, rel=1e-7)
    f9 = IndicatorFunction(IntervalSet([(0, 9)]))
    assert lorentz_quasinorm(2.0, INF, f9, LEBESGUE_LINE) == pytest.approx(3.0, rel=1e-12)
    # q^{-1/q} mu^{1/p} at a generic (p, q)
    assert lorentz_quasinorm(3.0, 2.0, f, LEBESGUE_LINE) == \
        pytest.approx(2.0 ** -0.5 * 4.0 ** (1 / 3), rel=1e-7)


def test_lorentz_qp_equals_scaled_lp_on_simple_corpus():
    # under the dt/t normalization, ||f||_{p,p} = p^{-1/p} ||f||_{L^p} exactly
    # (the q = p case of the indicator constant q^{-1/q})
    for f in simple_corpus(17, 8, LEBESGUE_LINE):
        for p in (1.0, 2.0):
            via_lorentz = lorentz_quasinorm(p, p, f, LEBESGUE_LINE)
            direct = direct_simple_lp_norm(f, p, LEBESGUE_LINE)
            assert via_lorentz == pytest.approx(p ** (-1.0 / p) * direct, rel=1e-6)


def test_lorentz_p1_matches_layer_oracle():
    for f in simple_corpus(23, 6, LEBESGUE_LINE):
        got = lorentz_quasinorm(2.0, 1.0, f, LEBESGUE_LINE)
        want = layer_lorentz_p1(f, 2.0, LEBESGUE_LINE)
        assert got == pytest.approx(want, rel=1e-6)


def test_lorentz_weak_simple_exact():
    f = SimpleFunction([(IntervalSet([(0, 1)]), 3.0), (IntervalSet([(2, 6)]), 1.0)])
    # sup of t mu(|f| >= t)^{1/2} over jump values: max(3*1, 1*sqrt(5))
    want = max(3.0, math.sqrt(5.0))
    assert lorentz_quasinorm(2.0, INF, f, LEBESGUE_LINE) == pytest.approx(want, rel=1e-12)


def test_lorentz_rejects_bad_exponents():
    f = IndicatorFunction(IntervalSet([(0, 1)]))
    with pytest.raises(ArgumentError):
        lorentz_quasinorm(0.0, 1.0, f, LEBESGUE_LINE)
    with pytest.raises(ArgumentError):
        lorentz_quasinorm(2.0, 0.0, f, LEBESGUE_LINE)
    with pytest.raises(ArgumentError):
        lorentz_quasinorm(INF, 1.0, f, LEBESGUE_LINE)


def test_lorentz_ex1_function_finite_p1():
    f = PowerLogDecay(0.5, 0.5)
    res = lorentz_quasinorm_result(0.5, 1.0, f, LEBESGUE_LINE)
    assert res.status == "finite"
    assert 5.0 < res.value < 9.0


# -- layer cake --------------------------------------------------------------------


def test_layer_cake_trivial_example():
    f = SimpleFunction([(IntervalSet([(0, 1)]), 2.0)])
    rep = layer_cake_check(PowerYoung(2.0), f, LEBESGUE_LINE)
    assert rep.lhs == pytest.approx(4.0, rel=1e-12)
    assert rep.relative_gap <= 1e-8


def test_layer_cake_llogl_indicator():
    f = IndicatorFunction(IntervalSet([(0, 3)]))
    rep = layer_cake_check(LLogLYoung(), f, LEBESGUE_LINE)
    assert rep.lhs == pytest.approx(3.0 * math.log(4.0), rel=1e-14)
    assert rep.relative_gap <= 1e-6


def test_layer_cake_exp_two_piece():
    f = SimpleFunction([(IntervalSet([(0, 1)]), 1.5), (IntervalSet([(2, 4)]), 0.25)])
    rep = layer_cake_check(ExpMinusOneYoung(), f, LEBESGUE_LINE)
    want = math.expm1(1.5) + 2.0 * math.expm1(0.25)  # closed-form oracle
    assert rep.lhs == pytest.approx(want, rel=1e-14)
    assert rep.relative_gap <= 1e-6


def test_layer_cake_counting():
    f = SimpleFunction([(IntegerSet([0, 1]), 2.0), (IntegerSet([4]), 1.0)])
    rep = layer_cake_check(PowerYoung(2.0), f, COUNTING_INTEGERS)
    assert rep.lhs == 9.0
    assert rep.relative_gap <= 1e-6


# -- scaling identities --------------------------------------------------------------


def test_scaling_indicator_exact():
    f = IndicatorFunction(IntervalSet([(0, 4)]))
    rep = scaling_identity_check(3.0, 2.0, PowerYoung(4.0), f, LEBESGUE_LINE)
    assert rep.lorentz_gap <= 1e-7
    assert rep.orlicz_gap <= 1e-7


def test_scaling_one_piece_arithmetic():
    f = SimpleFunction([(IntervalSet([(0, 2)]), 3.0)])
    rep = scaling_identity_check(2.0, 2.0, PowerYoung(2.0), f, LEBESGUE_LINE)
    assert rep.lorentz_gap <= 1e-7
    assert rep.orlicz_gap <= 1e-7


def test_scaling_three_piece():
    f = SimpleFunction([(IntervalSet([(0, 1)]), 2.0), (IntervalSet([(1, 3)]), 1.0),
                        (IntervalSet([(4, 5)]), 0.5)])
    rep = scaling_identity_check(3.0, 2.0, PowerYoung(4.0), f, LEBESGUE_LINE)
    assert rep.lorentz_gap <= 1e-6
    assert rep.orlicz_gap <= 1e-6


def test_power_transform_families():
    assert isinstance(power_transform(PowerLogDecay(1.0, 2.0), 2.0), PowerLogDecay)
    g = power_transform(PowerLogDecay(1.0, 2.0), 2.0)
    assert g.p == 0.5 and g.r == 1.0


# -- embedding -----------------------------------------------------------------------


def test_embedding_indicator_examples():
    f = IndicatorFunction(IntervalSet([(0, 4)]))
    assert embedding_ratio(2.0, 1.0, INF, f, LEBESGUE_LINE) == pytest.approx(1.0, rel=1e-7)
    assert embedding_ratio(2.0, 1.0, 2.0, f, LEBESGUE_LINE) == \
        pytest.approx(2.0 ** -0.5, rel=1e-7)


def test_embedding_corpus_bound():
    # over the built-in corpus the ratio never exceeds a recorded constant
    worst = 0.0
    for f in simple_corpus(31, 8, LEBESGUE_LINE):
        worst = max(worst, embedding_ratio(2.0, 1.0, INF, f, LEBESGUE_LINE))
    assert worst <= 1.0 + 1e-6  # q2 = inf against q1 = 1 never amplifies


def test_embedding_argument_checks():
    f = IndicatorFunction(IntervalSet([(0, 4)]))
    with pytest.raises(ArgumentError):
        embedding_ratio(2.0, 2.0, 1.0, f, LEBESGUE_LINE)
    with pytest.raises(ArgumentError):
        embedding_ratio(2.0, 1.0, 2.0, SimpleFunction([]), LEBESGUE_LINE)
