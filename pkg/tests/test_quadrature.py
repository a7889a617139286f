"""Quadrature engine: finite intervals, half-line ladders, divergence handling."""

import math

import pytest
from scipy.integrate import quad

from orlicz_kit.quadrature import (
    IntegralResult,
    QuadratureSettings,
    integrate_halfline,
    integrate_interval,
)
from orlicz_kit.errors import ArgumentError

INF = math.inf


def test_interval_against_scipy():
    for fn, a, b in [
        (lambda x: x * x, 0.0, 3.0),
        (lambda x: math.exp(-x), 0.0, 10.0),
        (lambda x: 1.0 / (1.0 + x * x), 0.0, 50.0),
    ]:
        ours, _ = integrate_interval(fn, a, b, rel_tol=1e-11)
        ref, _ = quad(fn, a, b, limit=200)
        assert ours == pytest.approx(ref, rel=1e-9)


def test_interval_with_breakpoint_kink():
    fn = lambda x: 1.0 if x < 1.0 else 0.25
    ours, _ = integrate_interval(fn, 0.0, 2.0, rel_tol=1e-12, breakpoints=[1.0])
    assert ours == pytest.approx(1.25, rel=1e-10)


def test_halfline_exponential():
    res = integrate_halfline(lambda t: math.exp(-t))
    assert res.status == "finite"
    assert res.value == pytest.approx(1.0, rel=1e-8)


def test_halfline_with_jump_breakpoint():
    # integrand of the indicator layer cake: 2t on (0, 1), zero beyond
    res = integrate_halfline(lambda t: 2.0 * t if t < 1.0 else 0.0,
                             breakpoints=[1.0], zero_beyond=1.0)
    assert res.value == pytest.approx(1.0, rel=1e-8)


def test_halfline_power_tail():
    # integral of t^(-1/2) e^(-t): Gamma(1/2) = sqrt(pi)
    res = integrate_halfline(lambda t: math.exp(-t) / math.sqrt(t))
    assert res.status == "finite"
    assert res.value == pytest.approx(math.sqrt(math.pi), rel=1e-7)


def test_halfline_log_divergence_certified():
    # 1/(t (1 + log(1+t)^2)) fails at the origin like 1/t: increments per
    # decade are asymptotically constant, hence certified non-summable
    res = integrate_halfline(lambda t: 1.0 / t if t < 1.0 else 0.0,
                             zero_beyond=1.0)
    assert res.status == "infinite"


def test_halfline_fast_divergence_crosses_floor():
    res = integrate_halfline(lambda t: t ** -1.5 if t < 1.0 else 0.0,
                             zero_beyond=1.0)
    assert res.status == "infinite"


def test_halfline_infinite_sample():
    res = integrate_halfline(lambda t: INF if t < 0.5 else 0.0, zero_beyond=1.0)
    assert res.status == "infinite"


def test_settings_validation():
    with pytest.raises(ArgumentError):
        QuadratureSettings(relative_tolerance=0.0)
    with pytest.raises(ArgumentError):
        QuadratureSettings(transform="unknown")
    with pytest.raises(ArgumentError):
        QuadratureSettings(transform="truncated")  # needs t_max


def test_truncated_transform():
    settings = QuadratureSettings(transform="truncated", t_max=1.0)
    res = integrate_halfline(lambda t: 2.0 * t, settings)
    assert res.value == pytest.approx(1.0, rel=1e-6)


def test_deep_upper_tail_reciprocal_zone():
    # support far beyond the u = t/(1+t) resolution switch; without registered
    # breakpoints the budget goes coarse, but the ladder still lands close
    res = integrate_halfline(lambda t: 1e-12 * math.exp(-t / 1e12))
    assert res.status == "finite"
    assert res.value == pytest.approx(1.0, rel=0.1)


def test_result_to_dict_roundtrip():
    res = integrate_halfline(lambda t: math.exp(-t))
    d = res.to_dict()
    assert set(d) == {"value", "status", "error_estimate", "truncation",
                      "subdivisions", "notes"}
