"""Sets, measures, function families, and distribution functions."""

import math

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from orlicz_kit.errors import ArgumentError, DomainError
from orlicz_kit.measure import (
    COUNTING_INTEGERS,
    LEBESGUE_LINE,
    IndicatorFunction,
    IntegerSet,
    IntervalSet,
    MeasureSpace,
    PowerLogDecay,
    RadialPower,
    SimpleFunction,
    counting_finite,
    distribution,
    measure_of,
    set_intersect,
    set_normalize,
    set_union,
)

INF = math.inf


# -- sets and measures ---------------------------------------------------------


def test_measure_examples():
    assert measure_of(LEBESGUE_LINE, IntervalSet([(0, 2), (3, 4)])) == 3.0
    assert measure_of(COUNTING_INTEGERS, IntegerSet([1, 5, 7])) == 3.0
    assert measure_of(LEBESGUE_LINE, IntervalSet()) == 0.0


def test_set_op_examples():
    assert set_union(IntervalSet([(0, 2)]), IntervalSet([(1, 3)])) == \
        IntervalSet([(0, 3)])
    assert set_intersect(IntervalSet([(0, 1)]), IntervalSet([(1, 2)])).is_empty
    assert set_union(IntegerSet([1, 2]), IntegerSet([2, 3])) == IntegerSet([1, 2, 3])


def test_adjacent_intervals_merge():
    s = IntervalSet([(0, 1), (1, 2)])
    assert s.intervals == ((0.0, 2.0),)


def test_kind_mismatch_errors():
    with pytest.raises(ArgumentError):
        set_union(IntervalSet([(0, 1)]), IntegerSet([1]))
    with pytest.raises(ArgumentError):
        measure_of(LEBESGUE_LINE, IntegerSet([1]))
    with pytest.raises(ArgumentError):
        measure_of(counting_finite(5), IntegerSet([6]))


def test_negative_interval_rejected():
    with pytest.raises(ArgumentError):
        IntervalSet([(2, 1)])


def test_space_validation():
    with pytest.raises(ArgumentError):
        MeasureSpace("weighted")
    with pytest.raises(ArgumentError):
        counting_finite(0)


def test_integer_runs():
    assert IntegerSet([1, 2, 3, 7, 9, 10]).runs() == [(1, 4), (7, 8), (9, 11)]
    assert IntegerSet.block(3, 6) == IntegerSet([3, 4, 5])


_small_intervals = st.lists(
    st.tuples(st.integers(-20, 19), st.integers(1, 6)).map(
        lambda ab: (float(ab[0]), float(ab[0] + ab[1]))),
    min_size=0, max_size=6).map(IntervalSet)


@given(a=_small_intervals, b=_small_intervals)
@hyp_settings(max_examples=200, deadline=None)
def test_interval_lattice_and_inclusion_exclusion(a, b):
    u = set_union(a, b)
    i = set_intersect(a, b)
    # idempotence, commutativity, absorption
    assert set_union(a, a) == a
    assert set_intersect(a, a) == a
    assert set_union(b, a) == u
    assert set_intersect(b, a) == i
    assert set_union(a, set_intersect(a, b)) == a
    assert set_intersect(a, set_union(a, b)) == a
    # integer endpoints: measures are exact, inclusion-exclusion is equality
    assert u.measure() + i.measure() == a.measure() + b.measure()


_small_int_sets = st.lists(st.integers(-25, 25), min_size=0, max_size=12).map(IntegerSet)


@given(a=_small_int_sets, b=_small_int_sets)
@hyp_settings(max_examples=200, deadline=None)
def test_integer_lattice_and_inclusion_exclusion(a, b):
    u = set_union(a, b)
    i = set_intersect(a, b)
    assert set_union(a, set_intersect(a, b)) == a
    assert set_intersect(a, set_union(a, b)) == a
    assert u.measure() + i.measure() == a.measure() + b.measure()


def test_set_normalize_idempotent():
    s = IntervalSet([(0, 1), (2, 3)])
    assert set_normalize(s) == s


# -- function families ----------------------------------------------------------


def test_indicator_distribution():
    f = IndicatorFunction(IntervalSet([(0, 2)]))
    assert distribution(LEBESGUE_LINE, f, 0.5) == 2.0
    assert distribution(LEBESGUE_LINE, f, 1.0) == 0.0


def test_simple_distribution():
    f = SimpleFunction([(IntervalSet([(0, 1)]), 3.0), (IntervalSet([(1, 2)]), 1.0)])
    assert distribution(LEBESGUE_LINE, f, 2.0) == 1.0
    assert distribution(LEBESGUE_LINE, f, 0.5) == 2.0
    assert distribution(LEBESGUE_LINE, f, 3.0) == 0.0


def test_simple_requires_disjoint_supports():
    with pytest.raises(ArgumentError):
        SimpleFunction([(IntervalSet([(0, 2)]), 1.0), (IntervalSet([(1, 3)]), 2.0)])


def test_power_log_decay_distribution_against_grid_count():
    f = PowerLogDecay(1.0, 1.0)
    t = f(10.0)
    # |f| symmetric strictly decreasing: superlevel set = (-10, 10)
    assert distribution(LEBESGUE_LINE, f, t) == pytest.approx(20.0, rel=1e-10)
    # counting oracle on a fine grid
    import numpy as np

    xs = np.linspace(-15.0, 15.0, 300_001)
    count = np.count_nonzero(np.abs([f(x) for x in xs]) > t)
    assert count * (xs[1] - xs[0]) == pytest.approx(20.0, abs=0.01)


def test_power_log_decay_integer_distribution():
    f = PowerLogDecay(2.0, 1.0)
    t = f(7)
    # integers with |f(n)| > t are -6..6 (strictly decreasing in |n|)
    assert distribution(COUNTING_INTEGERS, f, t) == 13.0
    assert distribution(COUNTING_INTEGERS, f, f(0)) == 0.0


def test_distribution_nonincreasing():
    fams = [
        IndicatorFunction(IntervalSet([(0, 3)])),
        SimpleFunction([(IntervalSet([(0, 1)]), 2.0), (IntervalSet([(2, 5)]), 0.7)]),
        PowerLogDecay(1.0, 2.0),
        RadialPower(0.3, 1.0),
    ]
    ts = [0.01, 0.1, 0.5, 1.0, 2.0, 10.0]
    for f in fams:
        vals = [distribution(LEBESGUE_LINE, f, t) for t in ts]
        assert all(a >= b for a, b in zip(vals, vals[1:]))


def test_distribution_negative_threshold():
    with pytest.raises(DomainError):
        distribution(LEBESGUE_LINE, IndicatorFunction(IntervalSet([(0, 1)])), -0.5)


def test_radial_power_closed_forms():
    f = RadialPower(0.25, 1.0)
    assert f(0.5) == 0.5 ** -0.25
    assert f(2.0) == 0.0
    assert distribution(LEBESGUE_LINE, f, 0.0) == 2.0
    # {|x|^-g > t} = {|x| < t^(-1/g)} clipped at the unit ball
    assert distribution(LEBESGUE_LINE, f, 16.0) == pytest.approx(2.0 * 16.0 ** -4.0)
    assert f.essential_sup_on_ball(2.0 ** -8) == (2.0 ** -8) ** -0.25


def test_simple_powered_and_scaled():
    f = SimpleFunction([(IntervalSet([(0, 2)]), -3.0)])
    assert f.powered(2.0)(1.0) == 9.0
    assert f.scaled(0.5)(1.0) == -1.5


def test_superlevel_sets_match_distribution():
    f = SimpleFunction([(IntervalSet([(0, 1)]), 2.0), (IntervalSet([(3, 5)]), 4.0)])
    for t in (0.5, 2.0, 3.0, 4.0):
        level = f.superlevel_set(LEBESGUE_LINE, t)
        assert measure_of(LEBESGUE_LINE, level) == distribution(LEBESGUE_LINE, f, t)
