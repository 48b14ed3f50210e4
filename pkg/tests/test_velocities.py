import math

import pytest
from hypothesis import given, settings, strategies as st

from sweepsearch import NoBracket, ScenarioParams
from sweepsearch.velocities import (
    _confinement_residual,
    circular_critical_velocity,
    lower_bound_velocity,
    spiral_critical_velocity,
    spiral_no_escape_velocity,
    velocity_report,
)

PAPER = ScenarioParams(R0=100, r=10, VT=1, n=2, Vs=40)

# Frozen from an independent bisection oracle run before the build.
V_SPIRAL_N2 = 16.543007751151748
V_NAIVE_N2 = 15.687368250213419


def grid_params(n):
    return ScenarioParams(R0=100, r=10, VT=1, n=n, Vs=40)


def test_lower_bound_paper_value():
    assert lower_bound_velocity(PAPER) == pytest.approx(5 * math.pi, rel=1e-15)


def test_lower_bound_static_evaders():
    assert lower_bound_velocity(ScenarioParams(R0=100, r=10, VT=0, n=2, Vs=40)) == 0.0


def test_lower_bound_halves_when_swarm_doubles():
    v2 = lower_bound_velocity(grid_params(2))
    v4 = lower_bound_velocity(grid_params(4))
    assert v4 == pytest.approx(v2 / 2, rel=1e-15)


def test_circular_critical_is_exactly_twice_lower_bound():
    for n in range(2, 34, 2):
        p = grid_params(n)
        assert circular_critical_velocity(p) == 2.0 * lower_bound_velocity(p)


def test_circular_critical_paper_value():
    assert circular_critical_velocity(PAPER) == pytest.approx(10 * math.pi, rel=1e-15)
    assert circular_critical_velocity(ScenarioParams(R0=100, r=10, VT=0, n=2, Vs=40)) == 0.0


def test_no_escape_velocity_value():
    assert spiral_no_escape_velocity(PAPER) == pytest.approx(V_NAIVE_N2, rel=1e-12)


def test_no_escape_velocity_can_undershoot_lower_bound():
    # It ignores inward-advance time, so it is a reference quantity only.
    assert spiral_no_escape_velocity(PAPER) < lower_bound_velocity(PAPER)


@given(
    r=st.floats(min_value=0.5, max_value=30),
    ratio=st.floats(min_value=1.2, max_value=50),
    vt=st.floats(min_value=0.01, max_value=10),
    n_half=st.integers(min_value=1, max_value=16),
)
def test_no_escape_velocity_at_least_evader_speed(r, ratio, vt, n_half):
    p = ScenarioParams(R0=r * ratio, r=r, VT=vt, n=2 * n_half, Vs=1)
    assert spiral_no_escape_velocity(p) >= vt


def test_spiral_critical_matches_oracle():
    assert spiral_critical_velocity(PAPER) == pytest.approx(V_SPIRAL_N2, rel=1e-9)


def test_spiral_critical_residual_small():
    for n in range(2, 34, 2):
        p = grid_params(n)
        vs = spiral_critical_velocity(p)
        recoverable = 2 * p.r * vs / (vs + p.VT)
        assert abs(_confinement_residual(vs, p)) <= 1e-10 * recoverable


def test_spiral_critical_exceeds_lower_bound():
    for n in range(2, 34, 2):
        p = grid_params(n)
        assert lower_bound_velocity(p) < spiral_critical_velocity(p) < circular_critical_velocity(p)


def test_spiral_ratio_strictly_decreasing_in_n():
    ratios = []
    for n in range(2, 34, 2):
        p = grid_params(n)
        ratios.append(spiral_critical_velocity(p) / lower_bound_velocity(p))
    assert all(r > 1 for r in ratios)
    assert all(a > b for a, b in zip(ratios, ratios[1:]))


def test_spiral_critical_vanishes_with_evader_speed():
    values = []
    for vt in (1e-2, 1e-4, 1e-6):
        p = ScenarioParams(R0=100, r=10, VT=vt, n=2, Vs=1)
        values.append(spiral_critical_velocity(p))
    assert values[0] > values[1] > values[2]
    assert values[2] < 1e-2


def test_spiral_critical_vt_zero_has_no_bracket():
    with pytest.raises(NoBracket):
        spiral_critical_velocity(ScenarioParams(R0=100, r=10, VT=0, n=2, Vs=40))


def test_spiral_critical_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        spiral_critical_velocity(PAPER, rel_tol=0)


@settings(deadline=None, max_examples=60)
@given(
    r=st.floats(min_value=0.5, max_value=30),
    ratio=st.floats(min_value=1.3, max_value=40),
    vt=st.floats(min_value=0.05, max_value=5),
    n_half=st.integers(min_value=1, max_value=16),
)
def test_spiral_critical_bracketing_property(r, ratio, vt, n_half):
    p = ScenarioParams(R0=r * ratio, r=r, VT=vt, n=2 * n_half, Vs=1)
    vs = spiral_critical_velocity(p)
    assert vs > vt
    recoverable = 2 * p.r * vs / (vs + p.VT)
    assert abs(_confinement_residual(vs, p)) <= 1e-9 * recoverable


def test_velocity_report_fields():
    rep = velocity_report(PAPER)
    assert rep.v_circular == 2.0 * rep.v_lower_bound
    assert rep.ratio_circular == 2.0
    assert rep.v_spiral == pytest.approx(V_SPIRAL_N2, rel=1e-9)
    assert rep.v_lower_bound < rep.v_spiral < rep.v_circular
    assert rep.ratio_spiral == pytest.approx(rep.v_spiral / rep.v_lower_bound, rel=1e-15)
    assert rep.v_spiral > PAPER.VT


def test_velocity_report_requires_moving_evaders():
    with pytest.raises(NoBracket):
        velocity_report(ScenarioParams(R0=100, r=10, VT=0, n=2, Vs=40))
