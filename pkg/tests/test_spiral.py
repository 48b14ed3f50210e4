import math

import numpy as np
import pytest

from sweepsearch import ScenarioParams, SlowerThanEvader, SubcriticalSpeed
from sweepsearch.circular import circ_cycle_time, circ_schedule
from sweepsearch.spiral import (
    SpiralLaw,
    endgame,
    spiral_advance_sum_via_radius_sum,
    spiral_angle,
    spiral_cycle_time,
    spiral_iteration_count,
    spiral_iteration_count_closed,
    spiral_next_radius,
    spiral_recursion,
    spiral_schedule,
)
from sweepsearch.velocities import circular_critical_velocity, spiral_critical_velocity

PAPER = ScenarioParams(R0=100, r=10, VT=1, n=2, Vs=40)

# Frozen from the direct-iteration oracle run before the build.
K_ORACLE = 0.0785643715432023
T0_ORACLE = 7.355968716848739
R1_ORACLE = 87.66435972375487
FIXED_SHIFTED = 244.6992461886258
FINAL_RADIUS_ORACLE = 9.56604886993836
PRE_ENDGAME_ADVANCE_SUM = 1.8082674334369213
T_IN_ORACLE = 2.04741865518538
T_MOTION_ORACLE = 28.090598255084267
T_TOTAL_ORACLE = 30.13801691026965


def test_spiral_law_paper_values():
    law = SpiralLaw.from_params(PAPER)
    assert law.k == pytest.approx(K_ORACLE, rel=1e-12)
    assert math.sin(law.phi) == pytest.approx(PAPER.VT / PAPER.Vs, rel=1e-15)
    assert law.gamma == pytest.approx(math.expm1(law.k) / PAPER.VT, rel=1e-15)


def test_spiral_law_requires_speed_advantage():
    with pytest.raises(SlowerThanEvader):
        SpiralLaw.from_params(ScenarioParams(R0=100, r=10, VT=5, n=2, Vs=5))
    with pytest.raises(SlowerThanEvader):
        spiral_angle(1.0, 100, ScenarioParams(R0=100, r=10, VT=5, n=2, Vs=4))


def test_spiral_angle_endpoints():
    assert spiral_angle(0.0, 100, PAPER) == 0.0
    t_cycle = spiral_cycle_time(100, PAPER)
    assert spiral_angle(t_cycle, 100, PAPER) == pytest.approx(math.pi, rel=1e-12)


def test_spiral_angle_increasing_and_concave():
    ts = np.linspace(0.0, spiral_cycle_time(100, PAPER), 50)
    thetas = np.array([spiral_angle(t, 100, PAPER) for t in ts])
    diffs = np.diff(thetas)
    assert np.all(diffs > 0)
    assert np.all(np.diff(diffs) < 0)


def test_cycle_time_values():
    assert spiral_cycle_time(100, PAPER) == pytest.approx(T0_ORACLE, rel=1e-12)
    assert spiral_cycle_time(PAPER.r, PAPER) == 0.0


def test_spiral_cycle_faster_than_circular_on_paper_grid():
    for n in range(2, 34, 2):
        p = ScenarioParams(R0=100, r=10, VT=1, n=n, Vs=40)
        for radius in (100, 60, 25):
            assert spiral_cycle_time(radius, p) < circ_cycle_time(radius, p)


def test_next_radius_first_cycle():
    nxt, trace = spiral_next_radius(100, PAPER)
    assert nxt == pytest.approx(R1_ORACLE, rel=1e-12)
    delta = 2 * PAPER.r - PAPER.VT * trace.cycle_time
    assert 0 < delta <= 2 * PAPER.r
    assert trace.advance_distance == pytest.approx(
        delta * PAPER.Vs / (PAPER.Vs + PAPER.VT), rel=1e-12
    )


def test_next_radius_subcritical():
    slow = PAPER.with_speed(14.0)  # below the spiral critical velocity 16.54
    with pytest.raises(SubcriticalSpeed):
        spiral_next_radius(100, slow)


def test_recursion_fixed_point():
    rec = spiral_recursion(PAPER)
    assert rec.c3 > 1
    assert rec.fixed_point == pytest.approx(FIXED_SHIFTED, rel=1e-9)
    assert rec.advance(rec.fixed_point) == pytest.approx(rec.fixed_point, rel=1e-12)


def test_iteration_counts():
    assert spiral_iteration_count(PAPER) == 6
    assert spiral_iteration_count_closed(PAPER) == 6
    p = ScenarioParams(R0=20, r=10, VT=1, n=2, Vs=40)
    assert spiral_iteration_count(p) == 0
    assert spiral_iteration_count_closed(p) == 0


def test_counts_match_on_random_supercritical_grid():
    rng = np.random.default_rng(11)
    for _ in range(150):
        r = rng.uniform(0.5, 20)
        p = ScenarioParams(
            R0=r * rng.uniform(1.1, 40),
            r=r,
            VT=rng.uniform(0.01, 4),
            n=2 * int(rng.integers(1, 17)),
            Vs=1.0,
        )
        p = p.with_speed(spiral_critical_velocity(p) * rng.uniform(1.01, 4.0) + 0.1)
        assert spiral_iteration_count(p) == spiral_iteration_count_closed(p)


def test_endgame_paper_case():
    decision = endgame(PAPER, FINAL_RADIUS_ORACLE)
    assert decision.eta == 0
    assert decision.epsilon == pytest.approx((20 - FINAL_RADIUS_ORACLE) / 10, rel=1e-12)
    assert decision.epsilon_c == pytest.approx(
        2 * PAPER.VT * (math.pi + 2) / (2 * (PAPER.Vs + PAPER.VT)), rel=1e-12
    )
    assert decision.T_last == pytest.approx(math.pi / 4, rel=1e-15)


def test_endgame_threshold_equivalence():
    rng = np.random.default_rng(3)
    for _ in range(500):
        r = rng.uniform(0.5, 20)
        vt = rng.uniform(0.01, 5)
        vs = vt + rng.uniform(0.05, 80)
        n = 2 * int(rng.integers(1, 17))
        radius = rng.uniform(1e-6, 2 * r * 0.999)
        p = ScenarioParams(R0=3 * r, r=r, VT=vt, n=n, Vs=vs)
        d = endgame(p, radius)
        needed = (2 * math.pi * r * vt + n * vt * radius) / (n * (2 * r - radius))
        if abs(vs - needed) > 1e-9 * needed:
            assert (d.eta == 0) == (vs >= needed)
        assert (d.eta == 0) == (d.epsilon >= d.epsilon_c or math.isclose(vs, needed, rel_tol=1e-9))


def test_endgame_tie_and_static_cases():
    assert endgame(PAPER, 2 * PAPER.r).eta == 1
    static = ScenarioParams(R0=100, r=10, VT=0, n=2, Vs=40)
    assert endgame(static, 2 * static.r).eta == 0
    assert endgame(static, 5.0).eta == 0
    with pytest.raises(ValueError):
        endgame(PAPER, 0.0)
    with pytest.raises(ValueError):
        endgame(PAPER, 2 * PAPER.r + 1e-9)


def test_schedule_paper_run():
    rep = spiral_schedule(PAPER)
    assert rep.N == 6 and rep.eta == 0
    assert rep.final_radius == pytest.approx(FINAL_RADIUS_ORACLE, rel=1e-9)
    assert rep.radius_overshoot  # the last cycle cuts below r
    assert rep.T_in == pytest.approx(T_IN_ORACLE, rel=1e-9)
    assert rep.T_motion == pytest.approx(T_MOTION_ORACLE, rel=1e-9)
    assert rep.T_total == pytest.approx(T_TOTAL_ORACLE, rel=1e-9)
    assert rep.T_total == pytest.approx(rep.T_in + rep.T_motion, rel=1e-15)


def test_schedule_trace_invariants():
    rep = spiral_schedule(PAPER)
    rec = spiral_recursion(PAPER)
    for e in rep.trace:
        shifted = e.radius_before - PAPER.r
        assert e.cycle_time == pytest.approx(rec.gamma * shifted, rel=1e-12)
        delta = 2 * PAPER.r - PAPER.VT * e.cycle_time
        assert 0 < delta <= 2 * PAPER.r
    radii = [e.radius_before for e in rep.trace]
    assert all(a > b for a, b in zip(radii, radii[1:]))


def test_schedule_closed_forms_match_trace():
    rep = spiral_schedule(PAPER)
    assert rep.closed_N == rep.N
    assert rep.closed_T_in == pytest.approx(rep.T_in, rel=1e-9)
    assert rep.closed_T_motion == pytest.approx(rep.T_motion, rel=1e-9)
    assert rep.closed_final_radius == pytest.approx(rep.final_radius, rel=1e-9)


def test_advance_sum_identity_via_radius_sum():
    rep = spiral_schedule(PAPER)
    direct = sum(e.advance_time for e in rep.trace[:-1])
    assert direct == pytest.approx(PRE_ENDGAME_ADVANCE_SUM, rel=1e-9)
    assert spiral_advance_sum_via_radius_sum(PAPER, rep.N) == pytest.approx(direct, rel=1e-9)


def test_extra_cycle_branch():
    p = ScenarioParams(R0=100, r=10, VT=1, n=2, Vs=1.0)
    p = p.with_speed(spiral_critical_velocity(p) * 1.1)
    rep = spiral_schedule(p)
    assert rep.eta == 1
    assert rep.N == 11
    assert rep.final_radius == pytest.approx(18.379287954228, rel=1e-9)
    assert rep.t_extra_spiral > 0 and rep.t_in_final > 0
    assert rep.closed_T_in == pytest.approx(rep.T_in, rel=1e-9)
    assert rep.closed_T_motion == pytest.approx(rep.T_motion, rel=1e-9)


def test_schedule_pure_endgame():
    p = ScenarioParams(R0=20, r=10, VT=1, n=2, Vs=40)
    rep = spiral_schedule(p)
    assert rep.N == 0 and rep.trace == ()
    assert rep.final_radius == 20


def test_spiral_beats_circular():
    for n in (2, 4, 8, 16, 32):
        probe = ScenarioParams(R0=100, r=10, VT=1, n=n, Vs=1)
        vs = circular_critical_velocity(probe) + 5.0
        p = probe.with_speed(vs)
        rep_s = spiral_schedule(p)
        rep_c = circ_schedule(p)
        assert rep_s.T_total < rep_c.T_total
        assert rep_s.N <= rep_c.N


def test_static_evader_schedule():
    p = ScenarioParams(R0=100, r=10, VT=0, n=2, Vs=40)
    rep = spiral_schedule(p)
    assert rep.eta == 0
    assert rep.closed_T_in == pytest.approx(rep.T_in, rel=1e-12)
    assert rep.closed_T_motion == pytest.approx(rep.T_motion, rel=1e-12)
