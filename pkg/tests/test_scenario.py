import math

import pytest
from hypothesis import given, strategies as st

from sweepsearch import (
    NonPositiveDimension,
    OddSwarmSize,
    RegionTooSmall,
    ScenarioParams,
    SweepKind,
    initial_poses,
    validate_params,
)

PAPER = ScenarioParams(R0=100, r=10, VT=1, n=2, Vs=40)


def test_paper_parameters_accepted():
    assert validate_params(PAPER) == PAPER


def test_odd_swarm_rejected():
    with pytest.raises(OddSwarmSize):
        validate_params(ScenarioParams(R0=100, r=10, VT=1, n=3, Vs=40))
    with pytest.raises(OddSwarmSize):
        validate_params(ScenarioParams(R0=100, r=10, VT=1, n=0, Vs=40))


def test_region_too_small():
    with pytest.raises(RegionTooSmall):
        validate_params(ScenarioParams(R0=5, r=10, VT=1, n=2, Vs=40))
    with pytest.raises(RegionTooSmall):
        validate_params(ScenarioParams(R0=10, r=10, VT=1, n=2, Vs=40))


@pytest.mark.parametrize(
    "bad",
    [
        ScenarioParams(R0=-1, r=10, VT=1, n=2, Vs=40),
        ScenarioParams(R0=100, r=0, VT=1, n=2, Vs=40),
        ScenarioParams(R0=100, r=10, VT=-0.5, n=2, Vs=40),
        ScenarioParams(R0=100, r=10, VT=1, n=2, Vs=0),
    ],
)
def test_nonpositive_dimensions(bad):
    with pytest.raises(NonPositiveDimension):
        validate_params(bad)


def test_circular_initial_poses_two_agents():
    poses = initial_poses(PAPER, SweepKind.CIRCULAR)
    assert len(poses) == 2
    for pose in poses:
        assert pose.angle == 0.0  # anchored at the reference point (0, R0)
        assert pose.center_radius == 100
        assert pose.sensor_span == (90, 110)
    assert poses[0].spin == 1 and poses[1].spin == -1


def test_spiral_initial_poses_two_agents():
    poses = initial_poses(PAPER, SweepKind.SPIRAL)
    assert all(p.sensor_span == (80, 100) for p in poses)
    assert all(p.center_radius == 90 for p in poses)


def test_pair_headings_opposite():
    for kind in SweepKind:
        poses = initial_poses(PAPER, kind)
        hx0, hy0 = poses[0].heading
        hx1, hy1 = poses[1].heading
        assert math.isclose(hx0, -hx1) and math.isclose(hy0, -hy1)
        assert math.isclose(math.hypot(hx0, hy0), 1.0)


def test_four_agents_partition():
    params = ScenarioParams(R0=100, r=10, VT=1, n=4, Vs=40)
    for kind in SweepKind:
        poses = initial_poses(params, kind)
        assert len(poses) == 4
        anchors = sorted({p.angle for p in poses})
        assert anchors == pytest.approx([0.0, math.pi])
        # sector ownership covers every index once: the widths tile 2*pi
        assert sorted(p.sector_index for p in poses) == [0, 1, 2, 3]
        spins = [p.spin for p in poses]
        assert spins == [1, -1, 1, -1]


@given(
    n_half=st.integers(min_value=1, max_value=16),
    r=st.floats(min_value=0.5, max_value=50),
    ratio=st.floats(min_value=1.1, max_value=40),
)
def test_poses_tile_circle(n_half, r, ratio):
    params = validate_params(ScenarioParams(R0=r * ratio, r=r, VT=1, n=2 * n_half, Vs=10))
    for kind in SweepKind:
        poses = initial_poses(params, kind)
        assert len(poses) == params.n
        assert sorted(p.sector_index for p in poses) == list(range(params.n))
        for p in poses:
            lo, hi = p.sensor_span
            assert hi - lo == pytest.approx(2 * params.r, rel=1e-12)
        # total angular coverage is n sectors of width 2*pi/n
        assert params.n * (2 * math.pi / params.n) == pytest.approx(2 * math.pi)
