"""Problem parameters, validation, and initial sweeper placement.

Angles are measured counter-clockwise from the +y axis, so the reference
boundary point (0, R0) sits at angle 0. Pincer pair k is anchored at angle
4*pi*k/n; the even-indexed sweeper of each pair travels counter-clockwise,
the odd-indexed one clockwise, and each owns an angular sector of width
2*pi/n.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import NonPositiveDimension, OddSwarmSize, RegionTooSmall


class SweepKind(enum.Enum):
    CIRCULAR = "circular"
    SPIRAL = "spiral"


@dataclass(frozen=True)
class ScenarioParams:
    """Problem constants: region radius, sensor half-length, speeds, swarm size.

    Each sweeper carries a line sensor of length 2*r; Vs is measured at the
    sensor center. VT is the maximal evader speed.
    """

    R0: float
    r: float
    VT: float
    n: int
    Vs: float

    def with_speed(self, Vs: float) -> "ScenarioParams":
        return ScenarioParams(self.R0, self.r, self.VT, self.n, Vs)


@dataclass(frozen=True)
class SweeperPose:
    sector_index: int
    angle: float
    center_radius: float
    heading: tuple[float, float]
    sensor_span: tuple[float, float]

    @property
    def spin(self) -> int:
        """+1 for counter-clockwise travel, -1 for clockwise."""
        hx, hy = self.heading
        px, py = angle_to_xy(self.angle, 1.0)
        # CCW tangent at angle a is (-cos a, -sin a); compare cross product sign.
        return 1 if (px * hy - py * hx) > 0 else -1


def angle_to_xy(angle: float, radius: float) -> tuple[float, float]:
    """Cartesian point at a given angle (CCW from +y) and radius."""
    return (-radius * math.sin(angle), radius * math.cos(angle))


def validate_params(raw: ScenarioParams) -> ScenarioParams:
    """Check all scenario invariants; return the parameters unchanged if valid."""
    if raw.R0 <= 0 or raw.r <= 0:
        raise NonPositiveDimension(f"R0 and r must be positive, got R0={raw.R0}, r={raw.r}")
    if raw.Vs <= 0:
        raise NonPositiveDimension(f"Vs must be positive, got {raw.Vs}")
    if raw.VT < 0:
        raise NonPositiveDimension(f"VT must be non-negative, got {raw.VT}")
    if raw.n < 2 or raw.n % 2 != 0:
        raise OddSwarmSize(f"n must be an even count >= 2, got {raw.n}")
    if raw.R0 <= raw.r:
        raise RegionTooSmall(f"R0 must exceed r, got R0={raw.R0} <= r={raw.r}")
    return raw


def initial_poses(params: ScenarioParams, kind: SweepKind) -> list[SweeperPose]:
    """Initial back-to-back pair placement for the chosen sweep process.

    Circular sweeps start with half the sensor outside the region
    (span [R0-r, R0+r]); spiral sweeps start fully inside (span [R0-2r, R0]).
    """
    if kind is SweepKind.CIRCULAR:
        center_radius = params.R0
        span = (params.R0 - params.r, params.R0 + params.r)
    else:
        center_radius = params.R0 - params.r
        span = (params.R0 - 2 * params.r, params.R0)

    poses = []
    for k in range(params.n // 2):
        anchor = 4 * math.pi * k / params.n
        for spin in (1, -1):
            heading = _tangent(anchor, spin)
            sector = 2 * k if spin == 1 else (2 * k - 1) % params.n
            poses.append(
                SweeperPose(
                    sector_index=sector,
                    angle=anchor,
                    center_radius=center_radius,
                    heading=heading,
                    sensor_span=span,
                )
            )
    return poses


def _tangent(angle: float, spin: int) -> tuple[float, float]:
    # d/da of (-sin a, cos a) is (-cos a, -sin a); CW is the negation.
    return (-spin * math.cos(angle), -spin * math.sin(angle))
