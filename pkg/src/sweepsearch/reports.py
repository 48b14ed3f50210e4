"""Shared recursion coefficients and schedule report types.

Both sweep processes reduce the (shifted) region radius through the same
affine map x_{i+1} = c3*x_i + c1 with c3 > 1, and cycle times scale linearly
with the radius through a constant gamma, so the time recursion shares the
multiplier: T_{i+1} = c3*T_i + c4 with c4 = gamma*c1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .scenario import SweepKind


@dataclass(frozen=True)
class LinearRecursion:
    c3: float  # dimensionless multiplier, > 1 for a moving evader front
    c1: float  # radius offset per cycle (negative: shrinkage)
    gamma: float  # cycle time per unit radius
    c4: float  # time offset per cycle, = gamma * c1

    @property
    def fixed_point(self) -> float:
        """Radius the affine map leaves unchanged; +inf in the static-evader limit."""
        if self.c3 == 1.0:
            return math.inf
        return self.c1 / (1.0 - self.c3)

    def advance(self, x: float) -> float:
        return self.c3 * x + self.c1

    def iterate_until(self, x0: float, target: float, max_iter: int = 10_000_000) -> list[float]:
        """Radii x_0..x_N where N is the first index with x_N <= target.

        Requires a contracting supercritical map (fixed point above x0) or a
        strictly negative offset; guarded against non-terminating inputs.
        """
        xs = [x0]
        while xs[-1] > target:
            nxt = self.advance(xs[-1])
            if nxt >= xs[-1]:
                raise ValueError("radius recursion is not decreasing; subcritical map")
            xs.append(nxt)
            if len(xs) > max_iter:
                raise ValueError("radius recursion failed to reach the target")
        return xs

    def closed_count(self, x0: float, target: float) -> int:
        """Smallest N with x_N <= target from the closed form of the affine orbit."""
        if x0 <= target:
            return 0
        if self.c3 == 1.0:
            # Static-front limit: arithmetic progression x_i = x0 + i*c1.
            return math.ceil((target - x0) / self.c1)
        p = self.fixed_point
        return math.ceil(math.log((target - p) / (x0 - p)) / math.log(self.c3))

    def orbit_value(self, x0: float, i: int) -> float:
        """x_i in closed form."""
        if self.c3 == 1.0:
            return x0 + i * self.c1
        p = self.fixed_point
        return p + self.c3**i * (x0 - p)

    def orbit_sum(self, x0: float, count: int) -> float:
        """Sum of x_0..x_{count-1} in closed form (geometric partial sum)."""
        if count <= 0:
            return 0.0
        if self.c3 == 1.0:
            return count * x0 + self.c1 * count * (count - 1) / 2
        p = self.fixed_point
        return count * p + (x0 - p) * (self.c3**count - 1.0) / (self.c3 - 1.0)


@dataclass(frozen=True)
class CycleTrace:
    index: int
    radius_before: float
    cycle_time: float
    advance_distance: float
    advance_time: float


@dataclass(frozen=True)
class SweepReport:
    """Full schedule of one sweep process run.

    The iterative trace is the source of truth; the closed_* fields carry the
    closed-form totals for cross-checking. The final trace entry's advance is
    the end-game advance of duration final_radius/Vs that sets up the last
    circular sweep of radius r.
    """

    kind: SweepKind
    N: int
    eta: int
    trace: tuple[CycleTrace, ...]
    T_in: float
    T_motion: float
    T_total: float
    final_radius: float
    t_in_last: float
    t_last: float
    t_extra_spiral: float = 0.0
    t_in_final: float = 0.0
    closed_N: int = 0
    closed_T_in: float = math.nan
    closed_T_motion: float = math.nan
    closed_final_radius: float = math.nan
    radius_overshoot: bool = False  # spiral only: last cycle cut below radius r
    recursion: LinearRecursion | None = field(default=None, repr=False)
