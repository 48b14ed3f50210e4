"""Circular sweep process: radius recursion, cycle counts, and time totals.

Each cycle is one angular traversal of 2*pi/n at constant radius followed by
an inward advance. The sensor straddles the region boundary (half in, half
out), so the recoverable slack per cycle is r minus the region's spread
during the sweep. The iterative trace is the source of truth; closed-form
totals are carried alongside for cross-checking.
"""
from __future__ import annotations

import math

from .errors import SubcriticalSpeed
from .reports import CycleTrace, LinearRecursion, SweepReport
from .scenario import ScenarioParams, SweepKind


def circ_recursion(params: ScenarioParams) -> LinearRecursion:
    """Affine radius recursion coefficients and the radius-to-time scale."""
    n, r, vs, vt = params.n, params.r, params.Vs, params.VT
    gamma = 2 * math.pi / (n * vs)
    c3 = 1 + 2 * math.pi * vt / (n * (vs + vt))
    c1 = -r * vs / (vs + vt)
    return LinearRecursion(c3=c3, c1=c1, gamma=gamma, c4=gamma * c1)


def circ_cycle_time(radius: float, params: ScenarioParams) -> float:
    """Time to sweep an angle of 2*pi/n along a circle of the given radius."""
    return 2 * math.pi * radius / (params.n * params.Vs)


def circ_next_radius(radius: float, params: ScenarioParams) -> tuple[float, CycleTrace]:
    """One cycle: sweep at the current radius, then advance into the region.

    The advance is scaled by Vs/(Vs+VT) because the region keeps expanding
    while the sweeper re-enters. Raises SubcriticalSpeed when the spread over
    one sweep consumes the whole outboard sensor half (delta <= 0).
    """
    vs, vt, r = params.Vs, params.VT, params.r
    cycle_time = circ_cycle_time(radius, params)
    delta = r - vt * cycle_time
    if delta <= 0:
        raise SubcriticalSpeed(
            f"no inward progress at radius {radius}: Vs={vs} is at or below "
            f"the circular critical velocity for these parameters"
        )
    delta_eff = delta * vs / (vs + vt)
    advance_time = delta_eff / vs
    nxt = radius - delta_eff
    return nxt, CycleTrace(
        index=-1,
        radius_before=radius,
        cycle_time=cycle_time,
        advance_distance=delta_eff,
        advance_time=advance_time,
    )


def _iterate_radii(params: ScenarioParams) -> list[float]:
    """Radii R_0..R_N, stopping at the first value <= r."""
    radii = [params.R0]
    while radii[-1] > params.r:
        nxt, _ = circ_next_radius(radii[-1], params)
        radii.append(nxt)
    return radii


def circ_iteration_count(params: ScenarioParams) -> int:
    """Cycles needed to bound the region by a circle of radius <= r (by iteration)."""
    return len(_iterate_radii(params)) - 1


def circ_iteration_count_closed(params: ScenarioParams) -> int:
    """Same count from the closed form of the affine radius orbit."""
    if params.R0 > params.r:
        # Reject subcritical speeds like the iterative route does.
        circ_next_radius(params.R0, params)
    return circ_recursion(params).closed_count(params.R0, params.r)


def circ_advance_total_closed(params: ScenarioParams, count: int, rec: LinearRecursion) -> float:
    """Closed-form total inward-advance time, end-game advance included."""
    n, r, vs, vt, r0 = params.n, params.r, params.Vs, params.VT, params.R0
    if count == 0:
        return r0 / vs
    a = 2 * math.pi * r0 * vt - n * r * vs
    return r0 / vs + a / (n * vs * (vs + vt)) * rec.c3 ** (count - 1)


def circ_motion_total_closed(params: ScenarioParams, count: int, rec: LinearRecursion) -> float:
    """Closed-form total circular-sweep time, final radius-r sweep included."""
    n, r, vs, vt, r0 = params.n, params.r, params.Vs, params.VT, params.R0
    t_last = 2 * math.pi * r / (n * vs)
    if vt == 0:
        # Static front: the geometric expansion collapses to an arithmetic sum.
        return rec.gamma * rec.orbit_sum(r0, count) + t_last
    a = 2 * math.pi * r0 * vt - n * r * vs
    return (
        -r0 * (vs + vt) / (vt * vs)
        + (n * r * (vs + vt) + 2 * math.pi * r * vt) / (2 * math.pi * vt**2)
        + rec.c3**count * ((vs + vt) * a / (2 * math.pi * vs * vt**2))
        + r * (count - 1) / vt
        + t_last
    )


def circ_schedule(params: ScenarioParams) -> SweepReport:
    """Full circular schedule: N sweep+advance cycles, end-game advance, last sweep.

    The final trace entry's advance is the end-game advance of duration R_N/Vs
    that places the lower sensor tips at the region center; the regular
    advances stop one cycle earlier so the sweeper paths never cross.
    """
    rec = circ_recursion(params)
    radii = _iterate_radii(params)
    count = len(radii) - 1
    final_radius = radii[-1]

    t_in_last = final_radius / params.Vs
    t_last = 2 * math.pi * params.r / (params.n * params.Vs)

    trace = []
    for i in range(count):
        _, entry = circ_next_radius(radii[i], params)
        if i == count - 1:
            entry = CycleTrace(
                index=i,
                radius_before=entry.radius_before,
                cycle_time=entry.cycle_time,
                advance_distance=final_radius,
                advance_time=t_in_last,
            )
        else:
            entry = CycleTrace(
                index=i,
                radius_before=entry.radius_before,
                cycle_time=entry.cycle_time,
                advance_distance=entry.advance_distance,
                advance_time=entry.advance_time,
            )
        trace.append(entry)

    t_in = sum(e.advance_time for e in trace) if count else t_in_last
    t_motion = sum(e.cycle_time for e in trace) + t_last
    closed_t_in = circ_advance_total_closed(params, count, rec)
    closed_t_motion = circ_motion_total_closed(params, count, rec)

    return SweepReport(
        kind=SweepKind.CIRCULAR,
        N=count,
        eta=0,
        trace=tuple(trace),
        T_in=t_in,
        T_motion=t_motion,
        T_total=t_in + t_motion,
        final_radius=final_radius,
        t_in_last=t_in_last,
        t_last=t_last,
        closed_N=rec.closed_count(params.R0, params.r),
        closed_T_in=closed_t_in,
        closed_T_motion=closed_t_motion,
        closed_final_radius=rec.orbit_value(params.R0, count),
        recursion=rec,
    )
