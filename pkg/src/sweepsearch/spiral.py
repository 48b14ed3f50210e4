"""Spiral sweep process: trajectory law, shifted-radius recursion, end-game.

The sweeper keeps its sensor's outer tip on the expanding region boundary by
travelling at a fixed angle to the boundary normal, so the sensor center
radius grows at exactly VT while the angle advances logarithmically in time.
The recursion acts on the shifted radius x = R - r; cycles stop once the
region radius drops to 2r, after which an end-game finishes the cleaning
with at most one extra spiral cycle and one circular sweep of radius r.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import SlowerThanEvader, SubcriticalSpeed
from .reports import CycleTrace, LinearRecursion, SweepReport
from .scenario import ScenarioParams, SweepKind


@dataclass(frozen=True)
class SpiralLaw:
    """Per-cycle constants of the spiral trajectory.

    k is the exponential growth factor of the shifted radius over one angular
    sector, phi the travel angle to the boundary normal, gamma the cycle time
    per unit of shifted radius.
    """

    k: float
    phi: float
    gamma: float

    @classmethod
    def from_params(cls, params: ScenarioParams) -> "SpiralLaw":
        vs, vt, n = params.Vs, params.VT, params.n
        if vs <= vt:
            raise SlowerThanEvader(f"spiral trajectory undefined for Vs={vs} <= VT={vt}")
        if vt == 0:
            return cls(k=0.0, phi=0.0, gamma=2 * math.pi / (n * vs))
        k = 2 * math.pi * vt / (n * math.sqrt(vs * vs - vt * vt))
        return cls(k=k, phi=math.asin(vt / vs), gamma=math.expm1(k) / vt)


def spiral_angle(t: float, radius: float, params: ScenarioParams) -> float:
    """Angle swept after time t of a spiral cycle starting at region radius R_i.

    Strictly increasing and concave in t; reaches 2*pi/n at the cycle time.
    """
    vs, vt = params.Vs, params.VT
    if vs <= vt:
        raise SlowerThanEvader(f"spiral trajectory undefined for Vs={vs} <= VT={vt}")
    shifted = radius - params.r
    if shifted <= 0:
        raise ValueError("spiral cycle requires region radius above r")
    if vt == 0:
        return vs * t / shifted
    return math.sqrt(vs * vs - vt * vt) / vt * math.log1p(vt * t / shifted)


def spiral_cycle_time(radius: float, params: ScenarioParams) -> float:
    """Time for one sweeper to spiral through its angular sector of 2*pi/n."""
    law = SpiralLaw.from_params(params)
    return law.gamma * (radius - params.r)


def spiral_recursion(params: ScenarioParams) -> LinearRecursion:
    """Affine recursion for the shifted radius x = R - r, and the time scale."""
    vs, vt, r = params.Vs, params.VT, params.r
    law = SpiralLaw.from_params(params)
    ek = math.exp(law.k)
    c3 = (vt + vs * ek) / (vs + vt)
    c1 = -2 * r * vs / (vs + vt)
    return LinearRecursion(c3=c3, c1=c1, gamma=law.gamma, c4=law.gamma * c1)


def spiral_next_radius(radius: float, params: ScenarioParams) -> tuple[float, CycleTrace]:
    """One spiral cycle plus inward advance, acting on the full region radius.

    The recoverable slack is 2r minus the boundary growth over the cycle;
    raises SubcriticalSpeed when the region outruns the sensor (delta <= 0).
    """
    vs, vt, r = params.Vs, params.VT, params.r
    cycle_time = spiral_cycle_time(radius, params)
    delta = 2 * r - vt * cycle_time
    if delta <= 0:
        raise SubcriticalSpeed(
            f"no inward progress at radius {radius}: Vs={vs} is at or below "
            f"the spiral critical velocity for these parameters"
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
    """Region radii R_0..R_N, stopping at the first value <= 2r."""
    radii = [params.R0]
    while radii[-1] > 2 * params.r:
        nxt, _ = spiral_next_radius(radii[-1], params)
        radii.append(nxt)
    return radii


def spiral_iteration_count(params: ScenarioParams) -> int:
    """Spiral cycles needed to reduce the region to radius <= 2r (by iteration)."""
    return len(_iterate_radii(params)) - 1


def spiral_iteration_count_closed(params: ScenarioParams) -> int:
    """Same count from the closed form of the shifted-radius orbit."""
    if params.R0 > 2 * params.r:
        spiral_next_radius(params.R0, params)
    return spiral_recursion(params).closed_count(params.R0 - params.r, params.r)


@dataclass(frozen=True)
class EndgameDecision:
    """Choice between finishing directly and inserting one extra spiral cycle.

    eta = 0 when the speed suffices to run the final circular sweep right
    after the end-game advance; eta = 1 otherwise (always the case when the
    final spiral-phase radius reaches 2r exactly, where the required speed
    diverges).
    """

    R_N: float
    epsilon: float
    epsilon_c: float
    eta: int
    T_last: float
    T_l: float
    T_in_f: float


def endgame(params: ScenarioParams, final_radius: float) -> EndgameDecision:
    """End-game branch for a spiral run that stopped at the given radius <= 2r."""
    vs, vt, r, n = params.Vs, params.VT, params.r, params.n
    if not 0 < final_radius <= 2 * r:
        raise ValueError(f"end-game radius must lie in (0, 2r], got {final_radius}")
    law = SpiralLaw.from_params(params)
    t_last = 2 * math.pi * r / (n * vs)
    t_l = law.gamma * r
    t_in_f = t_l * vt / vs
    epsilon = (2 * r - final_radius) / r
    epsilon_c = 2 * vt * (math.pi + n) / (n * (vs + vt))
    # Division-free form of the speed condition: the spread over the end-game
    # advance plus the last sweep must fit in the remaining sensor slack. At
    # the tie final_radius = 2r it is unsatisfiable for any finite speed
    # unless VT = 0, where it holds with equality.
    spread = vt * (t_last + final_radius / vs)
    eta = 0 if spread <= 2 * r - final_radius else 1
    return EndgameDecision(
        R_N=final_radius,
        epsilon=epsilon,
        epsilon_c=epsilon_c,
        eta=eta,
        T_last=t_last,
        T_l=t_l,
        T_in_f=t_in_f,
    )


def spiral_advance_pre_endgame_closed(
    params: ScenarioParams, count: int, rec: LinearRecursion
) -> float:
    """Closed-form sum of the regular inward-advance times (cycles 0..N-2).

    Matches the appendix derivation once the orbit power is written with the
    dimensionless multiplier; the printed expression drops one (Vs+VT) factor
    from the denominator of the power term.
    """
    vs, vt, r, r0 = params.Vs, params.VT, params.r, params.R0
    if count <= 1:
        return 0.0
    if vt == 0:
        return (count - 1) * 2 * r / vs
    ek = math.exp(SpiralLaw.from_params(params).k)
    b = r0 * (1 - ek) + r * (1 + ek)
    return (
        2 * r / (vs + vt)
        + (r0 - r) / vs
        + 2 * r * (vt + vs * ek) / (vs * (vs + vt) * (1 - ek))
        - rec.c3 ** (count - 1) * b / (vs * (1 - ek))
    )


def spiral_advance_sum_via_radius_sum(params: ScenarioParams, count: int) -> float:
    """Regular advance-time sum through the partial radius-sum identity.

    Independent composition path used to validate the direct closed form: the
    advance times are an affine image of the shifted radii, so their sum
    follows from the geometric partial sum of the orbit, assembled here with
    the same internal constant the derivation introduces for the orbit power.
    """
    vs, vt, r = params.Vs, params.VT, params.r
    rec = spiral_recursion(params)
    if count <= 1:
        return 0.0
    law = SpiralLaw.from_params(params)
    if vt == 0:
        return (count - 1) * 2 * r / vs
    ek = math.exp(law.k)
    r0s = params.R0 - params.r
    b = params.R0 * (1 - ek) + r * (1 + ek)
    c5 = (vs + vt) / (vs * (1 - ek)) * rec.c3 ** (count - 1)
    radius_sum = (
        r0s * (vs + vt) / (vs * (1 - ek))
        + 2 * r * (vt + vs * ek) / (vs * (1 - ek) ** 2)
        - c5 * b / (1 - ek)
        - 2 * r * (count - 2) / (1 - ek)
    )
    return (2 * r * (count - 1) - (ek - 1) * radius_sum) / (vs + vt)


def spiral_motion_pre_endgame_closed(
    params: ScenarioParams, count: int, rec: LinearRecursion
) -> float:
    """Closed-form sum of the spiral sweep times for cycles 0..N-1."""
    vs, vt, r, r0 = params.Vs, params.VT, params.r, params.R0
    if count == 0:
        return 0.0
    if vt == 0:
        return rec.gamma * rec.orbit_sum(r0 - r, count)
    ek = math.exp(SpiralLaw.from_params(params).k)
    c = r0 * (ek - 1) - r * (ek + 1)
    return (
        (r - r0) * (vs + vt) / (vt * vs)
        - 2 * r * (vt + vs * ek) / (vt * vs * (1 - ek))
        - rec.c3**count * ((vs + vt) * c / (vt * vs * (1 - ek)))
        + 2 * r * (count - 1) / vt
    )


def spiral_schedule(params: ScenarioParams) -> SweepReport:
    """Full spiral schedule: N cycles, end-game advance, optional extra cycle.

    The final trace entry's advance is the end-game advance of duration
    R_N/Vs; when eta = 1 an extra spiral cycle of time T_l plus its own
    advance precede the last circular sweep.
    """
    rec = spiral_recursion(params)
    radii = _iterate_radii(params)
    count = len(radii) - 1
    final_radius = radii[-1]
    decision = endgame(params, final_radius)

    t_in_last = final_radius / params.Vs

    trace = []
    for i in range(count):
        _, entry = spiral_next_radius(radii[i], params)
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

    eta = decision.eta
    t_in = (sum(e.advance_time for e in trace) if count else t_in_last) + eta * decision.T_in_f
    t_motion = sum(e.cycle_time for e in trace) + decision.T_last + eta * decision.T_l

    if count:
        closed_final = rec.orbit_value(params.R0 - params.r, count) + params.r
        closed_t_in = (
            spiral_advance_pre_endgame_closed(params, count, rec)
            + closed_final / params.Vs
            + eta * decision.T_in_f
        )
        closed_t_motion = (
            spiral_motion_pre_endgame_closed(params, count, rec)
            + decision.T_last
            + eta * decision.T_l
        )
    else:
        closed_final = params.R0
        closed_t_in = t_in
        closed_t_motion = t_motion

    return SweepReport(
        kind=SweepKind.SPIRAL,
        N=count,
        eta=eta,
        trace=tuple(trace),
        T_in=t_in,
        T_motion=t_motion,
        T_total=t_in + t_motion,
        final_radius=final_radius,
        t_in_last=t_in_last,
        t_last=decision.T_last,
        t_extra_spiral=eta * decision.T_l,
        t_in_final=eta * decision.T_in_f,
        closed_N=rec.closed_count(params.R0 - params.r, params.r),
        closed_T_in=closed_t_in,
        closed_T_motion=closed_t_motion,
        closed_final_radius=closed_final,
        radius_overshoot=final_radius < params.r,
        recursion=rec,
    )
