"""Critical velocity thresholds for the sweep processes.

Four quantities: the process-independent lower bound from the area-balance
argument, the circular critical velocity (exactly twice the bound), the naive
spiral no-escape velocity that ignores inward-advance time, and the spiral
critical velocity that accounts for it, found by root-finding.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NoBracket
from .scenario import ScenarioParams

_EXP_CAP = 700.0  # exp argument cap; keeps the residual finite near Vs -> VT
_BRACKET_DOUBLINGS = 60


def lower_bound_velocity(params: ScenarioParams) -> float:
    """Minimal speed any sweep process needs: best cleaning rate vs least region spread."""
    return math.pi * params.R0 * params.VT / (params.n * params.r)


def circular_critical_velocity(params: ScenarioParams) -> float:
    """Minimal speed for the circular process; exactly twice the lower bound."""
    return 2.0 * math.pi * params.R0 * params.VT / (params.n * params.r)


def spiral_no_escape_velocity(params: ScenarioParams) -> float:
    """Spiral confinement speed when inward advances are treated as instantaneous.

    Kept as a reference quantity only: it can fall below the universal lower
    bound because it ignores the time spent re-entering the region, so all
    scheduling uses spiral_critical_velocity instead.
    """
    span = math.log((params.R0 + params.r) / (params.R0 - params.r))
    return params.VT * math.sqrt((2 * math.pi / params.n) ** 2 / span**2 + 1.0)


def _confinement_residual(vs: float, params: ScenarioParams) -> float:
    """Spread during one spiral cycle minus the largest recoverable advance.

    Strictly decreasing in vs on (VT, inf): positive means vs is too slow.
    """
    if vs <= params.VT:
        return math.inf
    if params.VT == 0:
        spread = 0.0
    else:
        k = 2 * math.pi * params.VT / (params.n * math.sqrt(vs * vs - params.VT * params.VT))
        spread = (params.R0 - params.r) * math.expm1(min(k, _EXP_CAP))
    recoverable = 2 * params.r * vs / (vs + params.VT)
    return spread - recoverable


def spiral_critical_velocity(params: ScenarioParams, rel_tol: float = 1e-10) -> float:
    """Minimal speed for the spiral process with inward advances in real time.

    Solves the balance between the region's growth over one angular sector and
    the sensor length recoverable during re-entry. Bisection on the monotone
    residual; raises NoBracket when the residual never changes sign (e.g.
    VT = 0, where confinement is vacuous).
    """
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    vt = params.VT
    lo = vt * (1 + 1e-9) if vt > 0 else 1e-30
    hi = max(10 * circular_critical_velocity(params), 2 * vt)

    f_lo = _confinement_residual(lo, params)
    f_hi = _confinement_residual(hi, params)
    doublings = 0
    while f_lo * f_hi > 0 and doublings < _BRACKET_DOUBLINGS:
        hi *= 2
        f_hi = _confinement_residual(hi, params)
        doublings += 1
    if f_lo * f_hi > 0:
        raise NoBracket(
            f"confinement residual does not change sign on ({lo}, {hi}); "
            "degenerate parameters (e.g. VT = 0)"
        )

    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        f_mid = _confinement_residual(mid, params)
        if f_mid == 0.0:
            return mid
        if f_lo * f_mid < 0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
        if (hi - lo) <= 0.25 * rel_tol * lo:
            break
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class VelocityReport:
    v_lower_bound: float
    v_circular: float
    v_spiral_naive: float
    v_spiral: float
    ratio_circular: float
    ratio_spiral_naive: float
    ratio_spiral: float


def velocity_report(params: ScenarioParams, rel_tol: float = 1e-10) -> VelocityReport:
    """All four thresholds plus their ratios to the lower bound. Requires VT > 0."""
    if params.VT <= 0:
        raise NoBracket("velocity report requires VT > 0; static evaders need no minimum speed")
    v_lb = lower_bound_velocity(params)
    v_c = circular_critical_velocity(params)
    v_naive = spiral_no_escape_velocity(params)
    v_sp = spiral_critical_velocity(params, rel_tol)
    return VelocityReport(
        v_lower_bound=v_lb,
        v_circular=v_c,
        v_spiral_naive=v_naive,
        v_spiral=v_sp,
        ratio_circular=v_c / v_lb,
        ratio_spiral_naive=v_naive / v_lb,
        ratio_spiral=v_sp / v_lb,
    )
