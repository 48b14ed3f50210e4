"""Discrete-time geometric oracle on a Cartesian occupancy grid.

The evader region is a boolean occupancy set evolved by two operators: an
expansion by VT*dt per step (every feasible evader trajectory is dominated by
this wavefront) and a clearing of the annular sector each line sensor sweeps
during the step. Sweeper poses follow the analytic schedule of the chosen
process; the simulation is an independent check of confinement, cleaning
times, and post-sweep circularity.

Expansion is tracked through a margin field holding the Euclidean distance
from each free cell center to the occupied set: a global growth accumulator
advances by VT*dt per step and a cell is occupied once its margin falls to
the accumulated growth. Margins are re-measured against the actual occupied
set with an exact Euclidean distance transform every fraction of a cell of
accumulated growth, so sub-cell expansion per step is represented without
drift. Clearing stamps swept cells back to an unreachable margin; the next
refresh re-anchors their distances.

Everything is deterministic: identical inputs produce bit-identical fields.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from .circular import circ_cycle_time, circ_schedule
from .errors import SimTimeout
from .scenario import ScenarioParams, SweeperPose, SweepKind, angle_to_xy
from .spiral import SpiralLaw, spiral_angle, spiral_cycle_time, spiral_schedule
from .velocities import circular_critical_velocity, spiral_critical_velocity

_TWO_PI = 2 * math.pi
_REFRESH_QUANTUM_CELLS = 0.5  # growth between exact distance refreshes
_KEEP_BAND_CELLS = 1.0  # stale-margin tolerance before a refresh raises it
_BBOX_BAND_CELLS = 8  # halo of cells around the active set kept exact
_WINDOW_PAD_CELLS = 2  # clearing-window padding beyond the swept sector
_GUARD_BAND_CELLS = 1.5  # escape tolerance: rasterization plus boundary rounding
_ANGLE_EPS = 1e-9  # angular slack absorbing anchor rounding drift across cycles
_ANGLE_BINS = 720  # angular resolution of the circularity boundary scan


@dataclass(frozen=True)
class SimConfig:
    """Grid resolution, time step, domain extent, and optional wall-clock cap."""

    cell_size: float
    dt: float
    domain_halfwidth: float
    max_time: float | None = None


def default_config(params: ScenarioParams, cell_size: float = 0.25, dt: float = 0.01) -> SimConfig:
    """Domain sized so the guard radius R0 + 2r stays observable."""
    halfwidth = params.R0 + 2 * params.r + 8 * cell_size
    return SimConfig(cell_size=cell_size, dt=dt, domain_halfwidth=halfwidth)


@dataclass(frozen=True)
class _Phase:
    """One homogeneous stretch of the schedule driving all sweeper poses."""

    name: str  # sweep | advance | extra_spiral | final_sweep
    duration: float
    cycle_radius: float  # region radius at the owning cycle's start
    center0: float  # sensor-center radius at phase start
    center1: float  # sensor-center radius at phase end
    clears: bool
    spiral: bool  # spiral angle law (log) vs circular (constant rate)
    ends_cycle: bool = False
    advances_anchor: bool = False
    endgame: bool = False
    predicted_radius: float = math.nan  # post-sweep circularity prediction


@dataclass
class _SweeperState:
    spin: int
    anchor: float
    angle: float
    center_radius: float


@dataclass
class SimOutcome:
    cleaned: bool
    clean_time: float
    escape_event: tuple[float, tuple[int, int]] | None
    per_cycle_max_radius: list[float]
    circularity_residuals: list[float]
    analytic_total: float = math.nan
    cycle_log: list[tuple[int, int, float]] = field(default_factory=list)


class SimWorld:
    """Occupancy grid, sweeper poses, and the simulation clock."""

    def __init__(
        self,
        params: ScenarioParams,
        kind: SweepKind,
        cfg: SimConfig,
        phases: list[_Phase],
        analytic_total: float,
    ):
        if cfg.cell_size <= 0 or cfg.dt <= 0:
            raise ValueError("cell_size and dt must be positive")
        if params.VT * cfg.dt > cfg.cell_size * (1 + 1e-12):
            raise ValueError("VT*dt must not exceed cell_size (expansion must resolve per step)")
        if params.Vs * cfg.dt > params.r / 4 * (1 + 1e-12):
            raise ValueError("Vs*dt must not exceed r/4 (sweep slices must overlap)")
        if cfg.domain_halfwidth < params.R0 + 2 * params.r:
            raise ValueError("domain_halfwidth must cover R0 + 2r so escapes are observable")

        self.params = params
        self.kind = kind
        self.cfg = cfg
        self.phases = phases
        self.analytic_total = analytic_total

        h = cfg.cell_size
        half_cells = int(math.floor(cfg.domain_halfwidth / h))
        coords = (np.arange(2 * half_cells + 1) - half_cells) * h
        self._coords = coords
        xg = coords[None, :]
        yg = coords[:, None]
        self.radius_grid = np.hypot(xg, yg)
        self.angle_grid = np.mod(np.arctan2(-xg, yg), _TWO_PI)

        # Free-cell margin: distance to the initial disk; occupied iff <= growth.
        self.margin = self.radius_grid - params.R0
        np.maximum(self.margin, 0.0, out=self.margin)
        self.margin[self.radius_grid <= params.R0] = 0.0
        self.growth = 0.0
        self._last_refresh_growth = 0.0

        self.clock = 0.0
        self.cycle_index = 0
        self.phase_index = 0
        self.phase_elapsed = 0.0
        self._cycle_start_time = 0.0
        self._endgame_start: float | None = None

        self.sweepers = []
        spacing = 4 * math.pi / params.n
        for k in range(params.n // 2):
            for spin in (1, -1):
                self.sweepers.append(
                    _SweeperState(
                        spin=spin,
                        anchor=spacing * k,
                        angle=spacing * k,
                        center_radius=phases[0].center0 if phases else params.R0,
                    )
                )

        self._win: tuple[slice, slice] | None = None
        self.escape_event: tuple[float, tuple[int, int]] | None = None
        self.per_cycle_max_radius: list[float] = []
        self.circularity_residuals: list[float] = []
        self.cycle_log: list[tuple[int, int, float]] = []
        self.cleaned = False
        self.clean_time = math.nan
        self._occupied_count = int((self.margin <= 0.0).sum())

    # -- occupancy queries ------------------------------------------------

    @property
    def occupancy(self) -> np.ndarray:
        return self.margin <= self.growth

    @property
    def poses(self) -> list[SweeperPose]:
        out = []
        for i, s in enumerate(self.sweepers):
            heading = (-s.spin * math.cos(s.angle), -s.spin * math.sin(s.angle))
            out.append(
                SweeperPose(
                    sector_index=i,
                    angle=s.angle,
                    center_radius=s.center_radius,
                    heading=heading,
                    sensor_span=(s.center_radius - self.params.r, s.center_radius + self.params.r),
                )
            )
        return out

    def occupied_count(self) -> int:
        return self._occupied_count

    def _active_window(self):
        h = self.cfg.cell_size
        band = self.growth + _BBOX_BAND_CELLS * h
        active = self.margin <= band
        rows = np.flatnonzero(active.any(axis=1))
        cols = np.flatnonzero(active.any(axis=0))
        if rows.size == 0:
            return None
        return slice(rows[0], rows[-1] + 1), slice(cols[0], cols[-1] + 1)

    def refresh(self) -> None:
        """Re-measure free-cell margins against the current occupied set.

        Exact Euclidean distances within the active window. Stale margins are
        never below the true distance (cell centers under-approximate the
        region), so they are kept wherever the fresh measurement agrees within
        a staircase-sized band: they carry the front's sub-cell position
        exactly. A fresh value far above the stale one means the stale source
        was swept away, and keeping it would re-seed contamination behind the
        sensor, so such margins are raised to the fresh distance.
        """
        h = self.cfg.cell_size
        win = self._active_window()
        self._win = win
        if win is None:
            self._occupied_count = 0
            self._last_refresh_growth = self.growth
            return
        crop = self.margin[win]
        occ = crop <= self.growth
        count = int(occ.sum())
        self._occupied_count = count
        self._last_refresh_growth = self.growth
        if count == 0:
            return
        dist = ndimage.distance_transform_edt(~occ, sampling=h)
        fresh = self.growth + dist
        keep = fresh - crop <= _KEEP_BAND_CELLS * h
        self.margin[win] = np.where(keep, np.minimum(crop, fresh), fresh)

    def max_occupied_radius(self) -> float:
        win = self._active_window()
        if win is None:
            return 0.0
        occ = self.margin[win] <= self.growth
        if not occ.any():
            return 0.0
        return float(self.radius_grid[win][occ].max())

    def boundary_radius_span(self) -> tuple[float, float]:
        """(min, max) over angles of the occupied set's outer boundary radius.

        Sub-cell accurate: free cells within a band of the front contribute
        their radius minus the remaining margin, which places the boundary
        between cell centers instead of rounding it down to them.
        """
        h = self.cfg.cell_size
        win = self._active_window()
        if win is None:
            return (math.nan, math.nan)
        remaining = self.margin[win] - self.growth
        near = remaining <= 2 * h
        if not near.any():
            return (math.nan, math.nan)
        radii = self.radius_grid[win][near] - np.maximum(remaining[near], 0.0)
        angles = self.angle_grid[win][near]
        # Bin width of a few cells of arc at the outer boundary, so every bin
        # sees boundary cells even when the region is small.
        rmax = float(radii.max())
        n_bins = max(8, min(_ANGLE_BINS, int(_TWO_PI * rmax / (3 * self.cfg.cell_size))))
        bins = np.minimum((angles / _TWO_PI * n_bins).astype(np.intp), n_bins - 1)
        per_bin = np.zeros(n_bins)
        np.maximum.at(per_bin, bins, radii)
        filled = per_bin[per_bin > 0]
        return (float(filled.min()), float(per_bin.max()))


def _phase_bound(world: SimWorld, phase: _Phase, tau: float) -> float:
    """Analytic ceiling on the occupied radius during a phase (guard band excluded)."""
    if phase.endgame:
        start = world._endgame_start if world._endgame_start is not None else world.clock
        return 2 * world.params.r + world.params.VT * max(0.0, world.clock - start)
    if phase.spiral and phase.name == "sweep":
        return phase.cycle_radius + world.params.VT * tau
    if world.kind is SweepKind.SPIRAL:
        return phase.cycle_radius + world.params.VT * phase.duration
    return phase.cycle_radius + world.params.r


def _clear_swept(world: SimWorld, phase: _Phase, t0: float, t1: float) -> None:
    """Stamp the annular sectors swept by every sensor during [t0, t1]."""
    p = world.params
    h = world.cfg.cell_size
    r0c, r1c = _center_radius(phase, t0), _center_radius(phase, t1)
    lo = max(0.0, min(r0c, r1c) - p.r)
    hi = max(r0c, r1c) + p.r
    if phase.spiral:
        # The spiral tip rides the wavefront with zero clearance; stamp a few
        # cells of provably empty space above it so wavefront-adjacent cells
        # cannot keep stale margins and re-seed contamination behind the line.
        hi += 4 * h
    a0 = _angle_progress(world, phase, t0)
    a1 = _angle_progress(world, phase, t1)
    dphi = a1 - a0
    pad = _WINDOW_PAD_CELLS * h
    m = world.margin.shape[0]
    half = m // 2

    for s in world.sweepers:
        th0 = s.anchor + s.spin * a0
        th1 = s.anchor + s.spin * a1
        xs, ys = [], []
        for th in (th0, th1):
            for rad in (lo, hi):
                x, y = angle_to_xy(th, rad)
                xs.append(x)
                ys.append(y)
        i0 = max(0, int((min(ys) - pad) / h) + half)
        i1 = min(m - 1, int((max(ys) + pad) / h) + half)
        j0 = max(0, int((min(xs) - pad) / h) + half)
        j1 = min(m - 1, int((max(xs) + pad) / h) + half)
        if i0 > i1 or j0 > j1:
            continue
        win = (slice(i0, i1 + 1), slice(j0, j1 + 1))
        rad_w = world.radius_grid[win]
        ang_w = world.angle_grid[win]
        # The epsilon shift folds cells sitting a rounding error behind the
        # slice start (anchor drift accumulates over cycles) into the slice.
        rel = np.mod((ang_w - th0) * s.spin + _ANGLE_EPS, _TWO_PI)
        mask = (rad_w >= lo) & (rad_w <= hi) & (rel <= dphi + 2 * _ANGLE_EPS)
        world.margin[win][mask] = np.inf
        s.angle = th1
        s.center_radius = _center_radius(phase, t1)

    if phase.endgame:
        _reclear_endgame_wedge(world, phase, t1, a1, hi)


def _reclear_endgame_wedge(world: SimWorld, phase: _Phase, t1: float, a1: float, hi: float) -> None:
    """Re-stamp the already-swept wedge of an end-game sweep.

    Behind the sensor line the swept sector is provably clean except for the
    spread from the region center (bounded by VT times the phase clock), so
    the whole wedge above that floor can be cleared every step. This kills
    rasterization leak-back near the center where the sensor's arc speed is
    too slow for the stale-margin raise rule to act.
    """
    h = world.cfg.cell_size
    floor = world.params.VT * t1 + h if phase.name == "extra_spiral" else 0.0
    half = world.margin.shape[0] // 2
    cells = int(hi / h) + 1 + _WINDOW_PAD_CELLS
    i0, i1 = max(0, half - cells), min(world.margin.shape[0] - 1, half + cells)
    win = (slice(i0, i1 + 1), slice(i0, i1 + 1))
    rad_w = world.radius_grid[win]
    ang_w = world.angle_grid[win]
    band = (rad_w <= hi) & (rad_w >= floor)
    for s in world.sweepers:
        rel = np.mod((ang_w - s.anchor) * s.spin + _ANGLE_EPS, _TWO_PI)
        mask = band & (rel <= a1 + 2 * _ANGLE_EPS)
        world.margin[win][mask] = np.inf


def _center_radius(phase: _Phase, tau: float) -> float:
    if phase.duration <= 0:
        return phase.center1
    frac = tau / phase.duration
    return phase.center0 + (phase.center1 - phase.center0) * frac


def _angle_progress(world: SimWorld, phase: _Phase, tau: float) -> float:
    """Angle swept since phase start (0 for radial advances)."""
    if not phase.clears:
        return 0.0
    p = world.params
    if phase.spiral:
        return spiral_angle(tau, phase.cycle_radius, p)
    # Constant-radius sweep at arc speed Vs.
    return p.Vs * tau / phase.center0


def step(world: SimWorld) -> SimWorld:
    """Advance one time step: expand, clear swept sectors, move poses."""
    if world.phase_index >= len(world.phases):
        return world
    phase = world.phases[world.phase_index]
    dt = min(world.cfg.dt, phase.duration - world.phase_elapsed)
    t0 = world.phase_elapsed
    t1 = world.phase_elapsed + dt

    world.growth += world.params.VT * dt
    if phase.clears:
        _clear_swept(world, phase, t0, t1)
    else:
        for s in world.sweepers:
            s.center_radius = _center_radius(phase, t1)

    world.clock += dt
    world.phase_elapsed = t1

    quantum = _REFRESH_QUANTUM_CELLS * world.cfg.cell_size
    if world.growth - world._last_refresh_growth >= quantum:
        world.refresh()
        _check_escape(world, phase, t1)

    if world.phase_elapsed >= phase.duration - 1e-15:
        _finish_phase(world, phase)
    return world


def _check_escape(world: SimWorld, phase: _Phase, tau: float, bound: float | None = None) -> None:
    if world.escape_event is not None:
        return
    limit = bound if bound is not None else _phase_bound(world, phase, tau)
    limit += _GUARD_BAND_CELLS * world.cfg.cell_size
    win = world._active_window()
    if win is None:
        return
    occ = world.margin[win] <= world.growth
    rad = world.radius_grid[win]
    outside = occ & (rad > limit)
    if outside.any():
        flat = np.flatnonzero(outside.ravel())
        worst = flat[np.argmax(rad.ravel()[flat])]
        ij = np.unravel_index(worst, rad.shape)
        world.escape_event = (world.clock, (int(ij[0] + win[0].start), int(ij[1] + win[1].start)))


def _finish_phase(world: SimWorld, phase: _Phase) -> None:
    world.refresh()
    if phase.name == "sweep" and not math.isnan(phase.predicted_radius):
        lo, hi = world.boundary_radius_span()
        if not math.isnan(lo):
            residual = max(abs(hi - phase.predicted_radius), abs(phase.predicted_radius - lo))
            world.circularity_residuals.append(residual)
    if phase.clears and phase.advances_anchor:
        sector = _TWO_PI / world.params.n
        for s in world.sweepers:
            s.anchor += s.spin * sector
            s.angle = s.anchor
    if phase.ends_cycle:
        max_rad = world.max_occupied_radius()
        world.per_cycle_max_radius.append(max_rad)
        world.cycle_log.append((world.cycle_index, world.occupied_count(), world.clock))
        _check_escape(world, phase, phase.duration, bound=phase.cycle_radius)
        world.cycle_index += 1
        world._cycle_start_time = world.clock
    if phase.endgame and world._endgame_start is None:
        world._endgame_start = world.clock - phase.duration
    if world.occupied_count() == 0 and not world.cleaned:
        world.cleaned = True
        world.clean_time = world.clock
    world.phase_index += 1
    world.phase_elapsed = 0.0
    if world.phase_index < len(world.phases):
        nxt = world.phases[world.phase_index]
        if nxt.endgame and world._endgame_start is None:
            world._endgame_start = world.clock
        for s in world.sweepers:
            s.center_radius = nxt.center0


def _cleaning_phases(params: ScenarioParams, kind: SweepKind) -> tuple[list[_Phase], float]:
    """Phase list for a full cleaning run, straight from the analytic schedule."""
    phases: list[_Phase] = []
    if kind is SweepKind.CIRCULAR:
        rep = circ_schedule(params)
        radii = [e.radius_before for e in rep.trace] + [rep.final_radius]
        for e in rep.trace:
            last = e.index == rep.N - 1
            phases.append(
                _Phase(
                    name="sweep",
                    duration=e.cycle_time,
                    cycle_radius=e.radius_before,
                    center0=e.radius_before,
                    center1=e.radius_before,
                    clears=True,
                    spiral=False,
                    advances_anchor=True,
                )
            )
            phases.append(
                _Phase(
                    name="advance",
                    duration=e.advance_time,
                    cycle_radius=e.radius_before,
                    center0=e.radius_before,
                    center1=params.r if last else radii[e.index + 1],
                    clears=False,
                    spiral=False,
                    ends_cycle=True,
                )
            )
    else:
        rep = spiral_schedule(params)
        law = SpiralLaw.from_params(params)
        radii = [e.radius_before for e in rep.trace] + [rep.final_radius]
        for e in rep.trace:
            last = e.index == rep.N - 1
            end_center = e.radius_before - params.r + params.VT * e.cycle_time
            phases.append(
                _Phase(
                    name="sweep",
                    duration=e.cycle_time,
                    cycle_radius=e.radius_before,
                    center0=e.radius_before - params.r,
                    center1=end_center,
                    clears=True,
                    spiral=True,
                    advances_anchor=True,
                    predicted_radius=e.radius_before - 2 * params.r + params.VT * e.cycle_time,
                )
            )
            phases.append(
                _Phase(
                    name="advance",
                    duration=e.advance_time,
                    cycle_radius=e.radius_before,
                    center0=end_center,
                    center1=params.r if last else radii[e.index + 1] - params.r,
                    clears=False,
                    spiral=False,
                    ends_cycle=True,
                )
            )
        if rep.eta:
            t_l = rep.t_extra_spiral
            phases.append(
                _Phase(
                    name="extra_spiral",
                    duration=t_l,
                    cycle_radius=2 * params.r,
                    center0=params.r,
                    center1=params.r + params.VT * t_l,
                    clears=True,
                    spiral=True,
                    advances_anchor=True,
                    endgame=True,
                )
            )
            phases.append(
                _Phase(
                    name="advance",
                    duration=rep.t_in_final,
                    cycle_radius=2 * params.r,
                    center0=params.r + params.VT * t_l,
                    center1=params.r,
                    clears=False,
                    spiral=False,
                    endgame=True,
                )
            )
    phases.append(
        _Phase(
            name="final_sweep",
            duration=rep.t_last,
            cycle_radius=2 * params.r,
            center0=params.r,
            center1=params.r,
            clears=True,
            spiral=False,
            advances_anchor=True,
            endgame=True,
        )
    )
    if rep.N == 0:
        # Pure end-game: the schedule still starts with the centering advance.
        phases.insert(
            0,
            _Phase(
                name="advance",
                duration=rep.t_in_last,
                cycle_radius=params.R0,
                center0=params.R0 if kind is SweepKind.CIRCULAR else params.R0 - params.r,
                center1=params.r,
                clears=False,
                spiral=False,
                endgame=True,
            ),
        )
    return phases, rep.T_total


def _confinement_phases(
    params: ScenarioParams, kind: SweepKind, cycles: int
) -> tuple[list[_Phase], float]:
    """Cycle-by-cycle phases tolerant of subcritical speeds (no end-game)."""
    phases: list[_Phase] = []
    p = params
    radius = p.R0
    total = 0.0
    terminal = p.r if kind is SweepKind.CIRCULAR else 2 * p.r
    for _ in range(cycles):
        if radius <= terminal:
            break  # region already at the end-game radius; no further cycles
        if kind is SweepKind.CIRCULAR:
            cycle_time = circ_cycle_time(radius, p)
            footprint = p.r
            center0 = center_end = radius
            spiral_flag = False
            predicted = math.nan
        else:
            cycle_time = spiral_cycle_time(radius, p)
            footprint = 2 * p.r
            center0 = radius - p.r
            center_end = radius - p.r + p.VT * cycle_time
            spiral_flag = True
            predicted = radius - 2 * p.r + p.VT * cycle_time
        delta = footprint - p.VT * cycle_time
        post_sweep = radius - delta
        phases.append(
            _Phase(
                name="sweep",
                duration=cycle_time,
                cycle_radius=radius,
                center0=center0,
                center1=center_end,
                clears=True,
                spiral=spiral_flag,
                advances_anchor=True,
                predicted_radius=predicted,
                ends_cycle=delta <= 0,
            )
        )
        total += cycle_time
        if delta > 0:
            delta_eff = delta * p.Vs / (p.Vs + p.VT)
            advance_time = delta_eff / p.Vs
            nxt = radius - delta_eff
            phases.append(
                _Phase(
                    name="advance",
                    duration=advance_time,
                    cycle_radius=radius,
                    center0=center_end,
                    center1=nxt if kind is SweepKind.CIRCULAR else nxt - p.r,
                    clears=False,
                    spiral=False,
                    ends_cycle=True,
                )
            )
            total += advance_time
            radius = nxt
        else:
            radius = post_sweep
    return phases, total


def _run(world: SimWorld) -> SimWorld:
    cap = world.cfg.max_time if world.cfg.max_time is not None else math.inf
    while world.phase_index < len(world.phases):
        if world.clock > cap:
            raise SimTimeout(
                f"simulation exceeded max_time={cap} with "
                f"{world.occupied_count()} occupied cells remaining"
            )
        step(world)
        if world.cleaned:
            break
    return world


def make_world(
    params: ScenarioParams,
    kind: SweepKind,
    cfg: SimConfig,
    mode: str = "cleaning",
    cycles: int = 3,
) -> SimWorld:
    if mode == "cleaning":
        phases, total = _cleaning_phases(params, kind)
    elif mode == "confinement":
        phases, total = _confinement_phases(params, kind, cycles)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return SimWorld(params, kind, cfg, phases, total)


def _outcome(world: SimWorld) -> SimOutcome:
    return SimOutcome(
        cleaned=world.cleaned,
        clean_time=world.clean_time,
        escape_event=world.escape_event,
        per_cycle_max_radius=world.per_cycle_max_radius,
        circularity_residuals=world.circularity_residuals,
        analytic_total=world.analytic_total,
        cycle_log=world.cycle_log,
    )


def run_cleaning(params: ScenarioParams, kind: SweepKind, cfg: SimConfig) -> SimOutcome:
    """Run the full analytic schedule; raises SimTimeout if occupancy survives max_time."""
    world = make_world(params, kind, cfg, mode="cleaning")
    _run(world)
    if not world.cleaned and world.cfg.max_time is not None and world.clock > world.cfg.max_time:
        raise SimTimeout("occupancy remaining at max_time")
    return _outcome(world)


def run_confinement_check(
    params: ScenarioParams,
    kind: SweepKind,
    vs_scale: float,
    cfg: SimConfig,
    cycles: int = 3,
) -> SimOutcome:
    """Run `cycles` cycles at vs_scale times the process critical velocity.

    An escape event is recorded when occupied cells exceed the cycle's
    analytic ceiling by more than the guard band, or when a cycle ends with
    the region larger than it started (the confinement promise).
    """
    if vs_scale <= 0:
        raise ValueError("vs_scale must be positive")
    if kind is SweepKind.CIRCULAR:
        crit = circular_critical_velocity(params)
    else:
        crit = spiral_critical_velocity(params)
    scaled = params.with_speed(vs_scale * crit)
    world = make_world(scaled, kind, cfg, mode="confinement", cycles=cycles)
    while world.phase_index < len(world.phases) and world.escape_event is None:
        step(world)
    return _outcome(world)


def circularity_check(params: ScenarioParams, cfg: SimConfig) -> list[float]:
    """Residuals between simulated and predicted post-sweep boundary radii.

    Spiral cleaning run; at the end of every spiral cycle the occupied set
    should again be a circle whose radius the trajectory law predicts.
    """
    outcome = run_cleaning(params, SweepKind.SPIRAL, cfg)
    return outcome.circularity_residuals
