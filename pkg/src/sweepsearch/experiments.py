"""Experiment harness: figure data tables, process comparison, config runner.

Every figure of the study is reproducible as a CSV table: velocity curves
over the swarm size, schedule totals for speed offsets above the relevant
critical velocity, the gain from adding sweepers, and the circular-vs-spiral
comparison at equal speeds. Floats are written with 12 significant digits and
LF line endings so identical inputs produce byte-identical files.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .circular import circ_schedule
from .errors import ConfigParseError, SubcriticalSpeed
from .scenario import ScenarioParams, SweepKind, validate_params
from .spiral import spiral_schedule
from .velocities import (
    circular_critical_velocity,
    lower_bound_velocity,
    spiral_critical_velocity,
    velocity_report,
)

DEFAULT_N_VALUES = tuple(range(2, 33, 2))
DEFAULT_DELTA_V = (1.0, 2.0, 5.0, 10.0)

FIGURE_IDS = (
    "fig1",
    "fig3",
    "fig4",
    "fig5",
    "fig6",
    "fig7",
    "fig8",
    "fig10",
    "fig11",
    "fig12",
    "fig13",
    "fig14",
    "fig15",
    "fig16",
    "fig17a",
    "fig17b",
    "fig17c",
    "fig17d",
    "fig18",
    "fig19",
)

SUBCRITICAL_MARKER = "subcritical"


@dataclass(frozen=True)
class ExperimentSpec:
    figure_id: str
    R0: float = 100.0
    r: float = 10.0
    VT: float = 1.0
    n_values: tuple[int, ...] = DEFAULT_N_VALUES
    delta_v_values: tuple[float, ...] = DEFAULT_DELTA_V
    output_path: str | None = None

    def __post_init__(self):
        if self.figure_id not in FIGURE_IDS:
            raise ValueError(f"unknown figure id {self.figure_id!r}")
        if any(n % 2 or n < 2 for n in self.n_values):
            raise ValueError("n_values must be even counts >= 2")
        if list(self.n_values) != sorted(self.n_values):
            raise ValueError("n_values must be ascending")
        if any(dv <= 0 for dv in self.delta_v_values):
            raise ValueError("delta_v_values must be positive")

    def base_params(self, n: int, vs: float) -> ScenarioParams:
        return ScenarioParams(R0=self.R0, r=self.r, VT=self.VT, n=n, Vs=vs)


@dataclass(frozen=True)
class ComparisonRow:
    n: int
    delta_v: float
    vs_used: float
    t_circular: float
    t_spiral: float
    speedup: float


def format_value(value) -> str:
    """Deterministic cell formatting: 12 significant digits for floats."""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{value:.12g}"


def to_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(format_value(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def write_csv(path, header: list[str], rows: list[list]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(to_csv(header, rows))


# Figure registry: process, plotted quantity, and which critical velocity the
# speed offsets sit above. Velocity figures carry no offset curves.
_TIME_FIGURES = {
    "fig4": (SweepKind.CIRCULAR, "total", "circular"),
    "fig5": (SweepKind.CIRCULAR, "motion", "circular"),
    "fig6": (SweepKind.CIRCULAR, "advance", "circular"),
    "fig7": (SweepKind.CIRCULAR, "motion_over_advance", "circular"),
    "fig8": (SweepKind.CIRCULAR, "gain", "circular"),
    "fig12": (SweepKind.SPIRAL, "total", "spiral"),
    "fig13": (SweepKind.SPIRAL, "motion", "spiral"),
    "fig14": (SweepKind.SPIRAL, "advance", "spiral"),
    "fig15": (SweepKind.SPIRAL, "motion_over_advance", "spiral"),
    "fig16": (SweepKind.SPIRAL, "gain", "spiral"),
    "fig17a": (SweepKind.SPIRAL, "total", "circular"),
    "fig17b": (SweepKind.SPIRAL, "motion_over_advance", "circular"),
    "fig17c": (SweepKind.SPIRAL, "motion", "circular"),
    "fig17d": (SweepKind.SPIRAL, "advance", "circular"),
    "fig18": (SweepKind.SPIRAL, "gain", "circular"),
}


def _critical(spec: ExperimentSpec, n: int, which: str) -> float:
    probe = spec.base_params(n, 1.0)
    if which == "circular":
        return circular_critical_velocity(probe)
    return spiral_critical_velocity(probe)


def _schedule_value(kind: SweepKind, params: ScenarioParams, quantity: str):
    rep = circ_schedule(params) if kind is SweepKind.CIRCULAR else spiral_schedule(params)
    if quantity == "total":
        return rep.T_total
    if quantity == "motion":
        return rep.T_motion
    if quantity == "advance":
        return rep.T_in
    if quantity == "motion_over_advance":
        return rep.T_motion / rep.T_in
    raise ValueError(quantity)


def figure_data(spec: ExperimentSpec) -> tuple[list[str], list[list]]:
    """Header and rows of the requested figure's table, one row per n."""
    fid = spec.figure_id
    if fid == "fig1":
        header = ["n", "v_lower_bound"]
        rows = [[n, lower_bound_velocity(spec.base_params(n, 1.0))] for n in spec.n_values]
        return header, rows
    if fid == "fig3":
        header = ["n", "v_lower_bound", "v_circular"]
        rows = []
        for n in spec.n_values:
            probe = spec.base_params(n, 1.0)
            rows.append([n, lower_bound_velocity(probe), circular_critical_velocity(probe)])
        return header, rows
    if fid == "fig10":
        header = ["n", "v_lower_bound", "v_spiral"]
        rows = []
        for n in spec.n_values:
            probe = spec.base_params(n, 1.0)
            rows.append([n, lower_bound_velocity(probe), spiral_critical_velocity(probe)])
        return header, rows
    if fid == "fig11":
        header = ["n", "v_spiral_over_lower_bound"]
        rows = []
        for n in spec.n_values:
            probe = spec.base_params(n, 1.0)
            rows.append([n, spiral_critical_velocity(probe) / lower_bound_velocity(probe)])
        return header, rows
    if fid == "fig19":
        header = ["n"]
        for dv in spec.delta_v_values:
            header += [f"t_circular_dv{dv:g}", f"t_spiral_dv{dv:g}"]
        rows = []
        for n in spec.n_values:
            row: list = [n]
            for dv in spec.delta_v_values:
                vs = _critical(spec, n, "circular") + dv
                params = spec.base_params(n, vs)
                row.append(_cell(SweepKind.CIRCULAR, params, "total"))
                row.append(_cell(SweepKind.SPIRAL, params, "total"))
            rows.append(row)
        return header, rows

    kind, quantity, base = _TIME_FIGURES[fid]
    label = quantity if quantity != "motion_over_advance" else "motion_over_advance"
    header = ["n"] + [f"{label}_dv{dv:g}" for dv in spec.delta_v_values]
    rows = []
    for n in spec.n_values:
        row: list = [n]
        for dv in spec.delta_v_values:
            if quantity == "gain":
                ref = _cell(kind, spec.base_params(2, _critical(spec, 2, base) + dv), "total")
                val = _cell(kind, spec.base_params(n, _critical(spec, n, base) + dv), "total")
                if isinstance(ref, str) or isinstance(val, str):
                    row.append(SUBCRITICAL_MARKER)
                else:
                    row.append(ref / val)
            else:
                params = spec.base_params(n, _critical(spec, n, base) + dv)
                row.append(_cell(kind, params, quantity))
        rows.append(row)
    return header, rows


def _cell(kind: SweepKind, params: ScenarioParams, quantity: str):
    try:
        return _schedule_value(kind, params, quantity)
    except SubcriticalSpeed:
        return SUBCRITICAL_MARKER


def compare(
    base: ScenarioParams,
    n_values=DEFAULT_N_VALUES,
    delta_v_values=DEFAULT_DELTA_V,
) -> list[ComparisonRow]:
    """Circular vs spiral totals at the same speed per cell.

    The shared speed is the circular critical velocity plus the offset, which
    also exceeds the spiral critical velocity, so both schedules exist.
    """
    rows = []
    for n in n_values:
        probe = ScenarioParams(R0=base.R0, r=base.r, VT=base.VT, n=n, Vs=1.0)
        crit = circular_critical_velocity(probe)
        for dv in delta_v_values:
            vs = crit + dv
            params = probe.with_speed(vs)
            t_c = circ_schedule(params).T_total
            t_s = spiral_schedule(params).T_total
            rows.append(
                ComparisonRow(
                    n=n,
                    delta_v=dv,
                    vs_used=vs,
                    t_circular=t_c,
                    t_spiral=t_s,
                    speedup=t_c / t_s,
                )
            )
    return rows


def comparison_table(rows: list[ComparisonRow]) -> tuple[list[str], list[list]]:
    header = ["n", "delta_v", "vs_used", "t_circular", "t_spiral", "speedup"]
    return header, [
        [r.n, r.delta_v, r.vs_used, r.t_circular, r.t_spiral, r.speedup] for r in rows
    ]


# -- consistency grid (library side of the `check` subcommand) --------------


def sample_supercritical_params(
    rng: np.random.Generator, kind: SweepKind
) -> ScenarioParams:
    """Random valid parameters with a speed strictly above the process critical."""
    r = rng.uniform(1.0, 20.0)
    R0 = r * rng.uniform(1.6, 30.0)
    VT = rng.uniform(0.05, 3.0)
    n = 2 * int(rng.integers(1, 9))
    probe = ScenarioParams(R0=R0, r=r, VT=VT, n=n, Vs=1.0)
    if kind is SweepKind.CIRCULAR:
        crit = circular_critical_velocity(probe)
    else:
        crit = spiral_critical_velocity(probe)
    vs = crit * rng.uniform(1.02, 3.0) + rng.uniform(0.0, 5.0)
    return validate_params(probe.with_speed(vs))


@dataclass
class ConsistencyReport:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_consistency_grid(count: int = 100, seed: int = 20240901) -> ConsistencyReport:
    """Closed forms vs direct iteration on a randomized supercritical grid.

    For both processes: the cycle count, total advance time, total motion
    time, and final radius from the closed forms must match the iterative
    trace sums within 1e-9 relative.
    """
    rng = np.random.default_rng(seed)
    report = ConsistencyReport()
    for kind in (SweepKind.CIRCULAR, SweepKind.SPIRAL):
        for _ in range(count):
            params = sample_supercritical_params(rng, kind)
            rep = circ_schedule(params) if kind is SweepKind.CIRCULAR else spiral_schedule(params)
            report.checked += 1
            tag = f"{kind.value} {params}"
            if rep.closed_N != rep.N:
                report.failures.append(f"{tag}: count {rep.N} != closed {rep.closed_N}")
            for name, got, want in (
                ("T_in", rep.closed_T_in, rep.T_in),
                ("T_motion", rep.closed_T_motion, rep.T_motion),
                ("final_radius", rep.closed_final_radius, rep.final_radius),
            ):
                if not math.isclose(got, want, rel_tol=1e-9, abs_tol=1e-12):
                    report.failures.append(f"{tag}: {name} closed {got} != iterative {want}")
    return report


# -- config-file runner ------------------------------------------------------

_SECTION_KEYS = {
    "critical": {"R0", "r", "VT", "n", "rel_tol", "out"},
    "schedule": {"R0", "r", "VT", "n", "vs", "dv", "process", "out"},
    "simulate": {
        "R0",
        "r",
        "VT",
        "n",
        "vs",
        "dv",
        "vs_scale",
        "process",
        "mode",
        "cycles",
        "cell_size",
        "dt",
        "halfwidth",
        "max_time",
        "out",
    },
    "figure": {"figure", "R0", "r", "VT", "n_values", "dv_values", "out"},
    "compare": {"R0", "r", "VT", "n_values", "dv_values", "out"},
    "check": {"count", "seed", "out"},
}

_INT_KEYS = {"n", "cycles", "count", "seed"}
_LIST_KEYS = {"n_values", "dv_values"}
_STR_KEYS = {"process", "mode", "figure", "out"}


def parse_config(text: str) -> list[tuple[str, dict]]:
    """Parse the flat key = value format with bracketed section headers."""
    sections: list[tuple[str, dict]] = []
    current: dict | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip().lower()
            if name not in _SECTION_KEYS:
                raise ConfigParseError(f"line {lineno}: unknown section [{name}]")
            current = {}
            sections.append((name, current))
            continue
        if current is None:
            raise ConfigParseError(f"line {lineno}: key outside any section")
        if "=" not in line:
            raise ConfigParseError(f"line {lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        value = value.strip()
        section = sections[-1][0]
        if key not in _SECTION_KEYS[section]:
            raise ConfigParseError(f"line {lineno}: unknown key {key!r} in section [{section}]")
        current[key] = _parse_value(key, value, lineno)
    return sections


def _parse_value(key: str, value: str, lineno: int):
    try:
        if key in _STR_KEYS:
            return value
        if key in _INT_KEYS:
            parsed = int(value)
            if key == "n" and (parsed % 2 or parsed < 2):
                raise ConfigParseError(
                    f"line {lineno}: key 'n' must be an even count >= 2, got {parsed}"
                )
            return parsed
        if key in _LIST_KEYS:
            items = [v.strip() for v in value.split(",") if v.strip()]
            if key == "n_values":
                parsed_list = tuple(int(v) for v in items)
                for item in parsed_list:
                    if item % 2 or item < 2:
                        raise ConfigParseError(
                            f"line {lineno}: key 'n_values' must hold even counts >= 2"
                        )
                return parsed_list
            return tuple(float(v) for v in items)
        return float(value)
    except ConfigParseError:
        raise
    except ValueError as exc:
        raise ConfigParseError(f"line {lineno}: bad value for {key!r}: {value!r}") from exc


def run_config(path) -> int:
    """Execute every section of a config file; 0 on success.

    Failed sections are reported on stderr-style diagnostics via the returned
    status; remaining sections still run.
    """
    from . import cli

    with open(path, "r", encoding="utf-8") as fh:
        sections = parse_config(fh.read())
    failures = []
    for index, (name, options) in enumerate(sections):
        try:
            cli.run_section(name, options)
        except Exception as exc:  # noqa: BLE001 - collected into the exit status
            failures.append(f"[{name}] #{index}: {exc}")
    if failures:
        print("failed sections:")
        for f in failures:
            print(" ", f)
        return 1
    return 0
