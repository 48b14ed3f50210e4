"""Command-line front end.

Subcommands: critical (velocity thresholds), schedule (analytic sweep plan),
simulate (grid oracle), figure (CSV data for any figure of the study),
compare (circular vs spiral totals), check (closed-form consistency grid),
and run (execute a key = value config file).
"""
from __future__ import annotations

import argparse
import sys

from .circular import circ_schedule
from .errors import SweepSearchError
from .experiments import (
    DEFAULT_DELTA_V,
    DEFAULT_N_VALUES,
    FIGURE_IDS,
    ExperimentSpec,
    check_consistency_grid,
    compare,
    comparison_table,
    figure_data,
    format_value,
    run_config,
    write_csv,
)
from .gridsim import SimConfig, default_config, run_cleaning, run_confinement_check
from .scenario import ScenarioParams, SweepKind, validate_params
from .velocities import circular_critical_velocity, spiral_critical_velocity, velocity_report


def _kind(name: str) -> SweepKind:
    try:
        return SweepKind(name)
    except ValueError:
        raise SweepSearchError(f"process must be 'circular' or 'spiral', got {name!r}")


def _resolve_speed(params: ScenarioParams, vs, dv, kind: SweepKind | None) -> ScenarioParams:
    if vs is not None:
        return params.with_speed(float(vs))
    if dv is None:
        raise SweepSearchError("either vs or dv must be given")
    if kind is SweepKind.SPIRAL:
        crit = spiral_critical_velocity(params)
    else:
        crit = circular_critical_velocity(params)
    return params.with_speed(crit + float(dv))


def _emit(out, header: list[str], rows: list[list]) -> None:
    if out:
        write_csv(out, header, rows)
    else:
        print(",".join(header))
        for row in rows:
            print(",".join(format_value(v) for v in row))


def run_section(name: str, opt: dict) -> None:
    """Execute one config section / subcommand with normalized options."""
    if name == "critical":
        params = ScenarioParams(
            R0=opt.get("R0", 100.0),
            r=opt.get("r", 10.0),
            VT=opt.get("VT", 1.0),
            n=opt.get("n", 2),
            Vs=1.0,
        )
        validate_params(params)
        rep = velocity_report(params, rel_tol=opt.get("rel_tol", 1e-10))
        header = ["quantity", "value"]
        rows = [
            ["v_lower_bound", rep.v_lower_bound],
            ["v_circular", rep.v_circular],
            ["v_spiral_naive", rep.v_spiral_naive],
            ["v_spiral", rep.v_spiral],
            ["ratio_circular", rep.ratio_circular],
            ["ratio_spiral_naive", rep.ratio_spiral_naive],
            ["ratio_spiral", rep.ratio_spiral],
        ]
        _emit(opt.get("out"), header, rows)
        return

    if name == "schedule":
        kind = _kind(opt.get("process", "circular"))
        params = ScenarioParams(
            R0=opt.get("R0", 100.0),
            r=opt.get("r", 10.0),
            VT=opt.get("VT", 1.0),
            n=opt.get("n", 2),
            Vs=1.0,
        )
        params = _resolve_speed(params, opt.get("vs"), opt.get("dv"), kind)
        validate_params(params)
        if kind is SweepKind.CIRCULAR:
            rep = circ_schedule(params)
        else:
            from .spiral import spiral_schedule

            rep = spiral_schedule(params)
        header = ["index", "radius_before", "cycle_time", "advance_distance", "advance_time"]
        rows = [
            [e.index, e.radius_before, e.cycle_time, e.advance_distance, e.advance_time]
            for e in rep.trace
        ]
        _emit(opt.get("out"), header, rows)
        print(
            f"{kind.value}: N={rep.N} eta={rep.eta} T_in={format_value(rep.T_in)} "
            f"T_motion={format_value(rep.T_motion)} T_total={format_value(rep.T_total)} "
            f"final_radius={format_value(rep.final_radius)}"
        )
        return

    if name == "simulate":
        kind = _kind(opt.get("process", "circular"))
        params = ScenarioParams(
            R0=opt.get("R0", 100.0),
            r=opt.get("r", 10.0),
            VT=opt.get("VT", 1.0),
            n=opt.get("n", 2),
            Vs=1.0,
        )
        mode = opt.get("mode", "clean")
        cell = opt.get("cell_size", 0.25)
        dt = opt.get("dt", 0.01)
        base_cfg = default_config(params, cell_size=cell, dt=dt)
        cfg = SimConfig(
            cell_size=cell,
            dt=dt,
            domain_halfwidth=opt.get("halfwidth", base_cfg.domain_halfwidth),
            max_time=opt.get("max_time"),
        )
        if mode == "confine":
            scale = opt.get("vs_scale", 1.05)
            params = validate_params(params.with_speed(1.0) if params.Vs <= 0 else params)
            outcome = run_confinement_check(params, kind, scale, cfg, cycles=opt.get("cycles", 3))
        elif mode == "clean":
            params = _resolve_speed(params, opt.get("vs"), opt.get("dv"), kind)
            validate_params(params)
            outcome = run_cleaning(params, kind, cfg)
        else:
            raise SweepSearchError(f"mode must be 'clean' or 'confine', got {mode!r}")
        header = ["cycle", "clock", "occupied_cells", "max_radius"]
        rows = [
            [c, t, occ, rad]
            for (c, occ, t), rad in zip(outcome.cycle_log, outcome.per_cycle_max_radius)
        ]
        _emit(opt.get("out"), header, rows)
        print(
            f"cleaned={outcome.cleaned} clean_time={format_value(outcome.clean_time)} "
            f"analytic_total={format_value(outcome.analytic_total)} "
            f"escape={outcome.escape_event}"
        )
        return

    if name == "figure":
        spec = ExperimentSpec(
            figure_id=opt["figure"],
            R0=opt.get("R0", 100.0),
            r=opt.get("r", 10.0),
            VT=opt.get("VT", 1.0),
            n_values=tuple(opt.get("n_values", DEFAULT_N_VALUES)),
            delta_v_values=tuple(opt.get("dv_values", DEFAULT_DELTA_V)),
            output_path=opt.get("out"),
        )
        header, rows = figure_data(spec)
        _emit(opt.get("out"), header, rows)
        return

    if name == "compare":
        base = ScenarioParams(
            R0=opt.get("R0", 100.0),
            r=opt.get("r", 10.0),
            VT=opt.get("VT", 1.0),
            n=2,
            Vs=1.0,
        )
        rows = compare(
            base,
            n_values=tuple(opt.get("n_values", DEFAULT_N_VALUES)),
            delta_v_values=tuple(opt.get("dv_values", DEFAULT_DELTA_V)),
        )
        header, table = comparison_table(rows)
        _emit(opt.get("out"), header, table)
        return

    if name == "check":
        report = check_consistency_grid(
            count=opt.get("count", 100), seed=opt.get("seed", 20240901)
        )
        print(f"checked {report.checked} parameter sets")
        for failure in report.failures:
            print("FAIL", failure)
        if not report.ok:
            raise SweepSearchError(f"{len(report.failures)} consistency failures")
        print("all closed forms match the iterative traces")
        return

    raise SweepSearchError(f"unknown section {name!r}")


def _add_scenario_args(sp, with_speed=True):
    sp.add_argument("--R0", type=float, default=100.0)
    sp.add_argument("--r", type=float, default=10.0)
    sp.add_argument("--VT", type=float, default=1.0)
    sp.add_argument("--n", type=int, default=2)
    if with_speed:
        group = sp.add_mutually_exclusive_group()
        group.add_argument("--vs", type=float, help="sweeper speed")
        group.add_argument("--dv", type=float, help="speed above the process critical velocity")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sweepsearch",
        description="Circular and spiral multi-agent sweep processes in a disk",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("critical", help="velocity thresholds and ratios")
    _add_scenario_args(sp, with_speed=False)
    sp.add_argument("--rel-tol", type=float, default=1e-10)
    sp.add_argument("--out")

    sp = sub.add_parser("schedule", help="analytic sweep schedule and totals")
    _add_scenario_args(sp)
    sp.add_argument("--process", choices=["circular", "spiral"], default="circular")
    sp.add_argument("--out")

    sp = sub.add_parser("simulate", help="occupancy-grid simulation")
    _add_scenario_args(sp)
    sp.add_argument("--process", choices=["circular", "spiral"], default="circular")
    sp.add_argument("--mode", choices=["clean", "confine"], default="clean")
    sp.add_argument("--vs-scale", type=float, default=1.05)
    sp.add_argument("--cycles", type=int, default=3)
    sp.add_argument("--cell-size", type=float, default=0.25)
    sp.add_argument("--dt", type=float, default=0.01)
    sp.add_argument("--halfwidth", type=float)
    sp.add_argument("--max-time", type=float)
    sp.add_argument("--out")

    sp = sub.add_parser("figure", help="CSV data for one figure of the study")
    sp.add_argument("--figure", required=True, choices=list(FIGURE_IDS))
    sp.add_argument("--R0", type=float, default=100.0)
    sp.add_argument("--r", type=float, default=10.0)
    sp.add_argument("--VT", type=float, default=1.0)
    sp.add_argument("--n-values", type=str, help="comma-separated even counts")
    sp.add_argument("--dv-values", type=str, help="comma-separated speed offsets")
    sp.add_argument("--out")

    sp = sub.add_parser("compare", help="circular vs spiral totals at equal speeds")
    sp.add_argument("--R0", type=float, default=100.0)
    sp.add_argument("--r", type=float, default=10.0)
    sp.add_argument("--VT", type=float, default=1.0)
    sp.add_argument("--n-values", type=str)
    sp.add_argument("--dv-values", type=str)
    sp.add_argument("--out")

    sp = sub.add_parser("check", help="closed-form vs iterative consistency grid")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=20240901)

    sp = sub.add_parser("run", help="execute a config file of experiment sections")
    sp.add_argument("config")

    return parser


def _options_from_args(args: argparse.Namespace) -> dict:
    opt = {}
    mapping = {
        "R0": "R0",
        "r": "r",
        "VT": "VT",
        "n": "n",
        "vs": "vs",
        "dv": "dv",
        "rel_tol": "rel_tol",
        "process": "process",
        "mode": "mode",
        "vs_scale": "vs_scale",
        "cycles": "cycles",
        "cell_size": "cell_size",
        "dt": "dt",
        "halfwidth": "halfwidth",
        "max_time": "max_time",
        "figure": "figure",
        "out": "out",
        "count": "count",
        "seed": "seed",
    }
    for attr, key in mapping.items():
        if hasattr(args, attr) and getattr(args, attr) is not None:
            opt[key] = getattr(args, attr)
    for attr, key in (("n_values", "n_values"), ("dv_values", "dv_values")):
        raw = getattr(args, attr, None)
        if raw is not None:
            items = [v.strip() for v in raw.split(",") if v.strip()]
            opt[key] = tuple(int(v) for v in items) if key == "n_values" else tuple(
                float(v) for v in items
            )
    return opt


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "run":
        return run_config(args.config)
    try:
        run_section(args.command, _options_from_args(args))
    except SweepSearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
