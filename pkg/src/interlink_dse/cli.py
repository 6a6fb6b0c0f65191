"""Command-line surface: eval, sweep, contour, bench, sens.

Configuration precedence is defaults < config file < flags, with the
INTERLINK_DSE_OUTDIR environment variable overriding the output directory
last. Commands emit plot-ready CSV or JSON; rendering stays downstream
(an optional flag emits a matplotlib script next to the CSV). All file
writes are atomic (write-then-rename) and byte-stable across runs.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import dse
from .benchmark import (
    BenchmarkReport,
    bundled_registry_path,
    evaluate_registry,
    load_registry,
)
from .dse import ContourPolyline, SensitivitySeries, SweepAxis, SweepGrid
from .errors import ConfigurationError, DataError, InvalidParameterError
from .metrics import EnvironmentDefaults, OperatingPoint, evaluate_point
from .regimes import RegimeThresholds

OUTDIR_ENV_VAR = "INTERLINK_DSE_OUTDIR"

GRID_CSV_HEADER = "x_param,x_hz,y_param,y_hz,cooperativity,efficiency,infidelity,latency_s,fom,flags"
CONTOUR_CSV_HEADER = "metric,level,polyline_index,vertex_index,x_hz,y_hz"
BENCH_CSV_HEADER = (
    "rank,name,qubit_type,reference,g_hz,kappa_hz,gamma_hz,cooperativity,"
    "efficiency,infidelity,latency_s,fom,coupling_margin,regime,flags,exclusion_reason"
)
SENS_CSV_HEADER = "series_index,kappa_hz,gamma_hz,strong_threshold_g_hz,g_hz,fom,loglog_slope"

_FLOAT_KEYS = frozenset(
    "alpha kappa-ex igp delta r-threshold t-approx xmin xmax ymin ymax "
    "gmin gmax g kappa gamma g-eff".split()
)
_INT_KEYS = frozenset("xn yn gn workers".split())
_STR_KEYS = frozenset("outdir format registry plane metric levels pairs".split())
_BOOL_KEYS = frozenset(["emit-plot-script"])
_ALL_KEYS = _FLOAT_KEYS | _INT_KEYS | _STR_KEYS | _BOOL_KEYS

_DEFAULTS: dict[str, str | None] = {
    "alpha": "0.5",
    "kappa-ex": "1e6",
    "igp": "1",
    "delta": "2e9",
    "r-threshold": "10",
    "t-approx": "3",
    "outdir": ".",
    "format": "csv",
    "registry": None,
    "plane": "gk",
    "metric": "efficiency",
    "levels": "0.5,0.7,0.8",
    "xmin": None,
    "xmax": None,
    "xn": "200",
    "ymin": None,
    "ymax": None,
    "yn": "200",
    "gmin": "1e4",
    "gmax": "1e12",
    "gn": "200",
    "pairs": "1e4:1e4,1e6:1e6,1e8:1e8",
    "g": None,
    "kappa": None,
    "gamma": None,
    "g-eff": None,
    "workers": "1",
    "emit-plot-script": "false",
}


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved run parameters for one command invocation."""

    env: EnvironmentDefaults
    thresholds: RegimeThresholds
    outdir: Path
    fmt: str
    registry: Path | None
    plane: str
    metric: str
    levels: tuple[float, ...]
    xmin: float | None
    xmax: float | None
    xn: int
    ymin: float | None
    ymax: float | None
    yn: int
    gmin: float
    gmax: float
    gn: int
    pairs: tuple[tuple[float, float], ...]
    g: float | None
    kappa: float | None
    gamma: float | None
    g_eff: float | None
    workers: int
    emit_plot_script: bool


def _read_config_file(path: str) -> dict[str, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(f"cannot read config file {path}: {exc}") from exc
    entries: dict[str, str] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep:
            raise ConfigurationError(f"{path} line {lineno}: expected key=value")
        if key not in _ALL_KEYS:
            raise ConfigurationError(f"unknown config key {key!r} ({path} line {lineno})")
        entries[key] = value.strip()
    return entries


def _coerce_float(key: str, raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise ConfigurationError(f"{key}: not a number: {raw!r}") from None
    if not math.isfinite(value):
        raise ConfigurationError(f"{key}: must be finite, got {raw!r}")
    return value


def _coerce_int(key: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigurationError(f"{key}: not an integer: {raw!r}") from None


def _coerce_bool(key: str, raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise ConfigurationError(f"{key}: not a boolean: {raw!r}")


def _parse_levels(raw: str) -> tuple[float, ...]:
    parts = [p.strip() for p in raw.split(",") if p.strip()]
    if not parts:
        raise ConfigurationError("levels: expected a comma-separated list of numbers")
    return tuple(_coerce_float("levels", p) for p in parts)


def _parse_pairs(raw: str) -> tuple[tuple[float, float], ...]:
    pairs = []
    for part in (p.strip() for p in raw.split(",") if p.strip()):
        kappa_s, sep, gamma_s = part.partition(":")
        if not sep:
            raise ConfigurationError(f"pairs: expected kappa:gamma, got {part!r}")
        kappa = _coerce_float("pairs", kappa_s)
        gamma = _coerce_float("pairs", gamma_s)
        if kappa <= 0.0 or gamma <= 0.0:
            raise ConfigurationError(f"pairs: rates must be > 0, got {part!r}")
        pairs.append((kappa, gamma))
    if not pairs:
        raise ConfigurationError("pairs: expected at least one kappa:gamma pair")
    return tuple(pairs)


def parse_config(
    config_path: str | None, flag_values: dict[str, str | None]
) -> RunConfig:
    """Merge defaults, config file, and flags into a validated RunConfig."""
    raw = dict(_DEFAULTS)
    if config_path is not None:
        raw.update(_read_config_file(config_path))
    for key, value in flag_values.items():
        if value is not None:
            raw[key] = value

    def fval(key: str) -> float | None:
        return None if raw[key] is None else _coerce_float(key, raw[key])

    def ival(key: str) -> int:
        return _coerce_int(key, raw[key])

    try:
        env = EnvironmentDefaults(
            kappa_ex=fval("kappa-ex"),
            i_g_prime=fval("igp"),
            delta=fval("delta"),
            alpha=fval("alpha"),
        )
        thresholds = RegimeThresholds(
            r_much_greater=fval("r-threshold"), t_approx=fval("t-approx")
        )
    except InvalidParameterError as exc:
        raise ConfigurationError(str(exc)) from exc

    fmt = raw["format"]
    if fmt not in ("csv", "json"):
        raise ConfigurationError(f"format: must be csv or json, got {fmt!r}")
    plane = raw["plane"]
    if plane not in ("gk", "ggamma"):
        raise ConfigurationError(f"plane: must be gk or ggamma, got {plane!r}")
    metric = raw["metric"]
    if metric not in ("efficiency", "infidelity", "fom"):
        raise ConfigurationError(
            f"metric: must be efficiency, infidelity, or fom, got {metric!r}"
        )
    workers = ival("workers")
    if workers < 1:
        raise ConfigurationError(f"workers: must be >= 1, got {workers}")

    outdir = Path(os.environ.get(OUTDIR_ENV_VAR) or raw["outdir"])
    return RunConfig(
        env=env,
        thresholds=thresholds,
        outdir=outdir,
        fmt=fmt,
        registry=Path(raw["registry"]) if raw["registry"] else None,
        plane=plane,
        metric=metric,
        levels=_parse_levels(raw["levels"]),
        xmin=fval("xmin"),
        xmax=fval("xmax"),
        xn=ival("xn"),
        ymin=fval("ymin"),
        ymax=fval("ymax"),
        yn=ival("yn"),
        gmin=fval("gmin"),
        gmax=fval("gmax"),
        gn=ival("gn"),
        pairs=_parse_pairs(raw["pairs"]),
        g=fval("g"),
        kappa=fval("kappa"),
        gamma=fval("gamma"),
        g_eff=fval("g-eff"),
        workers=workers,
        emit_plot_script=_coerce_bool("emit-plot-script", raw["emit-plot-script"]),
    )


def _fmt(value: float) -> str:
    # 9 significant digits; comfortably above every comparison tolerance.
    return f"{value:.8e}"


def _flags_text(flags: frozenset[str]) -> str:
    return ";".join(sorted(flags))


def _write_atomic(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(text, encoding="utf-8")
        os.replace(tmp, path)
    except OSError as exc:
        raise DataError(f"cannot write {path}: {exc}") from exc


def grid_csv_text(grid: SweepGrid) -> str:
    """Row-major CSV serialization of a sweep grid (bit-stable)."""
    lines = [GRID_CSV_HEADER]
    xs = grid.x_values
    ys = grid.y_values
    for ix in range(grid.x_axis.count):
        for iy in range(grid.y_axis.count):
            cell = grid.cell(ix, iy)
            lines.append(
                f"{grid.x_axis.parameter},{_fmt(xs[ix])},"
                f"{grid.y_axis.parameter},{_fmt(ys[iy])},"
                f"{_fmt(cell.cooperativity)},{_fmt(cell.efficiency)},"
                f"{_fmt(cell.infidelity)},{_fmt(cell.latency)},{_fmt(cell.fom)},"
                f"{_flags_text(cell.flags)}"
            )
    return "\n".join(lines) + "\n"


def write_grid_csv(grid: SweepGrid, path: Path) -> None:
    _write_atomic(path, grid_csv_text(grid))


def _grid_json_obj(grid: SweepGrid) -> dict:
    return {
        "x_param": grid.x_axis.parameter,
        "y_param": grid.y_axis.parameter,
        "fixed_parameter": grid.fixed_parameter,
        "fixed_hz": grid.fixed_value,
        "environment": {
            "kappa_ex": grid.env.kappa_ex,
            "i_g_prime": grid.env.i_g_prime,
            "delta": grid.env.delta,
            "alpha": grid.env.alpha,
        },
        "x_hz": [float(v) for v in grid.x_values],
        "y_hz": [float(v) for v in grid.y_values],
        "cells": [
            {
                "ix": ix,
                "iy": iy,
                "cooperativity": cell.cooperativity,
                "efficiency": cell.efficiency,
                "infidelity": cell.infidelity,
                "latency_s": cell.latency,
                "fom": cell.fom,
                "flags": sorted(cell.flags),
            }
            for ix, row in enumerate(grid.values)
            for iy, cell in enumerate(row)
        ],
    }


def contour_csv_text(polylines: list[ContourPolyline]) -> str:
    lines = [CONTOUR_CSV_HEADER]
    for pidx, poly in enumerate(polylines):
        for vidx, (x, y) in enumerate(poly.vertices):
            lines.append(
                f"{poly.metric},{_fmt(poly.level)},{pidx},{vidx},{_fmt(x)},{_fmt(y)}"
            )
    return "\n".join(lines) + "\n"


def bench_csv_text(report: BenchmarkReport) -> str:
    lines = [BENCH_CSV_HEADER]
    ranked = {name: pos + 1 for pos, name in enumerate(report.ranking)}
    ordered = sorted(
        report.entries,
        key=lambda e: (ranked.get(e.record.name, len(ranked) + 1), e.record.name),
    )
    for entry in ordered:
        rec = entry.record
        m = entry.metrics
        lines.append(
            ",".join(
                [
                    str(ranked.get(rec.name, "")),
                    rec.name,
                    rec.qubit_type.value,
                    f'"{rec.reference}"',
                    _fmt(rec.g),
                    _fmt(rec.kappa),
                    _fmt(rec.gamma) if rec.gamma is not None else "",
                    _fmt(m.cooperativity) if m else "",
                    _fmt(m.efficiency) if m else "",
                    _fmt(m.infidelity) if m else "",
                    _fmt(m.latency) if m else "",
                    _fmt(m.fom) if m else "",
                    _fmt(entry.margin) if entry.margin is not None else "",
                    entry.regime.regime.value if entry.regime else "",
                    _flags_text(m.flags) if m else "",
                    entry.exclusion_reason or "",
                ]
            )
        )
    return "\n".join(lines) + "\n"


def sens_csv_text(series: list[SensitivitySeries]) -> str:
    lines = [SENS_CSV_HEADER]
    for sidx, s in enumerate(series):
        for g, fom, slope in zip(s.g_values, s.fom_values, s.loglog_slopes):
            lines.append(
                f"{sidx},{_fmt(s.kappa)},{_fmt(s.gamma)},{_fmt(s.strong_threshold_g)},"
                f"{_fmt(g)},{_fmt(fom)},{_fmt(slope)}"
            )
    return "\n".join(lines) + "\n"


def _write_json(path: Path, obj: object) -> None:
    _write_atomic(path, json.dumps(obj, indent=2) + "\n")


_PLOT_TEMPLATES = {
    "sweep": """\
import csv
import math
import matplotlib.pyplot as plt

xs, ys, fom = [], [], []
with open({csv_name!r}, newline="") as fh:
    for row in csv.DictReader(fh):
        xs.append(float(row["x_hz"]))
        ys.append(float(row["y_hz"]))
        fom.append(float(row["fom"]))

fig, ax = plt.subplots()
sc = ax.scatter(xs, ys, c=[math.log10(abs(v)) if v else 0.0 for v in fom], s=4)
ax.set_xscale("log")
ax.set_yscale("log")
ax.set_xlabel("x (Hz)")
ax.set_ylabel("y (Hz)")
fig.colorbar(sc, label="log10 |figure of merit|")
fig.savefig({png_name!r}, dpi=200)
print("wrote", {png_name!r})
""",
    "contour": """\
import csv
from collections import defaultdict
import matplotlib.pyplot as plt

curves = defaultdict(list)
with open({csv_name!r}, newline="") as fh:
    for row in csv.DictReader(fh):
        key = (row["level"], int(row["polyline_index"]))
        curves[key].append((float(row["x_hz"]), float(row["y_hz"])))

fig, ax = plt.subplots()
for (level, _), pts in sorted(curves.items()):
    ax.plot([p[0] for p in pts], [p[1] for p in pts], label=f"level {{level}}")
ax.set_xscale("log")
ax.set_yscale("log")
ax.set_xlabel("x (Hz)")
ax.set_ylabel("y (Hz)")
ax.legend()
fig.savefig({png_name!r}, dpi=200)
print("wrote", {png_name!r})
""",
    "bench": """\
import csv
import matplotlib.pyplot as plt

fig, ax = plt.subplots()
with open({csv_name!r}, newline="") as fh:
    for row in csv.DictReader(fh):
        ax.scatter(float(row["g_hz"]), float(row["kappa_hz"]), s=20)
        ax.annotate(row["name"], (float(row["g_hz"]), float(row["kappa_hz"])), fontsize=7)
ax.set_xscale("log")
ax.set_yscale("log")
ax.set_xlabel("g (Hz)")
ax.set_ylabel("kappa (Hz)")
fig.savefig({png_name!r}, dpi=200)
print("wrote", {png_name!r})
""",
    "sens": """\
import csv
from collections import defaultdict
import matplotlib.pyplot as plt

series = defaultdict(list)
with open({csv_name!r}, newline="") as fh:
    for row in csv.DictReader(fh):
        series[row["series_index"]].append((float(row["g_hz"]), float(row["fom"])))

fig, ax = plt.subplots()
for idx, pts in sorted(series.items()):
    ax.plot([p[0] for p in pts], [p[1] for p in pts], label=f"series {{idx}}")
ax.set_xscale("log")
ax.set_yscale("log")
ax.set_xlabel("g (Hz)")
ax.set_ylabel("figure of merit (1/s)")
ax.legend()
fig.savefig({png_name!r}, dpi=200)
print("wrote", {png_name!r})
""",
}


def _maybe_emit_plot_script(cfg: RunConfig, command: str, csv_path: Path) -> None:
    if not cfg.emit_plot_script:
        return
    if cfg.fmt != "csv":
        raise ConfigurationError("--emit-plot-script requires --format csv")
    script = _PLOT_TEMPLATES[command].format(
        csv_name=csv_path.name, png_name=csv_path.with_suffix(".png").name
    )
    path = csv_path.with_name(f"plot_{csv_path.stem}.py")
    _write_atomic(path, script)
    print(f"wrote {path}")


def _build_grid(cfg: RunConfig) -> SweepGrid:
    if cfg.plane == "gk":
        y_param = "kappa"
        y_bounds = dse.DEFAULT_KAPPA_BOUNDS
        fixed = cfg.gamma if cfg.gamma is not None else 1.0e6
    else:
        y_param = "gamma"
        y_bounds = dse.DEFAULT_GAMMA_BOUNDS
        fixed = cfg.kappa if cfg.kappa is not None else 1.0e6
    x_axis = SweepAxis(
        "g",
        cfg.xmin if cfg.xmin is not None else dse.DEFAULT_G_BOUNDS[0],
        cfg.xmax if cfg.xmax is not None else dse.DEFAULT_G_BOUNDS[1],
        cfg.xn,
    )
    y_axis = SweepAxis(
        y_param,
        cfg.ymin if cfg.ymin is not None else y_bounds[0],
        cfg.ymax if cfg.ymax is not None else y_bounds[1],
        cfg.yn,
    )
    return dse.sweep_2d(x_axis, y_axis, fixed, cfg.env, workers=cfg.workers)


def cmd_eval(cfg: RunConfig) -> None:
    if cfg.g is None or cfg.kappa is None or cfg.gamma is None:
        raise ConfigurationError("eval requires --g, --kappa, and --gamma")
    point = OperatingPoint(
        g=cfg.g,
        kappa=cfg.kappa,
        gamma=cfg.gamma,
        kappa_ex=cfg.env.kappa_ex,
        i_g_prime=cfg.env.i_g_prime,
        delta=cfg.env.delta,
        g_eff=cfg.g_eff,
    )
    metrics = evaluate_point(point, cfg.env.alpha)
    print(f"cooperativity = {_fmt(metrics.cooperativity)}")
    print(f"efficiency = {_fmt(metrics.efficiency)}")
    print(f"infidelity = {_fmt(metrics.infidelity)}")
    print(f"latency_s = {_fmt(metrics.latency)}")
    print(f"fom = {_fmt(metrics.fom)}")
    print(f"flags = {_flags_text(metrics.flags)}")


def cmd_sweep(cfg: RunConfig) -> None:
    grid = _build_grid(cfg)
    path = cfg.outdir / f"sweep_{cfg.plane}.{cfg.fmt}"
    if cfg.fmt == "csv":
        write_grid_csv(grid, path)
    else:
        _write_json(path, _grid_json_obj(grid))
    print(f"wrote {path}")
    _maybe_emit_plot_script(cfg, "sweep", path)


def cmd_contour(cfg: RunConfig) -> None:
    grid = _build_grid(cfg)
    polylines = dse.extract_contours(grid, cfg.metric, cfg.levels)
    path = cfg.outdir / f"contour_{cfg.metric}.{cfg.fmt}"
    if cfg.fmt == "csv":
        _write_atomic(path, contour_csv_text(polylines))
    else:
        _write_json(
            path,
            {
                "metric": cfg.metric,
                "levels": list(cfg.levels),
                "polylines": [
                    {"level": p.level, "vertices": [list(v) for v in p.vertices]}
                    for p in polylines
                ],
            },
        )
    print(f"wrote {path}")
    _maybe_emit_plot_script(cfg, "contour", path)


def cmd_bench(cfg: RunConfig) -> None:
    registry = cfg.registry if cfg.registry is not None else bundled_registry_path()
    records = load_registry(registry)
    report = evaluate_registry(records, cfg.env, cfg.thresholds)
    path = cfg.outdir / f"bench.{cfg.fmt}"
    if cfg.fmt == "csv":
        _write_atomic(path, bench_csv_text(report))
    else:
        _write_json(
            path,
            {
                "ranking": list(report.ranking),
                "entries": [
                    {
                        "name": e.record.name,
                        "qubit_type": e.record.qubit_type.value,
                        "reference": e.record.reference,
                        "g_hz": e.record.g,
                        "kappa_hz": e.record.kappa,
                        "gamma_hz": e.record.gamma,
                        "metrics": None
                        if e.metrics is None
                        else {
                            "cooperativity": e.metrics.cooperativity,
                            "efficiency": e.metrics.efficiency,
                            "infidelity": e.metrics.infidelity,
                            "latency_s": e.metrics.latency,
                            "fom": e.metrics.fom,
                            "flags": sorted(e.metrics.flags),
                        },
                        "coupling_margin": e.margin,
                        "regime": e.regime.regime.value if e.regime else None,
                        "exclusion_reason": e.exclusion_reason,
                    }
                    for e in report.entries
                ],
            },
        )
    print(f"wrote {path}")
    _maybe_emit_plot_script(cfg, "bench", path)


def cmd_sens(cfg: RunConfig) -> None:
    axis = SweepAxis("g", cfg.gmin, cfg.gmax, cfg.gn)
    series = dse.sensitivity_curves(
        cfg.pairs, axis, cfg.env, cfg.thresholds.r_much_greater
    )
    path = cfg.outdir / f"sens.{cfg.fmt}"
    if cfg.fmt == "csv":
        _write_atomic(path, sens_csv_text(series))
    else:
        _write_json(
            path,
            [
                {
                    "kappa_hz": s.kappa,
                    "gamma_hz": s.gamma,
                    "strong_threshold_g_hz": s.strong_threshold_g,
                    "g_hz": list(s.g_values),
                    "fom": list(s.fom_values),
                    "loglog_slope": [
                        None if math.isnan(v) else v for v in s.loglog_slopes
                    ],
                }
                for s in series
            ],
        )
    print(f"wrote {path}")
    _maybe_emit_plot_script(cfg, "sens", path)


_COMMANDS = {
    "eval": cmd_eval,
    "sweep": cmd_sweep,
    "contour": cmd_contour,
    "bench": cmd_bench,
    "sens": cmd_sens,
}


class _Parser(argparse.ArgumentParser):
    # Raise instead of argparse's default sys.exit(2); bad usage is a
    # configuration error and must map to exit code 1.
    def error(self, message: str) -> None:  # type: ignore[override]
        raise ConfigurationError(message)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="flat key=value config file")
    parser.add_argument("--outdir", help="output directory (default: current)")
    parser.add_argument("--format", help="output format: csv or json")
    parser.add_argument("--alpha", help="efficiency weighting, in (0,1)")
    parser.add_argument("--kappa-ex", help="external cavity decay rate, Hz")
    parser.add_argument("--igp", help="intrinsic imperfection rate I_g', Hz")
    parser.add_argument("--delta", help="qubit-cavity detuning, Hz")
    parser.add_argument("--r-threshold", help="'much greater' ratio threshold")
    parser.add_argument("--t-approx", help="'comparable' ratio threshold")
    parser.add_argument("--workers", help="parallel row workers for sweeps")
    parser.add_argument(
        "--emit-plot-script",
        action="store_const",
        const="true",
        help="also write a matplotlib script next to the CSV",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="interlink-dse",
        description="Figure-of-merit design-space exploration for cavity-mediated interconnects",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate metrics at a single operating point")
    _add_common_flags(p_eval)
    p_eval.add_argument("--g", help="coupling strength, Hz")
    p_eval.add_argument("--kappa", help="total cavity decay rate, Hz")
    p_eval.add_argument("--gamma", help="atomic decay rate, Hz")
    p_eval.add_argument("--g-eff", help="effective coupling for latency, Hz (default: g)")

    p_sweep = sub.add_parser("sweep", help="dense metric grid over a parameter plane")
    _add_common_flags(p_sweep)
    p_sweep.add_argument("--plane", help="gk (g vs kappa) or ggamma (g vs gamma)")
    p_sweep.add_argument("--xmin", help="g axis minimum, Hz")
    p_sweep.add_argument("--xmax", help="g axis maximum, Hz")
    p_sweep.add_argument("--xn", help="g axis point count")
    p_sweep.add_argument("--ymin", help="y axis minimum, Hz")
    p_sweep.add_argument("--ymax", help="y axis maximum, Hz")
    p_sweep.add_argument("--yn", help="y axis point count")
    p_sweep.add_argument("--kappa", help="fixed kappa for the ggamma plane, Hz")
    p_sweep.add_argument("--gamma", help="fixed gamma for the gk plane, Hz")

    p_contour = sub.add_parser("contour", help="iso-level curves of one metric")
    _add_common_flags(p_contour)
    p_contour.add_argument("--metric", help="efficiency, infidelity, or fom")
    p_contour.add_argument("--levels", help="comma-separated iso levels")
    p_contour.add_argument("--plane", help="gk or ggamma")
    p_contour.add_argument("--xmin", help="g axis minimum, Hz")
    p_contour.add_argument("--xmax", help="g axis maximum, Hz")
    p_contour.add_argument("--xn", help="g axis point count")
    p_contour.add_argument("--ymin", help="y axis minimum, Hz")
    p_contour.add_argument("--ymax", help="y axis maximum, Hz")
    p_contour.add_argument("--yn", help="y axis point count")
    p_contour.add_argument("--kappa", help="fixed kappa for the ggamma plane, Hz")
    p_contour.add_argument("--gamma", help="fixed gamma for the gk plane, Hz")

    p_bench = sub.add_parser("bench", help="evaluate and rank the technology registry")
    _add_common_flags(p_bench)
    p_bench.add_argument("--registry", help="registry CSV path (default: bundled)")

    p_sens = sub.add_parser("sens", help="figure-of-merit sensitivity to g")
    _add_common_flags(p_sens)
    p_sens.add_argument("--pairs", help='kappa:gamma pairs, e.g. "1e4:1e4,1e6:1e6"')
    p_sens.add_argument("--gmin", help="g axis minimum, Hz")
    p_sens.add_argument("--gmax", help="g axis maximum, Hz")
    p_sens.add_argument("--gn", help="g axis point count")

    return parser


def _flag_dict(args: argparse.Namespace) -> dict[str, str | None]:
    return {
        key: getattr(args, key.replace("-", "_"), None)
        for key in _ALL_KEYS
    }


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = parse_config(args.config, _flag_dict(args))
        _COMMANDS[args.command](cfg)
    except (ConfigurationError, InvalidParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
