"""Grid sweeps, iso-contour extraction, optimal regions, sensitivity curves.

All axes are logarithmic. Contouring runs marching squares in
(log10 x, log10 y) coordinates with linear interpolation of the metric
along cell edges; interpolating in linear space instead would distort
contours across the many decades every sweep spans.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ConfigurationError, InvalidParameterError
from .metrics import EnvironmentDefaults, MetricSet, OperatingPoint, evaluate_point

SWEEPABLE_PARAMETERS = ("g", "kappa", "gamma")
METRIC_FIELDS = ("cooperativity", "efficiency", "infidelity", "latency", "fom")

# Default figure-reproduction grids; they cover every technology overlay point.
DEFAULT_GRID_COUNT = 200
DEFAULT_G_BOUNDS = (1.0e4, 1.0e12)  # Hz
DEFAULT_KAPPA_BOUNDS = (1.0e4, 1.0e10)  # Hz
DEFAULT_GAMMA_BOUNDS = (1.0e4, 1.0e10)  # Hz


def log_grid(minimum: float, maximum: float, count: int) -> np.ndarray:
    """Geometrically spaced samples with exact endpoints."""
    if not (
        math.isfinite(minimum)
        and math.isfinite(maximum)
        and 0.0 < minimum < maximum
    ):
        raise InvalidParameterError(
            f"log grid needs 0 < min < max, got min={minimum!r} max={maximum!r}"
        )
    if count < 2:
        raise InvalidParameterError(f"log grid needs count >= 2, got {count!r}")
    return np.geomspace(minimum, maximum, num=count)


@dataclass(frozen=True)
class SweepAxis:
    """One logarithmic sweep axis over g, kappa, or gamma."""

    parameter: str
    minimum: float  # Hz
    maximum: float  # Hz
    count: int

    def __post_init__(self) -> None:
        if self.parameter not in SWEEPABLE_PARAMETERS:
            raise ConfigurationError(
                f"axis parameter must be one of {SWEEPABLE_PARAMETERS}, got {self.parameter!r}"
            )
        # Re-use log_grid validation for bounds / count.
        log_grid(self.minimum, self.maximum, self.count)

    def values(self) -> np.ndarray:
        return log_grid(self.minimum, self.maximum, self.count)


@dataclass(frozen=True)
class SweepGrid:
    """Dense metric evaluation over an x-y parameter plane.

    values[ix][iy] holds the MetricSet at (x_values[ix], y_values[iy]);
    every cell's inputs are reconstructible through point().
    """

    x_axis: SweepAxis
    y_axis: SweepAxis
    fixed_parameter: str
    fixed_value: float  # Hz
    env: EnvironmentDefaults
    values: tuple[tuple[MetricSet, ...], ...]

    @property
    def x_values(self) -> np.ndarray:
        return self.x_axis.values()

    @property
    def y_values(self) -> np.ndarray:
        return self.y_axis.values()

    def point(self, ix: int, iy: int) -> OperatingPoint:
        """Reconstruct the operating point evaluated at node (ix, iy)."""
        rates = {self.fixed_parameter: self.fixed_value}
        rates[self.x_axis.parameter] = float(self.x_values[ix])
        rates[self.y_axis.parameter] = float(self.y_values[iy])
        return self.env.point(**rates)

    def cell(self, ix: int, iy: int) -> MetricSet:
        return self.values[ix][iy]

    def metric(self, name: str) -> np.ndarray:
        """Dense (count_x, count_y) matrix of one metric field, read-only."""
        if name not in METRIC_FIELDS:
            raise ConfigurationError(
                f"unknown metric {name!r}; expected one of {METRIC_FIELDS}"
            )
        cache = self.__dict__.get("_metric_cache")
        if cache is None:
            cache = {}
            object.__setattr__(self, "_metric_cache", cache)
        if name not in cache:
            matrix = np.array(
                [[getattr(cell, name) for cell in row] for row in self.values],
                dtype=float,
            )
            matrix.setflags(write=False)
            cache[name] = matrix
        return cache[name]


def sweep_2d(
    x_axis: SweepAxis,
    y_axis: SweepAxis,
    fixed_value: float,
    env: EnvironmentDefaults = EnvironmentDefaults(),
    workers: int = 1,
) -> SweepGrid:
    """Evaluate every node of the (x_axis, y_axis) plane.

    fixed_value supplies whichever of g/kappa/gamma is not swept. Rows may
    be computed by parallel workers; assembly is by row index, so the
    matrix is bit-identical regardless of schedule.
    """
    if x_axis.parameter == y_axis.parameter:
        raise ConfigurationError(
            f"sweep axes must address distinct parameters, both are {x_axis.parameter!r}"
        )
    if workers < 1:
        raise ConfigurationError(f"workers must be >= 1, got {workers!r}")
    fixed_parameter = next(
        p for p in SWEEPABLE_PARAMETERS if p not in (x_axis.parameter, y_axis.parameter)
    )
    xs = x_axis.values()
    ys = y_axis.values()

    def eval_row(x: float) -> tuple[MetricSet, ...]:
        rates = {fixed_parameter: fixed_value}
        row = []
        for y in ys:
            rates[x_axis.parameter] = float(x)
            rates[y_axis.parameter] = float(y)
            row.append(evaluate_point(env.point(**rates), env.alpha))
        return tuple(row)

    if workers == 1:
        rows = [eval_row(float(x)) for x in xs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(eval_row, (float(x) for x in xs)))

    return SweepGrid(
        x_axis=x_axis,
        y_axis=y_axis,
        fixed_parameter=fixed_parameter,
        fixed_value=fixed_value,
        env=env,
        values=tuple(rows),
    )


@dataclass(frozen=True)
class ContourPolyline:
    """Iso-level curve of one metric; vertices are (x, y) pairs in Hz."""

    metric: str
    level: float
    vertices: tuple[tuple[float, float], ...]

    @property
    def closed(self) -> bool:
        return len(self.vertices) > 2 and self.vertices[0] == self.vertices[-1]


def _edge_crossing(level, ua, va, fa, ub, vb, fb):
    # Linear interpolation of the metric along one cell edge in log coords.
    t = (level - fa) / (fb - fa)
    return (ua + t * (ub - ua), va + t * (vb - va))


def _cell_segment_edges(inside, center_inside):
    """Local contour segments for one cell as pairs of edge slots.

    inside = (c00, c10, c11, c01) corner states; slots are b/r/t/l. Saddle
    cells (both diagonals inside) are disambiguated by the cell-center
    state, which keeps refinement consistent and deterministic.
    """
    c00, c10, c11, c01 = inside
    crossed = {
        "b": c00 != c10,
        "r": c10 != c11,
        "t": c01 != c11,
        "l": c00 != c01,
    }
    hit = [slot for slot in ("b", "r", "t", "l") if crossed[slot]]
    if len(hit) == 0:
        return []
    if len(hit) == 2:
        return [(hit[0], hit[1])]
    # Saddle: all four edges crossed.
    if c00 and c11:
        return [("b", "r"), ("l", "t")] if center_inside else [("b", "l"), ("r", "t")]
    return [("b", "l"), ("r", "t")] if center_inside else [("b", "r"), ("l", "t")]


def extract_contours(
    grid: SweepGrid, metric: str, levels: Iterable[float]
) -> list[ContourPolyline]:
    """Marching-squares iso-contours of one metric in log-log coordinates.

    Crossing points are computed once per shared cell edge, so adjacent
    cells join exactly and segment chaining can match endpoints by edge
    identity. Output is sorted by level, then by starting vertex.
    """
    field = grid.metric(metric)
    us = np.log10(grid.x_values)
    vs = np.log10(grid.y_values)
    nx, ny = field.shape

    polylines: list[ContourPolyline] = []
    for level in levels:
        if not math.isfinite(level):
            raise InvalidParameterError(f"contour level must be finite, got {level!r}")
        inside = field > level

        # Crossing point per grid edge, keyed by edge identity.
        crossings: dict[tuple, tuple[float, float]] = {}

        def crossing(kind: str, i: int, j: int) -> tuple:
            key = (kind, i, j)
            if key not in crossings:
                if kind == "h":  # from node (i, j) to (i+1, j)
                    crossings[key] = _edge_crossing(
                        level, us[i], vs[j], field[i, j], us[i + 1], vs[j], field[i + 1, j]
                    )
                else:  # "v": from node (i, j) to (i, j+1)
                    crossings[key] = _edge_crossing(
                        level, us[i], vs[j], field[i, j], us[i], vs[j + 1], field[i, j + 1]
                    )
            return key

        segments: list[tuple[tuple, tuple]] = []
        for i in range(nx - 1):
            for j in range(ny - 1):
                states = (
                    inside[i, j],
                    inside[i + 1, j],
                    inside[i + 1, j + 1],
                    inside[i, j + 1],
                )
                if all(states) or not any(states):
                    continue
                center = 0.25 * (
                    field[i, j] + field[i + 1, j] + field[i + 1, j + 1] + field[i, j + 1]
                )
                slot_key = {
                    "b": ("h", i, j),
                    "t": ("h", i, j + 1),
                    "l": ("v", i, j),
                    "r": ("v", i + 1, j),
                }
                for slot_a, slot_b in _cell_segment_edges(states, center > level):
                    key_a = crossing(*slot_key[slot_a])
                    key_b = crossing(*slot_key[slot_b])
                    segments.append((key_a, key_b))

        polylines.extend(
            _chain_segments(segments, crossings, metric, float(level))
        )

    polylines.sort(key=lambda p: (p.level, p.vertices[0]))
    return polylines


def _chain_segments(segments, crossings, metric, level) -> list[ContourPolyline]:
    """Join cell segments into polylines; open paths first, then loops."""
    adjacency: dict[tuple, list[int]] = {}
    for idx, (a, b) in enumerate(segments):
        adjacency.setdefault(a, []).append(idx)
        adjacency.setdefault(b, []).append(idx)

    used = [False] * len(segments)

    def walk(start: tuple) -> list[tuple]:
        path = [start]
        node = start
        while True:
            pending = [idx for idx in adjacency[node] if not used[idx]]
            if not pending:
                return path
            idx = min(pending)
            used[idx] = True
            a, b = segments[idx]
            node = b if a == node else a
            path.append(node)

    polylines = []
    endpoints = sorted(k for k, ids in adjacency.items() if len(ids) == 1)
    for start in endpoints:
        if all(used[idx] for idx in adjacency[start]):
            continue
        polylines.append(walk(start))
    for start in sorted(adjacency):
        if all(used[idx] for idx in adjacency[start]):
            continue
        polylines.append(walk(start))  # remaining components are closed loops

    result = []
    for node_path in polylines:
        verts = [
            (10.0 ** crossings[key][0], 10.0 ** crossings[key][1]) for key in node_path
        ]
        if verts[0] != verts[-1] and verts[-1] < verts[0]:
            verts.reverse()
        result.append(ContourPolyline(metric=metric, level=level, vertices=tuple(verts)))
    return result


def interpolate_metric(grid: SweepGrid, metric: str, x: float, y: float) -> float:
    """Bilinear interpolation of a metric in (log10 x, log10 y) space."""
    field = grid.metric(metric)
    us = np.log10(grid.x_values)
    vs = np.log10(grid.y_values)
    u = math.log10(x)
    v = math.log10(y)
    if not (us[0] <= u <= us[-1] and vs[0] <= v <= vs[-1]):
        raise InvalidParameterError(f"point ({x!r}, {y!r}) lies outside the grid")
    i = min(int(np.searchsorted(us, u, side="right")) - 1, len(us) - 2)
    j = min(int(np.searchsorted(vs, v, side="right")) - 1, len(vs) - 2)
    i = max(i, 0)
    j = max(j, 0)
    fu = (u - us[i]) / (us[i + 1] - us[i])
    fv = (v - vs[j]) / (vs[j + 1] - vs[j])
    return float(
        field[i, j] * (1 - fu) * (1 - fv)
        + field[i + 1, j] * fu * (1 - fv)
        + field[i, j + 1] * (1 - fu) * fv
        + field[i + 1, j + 1] * fu * fv
    )


@dataclass(frozen=True)
class OptimalRegion:
    """Nodes meeting the efficiency/infidelity thresholds, plus the argmax node."""

    cells: tuple[tuple[int, int], ...]  # (ix, iy), row-major
    best_cell: tuple[int, int]  # node of maximum figure of merit


def find_optimal_region(
    grid: SweepGrid, eff_min: float, inf_max: float
) -> OptimalRegion:
    """Exhaustive scan for nodes with efficiency >= eff_min and infidelity <= inf_max.

    The argmax-fom node is reported even when the threshold region is empty;
    ties resolve to the first node in row-major order.
    """
    if not (math.isfinite(eff_min) and math.isfinite(inf_max)):
        raise InvalidParameterError("thresholds must be finite")
    eff = grid.metric("efficiency")
    inf = grid.metric("infidelity")
    fom = grid.metric("fom")
    qualifying = [
        (ix, iy)
        for ix in range(eff.shape[0])
        for iy in range(eff.shape[1])
        if eff[ix, iy] >= eff_min and inf[ix, iy] <= inf_max
    ]
    best_flat = int(np.argmax(fom))
    best = (best_flat // fom.shape[1], best_flat % fom.shape[1])
    return OptimalRegion(cells=tuple(qualifying), best_cell=best)


def loglog_slope(xs: Sequence[float], ys: Sequence[float]) -> np.ndarray:
    """Slopes d(ln y)/d(ln x): central differences, one-sided at the ends."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.ndim != 1 or x.shape != y.shape or x.size < 2:
        raise InvalidParameterError("loglog_slope needs equal-length 1-d data, >= 2 points")
    if np.any(x <= 0.0) or np.any(np.diff(x) <= 0.0):
        raise InvalidParameterError("xs must be positive and strictly ascending")
    if np.any(y <= 0.0) or not np.all(np.isfinite(y)):
        raise InvalidParameterError("ys must be positive (log-log slope undefined otherwise)")
    lx = np.log(x)
    ly = np.log(y)
    slopes = np.empty_like(lx)
    slopes[0] = (ly[1] - ly[0]) / (lx[1] - lx[0])
    slopes[-1] = (ly[-1] - ly[-2]) / (lx[-1] - lx[-2])
    if lx.size > 2:
        slopes[1:-1] = (ly[2:] - ly[:-2]) / (lx[2:] - lx[:-2])
    return slopes


@dataclass(frozen=True)
class SensitivitySeries:
    """Figure of merit along a g axis for one fixed (kappa, gamma) pair.

    Slopes are NaN wherever the score is non-positive (log undefined);
    strong_threshold_g marks R * max(kappa, gamma), the coupling strength
    beyond which the point would classify as strongly coupled.
    """

    kappa: float  # Hz
    gamma: float  # Hz
    g_values: tuple[float, ...]
    fom_values: tuple[float, ...]
    strong_threshold_g: float  # Hz
    loglog_slopes: tuple[float, ...]


def sensitivity_curves(
    pairs: Sequence[tuple[float, float]],
    g_axis: SweepAxis,
    env: EnvironmentDefaults = EnvironmentDefaults(),
    r_much_greater: float = 10.0,
) -> list[SensitivitySeries]:
    """Score-versus-g curve for each (kappa, gamma) pair on the given axis."""
    if g_axis.parameter != "g":
        raise ConfigurationError(
            f"sensitivity sweeps run along g, got axis over {g_axis.parameter!r}"
        )
    gs = g_axis.values()
    series = []
    for kappa, gamma in pairs:
        foms = np.array(
            [
                evaluate_point(env.point(float(g), kappa, gamma), env.alpha).fom
                for g in gs
            ]
        )
        slopes = _masked_loglog_slopes(gs, foms)
        series.append(
            SensitivitySeries(
                kappa=kappa,
                gamma=gamma,
                g_values=tuple(float(g) for g in gs),
                fom_values=tuple(float(f) for f in foms),
                strong_threshold_g=r_much_greater * max(kappa, gamma),
                loglog_slopes=tuple(float(s) for s in slopes),
            )
        )
    return series


def _masked_loglog_slopes(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """loglog_slope over maximal runs of positive ys; NaN elsewhere."""
    slopes = np.full(ys.shape, np.nan)
    positive = ys > 0.0
    start = None
    for idx in range(ys.size + 1):
        inside = idx < ys.size and positive[idx]
        if inside and start is None:
            start = idx
        elif not inside and start is not None:
            if idx - start >= 2:
                slopes[start:idx] = loglog_slope(xs[start:idx], ys[start:idx])
            start = None
    return slopes
