"""Technology registry: load published operating points, score, and rank.

The bundled registry (data/technologies.csv) collects nine experimentally
demonstrated cavity-QED interconnect configurations across four qubit
platforms. One record (magnard, superconducting) carries no atomic decay
rate; it is kept for (g, kappa)-plane placement but excluded from every
gamma-dependent computation rather than silently assigned a default.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path

from .errors import DataError, InvalidParameterError
from .metrics import EnvironmentDefaults, MetricSet, evaluate_point
from .regimes import RegimeLabel, RegimeThresholds, classify_regime, coupling_margin

REGISTRY_HEADER = ("name", "qubit_type", "reference", "g_hz", "kappa_hz", "gamma_hz")
GAMMA_MISSING = "gamma-missing"


class QubitType(str, Enum):
    SUPERCONDUCTING = "superconducting"
    NEUTRAL_ATOM = "neutral_atom"
    TRAPPED_ION = "trapped_ion"
    SEMICONDUCTING = "semiconducting"


@dataclass(frozen=True)
class TechnologyRecord:
    """One registry row: a named technology and its measured rates."""

    name: str
    qubit_type: QubitType
    reference: str
    g: float  # Hz
    kappa: float  # Hz
    gamma: float | None = None  # Hz; None when unpublished


@dataclass(frozen=True)
class TechnologyAssessment:
    """Evaluation of one record under a shared environment."""

    record: TechnologyRecord
    metrics: MetricSet | None
    regime: RegimeLabel | None
    margin: float | None
    exclusion_reason: str | None = None


@dataclass(frozen=True)
class BenchmarkReport:
    """Per-record assessments plus the score ranking (names, best first)."""

    entries: tuple[TechnologyAssessment, ...]
    ranking: tuple[str, ...]
    env: EnvironmentDefaults
    thresholds: RegimeThresholds

    def entry(self, name: str) -> TechnologyAssessment:
        for item in self.entries:
            if item.record.name == name:
                return item
        raise KeyError(name)


def bundled_registry_path() -> Path:
    """Filesystem path of the packaged technologies.csv."""
    return Path(resources.files("interlink_dse").joinpath("data/technologies.csv"))


def load_registry(source: str | Path) -> list[TechnologyRecord]:
    """Parse a registry CSV; errors name the offending line.

    Format: UTF-8, header `name,qubit_type,reference,g_hz,kappa_hz,gamma_hz`,
    one technology per row, empty gamma_hz for a missing atomic decay rate,
    scientific notation accepted. A completely empty file is a valid empty
    registry.
    """
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read registry {path}: {exc}") from exc
    if not text.strip():
        return []

    rows = list(csv.reader(text.splitlines()))
    header = tuple(cell.strip() for cell in rows[0])
    if header != REGISTRY_HEADER:
        raise DataError(
            f"{path} line 1: expected header {','.join(REGISTRY_HEADER)}"
        )

    records: list[TechnologyRecord] = []
    seen: set[str] = set()
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(REGISTRY_HEADER):
            raise DataError(f"{path} line {lineno}: expected {len(REGISTRY_HEADER)} fields")
        name, qubit_type, reference, g_s, kappa_s, gamma_s = (c.strip() for c in row)
        if not name:
            raise DataError(f"{path} line {lineno}: empty name")
        if name in seen:
            raise DataError(f"{path} line {lineno}: duplicate name {name!r}")
        seen.add(name)
        try:
            qtype = QubitType(qubit_type)
        except ValueError:
            raise DataError(
                f"{path} line {lineno}: unknown qubit_type {qubit_type!r}"
            ) from None
        g = _parse_rate(path, lineno, "g_hz", g_s)
        kappa = _parse_rate(path, lineno, "kappa_hz", kappa_s)
        gamma = _parse_rate(path, lineno, "gamma_hz", gamma_s) if gamma_s else None
        records.append(
            TechnologyRecord(
                name=name, qubit_type=qtype, reference=reference,
                g=g, kappa=kappa, gamma=gamma,
            )
        )
    return records


def _parse_rate(path: Path, lineno: int, column: str, text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise DataError(f"{path} line {lineno}: {column} is not a number: {text!r}") from None
    if not value > 0.0:
        raise DataError(f"{path} line {lineno}: {column} must be > 0, got {text!r}")
    return value


def write_registry(records: list[TechnologyRecord], path: str | Path) -> None:
    """Serialize records back to the registry CSV format (exact round-trip)."""
    lines = [",".join(REGISTRY_HEADER)]
    for rec in records:
        gamma = repr(rec.gamma) if rec.gamma is not None else ""
        lines.append(
            f"{rec.name},{rec.qubit_type.value},{rec.reference},"
            f"{rec.g!r},{rec.kappa!r},{gamma}"
        )
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def evaluate_registry(
    records: list[TechnologyRecord],
    env: EnvironmentDefaults = EnvironmentDefaults(),
    thresholds: RegimeThresholds = RegimeThresholds(),
) -> BenchmarkReport:
    """Score every record under one shared environment.

    Records without gamma get no metrics, regime, or margin (reason
    `gamma-missing`) and stay out of the ranking; everything else is
    ranked by descending figure of merit with ties broken by name.
    """
    entries = []
    for rec in records:
        if rec.gamma is None:
            entries.append(
                TechnologyAssessment(
                    record=rec, metrics=None, regime=None, margin=None,
                    exclusion_reason=GAMMA_MISSING,
                )
            )
            continue
        metrics = evaluate_point(env.point(rec.g, rec.kappa, rec.gamma), env.alpha)
        entries.append(
            TechnologyAssessment(
                record=rec,
                metrics=metrics,
                regime=classify_regime(rec.g, rec.kappa, rec.gamma, thresholds),
                margin=coupling_margin(rec.g, rec.kappa, rec.gamma),
            )
        )
    ranked = sorted(
        (e for e in entries if e.metrics is not None),
        key=lambda e: (-e.metrics.fom, e.record.name),
    )
    return BenchmarkReport(
        entries=tuple(entries),
        ranking=tuple(e.record.name for e in ranked),
        env=env,
        thresholds=thresholds,
    )


def rank_technologies(report: BenchmarkReport) -> list[TechnologyAssessment]:
    """Assessments in ranking order (descending score, ties by name)."""
    return [report.entry(name) for name in report.ranking]


@dataclass(frozen=True)
class OverlayPoint:
    """One labeled marker for a comparative-figure overlay."""

    name: str
    qubit_type: QubitType
    x: float  # g, Hz
    y: float  # kappa or gamma, Hz


OVERLAY_PLANES = ("gk", "ggamma")


def overlay_points(
    records: list[TechnologyRecord], plane: str
) -> list[OverlayPoint]:
    """Marker positions in the (g, kappa) or (g, gamma) plane.

    Gamma-less records appear only in the (g, kappa) plane.
    """
    if plane not in OVERLAY_PLANES:
        raise InvalidParameterError(
            f"plane must be one of {OVERLAY_PLANES}, got {plane!r}"
        )
    points = []
    for rec in records:
        if plane == "gk":
            points.append(OverlayPoint(rec.name, rec.qubit_type, rec.g, rec.kappa))
        elif rec.gamma is not None:
            points.append(OverlayPoint(rec.name, rec.qubit_type, rec.g, rec.gamma))
    return points
