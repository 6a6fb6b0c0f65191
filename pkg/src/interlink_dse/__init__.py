"""Design-space exploration and benchmarking for cavity-mediated quantum interconnects."""

from .benchmark import (
    GAMMA_MISSING,
    BenchmarkReport,
    OverlayPoint,
    QubitType,
    TechnologyAssessment,
    TechnologyRecord,
    bundled_registry_path,
    evaluate_registry,
    load_registry,
    overlay_points,
    rank_technologies,
    write_registry,
)
from .dse import (
    ContourPolyline,
    OptimalRegion,
    SensitivitySeries,
    SweepAxis,
    SweepGrid,
    extract_contours,
    find_optimal_region,
    interpolate_metric,
    log_grid,
    loglog_slope,
    sensitivity_curves,
    sweep_2d,
)
from .errors import ConfigurationError, DataError, InterlinkError, InvalidParameterError
from .metrics import (
    FLAG_EXCEEDS_UNITY,
    FLAG_EXTERNAL_EXCEEDS_TOTAL,
    EnvironmentDefaults,
    MetricSet,
    OperatingPoint,
    PhysicalCavityParams,
    cooperativity,
    coupling_from_physical,
    efficiency,
    efficiency_flags,
    evaluate_point,
    figure_of_merit,
    infidelity,
    latency,
)
from .regimes import (
    Regime,
    RegimeLabel,
    RegimeThresholds,
    classify_regime,
    coupling_margin,
)

__version__ = "0.1.0"

__all__ = [
    "BenchmarkReport",
    "ConfigurationError",
    "ContourPolyline",
    "DataError",
    "EnvironmentDefaults",
    "FLAG_EXCEEDS_UNITY",
    "FLAG_EXTERNAL_EXCEEDS_TOTAL",
    "GAMMA_MISSING",
    "InterlinkError",
    "InvalidParameterError",
    "MetricSet",
    "OperatingPoint",
    "OptimalRegion",
    "OverlayPoint",
    "PhysicalCavityParams",
    "QubitType",
    "Regime",
    "RegimeLabel",
    "RegimeThresholds",
    "SensitivitySeries",
    "SweepAxis",
    "SweepGrid",
    "TechnologyAssessment",
    "TechnologyRecord",
    "bundled_registry_path",
    "classify_regime",
    "cooperativity",
    "coupling_from_physical",
    "coupling_margin",
    "efficiency",
    "efficiency_flags",
    "evaluate_point",
    "evaluate_registry",
    "extract_contours",
    "figure_of_merit",
    "find_optimal_region",
    "infidelity",
    "interpolate_metric",
    "latency",
    "load_registry",
    "log_grid",
    "loglog_slope",
    "overlay_points",
    "rank_technologies",
    "sensitivity_curves",
    "sweep_2d",
    "write_registry",
]
