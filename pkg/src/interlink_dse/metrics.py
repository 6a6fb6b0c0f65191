"""Closed-form transfer metrics for a single qubit-cavity operating point.

All rates (g, kappa, gamma, kappa_ex, i_g_prime, delta) are plain decay /
coupling rates in Hz; no angular-frequency conversion happens anywhere.
Latency comes out in seconds, the figure of merit in 1/seconds on a
relative scale: the infidelity and latency expressions are proportionality
relations whose constants are fixed to 1, so the score is only meaningful
for comparisons between operating points, never as an absolute calibration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameterError

# CODATA 2018, used by coupling_from_physical for reproducibility.
VACUUM_PERMITTIVITY = 8.8541878128e-12  # F/m
REDUCED_PLANCK = 1.054571817e-34  # J*s

# Warning tags attached to MetricSet.flags. Efficiency is reported raw,
# never clamped, so values above 1 are possible whenever kappa < kappa_ex.
FLAG_EXCEEDS_UNITY = "exceeds-unity"
FLAG_EXTERNAL_EXCEEDS_TOTAL = "external-exceeds-total"

DEFAULT_KAPPA_EX = 1.0e6  # Hz
DEFAULT_I_G_PRIME = 1.0  # Hz
DEFAULT_DELTA = 2.0e9  # Hz
DEFAULT_ALPHA = 0.5


def _require_positive(**params: float) -> None:
    for name, value in params.items():
        if not (math.isfinite(value) and value > 0.0):
            raise InvalidParameterError(f"{name} must be finite and > 0, got {value!r}")


def _require_non_negative(**params: float) -> None:
    for name, value in params.items():
        if not (math.isfinite(value) and value >= 0.0):
            raise InvalidParameterError(f"{name} must be finite and >= 0, got {value!r}")


@dataclass(frozen=True)
class EnvironmentDefaults:
    """Shared environment applied to every operating point in a study.

    Defaults follow the standard comparison setup: external cavity decay
    kappa_ex = 1e6 Hz, intrinsic imperfection rate 1 Hz, qubit-cavity
    detuning 2e9 Hz, and an even efficiency-versus-cost weighting
    alpha = 0.5.
    """

    kappa_ex: float = DEFAULT_KAPPA_EX  # Hz
    i_g_prime: float = DEFAULT_I_G_PRIME  # Hz
    delta: float = DEFAULT_DELTA  # Hz
    alpha: float = DEFAULT_ALPHA

    def __post_init__(self) -> None:
        _require_positive(kappa_ex=self.kappa_ex)
        _require_non_negative(i_g_prime=self.i_g_prime, delta=self.delta)
        if not (math.isfinite(self.alpha) and 0.0 < self.alpha < 1.0):
            raise InvalidParameterError(
                f"alpha must lie strictly inside (0, 1), got {self.alpha!r}"
            )

    def point(
        self, g: float, kappa: float, gamma: float, g_eff: float | None = None
    ) -> "OperatingPoint":
        """Build an OperatingPoint carrying this environment."""
        return OperatingPoint(
            g=g,
            kappa=kappa,
            gamma=gamma,
            kappa_ex=self.kappa_ex,
            i_g_prime=self.i_g_prime,
            delta=self.delta,
            g_eff=g_eff,
        )


@dataclass(frozen=True)
class OperatingPoint:
    """One interconnect configuration: its three rates plus environment.

    g_eff is the effective coupling entering the latency expression; it
    defaults to g, which is the identification used throughout, but may be
    overridden per point.
    """

    g: float  # Hz
    kappa: float  # Hz
    gamma: float  # Hz
    kappa_ex: float = DEFAULT_KAPPA_EX  # Hz
    i_g_prime: float = DEFAULT_I_G_PRIME  # Hz
    delta: float = DEFAULT_DELTA  # Hz
    g_eff: float | None = None  # Hz, None means "same as g"

    def __post_init__(self) -> None:
        _require_positive(g=self.g, kappa=self.kappa, gamma=self.gamma, kappa_ex=self.kappa_ex)
        _require_non_negative(i_g_prime=self.i_g_prime, delta=self.delta)
        if self.g_eff is None:
            object.__setattr__(self, "g_eff", self.g)
        else:
            _require_positive(g_eff=self.g_eff)


@dataclass(frozen=True)
class MetricSet:
    """Derived quantities for one operating point.

    fom equals (alpha * efficiency) / ((1 - alpha) * latency * infidelity)
    bit-for-bit; flags carry warning tags, never alter the numbers.
    """

    cooperativity: float
    efficiency: float
    infidelity: float
    latency: float  # seconds
    fom: float  # 1/seconds, relative scale
    flags: frozenset[str] = frozenset()


@dataclass(frozen=True)
class PhysicalCavityParams:
    """Physical cavity/qubit parameters determining the coupling strength."""

    mu_ge: float  # electric dipole moment, C*m
    omega_ge: float  # qubit angular frequency, rad/s
    a_eff: float  # effective mode area, m^2
    cavity_length: float  # m

    def __post_init__(self) -> None:
        _require_positive(
            mu_ge=self.mu_ge,
            omega_ge=self.omega_ge,
            a_eff=self.a_eff,
            cavity_length=self.cavity_length,
        )


def cooperativity(g: float, kappa: float, gamma: float) -> float:
    """Qubit-cavity cooperativity g^2 / (kappa * gamma)."""
    _require_positive(g=g, kappa=kappa, gamma=gamma)
    return (g * g) / (kappa * gamma)


def efficiency(
    g: float,
    kappa: float,
    gamma: float,
    kappa_ex: float = DEFAULT_KAPPA_EX,
    i_g_prime: float = DEFAULT_I_G_PRIME,
) -> float:
    """Single-photon state-transfer success probability, reported raw.

    (kappa_ex / kappa) * (2C / (1 + 2C)) * (1 - i_g_prime / (kappa * C)).
    The value is not clamped: it exceeds 1 whenever kappa < kappa_ex is
    strong enough, and goes negative when i_g_prime * gamma > g^2. Use
    efficiency_flags() for the corresponding warning tags.
    """
    _require_positive(kappa_ex=kappa_ex)
    _require_non_negative(i_g_prime=i_g_prime)
    c = cooperativity(g, kappa, gamma)
    return (kappa_ex / kappa) * (2.0 * c / (1.0 + 2.0 * c)) * (1.0 - i_g_prime / (kappa * c))


def efficiency_flags(value: float, kappa: float, kappa_ex: float) -> frozenset[str]:
    """Warning tags for a raw efficiency value."""
    flags = set()
    if value > 1.0:
        flags.add(FLAG_EXCEEDS_UNITY)
    if kappa_ex > kappa:
        flags.add(FLAG_EXTERNAL_EXCEEDS_TOTAL)
    return frozenset(flags)


def infidelity(g: float, kappa: float, gamma: float) -> float:
    """State-transfer infidelity sqrt(kappa * gamma) / g, i.e. 1/sqrt(C)."""
    _require_positive(g=g, kappa=kappa, gamma=gamma)
    return math.sqrt(kappa * gamma) / g


def latency(
    delta: float,
    gamma: float,
    kappa: float,
    g_eff: float,
) -> float:
    """State-transfer time (delta^2 + gamma^2) / (2 g_eff^2 gamma + kappa (delta^2 + gamma^2)).

    kappa = 0 is admitted as the lossless-cavity limit; only a vanishing
    denominator (both g_eff * gamma and kappa zero) is rejected.
    """
    _require_non_negative(delta=delta, gamma=gamma, kappa=kappa, g_eff=g_eff)
    num = delta * delta + gamma * gamma
    den = 2.0 * g_eff * g_eff * gamma + kappa * num
    if den <= 0.0:
        raise InvalidParameterError(
            "latency denominator 2*g_eff^2*gamma + kappa*(delta^2+gamma^2) must be > 0"
        )
    return num / den


def figure_of_merit(
    efficiency: float,
    latency: float,
    infidelity: float,
    alpha: float = DEFAULT_ALPHA,
) -> float:
    """Composite score (alpha * efficiency) / ((1 - alpha) * latency * infidelity).

    Negative efficiencies propagate to a negative score on purpose: the sign
    change marks the regime boundary where intrinsic imperfections dominate.
    """
    if not (math.isfinite(alpha) and 0.0 < alpha < 1.0):
        raise InvalidParameterError(f"alpha must lie strictly inside (0, 1), got {alpha!r}")
    _require_positive(latency=latency, infidelity=infidelity)
    return (alpha * efficiency) / ((1.0 - alpha) * latency * infidelity)


def coupling_from_physical(params: PhysicalCavityParams) -> float:
    """Coupling strength sqrt(mu^2 omega / (2 eps0 hbar A_eff L)) in Hz."""
    return math.sqrt(
        params.mu_ge * params.mu_ge * params.omega_ge
        / (2.0 * VACUUM_PERMITTIVITY * REDUCED_PLANCK * params.a_eff * params.cavity_length)
    )


def evaluate_point(point: OperatingPoint, alpha: float = DEFAULT_ALPHA) -> MetricSet:
    """Evaluate all metrics for one operating point.

    Every field agrees bit-for-bit with the corresponding standalone
    function; this is a pure bundling convenience.
    """
    c = cooperativity(point.g, point.kappa, point.gamma)
    eff = efficiency(point.g, point.kappa, point.gamma, point.kappa_ex, point.i_g_prime)
    inf = infidelity(point.g, point.kappa, point.gamma)
    lat = latency(point.delta, point.gamma, point.kappa, point.g_eff)
    fom = figure_of_merit(eff, lat, inf, alpha)
    return MetricSet(
        cooperativity=c,
        efficiency=eff,
        infidelity=inf,
        latency=lat,
        fom=fom,
        flags=efficiency_flags(eff, point.kappa, point.kappa_ex),
    )
