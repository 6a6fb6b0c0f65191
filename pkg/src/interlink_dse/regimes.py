"""Coupling-regime classification for qubit-cavity operating points.

The informal orderings "g much greater than kappa, gamma" etc. are made
operational through two configurable ratio thresholds: R quantifies "much
greater" (default 10) and T quantifies "comparable" (default 3). Points
satisfying none of the three strict predicates are reported as
unclassified rather than being forced into the nearest regime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import InvalidParameterError
from .metrics import _require_positive


class Regime(str, Enum):
    STRONG = "strong"
    INTERMEDIATE = "intermediate"
    WEAK = "weak"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class RegimeThresholds:
    """Ratio thresholds quantifying 'much greater' (R) and 'comparable' (T)."""

    r_much_greater: float = 10.0
    t_approx: float = 3.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.r_much_greater) and self.r_much_greater > 1.0):
            raise InvalidParameterError(
                f"r_much_greater must be > 1, got {self.r_much_greater!r}"
            )
        if not (math.isfinite(self.t_approx) and self.t_approx >= 1.0):
            raise InvalidParameterError(f"t_approx must be >= 1, got {self.t_approx!r}")


@dataclass(frozen=True)
class RegimeLabel:
    """Classification outcome; reason is set only for unclassified points."""

    regime: Regime
    reason: str | None = None


DEFAULT_THRESHOLDS = RegimeThresholds()


def classify_regime(
    g: float,
    kappa: float,
    gamma: float,
    thresholds: RegimeThresholds = DEFAULT_THRESHOLDS,
) -> RegimeLabel:
    """Label a point strong / intermediate / weak, else unclassified.

    Predicates, checked in precedence order (first match wins):
      strong        g >= R*kappa and g >= R*gamma
      intermediate  kappa within factor T of g^2/kappa, and g^2/kappa >= R*gamma
      weak          kappa >= R * g^2/kappa, and g^2/kappa >= R*gamma
    The unclassified reason names every failed predicate.
    """
    _require_positive(g=g, kappa=kappa, gamma=gamma)
    r = thresholds.r_much_greater
    t = thresholds.t_approx
    exchange = g * g / kappa  # cavity-mediated exchange rate g^2/kappa

    if g >= r * kappa and g >= r * gamma:
        return RegimeLabel(Regime.STRONG)

    comparable = max(kappa, exchange) / min(kappa, exchange) <= t
    exchange_dominates_gamma = exchange >= r * gamma
    if comparable and exchange_dominates_gamma:
        return RegimeLabel(Regime.INTERMEDIATE)
    if kappa >= r * exchange and exchange_dominates_gamma:
        return RegimeLabel(Regime.WEAK)

    failures = []
    failures.append(
        f"strong: g/max(kappa,gamma) = {coupling_margin(g, kappa, gamma):.4g} < {r:g}"
    )
    if not comparable:
        failures.append(
            "intermediate: kappa and g^2/kappa split by factor "
            f"{max(kappa, exchange) / min(kappa, exchange):.4g} > {t:g}"
        )
    if not exchange_dominates_gamma:
        failures.append(
            f"intermediate/weak: g^2/kappa = {exchange:.4g} < {r:g}*gamma"
        )
    if kappa < r * exchange:
        failures.append(f"weak: kappa = {kappa:.4g} < {r:g}*(g^2/kappa)")
    return RegimeLabel(Regime.UNCLASSIFIED, reason="; ".join(failures))


def coupling_margin(g: float, kappa: float, gamma: float) -> float:
    """Continuous coupling score g / max(kappa, gamma).

    margin >= R is exactly the strong-coupling predicate of classify_regime.
    """
    _require_positive(g=g, kappa=kappa, gamma=gamma)
    return g / max(kappa, gamma)
