"""Unit and property tests for the closed-form metric kernels.

Frozen expected values were computed with an independent arithmetic
oracle (plain-python substitution into the defining expressions) before
being pinned here.
"""

import math

import pytest
import scipy.constants
from hypothesis import given, settings
from hypothesis import strategies as st

from interlink_dse import (
    FLAG_EXCEEDS_UNITY,
    FLAG_EXTERNAL_EXCEEDS_TOTAL,
    EnvironmentDefaults,
    InvalidParameterError,
    OperatingPoint,
    PhysicalCavityParams,
    cooperativity,
    coupling_from_physical,
    efficiency,
    evaluate_point,
    figure_of_merit,
    infidelity,
    latency,
)

BASELINE = OperatingPoint(g=1e6, kappa=1e6, gamma=1e6, kappa_ex=1e6, i_g_prime=1.0, delta=2e9)


def log_rates(lo=1e2, hi=1e12):
    """Log-uniform positive rates."""
    return st.floats(math.log10(lo), math.log10(hi)).map(lambda e: 10.0 ** e)


class TestCooperativity:
    def test_trapped_ion_row(self):
        assert cooperativity(2.8e6, 5.3e4, 25e6) == pytest.approx(5.916981132075471, rel=1e-12)

    def test_unit_symmetric(self):
        assert cooperativity(1e6, 1e6, 1e6) == 1.0

    @pytest.mark.parametrize("g,kappa,gamma", [(0.0, 1e6, 1e6), (1e6, -1.0, 1e6), (1e6, 1e6, float("nan"))])
    def test_non_positive_rejected(self, g, kappa, gamma):
        with pytest.raises(InvalidParameterError):
            cooperativity(g, kappa, gamma)


class TestEfficiency:
    def test_baseline(self):
        value = efficiency(1e6, 1e6, 1e6, kappa_ex=1e6, i_g_prime=1.0)
        assert value == pytest.approx(0.66666600, abs=1e-7)

    def test_large_cooperativity_limit(self):
        value = efficiency(1e12, 1e6, 1e6, kappa_ex=1e6, i_g_prime=0.0)
        assert value == pytest.approx(1.0, abs=1e-9)

    def test_raw_value_above_unity(self):
        # kappa below kappa_ex drives the raw expression past 1; the value
        # is reported unclamped, with warnings carried on the MetricSet.
        value = efficiency(1e6, 1e4, 1e6, kappa_ex=1e6, i_g_prime=1.0)
        assert value == pytest.approx(99.50238805970149, rel=1e-12)
        point = OperatingPoint(g=1e6, kappa=1e4, gamma=1e6, kappa_ex=1e6, i_g_prime=1.0)
        flags = evaluate_point(point).flags
        assert FLAG_EXCEEDS_UNITY in flags
        assert FLAG_EXTERNAL_EXCEEDS_TOTAL in flags

    def test_negative_when_imperfections_dominate(self):
        # i_g_prime * gamma > g^2 flips the third factor negative.
        assert efficiency(1e2, 1e6, 1e6, kappa_ex=1e6, i_g_prime=1e3) < 0.0

    @given(
        g=log_rates(1e4, 1e10),
        gamma=log_rates(1e2, 1e8),
        kappa1=log_rates(1e2, 1e10),
        kappa2=log_rates(1e2, 1e10),
    )
    def test_third_factor_independent_of_kappa(self, g, gamma, kappa1, kappa2):
        """Backing out the first two factors leaves 1 - I*gamma/g^2."""
        kappa_ex = 1e6

        def third_factor(kappa):
            c = cooperativity(g, kappa, gamma)
            eff = efficiency(g, kappa, gamma, kappa_ex=kappa_ex, i_g_prime=1.0)
            return eff * (kappa / kappa_ex) * (1.0 + 2.0 * c) / (2.0 * c)

        assert third_factor(kappa1) == pytest.approx(third_factor(kappa2), rel=1e-9, abs=1e-12)


class TestInfidelity:
    @pytest.mark.parametrize("rate", [1.0, 1e3, 1e6, 2.5e9])
    def test_symmetry(self, rate):
        assert infidelity(rate, rate, rate) == 1.0

    def test_trapped_ion_row(self):
        value = infidelity(2.8e6, 5.3e4, 25e6)
        assert value == pytest.approx(0.41110230118647634, rel=1e-12)
        assert value == pytest.approx(1.0 / math.sqrt(cooperativity(2.8e6, 5.3e4, 25e6)), rel=1e-12)

    def test_scale_compensation_pair(self):
        assert infidelity(1e6, 1e6, 1e6) == infidelity(2e6, 4e6, 1e6) == 1.0

    @given(g=log_rates(), kappa=log_rates(), gamma=log_rates())
    def test_squared_is_inverse_cooperativity(self, g, kappa, gamma):
        product = infidelity(g, kappa, gamma) ** 2 * cooperativity(g, kappa, gamma)
        assert product == pytest.approx(1.0, rel=1e-12)

    @given(
        g=log_rates(1e3, 1e9),
        kappa=log_rates(1e3, 1e9),
        gamma=log_rates(1e3, 1e9),
        s=log_rates(1e-4, 1e4),
    )
    def test_scale_invariance(self, g, kappa, gamma, s):
        base = infidelity(g, kappa, gamma)
        assert infidelity(s * g, s * s * kappa, gamma) == pytest.approx(base, rel=1e-12)
        assert infidelity(s * g, kappa, s * s * gamma) == pytest.approx(base, rel=1e-12)
        base_c = cooperativity(g, kappa, gamma)
        assert cooperativity(s * g, s * s * kappa, gamma) == pytest.approx(base_c, rel=1e-12)
        assert cooperativity(s * g, kappa, s * s * gamma) == pytest.approx(base_c, rel=1e-12)


class TestLatency:
    def test_baseline(self):
        value = latency(2e9, 1e6, 1e6, 1e6)
        assert value == pytest.approx(1.0e-6, rel=1e-4)
        assert value == pytest.approx(9.99999500000375e-07, rel=1e-12)

    def test_lossless_cavity_limit(self):
        assert latency(2e9, 1e6, 0.0, 1e6) == pytest.approx(2.0000005, rel=1e-12)

    def test_strong_effective_coupling(self):
        assert latency(2e9, 1e6, 1e6, 1e9) == pytest.approx(6.6667e-7, rel=1e-4)

    def test_zero_denominator_rejected(self):
        with pytest.raises(InvalidParameterError):
            latency(2e9, 0.0, 0.0, 1e6)
        with pytest.raises(InvalidParameterError):
            latency(2e9, 1e6, 0.0, 0.0)


class TestFigureOfMerit:
    def test_baseline(self):
        m = evaluate_point(BASELINE, alpha=0.5)
        assert m.fom == pytest.approx(6.6667e5, rel=1e-3)
        assert m.fom == pytest.approx(666666.3333329166, rel=1e-12)

    def test_even_weighting_prefactor_is_one(self):
        assert figure_of_merit(0.42, 1e-6, 0.3, alpha=0.5) == 0.42 / (1e-6 * 0.3)

    @pytest.mark.parametrize("alpha", [0.0, 1.0, 1.5, -0.2, float("nan")])
    def test_alpha_outside_open_interval_rejected(self, alpha):
        with pytest.raises(InvalidParameterError):
            figure_of_merit(0.5, 1e-6, 0.5, alpha=alpha)

    def test_negative_efficiency_propagates(self):
        assert figure_of_merit(-0.5, 1e-6, 0.5, alpha=0.5) < 0.0


class TestCouplingFromPhysical:
    ANCHOR = PhysicalCavityParams(mu_ge=3.336e-30, omega_ge=3.1416e15, a_eff=1e-12, cavity_length=1e-6)

    def test_anchor_against_independent_constants(self):
        # Re-derive with scipy's CODATA constants and an independently
        # arranged expression before trusting the pinned number.
        p = self.ANCHOR
        oracle = math.sqrt(p.mu_ge ** 2 * p.omega_ge) / math.sqrt(
            2.0 * scipy.constants.epsilon_0 * scipy.constants.hbar * p.a_eff * p.cavity_length
        )
        value = coupling_from_physical(p)
        assert value == pytest.approx(oracle, rel=1e-8)
        assert value == pytest.approx(4.33e9, rel=1e-2)
        assert value == pytest.approx(4326871950.949218, rel=1e-12)

    def test_dipole_doubling_doubles(self):
        p2 = PhysicalCavityParams(2 * self.ANCHOR.mu_ge, self.ANCHOR.omega_ge, self.ANCHOR.a_eff, self.ANCHOR.cavity_length)
        assert coupling_from_physical(p2) == pytest.approx(2.0 * coupling_from_physical(self.ANCHOR), rel=1e-12)

    def test_mode_area_quadrupling_halves(self):
        p2 = PhysicalCavityParams(self.ANCHOR.mu_ge, self.ANCHOR.omega_ge, 4 * self.ANCHOR.a_eff, self.ANCHOR.cavity_length)
        assert coupling_from_physical(p2) == pytest.approx(0.5 * coupling_from_physical(self.ANCHOR), rel=1e-12)

    def test_non_positive_rejected(self):
        with pytest.raises(InvalidParameterError):
            PhysicalCavityParams(mu_ge=0.0, omega_ge=1.0, a_eff=1.0, cavity_length=1.0)


class TestEvaluatePoint:
    def test_baseline_composition(self):
        m = evaluate_point(BASELINE, alpha=0.5)
        assert m.cooperativity == 1.0
        assert m.efficiency == pytest.approx(0.666666, abs=1e-7)
        assert m.infidelity == 1.0
        assert m.latency == pytest.approx(1.0e-6, rel=1e-4)
        assert m.flags == frozenset()

    def test_fields_match_standalone_functions_exactly(self):
        p = OperatingPoint(g=3.3e7, kappa=4.1e5, gamma=9.6e7, kappa_ex=1e6, i_g_prime=1.0, delta=2e9)
        m = evaluate_point(p, alpha=0.37)
        assert m.cooperativity == cooperativity(p.g, p.kappa, p.gamma)
        assert m.efficiency == efficiency(p.g, p.kappa, p.gamma, p.kappa_ex, p.i_g_prime)
        assert m.infidelity == infidelity(p.g, p.kappa, p.gamma)
        assert m.latency == latency(p.delta, p.gamma, p.kappa, p.g_eff)
        assert m.fom == figure_of_merit(m.efficiency, m.latency, m.infidelity, 0.37)

    def test_external_exceeds_total_flagged(self):
        p = OperatingPoint(g=1e8, kappa=1e5, gamma=1e6, kappa_ex=1e6)
        assert FLAG_EXTERNAL_EXCEEDS_TOTAL in evaluate_point(p).flags

    @given(
        g=log_rates(1e4, 1e12),
        kappa=log_rates(1e3, 1e10),
        gamma=log_rates(1e3, 1e10),
        alpha=st.floats(0.01, 0.99),
    )
    @settings(max_examples=50)
    def test_purity(self, g, kappa, gamma, alpha):
        p = OperatingPoint(g=g, kappa=kappa, gamma=gamma)
        first = evaluate_point(p, alpha)
        second = evaluate_point(p, alpha)
        assert first == second  # bit-identical fields, equal flag sets


class TestMonotonicityInG:
    @given(
        ks=st.lists(st.integers(0, 800), min_size=2, max_size=8, unique=True),
        kappa=st.sampled_from([1e4, 1e6, 1e8]),
    )
    def test_defaults_monotone_along_g(self, ks, kappa):
        """With default environment, growing g never hurts any metric."""
        env = EnvironmentDefaults()
        gs = sorted(10.0 ** (4.0 + k / 100.0) for k in ks)
        metrics = [evaluate_point(env.point(g, kappa, 1e6), env.alpha) for g in gs]
        for a, b in zip(metrics, metrics[1:]):
            assert b.efficiency >= a.efficiency
            assert b.infidelity < a.infidelity
            assert b.latency < a.latency
            assert b.fom > a.fom


class TestOperatingPoint:
    def test_g_eff_defaults_to_g(self):
        assert OperatingPoint(g=2e6, kappa=1e6, gamma=1e6).g_eff == 2e6

    def test_g_eff_override(self):
        assert OperatingPoint(g=2e6, kappa=1e6, gamma=1e6, g_eff=5e6).g_eff == 5e6

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(g=0.0, kappa=1e6, gamma=1e6),
            dict(g=1e6, kappa=0.0, gamma=1e6),
            dict(g=1e6, kappa=1e6, gamma=0.0),
            dict(g=1e6, kappa=1e6, gamma=1e6, kappa_ex=0.0),
            dict(g=1e6, kappa=1e6, gamma=1e6, i_g_prime=-1.0),
            dict(g=1e6, kappa=1e6, gamma=1e6, delta=-1.0),
            dict(g=1e6, kappa=1e6, gamma=1e6, g_eff=0.0),
        ],
    )
    def test_invalid_points_rejected(self, kwargs):
        with pytest.raises(InvalidParameterError):
            OperatingPoint(**kwargs)

    def test_environment_alpha_bounds(self):
        with pytest.raises(InvalidParameterError):
            EnvironmentDefaults(alpha=1.0)
        with pytest.raises(InvalidParameterError):
            EnvironmentDefaults(alpha=0.0)
