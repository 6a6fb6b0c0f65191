"""Sweep, contour, optimal-region, and sensitivity tests."""

import math

import numpy as np
import pytest

from interlink_dse import (
    ConfigurationError,
    EnvironmentDefaults,
    InvalidParameterError,
    SweepAxis,
    evaluate_point,
    extract_contours,
    find_optimal_region,
    interpolate_metric,
    log_grid,
    loglog_slope,
    sensitivity_curves,
    sweep_2d,
)

ENV = EnvironmentDefaults()


def small_gk_grid(xn=33, yn=25, gamma=1e6):
    return sweep_2d(
        SweepAxis("g", 1e4, 1e12, xn), SweepAxis("kappa", 1e4, 1e10, yn), gamma, ENV
    )


class TestLogGrid:
    def test_decades(self):
        values = log_grid(1e4, 1e8, 5)
        assert values[0] == 1e4 and values[-1] == 1e8
        assert values == pytest.approx([1e4, 1e5, 1e6, 1e7, 1e8], rel=1e-12)

    def test_geometric_midpoint(self):
        assert log_grid(2.0, 8.0, 3) == pytest.approx([2.0, 4.0, 8.0], rel=1e-12)

    @pytest.mark.parametrize("lo,hi,n", [(1.0, 1.0, 2), (0.0, 1.0, 3), (2.0, 1.0, 3), (1.0, 2.0, 1)])
    def test_bad_bounds_rejected(self, lo, hi, n):
        with pytest.raises(InvalidParameterError):
            log_grid(lo, hi, n)


class TestSweep:
    def test_shape(self):
        grid = sweep_2d(SweepAxis("g", 1e4, 1e8, 3), SweepAxis("kappa", 1e4, 1e8, 4), 1e6, ENV)
        assert len(grid.values) == 3
        assert all(len(row) == 4 for row in grid.values)
        assert grid.fixed_parameter == "gamma"

    def test_overlapping_axes_rejected(self):
        with pytest.raises(ConfigurationError):
            sweep_2d(SweepAxis("g", 1e4, 1e8, 3), SweepAxis("g", 1e4, 1e8, 3), 1e6, ENV)

    def test_baseline_node_reproduced(self):
        grid = small_gk_grid()
        ix = int(np.argmin(np.abs(grid.x_values - 1e6)))
        iy = int(np.argmin(np.abs(grid.y_values - 1e6)))
        assert grid.x_values[ix] == pytest.approx(1e6, rel=1e-12)
        assert grid.cell(ix, iy).fom == pytest.approx(6.6667e5, rel=1e-3)

    def test_rows_increase_with_g(self):
        grid = small_gk_grid()
        fom = grid.metric("fom")
        assert (np.diff(fom, axis=0) > 0).all()

    def test_cells_match_scalar_evaluation(self):
        grid = sweep_2d(SweepAxis("g", 1e5, 1e9, 4), SweepAxis("gamma", 1e4, 1e8, 3), 2e6, ENV)
        assert grid.fixed_parameter == "kappa"
        for ix in range(4):
            for iy in range(3):
                assert grid.cell(ix, iy) == evaluate_point(grid.point(ix, iy), ENV.alpha)

    def test_parallel_schedule_bit_identical(self):
        serial = small_gk_grid(xn=17, yn=13)
        threaded = sweep_2d(
            SweepAxis("g", 1e4, 1e12, 17), SweepAxis("kappa", 1e4, 1e10, 13), 1e6, ENV, workers=4
        )
        assert serial.values == threaded.values


class TestContours:
    def test_cooperativity_unity_follows_analytic_curve(self):
        """The C=1 contour is the line kappa = g^2/gamma in log space."""
        grid = small_gk_grid()
        polys = extract_contours(grid, "cooperativity", [1.0])
        assert polys
        cell_w = 8.0 / (grid.x_axis.count - 1)
        cell_h = 6.0 / (grid.y_axis.count - 1)
        tolerance = max(2.0 * cell_w, cell_h)  # one-cell edge miss, slope-2 curve
        for poly in polys:
            for x, y in poly.vertices:
                log_c = 2.0 * math.log10(x) - math.log10(y) - 6.0
                assert abs(log_c) <= tolerance

    def test_passes_near_unit_cooperativity_node(self):
        grid = small_gk_grid()
        polys = extract_contours(grid, "cooperativity", [1.0])
        vertices = [v for p in polys for v in p.vertices]
        d = min(
            math.hypot(math.log10(x) - 6.0, math.log10(y) - 6.0) for x, y in vertices
        )
        cell_diag = math.hypot(8.0 / 32, 6.0 / 24)
        assert d <= cell_diag

    def test_vertices_reproduce_level_under_interpolation(self):
        grid = small_gk_grid()
        for poly in extract_contours(grid, "cooperativity", [1.0]):
            for x, y in poly.vertices:
                assert interpolate_metric(grid, "cooperativity", x, y) == pytest.approx(
                    poly.level, rel=1e-9
                )

    def test_vertices_inside_bounding_box_and_adjacent(self):
        grid = small_gk_grid()
        us = np.log10(grid.x_values)
        vs = np.log10(grid.y_values)
        for poly in extract_contours(grid, "efficiency", [0.5, 0.7]):
            cells = []
            for x, y in poly.vertices:
                u, v = math.log10(x), math.log10(y)
                assert us[0] - 1e-9 <= u <= us[-1] + 1e-9
                assert vs[0] - 1e-9 <= v <= vs[-1] + 1e-9
                cells.append(
                    (
                        min(int(np.searchsorted(us, u + 1e-12)) - 1, len(us) - 2),
                        min(int(np.searchsorted(vs, v + 1e-12)) - 1, len(vs) - 2),
                    )
                )
            for (i1, j1), (i2, j2) in zip(cells, cells[1:]):
                assert abs(i1 - i2) <= 1 and abs(j1 - j2) <= 1

    def test_level_above_maximum_empty(self):
        grid = small_gk_grid(xn=9, yn=9)
        assert extract_contours(grid, "cooperativity", [1e99]) == []

    def test_unknown_metric_rejected(self):
        grid = small_gk_grid(xn=5, yn=5)
        with pytest.raises(ConfigurationError):
            extract_contours(grid, "squeezing", [1.0])

    def test_deterministic_ordering(self):
        grid = small_gk_grid(xn=21, yn=17)
        first = extract_contours(grid, "efficiency", [0.7, 0.5])
        second = extract_contours(grid, "efficiency", [0.5, 0.7])
        assert first == second
        assert [p.level for p in first] == sorted(p.level for p in first)


class TestOptimalRegion:
    def test_unsatisfiable_region_still_reports_best(self):
        grid = small_gk_grid(xn=9, yn=9)
        region = find_optimal_region(grid, eff_min=2.0, inf_max=0.0)
        assert region.cells == ()
        assert region.best_cell == (8, 0)

    def test_default_grid_argmax_is_corner(self):
        grid = small_gk_grid()
        region = find_optimal_region(grid, eff_min=0.5, inf_max=1.0)
        assert region.best_cell == (grid.x_axis.count - 1, 0)

    def test_efficiency_threshold_caps_kappa(self):
        grid = small_gk_grid()
        region = find_optimal_region(grid, eff_min=0.5, inf_max=1e12)
        kappas = {grid.y_values[iy] for _, iy in region.cells}
        assert kappas
        assert max(kappas) < 1e8

    def test_region_shrinks_with_tighter_thresholds(self):
        grid = small_gk_grid(xn=17, yn=13)
        loose = set(find_optimal_region(grid, 0.3, 0.5).cells)
        tighter_eff = set(find_optimal_region(grid, 0.6, 0.5).cells)
        tighter_inf = set(find_optimal_region(grid, 0.3, 0.2).cells)
        assert tighter_eff <= loose
        assert tighter_inf <= loose


class TestLogLogSlope:
    def test_cubic_power_law(self):
        xs = log_grid(1.0, 1e3, 7)
        assert loglog_slope(xs, xs ** 3) == pytest.approx([3.0] * 7, rel=1e-9)

    def test_constant(self):
        assert loglog_slope([1.0, 2.0, 4.0], [5.0, 5.0, 5.0]) == pytest.approx([0.0] * 3, abs=1e-15)

    def test_square_on_octave_grid(self):
        xs = np.array([1.0, 2.0, 4.0, 8.0])
        assert loglog_slope(xs, xs ** 2) == pytest.approx([2.0] * 4, rel=1e-9)

    @pytest.mark.parametrize(
        "xs,ys",
        [
            ([1.0, 2.0], [1.0, -1.0]),
            ([1.0, 2.0], [0.0, 1.0]),
            ([2.0, 1.0], [1.0, 1.0]),
            ([1.0], [1.0]),
            ([1.0, 2.0, 3.0], [1.0, 2.0]),
        ],
    )
    def test_invalid_inputs_rejected(self, xs, ys):
        with pytest.raises(InvalidParameterError):
            loglog_slope(xs, ys)


class TestSensitivity:
    def test_series_shapes(self):
        axis = SweepAxis("g", 1e4, 1e12, 15)
        series = sensitivity_curves([(1e4, 1e4), (1e6, 1e6), (1e8, 1e8)], axis, ENV)
        assert len(series) == 3
        for s in series:
            assert len(s.g_values) == 15
            assert len(s.fom_values) == 15
            assert len(s.loglog_slopes) == 15

    def test_asymptotic_slope_three(self):
        axis = SweepAxis("g", 1e10, 1e12, 21)
        (s,) = sensitivity_curves([(1e6, 1e6)], axis, ENV)
        assert np.array(s.loglog_slopes) == pytest.approx(3.0, abs=0.05)

    def test_low_decay_pair_scores_higher(self):
        axis = SweepAxis("g", 1e4, 1e12, 33)
        low, high = sensitivity_curves([(1e4, 1e4), (1e8, 1e8)], axis, ENV)
        idx = int(np.argmin(np.abs(np.array(low.g_values) - 1e6)))
        assert low.g_values[idx] == pytest.approx(1e6, rel=1e-12)
        assert low.fom_values[idx] > high.fom_values[idx]

    def test_strong_threshold_recording(self):
        axis = SweepAxis("g", 1e5, 1e7, 3)
        series = sensitivity_curves([(1e4, 1e8)], axis, ENV, r_much_greater=10.0)
        assert series[0].strong_threshold_g == 1e9

    def test_non_positive_fom_masked(self):
        # At g = 1e4 with gamma = 1e8 the imperfection term zeroes the
        # efficiency, so the score is 0 and its log-slope undefined.
        axis = SweepAxis("g", 1e4, 1e8, 9)
        (s,) = sensitivity_curves([(1e4, 1e8)], axis, ENV)
        assert s.fom_values[0] == 0.0
        assert math.isnan(s.loglog_slopes[0])
        assert not any(math.isnan(v) for v in s.loglog_slopes[1:])

    def test_slopes_positive_over_default_range(self):
        axis = SweepAxis("g", 1e4, 1e12, 50)
        (s,) = sensitivity_curves([(1e6, 1e6)], axis, ENV)
        assert all(v > 0.0 for v in s.loglog_slopes)

    def test_axis_must_be_over_g(self):
        with pytest.raises(ConfigurationError):
            sensitivity_curves([(1e6, 1e6)], SweepAxis("kappa", 1e4, 1e8, 5), ENV)
