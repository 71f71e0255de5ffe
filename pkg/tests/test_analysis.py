"""Tests for the ratio, the regular sequence, sampling, and the maximizer."""

import math

import numpy as np
import pytest

from cyclicgon import (
    DegenerateArea,
    DomainError,
    RangeError,
    VerifyReport,
    exact_area_from_angles,
    heron_from_angles,
    heron_limit,
    maximize_ratio,
    monte_carlo_verify,
    ratio,
    ratio_curve,
    regular_ratio,
    sample_random_angles,
    sequence_table,
)

TWO_PI = 2.0 * math.pi

# Frozen from the closed form n * tan(pi/n) * (1 - 2/n)**(n/2), cross-checked
# in extended precision.
X5 = 1.0129993600594316
X6 = 1.0264004785593346


class TestRatio:
    def test_quadrilateral_is_exact(self):
        report = ratio([2, 1, 1, 1])
        assert abs(report.ratio - 1.0) < 1e-9
        assert report.n == 4
        assert report.ratio == report.approx / report.exact

    def test_unit_pentagon(self):
        report = ratio([1] * 5)
        assert report.ratio == pytest.approx(X5, rel=1e-9)
        assert abs(report.ratio - 1.013) < 5e-4
        assert report.rel_error == report.ratio - 1.0

    def test_unit_hexagon_independent_oracle(self):
        want = 6 * math.tan(math.pi / 6) * (2 / 3) ** 3
        assert ratio([1] * 6).ratio == pytest.approx(want, rel=1e-9)

    def test_scale_invariance(self):
        base = [1.0, 0.8, 1.3, 0.7, 1.1]
        want = ratio(base).ratio
        for t in (1e-6, 1.0, 1e6):
            got = ratio([t * v for v in base]).ratio
            assert got == pytest.approx(want, rel=1e-10)


class TestRegularRatio:
    def test_triangle_and_square_are_one(self):
        assert abs(regular_ratio(3).ratio - 1.0) < 1e-12
        assert abs(regular_ratio(4).ratio - 1.0) < 1e-12

    def test_pentagon(self):
        point = regular_ratio(5)
        assert point.ratio == pytest.approx(X5, rel=1e-12)
        assert point.gap_to_limit == pytest.approx(heron_limit() - X5, rel=1e-9)

    def test_closed_form_oracle(self):
        for n in (7, 12, 45):
            want = n * math.tan(math.pi / n) * (1 - 2 / n) ** (n / 2)
            assert regular_ratio(n).ratio == pytest.approx(want, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            regular_ratio(2)
        with pytest.raises(TypeError):
            regular_ratio(5.0)

    def test_monotone_below_limit(self):
        limit = heron_limit()
        previous = regular_ratio(4).ratio
        for n in range(5, 1001):
            value = regular_ratio(n).ratio
            assert value > previous
            assert value < limit
            previous = value

    def test_asymptotic_envelope(self):
        for n in (100, 1000, 31623):
            assert 0 < regular_ratio(n).gap_to_limit < 4 / n


class TestHeronLimit:
    def test_value(self):
        assert heron_limit() == math.pi / math.e
        assert heron_limit() == pytest.approx(1.15572735, abs=1e-8)
        assert heron_limit() - 1 == pytest.approx(0.1557, abs=5e-5)


class TestSequenceTable:
    def test_first_points(self):
        table = sequence_table(3, 5)
        assert [p.n for p in table] == [3, 4, 5]
        assert abs(table[0].ratio - 1.0) < 1e-12
        assert abs(table[1].ratio - 1.0) < 1e-12
        assert table[2].ratio == pytest.approx(X5, rel=1e-12)

    def test_single_point(self):
        assert len(sequence_table(3, 3)) == 1

    def test_bad_ranges(self):
        with pytest.raises(RangeError):
            sequence_table(5, 4)
        with pytest.raises(RangeError):
            sequence_table(2, 7)


class TestRatioCurve:
    def test_matches_sequence_at_integers(self):
        for n in range(3, 101):
            assert abs(ratio_curve(n) - regular_ratio(n).ratio) <= 1e-12

    def test_limit_at_two(self):
        assert ratio_curve(2 + 1e-8) == pytest.approx(4 / math.pi, abs=1e-6)

    def test_large_argument_asymptote(self):
        want = heron_limit() * (1 - 1 / 1000)
        assert ratio_curve(1000.0) == pytest.approx(want, abs=1e-5)

    def test_branch_seam_is_continuous(self):
        assert abs(ratio_curve(4.0 + 1e-9) - ratio_curve(4.0 - 1e-9)) < 1e-9

    def test_domain(self):
        for x in (2.0, 1.5, -3.0, math.nan):
            with pytest.raises(DomainError):
                ratio_curve(x)


class TestSampling:
    def test_sum_and_positivity(self):
        angles = sample_random_angles(6, 42)
        assert abs(math.fsum(angles.values) - TWO_PI) < 1e-10
        assert all(a > 0 for a in angles.values)

    def test_convex_by_default(self):
        for k in range(50):
            angles = sample_random_angles(4, (9, k))
            assert max(angles.values) < math.pi

    def test_reflex_mode_reaches_reflex_configs(self):
        seen_reflex = False
        for k in range(50):
            angles = sample_random_angles(4, (9, k), allow_reflex=True)
            seen_reflex = seen_reflex or max(angles.values) > math.pi
        assert seen_reflex

    def test_deterministic(self):
        assert sample_random_angles(5, (3, 7)) == sample_random_angles(5, (3, 7))
        assert sample_random_angles(5, 11) != sample_random_angles(5, 12)

    def test_domain(self):
        with pytest.raises(DomainError):
            sample_random_angles(2, 1)
        with pytest.raises(DomainError):
            sample_random_angles(5, (1, 2, 3))


class TestMonteCarloVerify:
    def test_quadrilaterals_stay_at_one(self):
        report = monte_carlo_verify(4, 10_000, seed=42)
        assert report.max_ratio - 1.0 < 1e-9
        assert 1.0 - report.min_ratio < 1e-9
        assert not report.upper_violations
        assert not report.lower_violations
        assert report.skipped == 0

    def test_pentagon_band(self):
        report = monte_carlo_verify(5, 2000, seed=42)
        assert report.max_ratio <= X5 + 1e-9
        assert report.min_ratio >= 1.0 - 1e-9
        assert report.n == 5 and report.samples == 2000 and report.seed == 42

    def test_deterministic(self):
        assert monte_carlo_verify(5, 500, seed=3) == monte_carlo_verify(5, 500, seed=3)
        assert monte_carlo_verify(5, 500, seed=3) != monte_carlo_verify(5, 500, seed=4)

    def test_extremes_are_attained_by_reported_angles(self):
        report = monte_carlo_verify(6, 500, seed=10)
        for angles, want in ((report.argmax, report.max_ratio), (report.argmin, report.min_ratio)):
            area = exact_area_from_angles(angles, 1.0)
            approx = heron_from_angles(angles, 1.0).approx_area
            assert approx / area == pytest.approx(want, rel=1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            monte_carlo_verify(5, 0)

    def test_report_invariant(self):
        report = monte_carlo_verify(5, 100, seed=1)
        with pytest.raises(ValueError):
            VerifyReport(
                n=report.n,
                samples=report.samples,
                seed=report.seed,
                allow_reflex=report.allow_reflex,
                min_ratio=2.0,
                max_ratio=1.0,
                argmin=report.argmin,
                argmax=report.argmax,
                upper_violations=(),
                lower_violations=(),
                skipped=0,
            )


class TestMaximizeRatio:
    def test_quadrilateral_objective_is_flat(self):
        result = maximize_ratio(4, restarts=4)
        assert abs(result.best_ratio - 1.0) < 1e-9
        assert result.restarts_used == 4

    def test_pentagon_reaches_regular_optimum(self):
        result = maximize_ratio(5, restarts=6)
        assert result.converged
        assert result.best_ratio == pytest.approx(X5, abs=1e-8)
        uniform = TWO_PI / 5
        for a in result.best_angles.values:
            assert abs(a - uniform) < 2e-4

    def test_hexagon_value(self):
        result = maximize_ratio(6, restarts=6)
        assert result.best_ratio == pytest.approx(X6, abs=1e-8)

    def test_no_sample_beats_the_optimum(self):
        best = maximize_ratio(5, restarts=6).best_ratio
        report = monte_carlo_verify(5, 2000, seed=42)
        assert report.max_ratio <= best + 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            maximize_ratio(2)
        with pytest.raises(DomainError):
            maximize_ratio(5, restarts=0)
        with pytest.raises(DomainError):
            maximize_ratio(5, tol=0.0)


def test_angle_permutation_symmetry():
    rng = np.random.default_rng(8)
    angles = sample_random_angles(7, 123)
    base = heron_from_angles(angles, 1.0).approx_area / exact_area_from_angles(angles, 1.0)
    for _ in range(10):
        perm = tuple(np.asarray(angles.values)[rng.permutation(7)])
        value = heron_from_angles(perm, 1.0).approx_area / exact_area_from_angles(perm, 1.0)
        assert value == pytest.approx(base, abs=1e-12)
