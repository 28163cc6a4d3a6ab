"""
Unit tests for region classification and the λ turning point.
"""

import math

import numpy as np
import pytest
from scipy.optimize import brentq

from twocenter_invariants.numerics.dynamics.regions import (
    classify_region,
    critical_energy,
    effective_lambda,
    effective_nu,
    lambda_roots,
    lambda_turning_point,
    lemniscate_interval,
    level_from_gap,
    separation_level,
)
from twocenter_invariants.numerics.exceptions import (
    DomainError,
    NoTurningPointError,
    NotLemniscateError,
)
from twocenter_invariants.numerics.types import EulerParams, RegionLabel


class TestCriticalEnergy:
    """Test c_J = -1/2 - sqrt(μ - μ²)."""

    def test_equal_masses(self):
        assert critical_energy(0.5) == pytest.approx(-1.0, abs=1e-15)

    def test_small_mass_limit(self):
        assert critical_energy(1e-12) == pytest.approx(-0.5, abs=1e-5)

    def test_asymmetric_mass(self):
        assert critical_energy(0.3) == pytest.approx(-0.5 - math.sqrt(0.21), abs=1e-15)
        assert critical_energy(0.3) == pytest.approx(-0.958257569, abs=1e-9)

    @pytest.mark.parametrize("mu", [0.0, 1.0, -0.1, 1.5])
    def test_rejects_mass_ratio_outside_unit_interval(self, mu):
        with pytest.raises(DomainError):
            critical_energy(mu)

    def test_params_agree(self):
        assert EulerParams(mu=0.3, c=-0.5).critical_energy == critical_energy(0.3)


class TestEulerParams:
    """Test parameter validation."""

    def test_positive_energy_rejected(self):
        with pytest.raises(DomainError):
            EulerParams(mu=0.5, c=0.1)

    def test_domain_error_is_value_error(self):
        with pytest.raises(ValueError):
            EulerParams(mu=2.0, c=-0.5)


# ============================================================================
# CLASSIFICATION
# ============================================================================


class TestClassifyRegion:
    """Test the region labels."""

    @pytest.mark.parametrize("f_lambda", [-2.7, -1.3, -0.2, 0.3, 0.9, 2.2])
    def test_below_critical_energy_no_lemniscate_or_planetary(self, f_lambda):
        params = EulerParams(mu=0.5, c=-1.5)
        assert classify_region(params, f_lambda) not in (RegionLabel.L, RegionLabel.P)

    def test_lemniscate_against_sign_oracle(self):
        params = EulerParams(mu=0.5, c=-0.5)
        f_lambda = -0.25
        lam = np.linspace(0.0, 10.0, 20001)
        nu = np.linspace(0.0, 2.0 * math.pi, 20001)
        p_lam = effective_lambda(params, f_lambda, lam)
        assert p_lam[0] > 0.0
        assert np.any(p_lam < 0.0)
        assert np.all(effective_nu(params, f_lambda, nu) > 0.0)
        assert classify_region(params, f_lambda) is RegionLabel.L

    def test_no_motion_when_lambda_range_empty(self):
        params = EulerParams(mu=0.5, c=-0.5)
        assert classify_region(params, -5.0) is RegionLabel.NO_MOTION

    def test_confined_nu_is_satellite(self):
        params = EulerParams(mu=0.5, c=-0.5)
        # f_λ just above f_hi = 0: ν cannot cross π/2
        assert classify_region(params, 0.2) in (RegionLabel.S, RegionLabel.SPRIME)

    def test_deterministic(self):
        params = EulerParams(mu=0.3, c=-0.7)
        assert classify_region(params, -0.2) == classify_region(params, -0.2)


class TestLemniscateInterval:
    """Test the interval of separation constants of lemniscate tori."""

    def test_equal_masses(self):
        f_lo, f_hi = lemniscate_interval(EulerParams(mu=0.5, c=-0.5))
        assert f_lo == pytest.approx(-0.5)
        assert f_hi == pytest.approx(0.0, abs=1e-15)

    def test_interior_points_are_lemniscate(self):
        params = EulerParams(mu=0.3, c=-0.6)
        f_lo, f_hi = lemniscate_interval(params)
        for t in (0.1, 0.5, 0.9):
            assert classify_region(params, f_lo + t * (f_hi - f_lo)) is RegionLabel.L

    def test_empty_below_critical_energy(self):
        with pytest.raises(NotLemniscateError):
            lemniscate_interval(EulerParams(mu=0.5, c=-1.2))

    def test_gap_levels_are_exact(self):
        params = EulerParams(mu=0.5, c=-0.5)
        level = level_from_gap(params, 1e-12, "lo")
        assert level.gap_lo == 1e-12
        assert level.gap_lo + level.gap_hi == pytest.approx(0.5)

    def test_plain_level_gaps(self):
        params = EulerParams(mu=0.5, c=-0.5)
        level = separation_level(params, -0.3)
        assert level.gap_lo == pytest.approx(0.2)
        assert level.gap_hi == pytest.approx(0.3)


# ============================================================================
# TURNING POINT
# ============================================================================


class TestLambdaTurningPoint:
    """Test the λ turning point."""

    def test_constructed_root(self):
        params = EulerParams(mu=0.5, c=-0.5)
        f_lambda = -math.cosh(1.0) + 0.5 * math.cosh(1.0) ** 2
        assert lambda_turning_point(params, f_lambda) == pytest.approx(1.0, abs=1e-12)

    def test_degenerate_torus_rejected(self):
        params = EulerParams(mu=0.5, c=-0.5)
        with pytest.raises(NoTurningPointError, match="degenerate torus"):
            lambda_turning_point(params, -0.5)

    def test_against_bisection(self):
        params = EulerParams(mu=0.5, c=-0.6)
        f_lambda = -0.35

        def g(lam):
            return f_lambda + math.cosh(lam) - 0.6 * math.cosh(lam) ** 2

        oracle = brentq(g, 0.0, 20.0, xtol=1e-14)
        assert lambda_turning_point(params, f_lambda) == pytest.approx(oracle, abs=1e-12)

    def test_root_annihilates_polynomial(self):
        params = EulerParams(mu=0.3, c=-0.7)
        lam_max = lambda_turning_point(params, -0.1)
        assert abs(effective_lambda(params, -0.1, lam_max)) < 1e-12

    def test_excess_keeps_precision_near_lower_end(self):
        params = EulerParams(mu=0.5, c=-0.5)
        excess, x_minus, lam_max = lambda_roots(params, level_from_gap(params, 1e-10, "lo"))
        # P(1) = |c| (x₊ − 1)(1 − x₋)
        assert 0.5 * excess * (1.0 - x_minus) == pytest.approx(1e-10, rel=1e-12)
        assert lam_max > 0.0
