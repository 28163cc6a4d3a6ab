"""
Unit tests for the numerical configuration.
"""

from twocenter_invariants.numerics import config


class TestConfigValues:
    """Test the documented defaults."""

    def test_primaries(self):
        assert config.PRIMARY_E == (-1.0, 0.0)
        assert config.PRIMARY_M == (1.0, 0.0)

    def test_tolerances(self):
        assert config.QUAD_REL_TOL == 1e-10
        assert config.ROOT_TOL == 1e-12
        assert config.ROTATION_TOL == 1e-10
        assert config.CLUSTER_TOL == 1e-7
        assert config.ANGLE_TOL == 1e-3
        assert config.SINGULARITY_TOL == 1e-6

    def test_sampling(self):
        assert config.MIN_SAMPLES_PER_PERIOD == 64
        assert config.DEFAULT_SAMPLES_PER_PERIOD >= config.MIN_SAMPLES_PER_PERIOD

    def test_sweep_defaults(self):
        assert config.SWEEP_MUS == (0.5, 0.3)
        assert (config.SWEEP_MAX_K, config.SWEEP_MAX_L) == (5, 5)


class TestConfigValidation:
    """Test internal consistency."""

    def test_validate_config(self):
        assert config.validate_config() is True

    def test_phase_fractions_avoid_collisions(self):
        assert all(0.0 < f < 1.0 for f in config.PHASE_INDEPENDENCE_FRACTIONS)
        assert config.GENERIC_PHASE_FRACTION in config.PHASE_INDEPENDENCE_FRACTIONS
