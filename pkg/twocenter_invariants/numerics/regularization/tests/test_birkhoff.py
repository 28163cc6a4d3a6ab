"""
Unit tests for the Birkhoff lift and the n invariant.
"""

import math

import numpy as np
import pytest

from twocenter_invariants.numerics.dynamics.orbit import CollisionSelector, collision_orbit, trace_orbit
from twocenter_invariants.numerics.exceptions import (
    BranchTrackingError,
    DomainError,
    SingularityOnCurveError,
)
from twocenter_invariants.numerics.regularization.birkhoff import birkhoff_lift, birkhoff_map, n_invariant
from twocenter_invariants.numerics.regularization.levi_civita import levi_civita_lift
from twocenter_invariants.numerics.regularization.lift import branch_angle, lift_to_dict
from twocenter_invariants.numerics.topology.curve import ClosedCurve
from twocenter_invariants.numerics.types import EulerParams, Primary


def coordinate_ellipse(lam0, samples=256):
    return ClosedCurve.from_function(lambda s: np.cosh(lam0 + 2j * np.pi * np.asarray(s)), samples)


def circle(center, radius, samples=256):
    return ClosedCurve.from_function(
        lambda s: center + radius * np.exp(2j * np.pi * np.asarray(s)), samples)


class TestBirkhoffMap:
    """Test the forward map."""

    def test_fixed_points(self):
        np.testing.assert_allclose(birkhoff_map(np.array([1.0, -1.0])), [1.0, -1.0])

    def test_unit_interval_reversed_onto_ray(self):
        x = np.linspace(0.05, 0.95, 50)
        image = birkhoff_map(x)
        assert np.all(image.real > 1.0)
        assert np.all(np.abs(image.imag) == 0.0)
        assert np.all(np.diff(image.real) < 0.0)


class TestCoordinateCurves:
    """Test preimages of the elliptic coordinate lines."""

    def test_ellipse_lifts_to_two_circles(self):
        lam0 = 0.5
        lifted = birkhoff_lift(coordinate_ellipse(lam0))
        assert lifted.component_count == 2
        radii = sorted(float(np.mean(np.abs(c.z))) for c in lifted.components)
        assert radii == pytest.approx([math.exp(-lam0), math.exp(lam0)], rel=1e-12)
        for component in lifted.components:
            r = np.abs(component.z)
            assert np.max(np.abs(r - r.mean())) < 1e-8

    def test_hyperbola_lifts_to_rays(self):
        nu0, span = 0.7, 1.5
        curve = ClosedCurve.from_function(
            lambda s: np.cosh(span * np.sin(2 * np.pi * np.asarray(s)) + 1j * nu0), 256)
        lifted = birkhoff_lift(curve)
        assert lifted.component_count == 2
        for component in lifted.components:
            deviation = min(np.max(np.abs((component.z * np.exp(-1j * a)).imag)) for a in (nu0, -nu0))
            assert deviation < 1e-8
            assert np.all(component.z.real > 0.0)

    def test_degenerate_ellipse_lifts_to_unit_circle(self):
        n = 256
        s = np.arange(n) / n
        segment = ClosedCurve.from_complex(np.cos(2 * np.pi * s) + 0j, markers=(0, n // 2), params=s,
                                           sampler=lambda t: np.cos(2 * np.pi * np.asarray(t)) + 0j)
        lifted = birkhoff_lift(segment)
        assert lifted.component_count == 2
        for component in lifted.components:
            assert np.max(np.abs(np.abs(component.z) - 1.0)) < 1e-9


class TestParity:
    """Test the component rule w_E + w_M odd ⇔ connected."""

    @pytest.mark.parametrize("center,radius,components", [
        (1.0, 0.5, 1),
        (-1.0, 0.5, 1),
        (0.0, 3.0, 2),
        (0.0, 0.5, 2),
        (3.0, 0.5, 2),
    ])
    def test_circles(self, center, radius, components):
        lifted = birkhoff_lift(circle(center, radius))
        assert lifted.component_count == components
        assert lifted.roundtrip_error() < 1e-8
        assert lifted.deck_error() < 1e-8

    def test_connected_lift_doubles_samples(self):
        lifted = birkhoff_lift(circle(1.0, 0.5))
        assert len(lifted.components[0]) == 2 * len(lifted.base)

    def test_n_of_circles(self):
        assert n_invariant(birkhoff_lift(circle(0.0, 3.0))) == 1
        assert n_invariant(birkhoff_lift(circle(1.0, 0.5))) == 0
        assert n_invariant(birkhoff_lift(circle(0.0, 0.5))) == 0

    def test_curve_through_primary(self):
        with pytest.raises(SingularityOnCurveError):
            birkhoff_lift(circle(1.5, 0.5, samples=64))

    def test_n_needs_birkhoff_lift(self):
        lifted = levi_civita_lift(circle(-1.0, 0.5), Primary.E, EulerParams(mu=0.5, c=-0.5))
        with pytest.raises(DomainError):
            n_invariant(lifted)


class TestBranchAngle:
    """Test the angle continuation primitive."""

    def test_winding_counted(self):
        z = circle(0.0, 2.0, samples=64).z
        assert branch_angle(z, 1.0).winding == 1
        assert branch_angle(z[::-1], 1.0).winding == -1

    def test_transversal_passage_rejected(self):
        s = np.arange(64) / 64
        z = np.exp(2j * np.pi * s) - 1.0  # passes through the origin at s = 0
        with pytest.raises(BranchTrackingError, match="transversally"):
            branch_angle(z, 0j, markers=(0,))

    def test_bounce_counts_one_turn(self):
        s = np.arange(64) / 64
        z = np.cos(2 * np.pi * s) + 0j
        assert branch_angle(z, 1.0, markers=(0,)).winding in (-1, 1)


# ============================================================================
# ORBITS
# ============================================================================


class TestOrbitLifts:
    """Test lifts of traced lemniscate orbits."""

    @pytest.mark.parametrize("k,l", [(3, 2), (2, 3), (1, 1)])
    def test_n_equals_l(self, torus_for, k, l):
        lifted = birkhoff_lift(trace_orbit(torus_for(k, l)))
        assert lifted.component_count == 2
        assert n_invariant(lifted) == l

    def test_lift_is_exponential_of_elliptic_coordinates(self, torus_for):
        torus = torus_for(3, 2)
        lifted = birkhoff_lift(trace_orbit(torus))
        radii = np.abs(np.concatenate([c.z for c in lifted.components]))
        assert radii.max() == pytest.approx(math.exp(torus.lambda_max), rel=1e-5)
        assert radii.min() == pytest.approx(math.exp(-torus.lambda_max), rel=1e-5)

    def test_collision_orbit_lift(self, torus_for):
        curve = collision_orbit(torus_for(3, 2), CollisionSelector.PRIMARY)
        lifted = birkhoff_lift(curve)
        assert lifted.roundtrip_error() < 1e-8
        for component in lifted.components:
            for m in component.markers:
                assert abs(component.z[m] + 1.0) < 1e-4

    def test_levi_civita_orbit_components(self, torus_for):
        params = EulerParams(mu=0.5, c=-0.5)
        curve = trace_orbit(torus_for(3, 2))
        assert levi_civita_lift(curve, Primary.E, params).component_count == 2
        curve = trace_orbit(torus_for(2, 3))
        assert levi_civita_lift(curve, Primary.E, params).component_count == 1

    def test_dump(self, torus_for):
        lifted = birkhoff_lift(trace_orbit(torus_for(3, 2)))
        payload = lift_to_dict(lifted, {"k": 3, "l": 2})
        assert payload["k"] == 3
        assert payload["cover"] == "birkhoff"
        assert payload["components"] == 2
        assert payload["lifted_singularities"] == []
        assert len(payload["component_samples"]) == 2
