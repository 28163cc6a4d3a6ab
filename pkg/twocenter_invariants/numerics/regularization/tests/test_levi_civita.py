"""
Unit tests for the Levi-Civita lift.
"""

import math

import numpy as np
import pytest

from twocenter_invariants.numerics.exceptions import SingularityOnCurveError
from twocenter_invariants.numerics.regularization.levi_civita import levi_civita_lift, levi_civita_map
from twocenter_invariants.numerics.topology.curve import ClosedCurve
from twocenter_invariants.numerics.topology.winding import winding_number
from twocenter_invariants.numerics.types import EulerParams, Primary

PARAMS = EulerParams(mu=0.5, c=-0.5)


def loop(center, radius, turns, samples=128):
    def fn(s):
        return center + radius * np.exp(2j * np.pi * turns * np.asarray(s))

    return ClosedCurve.from_function(fn, samples * turns)


class TestComponents:
    """Test the parity rule for the number of components."""

    def test_single_turn_is_connected(self):
        lifted = levi_civita_lift(loop(-1.0, 0.5, 1), Primary.E, PARAMS)
        assert lifted.component_count == 1
        assert len(lifted.components[0]) == 2 * len(lifted.base)

    def test_connected_lift_winding(self):
        lifted = levi_civita_lift(loop(-1.0, 0.5, 1), Primary.E, PARAMS)
        (component,) = lifted.components
        assert winding_number(component, 0j) == 1
        np.testing.assert_allclose(np.abs(component.z), math.sqrt(0.5), atol=1e-12)

    def test_double_turn_splits(self):
        lifted = levi_civita_lift(loop(-1.0, 0.5, 2), Primary.E, PARAMS)
        assert lifted.component_count == 2
        assert lifted.deck_error() < 1e-12
        assert [winding_number(c, 0j) for c in lifted.components] == [1, 1]

    def test_triple_turn_is_connected(self):
        lifted = levi_civita_lift(loop(-1.0, 0.5, 3), Primary.E, PARAMS)
        assert lifted.component_count == 1
        assert winding_number(lifted.components[0], 0j) == 3

    def test_loop_away_from_center_splits(self):
        lifted = levi_civita_lift(loop(0.5, 0.3, 1), Primary.E, PARAMS)
        assert lifted.component_count == 2
        for component in lifted.components:
            assert winding_number(component, 0j) == 0

    def test_center_m(self):
        lifted = levi_civita_lift(loop(1.0, 0.5, 1), "M", PARAMS)
        assert lifted.cover == "levi_civita_M"
        assert lifted.component_count == 1


class TestLiftGeometry:
    """Test round trips, seeds and lifted singularities."""

    def test_roundtrip(self):
        curve = loop(-0.8 + 0.1j, 0.7, 1)
        lifted = levi_civita_lift(curve, Primary.E, PARAMS)
        assert lifted.roundtrip_error() < 1e-12
        np.testing.assert_allclose(levi_civita_map(lifted.components[0].z[:len(lifted.base)], -1.0),
                                   lifted.base.z, atol=1e-12)

    def test_principal_seed(self):
        curve = loop(-1.0, 0.5, 1)
        lifted = levi_civita_lift(curve, Primary.E, PARAMS)
        assert lifted.components[0].z[0] == pytest.approx(np.sqrt(curve.z[0] + 1.0))

    def test_lifted_singularities(self):
        at_e = levi_civita_lift(loop(-1.0, 0.5, 1), Primary.E, PARAMS)
        at_m = levi_civita_lift(loop(1.0, 0.5, 1), Primary.M, PARAMS)
        assert sorted(p.real for p in at_e.lifted_singularities) == pytest.approx([-math.sqrt(2), math.sqrt(2)])
        assert sorted(p.imag for p in at_m.lifted_singularities) == pytest.approx([-math.sqrt(2), math.sqrt(2)])

    def test_coarse_curve_refined_with_sampler(self):
        lifted = levi_civita_lift(loop(-1.0, 0.5, 1, samples=16), Primary.E, PARAMS)
        assert len(lifted.base) > 16
        np.testing.assert_allclose(np.abs(lifted.base.z + 1.0), 0.5, atol=1e-12)

    def test_coarse_curve_refined_linearly(self):
        z = -1.0 + 0.5 * np.exp(2j * np.pi * np.arange(16) / 16)
        lifted = levi_civita_lift(ClosedCurve.from_complex(z), Primary.E, PARAMS)
        assert len(lifted.base) > 16
        assert lifted.roundtrip_error() < 1e-12

    def test_component_sampler_follows_sheet(self):
        lifted = levi_civita_lift(loop(-1.0, 0.5, 2), Primary.E, PARAMS)
        first = lifted.components[0]
        np.testing.assert_allclose(first.evaluate(first.params), first.z, atol=1e-12)


class TestSingularities:
    """Test curves through the branch point."""

    def test_curve_through_center(self):
        with pytest.raises(SingularityOnCurveError):
            levi_civita_lift(loop(-0.5, 0.5, 1, samples=16), Primary.E, PARAMS)

    def test_other_primary_allowed(self):
        lifted = levi_civita_lift(loop(0.5, 0.5, 1, samples=16), Primary.E, PARAMS)
        assert lifted.component_count == 2
