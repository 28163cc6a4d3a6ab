"""
Unit tests for ClosedCurve.
"""

import numpy as np
import pytest

from twocenter_invariants.numerics.exceptions import CurveFormatError
from twocenter_invariants.numerics.topology.curve import ClosedCurve


def circle(s):
    return np.exp(2j * np.pi * np.asarray(s))


class TestValidation:
    """Test sample validation."""

    def test_too_few_points(self):
        with pytest.raises(CurveFormatError, match="at least 8"):
            ClosedCurve.from_function(circle, 7)

    def test_repeated_consecutive_points(self):
        z = circle(np.arange(16) / 16)
        z[5] = z[4]
        with pytest.raises(CurveFormatError, match="coincide"):
            ClosedCurve.from_complex(z)

    def test_non_finite(self):
        z = circle(np.arange(16) / 16)
        z[3] = np.nan
        with pytest.raises(CurveFormatError):
            ClosedCurve.from_complex(z)

    def test_bad_shape(self):
        with pytest.raises(CurveFormatError):
            ClosedCurve.from_points(np.zeros((10, 3)))

    def test_marker_out_of_range(self):
        with pytest.raises(CurveFormatError):
            ClosedCurve.from_complex(circle(np.arange(16) / 16), markers=(16,))

    def test_immutable(self):
        curve = ClosedCurve.from_function(circle, 16)
        with pytest.raises(ValueError):
            curve.points[0, 0] = 5.0


class TestDerivedCurves:
    """Test reversal, rigid motions and refinement."""

    def test_reversed_keeps_start(self):
        curve = ClosedCurve.from_function(circle, 16)
        rev = curve.reversed()
        np.testing.assert_allclose(rev.points[0], curve.points[0])
        np.testing.assert_allclose(rev.points[1], curve.points[-1])
        np.testing.assert_allclose(rev.evaluate(rev.params), rev.z, atol=1e-12)

    def test_reversed_markers(self):
        curve = ClosedCurve.from_complex(circle(np.arange(16) / 16), markers=(0, 4))
        assert curve.reversed().markers == (0, 12)

    def test_transformed(self):
        curve = ClosedCurve.from_function(circle, 16).transformed(rotation=np.pi / 2, translation=2.0)
        np.testing.assert_allclose(curve.z[0], 2.0 + 1j, atol=1e-15)
        np.testing.assert_allclose(curve.evaluate(np.array([0.0])), [2.0 + 1j], atol=1e-15)

    def test_refined_uses_sampler(self):
        curve = ClosedCurve.from_function(circle, 16)
        refined = curve.refined(np.array([0, 15]), 4)
        assert len(refined) == 16 + 2 * 3
        np.testing.assert_allclose(np.abs(refined.z), 1.0, atol=1e-15)

    def test_refined_keeps_markers_on_points(self):
        curve = ClosedCurve.from_complex(circle(np.arange(16) / 16), markers=(8,),
                                         sampler=circle)
        refined = curve.refined(np.arange(16), 2)
        assert len(refined) == 32
        assert refined.markers == (16,)
        np.testing.assert_allclose(refined.z[16], -1.0, atol=1e-15)

    def test_interpolate_without_sampler(self):
        curve = ClosedCurve.from_complex(circle(np.arange(8) / 8))
        mid = curve.interpolate(np.array([1.0 / 16.0]))[0]
        assert mid == pytest.approx((curve.z[0] + curve.z[1]) / 2.0)

    def test_arc_wraps(self):
        curve = ClosedCurve.from_function(circle, 16)
        arc = curve.arc(14, 1)
        assert len(arc) == 4
        np.testing.assert_allclose(arc[-1], curve.points[1])
