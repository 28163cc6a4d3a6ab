"""
Unit tests for the smoothed Birkhoff-lift model.
"""

import math

import pytest

from twocenter_invariants.numerics.exceptions import DomainError
from twocenter_invariants.numerics.invariants.formulas import (
    birkhoff_double_point_formula,
    covering_jem,
    theorem_formulas,
)
from twocenter_invariants.numerics.invariants.model import model_birkhoff_curve
from twocenter_invariants.numerics.topology.viro import viro_terms
from twocenter_invariants.numerics.topology.winding import winding_number

SMALL_PAIRS = [(k, l) for k in range(1, 5) for l in range(1, 5) if math.gcd(k, l) == 1]


class TestModelCurve:
    """Test the combinatorics of the model lift."""

    def test_two_three(self):
        terms = viro_terms(model_birkhoff_curve(2, 3))
        assert terms.double_points == 4
        assert terms.jplus == -4

    def test_one_one_is_simple(self):
        curve = model_birkhoff_curve(1, 1)
        assert viro_terms(curve).double_points == 0
        assert viro_terms(curve).jplus == 0
        assert winding_number(curve, 0j) == 1

    def test_rejects_non_coprime(self):
        with pytest.raises(DomainError):
            model_birkhoff_curve(2, 4)

    @pytest.mark.parametrize("k,l", SMALL_PAIRS)
    def test_counts(self, k, l):
        curve = model_birkhoff_curve(k, l)
        terms = viro_terms(curve)
        assert terms.double_points == birkhoff_double_point_formula(k, l)
        assert abs(winding_number(curve, 0j)) == l

    @pytest.mark.parametrize("k,l", SMALL_PAIRS)
    def test_jplus_matches_covering_formula(self, k, l):
        jplus = viro_terms(model_birkhoff_curve(k, l)).jplus
        assert jplus % (2 * l) == covering_jem(k, l) % (2 * l)
        assert jplus % (2 * l) == theorem_formulas(k, l).jEM
