"""
Unit tests for the closed-form invariants and counting formulas.
"""

import math

import pytest

from twocenter_invariants.numerics.exceptions import DomainError
from twocenter_invariants.numerics.invariants.formulas import (
    DistinguishedKind,
    birkhoff_double_point_formula,
    collision_kind,
    covering_jem,
    covering_jplus_check,
    distinguished_j0,
    double_point_formula,
    parity_identity,
    selfintersection_formula,
    theorem_formulas,
)
from twocenter_invariants.numerics.types import HalfInteger

COPRIME_PAIRS = [(k, l) for k in range(1, 8) for l in range(1, 8) if math.gcd(k, l) == 1]


class TestTheoremFormulas:
    """Test the invariant sets of T_{k,l} orbits."""

    def test_three_two(self):
        found = theorem_formulas(3, 2)
        assert found.j0 == 4
        assert found.jE == 1 and found.jM == 1
        assert (found.jEM, found.n) == (0, 2)
        assert str(found) == "{4, 1, 1, (0 mod 4), 2}"

    def test_two_three(self):
        found = theorem_formulas(2, 3)
        assert found.j0 == 5
        assert found.jE == 9 and found.jM == 9
        assert (found.jEM, found.n) == (2, 3)
        assert str(found) == "{5, 9, 9, (2 mod 6), 3}"

    def test_one_one(self):
        found = theorem_formulas(1, 1)
        assert (found.j0, found.jE, found.n, found.jEM) == (1, 1, 1, 0)

    @pytest.mark.parametrize("k,l", [(2, 4), (3, 3), (6, 9)])
    def test_rejects_non_coprime(self, k, l):
        with pytest.raises(DomainError):
            theorem_formulas(k, l)

    @pytest.mark.parametrize("k,l", COPRIME_PAIRS)
    def test_values_are_integers(self, k, l):
        found = theorem_formulas(k, l)
        assert found.j0.is_integer and found.jE.is_integer
        assert found.jE == found.jM
        assert 0 <= found.jEM < 2 * l


# ============================================================================
# DISTINGUISHED ORBITS
# ============================================================================


class TestDistinguishedOrbits:
    """Test 𝒥₀ of brake and collision orbits from their self-intersections."""

    def test_offsets(self):
        assert distinguished_j0(DistinguishedKind.BRAKE_BRAKE, 2) == 4
        assert distinguished_j0(DistinguishedKind.BRAKE_COLLISION, 0) == HalfInteger(1)
        assert distinguished_j0(DistinguishedKind.COLLISION_TYPE_I, 1) == 4
        assert distinguished_j0(DistinguishedKind.COLLISION_TYPE_II, 2) == 5

    def test_accepts_kind_value(self):
        assert distinguished_j0("cc-type-II", 0) == 1

    def test_rejects_negative_count(self):
        with pytest.raises(DomainError):
            distinguished_j0(DistinguishedKind.BRAKE_BRAKE, -1)

    def test_collision_kind(self):
        assert collision_kind(2) is DistinguishedKind.COLLISION_TYPE_I
        assert collision_kind(3) is DistinguishedKind.COLLISION_TYPE_II

    @pytest.mark.parametrize("k,l,expected", [(3, 2, 1), (7, 5, 14), (1, 1, 0), (2, 3, 2), (1, 2, 0)])
    def test_selfintersections(self, k, l, expected):
        assert selfintersection_formula(k, l) == expected

    @pytest.mark.parametrize("k,l", COPRIME_PAIRS)
    def test_collision_orbit_agrees_with_generic(self, k, l):
        count = selfintersection_formula(k, l)
        assert distinguished_j0(collision_kind(l), count) == theorem_formulas(k, l).j0


# ============================================================================
# COVERING AND COUNTING
# ============================================================================


class TestCoveringFormula:
    """Test J⁺ of the Birkhoff lift through the covering formula."""

    def test_examples(self):
        assert covering_jem(3, 2) == 0
        assert covering_jem(2, 3) == -4

    def test_degree_one_is_identity(self):
        assert covering_jplus_check(1, -6, 3, 3) == -6

    @pytest.mark.parametrize("k,l", COPRIME_PAIRS)
    def test_agrees_with_theorem(self, k, l):
        assert covering_jem(k, l) % (2 * l) == theorem_formulas(k, l).jEM


class TestCountingFormulas:
    """Test double-point counts and the parity identity."""

    def test_double_points(self):
        assert double_point_formula(3, 2) == 9
        assert double_point_formula(2, 3) == 10
        assert double_point_formula(1, 1) == 1

    def test_lift_double_points(self):
        assert birkhoff_double_point_formula(2, 3) == 4
        assert birkhoff_double_point_formula(3, 2) == 3
        assert birkhoff_double_point_formula(5, 1) == 0

    @pytest.mark.parametrize("k,l", [(k, l) for k, l in COPRIME_PAIRS if l % 2 == 1])
    def test_parity_identity_for_odd_l(self, k, l):
        found = theorem_formulas(k, l)
        assert parity_identity(found.j0) == found.jE

    def test_parity_identity_of_half_integer(self):
        assert parity_identity(HalfInteger(9)) == 8
