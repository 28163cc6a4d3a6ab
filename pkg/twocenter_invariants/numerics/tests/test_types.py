"""
Unit tests for the shared value types.
"""

import pytest

from twocenter_invariants.numerics.exceptions import DomainError
from twocenter_invariants.numerics.types import EulerParams, HalfInteger, InvariantSet, Primary


class TestEulerParams:
    """Test parameter validation."""

    def test_critical_energy(self):
        assert EulerParams(mu=0.5, c=-0.5).critical_energy == pytest.approx(-1.0)

    @pytest.mark.parametrize("mu", [0.0, 1.0, -0.1, float("nan")])
    def test_rejects_mass_ratio(self, mu):
        with pytest.raises(DomainError):
            EulerParams(mu=mu, c=-0.5)

    @pytest.mark.parametrize("c", [0.0, 0.3, float("nan")])
    def test_rejects_energy(self, c):
        with pytest.raises(DomainError):
            EulerParams(mu=0.5, c=c)

    def test_domain_error_is_value_error(self):
        with pytest.raises(ValueError):
            EulerParams(mu=2.0, c=-0.5)

    def test_primary_positions(self):
        params = EulerParams(mu=0.3, c=-0.6)
        assert Primary.E.position(params) == -1 + 0j
        assert Primary.M.position(params) == 1 + 0j
        assert Primary.E.other is Primary.M


class TestHalfInteger:
    """Test exact half-integer arithmetic."""

    def test_arithmetic(self):
        assert HalfInteger.from_int(4) + HalfInteger(1) == HalfInteger(9)
        assert HalfInteger(9) - 4 == HalfInteger(1)
        assert -HalfInteger(3) == HalfInteger(-3)
        assert 1 + HalfInteger(1) == HalfInteger(3)

    def test_comparisons(self):
        assert HalfInteger(4) == 2
        assert HalfInteger(3) > 1
        assert HalfInteger(3) < 2
        assert sorted([HalfInteger(5), HalfInteger(-1), HalfInteger(2)]) == \
            [HalfInteger(-1), HalfInteger(2), HalfInteger(5)]

    def test_str(self):
        assert str(HalfInteger(9)) == "9/2"
        assert str(HalfInteger(-4)) == "-2"

    def test_to_int(self):
        assert HalfInteger(8).to_int() == 4
        with pytest.raises(ValueError):
            HalfInteger(7).to_int()

    def test_rejects_non_int(self):
        with pytest.raises(TypeError):
            HalfInteger(1.5)
        with pytest.raises(TypeError):
            HalfInteger(True)


class TestInvariantSet:
    """Test the invariant bundle."""

    def test_from_raw_reduces_mod_2n(self):
        found = InvariantSet.from_raw(HalfInteger(10), HalfInteger(18), HalfInteger(18), 3, -4)
        assert found.jEM == 2
        assert str(found) == "{5, 9, 9, (2 mod 6), 3}"

    def test_from_raw_keeps_value_without_modulus(self):
        found = InvariantSet.from_raw(HalfInteger(2), HalfInteger(2), HalfInteger(2), 0, -6)
        assert found.jEM == -6
        assert str(found) == "{1, 1, 1, (-6), 0}"

    def test_rejects_unreduced_jem(self):
        with pytest.raises(ValueError):
            InvariantSet(HalfInteger(8), HalfInteger(2), HalfInteger(2), 2, 4)

    def test_display_dict(self):
        found = InvariantSet(HalfInteger(3), HalfInteger(2), HalfInteger(2), 1, 0)
        assert found.to_display_dict() == {"j0": "3/2", "jE": 1, "jM": 1, "n": 1, "jEM": 0}
        assert found.to_dict()["j0_x2"] == 3
