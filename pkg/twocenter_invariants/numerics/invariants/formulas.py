"""
Closed-form values of the two-center invariants of T_{k,l} lemniscate orbits
and the counting formulas they are cross-checked against.
"""

from __future__ import annotations

import math
from enum import Enum

from ..dynamics.torus import check_coprime
from ..exceptions import DomainError
from ..types import HalfInteger, InvariantSet


class DistinguishedKind(Enum):
    """Orbit types with a closed-form 𝒥₀ in terms of their self-intersections."""

    BRAKE_BRAKE = "brake-brake"
    BRAKE_COLLISION = "brake-collision"
    COLLISION_TYPE_I = "cc-type-I"
    COLLISION_TYPE_II = "cc-type-II"


# 2·𝒥₀ − 4N for each kind
_DISTINGUISHED_OFFSET_X2 = {
    DistinguishedKind.BRAKE_BRAKE: 0,
    DistinguishedKind.BRAKE_COLLISION: 1,
    DistinguishedKind.COLLISION_TYPE_I: 4,
    DistinguishedKind.COLLISION_TYPE_II: 2,
}


def theorem_formulas(k: int, l: int) -> InvariantSet:
    """
    {𝒥₀, 𝒥_E, 𝒥_M, (𝒥_{E,M}, n)} of any generic orbit on a T_{k,l} torus.

    Example:
        >>> str(theorem_formulas(3, 2))
        '{4, 1, 1, (0 mod 4), 2}'

    Raises:
        DomainError: If gcd(k, l) ≠ 1
    """
    check_coprime(k, l)
    j0 = k * l - k + 1
    if l % 2 == 0:
        if math.gcd(k, l // 2) != 1:
            raise DomainError(f"gcd(k, l/2) must be 1, got k={k}, l={l}")
        j_center = k * l // 2 - k + 1
    else:
        j_center = 2 * k * l - 2 * k + 1
    return InvariantSet(
        j0=HalfInteger.from_int(j0),
        jE=HalfInteger.from_int(j_center),
        jM=HalfInteger.from_int(j_center),
        n=l,
        jEM=(1 - k + k * l - l * l) % (2 * l),
    )


def selfintersection_formula(k: int, l: int) -> int:
    """Self-intersections of the collision-collision orbits on T_{k,l}."""
    check_coprime(k, l)
    if l % 2 == 0:
        return (k * (l - 1) - 1) // 2
    return k * (l - 1) // 2


def collision_kind(l: int) -> DistinguishedKind:
    """Both collisions at one primary for l even, one at each for l odd."""
    return DistinguishedKind.COLLISION_TYPE_I if l % 2 == 0 else DistinguishedKind.COLLISION_TYPE_II


def distinguished_j0(kind, count: int) -> HalfInteger:
    """
    𝒥₀ of a distinguished orbit with `count` self-intersections:
    2N, 2N + ½, 2N + 2 and 2N + 1 for brake-brake, brake-collision and
    collision-collision orbits of type I and II.

    Raises:
        DomainError: If count is negative
    """
    if count < 0:
        raise DomainError(f"self-intersection count must be nonnegative, got {count}")
    kind = DistinguishedKind(kind)
    return HalfInteger(4 * count + _DISTINGUISHED_OFFSET_X2[kind])


def covering_jplus_check(degree: int, jplus_base: int, n_base: int, n_lift: int) -> int:
    """J⁺ of a degree-d lift: d²·J⁺(K) − (d² − 1) + n_lift − d²·n_base."""
    d2 = degree * degree
    return d2 * jplus_base - (d2 - 1) + n_lift - d2 * n_base


def covering_jem(k: int, l: int) -> int:
    """J⁺ of the lift through a degree-l cover of the circle with n_lift = kl − k."""
    return covering_jplus_check(l, 0, 0, k * l - k)


def double_point_formula(k: int, l: int) -> int:
    """Double points of a generic orbit on T_{k,l}."""
    check_coprime(k, l)
    return 2 * k * l - k


def birkhoff_double_point_formula(k: int, l: int) -> int:
    """Double points of one Birkhoff-lift component of a generic orbit on T_{k,l}."""
    check_coprime(k, l)
    return k * (l - 1)


def parity_identity(j0: HalfInteger) -> HalfInteger:
    """𝒥_E = 𝒥_M = 2𝒥₀ − 1 when both windings about the primaries are odd."""
    return HalfInteger(2 * j0.doubled - 2)
