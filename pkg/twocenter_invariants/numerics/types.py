"""
Common value types for the two-center invariant pipeline.

This module provides:
1. EulerParams, Primary - the Euler problem and its two centers
2. RegionLabel - classification of a separation constant
3. EllipticState - one point of phase space in elliptic coordinates
4. SeparationLevel, TorusData - separation constants and T_{k,l} Liouville tori
5. HalfInteger - exact half-integer arithmetic on doubled values
6. InvariantSet - the four two-center invariants of one orbit

All types are immutable and safe to share between threads and processes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import total_ordering
from typing import Any, Dict, Tuple, Union

from .config import PRIMARY_E, PRIMARY_M
from .exceptions import DomainError

# ============================================================================
# PARAMETERS
# ============================================================================


@dataclass(frozen=True)
class EulerParams:
    """
    Physical configuration of the Euler two-center problem.

    Attributes:
        mu: Mass ratio, in the open interval (0, 1)
        c: Energy, negative
        primary_e: Position of the primary E
        primary_m: Position of the primary M

    Example:
        >>> params = EulerParams(mu=0.5, c=-0.5)
        >>> params.critical_energy
        -1.0
    """

    mu: float
    c: float
    primary_e: Tuple[float, float] = PRIMARY_E
    primary_m: Tuple[float, float] = PRIMARY_M

    def __post_init__(self):
        if not (0.0 < self.mu < 1.0) or not math.isfinite(self.mu):
            raise DomainError(f"mass ratio must lie in (0, 1), got {self.mu!r}")
        if not (self.c < 0.0) or not math.isfinite(self.c):
            raise DomainError(f"energy must be negative, got {self.c!r}")

    @property
    def critical_energy(self) -> float:
        """c_J for this mass ratio."""
        return -0.5 - math.sqrt(self.mu - self.mu * self.mu)

    @property
    def e_complex(self) -> complex:
        return complex(*self.primary_e)

    @property
    def m_complex(self) -> complex:
        return complex(*self.primary_m)

    def to_dict(self) -> Dict[str, Any]:
        return {"mu": self.mu, "c": self.c}


class Primary(Enum):
    """One of the two centers."""

    E = "E"
    M = "M"

    @property
    def other(self) -> "Primary":
        return Primary.M if self is Primary.E else Primary.E

    def position(self, params: EulerParams) -> complex:
        return params.e_complex if self is Primary.E else params.m_complex


# ============================================================================
# REGIONS
# ============================================================================


class RegionLabel(Enum):
    """Region of the (μ, c, f_λ) parameter space a torus belongs to."""

    P = "P"
    L = "L"
    S = "S"
    SPRIME = "Sprime"
    NO_MOTION = "NoMotion"


# ============================================================================
# STATES AND TORI
# ============================================================================


@dataclass(frozen=True)
class EllipticState:
    """Phase-space point (λ, ν, p_λ, p_ν) of the regularized system."""

    lam: float
    nu: float
    p_lambda: float
    p_nu: float


@dataclass(frozen=True)
class SeparationLevel:
    """
    A value of the separation constant together with its distances to the
    ends of the lemniscate interval (f_lo, f_hi).

    Near either end the periods depend logarithmically on the distance, so
    the distances are carried exactly instead of being recovered from f by
    cancellation.

    Attributes:
        f: The separation constant f_λ
        gap_lo: f - f_lo, equal to f_λ + 1 + c (half of p_λ² at λ = 0)
        gap_hi: f_hi - f, the minimum over ν of half of p_ν²
    """

    f: float
    gap_lo: float
    gap_hi: float


@dataclass(frozen=True)
class TorusData:
    """
    A T_{k,l} Liouville torus of lemniscate motions.

    Attributes:
        k, l: Coprime positive integers with T_ν / T_λ = k / l
        f_lambda: Separation constant (value of F_λ; F_ν = -f_lambda)
        lambda_max: Turning point of the λ-oscillation
        T_lambda, T_nu: Minimal periods in regularized time
        params: The Euler problem the torus lives in
        gap_lo, gap_hi: Exact distances of f_lambda to the ends of the
            lemniscate interval (see SeparationLevel)
    """

    k: int
    l: int
    f_lambda: float
    lambda_max: float
    T_lambda: float
    T_nu: float
    params: EulerParams
    gap_lo: float
    gap_hi: float

    @property
    def level(self) -> SeparationLevel:
        return SeparationLevel(self.f_lambda, self.gap_lo, self.gap_hi)

    @property
    def rotation_number(self) -> float:
        return self.T_nu / self.T_lambda

    @property
    def period(self) -> float:
        """Total period T = k T_λ (= l T_ν)."""
        return self.k * self.T_lambda

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mu": self.params.mu,
            "c": self.params.c,
            "k": self.k,
            "l": self.l,
            "f_lambda": self.f_lambda,
            "lambda_max": self.lambda_max,
            "T_lambda": self.T_lambda,
            "T_nu": self.T_nu,
        }


# ============================================================================
# EXACT ARITHMETIC
# ============================================================================


@total_ordering
@dataclass(frozen=True)
class HalfInteger:
    """
    Exact half-integer stored as its doubled value.

    Example:
        >>> HalfInteger.from_int(4) + HalfInteger(1)
        HalfInteger(doubled=9)
        >>> str(HalfInteger(9))
        '9/2'
    """

    doubled: int

    def __post_init__(self):
        if isinstance(self.doubled, bool) or not isinstance(self.doubled, int):
            raise TypeError(f"doubled value must be int, got {type(self.doubled).__name__}")

    @classmethod
    def from_int(cls, value: int) -> "HalfInteger":
        return cls(2 * int(value))

    @classmethod
    def half_of(cls, value: int) -> "HalfInteger":
        """value / 2 as a half-integer."""
        return cls(int(value))

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def to_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def __add__(self, other: Union["HalfInteger", int]) -> "HalfInteger":
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInteger(self.doubled + 2 * other)
        if isinstance(other, HalfInteger):
            return HalfInteger(self.doubled + other.doubled)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "HalfInteger":
        return HalfInteger(-self.doubled)

    def __sub__(self, other: Union["HalfInteger", int]) -> "HalfInteger":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInteger):
            return self.doubled == other.doubled
        if isinstance(other, int) and not isinstance(other, bool):
            return self.doubled == 2 * other
        return NotImplemented

    def __lt__(self, other: Union["HalfInteger", int]) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.doubled < 2 * other
        if isinstance(other, HalfInteger):
            return self.doubled < other.doubled
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.doubled)

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"


@dataclass(frozen=True)
class InvariantSet:
    """
    The four two-center invariants of a closed curve.

    jEM is the canonical representative in [0, 2n) when n > 0 and the raw
    J⁺ of the Birkhoff lift when n = 0.
    """

    j0: HalfInteger
    jE: HalfInteger
    jM: HalfInteger
    n: int
    jEM: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be nonnegative, got {self.n}")
        if self.n > 0 and not (0 <= self.jEM < 2 * self.n):
            raise ValueError(f"jEM={self.jEM} outside [0, {2 * self.n})")

    @classmethod
    def from_raw(cls, j0: HalfInteger, jE: HalfInteger, jM: HalfInteger,
                 n: int, jplus_lift: int) -> "InvariantSet":
        """Build the set from the raw J⁺ of the Birkhoff lift."""
        jEM = jplus_lift % (2 * n) if n > 0 else jplus_lift
        return cls(j0=j0, jE=jE, jM=jM, n=n, jEM=jEM)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "j0_x2": self.j0.doubled,
            "jE_x2": self.jE.doubled,
            "jM_x2": self.jM.doubled,
            "n": self.n,
            "jEM": self.jEM,
        }

    def to_display_dict(self) -> Dict[str, Any]:
        """Human-facing values: integers where exact, 'a/2' strings otherwise."""

        def show(value: HalfInteger):
            return value.to_int() if value.is_integer else str(value)

        return {
            "j0": show(self.j0),
            "jE": show(self.jE),
            "jM": show(self.jM),
            "n": self.n,
            "jEM": self.jEM,
        }

    def __str__(self) -> str:
        modulus = f" mod {2 * self.n}" if self.n > 0 else ""
        return f"{{{self.j0}, {self.jE}, {self.jM}, ({self.jEM}{modulus}), {self.n}}}"
