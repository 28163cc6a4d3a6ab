"""
Numerical core of the two-center invariants: Euler-problem dynamics, plane
curve topology, regularizing covers and the invariants built on them.
"""

from .exceptions import DomainError, TwoCenterError
from .types import EulerParams, HalfInteger, InvariantSet, Primary, TorusData

__all__ = [
    "DomainError",
    "EulerParams",
    "HalfInteger",
    "InvariantSet",
    "Primary",
    "TorusData",
    "TwoCenterError",
]
