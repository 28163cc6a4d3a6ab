"""
Two-center invariants of lemniscate orbits

Traces the periodic lemniscate orbits of the planar Euler two-center problem
on resonant T_{k,l} tori and computes their invariants 𝒥₀, 𝒥_E, 𝒥_M and
(𝒥_{E,M}, n) numerically, checking them against the closed formulas.
"""

__version__ = "0.1.0"

from twocenter_invariants.numerics.dynamics import find_torus, trace_orbit
from twocenter_invariants.numerics.invariants import (
    VerificationReport,
    compute_invariants,
    theorem_formulas,
    verify_torus,
)
from twocenter_invariants.numerics.types import EulerParams, InvariantSet
from twocenter_invariants.report_generator import ReportGenerator

__all__ = [
    "EulerParams",
    "InvariantSet",
    "ReportGenerator",
    "VerificationReport",
    "compute_invariants",
    "find_torus",
    "theorem_formulas",
    "trace_orbit",
    "verify_torus",
]
