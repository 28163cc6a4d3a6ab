"""Public API for the two-center invariants: numeric pipeline, closed forms and verification."""
from __future__ import annotations

from .formulas import (
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
from .model import model_birkhoff_curve
from .numeric import (
    NumericInvariants,
    compute_invariants,
    j0_numeric,
    jE_numeric,
    jEM_numeric,
    jM_numeric,
)
from .verification import Check, VerificationReport, verify_torus

__all__ = [
    "Check",
    "DistinguishedKind",
    "NumericInvariants",
    "VerificationReport",
    "birkhoff_double_point_formula",
    "collision_kind",
    "compute_invariants",
    "covering_jem",
    "covering_jplus_check",
    "distinguished_j0",
    "double_point_formula",
    "j0_numeric",
    "jE_numeric",
    "jEM_numeric",
    "jM_numeric",
    "model_birkhoff_curve",
    "parity_identity",
    "selfintersection_formula",
    "theorem_formulas",
    "verify_torus",
]
