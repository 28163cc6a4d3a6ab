"""Public API for lifting curves through the Levi-Civita and Birkhoff covers."""
from __future__ import annotations

from .birkhoff import birkhoff_lift, birkhoff_map, n_invariant
from .levi_civita import levi_civita_lift, levi_civita_map
from .lift import LiftedCurve, branch_angle, lift_to_dict, refine_for_branches

__all__ = [
    "LiftedCurve",
    "birkhoff_lift",
    "birkhoff_map",
    "branch_angle",
    "levi_civita_lift",
    "levi_civita_map",
    "lift_to_dict",
    "n_invariant",
    "refine_for_branches",
]
