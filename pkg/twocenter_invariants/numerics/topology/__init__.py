"""Public API for closed-curve topology: double points, arrangements and J⁺."""
from __future__ import annotations

from .arrangement import (
    Arrangement,
    Face,
    arrangement_to_dict,
    build_arrangement,
    double_point_index,
    sector_windings,
)
from .curve import ClosedCurve
from .intersections import (
    DoublePoint,
    count_arc_self_intersections,
    find_double_points,
    resolve_crossings,
)
from .standard_curves import standard_curve
from .viro import ViroTerms, viro_jplus, viro_terms
from .winding import signed_area, winding_number, winding_numbers

__all__ = [
    "Arrangement",
    "ClosedCurve",
    "DoublePoint",
    "Face",
    "ViroTerms",
    "arrangement_to_dict",
    "build_arrangement",
    "count_arc_self_intersections",
    "double_point_index",
    "find_double_points",
    "resolve_crossings",
    "sector_windings",
    "signed_area",
    "standard_curve",
    "viro_jplus",
    "viro_terms",
    "winding_number",
    "winding_numbers",
]
