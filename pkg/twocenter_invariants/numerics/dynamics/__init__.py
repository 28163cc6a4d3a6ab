"""Public API for the Euler-problem dynamics: regions, periods, tori and orbits."""
from __future__ import annotations

from .orbit import (
    CollisionSelector,
    OrbitTrace,
    cartesian_point,
    collision_arc,
    collision_orbit,
    collision_trace,
    elliptic_to_cartesian,
    energy_residual,
    has_brake_points,
    hausdorff_distance,
    max_abs_lambda,
    nu_is_monotone,
    orbit_from_dict,
    orbit_to_csv,
    orbit_to_dict,
    reflection_defect,
    trace_orbit,
    trace_states,
)
from .quadrature import (
    LambdaTable,
    NuTable,
    gauss_period_lambda,
    gauss_period_nu,
    period_lambda,
    period_nu,
    rotation_number,
)
from .regions import (
    classify_region,
    critical_energy,
    effective_lambda,
    effective_nu,
    lambda_turning_point,
    lemniscate_interval,
    separation_level,
)
from .torus import (
    check_coprime,
    check_energy,
    collision_phases,
    collision_spacing,
    find_torus,
    generic_phase,
)

__all__ = [
    "CollisionSelector",
    "LambdaTable",
    "NuTable",
    "OrbitTrace",
    "cartesian_point",
    "check_coprime",
    "check_energy",
    "classify_region",
    "collision_arc",
    "collision_orbit",
    "collision_phases",
    "collision_spacing",
    "collision_trace",
    "critical_energy",
    "effective_lambda",
    "effective_nu",
    "elliptic_to_cartesian",
    "energy_residual",
    "find_torus",
    "gauss_period_lambda",
    "gauss_period_nu",
    "generic_phase",
    "has_brake_points",
    "hausdorff_distance",
    "lambda_turning_point",
    "lemniscate_interval",
    "max_abs_lambda",
    "nu_is_monotone",
    "orbit_from_dict",
    "orbit_to_csv",
    "orbit_to_dict",
    "period_lambda",
    "period_nu",
    "reflection_defect",
    "rotation_number",
    "separation_level",
    "trace_orbit",
    "trace_states",
]
