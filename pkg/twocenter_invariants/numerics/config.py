"""
Numerical configuration for the two-center invariant pipeline.

Every tolerance used by the dynamics, topology, regularization and
invariant stages lives here. Operations accept per-call overrides; the
values below are the defaults.
"""

# ============================================================================
# PRIMARIES
# ============================================================================

# E and M sit at the foci of the elliptic coordinate system.
PRIMARY_E = (-1.0, 0.0)
PRIMARY_M = (1.0, 0.0)

# ============================================================================
# QUADRATURE
# ============================================================================

QUAD_REL_TOL = 1e-10
QUAD_EPSREL = 1e-12  # requested from QUADPACK; QUAD_REL_TOL is what we accept
QUAD_LIMIT = 500

# Composite Gauss-Legendre tables used to invert t(λ) and t(ν)
TABLE_PANELS = 256
TABLE_NODES = 16

# ============================================================================
# ROOT FINDING
# ============================================================================

ROOT_TOL = 1e-12
ROTATION_TOL = 1e-10
BRACKET_SEEDS = 64
# Seeds are spread as 0.5 * (1 + tanh(x)), x in [-BRACKET_SPREAD, BRACKET_SPREAD]
BRACKET_SPREAD = 12.0
# Relative margin under which an inequality of the region classifier counts as equality
BOUNDARY_TOL = 1e-12

# ============================================================================
# TRACING
# ============================================================================

MIN_SAMPLES_PER_PERIOD = 64
DEFAULT_SAMPLES_PER_PERIOD = 256
CLOSURE_TOL = 1e-8
ENERGY_TOL = 1e-8
# Distance in the (λ, ν) chart below which a generic trace counts as colliding
COLLISION_TOL = 1e-6
# Default generic phase, as a fraction of the spacing between collision phases
GENERIC_PHASE_FRACTION = 0.5
PHASE_INDEPENDENCE_FRACTIONS = (0.25, 0.5, 0.75)
SYMMETRY_TOL = 1e-6

# ============================================================================
# GEOMETRY
# ============================================================================

CLUSTER_TOL = 1e-7
ANGLE_TOL = 1e-3
# Crossings shallower than this are re-intersected on resampled arcs
REFINE_ANGLE = 0.05
REFINE_FACTOR = 8
REFINE_ROUNDS = 2
# Segment-index window around a shallow crossing that gets resampled
REFINE_WINDOW = 2
POINT_ON_CURVE_TOL = 1e-9
WINDING_RESIDUAL_TOL = 0.05
MIN_CURVE_POINTS = 8
# Rows of the segment-pair intersection search processed per numpy block
INTERSECTION_BLOCK = 256

# ============================================================================
# REGULARIZATION
# ============================================================================

SINGULARITY_TOL = 1e-6
LIFT_MAX_ANGULAR_STEP = 0.2
LIFT_MAX_REFINEMENTS = 24
LIFT_ROUNDTRIP_TOL = 1e-8
COLLISION_EXCLUSION_RADIUS = 1e-6

# ============================================================================
# SWEEP DEFAULTS
# ============================================================================

SWEEP_MUS = (0.5, 0.3)
SWEEP_MAX_K = 5
SWEEP_MAX_L = 5
SWEEP_JOBS = 1

# ============================================================================
# VALIDATION
# ============================================================================


def validate_config() -> bool:
    """
    Validate configuration parameters.

    Returns:
        True if configuration is valid

    Raises:
        AssertionError: If configuration is invalid
    """
    assert 0 < QUAD_EPSREL <= QUAD_REL_TOL, "QUADPACK request looser than accepted tolerance"
    assert ROOT_TOL <= ROTATION_TOL, "Root tolerance looser than rotation tolerance"
    assert BRACKET_SEEDS >= 2, "Bracketing needs at least two seeds"
    assert MIN_SAMPLES_PER_PERIOD >= 64, "Too few samples per period"
    assert DEFAULT_SAMPLES_PER_PERIOD >= MIN_SAMPLES_PER_PERIOD
    assert 0.0 < GENERIC_PHASE_FRACTION < 1.0, "Generic phase must avoid collisions"
    assert all(0.0 < f < 1.0 for f in PHASE_INDEPENDENCE_FRACTIONS)
    assert CLUSTER_TOL < SINGULARITY_TOL, "Clustering must be finer than singularity tolerance"
    assert 0.0 < ANGLE_TOL < REFINE_ANGLE, "Refinement must start above the rejection angle"
    assert REFINE_FACTOR >= 2 and REFINE_ROUNDS >= 1
    assert 0.0 < WINDING_RESIDUAL_TOL < 0.5, "Winding residual must allow unique rounding"
    assert MIN_CURVE_POINTS >= 8
    assert 0.0 < LIFT_MAX_ANGULAR_STEP < 1.0

    return True


# Auto-validate on import
validate_config()
