"""
Custom exceptions for the two-center invariant pipeline.

The hierarchy mirrors the pipeline stages so callers can react per stage:
dynamics (tori and orbits), topology (curves and arrangements) and
regularization (lifts). DomainError marks violated preconditions.
"""


class TwoCenterError(Exception):
    """Base exception for two-center invariant errors."""

    pass


class DomainError(TwoCenterError, ValueError):
    """Parameter outside the domain of an operation."""

    pass


class VerificationError(TwoCenterError):
    """Verification harness contract violated."""

    pass


# ============================================================================
# DYNAMICS
# ============================================================================


class DynamicsError(TwoCenterError):
    """Error while building tori or tracing orbits."""

    pass


class BoundaryTorusError(DynamicsError):
    """Separation constant sits on a region boundary (critical torus)."""

    pass


class NoTurningPointError(DynamicsError):
    """The λ-effective polynomial has no admissible positive root."""

    pass


class QuadratureError(DynamicsError):
    """Quadrature did not reach the requested tolerance."""

    pass


class NotLemniscateError(DynamicsError):
    """ν does not circulate: p_ν² vanishes or turns negative somewhere."""

    pass


class RotationNumberUnattainableError(DynamicsError):
    """The requested rotation number is not attained on the L-slice."""

    pass


class CollisionOnTraceError(DynamicsError):
    """A generic trace passes through a primary."""

    pass


# ============================================================================
# TOPOLOGY
# ============================================================================


class TopologyError(TwoCenterError):
    """Error in planar curve topology."""

    pass


class CurveFormatError(TopologyError):
    """Sample array does not describe a valid closed polyline."""

    pass


class NonGenericCurveError(TopologyError):
    """Curve has a tangency or a triple point."""

    def __init__(self, message: str, location=None, angle=None):
        super().__init__(message)
        self.location = location
        self.angle = angle


class PointOnCurveError(TopologyError):
    """Winding number queried at a point on the curve."""

    pass


class ArrangementInconsistencyError(TopologyError):
    """Planar subdivision failed the Euler or face-winding checks."""

    pass


# ============================================================================
# REGULARIZATION
# ============================================================================


class RegularizationError(TwoCenterError):
    """Error while lifting through a covering map."""

    pass


class SingularityOnCurveError(RegularizationError):
    """Curve passes through a branch point of the cover."""

    pass


class BranchTrackingError(RegularizationError):
    """Nearest-root continuation became ambiguous."""

    pass
