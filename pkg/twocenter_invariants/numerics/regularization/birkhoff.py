"""
Birkhoff regularization: the cover B(z) = ½(z + 1/z), branched over both
primaries ±1 with deck transformation z ↦ 1/z.

In elliptic coordinates B(e^{λ+iν}) = cosh(λ + iν), so circles |z| = e^{±λ₀}
cover the coordinate ellipses and rays arg z = ±ν₀ the coordinate hyperbolas.
"""

from __future__ import annotations

import logging

import numpy as np

from ..config import LIFT_MAX_ANGULAR_STEP, SINGULARITY_TOL
from ..exceptions import DomainError, RegularizationError
from ..topology.curve import ClosedCurve
from ..topology.winding import winding_number
from .lift import LiftedCurve, assemble_lift, branch_angle, refine_for_branches

logger = logging.getLogger(__name__)

BIRKHOFF = "birkhoff"
_BRANCH_POINTS = (1.0 + 0j, -1.0 + 0j)


def birkhoff_map(z):
    z = np.asarray(z, dtype=complex)
    return 0.5 * (z + 1.0 / z)


def _inverse(z):
    return 1.0 / np.asarray(z, dtype=complex)


def birkhoff_lift(curve: ClosedCurve, tol: float = SINGULARITY_TOL,
                  max_step: float = LIFT_MAX_ANGULAR_STEP) -> LiftedCurve:
    """
    Preimage of a curve under the Birkhoff map, in coordinates with the
    primaries at ∓1.

    The lift is connected exactly when w_E + w_M is odd; otherwise its two
    components are exchanged by z ↦ 1/z. Collision curves may pass through
    ±1 at marked samples.

    Raises:
        SingularityOnCurveError: If an unmarked sample lies within tol of ±1
        BranchTrackingError: If the root cannot be followed unambiguously
    """
    base = refine_for_branches(curve, _BRANCH_POINTS, max_step)
    z = base.z
    angles = [branch_angle(z, b, base.markers, tol) for b in _BRANCH_POINTS]
    modulus = np.sqrt(np.abs(z - 1.0) * np.abs(z + 1.0))
    root = modulus * np.exp(0.5j * (angles[0].theta + angles[1].theta))
    winding = angles[0].winding + angles[1].winding
    logger.debug("Birkhoff lift: windings %d about M and %d about E",
                 angles[0].winding, angles[1].winding)

    def roots(w):
        w = np.asarray(w, dtype=complex)
        first = w + np.sqrt(w * w - 1.0)
        return first, 1.0 / first

    return assemble_lift(
        cover=BIRKHOFF,
        base=base,
        sheet=z + root,
        swapped=winding % 2 == 1,
        roots=roots,
        covering_map=birkhoff_map,
        deck=_inverse,
    )


def n_invariant(lifted: LiftedCurve) -> int:
    """
    |winding| of a Birkhoff lift component around the origin.

    Raises:
        DomainError: If the lift does not come from birkhoff_lift
        RegularizationError: If the two components disagree
        PointOnCurveError: If a lifted sample sits on the origin
    """
    if lifted.cover != BIRKHOFF:
        raise DomainError(f"n is defined on Birkhoff lifts, got a {lifted.cover} lift")
    values = {abs(winding_number(component, 0j)) for component in lifted.components}
    if len(values) != 1:
        raise RegularizationError(f"Birkhoff components wind {sorted(values)} times around the origin")
    return values.pop()
