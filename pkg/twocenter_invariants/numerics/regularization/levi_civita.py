"""
Levi-Civita regularization at one primary: the complex squaring cover
z ↦ z² + b, branched over the primary b.
"""

from __future__ import annotations

import cmath
import logging
from typing import Union

import numpy as np

from ..config import LIFT_MAX_ANGULAR_STEP, SINGULARITY_TOL
from ..topology.curve import ClosedCurve
from ..types import EulerParams, Primary
from .lift import LiftedCurve, assemble_lift, branch_angle, refine_for_branches

logger = logging.getLogger(__name__)


def levi_civita_map(z, center: complex = 0j):
    """L(z) = z², translated so the origin lands on the center."""
    return np.asarray(z, dtype=complex) ** 2 + center


def levi_civita_lift(curve: ClosedCurve, center: Union[Primary, str], params: EulerParams,
                     tol: float = SINGULARITY_TOL,
                     max_step: float = LIFT_MAX_ANGULAR_STEP) -> LiftedCurve:
    """
    Preimage of the curve under the squaring cover branched at one primary.

    The lift starts on the principal root. It is connected exactly when the
    curve winds an odd number of times around the center; the connected lift
    then winds w times around the origin. Otherwise each of the two
    components winds w/2 times and the second is the first rotated by 180°.

    Args:
        curve: Base curve in the q-plane
        center: The primary the cover is branched over
        params: Positions of the primaries
        tol: Minimal distance of the curve from the center
        max_step: Largest angle a segment may subtend at the center

    Returns:
        LiftedCurve whose lifted_singularities are the two square roots of
        the other primary (M₁, M₂ for center E; E₁, E₂ for center M)

    Raises:
        SingularityOnCurveError: If the curve comes within tol of the center
        BranchTrackingError: If the root cannot be followed unambiguously
    """
    center = Primary(center)
    b = center.position(params)
    other = center.other.position(params) - b
    root = cmath.sqrt(other)

    base = refine_for_branches(curve, [b], max_step)
    angle = branch_angle(base.z, b, base.markers, tol)
    sheet = np.sqrt(np.abs(base.z - b)) * np.exp(0.5j * angle.theta)
    logger.debug("Levi-Civita lift at %s: winding %d about the center", center.value, angle.winding)

    def roots(w):
        r = np.sqrt(np.asarray(w, dtype=complex) - b)
        return r, -r

    return assemble_lift(
        cover=f"levi_civita_{center.value}",
        base=base,
        sheet=sheet,
        swapped=angle.winding % 2 == 1,
        roots=roots,
        covering_map=lambda z: levi_civita_map(z, b),
        deck=lambda z: -np.asarray(z),
        lifted_singularities=(root, -root),
    )
