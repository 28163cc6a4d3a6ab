"""
Lifting closed curves through branched double covers.

Both covers used here are two-sheeted with square-root branching, so a lift
is determined by a continuous branch of √(w − b) (Levi-Civita, one branch
point b) or √((w − 1)(w + 1)) (Birkhoff, branch points ±1). The branch is
followed through the continuous angle of w − b along the samples; the
sheets swap after one traversal exactly when the total winding about the
branch points is odd.

A marked sample sitting on a branch point is a collision bounce: the curve
leaves b in the direction it came from, w − b ~ τ² and the root changes
sign, so the passage counts as one full turn about b.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from ..config import (
    LIFT_MAX_ANGULAR_STEP,
    LIFT_MAX_REFINEMENTS,
    LIFT_ROUNDTRIP_TOL,
    REFINE_FACTOR,
    SINGULARITY_TOL,
)
from ..exceptions import BranchTrackingError, SingularityOnCurveError
from ..topology.curve import ClosedCurve

logger = logging.getLogger(__name__)

ComplexMap = Callable[[np.ndarray], np.ndarray]
RootPair = Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]]


@dataclass(frozen=True, eq=False)
class LiftedCurve:
    """
    Preimage of a closed curve under a double cover.

    With one component the component runs twice over the base curve (sample
    i and i + N both lie over base sample i). With two components each runs
    once and the second is the deck image of the first.

    Attributes:
        cover: "levi_civita_E", "levi_civita_M" or "birkhoff"
        base: The (possibly refined) base curve that was lifted
        components: One or two lifted closed curves
        lifted_singularities: Preimages of the other primary (Levi-Civita)
        covering_map: The cover, lifted plane to base plane
        deck: The deck transformation swapping the sheets
    """

    cover: str
    base: ClosedCurve
    components: Tuple[ClosedCurve, ...]
    lifted_singularities: Tuple[complex, ...]
    covering_map: ComplexMap
    deck: ComplexMap

    @property
    def component_count(self) -> int:
        return len(self.components)

    def base_indices(self, component: int = 0) -> np.ndarray:
        """Base sample lying under each sample of a component."""
        n = len(self.base)
        indices = np.arange(len(self.components[component]))
        return indices % n

    def roundtrip_error(self) -> float:
        """max |cover(lifted sample) − base sample| over all components."""
        base_z = self.base.z
        worst = 0.0
        for c, component in enumerate(self.components):
            image = self.covering_map(component.z)
            worst = max(worst, float(np.max(np.abs(image - base_z[self.base_indices(c)]))))
        return worst

    def deck_error(self) -> float:
        """max distance between the deck image of component 0 and component 1."""
        if self.component_count != 2:
            return 0.0
        first, second = self.components
        return float(np.max(np.abs(self.deck(first.z) - second.z)))


# ============================================================================
# BRANCH CONTINUATION
# ============================================================================


@dataclass(frozen=True)
class BranchAngle:
    """
    Continuous angle of w − b along a closed sample sequence.

    Attributes:
        theta: Angle at every sample; at a bounce sample the modulus is
            (numerically) zero and theta is the midpoint of its neighbours
        winding: Total turn / 2π after one traversal, bounces counted as one
        steps: Principal angle step of every segment (0 at bounce segments)
    """

    theta: np.ndarray
    winding: int
    steps: np.ndarray


def branch_angle(w: np.ndarray, branch: complex, markers: Sequence[int] = (),
                 tol: float = SINGULARITY_TOL) -> BranchAngle:
    """
    Follow the angle of w − branch around the closed curve w.

    Raises:
        SingularityOnCurveError: If an unmarked sample lies within tol of
            the branch point
        BranchTrackingError: If the curve runs through the branch point
            transversally or stays on it for consecutive samples
    """
    n = len(w)
    rel = np.asarray(w, dtype=complex) - branch
    near = np.abs(rel) <= tol
    marked = np.zeros(n, dtype=bool)
    marked[list(markers)] = True
    if np.any(near & ~marked):
        bad = int(np.flatnonzero(near & ~marked)[0])
        raise SingularityOnCurveError(
            f"sample {bad} lies within {tol:g} of the branch point ({branch.real:g}, {branch.imag:g})"
        )
    good = np.flatnonzero(~near)
    if len(good) < 2:
        raise BranchTrackingError("curve stays on the branch point")
    nxt = np.roll(good, -1)
    gap = (nxt - good) % n
    if np.any(gap > 2):
        raise BranchTrackingError("consecutive samples on the branch point")

    steps = np.angle(rel[nxt] / rel[good])
    bounce = gap == 2
    if np.any(np.abs(steps[bounce]) > math.pi / 2.0):
        at = int((good[bounce][np.argmax(np.abs(steps[bounce]))] + 1) % n)
        raise BranchTrackingError(f"curve crosses the branch point transversally at sample {at}")
    turns = steps + 2.0 * math.pi * bounce

    theta = np.empty(n)
    theta[good[0]] = np.angle(rel[good[0]])
    theta[good[1:]] = theta[good[0]] + np.cumsum(turns[:-1])
    for k in np.flatnonzero(bounce):
        theta[(good[k] + 1) % n] = theta[good[k]] + turns[k] / 2.0

    total = float(np.sum(turns)) / (2.0 * math.pi)
    winding = int(round(total))
    if abs(total - winding) > 1e-6:
        raise BranchTrackingError(f"angle sum {total:.9g} turns is not an integer")

    segment_steps = np.zeros(n)
    segment_steps[good[~bounce]] = steps[~bounce]
    return BranchAngle(theta=theta, winding=winding, steps=segment_steps)


def coarse_segments(curve: ClosedCurve, branches: Sequence[complex],
                    max_step: float = LIFT_MAX_ANGULAR_STEP) -> Tuple[np.ndarray, float]:
    """Segments whose angular step seen from a branch point exceeds max_step, and the worst step."""
    bad = []
    worst = 0.0
    for b in branches:
        steps = np.abs(branch_angle(curve.z, b, curve.markers).steps)
        bad.append(np.flatnonzero(steps > max_step))
        worst = max(worst, float(steps.max()))
    return np.unique(np.concatenate(bad)), worst


def refine_for_branches(curve: ClosedCurve, branches: Sequence[complex],
                        max_step: float = LIFT_MAX_ANGULAR_STEP,
                        max_rounds: int = LIFT_MAX_REFINEMENTS) -> ClosedCurve:
    """
    Insert samples until no segment turns by more than max_step about any
    branch point. New samples come from the curve's sampler when it has one.

    Raises:
        BranchTrackingError: If max_rounds rounds do not suffice
    """
    for round_no in range(max_rounds):
        bad, worst = coarse_segments(curve, branches, max_step)
        if len(bad) == 0:
            return curve
        factor = int(min(REFINE_FACTOR, math.ceil(worst / max_step) + 1))
        logger.debug("lift refinement round %d: %d segment(s), worst step %.3f rad, factor %d",
                     round_no + 1, len(bad), worst, factor)
        curve = curve.refined(bad, factor)
    bad, worst = coarse_segments(curve, branches, max_step)
    if len(bad):
        raise BranchTrackingError(
            f"angular step {worst:.3f} rad still above {max_step:g} after {max_rounds} refinements"
        )
    return curve


# ============================================================================
# ASSEMBLY
# ============================================================================


def _branch_sampler(polyline: ClosedCurve, base: ClosedCurve, doubled: bool,
                    roots: RootPair) -> Callable[[np.ndarray], np.ndarray]:
    """Analytic sampler of a lifted component: the root nearest the lifted polyline."""

    def sampler(t: np.ndarray) -> np.ndarray:
        t = np.mod(np.asarray(t, dtype=float), 1.0)
        guess = polyline.interpolate(t)
        w = base.evaluate(np.mod(2.0 * t, 1.0) if doubled else t)
        first, second = roots(w)
        return np.where(np.abs(first - guess) <= np.abs(second - guess), first, second)

    return sampler


def _component(z: np.ndarray, params: np.ndarray, markers: Sequence[int], base: ClosedCurve,
               doubled: bool, roots: RootPair) -> ClosedCurve:
    polyline = ClosedCurve.from_complex(z, markers, params)
    return ClosedCurve.from_complex(z, markers, params,
                                    sampler=_branch_sampler(polyline, base, doubled, roots))


def assemble_lift(cover: str, base: ClosedCurve, sheet: np.ndarray, swapped: bool,
                  roots: RootPair, covering_map: ComplexMap, deck: ComplexMap,
                  lifted_singularities: Tuple[complex, ...] = (),
                  roundtrip_tol: float = LIFT_ROUNDTRIP_TOL) -> LiftedCurve:
    """
    Build the components from the continuously lifted first sheet.

    Args:
        sheet: Lift of every base sample on the starting sheet
        swapped: Whether the sheets swap after one traversal

    Raises:
        BranchTrackingError: If the lift does not map back onto the base curve
    """
    n = len(base)
    markers = base.markers
    if swapped:
        z = np.concatenate([sheet, deck(sheet)])
        params = np.concatenate([base.params / 2.0, (base.params + 1.0) / 2.0])
        lifted_markers = tuple(markers) + tuple(m + n for m in markers)
        components: Tuple[ClosedCurve, ...] = (
            _component(z, params, lifted_markers, base, True, roots),
        )
    else:
        components = tuple(_component(part, base.params, markers, base, False, roots)
                           for part in (sheet, deck(sheet)))
    lifted = LiftedCurve(cover=cover, base=base, components=components,
                         lifted_singularities=lifted_singularities,
                         covering_map=covering_map, deck=deck)
    error = lifted.roundtrip_error()
    if error > roundtrip_tol * base.scale:
        raise BranchTrackingError(f"lift maps back with error {error:.2e}")
    logger.debug("%s lift: %d component(s), %d base samples, round trip %.1e",
                 cover, lifted.component_count, n, error)
    return lifted


def lift_to_dict(lifted: LiftedCurve, orbit: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """
    Lift dump: the orbit dump fields (when given) plus the cover, the
    component count, the lifted singularities and the component samples.
    """
    payload: Dict[str, Any] = dict(orbit or {})
    payload["cover"] = lifted.cover
    payload["components"] = lifted.component_count
    payload["lifted_singularities"] = [[p.real, p.imag] for p in lifted.lifted_singularities]
    payload["samples"] = lifted.components[0].points.tolist()
    payload["component_samples"] = [c.points.tolist() for c in lifted.components]
    payload["collision_markers"] = list(lifted.components[0].markers)
    return payload
