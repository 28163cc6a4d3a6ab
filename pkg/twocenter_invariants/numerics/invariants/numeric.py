"""
Numeric pipeline for the two-center invariants of a closed curve.

    𝒥₀        = J⁺(K) + w_E(K)²/2 + w_M(K)²/2
    𝒥_E       = J⁺(K̃_E) + w_{M₁}(K̃_E)²/2 + w_{M₂}(K̃_E)²/2   (K̃_E a Levi-Civita lift at E)
    𝒥_M       = the same with E and M exchanged
    (𝒥_{E,M}, n) = (J⁺(K̃) mod 2n, |w₀(K̃)|)                (K̃ a Birkhoff lift component)

Every value that depends on a choice of lift component is evaluated on all
components and must agree.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Tuple, Union

from ..config import ANGLE_TOL
from ..exceptions import RegularizationError
from ..regularization.birkhoff import birkhoff_lift, n_invariant
from ..regularization.levi_civita import levi_civita_lift
from ..topology.arrangement import Arrangement, build_arrangement
from ..topology.curve import ClosedCurve
from ..topology.intersections import resolve_crossings
from ..topology.viro import ViroTerms, viro_terms
from ..topology.winding import winding_number
from ..types import EulerParams, HalfInteger, InvariantSet, Primary

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BaseStage:
    """J⁺ of the curve itself and its windings about the primaries."""

    terms: ViroTerms
    w_E: int
    w_M: int

    @property
    def value(self) -> HalfInteger:
        return HalfInteger.from_int(self.terms.jplus) + HalfInteger.half_of(self.w_E ** 2 + self.w_M ** 2)

    def to_dict(self) -> Dict[str, Any]:
        return {**self.terms.to_dict(), "w_E": self.w_E, "w_M": self.w_M,
                "j0_x2": self.value.doubled}


@dataclass(frozen=True)
class LeviCivitaStage:
    """J⁺ of a Levi-Civita lift and its windings about the lifted other primary."""

    center: Primary
    components: int
    terms: ViroTerms
    lifted_windings: Tuple[int, int]

    @property
    def value(self) -> HalfInteger:
        w1, w2 = self.lifted_windings
        return HalfInteger.from_int(self.terms.jplus) + HalfInteger.half_of(w1 * w1 + w2 * w2)

    def to_dict(self) -> Dict[str, Any]:
        return {**self.terms.to_dict(), "center": self.center.value, "components": self.components,
                "lifted_windings": list(self.lifted_windings),
                f"j{self.center.value}_x2": self.value.doubled}


@dataclass(frozen=True)
class BirkhoffStage:
    """J⁺ and origin winding of a Birkhoff lift component."""

    components: int
    terms: ViroTerms
    n: int

    @property
    def residue(self) -> int:
        return self.terms.jplus % (2 * self.n) if self.n > 0 else self.terms.jplus

    def to_dict(self) -> Dict[str, Any]:
        return {**self.terms.to_dict(), "components": self.components, "n": self.n,
                "jEM": self.residue}


@dataclass(frozen=True)
class NumericInvariants:
    """The invariant set together with the intermediate quantities of every stage."""

    invariants: InvariantSet
    base: BaseStage
    lift_E: LeviCivitaStage
    lift_M: LeviCivitaStage
    birkhoff: BirkhoffStage

    def to_dict(self) -> Dict[str, Any]:
        return {
            "invariants": self.invariants.to_display_dict(),
            "exact": self.invariants.to_dict(),
            "stages": {
                "K": self.base.to_dict(),
                "K_E": self.lift_E.to_dict(),
                "K_M": self.lift_M.to_dict(),
                "K_EM": self.birkhoff.to_dict(),
            },
        }


# ============================================================================
# STAGES
# ============================================================================


def _arrangement(curve: ClosedCurve, angle_tol: float) -> Arrangement:
    return build_arrangement(*resolve_crossings(curve, angle_tol=angle_tol))


def _terms(curve: ClosedCurve, angle_tol: float) -> ViroTerms:
    arrangement = _arrangement(curve, angle_tol)
    return viro_terms(arrangement.curve, arrangement)


def base_stage(curve: ClosedCurve, params: EulerParams, angle_tol: float = ANGLE_TOL) -> BaseStage:
    """
    Raises:
        NonGenericCurveError: If the curve is not a generic immersion
        PointOnCurveError: If the curve passes through a primary
    """
    arrangement = _arrangement(curve, angle_tol)
    terms = viro_terms(arrangement.curve, arrangement)
    w_e = winding_number(arrangement.curve, params.e_complex)
    w_m = winding_number(arrangement.curve, params.m_complex)
    return BaseStage(terms=terms, w_E=w_e, w_M=w_m)


def levi_civita_stage(curve: ClosedCurve, params: EulerParams,
                      center: Union[Primary, str], angle_tol: float = ANGLE_TOL) -> LeviCivitaStage:
    """
    Raises:
        RegularizationError: If the lift components give different values
    """
    center = Primary(center)
    lifted = levi_civita_lift(curve, center, params)
    stages = []
    for component in lifted.components:
        arrangement = _arrangement(component, angle_tol)
        windings = tuple(winding_number(arrangement.curve, p) for p in lifted.lifted_singularities)
        stages.append(LeviCivitaStage(center=center, components=lifted.component_count,
                                      terms=viro_terms(arrangement.curve, arrangement),
                                      lifted_windings=windings))
    values = {stage.value for stage in stages}
    if len(values) != 1:
        raise RegularizationError(
            f"Levi-Civita components at {center.value} disagree: {sorted(str(v) for v in values)}"
        )
    return stages[0]


def birkhoff_stage(curve: ClosedCurve, angle_tol: float = ANGLE_TOL) -> BirkhoffStage:
    """
    Raises:
        RegularizationError: If the lift components give different values
    """
    lifted = birkhoff_lift(curve)
    n = n_invariant(lifted)
    stages = [BirkhoffStage(components=lifted.component_count,
                            terms=_terms(component, angle_tol), n=n)
              for component in lifted.components]
    residues = {stage.residue for stage in stages}
    if len(residues) != 1:
        raise RegularizationError(f"Birkhoff components disagree on J⁺: {sorted(residues)}")
    return stages[0]


# ============================================================================
# INVARIANTS
# ============================================================================


def j0_numeric(curve: ClosedCurve, params: EulerParams, angle_tol: float = ANGLE_TOL) -> HalfInteger:
    return base_stage(curve, params, angle_tol).value


def jE_numeric(curve: ClosedCurve, params: EulerParams, angle_tol: float = ANGLE_TOL) -> HalfInteger:
    return levi_civita_stage(curve, params, Primary.E, angle_tol).value


def jM_numeric(curve: ClosedCurve, params: EulerParams, angle_tol: float = ANGLE_TOL) -> HalfInteger:
    return levi_civita_stage(curve, params, Primary.M, angle_tol).value


def jEM_numeric(curve: ClosedCurve, angle_tol: float = ANGLE_TOL) -> Tuple[int, int]:
    """(𝒥_{E,M}, n); 𝒥_{E,M} is reduced mod 2n when n > 0."""
    stage = birkhoff_stage(curve, angle_tol)
    return stage.residue, stage.n


def compute_invariants(curve: ClosedCurve, params: EulerParams,
                       angle_tol: float = ANGLE_TOL) -> NumericInvariants:
    """
    All four invariants of a generic curve avoiding both primaries.

    Raises:
        TopologyError: If the curve or one of its lifts is not generic
        RegularizationError: If a lift cannot be followed or its components disagree
    """
    base = base_stage(curve, params, angle_tol)
    lift_e = levi_civita_stage(curve, params, Primary.E, angle_tol)
    lift_m = levi_civita_stage(curve, params, Primary.M, angle_tol)
    birkhoff = birkhoff_stage(curve, angle_tol)
    invariants = InvariantSet.from_raw(base.value, lift_e.value, lift_m.value,
                                       birkhoff.n, birkhoff.terms.jplus)
    logger.info("invariants %s (#D=%d, J+=%d, w_E=%d, w_M=%d)", invariants,
                base.terms.double_points, base.terms.jplus, base.w_E, base.w_M)
    return NumericInvariants(invariants=invariants, base=base, lift_E=lift_e, lift_M=lift_m,
                             birkhoff=birkhoff)
