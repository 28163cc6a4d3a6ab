"""
Arnold's J⁺ invariant through Viro's formula

    J⁺(K) = 1 + #D_K − Σ_C w_C(K)² + Σ_p ind_p(K)²

summed over the double points p and the faces C of the complement.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from ..exceptions import ArrangementInconsistencyError
from .arrangement import Arrangement, build_arrangement, double_point_index
from .curve import ClosedCurve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ViroTerms:
    """
    The pieces of Viro's formula.

    sum_ind2_x4 is Σ (2·ind_p)², so Σ ind_p² = sum_ind2_x4 / 4.
    """

    double_points: int
    sum_w2: int
    sum_ind2_x4: int
    jplus: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "double_points": self.double_points,
            "sum_w2": self.sum_w2,
            "sum_ind2_x4": self.sum_ind2_x4,
            "jplus": self.jplus,
        }


def viro_terms_of(arrangement: Arrangement) -> ViroTerms:
    """
    Raises:
        ArrangementInconsistencyError: If the half-integer sums do not
            combine to an integer
    """
    sum_w2 = sum(w * w for w in arrangement.windings)
    sum_ind2_x4 = sum(double_point_index(arrangement, p).doubled ** 2
                      for p in arrangement.double_points)
    if sum_ind2_x4 % 4:
        raise ArrangementInconsistencyError(f"Σ ind² = {sum_ind2_x4}/4 is not an integer")
    count = len(arrangement.double_points)
    jplus = 1 + count - sum_w2 + sum_ind2_x4 // 4
    return ViroTerms(double_points=count, sum_w2=sum_w2, sum_ind2_x4=sum_ind2_x4, jplus=jplus)


def viro_terms(curve: ClosedCurve, arrangement: Optional[Arrangement] = None) -> ViroTerms:
    """Viro's formula evaluated on the arrangement of a generic curve."""
    if arrangement is None:
        arrangement = build_arrangement(curve)
    terms = viro_terms_of(arrangement)
    logger.debug("J+ = 1 + %d - %d + %d/4 = %d", terms.double_points, terms.sum_w2,
                 terms.sum_ind2_x4, terms.jplus)
    return terms


def viro_jplus(curve: ClosedCurve) -> int:
    """
    J⁺ of a generic closed curve.

    Raises:
        NonGenericCurveError: If the curve has a triple point or a tangency
    """
    return viro_terms(curve).jplus
