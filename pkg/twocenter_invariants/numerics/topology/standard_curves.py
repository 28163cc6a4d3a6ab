"""
Arnold's standard curves: K₀ is the figure eight, K₁ the circle and K_j
(j ≥ 2) a circle with j − 1 small interior loops, all oriented the same way.
"""

from __future__ import annotations

import numpy as np

from ..exceptions import DomainError
from .curve import ClosedCurve

# Epicycle radius in units of 1/j; above 1 the epicycle turns into a loop
_LOOP_STRENGTH = 1.5


def figure_eight(s: np.ndarray) -> np.ndarray:
    theta = 2.0 * np.pi * np.asarray(s, dtype=float)
    return np.sin(theta) + 0.5j * np.sin(2.0 * theta)


def standard_curve(j: int, samples: int = 256) -> ClosedCurve:
    """
    The standard curve K_j, with J⁺(K₀) = 0 and J⁺(K_j) = 2 − 2j for j ≥ 1.

    Raises:
        DomainError: If j < 0
    """
    if j < 0:
        raise DomainError(f"standard curves are indexed by j >= 0, got {j}")
    if j == 0:
        return ClosedCurve.from_function(figure_eight, samples)
    radius = _LOOP_STRENGTH / j if j > 1 else 0.0

    def kinked_circle(s):
        theta = 2.0 * np.pi * np.asarray(s, dtype=float)
        return np.exp(1j * theta) + radius * np.exp(1j * j * theta)

    return ClosedCurve.from_function(kinked_circle, samples * max(1, j))
