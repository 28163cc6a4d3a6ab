"""
Combinatorial model of the Birkhoff lift of a T_{k,l} orbit.

The lift of an orbit lies in the annulus e^{−λ_max} ≤ |z| ≤ e^{λ_max}; it
swings between the two boundary circles k times while turning l times
around the origin, and crosses each preimage ray of the coordinate
hyperbolas in order. The smoothed model

    z(t) = exp(a·sin(2πk t) + 2πi·l t)

has the same combinatorics without any quadrature, which gives a second
route to 𝒥_{E,M} and n.
"""

from __future__ import annotations

import numpy as np

from ..config import DEFAULT_SAMPLES_PER_PERIOD
from ..dynamics.torus import check_coprime
from ..topology.curve import ClosedCurve


def model_birkhoff_curve(k: int, l: int, samples: int = DEFAULT_SAMPLES_PER_PERIOD,
                         amplitude: float = 1.0) -> ClosedCurve:
    """
    Generic model of one Birkhoff-lift component of a T_{k,l} orbit.

    Double points occur only between passages a whole number of turns
    apart, at parameters where the radial swings agree, so the model has no
    triple points or tangencies.

    Raises:
        DomainError: If gcd(k, l) ≠ 1
    """
    check_coprime(k, l)

    def model(s):
        t = np.asarray(s, dtype=float)
        return np.exp(amplitude * np.sin(2.0 * np.pi * k * t) + 2j * np.pi * l * t)

    return ClosedCurve.from_function(model, samples * (k + l))
