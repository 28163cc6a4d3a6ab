"""
Winding numbers of closed polylines around points of the plane.
"""

from __future__ import annotations

import math
from typing import Sequence, Union

import numpy as np

from ..config import POINT_ON_CURVE_TOL, WINDING_RESIDUAL_TOL
from ..exceptions import PointOnCurveError
from .curve import ClosedCurve

PointLike = Union[complex, Sequence[float], np.ndarray]

# Query points processed per numpy block
_BLOCK = 64


def as_complex(point: PointLike) -> complex:
    if isinstance(point, (complex, float, int)):
        return complex(point)
    x, y = point
    return complex(float(x), float(y))


def distances_to_polygon(z: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """Distance of each query point to the closed polygon with vertices z."""
    a = z
    d = np.roll(z, -1) - z
    length2 = np.maximum(np.abs(d) ** 2, np.finfo(float).tiny)
    out = np.empty(len(queries))
    for start in range(0, len(queries), _BLOCK):
        q = queries[start:start + _BLOCK, None]
        t = np.clip(((q - a) * np.conj(d)).real / length2, 0.0, 1.0)
        out[start:start + _BLOCK] = np.min(np.abs(q - (a + t * d)), axis=1)
    return out


def raw_winding(z: np.ndarray, queries: np.ndarray) -> np.ndarray:
    """Total subtended angle / 2π of the closed polygon z around each query point."""
    out = np.empty(len(queries))
    for start in range(0, len(queries), _BLOCK):
        rel = z[None, :] - queries[start:start + _BLOCK, None]
        steps = np.angle(np.roll(rel, -1, axis=1) / rel)
        out[start:start + _BLOCK] = steps.sum(axis=1) / (2.0 * math.pi)
    return out


def winding_numbers(curve: ClosedCurve, points: np.ndarray,
                    tol: float = POINT_ON_CURVE_TOL,
                    residual_tol: float = WINDING_RESIDUAL_TOL) -> np.ndarray:
    """
    Vectorised winding_number for an array of complex points.

    Raises:
        PointOnCurveError: If a point is within tol of the curve or the
            angle sum is not close to an integer
    """
    queries = np.atleast_1d(np.asarray(points, dtype=complex))
    z = curve.z
    dist = distances_to_polygon(z, queries)
    if np.any(dist <= tol):
        bad = queries[int(np.argmin(dist))]
        raise PointOnCurveError(
            f"point ({bad.real:.9g}, {bad.imag:.9g}) lies within {tol:g} of the curve"
        )
    raw = raw_winding(z, queries)
    rounded = np.rint(raw)
    residual = np.abs(raw - rounded)
    if np.any(residual >= residual_tol):
        bad = queries[int(np.argmax(residual))]
        raise PointOnCurveError(
            f"winding around ({bad.real:.9g}, {bad.imag:.9g}) not resolved "
            f"(residual {float(np.max(residual)):.3f})"
        )
    return rounded.astype(int)


def winding_number(curve: ClosedCurve, point: PointLike,
                   tol: float = POINT_ON_CURVE_TOL,
                   residual_tol: float = WINDING_RESIDUAL_TOL) -> int:
    """
    Winding number of the curve around a point.

    Raises:
        PointOnCurveError: If the point is within tol of a segment
    """
    return int(winding_numbers(curve, np.array([as_complex(point)]), tol, residual_tol)[0])


def signed_area(z: np.ndarray) -> float:
    """Shoelace area of the closed polygon z; positive when counterclockwise."""
    return 0.5 * float(np.sum((np.conj(z) * np.roll(z, -1)).imag))
