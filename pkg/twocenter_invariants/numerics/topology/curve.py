"""
Closed oriented polylines in the plane.

A ClosedCurve stores its samples together with the curve parameter of each
sample (s ∈ [0, 1), increasing) and, when the curve comes from an analytic
parameterization, a sampler s ↦ point used to resample arcs locally.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from ..config import MIN_CURVE_POINTS
from ..exceptions import CurveFormatError

Sampler = Callable[[np.ndarray], np.ndarray]


def _readonly(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class ClosedCurve:
    """
    Oriented closed polyline; the last sample connects back to the first.

    Attributes:
        points: (N, 2) float array of samples
        params: (N,) curve parameters in [0, 1), strictly increasing
        markers: Sample indices of special points (collisions)
        sampler: Optional map from parameters to complex points
    """

    points: np.ndarray
    params: np.ndarray
    markers: Tuple[int, ...] = ()
    sampler: Optional[Sampler] = None

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        if points.ndim != 2 or points.shape[1] != 2:
            raise CurveFormatError(f"points must have shape (N, 2), got {points.shape}")
        n = len(points)
        if n < MIN_CURVE_POINTS:
            raise CurveFormatError(f"closed curve needs at least {MIN_CURVE_POINTS} points, got {n}")
        if not np.all(np.isfinite(points)):
            raise CurveFormatError("curve samples must be finite")
        steps = np.hypot(*(np.roll(points, -1, axis=0) - points).T)
        if np.any(steps <= 0.0):
            bad = int(np.flatnonzero(steps <= 0.0)[0])
            raise CurveFormatError(f"consecutive samples {bad} and {(bad + 1) % n} coincide")
        params = np.asarray(self.params, dtype=float)
        if params.shape != (n,):
            raise CurveFormatError(f"params must have shape ({n},), got {params.shape}")
        if np.any(np.diff(params) <= 0.0) or params[0] < 0.0 or params[-1] >= 1.0:
            raise CurveFormatError("params must increase strictly within [0, 1)")
        markers = tuple(int(m) for m in self.markers)
        if any(not 0 <= m < n for m in markers):
            raise CurveFormatError(f"marker index out of range: {markers}")
        object.__setattr__(self, "points", _readonly(points))
        object.__setattr__(self, "params", _readonly(params))
        object.__setattr__(self, "markers", markers)

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def from_points(cls, points, markers: Sequence[int] = (), params=None,
                    sampler: Optional[Sampler] = None) -> "ClosedCurve":
        points = np.asarray(points, dtype=float)
        if params is None:
            params = np.arange(len(points)) / len(points)
        return cls(points=points, params=params, markers=tuple(markers), sampler=sampler)

    @classmethod
    def from_complex(cls, z, markers: Sequence[int] = (), params=None,
                     sampler: Optional[Sampler] = None) -> "ClosedCurve":
        z = np.asarray(z, dtype=complex)
        return cls.from_points(np.column_stack([z.real, z.imag]), markers, params, sampler)

    @classmethod
    def from_function(cls, fn: Sampler, samples: int) -> "ClosedCurve":
        """Sample fn: s ↦ complex point at s = i / samples; fn becomes the sampler."""
        s = np.arange(samples) / samples
        return cls.from_complex(fn(s), params=s, sampler=fn)

    # ------------------------------------------------------------------
    # Views
    # ------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.points)

    @property
    def z(self) -> np.ndarray:
        return self.points[:, 0] + 1j * self.points[:, 1]

    @property
    def segments(self) -> Tuple[np.ndarray, np.ndarray]:
        """Start and end points of the N closing segments."""
        return self.points, np.roll(self.points, -1, axis=0)

    @property
    def scale(self) -> float:
        """Diameter of the bounding box, at least 1."""
        span = self.points.max(axis=0) - self.points.min(axis=0)
        return float(max(1.0, np.hypot(*span)))

    def param_of(self, index: int, fraction: float = 0.0) -> float:
        """Curve parameter at a fraction of the segment starting at index."""
        n = len(self)
        start = self.params[index % n]
        end = self.params[(index + 1) % n] if (index + 1) % n else 1.0
        return float(start + fraction * (end - start))

    def interpolate(self, s: np.ndarray) -> np.ndarray:
        """Linear interpolation of the polyline at parameters s (complex)."""
        s = np.mod(np.asarray(s, dtype=float), 1.0)
        knots = np.append(self.params, 1.0)
        z = self.z
        values = np.append(z, z[0])
        return np.interp(s, knots, values.real) + 1j * np.interp(s, knots, values.imag)

    def evaluate(self, s: np.ndarray) -> np.ndarray:
        """Analytic sampler if present, linear interpolation otherwise."""
        if self.sampler is not None:
            return np.asarray(self.sampler(np.mod(np.asarray(s, dtype=float), 1.0)), dtype=complex)
        return self.interpolate(s)

    def arc(self, start: int, stop: int) -> np.ndarray:
        """Samples start..stop inclusive as an open (M, 2) polyline."""
        if stop >= start:
            return self.points[start:stop + 1].copy()
        return np.concatenate([self.points[start:], self.points[:stop + 1]])

    # ------------------------------------------------------------------
    # Derived curves
    # ------------------------------------------------------------------

    def reversed(self) -> "ClosedCurve":
        """Same point set, opposite orientation, same starting sample."""
        n = len(self)
        order = (-np.arange(n)) % n
        params = np.mod(1.0 - self.params[order], 1.0)
        sampler = None
        if self.sampler is not None:
            base = self.sampler
            sampler = lambda s: base(np.mod(1.0 - np.asarray(s), 1.0))  # noqa: E731
        markers = tuple(int((-m) % n) for m in self.markers)
        return ClosedCurve(self.points[order], params, markers, sampler)

    def transformed(self, rotation: float = 0.0, translation: complex = 0j,
                    scale: float = 1.0) -> "ClosedCurve":
        """Image under z ↦ scale·e^{i·rotation}·z + translation."""
        factor = scale * cmath.exp(1j * rotation)
        sampler = None
        if self.sampler is not None:
            base = self.sampler
            sampler = lambda s: factor * base(s) + translation  # noqa: E731
        z = factor * self.z + translation
        return ClosedCurve.from_complex(z, self.markers, self.params, sampler)

    def with_samples(self, params: np.ndarray, z: np.ndarray) -> "ClosedCurve":
        """Curve with extra samples inserted at the given parameters."""
        params = np.mod(np.asarray(params, dtype=float), 1.0)
        fresh = ~np.isin(params, self.params)
        all_params = np.concatenate([self.params, params[fresh]])
        all_z = np.concatenate([self.z, np.asarray(z, dtype=complex)[fresh]])
        order = np.argsort(all_params, kind="stable")
        all_params, idx = np.unique(all_params[order], return_index=True)
        all_z = all_z[order][idx]
        markers = tuple(int(np.searchsorted(all_params, self.params[m])) for m in self.markers)
        return ClosedCurve.from_complex(all_z, markers, all_params, self.sampler)

    def refined(self, segments: np.ndarray, factor: int) -> "ClosedCurve":
        """Split each listed segment into `factor` pieces via the sampler (or linearly)."""
        segments = np.unique(np.asarray(segments, dtype=int) % len(self))
        if len(segments) == 0:
            return self
        start = self.params[segments]
        nxt = (segments + 1) % len(self)
        end = np.where(nxt == 0, 1.0, self.params[nxt])
        frac = np.arange(1, factor) / factor
        new_params = (start[:, None] + (end - start)[:, None] * frac[None, :]).ravel()
        return self.with_samples(new_params, self.evaluate(new_params))
