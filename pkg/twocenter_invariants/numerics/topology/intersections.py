"""
Double points of closed polylines.

Segment pairs are intersected block-wise with numpy after a bounding-box
prefilter. Hits closer than CLUSTER_TOL are merged, and hits on
neighbouring segments are counted as one branch passage. Shallow crossings
are re-intersected on arcs resampled from the curve's sampler.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np
from scipy.sparse.csgraph import connected_components
from scipy.sparse import coo_matrix
from scipy.spatial import cKDTree

from ..config import (
    ANGLE_TOL,
    CLUSTER_TOL,
    COLLISION_EXCLUSION_RADIUS,
    INTERSECTION_BLOCK,
    REFINE_ANGLE,
    REFINE_FACTOR,
    REFINE_ROUNDS,
    REFINE_WINDOW,
)
from ..exceptions import NonGenericCurveError
from .curve import ClosedCurve

logger = logging.getLogger(__name__)

# Hits this close to a shared vertex are reported on both segments and merged
_PARAM_SLACK = 1e-9


@dataclass(frozen=True)
class DoublePoint:
    """
    A transverse self-crossing of a closed curve.

    Attributes:
        location: Crossing point (x, y)
        s1, s2: Curve parameters of the two passages, s1 < s2
        segments: Indices of the two crossing segments (first passage first)
        fractions: Position of the crossing inside each segment, in [0, 1]
        tangents: Unit directions of the two passages
        angle: Acute crossing angle in radians
    """

    location: Tuple[float, float]
    s1: float
    s2: float
    segments: Tuple[int, int]
    fractions: Tuple[float, float]
    tangents: Tuple[Tuple[float, float], Tuple[float, float]]
    angle: float

    @property
    def sign(self) -> int:
        """Orientation of (first tangent, second tangent)."""
        (ax, ay), (bx, by) = self.tangents
        return 1 if ax * by - ay * bx > 0.0 else -1

    def to_dict(self):
        return {"x": self.location[0], "y": self.location[1], "s1": self.s1, "s2": self.s2,
                "angle": self.angle}


@dataclass(frozen=True)
class _Hits:
    """Raw segment-pair intersections (parallel arrays)."""

    i: np.ndarray
    j: np.ndarray
    t: np.ndarray
    u: np.ndarray
    point: np.ndarray
    angle: np.ndarray


def _cross(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def segment_hits(points: np.ndarray, closed: bool = True,
                 block: int = INTERSECTION_BLOCK) -> _Hits:
    """
    All proper intersections between non-adjacent segments of a polyline.

    A hit at segment parameter t on the first segment and u on the second,
    both in [0, 1] up to _PARAM_SLACK; each pair (i, j) is reported once with i < j.
    """
    start_pts = np.asarray(points, dtype=float)
    end_pts = np.roll(start_pts, -1, axis=0) if closed else start_pts[1:]
    start_pts = start_pts[:len(end_pts)]
    n = len(start_pts)
    d = end_pts - start_pts
    lo = np.minimum(start_pts, end_pts) - CLUSTER_TOL
    hi = np.maximum(start_pts, end_pts) + CLUSTER_TOL
    columns = np.arange(n)

    found: List[Tuple[np.ndarray, ...]] = []
    for first in range(0, n, block):
        rows = np.arange(first, min(first + block, n))
        mask = (
            (lo[rows, None, 0] <= hi[None, :, 0]) & (hi[rows, None, 0] >= lo[None, :, 0])
            & (lo[rows, None, 1] <= hi[None, :, 1]) & (hi[rows, None, 1] >= lo[None, :, 1])
            & (columns[None, :] > rows[:, None] + 1)
        )
        if closed:
            mask &= ~((rows[:, None] == 0) & (columns[None, :] == n - 1))
        ri, cj = np.nonzero(mask)
        if len(ri) == 0:
            continue
        i = rows[ri]
        j = cj
        denom = _cross(d[i], d[j])
        ok = denom != 0.0
        i, j, denom = i[ok], j[ok], denom[ok]
        r = start_pts[j] - start_pts[i]
        t = _cross(r, d[j]) / denom
        u = _cross(r, d[i]) / denom
        hit = ((t >= -_PARAM_SLACK) & (t <= 1.0 + _PARAM_SLACK)
               & (u >= -_PARAM_SLACK) & (u <= 1.0 + _PARAM_SLACK))
        i, j, t, u = i[hit], j[hit], t[hit], u[hit]
        if len(i) == 0:
            continue
        dot = np.einsum("ij,ij->i", d[i], d[j])
        angle = np.arctan2(np.abs(_cross(d[i], d[j])), np.abs(dot))
        found.append((i, j, t, u, start_pts[i] + t[:, None] * d[i], angle))

    if not found:
        empty = np.empty(0)
        return _Hits(empty.astype(int), empty.astype(int), empty, empty, np.empty((0, 2)), empty)
    i, j, t, u, point, angle = (np.concatenate(parts) for parts in zip(*found))
    return _Hits(i, j, t, u, point, angle)


def _passages(segments: Sequence[int], n: int, closed: bool) -> int:
    """Number of runs of segment indices that are pairwise (cyclically) adjacent."""
    idx = sorted(set(int(s) for s in segments))
    if not idx:
        return 0
    gaps = np.diff(idx) > 1
    runs = 1 + int(np.count_nonzero(gaps))
    if closed and runs > 1 and idx[0] == 0 and idx[-1] == n - 1:
        runs -= 1
    return runs


def _clusters(hits: _Hits) -> List[np.ndarray]:
    count = len(hits.i)
    if count == 0:
        return []
    pairs = cKDTree(hits.point).query_pairs(CLUSTER_TOL, output_type="ndarray")
    graph = coo_matrix((np.ones(len(pairs)), (pairs[:, 0], pairs[:, 1])), shape=(count, count))
    _, labels = connected_components(graph, directed=False)
    order = np.argsort(labels, kind="stable")
    return np.split(order, np.flatnonzero(np.diff(labels[order])) + 1)


def _collect(curve_points: np.ndarray, hits: _Hits, closed: bool) -> List[int]:
    """Representative hit index per genuine double point."""
    n = len(curve_points) if closed else len(curve_points) - 1
    chosen: List[int] = []
    for members in _clusters(hits):
        runs = _passages(np.concatenate([hits.i[members], hits.j[members]]), n, closed)
        if runs >= 3:
            x, y = hits.point[members[0]]
            raise NonGenericCurveError(
                f"triple point near ({x:.9g}, {y:.9g}): {runs} branches meet",
                location=(float(x), float(y)),
            )
        if runs == 2:
            chosen.append(int(members[np.argmax(hits.angle[members])]))
        else:
            x, y = hits.point[members[0]]
            logger.debug("dropped %d hit(s) near (%.9g, %.9g): a single branch passage",
                         len(members), x, y)
    return chosen


def _double_points(curve: ClosedCurve, hits: _Hits, chosen: List[int]) -> List[DoublePoint]:
    start, end = curve.segments
    d = end - start
    unit = d / np.hypot(d[:, 0], d[:, 1])[:, None]
    result = []
    for h in chosen:
        i, j = int(hits.i[h]), int(hits.j[h])
        t = min(max(float(hits.t[h]), 0.0), 1.0)
        u = min(max(float(hits.u[h]), 0.0), 1.0)
        result.append(DoublePoint(
            location=(float(hits.point[h, 0]), float(hits.point[h, 1])),
            s1=curve.param_of(i, t), s2=curve.param_of(j, u),
            segments=(i, j), fractions=(t, u),
            tangents=(tuple(unit[i]), tuple(unit[j])),
            angle=float(hits.angle[h]),
        ))
    result.sort(key=lambda p: (p.s1, p.s2))
    return result


def resolve_crossings(curve: ClosedCurve, angle_tol: float = ANGLE_TOL,
                      refine_angle: float = REFINE_ANGLE,
                      rounds: int = REFINE_ROUNDS,
                      factor: int = REFINE_FACTOR) -> Tuple[ClosedCurve, List[DoublePoint]]:
    """
    Double points of the curve after local refinement of shallow crossings.

    Returns:
        (refined_curve, double_points) with the double points indexed on
        refined_curve

    Raises:
        NonGenericCurveError: On a triple point, or a crossing that stays
            below angle_tol after all refinement rounds
    """
    for round_no in range(rounds + 1):
        hits = segment_hits(curve.points)
        chosen = _collect(curve.points, hits, closed=True)
        shallow = [h for h in chosen if hits.angle[h] < refine_angle]
        if not shallow or round_no == rounds:
            break
        window = np.arange(-REFINE_WINDOW, REFINE_WINDOW + 1)
        segments = np.concatenate([
            np.concatenate([hits.i[h] + window, hits.j[h] + window]) for h in shallow
        ])
        logger.debug("refinement round %d: %d shallow crossing(s), %d segments",
                     round_no + 1, len(shallow), len(segments))
        refined = curve.refined(segments, factor)
        if refined is curve or len(refined) == len(curve):
            break
        curve = refined

    doubles = _double_points(curve, hits, chosen)
    for p in doubles:
        if p.angle < angle_tol:
            raise NonGenericCurveError(
                f"near-tangential crossing at ({p.location[0]:.9g}, {p.location[1]:.9g}): "
                f"angle {p.angle:.2e} rad below {angle_tol:g}",
                location=p.location, angle=p.angle,
            )
    return curve, doubles


def find_double_points(curve: ClosedCurve, angle_tol: float = ANGLE_TOL) -> List[DoublePoint]:
    """
    Transverse double points of a closed curve.

    Raises:
        NonGenericCurveError: On a triple point or a tangential crossing
    """
    _, doubles = resolve_crossings(curve, angle_tol=angle_tol)
    return doubles


def count_arc_self_intersections(points: np.ndarray,
                                 exclude: Sequence[complex] = (),
                                 radius: float = COLLISION_EXCLUSION_RADIUS) -> int:
    """
    Self-intersections of an open polyline, ignoring crossings within radius
    of the excluded points (the collision points of an arc).

    Raises:
        NonGenericCurveError: On a triple point
    """
    points = np.asarray(points, dtype=float)
    hits = segment_hits(points, closed=False)
    chosen = _collect(points, hits, closed=False)
    count = 0
    for h in chosen:
        z = complex(*hits.point[h])
        if any(abs(z - complex(e)) <= radius for e in exclude):
            continue
        count += 1
    return count
