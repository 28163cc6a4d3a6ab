"""
Planar arrangement of a generic closed curve.

The curve is cut at its double points into arcs. Each arc gives two
half-edges (along and against the curve); faces are traced by turning at
every vertex to the outgoing half-edge just clockwise of the one we came
back along, so each face lies to the left of its half-edges. Every face
gets an interior representative point and the winding number of the curve
around it.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import CLUSTER_TOL, POINT_ON_CURVE_TOL
from ..exceptions import ArrangementInconsistencyError, PointOnCurveError
from ..types import HalfInteger
from .curve import ClosedCurve
from .intersections import DoublePoint, resolve_crossings
from .winding import distances_to_polygon, raw_winding, signed_area, winding_numbers

logger = logging.getLogger(__name__)

# Candidate boundary segments tried per face when placing a representative
_CANDIDATE_SEGMENTS = 12
_NORMAL_SHRINK_STEPS = 24
_DIAGONAL_SAMPLES = 64


@dataclass(frozen=True)
class Arc:
    """Piece of the curve between two consecutive double-point passages."""

    start: int
    end: int
    polyline: np.ndarray  # complex samples, first/last at the vertices


@dataclass(frozen=True)
class Face:
    winding: int
    representative: complex
    area: float
    half_edges: Tuple[int, ...]

    @property
    def is_outer(self) -> bool:
        return self.area < 0.0


@dataclass(frozen=True, eq=False)
class Arrangement:
    """
    Vertices, arcs and faces of a generic closed curve.

    Half-edge 2a runs along arc a, half-edge 2a + 1 against it.

    Attributes:
        curve: The (refined) curve the arrangement was built on
        double_points: Vertices, in the order of find_double_points
        arcs: Curve pieces between consecutive passages
        outgoing: (V, 4) half-edge ids leaving each vertex, counterclockwise
        half_edge_face: Face id to the left of each half-edge
        faces: All faces; exactly one is unbounded
    """

    curve: ClosedCurve
    double_points: Tuple[DoublePoint, ...]
    arcs: Tuple[Arc, ...]
    outgoing: np.ndarray
    half_edge_face: np.ndarray
    faces: Tuple[Face, ...]

    @property
    def windings(self) -> List[int]:
        return [face.winding for face in self.faces]

    @property
    def outer_face(self) -> Face:
        return next(face for face in self.faces if face.is_outer)


# ============================================================================
# CONSTRUCTION
# ============================================================================


def _passage_positions(curve: ClosedCurve, doubles: Sequence[DoublePoint]) -> List[Tuple[float, int, int]]:
    """(position along the polyline, vertex, segment) for both passages of every double point."""
    passages = []
    for v, p in enumerate(doubles):
        for seg, frac in zip(p.segments, p.fractions):
            passages.append((seg + frac, v, seg))
    passages.sort()
    return passages


def _matches(curve: ClosedCurve, doubles: Sequence[DoublePoint]) -> bool:
    start, end = curve.segments
    n = len(curve)
    for p in doubles:
        for seg, frac in zip(p.segments, p.fractions):
            if not 0 <= seg < n:
                return False
            q = start[seg] + frac * (end[seg] - start[seg])
            if math.hypot(q[0] - p.location[0], q[1] - p.location[1]) > CLUSTER_TOL:
                return False
    return True


def _arc_polyline(z: np.ndarray, loc_a: complex, pos_a: float, loc_b: complex, pos_b: float) -> np.ndarray:
    n = len(z)
    first = int(math.floor(pos_a)) + 1
    last = int(math.floor(pos_b))
    if pos_b <= pos_a:
        last += n
    idx = np.arange(first, last + 1) % n
    return np.concatenate([[loc_a], z[idx], [loc_b]])


def _boundary(arcs: Sequence[Arc], half_edges: Sequence[int]) -> np.ndarray:
    parts = []
    for h in half_edges:
        poly = arcs[h // 2].polyline
        poly = poly if h % 2 == 0 else poly[::-1]
        parts.append(poly[:-1])
    return np.concatenate(parts)


def _representative(boundary: np.ndarray, curve_z: np.ndarray) -> Optional[complex]:
    """Interior point of a counterclockwise face boundary, away from the curve."""
    nxt = np.roll(boundary, -1)
    seg = nxt - boundary
    lengths = np.abs(seg)
    candidates: List[complex] = []
    for k in np.argsort(lengths)[::-1][:_CANDIDATE_SEGMENTS]:
        if lengths[k] == 0.0:
            continue
        mid = boundary[k] + seg[k] / 2.0
        normal = 1j * seg[k] / lengths[k]
        step = lengths[k] / 2.0
        for _ in range(_NORMAL_SHRINK_STEPS):
            candidates.append(mid + step * normal)
            step /= 2.0
    # fallback: midpoints of diagonals
    m = len(boundary)
    picks = np.unique(np.linspace(0, m - 1, min(m, _DIAGONAL_SAMPLES)).astype(int))
    for offset in (2, m // 3, m // 2):
        if 1 < offset < m:
            candidates.extend((boundary[picks] + boundary[(picks + offset) % m]) / 2.0)

    pts = np.asarray(candidates, dtype=complex)
    inside = np.abs(raw_winding(boundary, pts) - 1.0) < 0.25
    pts = pts[inside]
    if len(pts) == 0:
        return None
    clearance = distances_to_polygon(curve_z, pts)
    best = int(np.argmax(clearance))
    if clearance[best] <= POINT_ON_CURVE_TOL:
        return None
    return complex(pts[best])


def _simple_arrangement(curve: ClosedCurve) -> Arrangement:
    """A curve without double points bounds a disc."""
    z = curve.z
    area = signed_area(z)
    inner_boundary = z if area > 0.0 else z[::-1]
    rep = _representative(inner_boundary, z)
    if rep is None:
        raise ArrangementInconsistencyError("no interior point found for an embedded curve")
    winding = int(winding_numbers(curve, np.array([rep]))[0])
    if abs(winding) != 1:
        raise ArrangementInconsistencyError(f"embedded curve has inner winding {winding}")
    outer = _outer_point(z)
    faces = (
        Face(winding=winding, representative=rep, area=abs(area), half_edges=()),
        Face(winding=0, representative=outer, area=-abs(area), half_edges=()),
    )
    return Arrangement(curve=curve, double_points=(), arcs=(), outgoing=np.empty((0, 4), dtype=int),
                       half_edge_face=np.empty(0, dtype=int), faces=faces)


def _outer_point(z: np.ndarray) -> complex:
    span = max(1.0, float(np.max(np.abs(z - z.mean()))))
    return complex(float(z.real.max()) + span, float(z.imag.mean()))


def build_arrangement(curve: ClosedCurve, doubles: Optional[Sequence[DoublePoint]] = None) -> Arrangement:
    """
    Build the arrangement of a generic curve.

    Args:
        curve: The curve
        doubles: Its double points; recomputed (with refinement) when missing
            or when they were found on a refined copy of the curve

    Raises:
        NonGenericCurveError: If the double points cannot be resolved
        ArrangementInconsistencyError: If the Euler formula or the winding
            jump across an arc fails
    """
    if doubles is None or not _matches(curve, doubles):
        expected = None if doubles is None else len(doubles)
        curve, doubles = resolve_crossings(curve)
        if expected is not None and expected != len(doubles):
            raise ArrangementInconsistencyError(
                f"{expected} double points supplied, {len(doubles)} found on the curve"
            )
    doubles = tuple(doubles)
    if not doubles:
        return _simple_arrangement(curve)

    z = curve.z
    start, end = curve.segments
    direction = (end[:, 0] - start[:, 0]) + 1j * (end[:, 1] - start[:, 1])
    locations = [complex(*p.location) for p in doubles]
    passages = _passage_positions(curve, doubles)
    n_pass = len(passages)

    # arcs between consecutive passages; out-directions from the curve segments
    arcs: List[Arc] = []
    out_dir: List[complex] = []
    out_vertex: List[int] = []
    for a in range(n_pass):
        pos_a, va, seg_a = passages[a]
        pos_b, vb, seg_b = passages[(a + 1) % n_pass]
        arcs.append(Arc(start=va, end=vb,
                        polyline=_arc_polyline(z, locations[va], pos_a, locations[vb], pos_b)))
        out_dir.extend([direction[seg_a], -direction[seg_b]])
        out_vertex.extend([va, vb])

    n_half = 2 * len(arcs)
    outgoing = np.zeros((len(doubles), 4), dtype=int)
    fill = np.zeros(len(doubles), dtype=int)
    for h in range(n_half):
        v = out_vertex[h]
        if fill[v] == 4:
            raise ArrangementInconsistencyError(f"vertex {v} has more than four half-edges")
        outgoing[v, fill[v]] = h
        fill[v] += 1
    if np.any(fill != 4):
        raise ArrangementInconsistencyError("every double point needs exactly four half-edges")
    angles = np.angle(np.asarray(out_dir))
    for v in range(len(doubles)):
        outgoing[v] = outgoing[v][np.argsort(angles[outgoing[v]], kind="stable")]

    # next(h): at the end vertex of h, the outgoing half-edge just before twin(h) counterclockwise
    slot = {}
    for v in range(len(doubles)):
        for k in range(4):
            slot[int(outgoing[v, k])] = (v, k)
    nxt = np.empty(n_half, dtype=int)
    for h in range(n_half):
        v, k = slot[h ^ 1]
        nxt[h] = outgoing[v, (k - 1) % 4]

    face_of = np.full(n_half, -1, dtype=int)
    cycles: List[List[int]] = []
    for h0 in range(n_half):
        if face_of[h0] >= 0:
            continue
        cycle = []
        h = h0
        while face_of[h] < 0:
            face_of[h] = len(cycles)
            cycle.append(h)
            h = int(nxt[h])
        if h != h0:
            raise ArrangementInconsistencyError("face traversal did not close")
        cycles.append(cycle)

    boundaries = [_boundary(arcs, cycle) for cycle in cycles]
    areas = [signed_area(b) for b in boundaries]
    outer = [f for f, area in enumerate(areas) if area < 0.0]
    if len(outer) != 1:
        raise ArrangementInconsistencyError(f"expected one unbounded face, found {len(outer)}")

    reps: List[complex] = []
    for f, boundary in enumerate(boundaries):
        if f == outer[0]:
            reps.append(_outer_point(z))
            continue
        rep = _representative(boundary, z)
        if rep is None:
            raise ArrangementInconsistencyError(f"no interior point found for face {f}")
        reps.append(rep)
    try:
        windings = winding_numbers(curve, np.asarray(reps))
    except PointOnCurveError as exc:
        raise ArrangementInconsistencyError(f"face representative too close to the curve: {exc}") from exc
    if windings[outer[0]] != 0:
        raise ArrangementInconsistencyError("unbounded face has nonzero winding")

    faces = tuple(Face(winding=int(windings[f]), representative=reps[f], area=float(areas[f]),
                       half_edges=tuple(cycles[f])) for f in range(len(cycles)))
    arrangement = Arrangement(curve=curve, double_points=doubles, arcs=tuple(arcs),
                              outgoing=outgoing, half_edge_face=face_of, faces=faces)
    _check(arrangement)
    logger.debug("arrangement: V=%d E=%d F=%d", len(doubles), len(arcs), len(faces))
    return arrangement


def _check(arrangement: Arrangement) -> None:
    v, e, f = len(arrangement.double_points), len(arrangement.arcs), len(arrangement.faces)
    if v - e + f != 2:
        raise ArrangementInconsistencyError(f"Euler formula fails: V - E + F = {v} - {e} + {f}")
    windings = arrangement.windings
    for a in range(e):
        left = windings[arrangement.half_edge_face[2 * a]]
        right = windings[arrangement.half_edge_face[2 * a + 1]]
        if left - right != 1:
            raise ArrangementInconsistencyError(
                f"winding jumps by {left - right} across arc {a} (expected 1)"
            )


# ============================================================================
# QUERIES
# ============================================================================


def _vertex_of(arrangement: Arrangement, p: DoublePoint) -> int:
    for v, q in enumerate(arrangement.double_points):
        if q is p or q == p:
            return v
    loc = complex(*p.location)
    dist = [abs(complex(*q.location) - loc) for q in arrangement.double_points]
    v = int(np.argmin(dist))
    if dist[v] > CLUSTER_TOL:
        raise ArrangementInconsistencyError(f"double point at {p.location} is not a vertex")
    return v


def sector_windings(arrangement: Arrangement, p: DoublePoint) -> List[int]:
    """Windings of the four local sectors at a double point, counterclockwise."""
    v = _vertex_of(arrangement, p)
    windings = arrangement.windings
    return [windings[arrangement.half_edge_face[h]] for h in arrangement.outgoing[v]]


def double_point_index(arrangement: Arrangement, p: DoublePoint) -> HalfInteger:
    """Mean winding of the four sectors at p."""
    total = sum(sector_windings(arrangement, p))
    if total % 2:
        raise ArrangementInconsistencyError(f"sector windings at {p.location} sum to odd {total}")
    return HalfInteger.half_of(total // 2)


def arrangement_to_dict(arrangement: Arrangement, jplus: Optional[int] = None) -> Dict[str, Any]:
    """Debug dump {double_points, faces, jplus}."""
    payload: Dict[str, Any] = {
        "double_points": [p.to_dict() for p in arrangement.double_points],
        "faces": [{"winding": face.winding,
                   "representative": [face.representative.real, face.representative.imag]}
                  for face in arrangement.faces],
    }
    if jplus is not None:
        payload["jplus"] = int(jplus)
    return payload
