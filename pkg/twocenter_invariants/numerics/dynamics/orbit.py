"""
Tracing lemniscate orbits as closed curves in the q-plane.

The decoupled flows are marched by inverting the arc-time tables built
in quadrature.py; no ODE is integrated. An orbit on T_{k,l} is sampled
over its full period T = k·T_λ = l·T_ν with curve parameter s ∈ [0, 1).
"""

from __future__ import annotations

import io
import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, Optional, Tuple

import numpy as np
import pandas as pd
from scipy.spatial import cKDTree

from ..config import (
    COLLISION_TOL,
    DEFAULT_SAMPLES_PER_PERIOD,
    MIN_SAMPLES_PER_PERIOD,
    TABLE_PANELS,
)
from ..exceptions import CollisionOnTraceError, CurveFormatError, DomainError, TwoCenterError
from ..topology.curve import ClosedCurve
from ..types import EllipticState, EulerParams, TorusData
from .quadrature import LambdaTable, NuTable
from .regions import lambda_turning_point, separation_level
from .torus import collision_spacing, generic_phase

logger = logging.getLogger(__name__)


class CollisionSelector(Enum):
    """Which of the two collision-collision orbits of a torus to trace."""

    PRIMARY = "primary"
    SECONDARY = "secondary"


def elliptic_to_cartesian(lam, nu) -> Tuple[np.ndarray, np.ndarray]:
    """(q₁, q₂) = (cosh λ cos ν, sinh λ sin ν), i.e. q₁ + i q₂ = cosh(λ + iν)."""
    z = np.cosh(np.asarray(lam, dtype=float) + 1j * np.asarray(nu, dtype=float))
    return z.real, z.imag


def cartesian_point(state: EllipticState) -> Tuple[float, float]:
    q1, q2 = elliptic_to_cartesian(state.lam, state.nu)
    return float(q1), float(q2)


@lru_cache(maxsize=64)
def _tables(torus: TorusData, panels: int = TABLE_PANELS) -> Tuple[LambdaTable, NuTable]:
    level = torus.level
    logger.debug("building arc-time tables for T_{%d,%d}", torus.k, torus.l)
    return (LambdaTable.build(torus.params, level, panels),
            NuTable.build(torus.params, level, panels))


# ============================================================================
# TRACES
# ============================================================================


@dataclass(frozen=True, eq=False)
class OrbitTrace:
    """
    Sampled orbit: phase-space samples plus the resulting closed curve.

    Attributes:
        torus: The torus the orbit lies on
        phase: ν-time offset at the start of the λ-cycle
        s: Curve parameters of the samples
        lam, nu, p_lambda, p_nu: Elliptic states (ν unwrapped)
        curve: The q-plane curve
        closure_error: |q(k·T_λ) − q(0)| with the quadrature period on the table clocks
    """

    torus: TorusData
    phase: float
    s: np.ndarray
    lam: np.ndarray
    nu: np.ndarray
    p_lambda: np.ndarray
    p_nu: np.ndarray
    curve: ClosedCurve
    closure_error: float

    def state(self, index: int) -> EllipticState:
        return EllipticState(float(self.lam[index]), float(self.nu[index]),
                             float(self.p_lambda[index]), float(self.p_nu[index]))


class _Flow:
    """λ(s), ν(s) and momenta of one orbit as functions of the curve parameter."""

    def __init__(self, torus: TorusData, phase: float, lambda_sign: float):
        self.torus = torus
        self.lambda_sign = lambda_sign
        self.lam_table, self.nu_table = _tables(torus)
        # table periods differ from the quad periods at the 1e-10 level
        self.lambda_span = 4.0 * self.lam_table.quarter * torus.k
        self.nu_span = self.nu_table.period * torus.l
        self.nu_offset = phase * self.nu_table.period / torus.T_nu

    def coordinates(self, s: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        s = np.asarray(s, dtype=float)
        lam, sign = self.lam_table.evaluate(s * self.lambda_span)
        nu = self.nu_table.evaluate(s * self.nu_span + self.nu_offset)
        return self.lambda_sign * lam, self.lambda_sign * sign, nu

    def momenta(self, s: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """(p_λ, p_ν) as time derivatives of the table inverses, not from the energy."""
        s = np.asarray(s, dtype=float)
        p_lam = self.lambda_sign * self.lam_table.velocity(s * self.lambda_span)
        p_nu = self.nu_table.velocity(s * self.nu_span + self.nu_offset)
        return p_lam, p_nu

    def closure_defect(self) -> float:
        """|q(t) − q(0)| at t = k·T_λ of the torus, both tables run on the same clock."""
        t = np.array([0.0, self.torus.period])
        lam, _ = self.lam_table.evaluate(t)
        nu = self.nu_table.evaluate(t + self.nu_offset)
        z = np.cosh(self.lambda_sign * lam + 1j * nu)
        return float(abs(z[1] - z[0]))

    def points(self, s: np.ndarray) -> np.ndarray:
        lam, _, nu = self.coordinates(s)
        return np.cosh(lam + 1j * nu)


def _sample_count(torus: TorusData, samples_per_period: int) -> int:
    if samples_per_period < MIN_SAMPLES_PER_PERIOD:
        raise DomainError(
            f"samples_per_period must be at least {MIN_SAMPLES_PER_PERIOD}, got {samples_per_period}"
        )
    n = samples_per_period * (torus.k + torus.l)
    return n + (n % 2)


def _collision_distance(lam: np.ndarray, nu: np.ndarray) -> float:
    """Smallest chart distance of the samples to (0, 0) or (0, ±π)."""
    off_axis = np.abs(np.remainder(nu + math.pi / 2.0, math.pi) - math.pi / 2.0)
    return float(np.min(np.hypot(lam, off_axis)))


def trace_states(torus: TorusData, phase: Optional[float] = None,
                 samples_per_period: int = DEFAULT_SAMPLES_PER_PERIOD,
                 generic: bool = True, lambda_sign: float = 1.0,
                 markers: Tuple[int, ...] = ()) -> OrbitTrace:
    """
    Trace one orbit of the torus and keep its phase-space samples.

    Args:
        phase: ν-time offset; defaults to generic_phase(torus)
        generic: Reject phases on the collision lattice
        lambda_sign: −1 traces the λ-reflected orbit (λ ↦ −λ)

    Raises:
        DomainError: If samples_per_period < 64
        CollisionOnTraceError: If generic and the orbit passes through E or M
    """
    if phase is None:
        phase = generic_phase(torus)
    n = _sample_count(torus, samples_per_period)

    if generic:
        spacing = collision_spacing(torus)
        offset = abs(phase / spacing - round(phase / spacing)) * spacing
        if offset < COLLISION_TOL * torus.T_nu:
            raise CollisionOnTraceError(
                f"phase {phase:.12g} lies on the collision lattice (T_nu/2k)Z of T_{{{torus.k},{torus.l}}}"
            )

    flow = _Flow(torus, phase, lambda_sign)
    s = np.arange(n) / n
    lam, _, nu = flow.coordinates(s)
    p_lam, p_nu = flow.momenta(s)

    if generic:
        distance = _collision_distance(lam, nu)
        if distance < COLLISION_TOL:
            raise CollisionOnTraceError(f"sampled orbit passes within {distance:.2e} of a primary")

    z = np.cosh(lam + 1j * nu)
    closure = flow.closure_defect()

    try:
        curve = ClosedCurve.from_complex(z, markers=markers, params=s, sampler=flow.points)
    except CurveFormatError:
        logger.debug("T_{%d,%d} phase %.6g produced a degenerate polyline", torus.k, torus.l, phase)
        raise
    logger.debug("traced T_{%d,%d} with %d samples, closure %.2e", torus.k, torus.l, n, closure)
    return OrbitTrace(torus=torus, phase=float(phase), s=s, lam=lam, nu=nu,
                      p_lambda=p_lam, p_nu=p_nu, curve=curve, closure_error=float(closure))


def trace_orbit(torus: TorusData, phase: Optional[float] = None,
                samples_per_period: int = DEFAULT_SAMPLES_PER_PERIOD,
                generic: bool = True) -> ClosedCurve:
    """
    Closed q-plane curve of the orbit with the given phase.

    Raises:
        DomainError: If samples_per_period < 64
        CollisionOnTraceError: If generic and the orbit passes through E or M
    """
    return trace_states(torus, phase, samples_per_period, generic).curve


def collision_trace(torus: TorusData, which: CollisionSelector = CollisionSelector.PRIMARY,
                    samples_per_period: int = DEFAULT_SAMPLES_PER_PERIOD) -> OrbitTrace:
    """
    Trace a collision-collision orbit, starting at a collision.

    For l odd both orbits run from E to M; SECONDARY is the λ-reflection of
    PRIMARY (its mirror image in the q₁-axis). For l even the orbits are
    q₁-symmetric with both collisions at one primary: PRIMARY at E,
    SECONDARY at M. The collisions sit at samples 0 and N/2.
    """
    which = CollisionSelector(which)
    n = _sample_count(torus, samples_per_period)
    markers = (0, n // 2)
    if torus.l % 2 == 1:
        sign = 1.0 if which is CollisionSelector.PRIMARY else -1.0
        return trace_states(torus, 0.0, samples_per_period, generic=False,
                            lambda_sign=sign, markers=markers)
    phase = 0.0 if which is CollisionSelector.PRIMARY else torus.T_nu / 2.0
    return trace_states(torus, phase, samples_per_period, generic=False, markers=markers)


def collision_orbit(torus: TorusData, which: CollisionSelector = CollisionSelector.PRIMARY,
                    samples_per_period: int = DEFAULT_SAMPLES_PER_PERIOD) -> ClosedCurve:
    """Closed curve of a collision-collision orbit with markers at both collisions."""
    return collision_trace(torus, which, samples_per_period).curve


def collision_arc(curve: ClosedCurve) -> np.ndarray:
    """The half orbit between the two collision markers, as an open polyline."""
    if len(curve.markers) != 2:
        raise DomainError(f"collision orbit needs two markers, got {curve.markers}")
    start, stop = curve.markers
    return curve.arc(start, stop)


# ============================================================================
# CHECKS
# ============================================================================


def energy_residual(trace: OrbitTrace) -> float:
    """max |F_λ + F_ν| over the samples."""
    params = trace.torus.params
    x = np.cosh(trace.lam)
    y = np.cos(trace.nu)
    f_lam = 0.5 * trace.p_lambda ** 2 - x - params.c * x * x
    f_nu = 0.5 * trace.p_nu ** 2 + (1.0 - 2.0 * params.mu) * y + params.c * y * y
    return float(np.max(np.abs(f_lam + f_nu)))


def has_brake_points(trace: OrbitTrace, tol: float = COLLISION_TOL) -> bool:
    """True if both momenta vanish at some sample."""
    return bool(np.any((np.abs(trace.p_lambda) < tol) & (np.abs(trace.p_nu) < tol)))


def nu_is_monotone(trace: OrbitTrace) -> bool:
    return bool(np.all(np.diff(trace.nu) > 0.0))


def max_abs_lambda(trace: OrbitTrace) -> float:
    return float(np.max(np.abs(trace.lam)))


def hausdorff_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Symmetric Hausdorff distance between two (N, 2) point sets."""
    d_ab, _ = cKDTree(b).query(a)
    d_ba, _ = cKDTree(a).query(b)
    return float(max(np.max(d_ab), np.max(d_ba)))


def reflection_defect(curve: ClosedCurve) -> float:
    """Hausdorff distance between the samples and their mirror image in the q₁-axis."""
    mirrored = curve.points * np.array([1.0, -1.0])
    return hausdorff_distance(curve.points, mirrored)


# ============================================================================
# DUMPS
# ============================================================================


def orbit_to_dict(torus: TorusData, curve: ClosedCurve, phase: float) -> Dict[str, Any]:
    """Orbit dump with the fields {mu, c, k, l, f_lambda, …, samples, collision_markers}."""
    payload = torus.to_dict()
    payload["phase"] = float(phase)
    payload["samples"] = curve.points.tolist()
    payload["collision_markers"] = list(curve.markers)
    return payload


def orbit_from_dict(payload: Dict[str, Any]) -> Tuple[TorusData, ClosedCurve, float]:
    """
    Inverse of orbit_to_dict.

    Raises:
        CurveFormatError: If a field is missing or the samples are malformed
    """
    try:
        params = EulerParams(mu=float(payload["mu"]), c=float(payload["c"]))
        level = separation_level(params, float(payload["f_lambda"]))
        torus = TorusData(
            k=int(payload["k"]), l=int(payload["l"]), f_lambda=level.f,
            lambda_max=float(payload.get("lambda_max", lambda_turning_point(params, level))),
            T_lambda=float(payload["T_lambda"]), T_nu=float(payload["T_nu"]),
            params=params, gap_lo=level.gap_lo, gap_hi=level.gap_hi,
        )
        curve = ClosedCurve.from_points(np.asarray(payload["samples"], dtype=float),
                                        markers=payload.get("collision_markers", ()))
        phase = float(payload.get("phase", 0.0))
    except TwoCenterError:
        raise
    except KeyError as exc:
        raise CurveFormatError(f"orbit dump is missing field {exc.args[0]!r}") from exc
    except (AttributeError, TypeError, ValueError) as exc:
        raise CurveFormatError(f"malformed orbit dump: {exc}") from exc
    return torus, curve, phase


def orbit_to_csv(curve: ClosedCurve) -> str:
    """Samples as CSV with header q1,q2."""
    buffer = io.StringIO()
    frame = pd.DataFrame(curve.points, columns=["q1", "q2"])
    frame.to_csv(buffer, index=False, float_format="%.17g")
    return buffer.getvalue()
