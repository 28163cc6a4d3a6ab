"""
Region structure of the separated Euler problem.

On the regularized zero level the system splits into

    F_λ = ½p_λ² − cosh λ − c·cosh²λ          (= f_λ)
    F_ν = ½p_ν² + (1−2μ)·cos ν + c·cos²ν     (= −f_λ)

so half of each squared momentum is an effective polynomial:

    P(x) = f_λ + x + c·x²,  x = cosh λ ≥ 1
    Q(y) = −f_λ − (1−2μ)·y − c·y²,  y = cos ν ∈ [−1, 1]

The sign structure of P and Q decides the region label of the torus.
"""

from __future__ import annotations

import logging
import math
from typing import Tuple, Union

import numpy as np

from ..config import BOUNDARY_TOL
from ..exceptions import (
    BoundaryTorusError,
    DomainError,
    NoTurningPointError,
    NotLemniscateError,
)
from ..types import EulerParams, RegionLabel, SeparationLevel

logger = logging.getLogger(__name__)

LevelLike = Union[float, SeparationLevel]


def critical_energy(mu: float) -> float:
    """
    Critical energy c_J = -1/2 - sqrt(μ - μ²).

    Lemniscate and planetary motions exist only above c_J.

    Raises:
        DomainError: If μ is not in (0, 1)
    """
    if not (0.0 < mu < 1.0):
        raise DomainError(f"mass ratio must lie in (0, 1), got {mu!r}")
    return -0.5 - math.sqrt(mu - mu * mu)


# ============================================================================
# EFFECTIVE POLYNOMIALS
# ============================================================================


def effective_lambda(params: EulerParams, f_lambda: float, lam):
    """Half of p_λ²: f_λ + cosh λ + c·cosh²λ (vectorised)."""
    x = np.cosh(lam)
    return f_lambda + x + params.c * x * x


def effective_nu(params: EulerParams, f_lambda: float, nu):
    """Half of p_ν²: −f_λ − (1−2μ)·cos ν − c·cos²ν (vectorised)."""
    y = np.cos(nu)
    return -f_lambda - (1.0 - 2.0 * params.mu) * y - params.c * y * y


def nu_potential_peak(params: EulerParams) -> Tuple[float, float, bool]:
    """
    Maximum of h(y) = (1−2μ)·y + c·y² over y ∈ [−1, 1].

    Returns:
        (h_max, y_peak, interior) where interior tells whether the maximum
        sits strictly inside (−1, 1)
    """
    a = 1.0 - 2.0 * params.mu
    c = params.c
    y_star = a / (-2.0 * c)
    if abs(y_star) < 1.0:
        return a * a / (-4.0 * c), y_star, True
    y_end = 1.0 if a >= 0.0 else -1.0
    return a * y_end + c, y_end, False


def nu_potential_excess(params: EulerParams, y):
    """h_max − h(y) ≥ 0, evaluated in factorised form."""
    a = 1.0 - 2.0 * params.mu
    c = params.c
    _, y_peak, interior = nu_potential_peak(params)
    y = np.asarray(y, dtype=float)
    if interior:
        return -c * (y - y_peak) ** 2
    return (y_peak - y) * (a + c * (y_peak + y))


def lemniscate_interval(params: EulerParams) -> Tuple[float, float]:
    """
    Open interval (f_lo, f_hi) of separation constants of lemniscate tori.

    f_lo = −1 − c makes λ = 0 admissible; f_hi = −h_max keeps p_ν² > 0.

    Raises:
        NotLemniscateError: If the interval is empty (c ≤ c_J)
    """
    f_lo = -1.0 - params.c
    h_max, _, _ = nu_potential_peak(params)
    f_hi = -h_max
    if not f_lo < f_hi:
        raise NotLemniscateError(
            f"no lemniscate tori at mu={params.mu}, c={params.c}: "
            f"c must exceed c_J = {params.critical_energy:g}"
        )
    return f_lo, f_hi


def separation_level(params: EulerParams, f_lambda: LevelLike) -> SeparationLevel:
    """Wrap a plain separation constant, computing both gaps by subtraction."""
    if isinstance(f_lambda, SeparationLevel):
        return f_lambda
    f = float(f_lambda)
    h_max, _, _ = nu_potential_peak(params)
    return SeparationLevel(f=f, gap_lo=f + 1.0 + params.c, gap_hi=-h_max - f)


def level_from_gap(params: EulerParams, gap: float, end: str) -> SeparationLevel:
    """
    Separation level at an exact distance from one end of the L-interval.

    Args:
        gap: Distance from the chosen end, positive
        end: "lo" or "hi"
    """
    f_lo, f_hi = lemniscate_interval(params)
    width = f_hi - f_lo
    if end == "lo":
        return SeparationLevel(f=f_lo + gap, gap_lo=gap, gap_hi=width - gap)
    if end == "hi":
        return SeparationLevel(f=f_hi - gap, gap_lo=width - gap, gap_hi=gap)
    raise ValueError(f"end must be 'lo' or 'hi', got {end!r}")


# ============================================================================
# CLASSIFICATION
# ============================================================================


def _is_boundary(value: float, scale: float, tol: float) -> bool:
    return abs(value) <= tol * scale


def classify_region(
    params: EulerParams, f_lambda: float, tol: float = BOUNDARY_TOL
) -> RegionLabel:
    """
    Classify the separation constant f_λ at (μ, c).

    L: λ oscillates through 0 inside one ellipse and ν circulates.
    P: λ oscillates in an annulus [λ₀, λ₁], λ₀ > 0, and ν circulates.
    S / S′: ν is confined near both primaries / near one of them.

    Raises:
        BoundaryTorusError: If a defining inequality holds with equality
            within tol (critical torus)
    """
    c = params.c
    a = 1.0 - 2.0 * params.mu
    f = float(f_lambda)
    scale = max(1.0, abs(f), abs(c))

    # λ-motion: P(x) = c x² + x + f is concave in x = cosh λ
    p_at_one = f + 1.0 + c
    if _is_boundary(p_at_one, scale, tol):
        raise BoundaryTorusError(f"critical torus: p_λ² vanishes at λ = 0 (f_λ = {f!r})")
    if p_at_one > 0.0:
        lam_kind = "oscillating"
    else:
        x_vertex = -1.0 / (2.0 * c)
        p_vertex = f - 1.0 / (4.0 * c)
        if x_vertex > 1.0 and _is_boundary(p_vertex, scale, tol):
            raise BoundaryTorusError(f"critical torus: annulus collapses (f_λ = {f!r})")
        lam_kind = "annulus" if (x_vertex > 1.0 and p_vertex > 0.0) else "none"

    # ν-motion: Q(y) = −f − a y − c y² is convex in y = cos ν
    h_max, _, _ = nu_potential_peak(params)
    q_min = -f - h_max
    q_left = -f + a - c
    q_right = -f - a - c
    if _is_boundary(q_min, scale, tol):
        raise BoundaryTorusError(f"critical torus: p_ν² touches zero (f_λ = {f!r})")
    if q_min > 0.0:
        nu_kind = "circulating"
    else:
        if _is_boundary(q_left, scale, tol) or _is_boundary(q_right, scale, tol):
            raise BoundaryTorusError(f"critical torus: ν turning point at a primary (f_λ = {f!r})")
        pieces = int(q_left > 0.0) + int(q_right > 0.0)
        nu_kind = {0: "none", 1: "one", 2: "two"}[pieces]

    logger.debug("f_λ=%r: λ %s, ν %s", f, lam_kind, nu_kind)

    if lam_kind == "none" or nu_kind == "none":
        return RegionLabel.NO_MOTION
    if nu_kind == "circulating":
        return RegionLabel.L if lam_kind == "oscillating" else RegionLabel.P
    return RegionLabel.S if nu_kind == "two" else RegionLabel.SPRIME


# ============================================================================
# TURNING POINT
# ============================================================================


def lambda_roots(params: EulerParams, f_lambda: LevelLike) -> Tuple[float, float, float]:
    """
    Roots of P(x) = c x² + x + f around x = 1.

    Returns:
        (x_plus_minus_one, x_minus, lambda_max) where x_plus = cosh λ_max is
        the root above 1 (returned as x_plus − 1 to keep precision) and
        x_minus < 1 is the other root

    Raises:
        NoTurningPointError: If λ = 0 is not strictly admissible
    """
    level = separation_level(params, f_lambda)
    c = params.c
    p_at_one = level.gap_lo
    if p_at_one <= BOUNDARY_TOL * max(1.0, abs(level.f), abs(c)):
        raise NoTurningPointError(
            f"degenerate torus: p_λ² = {2.0 * p_at_one:.3e} at λ = 0 leaves no oscillation"
        )
    disc = 1.0 - 4.0 * c * level.f
    if disc <= 0.0:
        raise NoTurningPointError("no real root of the λ-effective polynomial")
    x_plus = (1.0 + math.sqrt(disc)) / (-2.0 * c)
    x_minus = level.f / (c * x_plus)
    # x_plus − 1 from P(1) = |c| (x_plus − 1)(1 − x_minus)
    excess = p_at_one / (-c * (1.0 - x_minus))
    lam_max = math.log1p(excess + math.sqrt(excess * (2.0 + excess)))
    return excess, x_minus, lam_max


def lambda_turning_point(params: EulerParams, f_lambda: LevelLike) -> float:
    """
    Turning point λ_max > 0 of the λ-oscillation.

    Raises:
        NoTurningPointError: If the polynomial in cosh λ has no admissible root
    """
    _, _, lam_max = lambda_roots(params, f_lambda)
    return lam_max
