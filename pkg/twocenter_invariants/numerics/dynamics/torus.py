"""
T_{k,l} tori: root finding on the rotation number and the phase lattice.
"""

from __future__ import annotations

import logging
import math
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq
from scipy.special import expit

from ..config import (
    BRACKET_SEEDS,
    BRACKET_SPREAD,
    GENERIC_PHASE_FRACTION,
    QUAD_REL_TOL,
    ROTATION_TOL,
)
from ..exceptions import (
    DomainError,
    DynamicsError,
    RotationNumberUnattainableError,
)
from ..types import EulerParams, SeparationLevel, TorusData
from .quadrature import period_lambda, period_nu
from .regions import lambda_turning_point, lemniscate_interval, level_from_gap

logger = logging.getLogger(__name__)


def check_coprime(k: int, l: int) -> None:
    """
    Raises:
        DomainError: If k, l are not coprime positive integers
    """
    if isinstance(k, bool) or isinstance(l, bool) or not isinstance(k, (int, np.integer)) \
            or not isinstance(l, (int, np.integer)):
        raise DomainError(f"k and l must be integers, got {k!r}, {l!r}")
    if k < 1 or l < 1:
        raise DomainError(f"k and l must be positive, got k={k}, l={l}")
    if math.gcd(int(k), int(l)) != 1:
        raise DomainError(f"k and l must be coprime, got k={k}, l={l}")


def check_energy(params: EulerParams) -> None:
    """
    Raises:
        DomainError: If c does not lie in (c_J, 0)
    """
    c_j = params.critical_energy
    if params.c <= c_j:
        raise DomainError(f"c below critical value c_J = {c_j:g}")


def _level_at(params: EulerParams, x: float, width: float) -> SeparationLevel:
    """Separation level at bracketing coordinate x ∈ ℝ (x → ±∞ reach the ends)."""
    if x <= 0.0:
        return level_from_gap(params, width * expit(2.0 * x), "lo")
    return level_from_gap(params, width * expit(-2.0 * x), "hi")


def _periods(params: EulerParams, level: SeparationLevel, rel_tol: float) -> Tuple[float, float]:
    return period_lambda(params, level, rel_tol), period_nu(params, level, rel_tol)


def find_torus(params: EulerParams, k: int, l: int,
               rel_tol: float = QUAD_REL_TOL,
               rotation_tol: float = ROTATION_TOL,
               seeds: int = BRACKET_SEEDS) -> TorusData:
    """
    Find the lemniscate torus with rotation number R = T_ν / T_λ = k / l.

    The L-interval of separation constants is scanned at `seeds` points,
    spread towards both ends where R varies logarithmically, to bracket
    R = k/l; brentq then refines inside the first bracket.

    Raises:
        DomainError: If gcd(k, l) ≠ 1 or c ≤ c_J
        RotationNumberUnattainableError: If k/l is outside the attained range
    """
    check_coprime(k, l)
    check_energy(params)
    k, l = int(k), int(l)
    target = k / l
    f_lo, f_hi = lemniscate_interval(params)
    width = f_hi - f_lo

    xs = np.linspace(-BRACKET_SPREAD, BRACKET_SPREAD, seeds)
    scanned: List[Tuple[float, float]] = []
    for x in xs:
        try:
            t_lam, t_nu = _periods(params, _level_at(params, x, width), rel_tol)
        except DynamicsError as exc:
            logger.debug("seed x=%.3f skipped: %s", x, exc)
            continue
        scanned.append((float(x), t_nu / t_lam))

    if not scanned:
        raise RotationNumberUnattainableError("rotation number could not be evaluated on the L-slice")

    bracket: Optional[Tuple[float, float]] = None
    for (x0, r0), (x1, r1) in zip(scanned, scanned[1:]):
        if (r0 - target) == 0.0:
            bracket = (x0, x0)
            break
        if (r0 - target) * (r1 - target) < 0.0:
            bracket = (x0, x1)
            break
    if bracket is None:
        lo = min(r for _, r in scanned)
        hi = max(r for _, r in scanned)
        raise RotationNumberUnattainableError(
            f"R = {k}/{l} outside the attained range [{lo:.6g}, {hi:.6g}] "
            f"at mu={params.mu}, c={params.c}"
        )
    crossings = sum(1 for (_, r0), (_, r1) in zip(scanned, scanned[1:])
                    if (r0 - target) * (r1 - target) < 0.0)
    if crossings > 1:
        logger.warning("R = %d/%d is attained %d times on the L-slice; using the first",
                       k, l, crossings)
    logger.debug("R=%d/%d bracketed in x ∈ [%.6f, %.6f]", k, l, *bracket)

    def residual(x: float) -> float:
        t_lam, t_nu = _periods(params, _level_at(params, x, width), rel_tol)
        return t_nu / t_lam - target

    if bracket[0] == bracket[1]:
        x_root = bracket[0]
    else:
        x_root = brentq(residual, bracket[0], bracket[1], xtol=1e-14, rtol=4.0 * np.finfo(float).eps,
                        maxiter=200)

    level = _level_at(params, x_root, width)
    t_lam, t_nu = _periods(params, level, rel_tol)
    ratio = t_nu / t_lam
    if abs(ratio - target) > rotation_tol:
        raise RotationNumberUnattainableError(
            f"root finder stalled at |R - {k}/{l}| = {abs(ratio - target):.2e}"
        )

    torus = TorusData(
        k=k, l=l, f_lambda=level.f,
        lambda_max=lambda_turning_point(params, level),
        T_lambda=t_lam, T_nu=t_nu, params=params,
        gap_lo=level.gap_lo, gap_hi=level.gap_hi,
    )
    logger.info("T_{%d,%d} at mu=%g, c=%g: f_λ=%.12g, λ_max=%.9g", k, l, params.mu, params.c,
                torus.f_lambda, torus.lambda_max)
    return torus


# ============================================================================
# PHASES
# ============================================================================


def collision_spacing(torus: TorusData) -> float:
    """Spacing T_ν / (2k) of the collision phase lattice."""
    return torus.T_nu / (2.0 * torus.k)


def collision_phases(torus: TorusData) -> np.ndarray:
    """
    Phases in [0, T_ν) at which the traced orbit hits E or M.

    The λ-motion crosses 0 at t ∈ (T_λ/2)ℤ and the ν-motion sits on the
    q₁-axis at t + phase ∈ (T_ν/2)ℤ; with k T_λ = l T_ν both meet exactly
    when phase ∈ (T_ν / 2k)ℤ.
    """
    return collision_spacing(torus) * np.arange(2 * torus.k)


def generic_phase(torus: TorusData, fraction: float = GENERIC_PHASE_FRACTION) -> float:
    """
    A phase between the collision phases 0 and T_ν / (2k).

    Raises:
        DomainError: If fraction is not in (0, 1)
    """
    if not 0.0 < fraction < 1.0:
        raise DomainError(f"phase fraction must lie in (0, 1), got {fraction!r}")
    return fraction * collision_spacing(torus)
