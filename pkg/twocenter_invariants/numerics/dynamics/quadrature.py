"""
Periods and time tables of the separated λ- and ν-motions.

T_λ = 4 ∫₀^{λ_max} dλ / sqrt(2P)   and   T_ν = ∫_{−π}^{π} dν / sqrt(2Q).

The λ-integral has an inverse-square-root singularity at the turning
point; the substitution λ = λ_max·sin θ turns it into a smooth integrand
on [0, π/2]. Both integrands are written in factorised form so that
near-degenerate tori (λ or ν lingering near an unstable point) keep full
relative precision.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np
from scipy import integrate
from scipy.interpolate import PchipInterpolator

from ..config import (
    QUAD_EPSREL,
    QUAD_LIMIT,
    QUAD_REL_TOL,
    TABLE_NODES,
    TABLE_PANELS,
)
from ..exceptions import NotLemniscateError, QuadratureError
from ..types import EulerParams, SeparationLevel
from .regions import (
    LevelLike,
    lambda_roots,
    nu_potential_excess,
    nu_potential_peak,
    separation_level,
)

logger = logging.getLogger(__name__)

# Graded table nodes near a slow point, per side
_GRADED_NODES = 96
# Above this width the uniform panels resolve the slow point on their own
_GRADING_THRESHOLD = 0.05


# ============================================================================
# INTEGRANDS
# ============================================================================


def _lambda_integrand(params: EulerParams, level: SeparationLevel) -> Tuple[Callable, float]:
    """
    dt/dθ for λ = λ_max·sin θ, θ ∈ [0, π/2], and λ_max.

    With δ = λ_max − λ and x = cosh λ:
        P = |c| (x₊ − x)(x − x₋),  x₊ − x = 2 sinh((λ_max+λ)/2) sinh(δ/2)
        cos θ = sqrt((δ/λ_max)(1 + sin θ))
    so dt/dθ = sqrt(λ_max (1 + sin θ) · (δ / sinh(δ/2)) / (4|c| (x − x₋) sinh((λ_max+λ)/2))).
    """
    _, x_minus, lam_max = lambda_roots(params, level)
    abs_c = -params.c

    def integrand(theta):
        theta = np.asarray(theta, dtype=float)
        s = np.sin(theta)
        lam = lam_max * s
        half_gap = math.pi / 4.0 - theta / 2.0
        delta = 2.0 * lam_max * np.sin(half_gap) ** 2
        with np.errstate(invalid="ignore", divide="ignore"):
            ratio = np.where(delta > 1e-8, delta / np.sinh(delta / 2.0), 2.0)
        x_minus_gap = 2.0 * np.sinh(lam / 2.0) ** 2 + (1.0 - x_minus)
        denom = 4.0 * abs_c * x_minus_gap * np.sinh((lam_max + lam) / 2.0)
        return np.sqrt(lam_max * (1.0 + s) * ratio / denom)

    return integrand, lam_max


def _nu_integrand(params: EulerParams, level: SeparationLevel) -> Callable:
    """dt/dν = 1 / sqrt(2Q(cos ν)) with Q = gap_hi + (h_max − h(cos ν))."""
    gap_hi = level.gap_hi

    def integrand(nu):
        y = np.cos(np.asarray(nu, dtype=float))
        return 1.0 / np.sqrt(2.0 * (gap_hi + nu_potential_excess(params, y)))

    return integrand


def _require_circulation(level: SeparationLevel) -> None:
    if level.gap_hi <= 0.0:
        raise NotLemniscateError(
            f"p_ν² reaches {2.0 * level.gap_hi:.3e} ≤ 0: ν does not circulate"
        )


def nu_slow_points(params: EulerParams, level: SeparationLevel) -> List[Tuple[float, float]]:
    """
    Minima of Q(cos ν) on [0, π] with the width of the slow passage.

    Returns:
        List of (ν*, a) where near ν* the speed is ≈ sqrt(Q''(ν*)) sqrt(a² + (ν−ν*)²)
    """
    a_coef = 1.0 - 2.0 * params.mu
    c = params.c
    _, y_peak, interior = nu_potential_peak(params)
    nu_star = math.acos(max(-1.0, min(1.0, y_peak)))
    # d²/dν² Q(cos ν) = Q_yy sin²ν − Q_y cos ν
    q_y = -a_coef - 2.0 * c * y_peak
    q_yy = -2.0 * c
    curvature = q_yy * math.sin(nu_star) ** 2 - q_y * math.cos(nu_star)
    if curvature <= 0.0:
        return []
    width = math.sqrt(2.0 * max(level.gap_hi, 0.0) / curvature)
    return [(nu_star, width)]


# ============================================================================
# PERIODS
# ============================================================================


def _checked_quad(func: Callable, a: float, b: float, rel_tol: float, what: str,
                  points=None) -> float:
    value, abserr = integrate.quad(
        func, a, b, epsabs=0.0, epsrel=min(QUAD_EPSREL, rel_tol),
        limit=QUAD_LIMIT, points=points,
    )
    if not math.isfinite(value) or value <= 0.0 or abserr > rel_tol * abs(value):
        raise QuadratureError(
            f"{what}: estimated error {abserr:.2e} exceeds {rel_tol:.1e} relative (value {value!r})"
        )
    logger.debug("%s = %.17g (error estimate %.2e)", what, value, abserr)
    return value


def period_lambda(params: EulerParams, f_lambda: LevelLike,
                  rel_tol: float = QUAD_REL_TOL) -> float:
    """
    Minimal period T_λ of the λ-oscillation.

    Raises:
        NoTurningPointError: If λ does not oscillate through 0
        QuadratureError: If the requested tolerance is not achieved
    """
    level = separation_level(params, f_lambda)
    integrand, _ = _lambda_integrand(params, level)
    quarter = _checked_quad(lambda t: float(integrand(t)), 0.0, math.pi / 2.0, rel_tol, "T_λ/4")
    return 4.0 * quarter


def period_nu(params: EulerParams, f_lambda: LevelLike,
              rel_tol: float = QUAD_REL_TOL) -> float:
    """
    Minimal period T_ν of the ν-circulation.

    The integrand depends on ν through cos ν only, so T_ν = 2 ∫₀^π.

    Raises:
        NotLemniscateError: If p_ν² ≤ 0 somewhere
        QuadratureError: If the requested tolerance is not achieved
    """
    level = separation_level(params, f_lambda)
    _require_circulation(level)
    integrand = _nu_integrand(params, level)
    points = [nu for nu, _ in nu_slow_points(params, level) if 0.0 < nu < math.pi]
    half = _checked_quad(lambda v: float(integrand(v)), 0.0, math.pi, rel_tol, "T_ν/2",
                         points=points or None)
    return 2.0 * half


def rotation_number(params: EulerParams, f_lambda: LevelLike,
                    rel_tol: float = QUAD_REL_TOL) -> float:
    """R = T_ν / T_λ."""
    level = separation_level(params, f_lambda)
    return period_nu(params, level, rel_tol) / period_lambda(params, level, rel_tol)


# ============================================================================
# GAUSS-LEGENDRE TABLES
# ============================================================================


def _graded_nodes(center: float, width: float, lo: float, hi: float) -> np.ndarray:
    """Nodes center ± width·sinh(u), uniform in u, clipped to [lo, hi]."""
    if width <= 0.0 or width >= _GRADING_THRESHOLD:
        return np.empty(0)
    reach = max(hi - center, center - lo)
    u = np.linspace(0.0, math.asinh(reach / width), _GRADED_NODES)
    offsets = width * np.sinh(u)
    nodes = np.concatenate([center - offsets, center + offsets])
    return nodes[(nodes > lo) & (nodes < hi)]


def _cumulative_times(integrand: Callable, nodes: np.ndarray,
                      order: int = TABLE_NODES) -> np.ndarray:
    """Cumulative integral of integrand over sorted nodes, Gauss-Legendre per panel."""
    x, w = np.polynomial.legendre.leggauss(order)
    left = nodes[:-1, None]
    half = (nodes[1:, None] - left) / 2.0
    pts = left + half * (x[None, :] + 1.0)
    vals = integrand(pts.ravel()).reshape(pts.shape)
    panel = (half[:, 0] * (vals @ w))
    return np.concatenate([[0.0], np.cumsum(panel)])


def _strictly_increasing(times: np.ndarray, nodes: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Drop nodes whose cumulative time did not advance (nodes closer than rounding)."""
    keep = np.concatenate([[True], np.diff(times) > 0.0])
    if not keep[-1]:
        # the endpoint carries the period; keep it in place of its predecessor
        last_kept = np.flatnonzero(keep)[-1]
        keep[last_kept] = False
        keep[-1] = True
    return times[keep], nodes[keep]


def gauss_period_lambda(params: EulerParams, f_lambda: LevelLike,
                        panels: int = TABLE_PANELS) -> float:
    """T_λ from the composite Gauss-Legendre table (independent of QUADPACK)."""
    return 4.0 * LambdaTable.build(params, separation_level(params, f_lambda), panels).quarter


def gauss_period_nu(params: EulerParams, f_lambda: LevelLike,
                    panels: int = TABLE_PANELS) -> float:
    """T_ν from the composite Gauss-Legendre table (independent of QUADPACK)."""
    return NuTable.build(params, separation_level(params, f_lambda), panels).period


@dataclass(frozen=True)
class LambdaTable:
    """
    Inverse of t(θ) on one quarter of the λ-oscillation, λ = λ_max·sin θ.

    quarter is T_λ / 4 as integrated by the table itself; dt_dtheta is the
    integrand the table was built from.
    """

    lam_max: float
    quarter: float
    theta_of_t: PchipInterpolator
    dt_dtheta: Callable

    @classmethod
    def build(cls, params: EulerParams, level: SeparationLevel,
              panels: int = TABLE_PANELS) -> "LambdaTable":
        integrand, lam_max = _lambda_integrand(params, level)
        nodes = np.linspace(0.0, math.pi / 2.0, panels + 1)
        # slow passage through λ = 0 when p_λ²(0) is small
        slow = math.sqrt(2.0 * level.gap_lo) / lam_max
        nodes = np.unique(np.concatenate([nodes, _graded_nodes(0.0, slow, 0.0, math.pi / 2.0)]))
        times, nodes = _strictly_increasing(_cumulative_times(integrand, nodes), nodes)
        return cls(lam_max=lam_max, quarter=float(times[-1]),
                   theta_of_t=PchipInterpolator(times, nodes), dt_dtheta=integrand)

    def _quarters(self, t: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        q = self.quarter
        tau = np.mod(np.asarray(t, dtype=float), 4.0 * q)
        m = np.minimum(np.floor(tau / q).astype(int), 3)
        r = tau - m * q
        forward = self.theta_of_t(np.clip(r, 0.0, q))
        backward = self.theta_of_t(np.clip(q - r, 0.0, q))
        return m, forward, backward

    def evaluate(self, t: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        λ(t) and the sign of p_λ for λ(0) = 0, p_λ(0) > 0.

        Quarter m of each cycle runs θ forward on even m and backward on odd m.
        """
        m, forward, backward = self._quarters(t)
        theta = np.select(
            [m == 0, m == 1, m == 2, m == 3],
            [forward, math.pi - backward, math.pi + forward, 2.0 * math.pi - backward],
        )
        lam = self.lam_max * np.sin(theta)
        sign = np.where((m == 0) | (m == 3), 1.0, -1.0)
        return lam, sign

    def velocity(self, t: np.ndarray) -> np.ndarray:
        """dλ/dt = λ_max cos θ / (dt/dθ), signed like p_λ."""
        m, forward, backward = self._quarters(t)
        theta = np.where(m % 2 == 0, forward, backward)
        speed = self.lam_max * np.cos(theta) / self.dt_dtheta(theta)
        return np.where((m == 0) | (m == 3), speed, -speed)


@dataclass(frozen=True)
class NuTable:
    """
    Inverse of t(ν) over one circulation ν: −π → π.

    period is T_ν as integrated by the table itself; dt_dnu is the integrand
    the table was built from.
    """

    period: float
    nu_of_t: PchipInterpolator
    dt_dnu: Callable

    @classmethod
    def build(cls, params: EulerParams, level: SeparationLevel,
              panels: int = TABLE_PANELS) -> "NuTable":
        _require_circulation(level)
        integrand = _nu_integrand(params, level)
        nodes = [np.linspace(-math.pi, math.pi, 2 * panels + 1)]
        for nu_star, width in nu_slow_points(params, level):
            # Q depends on cos ν only: slow points come in pairs ±ν*
            for center in {nu_star, -nu_star}:
                nodes.append(_graded_nodes(center, width, -math.pi, math.pi))
        grid = np.unique(np.concatenate(nodes))
        times, grid = _strictly_increasing(_cumulative_times(integrand, grid), grid)
        return cls(period=float(times[-1]), nu_of_t=PchipInterpolator(times, grid),
                   dt_dnu=integrand)

    def evaluate(self, t: np.ndarray) -> np.ndarray:
        """Unwrapped ν(t) for ν(0) = −π, increasing."""
        t = np.asarray(t, dtype=float)
        cycles = np.floor(t / self.period)
        r = np.clip(t - cycles * self.period, 0.0, self.period)
        return self.nu_of_t(r) + 2.0 * math.pi * cycles

    def velocity(self, t: np.ndarray) -> np.ndarray:
        """dν/dt = 1 / (dt/dν)."""
        return 1.0 / self.dt_dnu(self.evaluate(t))
