"""
End-to-end verification of one T_{k,l} torus.

verify_torus runs the whole pipeline (torus, trace, invariants, collision
orbit) and compares every numeric quantity with its closed form. Failures
of one check are recorded and the remaining checks still run.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from ..config import (
    ANGLE_TOL,
    CLOSURE_TOL,
    COLLISION_EXCLUSION_RADIUS,
    DEFAULT_SAMPLES_PER_PERIOD,
    ENERGY_TOL,
    GENERIC_PHASE_FRACTION,
    QUAD_REL_TOL,
    SYMMETRY_TOL,
    TABLE_PANELS,
)
from ..dynamics.orbit import (
    CollisionSelector,
    OrbitTrace,
    collision_arc,
    collision_orbit,
    energy_residual,
    has_brake_points,
    nu_is_monotone,
    reflection_defect,
    trace_states,
)
from ..dynamics.quadrature import gauss_period_lambda, gauss_period_nu
from ..dynamics.torus import check_coprime, check_energy, find_torus, generic_phase
from ..exceptions import DomainError, TwoCenterError
from ..topology.intersections import count_arc_self_intersections
from ..topology.viro import viro_jplus
from ..topology.winding import winding_number
from ..types import EulerParams, InvariantSet, TorusData
from .formulas import (
    birkhoff_double_point_formula,
    collision_kind,
    covering_jem,
    distinguished_j0,
    double_point_formula,
    parity_identity,
    selfintersection_formula,
    theorem_formulas,
)
from .model import model_birkhoff_curve
from .numeric import NumericInvariants, compute_invariants

logger = logging.getLogger(__name__)

# Largest disagreement tolerated between the tabulated and the refined rotation number
_ROTATION_RECHECK_TOL = 1e-9


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    """
    Outcome of verify_torus.

    Attributes:
        params, k, l: The torus that was verified
        checks: Every check in the order it ran
        numeric: Invariants computed at the first phase (None if the pipeline failed)
        closed_form: Invariants from the closed formulas (None for invalid k, l)
        collision_numeric, collision_formula: Self-intersections of the collision orbit
    """

    params: EulerParams
    k: int
    l: int
    checks: List[Check] = field(default_factory=list)
    numeric: Optional[InvariantSet] = None
    closed_form: Optional[InvariantSet] = None
    collision_numeric: Optional[int] = None
    collision_formula: Optional[int] = None
    details: Optional[NumericInvariants] = None

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [check for check in self.checks if not check.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))
        log = logger.debug if passed else logger.warning
        log("T_{%d,%d} %s: %s %s", self.k, self.l, name, "pass" if passed else "FAIL", detail)

    def compare(self, name: str, numeric: Any, expected: Any) -> bool:
        passed = numeric == expected
        self.add(name, passed, f"numeric {numeric}, expected {expected}")
        return passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mu": self.params.mu,
            "c": self.params.c,
            "k": self.k,
            "l": self.l,
            "numeric": self.numeric.to_dict() if self.numeric else None,
            "closed_form": self.closed_form.to_dict() if self.closed_form else None,
            "collision_N": {"numeric": self.collision_numeric, "formula": self.collision_formula},
            "checks": [check.to_dict() for check in self.checks],
            "passed": self.passed,
        }


def _guarded(report: VerificationReport, name: str, fn: Callable[[], Any]) -> Any:
    """Run fn; a pipeline error becomes a failed check and returns None."""
    try:
        return fn()
    except TwoCenterError as exc:
        report.add(name, False, f"{type(exc).__name__}: {exc}")
        return None


def _rotation_recheck(report: VerificationReport, torus: TorusData) -> None:
    panels = 2 * TABLE_PANELS
    ratio = (gauss_period_nu(torus.params, torus.level, panels)
             / gauss_period_lambda(torus.params, torus.level, panels))
    error = abs(ratio - torus.k / torus.l)
    report.add("rotation_recheck", error < _ROTATION_RECHECK_TOL, f"|R - k/l| = {error:.2e}")


def _trace_checks(report: VerificationReport, torus: TorusData, fraction: float,
                  samples_per_period: int, record: bool) -> OrbitTrace:
    trace = trace_states(torus, generic_phase(torus, fraction), samples_per_period)
    if not record:
        return trace
    residual = energy_residual(trace)
    report.add("energy_residual", residual < ENERGY_TOL, f"{residual:.2e}")
    report.add("closure", trace.closure_error < CLOSURE_TOL, f"{trace.closure_error:.2e}")
    report.add("nu_monotone", nu_is_monotone(trace))
    report.add("no_brake_points", not has_brake_points(trace))
    return trace


def _invariant_checks(report: VerificationReport, found: NumericInvariants,
                      expected: InvariantSet) -> None:
    numeric = found.invariants
    report.compare("j0", numeric.j0, expected.j0)
    report.compare("jE", numeric.jE, expected.jE)
    report.compare("jM", numeric.jM, expected.jM)
    report.compare("n", numeric.n, expected.n)
    report.compare("jEM", numeric.jEM, expected.jEM)
    report.compare("double_points", found.base.terms.double_points,
                   double_point_formula(report.k, report.l))
    report.compare("lift_double_points", found.birkhoff.terms.double_points,
                   birkhoff_double_point_formula(report.k, report.l))
    base = found.base
    rules = (
        (found.lift_E.components == 1) == (base.w_E % 2 == 1)
        and (found.lift_M.components == 1) == (base.w_M % 2 == 1)
        and (found.birkhoff.components == 1) == ((base.w_E + base.w_M) % 2 == 1)
    )
    report.add("component_rules", rules,
               f"w_E={base.w_E}, w_M={base.w_M}; components {found.lift_E.components}, "
               f"{found.lift_M.components}, {found.birkhoff.components}")
    if report.l % 2 == 1:
        target = parity_identity(numeric.j0)
        report.add("parity_identity", numeric.jE == target and numeric.jM == target,
                   f"jE={numeric.jE}, jM={numeric.jM}, 2·j0−1={target}")


def _collision_checks(report: VerificationReport, torus: TorusData, samples_per_period: int) -> None:
    curve = collision_orbit(torus, CollisionSelector.PRIMARY, samples_per_period)
    params = torus.params
    count = count_arc_self_intersections(collision_arc(curve),
                                         exclude=(params.e_complex, params.m_complex),
                                         radius=COLLISION_EXCLUSION_RADIUS)
    report.collision_numeric = count
    report.compare("collision_self_intersections", count, report.collision_formula)
    if torus.l % 2 == 0:
        defect = reflection_defect(curve)
        report.add("collision_reflection_symmetry", defect < SYMMETRY_TOL, f"{defect:.2e}")


def _formula_checks(report: VerificationReport, expected: InvariantSet) -> None:
    k, l = report.k, report.l
    web = distinguished_j0(collision_kind(l), selfintersection_formula(k, l))
    report.compare("consistency_web", web, expected.j0)
    report.compare("covering_formula", covering_jem(k, l) % (2 * l), expected.jEM)
    model = model_birkhoff_curve(k, l)
    report.compare("model_jEM", viro_jplus(model) % (2 * l), expected.jEM)
    report.compare("model_n", abs(winding_number(model, 0j)), expected.n)


def verify_torus(params: EulerParams, k: int, l: int,
                 phase_fractions: Sequence[float] = (GENERIC_PHASE_FRACTION,),
                 samples_per_period: int = DEFAULT_SAMPLES_PER_PERIOD,
                 rel_tol: float = QUAD_REL_TOL,
                 angle_tol: float = ANGLE_TOL) -> VerificationReport:
    """
    Verify the numeric pipeline on T_{k,l} against the closed forms.

    Args:
        params: The Euler problem
        k, l: Coprime rotation numbers
        phase_fractions: Generic phases, as fractions of the collision
            spacing; with more than one the invariants must not depend on it
        samples_per_period: Trace resolution
        rel_tol: Quadrature tolerance of the torus search
        angle_tol: Smallest crossing angle accepted as transverse

    Returns:
        A report; a precondition violation yields a single failed check
    """
    report = VerificationReport(params=params, k=k, l=l)
    try:
        check_coprime(k, l)
        check_energy(params)
    except DomainError as exc:
        report.add("precondition", False, str(exc))
        return report

    report.closed_form = theorem_formulas(k, l)
    report.collision_formula = selfintersection_formula(k, l)

    torus = _guarded(report, "torus", lambda: find_torus(params, k, l, rel_tol=rel_tol))
    if torus is None:
        return report
    report.add("torus", True, f"f_lambda={torus.f_lambda:.12g}")
    _guarded(report, "rotation_recheck", lambda: _rotation_recheck(report, torus))

    found_sets = []
    for i, fraction in enumerate(phase_fractions):
        first = i == 0
        suffix = "" if first else f"@{fraction:g}"
        trace = _guarded(report, f"trace{suffix}",
                         lambda: _trace_checks(report, torus, fraction, samples_per_period, first))
        if trace is None:
            continue
        found = _guarded(report, f"invariants{suffix}",
                         lambda: compute_invariants(trace.curve, params, angle_tol))
        if found is None:
            continue
        if first:
            report.numeric = found.invariants
            report.details = found
            _invariant_checks(report, found, report.closed_form)
        found_sets.append(found.invariants)
    if len(phase_fractions) > 1:
        report.add("phase_independence",
                   len(found_sets) == len(phase_fractions) and len(set(found_sets)) == 1,
                   ", ".join(str(s) for s in found_sets))

    _guarded(report, "collision_self_intersections",
             lambda: _collision_checks(report, torus, samples_per_period))
    _guarded(report, "formulas", lambda: _formula_checks(report, report.closed_form))

    logger.info("T_{%d,%d} at mu=%g, c=%g: %s (%d checks, %d failed)", k, l, params.mu, params.c,
                "pass" if report.passed else "FAIL", len(report.checks), len(report.failures))
    return report
