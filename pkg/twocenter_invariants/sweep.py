"""
Verification sweeps over many T_{k,l} tori.

A sweep runs verify_torus for every coprime (k, l) in range at every (μ, c)
of its configuration, optionally in worker processes, and merges the
reports in (μ, c, k, l) order.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import pandas as pd
import yaml

from twocenter_invariants.numerics.config import (
    ANGLE_TOL,
    DEFAULT_SAMPLES_PER_PERIOD,
    GENERIC_PHASE_FRACTION,
    MIN_SAMPLES_PER_PERIOD,
    QUAD_REL_TOL,
    SWEEP_JOBS,
    SWEEP_MAX_K,
    SWEEP_MAX_L,
    SWEEP_MUS,
)
from twocenter_invariants.numerics.dynamics.regions import critical_energy
from twocenter_invariants.numerics.exceptions import DomainError
from twocenter_invariants.numerics.invariants.verification import VerificationReport, verify_torus
from twocenter_invariants.numerics.types import EulerParams
from twocenter_invariants.utils import save_json

logger = logging.getLogger(__name__)

AUTO_ENERGY = "auto"
SUMMARY_COLUMNS = ["mu", "c", "k", "l", "passed", "checks", "failed", "invariants",
                   "closed_form", "collision_numeric", "collision_formula", "failed_checks"]

EnergySpec = Union[str, float]


def auto_energy(mu: float) -> float:
    """Midpoint of (c_J, 0)."""
    return critical_energy(mu) / 2.0


@dataclass
class SweepConfig:
    """
    Parameters of a verification sweep.

    Attributes:
        mus: Mass ratios
        cs: Energies, or "auto" for the midpoint of (c_J, 0) at each μ
        max_k, max_l: Inclusive upper bounds of the rotation numbers
        samples_per_period: Trace resolution
        out_dir: Directory receiving the per-torus reports and the summary
        jobs: Worker processes; 1 runs in-process
        rel_tol, angle_tol: Quadrature and crossing-angle tolerances
        phase_fractions: Generic phases checked per torus
    """

    mus: List[float] = field(default_factory=lambda: list(SWEEP_MUS))
    cs: Union[str, List[float]] = AUTO_ENERGY
    max_k: int = SWEEP_MAX_K
    max_l: int = SWEEP_MAX_L
    samples_per_period: int = DEFAULT_SAMPLES_PER_PERIOD
    out_dir: Optional[Path] = None
    jobs: int = SWEEP_JOBS
    rel_tol: float = QUAD_REL_TOL
    angle_tol: float = ANGLE_TOL
    phase_fractions: Tuple[float, ...] = (GENERIC_PHASE_FRACTION,)

    def __post_init__(self):
        self.mus = [float(mu) for mu in self.mus]
        if isinstance(self.cs, str):
            if self.cs != AUTO_ENERGY:
                raise DomainError(f"energies must be a list or {AUTO_ENERGY!r}, got {self.cs!r}")
        else:
            self.cs = [float(c) for c in self.cs]
        if self.out_dir is not None:
            self.out_dir = Path(self.out_dir)
        self.phase_fractions = tuple(float(f) for f in self.phase_fractions)
        if self.max_k < 0 or self.max_l < 0:
            raise DomainError(f"max_k and max_l must be nonnegative, got {self.max_k}, {self.max_l}")
        if self.jobs < 1:
            raise DomainError(f"jobs must be at least 1, got {self.jobs}")
        if self.samples_per_period < MIN_SAMPLES_PER_PERIOD:
            raise DomainError(
                f"samples_per_period must be at least {MIN_SAMPLES_PER_PERIOD}, got {self.samples_per_period}"
            )
        for mu, c in self.energy_grid():
            c_j = critical_energy(mu)
            if not c_j < c < 0.0:
                raise DomainError(f"c={c:g} outside (c_J, 0) = ({c_j:g}, 0) for mu={mu:g}")

    @classmethod
    def from_yaml(cls, path: Union[str, Path], **overrides: Any) -> "SweepConfig":
        """
        Load a sweep configuration; keyword overrides win over the file.

        Raises:
            DomainError: On unknown keys or invalid values
        """
        with open(path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}
        if not isinstance(data, dict):
            raise DomainError(f"sweep configuration {path} must be a mapping")
        data.update({key: value for key, value in overrides.items() if value is not None})
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise DomainError(f"unknown sweep configuration keys: {sorted(unknown)}")
        if "phase_fractions" in data:
            data["phase_fractions"] = tuple(data["phase_fractions"])
        return cls(**data)

    def energy_grid(self) -> List[Tuple[float, float]]:
        grid = []
        for mu in self.mus:
            energies = [auto_energy(mu)] if self.cs == AUTO_ENERGY else self.cs
            grid.extend((mu, c) for c in energies)
        return grid

    def pairs(self) -> List[Tuple[int, int]]:
        """Coprime (k, l) with 1 ≤ k ≤ max_k, 1 ≤ l ≤ max_l."""
        return [(k, l) for k in range(1, self.max_k + 1) for l in range(1, self.max_l + 1)
                if math.gcd(k, l) == 1]

    def jobs_list(self) -> List[Tuple[float, float, int, int]]:
        return [(mu, c, k, l) for mu, c in self.energy_grid() for k, l in self.pairs()]


@dataclass
class SweepResult:
    config: SweepConfig
    reports: List[VerificationReport]

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)

    def rows(self) -> List[Dict[str, Any]]:
        return [summary_row(report) for report in self.reports]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows(), columns=SUMMARY_COLUMNS)


def summary_row(report: VerificationReport) -> Dict[str, Any]:
    return {
        "mu": report.params.mu,
        "c": report.params.c,
        "k": report.k,
        "l": report.l,
        "passed": report.passed,
        "checks": len(report.checks),
        "failed": len(report.failures),
        "invariants": str(report.numeric) if report.numeric else "",
        "closed_form": str(report.closed_form) if report.closed_form else "",
        "collision_numeric": report.collision_numeric,
        "collision_formula": report.collision_formula,
        "failed_checks": ",".join(check.name for check in report.failures),
    }


def _verify_job(job: Tuple[float, float, int, int], config: SweepConfig) -> VerificationReport:
    mu, c, k, l = job
    return verify_torus(EulerParams(mu=mu, c=c), k, l,
                        phase_fractions=config.phase_fractions,
                        samples_per_period=config.samples_per_period,
                        rel_tol=config.rel_tol, angle_tol=config.angle_tol)


def _run_jobs(jobs: Sequence[Tuple[float, float, int, int]], config: SweepConfig) -> Iterator[VerificationReport]:
    if config.jobs == 1 or len(jobs) <= 1:
        for job in jobs:
            yield _verify_job(job, config)
        return
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        # map keeps submission order
        yield from pool.map(_verify_job, jobs, [config] * len(jobs))


def run_sweep(config: SweepConfig) -> SweepResult:
    """
    Verify every torus of the configuration.

    Failures are recorded in the reports; the sweep never aborts on them.
    """
    jobs = sorted(config.jobs_list())
    logger.info("sweep over %d tori with %d worker(s)", len(jobs), config.jobs)
    reports = list(_run_jobs(jobs, config))
    failed = sum(1 for report in reports if not report.passed)
    logger.info("sweep finished: %d passed, %d failed", len(reports) - failed, failed)
    return SweepResult(config=config, reports=reports)


def report_filename(report: VerificationReport) -> str:
    return f"report_mu{report.params.mu:g}_c{report.params.c:.6g}_k{report.k}_l{report.l}.json"


def write_sweep(result: SweepResult, out_dir: Union[str, Path]) -> Path:
    """Write one JSON report per torus plus summary.json and summary.csv."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for report in result.reports:
        save_json(report.to_dict(), out / report_filename(report))
    frame = result.to_frame()
    frame.to_csv(out / "summary.csv", index=False, float_format="%.17g")
    save_json({
        "passed": result.passed,
        "tori": len(result.reports),
        "failed": int((~frame["passed"].astype(bool)).sum()) if len(frame) else 0,
        "rows": result.rows(),
    }, out / "summary.json")
    logger.info("wrote %d report(s) to %s", len(result.reports), out)
    return out
