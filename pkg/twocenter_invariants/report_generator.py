"""
Report Generator for invariant computations and verification sweeps

Generates reports in two formats:
- Console output (rich tables, human-readable)
- JSON (deterministic, machine-readable)
"""

import io
from typing import Any, Dict, List, Optional, Sequence

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from twocenter_invariants import __version__
from twocenter_invariants.numerics.invariants import NumericInvariants, VerificationReport
from twocenter_invariants.numerics.types import InvariantSet, TorusData
from twocenter_invariants.utils import dumps_json

CONSOLE_WIDTH = 100


def _mark(passed: bool) -> str:
    return "[green]✓[/green]" if passed else "[red]✗[/red]"


class ReportGenerator:
    """
    Generates invariant and verification reports in multiple formats.
    """

    def __init__(self, width: int = CONSOLE_WIDTH):
        self.width = width

    def _render(self, *renderables) -> str:
        buffer = io.StringIO()
        console = Console(file=buffer, width=self.width, force_terminal=False, color_system=None)
        for renderable in renderables:
            console.print(renderable)
        return buffer.getvalue()

    # ========================================================================
    # INVARIANTS
    # ========================================================================

    def invariants_payload(self, found: NumericInvariants,
                           torus: Optional[TorusData] = None,
                           phase: Optional[float] = None) -> Dict[str, Any]:
        data = found.to_dict()
        if torus is not None:
            data["torus"] = torus.to_dict()
        if phase is not None:
            data["phase"] = float(phase)
        data["metadata"] = {"version": __version__, "generator": "twocenter-invariants"}
        return data

    def generate_json_report(self, found: NumericInvariants,
                             torus: Optional[TorusData] = None,
                             phase: Optional[float] = None) -> str:
        """
        Generate a JSON report of one invariant computation.

        The "invariants" field holds j0, jE, jM, n and jEM; "stages" holds
        the Viro terms of the curve and of each lift.
        """
        return dumps_json(self.invariants_payload(found, torus, phase))

    def generate_console_report(self, found: NumericInvariants,
                                torus: Optional[TorusData] = None,
                                closed_form: Optional[InvariantSet] = None) -> str:
        """
        Generate a console-friendly report mirroring the worked arithmetic

            J⁺ = 1 + #D − Σw² + Σind²

        for the curve and each of its lifts.
        """
        title = "TWO-CENTER INVARIANTS"
        if torus is not None:
            title += f" of T_{{{torus.k},{torus.l}}} (mu={torus.params.mu:g}, c={torus.params.c:g})"

        stages = Table(title=title, title_justify="left")
        stages.add_column("Curve")
        stages.add_column("components", justify="right")
        stages.add_column("#D", justify="right")
        stages.add_column("Σw²", justify="right")
        stages.add_column("Σind²", justify="right")
        stages.add_column("J⁺", justify="right")
        stages.add_column("windings", justify="right")
        stages.add_column("value", justify="right")

        def row(name, components, terms, windings, value):
            stages.add_row(name, str(components), str(terms.double_points), str(terms.sum_w2),
                           f"{terms.sum_ind2_x4 // 4}", str(terms.jplus), windings, value)

        base = found.base
        row("K", 1, base.terms, f"w_E={base.w_E}, w_M={base.w_M}", f"𝒥₀ = {base.value}")
        for stage in (found.lift_E, found.lift_M):
            w1, w2 = stage.lifted_windings
            row(f"K̃_{stage.center.value}", stage.components, stage.terms, f"{w1}, {w2}",
                f"𝒥_{stage.center.value} = {stage.value}")
        birkhoff = found.birkhoff
        row("K̃_EM", birkhoff.components, birkhoff.terms, f"w_0={birkhoff.n}",
            f"𝒥_EM = {birkhoff.residue}")

        lines = [stages, f"Invariant set: {found.invariants}"]
        if closed_form is not None:
            match = found.invariants == closed_form
            lines.append(f"Closed form:   {closed_form}  {'match' if match else 'MISMATCH'}")
        return self._render(*lines)

    # ========================================================================
    # VERIFICATION
    # ========================================================================

    def generate_verification_json(self, report: VerificationReport) -> str:
        return dumps_json(report.to_dict())

    def generate_verification_console(self, report: VerificationReport, verbose: bool = False) -> str:
        """Verdict of one torus; lists every check when verbose, failures otherwise."""
        verdict = "[green]PASS[/green]" if report.passed else "[red]FAIL[/red]"
        header = (f"T_{{{report.k},{report.l}}} at mu={report.params.mu:g}, "
                  f"c={report.params.c:g}: {verdict}")
        table = Table(show_header=True)
        table.add_column("check")
        table.add_column("", justify="center")
        table.add_column("detail")
        shown = report.checks if verbose else report.failures
        for check in shown:
            table.add_row(check.name, _mark(check.passed), escape(check.detail))
        parts: List[Any] = [header]
        if report.numeric is not None:
            parts.append(f"numeric     {report.numeric}")
        if report.closed_form is not None:
            parts.append(f"closed form {report.closed_form}")
        if shown:
            parts.append(table)
        return self._render(*parts)

    # ========================================================================
    # SWEEPS
    # ========================================================================

    def sweep_table(self, rows: Sequence[Dict[str, Any]]) -> Table:
        """Summary table of a sweep, one row per torus."""
        table = Table(title="VERIFICATION SWEEP", title_justify="left")
        for name, justify in (("mu", "right"), ("c", "right"), ("k", "right"), ("l", "right"),
                              ("invariants", "left"), ("collision N", "right"),
                              ("checks", "right"), ("", "center"), ("failed", "left")):
            table.add_column(name, justify=justify)
        for row in rows:
            table.add_row(
                f"{row['mu']:g}", f"{row['c']:.6g}", str(row["k"]), str(row["l"]),
                row["invariants"] or "-",
                "-" if row["collision_numeric"] is None else str(row["collision_numeric"]),
                f"{row['checks'] - row['failed']}/{row['checks']}",
                _mark(row["passed"]), escape(row["failed_checks"]),
            )
        return table

    def generate_sweep_console(self, rows: Sequence[Dict[str, Any]]) -> str:
        passed = sum(1 for row in rows if row["passed"])
        return self._render(self.sweep_table(rows), f"{passed}/{len(rows)} tori passed")
