"""
Command-Line Interface for the two-center invariants tool

Provides commands for tracing orbits, computing their invariants and
running verification sweeps.

Exit codes: 0 success, 1 verification failure, 2 violated precondition,
3 numeric or genericity failure.
"""

import sys
import traceback
from pathlib import Path
from typing import Optional

import click

from twocenter_invariants import __version__
from twocenter_invariants.numerics.config import (
    ANGLE_TOL,
    DEFAULT_SAMPLES_PER_PERIOD,
    GENERIC_PHASE_FRACTION,
    PHASE_INDEPENDENCE_FRACTIONS,
    QUAD_REL_TOL,
)
from twocenter_invariants.numerics.dynamics.orbit import (
    CollisionSelector,
    collision_trace,
    orbit_from_dict,
    orbit_to_csv,
    orbit_to_dict,
    trace_states,
)
from twocenter_invariants.numerics.dynamics.torus import find_torus, generic_phase
from twocenter_invariants.numerics.exceptions import (
    CurveFormatError,
    DomainError,
    NonGenericCurveError,
    TwoCenterError,
)
from twocenter_invariants.numerics.invariants import compute_invariants, theorem_formulas, verify_torus
from twocenter_invariants.numerics.log_settings import configure_logging
from twocenter_invariants.numerics.types import EulerParams
from twocenter_invariants.report_generator import ReportGenerator
from twocenter_invariants.svg_plot import render_orbit_svg, write_svg
from twocenter_invariants.sweep import SweepConfig, run_sweep, write_sweep
from twocenter_invariants.utils import dumps_json, load_json

EXIT_VERIFICATION = 1
EXIT_DOMAIN = 2
EXIT_NUMERIC = 3


def _fail(exc: Exception, verbose: bool) -> None:
    """Report an error and exit with its code."""
    code = EXIT_DOMAIN if isinstance(exc, DomainError) else EXIT_NUMERIC
    message = f"✗ Error: {exc}"
    if isinstance(exc, NonGenericCurveError):
        message += "\n  The traced orbit is not generic; retry with a different --phase (e.g. 0.3 or 0.7)."
    click.echo(click.style(message, fg="red"), err=True)
    if verbose:
        traceback.print_exc()
    sys.exit(code)


def _setup(verbose: bool) -> None:
    configure_logging("DEBUG" if verbose else None)


def _write_or_echo(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
        click.echo(click.style(f"✓ Saved to: {output}", fg="green"), err=True)
    else:
        click.echo(text, nl=False)


def torus_options(fn):
    """--mu, --c, --k, --l, --phase shared by orbit and invariants."""
    for decorator in reversed([
        click.option('--mu', type=float, default=0.5, show_default=True, help='Mass ratio in (0, 1)'),
        click.option('--c', 'energy', type=float, default=-0.5, show_default=True,
                     help='Energy, between c_J and 0'),
        click.option('--k', type=int, help='Rotation number numerator'),
        click.option('--l', 'ell', type=int, help='Rotation number denominator'),
        click.option('--phase', type=float, default=GENERIC_PHASE_FRACTION, show_default=True,
                     help='Generic phase as a fraction of the collision spacing'),
    ]):
        fn = decorator(fn)
    return fn


def numeric_options(fn):
    """--resolution, --tol-quad, --tol-geom, --verbose shared by all computing commands."""
    for decorator in reversed([
        click.option('--resolution', type=int, default=DEFAULT_SAMPLES_PER_PERIOD, show_default=True,
                     help='Samples per period of the traced orbit'),
        click.option('--tol-quad', type=float, default=QUAD_REL_TOL, show_default=True,
                     help='Relative quadrature tolerance'),
        click.option('--tol-geom', type=float, default=ANGLE_TOL, show_default=True,
                     help='Smallest crossing angle (radians) accepted as transverse'),
        click.option('--verbose', is_flag=True, help='Enable verbose output'),
    ]):
        fn = decorator(fn)
    return fn


def _require_pair(k: Optional[int], ell: Optional[int]) -> None:
    if k is None or ell is None:
        raise DomainError("--k and --l are required")


@click.group()
@click.version_option(version=__version__)
def main():
    """
    Two-center invariants of lemniscate orbits.

    Traces periodic orbits of the Euler two-center problem on T_{k,l} tori
    and computes the invariants J0, J_E, J_M and (J_EM, n).
    """
    pass


@main.command()
@torus_options
@numeric_options
@click.option(
    '--collision',
    type=click.Choice([s.value for s in CollisionSelector], case_sensitive=False),
    help='Dump a collision-collision orbit instead of a generic one'
)
@click.option(
    '--format',
    'fmt',
    type=click.Choice(['json', 'csv'], case_sensitive=False),
    default='json',
    help='Output format of the orbit dump'
)
@click.option('--output', type=click.Path(), help='Output file path (default: stdout)')
@click.option('--svg', type=click.Path(), help='Also draw the orbit as SVG')
@click.option('--arrows', is_flag=True, help='Draw orientation arrows in the SVG')
def orbit(mu, energy, k, ell, phase, resolution, tol_quad, tol_geom, verbose,
          collision, fmt, output, svg, arrows):
    """
    Trace one orbit of a T_{k,l} torus.

    Examples:

        # Generic T_{3,2} orbit with its picture
        twocenter orbit --mu 0.5 --c -0.5 --k 3 --l 2 --svg out.svg

        # Primary collision orbit as CSV
        twocenter orbit --k 2 --l 3 --collision primary --format csv
    """
    _setup(verbose)
    try:
        _require_pair(k, ell)
        torus = find_torus(EulerParams(mu=mu, c=energy), k, ell, rel_tol=tol_quad)
        if collision:
            trace = collision_trace(torus, CollisionSelector(collision.lower()), resolution)
        else:
            trace = trace_states(torus, generic_phase(torus, phase), resolution)
        curve = trace.curve
        if fmt.lower() == 'csv':
            _write_or_echo(orbit_to_csv(curve), output)
        else:
            _write_or_echo(dumps_json(orbit_to_dict(torus, curve, trace.phase)), output)
        if svg:
            write_svg(render_orbit_svg(torus, curve, arrows=arrows), svg)
            click.echo(click.style(f"✓ SVG saved to: {svg}", fg="green"), err=True)
    except TwoCenterError as e:
        _fail(e, verbose)


@main.command()
@torus_options
@numeric_options
@click.option('--from', 'source', type=click.Path(exists=True, dir_okay=False),
              help='Orbit dump (JSON) to read instead of tracing')
@click.option(
    '--format',
    'fmt',
    type=click.Choice(['json', 'console'], case_sensitive=False),
    default='json',
    help='Output format for the report'
)
@click.option('--output', type=click.Path(), help='Output file path (default: stdout)')
def invariants(mu, energy, k, ell, phase, resolution, tol_quad, tol_geom, verbose,
               source, fmt, output):
    """
    Compute the invariants of a generic orbit.

    Examples:

        twocenter invariants --k 3 --l 2

        twocenter invariants --from orbit.json --format console
    """
    _setup(verbose)
    try:
        if source:
            try:
                payload = load_json(source)
            except ValueError as e:
                raise CurveFormatError(f"{source} is not valid JSON: {e}") from e
            torus, curve, phase_value = orbit_from_dict(payload)
        else:
            _require_pair(k, ell)
            torus = find_torus(EulerParams(mu=mu, c=energy), k, ell, rel_tol=tol_quad)
            trace = trace_states(torus, generic_phase(torus, phase), resolution)
            curve, phase_value = trace.curve, trace.phase
        found = compute_invariants(curve, torus.params, angle_tol=tol_geom)

        generator = ReportGenerator()
        if fmt.lower() == 'console':
            text = generator.generate_console_report(found, torus, theorem_formulas(torus.k, torus.l))
        else:
            text = generator.generate_json_report(found, torus, phase_value)
        _write_or_echo(text, output)
    except TwoCenterError as e:
        _fail(e, verbose)


@main.command()
@torus_options
@numeric_options
@click.option('--phases', is_flag=True,
              help='Also check phase independence at several generic phases')
@click.option(
    '--format',
    'fmt',
    type=click.Choice(['json', 'console'], case_sensitive=False),
    default='console',
    help='Output format for the report'
)
@click.option('--output', type=click.Path(), help='Output file path (default: stdout)')
def verify(mu, energy, k, ell, phase, resolution, tol_quad, tol_geom, verbose, phases, fmt, output):
    """
    Verify one T_{k,l} torus against the closed formulas.

    Exits with 1 if any check fails.

    Examples:

        twocenter verify --k 2 --l 3 --mu 0.3 --c -0.48

        twocenter verify --k 3 --l 2 --phases --format json
    """
    _setup(verbose)
    try:
        _require_pair(k, ell)
        fractions = PHASE_INDEPENDENCE_FRACTIONS if phases else (phase,)
        report = verify_torus(EulerParams(mu=mu, c=energy), k, ell, phase_fractions=fractions,
                              samples_per_period=resolution, rel_tol=tol_quad, angle_tol=tol_geom)
    except TwoCenterError as e:
        _fail(e, verbose)
        return

    generator = ReportGenerator()
    if fmt.lower() == 'json':
        text = generator.generate_verification_json(report)
    else:
        text = generator.generate_verification_console(report, verbose=verbose)
    _write_or_echo(text, output)
    if report.failures and report.failures[0].name == "precondition":
        sys.exit(EXIT_DOMAIN)
    if not report.passed:
        sys.exit(EXIT_VERIFICATION)


@main.command()
@click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False),
              help='YAML sweep configuration')
@click.option('--mu', 'mus', type=float, multiple=True, help='Mass ratio (repeatable)')
@click.option('--c', 'energies', type=float, multiple=True,
              help='Energy (repeatable; default: midpoint of (c_J, 0))')
@click.option('--max-k', type=int, help='Largest k')
@click.option('--max-l', type=int, help='Largest l')
@click.option('--jobs', type=int, help='Worker processes')
@click.option('--out-dir', type=click.Path(file_okay=False), help='Directory for reports and summary')
@click.option('--resolution', type=int, help='Samples per period of the traced orbits')
@click.option('--tol-quad', type=float, help='Relative quadrature tolerance')
@click.option('--tol-geom', type=float, help='Smallest crossing angle (radians) accepted as transverse')
@click.option('--verbose', is_flag=True, help='Enable verbose output')
def sweep(config_path, mus, energies, max_k, max_l, jobs, out_dir, resolution,
          tol_quad, tol_geom, verbose):
    """
    Verify every coprime T_{k,l} torus in range against the closed formulas.

    Exits with 1 if any check fails.

    Examples:

        twocenter sweep --max-k 4 --max-l 4 --mu 0.5 --out-dir results

        twocenter sweep --config sweep.yaml --jobs 4
    """
    _setup(verbose)
    overrides = {
        "mus": list(mus) or None,
        "cs": list(energies) or None,
        "max_k": max_k,
        "max_l": max_l,
        "jobs": jobs,
        "out_dir": out_dir,
        "samples_per_period": resolution,
        "rel_tol": tol_quad,
        "angle_tol": tol_geom,
    }
    try:
        if config_path:
            config = SweepConfig.from_yaml(config_path, **overrides)
        else:
            config = SweepConfig(**{key: value for key, value in overrides.items() if value is not None})
        result = run_sweep(config)
    except TwoCenterError as e:
        _fail(e, verbose)
        return

    click.echo(ReportGenerator().generate_sweep_console(result.rows()), nl=False)
    if config.out_dir is not None:
        write_sweep(result, config.out_dir)
        click.echo(click.style(f"✓ Reports saved to: {config.out_dir}", fg="green"))
    if not result.passed:
        for report in result.reports:
            for check in report.failures:
                click.echo(click.style(
                    f"✗ T_{{{report.k},{report.l}}} mu={report.params.mu:g}: {check.name} {check.detail}",
                    fg="red"), err=True)
        sys.exit(EXIT_VERIFICATION)


@main.command()
def version():
    """Show version information."""
    click.echo(f"\ntwocenter-invariants v{__version__}\n")


if __name__ == "__main__":
    main()
