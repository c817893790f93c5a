"""
betamorph command group.

    betamorph certify  --beta SPEC | --beta-list FILE
    betamorph verify   TARGET --beta SPEC
    betamorph spectrum --beta SPEC
    betamorph markov   --beta SPEC
    betamorph orbit    --beta SPEC

Exit codes: 0 success, 1 a verified property failed, 2 invalid input,
3 internal failure.
"""
import asyncio
import logging
from typing import Callable, Optional, Tuple

import click
from pydantic import BaseModel

from app.cli.batch import certify_batch, certify_one, read_beta_list
from app.cli.errors import (
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_PROPERTY_FAILED,
    error_report,
    exit_code_for,
)
from app.cli.output import FORMATS, emit, render, render_batch
from app.core.config import get_settings
from app.core.logging import setup_logging
from app.core.metrics import write_metrics
from app.exceptions import BetamorphException
from app.schemas.common import ErrorReport, RunConfig
from app.services.algebra import parse_beta
from app.services.analysis import TARGET_ALIASES, VERIFY_TARGETS, AnalysisService
from app.services.converters import ReportConverter

logger = logging.getLogger(__name__)

# (result schema, passed or None, exit code)
Outcome = Tuple[BaseModel, Optional[bool], int]


def output_options(func):
    func = click.option("--digits", type=int, default=None, help="Significant digits of decimals.")(func)
    func = click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the report here.")(func)
    func = click.option(
        "--format", "fmt", type=click.Choice(FORMATS), default="json", show_default=True
    )(func)
    return func


def beta_option(required: bool = True):
    return click.option(
        "--beta", "beta", required=required,
        help="multinacci:n | rational:p/q | poly:c0,c1,...[@lo,hi]",
    )


map_option = click.option("--map", "map_name", type=click.Choice(["T", "S", "both"], case_sensitive=False), default=None)


def run_single(
    ctx: click.Context,
    command: str,
    beta: str,
    fmt: str,
    out: Optional[str],
    digits: Optional[int],
    build: Callable[[AnalysisService], Outcome],
    **params,
) -> None:
    """Parse beta, run build, emit the report and exit with its code."""
    try:
        field = parse_beta(beta)
        service = AnalysisService(field, digits)
        result, passed, code = build(service)
        config = RunConfig(
            command=command,
            digits=service.digits,
            precision_limit=field.precision_limit,
            **params,
        )
        report = ReportConverter.envelope(field, config, result, passed)
    except BetamorphException as e:
        logger.error(f"{command} failed: {e}", extra={"beta_spec": beta, "error_type": type(e).__name__})
        click.echo(render(error_report(beta, e), "json" if fmt == "json" else "text"), err=True, nl=False)
        ctx.exit(exit_code_for(e))
        return
    except Exception as e:
        logger.exception(f"{command} failed unexpectedly: {e}", extra={"beta_spec": beta})
        click.echo(render(error_report(beta, e), "json" if fmt == "json" else "text"), err=True, nl=False)
        ctx.exit(EXIT_INTERNAL)
        return

    emit(render(report, fmt), out)
    ctx.exit(code)


@click.group(name="betamorph")
@click.version_option(version=get_settings().APP_VERSION, prog_name="betamorph")
@click.option("--log-level", default=None, help="Overrides LOG_LEVEL.")
@click.option("--metrics-file", type=click.Path(dir_okay=False), default=None, help="Prometheus textfile output.")
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str], metrics_file: Optional[str]):
    """Exact isomorphism analysis of the positive and negative beta-transformations."""
    setup_logging(log_level)
    metrics_file = metrics_file or get_settings().METRICS_FILE
    if metrics_file:
        ctx.call_on_close(lambda: write_metrics(metrics_file))


@cli.command()
@beta_option(required=False)
@click.option("--beta-list", type=click.Path(exists=True, dir_okay=False), default=None, help="File of beta specs, one per line.")
@click.option("--n", "n", type=int, default=None, help="Force the iterate the spectra are compared at.")
@output_options
@click.pass_context
def certify(ctx, beta, beta_list, n, fmt, out, digits):
    """Isomorphism verdict for beta."""
    if bool(beta) == bool(beta_list):
        raise click.UsageError("Give exactly one of --beta and --beta-list")

    if beta_list:
        try:
            specs = read_beta_list(beta_list)
        except BetamorphException as e:
            click.echo(str(e), err=True)
            ctx.exit(exit_code_for(e))
            return
        outcomes = asyncio.run(certify_batch(specs, forced_n=n, digits=digits))
        emit(render_batch([report for report, _ in outcomes], fmt), out)
        ctx.exit(max(code for _, code in outcomes))
        return

    report, code = certify_one(beta, forced_n=n, digits=digits)
    if not isinstance(report, ErrorReport):
        emit(render(report, fmt), out)
    else:
        click.echo(render(report, "json" if fmt == "json" else "text"), err=True, nl=False)
    ctx.exit(code)


@cli.command()
@click.argument("target", type=click.Choice(VERIFY_TARGETS + tuple(TARGET_ALIASES)))
@beta_option()
@click.option("--n", "n", type=int, default=None)
@click.option("--m", "m", type=int, default=None)
@click.option("--depth", type=int, default=None, help="Coding depth for the markov target.")
@map_option
@output_options
@click.pass_context
def verify(ctx, target, beta, n, m, depth, map_name, fmt, out, digits):
    """Check one property of beta; exit 1 when it fails."""
    def build(service: AnalysisService) -> Outcome:
        result, passed = service.verify(target, n=n, m=m, map_name=map_name, depth=depth)
        return result, passed, EXIT_OK if passed else EXIT_PROPERTY_FAILED

    run_single(ctx, "verify", beta, fmt, out, digits, build,
               target=target, n=n, m=m, depth=depth, map=map_name)


@cli.command()
@beta_option()
@click.option("--n", "n", type=int, default=None, help="Iterate (default: the critical one).")
@map_option
@output_options
@click.pass_context
def spectrum(ctx, beta, n, map_name, fmt, out, digits):
    """Preimage spectra of T^n and S^n."""
    def build(service: AnalysisService) -> Outcome:
        return service.spectrum(n, map_name), None, EXIT_OK

    run_single(ctx, "spectrum", beta, fmt, out, digits, build, n=n, map=map_name)


@cli.command()
@beta_option()
@click.option("--depth", type=int, default=None, help="Coding depth.")
@map_option
@output_options
@click.pass_context
def markov(ctx, beta, depth, map_name, fmt, out, digits):
    """Markov partition, matrix, measure and entropy of one map."""
    def build(service: AnalysisService) -> Outcome:
        return service.markov(map_name, depth), None, EXIT_OK

    run_single(ctx, "markov", beta, fmt, out, digits, build, depth=depth, map=map_name)


@cli.command()
@beta_option()
@click.option("--depth", type=int, default=None, help="Number of iterates (default ORBIT_DEFAULT_DEPTH).")
@map_option
@output_options
@click.pass_context
def orbit(ctx, beta, depth, map_name, fmt, out, digits):
    """Orbit of 1 with exact residues and decimals."""
    def build(service: AnalysisService) -> Outcome:
        return service.orbit(map_name, depth), None, EXIT_OK

    run_single(ctx, "orbit", beta, fmt, out, digits, build, depth=depth, map=map_name)
