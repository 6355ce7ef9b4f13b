# SPDX-FileCopyrightText: 2026 Contributors to the gaussian-separability project
#
# SPDX-License-Identifier: LGPL-3.0-or-later

"""
Command-line interface.

Exit codes: 0 on success, 2 when the input cannot be parsed or validated, 3 when the state is
unphysical or has no P-representation (for ``sample-p``), 4 when the constructions disagree.
"""

import csv
import io
import logging
import pathlib

import click
from pydantic import ValidationError

from .analysis import (
    AnalysisStatus,
    analyzer_from_config,
    CovarianceInput,
    parse_input,
    RegionRow,
)
from .config import Settings
from .exceptions import SeparabilityError


EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_INCONSISTENT = 4

_STATUS_EXIT_CODES = {
    AnalysisStatus.OK.name: EXIT_OK,
    AnalysisStatus.UNPHYSICAL.name: EXIT_DOMAIN,
    AnalysisStatus.NO_CERTIFICATE.name: EXIT_DOMAIN,
    AnalysisStatus.INCONSISTENT.name: EXIT_INCONSISTENT,
}

_log = logging.getLogger(__name__)


def _settings(ctx, **overrides):
    settings = ctx.obj["settings"]
    updates = {key: value for key, value in overrides.items() if value is not None}
    return settings.model_copy(update=updates)


def _load(ctx, input_path, convention):
    """Read and validate an input document, exiting with code 2 on failure."""
    try:
        document = parse_input(pathlib.Path(input_path).read_text())
        return document, document.to_covariance(convention)
    except (OSError, ValidationError, SeparabilityError) as e:
        click.echo(f"Invalid input {input_path}: {e}", err=True)
        ctx.exit(EXIT_INPUT)


def _write(text, output):
    if output is None:
        click.echo(text)
    else:
        pathlib.Path(output).write_text(text + "\n")


def _format_float(value):
    return format(value, ".17g")


tol_option = click.option("--tol", type=float, default=None, help="Tolerance on all margins.")
seed_option = click.option("--seed", type=int, default=None, help="Random seed.")
convention_option = click.option(
    "--convention",
    type=click.Choice(["half", "dgcz"]),
    default=None,
    help="Input normalization: vacuum is I/2 (half) or I (dgcz, M = 2V).",
)
output_option = click.option(
    "--output", type=click.Path(dir_okay=False, writable=True), default=None
)


@click.group()
@click.option("--debug", is_flag=True, help="Log debugging information.")
@click.pass_context
def main(ctx, debug):
    """Decide the separability of two-mode Gaussian states."""
    if debug:
        logging.basicConfig(level=logging.DEBUG)
    ctx.ensure_object(dict)
    ctx.obj.setdefault("settings", Settings())


@main.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@tol_option
@seed_option
@convention_option
@output_option
@click.option("--timings", is_flag=True, help="Include the duration of each stage.")
@click.pass_context
def analyze(ctx, input_path, tol, seed, convention, output, timings):
    """Analyze the covariance matrix in INPUT_PATH."""
    settings = _settings(ctx, tol=tol, seed=seed, convention=convention)
    document, cov = _load(ctx, input_path, settings.convention)
    if tol is None and document.tol is not None:
        settings = settings.model_copy(update={"tol": document.tol})
    analyzer = analyzer_from_config(settings)
    report = analyzer.analyze(cov, mean=document.mean, timings=timings)
    _write(report.model_dump_json(indent=2), output)
    ctx.exit(_STATUS_EXIT_CODES[report.status])


@main.command("region-scan")
@click.option("--a", "a", type=float, required=True, help="First local variance.")
@click.option("--b", "b", type=float, required=True, help="Second local variance.")
@click.option("--t-steps", type=int, default=11, show_default=True, help="Number of t values.")
@click.option("--grid", type=int, default=None, help="Grid size per squeezing parameter.")
@output_option
@click.pass_context
def region_scan(ctx, a, b, t_steps, grid, output):
    """Compare the c1² bound with the maximized P-representation bound, as CSV."""
    settings = _settings(ctx, grid=grid)
    analyzer = analyzer_from_config(settings)
    try:
        rows = analyzer.region_scan(a, b, t_steps)
    except SeparabilityError as e:
        click.echo(f"Invalid scan parameters: {e}", err=True)
        ctx.exit(EXIT_INPUT)
    columns = list(RegionRow.model_fields)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_format_float(getattr(row, column)) for column in columns])
    _write(buffer.getvalue().rstrip("\n"), output)


@main.command("random-state")
@seed_option
@click.option(
    "--kind",
    type=click.Choice(["separable", "entangled", "boundary"]),
    default="separable",
    show_default=True,
)
@click.option("--count", type=int, default=1, show_default=True)
@click.option(
    "--output",
    type=click.Path(file_okay=False),
    default=".",
    show_default=True,
    help="Directory where the state-NNNN.json files are written.",
)
@click.pass_context
def random_state(ctx, seed, kind, count, output):
    """Write random covariance matrices of the requested class."""
    settings = _settings(ctx, seed=seed)
    analyzer = analyzer_from_config(settings)
    try:
        states = analyzer.random_states(kind, count)
    except SeparabilityError as e:
        click.echo(str(e), err=True)
        ctx.exit(EXIT_DOMAIN)
    directory = pathlib.Path(output)
    directory.mkdir(parents=True, exist_ok=True)
    for index, cov in enumerate(states):
        document = CovarianceInput(V=cov.V.flatten().tolist())
        path = directory / f"state-{index:04d}.json"
        path.write_text(document.model_dump_json(exclude_none=True) + "\n")
        _log.debug("Wrote %s", path)
    click.echo(f"Wrote {len(states)} {kind} state(s) to {directory}.", err=True)


@main.command("sample-p")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--n", "n", type=click.IntRange(min=1), default=200_000, show_default=True)
@tol_option
@seed_option
@convention_option
@output_option
@click.pass_context
def sample_p(ctx, input_path, n, tol, seed, convention, output):
    """Sample the P-function of the state in INPUT_PATH and check its moments."""
    settings = _settings(ctx, tol=tol, seed=seed, convention=convention)
    _document, cov = _load(ctx, input_path, settings.convention)
    analyzer = analyzer_from_config(settings)
    report = analyzer.sample_report(cov, n)
    _write(report.model_dump_json(indent=2), output)
    if report.status != AnalysisStatus.OK.name:
        click.echo(report.message or "The state has no P-representation", err=True)
    ctx.exit(_STATUS_EXIT_CODES[report.status])
