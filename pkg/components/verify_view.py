"""
Verify Command
Runs the identity suites and reports per-check verdicts
"""

import logging
import time

import click

from components.options import jobs_from_context
from config.settings import DEFAULT_CEILING, VERIFY_KMAX, VERIFY_NMAX, VERIFY_ORDER
from utils.errors import CeilingExceededError, FamilyParameterError
from utils.pdf_generator import write_pdf_report
from utils.run_report import build_report, dump_report
from utils.verification import FAIL, SUITES, run_suite, summarize

logger = logging.getLogger(__name__)

SUITE_CHOICES = list(SUITES) + ["all"]
MAX_KMAX = 9


def _check_bounds(kmax, nmax, order):
    if not 3 <= kmax <= MAX_KMAX:
        raise FamilyParameterError(f"--kmax must lie in 3..{MAX_KMAX} (got {kmax})")
    if nmax < 1:
        raise FamilyParameterError(f"--nmax must be >= 1 (got {nmax})")
    if nmax > DEFAULT_CEILING:
        raise CeilingExceededError(f"--nmax {nmax} is above the enumeration ceiling {DEFAULT_CEILING}")
    if order < 1:
        raise FamilyParameterError(f"--order must be >= 1 (got {order})")


@click.command()
@click.option("--suite", type=click.Choice(SUITE_CHOICES), default="all", help="Suite to run")
@click.option("--kmax", type=int, default=VERIFY_KMAX, show_default=True, help="Largest pattern length")
@click.option("--nmax", type=int, default=VERIFY_NMAX, show_default=True, help="Largest n for the oracle")
@click.option("--order", type=int, default=VERIFY_ORDER, show_default=True, help="Series truncation order")
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default="text")
@click.option("--output", "output_path", type=click.Path(dir_okay=False), default=None,
              help="Write the JSON report to a file")
@click.option("--pdf", "pdf_path", type=click.Path(dir_okay=False), default=None, help="Also write a PDF report")
@click.pass_context
def verify(ctx, suite, kmax, nmax, order, output_format, output_path, pdf_path):
    """
    Check every identity against the brute-force oracle.

    Exits 0 when every check passes and 1 otherwise.

    Examples:

        gpav verify --suite main11 --kmax 5 --nmax 8

        gpav verify --suite tp1 --kmax 5 --nmax 9 --format json
    """
    _check_bounds(kmax, nmax, order)
    started = time.perf_counter()
    checks = run_suite(suite, kmax, nmax, order, jobs=jobs_from_context(ctx))
    summary = summarize(checks)
    params = {"suite": suite, "kmax": kmax, "nmax": nmax, "order": order}
    report = build_report("verify", params, checks, summary, time.perf_counter() - started)

    if output_format == "json":
        click.echo(dump_report(report))
    else:
        for check in checks:
            if check["verdict"] == FAIL:
                click.echo(f"FAIL {check['suite']}/{check['name']} {check['params']}: {check['detail']}")
        click.echo(f"{summary['passed']} passed, {summary['failed']} failed, {summary['info']} info "
                   f"({report['elapsed']}s)")
    if output_path:
        with open(output_path, "w") as handle:
            handle.write(dump_report(report))
    if pdf_path:
        write_pdf_report(pdf_path, report, report_type="verify")
        logger.info("PDF report written to %s", pdf_path)

    if summary["failed"]:
        ctx.exit(1)
