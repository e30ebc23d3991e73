"""
Counting Commands
`count` for a single n, `sequence` for a table over 0..nmax
"""

import json
import time

import click

from components.options import family_from_options, family_options, jobs_from_context
from utils.methods import METHODS, METHOD_ORACLE, METHOD_RECURRENCE, all_methods, count_by_method, sequence_by_method
from utils.pdf_generator import write_pdf_report
from utils.run_report import build_report


def _default_method(params):
    return METHOD_RECURRENCE if params is not None else METHOD_ORACLE


@click.command()
@family_options
@click.option("--n", "n", type=int, required=True, help="Permutation length")
@click.option("--method", type=click.Choice(METHODS), default=None,
              help="oracle, recurrence or series (default: recurrence for families, oracle for --pattern)")
@click.option("--all-methods", "all_methods_flag", is_flag=True, help="Run every applicable method and compare")
@click.option("--force", is_flag=True, help="Allow the oracle up to the hard ceiling")
@click.pass_context
def count(ctx, kind, k, a, l, patterns, n, method, all_methods_flag, force):
    """
    Count the avoiders of a family in S_n.

    Examples:

        gpav count --family C --k 3 --a 1 --l 2 --n 6 --method recurrence

        gpav count --family P --k 4 --a 1 --l 2 --n 7 --all-methods
    """
    fam, params = family_from_options(kind, k, a, l, patterns)
    jobs = jobs_from_context(ctx)

    if not all_methods_flag:
        value = count_by_method(fam, params, method or _default_method(params), n, jobs=jobs, force=force)
        click.echo(str(value))
        return

    result = all_methods(fam, params, n, jobs=jobs, force=force)
    for name, value in result["values"].items():
        click.echo(f"{name}: {value}")
    if result["consistent"]:
        click.echo("consistent")
        return
    click.echo(f"MISMATCH: {', '.join(result['disagreeing']) or 'methods disagree'} "
               f"(authoritative: {result['authoritative'] or 'none'})", err=True)
    ctx.exit(1)


@click.command()
@family_options
@click.option("--nmax", "n_max", type=int, required=True, help="Largest n")
@click.option("--method", type=click.Choice(METHODS), default=None,
              help="oracle, recurrence or series (default: recurrence for families, oracle for --pattern)")
@click.option("--format", "output_format", type=click.Choice(["table", "json", "csv"]), default="table")
@click.option("--pdf", "pdf_path", type=click.Path(dir_okay=False), default=None, help="Also write a PDF report")
@click.option("--force", is_flag=True, help="Allow the oracle up to the hard ceiling")
@click.pass_context
def sequence(ctx, kind, k, a, l, patterns, n_max, method, output_format, pdf_path, force):
    """
    Print counts for n = 0..nmax.

    Examples:

        gpav sequence --family C --k 3 --a 1 --l 1 --nmax 6 --method oracle

        gpav sequence --family P --k 3 --a 2 --l 2 --nmax 5 --format csv
    """
    started = time.perf_counter()
    fam, params = family_from_options(kind, k, a, l, patterns)
    method = method or _default_method(params)
    seq = sequence_by_method(fam, params, method, n_max, jobs=jobs_from_context(ctx), force=force)
    echo = params.as_dict() if params is not None else {"patterns": fam.pattern_strings()}
    echo = {**echo, "method": method}

    if output_format == "json":
        click.echo(json.dumps(seq.to_dict(echo), indent=2))
    elif output_format == "csv":
        click.echo(seq.to_csv(), nl=False)
    else:
        click.echo(seq.to_frame().to_string(index=False))

    if pdf_path:
        report = build_report("sequence", {**echo, "n_max": n_max}, [], {}, time.perf_counter() - started)
        write_pdf_report(pdf_path, report, [seq], report_type="sequence")
        click.echo(f"PDF written to {pdf_path}", err=True)
