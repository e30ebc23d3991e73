"""
Family Commands
`patterns` lists a family; `avoiders` lists the permutations that avoid it
"""

import json

import click

from components.options import family_from_options, family_options
from config.settings import AVOIDERS_GUARD
from utils.errors import CeilingExceededError, PrefixError
from utils.oracle import check_ceiling, iter_avoiders


@click.command()
@family_options
@click.option("--json", "output_json", is_flag=True, help="Output as JSON")
def patterns(kind, k, a, l, patterns, output_json):
    """
    List the members of a family in dash notation.

    Examples:

        gpav patterns --family C --k 4 --a 1 --l 2

        gpav patterns --family P --k 4 --a 2 --l 2
    """
    fam, _ = family_from_options(kind, k, a, l, patterns)
    if output_json:
        click.echo(json.dumps(fam.to_dict(), indent=2))
        return
    for text in fam.pattern_strings():
        click.echo(text)
    click.echo(f"{len(fam)} patterns")


@click.command()
@family_options
@click.option("--n", "n", type=int, required=True, help="Permutation length")
@click.option("--prefix", default="", help="Required leading letters, comma-separated")
@click.option("--force", is_flag=True, help=f"Allow n above {AVOIDERS_GUARD}")
def avoiders(kind, k, a, l, patterns, n, prefix, force):
    """
    List every avoider in S_n in lexicographic order.

    Examples:

        gpav avoiders --pattern 13-2 --n 3
    """
    fam, _ = family_from_options(kind, k, a, l, patterns)
    if n > AVOIDERS_GUARD and not force:
        raise CeilingExceededError(f"avoiders lists at most n={AVOIDERS_GUARD} (pass --force for more)")
    check_ceiling(n, force=force)
    try:
        head = tuple(int(v) for v in prefix.split(",") if v.strip())
    except ValueError:
        raise PrefixError(f"prefix must be comma-separated integers (got {prefix!r})") from None
    shown = 0
    for pi in iter_avoiders(fam, n, head):
        click.echo(str(pi))
        shown += 1
    click.echo(f"{shown} shown")
