"""
Shared CLI Options
Family selection flags used by every counting command
"""

import click

from utils.methods import resolve_family


def family_options(func):
    """--family/--k/--a/--l for C and P families, or repeated --pattern for an explicit list"""
    options = [
        click.option("--family", "kind", type=click.Choice(["C", "P"], case_sensitive=False),
                     help="Pattern family kind"),
        click.option("--k", "k", type=int, help="Pattern length"),
        click.option("--a", "a", type=int, help="Anchor: smallest value of the leading block"),
        click.option("--l", "l", type=int, help="Leading block length"),
        click.option("--pattern", "patterns", multiple=True,
                     help="Dashed pattern such as 13-2 (repeatable; oracle only)"),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def family_from_options(kind, k, a, l, patterns):
    return resolve_family(kind, k, a, l, patterns)


def jobs_from_context(ctx) -> int:
    return (ctx.obj or {}).get("jobs", 1)
