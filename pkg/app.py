"""
Generalized Pattern Avoidance - Command Line Entry Point
Counting, listing and identity verification for dashed-pattern families
"""

import click

from components.count_views import count, sequence
from components.family_views import avoiders, patterns
from components.verify_view import verify
from config.settings import DEFAULT_JOBS, configure_logging
from utils.errors import PatternAvoidanceError

EXIT_INVALID_INPUT = 2


# ============================================
# COMMAND GROUP
# ============================================
class GpavGroup(click.Group):
    """Maps library input errors to exit code 2"""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except PatternAvoidanceError as exc:
            click.echo(f"Error: {exc}", err=True)
            ctx.exit(EXIT_INVALID_INPUT)


@click.group(name="gpav", cls=GpavGroup)
@click.option("--jobs", type=click.IntRange(min=1), default=DEFAULT_JOBS, show_default=True,
              help="Worker processes for brute-force enumeration")
@click.version_option(version="1.0.0", prog_name="gpav")
@click.pass_context
def cli(ctx, jobs):
    """
    Count permutations avoiding the C and P families of dashed patterns.

    Set GPAV_LOG to error, warn, info or debug for log output on stderr.
    """
    configure_logging()
    ctx.ensure_object(dict)
    ctx.obj["jobs"] = jobs


for command in (patterns, count, sequence, avoiders, verify):
    cli.add_command(command)


# ============================================
# RUN APPLICATION
# ============================================
def main():
    """Main application entry point"""
    cli(prog_name="gpav")


if __name__ == "__main__":
    main()
