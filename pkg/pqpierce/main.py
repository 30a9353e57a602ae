import logging
from fractions import Fraction
from pathlib import Path
from typing import Optional

import click
from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler

from pqpierce import counterexample, report
from pqpierce.errors import ErrorCode, PqPierceError
from pqpierce.geometry.kernel import Point, format_rational, to_rational
from pqpierce.geometry.radon import radon_partition
from pqpierce.io.family_file import RAT, parse_points, read_family, write_family
from pqpierce.io.render import render_family
from pqpierce.piercing import piercing_number
from pqpierce.pq_property import has_pq_property
from pqpierce.settings import Settings, load_settings
from pqpierce.theorem2 import run_theorem2

logger = logging.getLogger(__name__)


def setup_logging(level: str) -> None:
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        if not isinstance(value, str) or not RAT.match(value):
            self.fail(f"{value!r} is not an integer or p/q", param, ctx)
        try:
            return to_rational(value)
        except PqPierceError as e:
            self.fail(e.message, param, ctx)


RATIONAL = RationalType()


class PqPierceGroup(click.Group):
    """Turns domain errors into ``error: CODE: message`` and the matching exit code."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except PqPierceError as e:
            logger.debug("details: %s", e.to_dict())
            click.echo(f"error: {e}", err=True)
            ctx.exit(e.exit_code)


def _sequence(table: Optional[Path]) -> counterexample.SequenceConfig:
    return counterexample.load_sequence_table(table) if table else counterexample.PAPER_DEFAULT


table_option = click.option(
    "--table",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    help="YAML table of t/s sequences (default: t_n = 1 - 1/n, s_n = -n).",
)


@click.group(cls=PqPierceGroup)
@click.option("--config", "config_path", type=click.Path(dir_okay=False, path_type=Path), help="YAML settings file.")
@click.option("--log-level", default=None, help="Override log.level from the settings.")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[Path], log_level: Optional[str]) -> None:
    """Exact checks on planar convex families: (p,q)-property, piercing, clipping."""
    load_dotenv()
    settings = load_settings(config_path)
    setup_logging(log_level or settings.log.level)
    ctx.obj = settings


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Number of members F1..FN.")
@table_option
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True)
@click.option("--compacta", type=int, default=0, show_default=True, help="Append K1..Kk.")
def gen(n: int, table: Optional[Path], out: Path, compacta: int) -> None:
    """Write the first N members of the counterexample family."""
    family = counterexample.generate(n, _sequence(table))
    if compacta:
        family = counterexample.extend_with_compacta(family, compacta)
    write_family(out, family)
    click.echo(report.render([("family", family.name), ("regions", len(family)), ("out", out)]), nl=False)


@cli.command("check-pq")
@click.option("--p", "p", type=int, required=True)
@click.option("--q", "q", type=int, required=True)
@click.argument("family_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.pass_obj
def check_pq(settings: Settings, p: int, q: int, family_file: Path) -> None:
    """Exhaustive (p,q)-property check with a certificate on failure."""
    result = has_pq_property(read_family(family_file), p, q, progress=settings.progress)
    click.echo(report.format_pq(result), nl=False)
    if not result.holds:
        raise click.exceptions.Exit(1)


@cli.command()
@click.argument("family_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--max-size", type=int, default=None, help="Give up beyond this transversal size.")
@click.pass_obj
def pierce(settings: Settings, family_file: Path, max_size: Optional[int]) -> None:
    """Minimum transversal of a family."""
    budget = max_size if max_size is not None else settings.piercing.max_size
    result = piercing_number(read_family(family_file), max_size=budget)
    click.echo(report.format_piercing(result), nl=False)


@cli.command()
@click.option("--x", "x", type=RATIONAL, required=True)
@click.option("--y", "y", type=RATIONAL, required=True)
@click.option("--window", type=int, default=None, help="Indices certified past the escape index.")
@table_option
@click.pass_obj
def escape(settings: Settings, x, y, window: Optional[int], table: Optional[Path]) -> None:
    """Escape index of a point: it lies in no F_n from there on."""
    window = settings.escape.window if window is None else window
    trace = counterexample.escape_index(Point(x, y), _sequence(table), window)
    click.echo(report.format_escape(trace), nl=False)


@cli.command("certify-unpierceable")
@click.option("--points", "points_file", type=click.Path(exists=True, dir_okay=False, path_type=Path), required=True)
@click.option("--window", type=int, default=None)
@table_option
@click.pass_obj
def certify_unpierceable(settings: Settings, points_file: Path, window: Optional[int], table: Optional[Path]) -> None:
    """A member of the family that misses every given point."""
    points = parse_points(points_file.read_text(encoding="utf-8"))
    window = settings.escape.window if window is None else window
    cert = counterexample.unpierceability_certificate(points, _sequence(table), window)
    click.echo(report.format_certificate(cert), nl=False)


@cli.command()
@click.argument("family_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--a", "a_label", required=True, help="Label of the first compactum.")
@click.option("--b", "b_label", required=True, help="Label of the second compactum.")
@click.option("--bound", type=int, default=None, help="Piercing bound to check (default from settings).")
@click.pass_obj
def theorem2(settings: Settings, family_file: Path, a_label: str, b_label: str, bound: Optional[int]) -> None:
    """Clip the family to conv(A u B) and bound its piercing number."""
    bound = settings.piercing.bound if bound is None else bound
    result = run_theorem2(read_family(family_file), a_label, b_label, bound)
    click.echo(report.format_theorem2(result), nl=False)
    if not result.bound_satisfied:
        raise click.exceptions.Exit(1)


@cli.command()
@click.argument("coords", nargs=8, type=RATIONAL)
def radon(coords) -> None:
    """Radon partition of four points given as X1 Y1 ... X4 Y4."""
    points = [Point(coords[i], coords[i + 1]) for i in range(0, 8, 2)]
    click.echo(report.format_radon(radon_partition(*points)), nl=False)


@cli.command()
@click.argument("family_file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), required=True)
@click.option("--clip-box", nargs=4, type=RATIONAL, default=None, help="X0 Y0 X1 Y1")
@click.pass_obj
def render(settings: Settings, family_file: Path, out: Path, clip_box) -> None:
    """Draw every region, clipped to a box, as SVG."""
    clip = tuple(clip_box) if clip_box else settings.render.clip_box
    x0, y0, x1, y1 = clip
    if x0 >= x1 or y0 >= y1:
        raise PqPierceError(ErrorCode.BAD_PARAMS, f"clip box needs X0 < X1 and Y0 < Y1, got {' '.join(map(format_rational, clip))}")
    family = read_family(family_file)
    render_family(family, clip, settings.render.width_px).saveas(str(out))
    click.echo(report.render([("regions", len(family)), ("out", out)]), nl=False)


@cli.command()
@click.argument("indices", nargs=4, type=int)
@table_option
def quadruple(indices, table: Optional[Path]) -> None:
    """Intersecting triple among four members of the counterexample."""
    click.echo(report.format_quadruple(counterexample.quadruple_witness(indices, _sequence(table))), nl=False)


if __name__ == "__main__":
    cli()
