"""Console script for dalpha."""
import sys
from contextlib import contextmanager
from typing import Optional

import click

from . import __version__
from .consts import _CANONICAL_MAX
from .consts import _THREADS
from .enumeration import KINDS
from .enumeration import FamilySpec
from .enumeration import canonical_form
from .enumeration import enumerate_family
from .errors import DalphaError
from .graph import distance_profile
from .harness import reproduce_threshold_table
from .harness import run_alpha_sweep
from .harness import run_edge_monotonicity
from .harness import run_min_search
from .harness import run_open_problem
from .harness import run_wiener_check
from .harness import write_csv
from .harness import write_json
from .log import configure_logger
from .log import logging
from .render import render
from .spectral import build_d_alpha
from .spectral import row_sum_bounds
from .spectral import spectral_radius
from .spectral import wiener_lower_bound
from .utils import parse_floats
from .utils import resolve_graph
from .utils import to_graph6
from .utils import write_graph6


class Config:
    """
    An information object to pass data between CLI functions.
    """

    def __init__(self):  # Note: This object must have an empty constructor.
        self.logging: logging.Logger
        self.verbose: int
        self.debug_file: Optional[str]
        self.threads: int


# pass_config is a decorator for functions that pass 'Config' objects.
#: pylint: disable=invalid-name
pass_config = click.make_pass_decorator(Config, ensure=True)


@contextmanager
def _errors():
    """Bad input exits 2 through click; failed computations exit 1."""
    try:
        yield
    except ValueError as err:
        raise click.UsageError(str(err))
    except DalphaError as err:
        raise click.ClickException(str(err))


def _finish(config: Config, report, json_path=None, csv_path=None) -> None:
    if json_path:
        write_json(report, json_path)
        config.logging.info(f"wrote {json_path}")
    if csv_path:
        rows = write_csv(report, csv_path)
        config.logging.info(f"wrote {rows} rows to {csv_path}")
    if not getattr(report, "passed", True):
        sys.exit(1)


kind_option = click.option(
    "--kind", type=click.Choice(KINDS), required=True, help="Graph family."
)
n_option = click.option("--n", "n", type=int, required=True, help="Order.")
r_option = click.option(
    "--r", "r", type=int, default=None, help="Chromatic number (kind=chromatic)."
)
json_option = click.option(
    "--out", "--json", "json_path", default=None, help="JSON report file."
)
csv_option = click.option("--csv", "csv_path", default=None, help="CSV rows.")


@click.group()
@click.version_option(version=__version__, prog_name="dalpha")
@click.option("--verbose", "-v", count=True, help="Enable verbose output.")
@click.option("--debug_file", "-d", help="Python Debug File", default=None)
@click.option(
    "--threads", "-j", type=int, default=_THREADS, help="Worker processes."
)
@pass_config
def main(config: Config, **kwargs):
    """
    Generalized distance matrix spectral radius toolkit.
    """
    for key, value in kwargs.items():
        setattr(config, key, value)
    config.logging = configure_logger(
        stream_level=config.verbose, debug_file=config.debug_file
    )
    config.logging.debug(f"workers: {config.threads}")


@main.command()
@click.argument("graph")
@click.option("--alpha", type=float, required=True)
@click.option("--matrix", is_flag=True, help="Also print D_alpha as CSV.")
@pass_config
def rho(config: Config, graph: str, alpha: float, matrix: bool):
    """
    Spectral radius of D_alpha(GRAPH).

    GRAPH is a graph6 string, an edge-list or graph6 file, or a family such
    as star:6, star_plus:7 or turan:7:3.
    """
    with _errors():
        g = resolve_graph(graph)
        m = build_d_alpha(distance_profile(g), alpha)
        result = spectral_radius(m)
    lo, hi = row_sum_bounds(m)
    click.echo(
        render(
            "rho.txt",
            graph6=to_graph6(g),
            n=g.n,
            canonical=canonical_form(g) if g.n <= _CANONICAL_MAX else None,
            alpha=alpha,
            result=result,
            lo=lo,
            hi=hi,
            wiener_bound=wiener_lower_bound(distance_profile(g)),
        )
    )
    if matrix:
        click.echo(m.to_csv(), nl=False)
    if not result.converged:
        sys.exit(1)


@main.command(name="min")
@kind_option
@n_option
@r_option
@click.option("--alpha", type=float, required=True)
@click.option("--allow-large", is_flag=True, help="Connected graphs up to n=8.")
@json_option
@csv_option
@pass_config
def min_(config: Config, kind, n, r, alpha, allow_large, json_path, csv_path):
    """
    Find every D_alpha minimizer of a family and compare with the prediction.
    """
    with _errors():
        report = run_min_search(
            FamilySpec(kind, n, r),
            alpha,
            allow_large=allow_large,
            workers=config.threads,
        )
    click.echo(render("min.txt", report=report))
    _finish(config, report, json_path, csv_path)


@main.command()
@click.argument("graph")
@click.option(
    "--grid", default="0,0.25,0.5,0.75,1", help="Ascending alphas, comma separated."
)
@json_option
@csv_option
@pass_config
def sweep(config: Config, graph: str, grid: str, json_path, csv_path):
    """
    Check that rho(D_alpha(GRAPH)) increases with alpha.
    """
    with _errors():
        report = run_alpha_sweep(resolve_graph(graph), parse_floats(grid))
    click.echo(render("sweep.txt", report=report))
    _finish(config, report, json_path, csv_path)


@main.command(name="table1")
@json_option
@pass_config
def thresholds(config: Config, json_path):
    """
    Recompute the S_n^+ threshold table for n = 6, 7.
    """
    with _errors():
        report = reproduce_threshold_table()
    click.echo(render("thresholds.txt", report=report))
    _finish(config, report, json_path)


main.add_command(thresholds, name="thresholds")


@main.command(name="wiener-check")
@click.option("--kind", type=click.Choice(["trees", "unicyclic"]), required=True)
@n_option
@json_option
@pass_config
def wiener_check(config: Config, kind: str, n: int, json_path):
    """
    Check the Wiener index minimum and the bound for the runner-up graphs.
    """
    with _errors():
        report = run_wiener_check(FamilySpec(kind, n))
    click.echo(render("wiener.txt", report=report))
    _finish(config, report, json_path)


@main.command(name="edge-mono")
@click.option("--trials", type=int, default=200)
@click.option("--nmax", "n_max", type=int, default=9)
@click.option("--alphas", default="0,0.25,0.5,0.75,0.9")
@click.option("--seed", type=int, default=0)
@json_option
@csv_option
@pass_config
def edge_mono(config: Config, trials, n_max, alphas, seed, json_path, csv_path):
    """
    Random checks that adding an edge strictly lowers rho for alpha < 1.
    """
    with _errors():
        report = run_edge_monotonicity(trials, n_max, parse_floats(alphas), seed)
    click.echo(render("edge_mono.txt", report=report))
    _finish(config, report, json_path, csv_path)


@main.command(name="open-problem")
@n_option
@click.option("--r", "r", type=int, required=True)
@click.option("--grid", default="0.5,0.6,0.7,0.8,0.9,0.95")
@json_option
@csv_option
@pass_config
def open_problem(config: Config, n: int, r: int, grid: str, json_path, csv_path):
    """
    Scan chromatic-number classes for minimizers past alpha = 1 - 1/r.
    """
    with _errors():
        report = run_open_problem(n, r, parse_floats(grid), workers=config.threads)
    click.echo(render("open_problem.txt", report=report))
    _finish(config, report, json_path, csv_path)


@main.command(name="enumerate")
@kind_option
@n_option
@r_option
@click.option("--allow-large", is_flag=True, help="Connected graphs up to n=8.")
@click.option("--emit", type=click.Choice(["graph6"]), default="graph6")
@click.option("--out", default=None, help="Output file; stdout when omitted.")
@pass_config
def enumerate_(config: Config, kind, n, r, allow_large, emit, out):
    """
    Stream a family as graph6, one graph per line.
    """
    with _errors():
        graphs = enumerate_family(FamilySpec(kind, n, r), allow_large=allow_large)
        if out:
            count = write_graph6(graphs, out)
        else:
            count = 0
            for g in graphs:
                click.echo(to_graph6(g))
                count += 1
    config.logging.info(f"{count} graphs")


if __name__ == "__main__":
    sys.exit(main())  # pragma: no cover
