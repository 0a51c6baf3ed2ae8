"""Command-line front end: ``python -m dfs <command>``.

Reports go to stdout; logs and error messages go to stderr. Exit codes:
0 success, 1 input error, 2 analysis refused, 3 numeric or verification
failure.
"""

import functools
import logging
import sys

import click
from pydantic import BaseModel

from config import settings
from dfs.errors import (
    AnalysisRefusedError,
    ClosureCapError,
    DegenerateDrawError,
    DenseLimitError,
    DfsError,
)
from dfs.report import analysis, text
from dfs.report.presets import PRESETS

EXIT_INPUT = 1
EXIT_REFUSED = 2
EXIT_NUMERIC = 3


def _emit(report: BaseModel, as_json: bool, render) -> None:
    if as_json:
        click.echo(report.model_dump_json(indent=2, exclude_none=True))
    else:
        click.echo(render(report))


def _guarded(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except AnalysisRefusedError as e:
            click.echo(f"refused: {e}", err=True)
            sys.exit(EXIT_REFUSED)
        except (DegenerateDrawError, ArithmeticError) as e:
            click.echo(f"numeric failure: {e}", err=True)
            sys.exit(EXIT_NUMERIC)
        except (ValueError, DenseLimitError, ClosureCapError, DfsError) as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(EXIT_INPUT)

    return wrapper


def _common(func):
    func = click.option("--timing", is_flag=True, default=False, help="Add per-stage wall time")(func)
    func = click.option("--json/--text", "as_json", default=True, help="Output format")(func)
    func = click.option(
        "--dense-limit", type=int, default=None, help=f"Largest K for dense matrices [{settings.DENSE_LIMIT}]"
    )(func)
    func = click.option("--seed", type=int, default=None, help=f"Random seed [{settings.DEFAULT_SEED}]")(func)
    func = click.option(
        "--trials", type=click.IntRange(min=1), default=None, help=f"Random trials [{settings.DEFAULT_TRIALS}]"
    )(func)
    return func


# usage errors exit 1; 2 belongs to refused analyses
class _DfsGroup(click.Group):
    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent, **extra)
        except click.UsageError as e:
            e.exit_code = EXIT_INPUT
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_INPUT
            raise


@click.group(cls=_DfsGroup, no_args_is_help=False)
def main():
    """Decoherence-free subspaces of Pauli-subgroup error models."""
    logging.basicConfig(
        level=settings.LOG_LEVEL,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s %(message)s",
    )


def _finish(report) -> None:
    if report.all_verified is False or report.dimension_agrees is False:
        sys.exit(EXIT_NUMERIC)


# ==========================================================================================
#                              ANALYSIS
# ==========================================================================================

@main.command()
@click.argument("generators", nargs=-1, required=True)
@_common
@click.option("--require-dfs", is_flag=True, default=False, help="Exit 2 when no 1-D DFS can exist")
@_guarded
def analyze(generators, trials, seed, dense_limit, as_json, timing, require_dfs):
    """Closure, characters, DFS bases and verification for GENERATORS."""
    report = analysis.cmd_analyze(
        generators,
        dense_limit=dense_limit,
        trials=trials,
        seed=seed,
        require_dfs=require_dfs,
        timing=timing,
    )
    _emit(report, as_json, text.render_analysis)
    _finish(report)


@main.command()
@click.argument("name")
@_common
@click.option("--require-dfs", is_flag=True, default=False, help="Exit 2 when no 1-D DFS can exist")
@_guarded
def preset(name, trials, seed, dense_limit, as_json, timing, require_dfs):
    """Analyze one of the named example subgroups."""
    report = analysis.cmd_preset(
        name,
        dense_limit=dense_limit,
        trials=trials,
        seed=seed,
        require_dfs=require_dfs,
        timing=timing,
    )
    _emit(report, as_json, text.render_analysis)
    _finish(report)


@main.command()
def presets():
    """List the named example subgroups."""
    for p in PRESETS.values():
        click.echo(f"{p.name:5s} {' '.join(p.generators):32s} {p.description}")


# ==========================================================================================
#                              CHANNELS, SWEEPS, DIMENSION
# ==========================================================================================

@main.command()
@click.argument("generators", nargs=-1)
@click.option("--state", "state", default=None, help='e.g. "0.7071|00> + 0.7071|11>"')
@click.option("--preset", "preset_name", default=None, help="Use a named subgroup and its demonstration state")
@click.option("--n-ops", type=click.IntRange(min=1), default=4, help="Kraus operators per channel")
@_common
@_guarded
def channel(generators, state, preset_name, n_ops, trials, seed, dense_limit, as_json, timing):
    """Purity and fidelity of a state under random channels of the subgroup."""
    result = analysis.cmd_channel(
        generators,
        state,
        trials=trials,
        seed=seed,
        n_ops=n_ops,
        dense_limit=dense_limit,
        timing=timing,
        preset=preset_name,
    )
    _emit(result, as_json, text.render_scan)


@main.command()
@click.option("--qubits", "-k", type=click.IntRange(min=1), multiple=True, default=(2, 3, 4, 5))
@click.option("--count", type=click.IntRange(min=1), default=50, help="Subgroups per qubit count")
@click.option("--seed", type=int, default=None)
@click.option("--dense-limit", type=int, default=None)
@click.option("--json/--text", "as_json", default=True)
@click.option("--timing", is_flag=True, default=False)
@_guarded
def sweep(qubits, count, seed, dense_limit, as_json, timing):
    """Check the closed-form DFS dimension on random Abelian subgroups."""
    result = analysis.cmd_sweep(qubits, count, seed=seed, dense_limit=dense_limit, timing=timing)
    _emit(result, as_json, text.render_sweep)
    if not result.passed:
        sys.exit(EXIT_NUMERIC)


@main.command()
@click.argument("n_qubits", type=int)
@click.argument("order", type=int)
@click.option(
    "--phase-class",
    type=click.Choice(["no_phase_factors", "minus_identity_only", "contains_minus_identity"]),
    default="no_phase_factors",
)
@click.option("--json/--text", "as_json", default=True)
@_guarded
def dimension(n_qubits, order, phase_class, as_json):
    """Closed-form DFS dimension for a subgroup of ORDER on N_QUBITS qubits."""
    _emit(analysis.cmd_dimension(n_qubits, order, phase_class), as_json, text.render_dimension)


if __name__ == "__main__":
    main()
