from typing import Union

import click

from ghzcc.config import get_config
from ghzcc.game.analysis import CLASSICAL_UPPER, bounds_record
from ghzcc.game.search import classical_optimum, exhaustive_search_cc2
from ghzcc.game.strategy import ClassicalStrategyCC2, GeneralClassicalStrategy
from ghzcc.utils import (
    CheckFailed,
    Report,
    format_fraction,
    fraction_text,
    output_options,
    validating,
    write_report,
)

COLUMNS = ["n", "optimum", "optimum_fraction", "strategies_examined", "optimal_count"]
WITNESSES_PER_LINE = 6


def describe_strategy(strategy: Union[ClassicalStrategyCC2, GeneralClassicalStrategy]) -> str:
    """S(p,q,r,s) for CC_2, encodings plus decoding bit strings otherwise"""
    if isinstance(strategy, ClassicalStrategyCC2):
        return repr(strategy)
    encodings = ",".join(str(m) for m in strategy.encoding_indices)
    d0, d1 = ("".join(str(b) for b in table) for table in strategy.decodings)
    return f"E({encodings}) D0={d0} D1={d1}"


@click.command("classical")
@click.option("--n", "n", type=int, default=2, help="Number of Alices (2 to 6).")
@click.option("--even-only", is_flag=True, help="CC_2: restrict encodings to the even class.")
@click.option("--no-symmetry", is_flag=True, help="Score every ordered encoding tuple.")
@output_options
def classical(n, even_only, no_symmetry, output_format, output_path, threads):
    """Best success of 1-bit classical strategies."""
    config = get_config()
    with validating():
        run = config.build_run_config(
            "classical",
            n=n,
            output_format=output_format,
            output_path=output_path,
            threads=threads,
            n_range=(2, config.limits.search_max_n),
        )

    if run.n == 2:
        result = exhaustive_search_cc2(restrict_even=even_only)
        method = "exhaustive, even encodings" if even_only else "exhaustive, all 16^4 strategies"
    else:
        result = classical_optimum(run.n, use_symmetry=not no_symmetry, threads=run.threads)
        method = "even encodings with majority decodings"

    bounds = bounds_record(run.n)
    lower = bounds.lower
    witnesses = [describe_strategy(s) for s in result.optimal_strategies]
    payload = {
        "n": run.n,
        "method": method,
        "optimum": result.optimum,
        "perfect_found": result.optimum == 1,
        "strategies_examined": result.strategies_examined,
        "optimal_count": result.optimal_count,
        "witnesses": witnesses,
        "witnesses_truncated": result.witnesses_truncated,
        "bounds": bounds,
    }
    row = {
        "n": run.n,
        "optimum": result.optimum,
        "optimum_fraction": format_fraction(result.optimum),
        "strategies_examined": result.strategies_examined,
        "optimal_count": result.optimal_count,
    }

    lines = [
        f"Classical optimum, n={run.n} ({method})",
        f"  optimum             : {fraction_text(result.optimum)}",
        f"  perfect strategy    : {'found' if result.optimum == 1 else 'none'}",
        f"  strategies examined : {result.strategies_examined}",
        f"  optimal strategies  : {result.optimal_count}",
        f"  bounds              : {format_fraction(lower)} <= optimum <= "
        f"{format_fraction(CLASSICAL_UPPER)}",
        f"  witnesses ({len(witnesses)}):",
    ]
    for start in range(0, len(witnesses), WITNESSES_PER_LINE):
        lines.append("    " + "  ".join(witnesses[start : start + WITNESSES_PER_LINE]))
    if result.witnesses_truncated:
        lines.append(f"    ... capped at {len(witnesses)}")

    report = Report("classical", payload, COLUMNS, [row], lines)
    write_report(report, run.output_format, run.output_path)

    if not lower <= result.optimum <= CLASSICAL_UPPER:
        raise CheckFailed(
            "Searched optimum falls outside the proven bounds",
            [f"n={run.n}: {format_fraction(result.optimum)}"],
        )


def register_commands(group: click.Group):
    """Register the classical subcommand"""
    group.add_command(classical)
