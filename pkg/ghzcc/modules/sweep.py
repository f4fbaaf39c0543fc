import click

from ghzcc.config import get_config
from ghzcc.game.analysis import advantage_threshold, noise_sweep, separability_thresholds
from ghzcc.game.quantum import run_protocol_exact
from ghzcc.utils import (
    CheckFailed,
    InvalidInput,
    Report,
    format_fraction,
    output_options,
    validating,
    write_report,
)

COLUMNS = ["n", "p", "quantum_success", "classical_upper", "advantage", "entanglement_class"]


@click.command("sweep")
@click.option("--n", "n", type=int, default=2, help="Number of Alices.")
@click.option("--p-grid", "p_grid", default=None, help="start:stop:steps, endpoints included.")
@click.option("--no-search", is_flag=True, help="Skip the searched classical optimum.")
@output_options
def sweep(n, p_grid, no_search, output_format, output_path, threads):
    """Quantum success, classical bound and entanglement class along a noise grid."""
    config = get_config()
    if not p_grid:
        raise InvalidInput("An empty grid has no rows; pass --p-grid start:stop:steps")
    with validating():
        run = config.build_run_config(
            "sweep",
            n=n,
            grid=p_grid,
            output_format=output_format,
            output_path=output_path,
            threads=threads,
        )

    grid = run.grid.values()
    rows = noise_sweep(run.n, grid, with_search=not no_search)
    full_sep, genuine = separability_thresholds(run.n)
    threshold = advantage_threshold(run.n)

    mismatches = []
    for row in rows:
        exact = run_protocol_exact(row.n, row.p)
        if abs(exact - row.quantum_success) > config.tolerances.normalization:
            mismatches.append(f"p={row.p}: protocol {exact!r}, formula {row.quantum_success!r}")

    payload = {
        "n": run.n,
        "grid": {"start": run.grid.start, "stop": run.grid.stop, "steps": run.grid.steps},
        "advantage_threshold": threshold,
        "separability": {"fully_separable_from": full_sep, "genuine_below": genuine},
        "rows": rows,
    }
    lines = [
        f"Noise sweep, n={run.n}: advantage for p < {format_fraction(threshold)}, "
        f"genuine below {format_fraction(genuine)}, separable from {format_fraction(full_sep)}",
        f"  {'p':>8}  {'quantum':>10}  {'classical':>9}  {'advantage':>9}  class",
    ]
    for row in rows:
        lines.append(
            f"  {row.p:>8.4f}  {row.quantum_success:>10.6f}  "
            f"{format_fraction(row.classical_upper):>9}  {str(row.advantage).lower():>9}  "
            f"{row.entanglement_class}"
        )
    if rows and rows[0].classical_optimum is not None:
        lines.append(f"  searched classical optimum: {format_fraction(rows[0].classical_optimum)}")

    csv_rows = [{column: getattr(row, column) for column in COLUMNS} for row in rows]
    report = Report("sweep", payload, COLUMNS, csv_rows, lines)
    write_report(report, run.output_format, run.output_path)

    if mismatches:
        raise CheckFailed("Protocol success departs from (2 - p) / 2", mismatches)


def register_commands(group: click.Group):
    """Register the sweep subcommand"""
    group.add_command(sweep)
