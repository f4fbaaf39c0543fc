import click

from ghzcc.config import get_config
from ghzcc.game.analysis import table1_reproduce
from ghzcc.game.boolean import EVEN_NAMES
from ghzcc.utils import (
    CheckFailed,
    Report,
    format_fraction,
    output_options,
    validating,
    write_report,
)

COLUMNS = ["encoding_1", "encoding_2", "decoding_0", "decoding_1", "success", "expected", "match"]
CELL_WIDTH = 13


@click.command("table1")
@output_options
def table1(output_format, output_path, threads):
    """Optimal CC_2 success for every pair of even encodings."""
    with validating():
        run = get_config().build_run_config(
            "table1", output_format=output_format, output_path=output_path, threads=threads
        )

    result = table1_reproduce()
    cells = [cell for p in result.order for cell in result.row(p)]

    payload = {
        "order": list(result.order),
        "cells": [
            {
                "encoding_1": cell.encoding_1,
                "encoding_2": cell.encoding_2,
                "decodings": [cell.decoding_0, cell.decoding_1],
                "success": cell.success,
                "expected": cell.expected,
                "highlight": cell.highlight,
                "match": cell.matches,
            }
            for cell in cells
        ],
        "all_match": result.matches,
    }
    rows = [
        {
            "encoding_1": cell.encoding_1,
            "encoding_2": cell.encoding_2,
            "decoding_0": cell.decoding_0,
            "decoding_1": cell.decoding_1,
            "success": format_fraction(cell.success),
            "expected": format_fraction(cell.expected),
            "match": cell.matches,
        }
        for cell in cells
    ]

    # Each cell: success, '*' on the 3/4 optimum, then the witness decodings D0/D1
    header = "E1 \\ E2".ljust(8) + "".join(
        f"{q} ({EVEN_NAMES[q]})".ljust(CELL_WIDTH) for q in result.order
    )
    lines = ["CC_2 optimum per even encoding pair (success, decodings D0/D1)", header]
    for p in result.order:
        text = f"{p:<8}"
        for cell in result.row(p):
            mark = "*" if cell.highlight else " "
            entry = f"{format_fraction(cell.success)}{mark} {cell.decoding_0}/{cell.decoding_1}"
            text += entry.ljust(CELL_WIDTH)
        lines.append(text.rstrip())
    lines.append("all cells match" if result.matches else f"{len(result.mismatches)} mismatches")

    report = Report("table1", payload, COLUMNS, rows, lines)
    write_report(report, run.output_format, run.output_path)

    if not result.matches:
        raise CheckFailed(
            "Table cells deviate from the expected optimum",
            [
                f"E{cell.encoding_1} x E{cell.encoding_2}: got {format_fraction(cell.success)}, "
                f"expected {format_fraction(cell.expected)}"
                for cell in result.mismatches
            ],
        )


def register_commands(group: click.Group):
    """Register the table1 subcommand"""
    group.add_command(table1)
