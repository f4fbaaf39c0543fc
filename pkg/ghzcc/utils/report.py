"""Report rendering: csv, json and pretty text, to a file or standard output."""

import csv
import dataclasses
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

import click
import numpy as np

from ghzcc import LOGGER
from ghzcc.config import get_config
from ghzcc.utils.rational import format_fraction, fraction_record


def to_jsonable(value: Any) -> Any:
    """Convert report values into plain JSON types"""
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, Fraction):
        return fraction_record(value)
    if isinstance(value, float):
        return value
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, np.generic):
        return to_jsonable(value.item())
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return str(value)


def csv_cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, Fraction):
        return repr(float(value))
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass
class Report:
    """One command's output, renderable in every supported format.

    Args:
        kind (`str`): subcommand name, stored in the JSON envelope
        payload (`dict`): full machine-readable content
        columns (`list`): CSV header
        rows (`list`): CSV rows keyed by column
        lines (`list`): pretty text
    """

    kind: str
    payload: Dict[str, Any]
    columns: List[str] = field(default_factory=list)
    rows: List[Dict[str, Any]] = field(default_factory=list)
    lines: List[str] = field(default_factory=list)

    def to_json(self) -> str:
        document = {
            "schema_version": get_config().output.schema_version,
            "report": self.kind,
        }
        document.update(to_jsonable(self.payload))
        return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([csv_cell(row.get(column)) for column in self.columns])
        return buffer.getvalue()

    def to_pretty(self) -> str:
        return "\n".join(self.lines) + "\n"

    def render(self, output_format: str) -> str:
        renderers = {"csv": self.to_csv, "json": self.to_json, "pretty": self.to_pretty}
        return renderers[output_format]()


def write_report(report: Report, output_format: str, output_path: Optional[str] = None):
    text = report.render(output_format)
    if output_path:
        Path(output_path).write_text(text, encoding="utf-8")
        LOGGER.info(f"Wrote {report.kind} report to {output_path}")
    else:
        click.echo(text, nl=False)


def fraction_text(value: Fraction) -> str:
    """'3/4 (0.75)' for pretty output"""
    return f"{format_fraction(value)} ({float(value):.6g})"
