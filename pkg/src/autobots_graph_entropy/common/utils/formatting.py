# ABOUTME: Deterministic CSV output: fixed significant digits, '.' decimals, '\n' line endings.

import csv
from collections.abc import Iterable, Sequence
from typing import TextIO

from autobots_graph_entropy.configs.settings import get_app_settings

Cell = float | int | str | None


def format_cell(value: Cell, digits: int | None = None) -> str:
    """Render one CSV cell; floats use the configured significant digits."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if digits is None:
            digits = get_app_settings().csv_significant_digits
        return f"{value:.{digits}g}"
    return str(value)


def write_csv(
    stream: TextIO,
    header: Sequence[str],
    rows: Iterable[Sequence[Cell]],
    footer: Iterable[Sequence[Cell]] = (),
) -> int:
    """Write header, data rows and '#'-prefixed footer rows; returns the data row count."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    count = 0
    for row in rows:
        writer.writerow([format_cell(cell) for cell in row])
        count += 1
    for row in footer:
        cells = [format_cell(cell) for cell in row]
        cells[0] = f"# {cells[0]}"
        writer.writerow(cells)
    return count
