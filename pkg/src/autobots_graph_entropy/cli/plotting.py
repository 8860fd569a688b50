# ABOUTME: SVG figures for CLI tables (matplotlib, Agg backend).
# ABOUTME: Presentational only; the CSV output is the reproducible artifact.

import math
from collections.abc import Callable
from pathlib import Path

import matplotlib as mpl

mpl.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.axes import Axes  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

from autobots_graph_entropy.cli.commands import Table  # noqa: E402
from autobots_graph_entropy.cli.config import Command  # noqa: E402
from autobots_graph_entropy.common.utils.formatting import Cell  # noqa: E402


def _as_float(cell: Cell) -> float:
    if isinstance(cell, int | float) and not isinstance(cell, bool):
        return float(cell)
    return math.nan


def numeric_column(table: Table, name: str) -> list[float]:
    """Column values as floats; non-numeric cells (such as refusals) become nan."""
    index = table.header.index(name)
    return [_as_float(row[index]) for row in table.rows]


def _plot_scan(table: Table) -> Figure:
    figure, axes = plt.subplots(figsize=(6, 4))
    l_values = numeric_column(table, "l")
    axes.plot(l_values, numeric_column(table, "S_E_tilde"), color="tab:blue")
    for label, value in table.footer:
        if label == "asymptote":
            axes.axhline(_as_float(value), color="tab:red", linestyle="--")
    if l_values and l_values[-1] / l_values[0] > 100:
        axes.set_xscale("log")
    axes.set_xlabel("l")
    axes.set_ylabel("S_E tilde")
    return figure


def _plot_corrections(table: Table) -> Figure:
    figure, (left, right) = plt.subplots(1, 2, figsize=(10, 4))
    l_values = numeric_column(table, "l")
    orders = numeric_column(table, "n")
    for name, axes in (("Pi_c", left), ("Pi_s", right)):
        values = numeric_column(table, name)
        for order in sorted(set(orders)):
            xs = [x for x, n in zip(l_values, orders, strict=True) if n == order]
            ys = [y for y, n in zip(values, orders, strict=True) if n == order]
            axes.plot(xs, ys, label=f"n={int(order)}")
        axes.set_xlabel("l")
        axes.set_ylabel(name)
        axes.legend()
    return figure


def _plot_heat(table: Table) -> Figure:
    figure, axes = plt.subplots(figsize=(6, 4))
    times = numeric_column(table, "t")
    axes.loglog(times, numeric_column(table, "K_asymptotic"), label="asymptotic")
    axes.loglog(times, numeric_column(table, "K_direct"), "o", markersize=3, label="direct")
    axes.set_xlabel("t")
    axes.set_ylabel("K(t)")
    axes.legend()
    return figure


def _plot_columns(table: Table) -> Figure:
    figure, axes = plt.subplots(figsize=(6, 4))
    x_name = table.header[1] if table.command is Command.ENTROPY else table.header[0]
    xs = numeric_column(table, x_name)
    _plot_remaining(axes, table, xs, skip={x_name})
    axes.set_xlabel(x_name)
    axes.legend()
    return figure


def _plot_remaining(axes: Axes, table: Table, xs: list[float], skip: set[str]) -> None:
    for name in table.header:
        if name in skip:
            continue
        ys = numeric_column(table, name)
        if all(math.isnan(y) for y in ys):
            continue
        axes.plot(xs, ys, marker="o", markersize=3, label=name)


_PLOTTERS: dict[Command, Callable[[Table], Figure]] = {
    Command.SCAN: _plot_scan,
    Command.CORRECTIONS: _plot_corrections,
    Command.HEAT: _plot_heat,
}


def write_svg(table: Table, path: Path) -> None:
    """Render the table's figure to path as SVG."""
    figure = _PLOTTERS.get(table.command, _plot_columns)(table)
    try:
        figure.tight_layout()
        figure.savefig(path, format="svg")
    finally:
        plt.close(figure)
