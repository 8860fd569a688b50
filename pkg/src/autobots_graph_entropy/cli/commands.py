# ABOUTME: One function per CLI command, each turning a RunConfig into a Table of rows.
# ABOUTME: Grid commands fan out over a process pool when max_workers > 1; row order never changes.

from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from autobots_devtools_shared_lib.common.observability import get_logger

from autobots_graph_entropy.cli.config import Command, RunConfig
from autobots_graph_entropy.common.errors import PrecisionError, ResourceLimitError
from autobots_graph_entropy.common.utils.formatting import Cell
from autobots_graph_entropy.common.utils.grids import decimation_grid, log_grid
from autobots_graph_entropy.configs.constants import SMOOTH_LIMIT_TILDE
from autobots_graph_entropy.configs.settings import get_app_settings
from autobots_graph_entropy.domains.entropy import (
    correction_coefficients,
    entropy_full,
    entropy_tilde,
    frullani_coefficients,
)
from autobots_graph_entropy.domains.graph_model import make_graph
from autobots_graph_entropy.domains.heat_kernel import (
    decimation_residual,
    trace_asymptotic,
    trace_direct,
)
from autobots_graph_entropy.domains.spectral_zeta import pole_tower, zeta_closed

logger = get_logger(__name__)

REFUSED = "refused"


@dataclass(frozen=True)
class Table:
    command: Command
    header: tuple[str, ...]
    rows: list[tuple[Cell, ...]]
    footer: list[tuple[Cell, ...]] = field(default_factory=list)


def _map_ordered[T, R](func: Callable[[T], R], items: Sequence[T]) -> list[R]:
    workers = get_app_settings().max_workers
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def _real(value: complex) -> float:
    # adding 0.0 turns a signed zero into +0.0
    return value.real + 0.0


def _imag(value: complex) -> float:
    return value.imag + 0.0


def cmd_zeta(config: RunConfig) -> Table:
    graph = make_graph(config.single_decimation())
    rows = []
    for s in config.s_values:
        value = zeta_closed(graph, s)
        rows.append((graph.decimation, _real(s), _imag(s), _real(value), _imag(value)))
    return Table(Command.ZETA, ("l", "s_re", "s_im", "zeta_re", "zeta_im"), rows)


def cmd_poles(config: RunConfig) -> Table:
    graph = make_graph(config.single_decimation())
    tower = pole_tower(graph, config.n_max)
    rows: list[tuple[Cell, ...]] = [
        (
            n,
            _real(tower.poles[n]),
            _imag(tower.poles[n]),
            tower.delta_re[n] + 0.0,
            tower.delta_im[n] + 0.0,
        )
        for n in range(tower.n_max + 1)
    ]
    footer: list[tuple[Cell, ...]] = [
        ("zeta0", tower.zeta0),
        ("spectral_area", tower.spectral_area),
    ]
    return Table(Command.POLES, ("n", "s_re", "s_im", "delta_re", "delta_im"), rows, footer)


def _heat_row(args: tuple[int, float, int | None, bool]) -> tuple[Cell, ...]:
    decimation, t, n_max, check = args
    graph = make_graph(decimation)
    asymptotic = trace_asymptotic(graph, t, n_max)
    try:
        direct = trace_direct(graph, t)
    except (ResourceLimitError, PrecisionError) as exc:
        logger.info(f"direct trace refused at t={t:g}: {exc}")
        row: tuple[Cell, ...] = (t, REFUSED, asymptotic.value, None, None)
        return (*row, None) if check else row
    rel_err = abs(direct.value - asymptotic.value) / direct.value
    row = (t, direct.value, asymptotic.value, rel_err, direct.error_estimate)
    if check:
        try:
            residual: Cell = decimation_residual(graph, t)
        except (ResourceLimitError, PrecisionError):
            residual = REFUSED
        return (*row, residual)
    return row


def cmd_heat(config: RunConfig) -> Table:
    times = log_grid(*config.time_range(), config.points)
    header = ("t", "K_direct", "K_asymptotic", "rel_err", "tail_bound")
    if config.check_decimation:
        header = (*header, "decimation_residual")
    decimation = config.single_decimation()
    items = [(decimation, t, config.n_max, config.check_decimation) for t in times]
    return Table(Command.HEAT, header, _map_ordered(_heat_row, items))


def cmd_entropy(config: RunConfig) -> Table:
    graph = make_graph(config.single_decimation())
    rows = []
    for epsilon in config.epsilons:
        result = entropy_full(graph, epsilon, config.n_max, config.convention)
        rows.append(
            (
                result.decimation,
                result.epsilon,
                result.d_s,
                str(result.convention),
                result.leading,
                result.tilde,
                result.correction_sum,
                result.total,
            )
        )
    header = ("l", "epsilon", "d_s", "convention", "leading", "S_E_tilde", "corrections", "total")
    return Table(Command.ENTROPY, header, rows)


def _scan_row(decimation: int) -> tuple[Cell, ...]:
    graph = make_graph(decimation)
    return (decimation, graph.d_s, entropy_tilde(graph))


def cmd_scan(config: RunConfig) -> Table:
    grid = decimation_grid(*config.decimation_range(), config.log_steps)
    logger.info(f"scan over {len(grid)} decimation factors in [{grid[0]}, {grid[-1]}]")
    rows = _map_ordered(_scan_row, grid)
    footer: list[tuple[Cell, ...]] = [("asymptote", SMOOTH_LIMIT_TILDE)]
    return Table(Command.SCAN, ("l", "d_s", "S_E_tilde"), rows, footer)


def _corrections_rows(args: tuple[int, tuple[int, ...], float | None]) -> list[tuple[Cell, ...]]:
    decimation, orders, epsilon = args
    graph = make_graph(decimation)
    rows: list[tuple[Cell, ...]] = []
    for n in orders:
        closed = correction_coefficients(graph, n)
        row: tuple[Cell, ...] = (decimation, n, closed.pi_c, closed.pi_s)
        if epsilon is not None:
            numeric = frullani_coefficients(graph, n, epsilon)
            row = (*row, numeric.pi_c, numeric.pi_s)
        rows.append(row)
    return rows


def cmd_corrections(config: RunConfig) -> Table:
    grid = decimation_grid(*config.decimation_range(), config.log_steps)
    epsilon = config.epsilons[0] if config.verify else None
    header = ("l", "n", "Pi_c", "Pi_s")
    if epsilon is not None:
        header = (*header, "Pi_c_quad", "Pi_s_quad")
    items = [(decimation, config.orders, epsilon) for decimation in grid]
    rows = [row for chunk in _map_ordered(_corrections_rows, items) for row in chunk]
    return Table(Command.CORRECTIONS, header, rows)


COMMANDS: dict[Command, Callable[[RunConfig], Table]] = {
    Command.ZETA: cmd_zeta,
    Command.POLES: cmd_poles,
    Command.HEAT: cmd_heat,
    Command.ENTROPY: cmd_entropy,
    Command.SCAN: cmd_scan,
    Command.CORRECTIONS: cmd_corrections,
}


def run_command(config: RunConfig) -> Table:
    return COMMANDS[config.command](config)

