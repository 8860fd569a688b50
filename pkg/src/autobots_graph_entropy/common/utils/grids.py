# ABOUTME: Parameter grids for scans: log-spaced diffusion times and strictly increasing integer l.

import numpy as np

from autobots_graph_entropy.common.errors import DomainError


def log_grid(start: float, stop: float, points: int) -> list[float]:
    """points values from start to stop, evenly spaced in log."""
    if not start > 0.0:
        raise DomainError(f"grid start must be positive, got {start}")
    if stop < start:
        raise DomainError(f"grid stop {stop} is below start {start}")
    if points < 1:
        raise DomainError(f"grid needs at least one point, got {points}")
    if points == 1:
        return [float(start)]
    return [float(x) for x in np.geomspace(start, stop, points)]


def decimation_grid(l_min: int, l_max: int, log_steps: int | None = None) -> list[int]:
    """Integer decimation factors in [l_min, l_max].

    Without log_steps every integer is returned. With log_steps the values follow a log
    grid rounded to integers and pushed apart so they stay strictly increasing.
    """
    if l_max < l_min:
        raise DomainError(f"l-max {l_max} is below l-min {l_min}")
    if log_steps is None:
        return list(range(l_min, l_max + 1))
    available = l_max - l_min + 1
    if log_steps < 1:
        raise DomainError(f"log-steps must be >= 1, got {log_steps}")
    if log_steps > available:
        raise DomainError(
            f"log-steps={log_steps} exceeds the {available} integers in [{l_min}, {l_max}]"
        )
    if log_steps == 1:
        return [l_min]
    values = [round(float(x)) for x in np.geomspace(l_min, l_max, log_steps)]
    for i in range(1, log_steps):
        values[i] = max(values[i], values[i - 1] + 1)
    values[-1] = min(values[-1], l_max)
    for i in range(log_steps - 2, -1, -1):
        values[i] = min(values[i], values[i + 1] - 1)
    return [int(v) for v in values]
