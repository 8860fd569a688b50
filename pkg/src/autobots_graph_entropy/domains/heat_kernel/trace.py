# ABOUTME: Heat-kernel trace K(t) = sum_k m_k theta(t l^2k) (zero mode excluded), direct and asymptotic.
# ABOUTME: The asymptotic form is zeta_0 + A_s t^(-d_s/2) [1 + log-periodic pole corrections].

import math
from dataclasses import dataclass
from enum import StrEnum

from autobots_devtools_shared_lib.common.observability import get_logger

from autobots_graph_entropy.common.errors import DomainError, PrecisionError, ResourceLimitError
from autobots_graph_entropy.configs.constants import SMOOTH_LIMIT_AREA, SMOOTH_LIMIT_ZETA0
from autobots_graph_entropy.configs.settings import get_app_settings
from autobots_graph_entropy.domains.graph_model import (
    GraphSpec,
    level_multiplicity,
    omitted_levels_bound,
)
from autobots_graph_entropy.domains.heat_kernel.theta import theta_segment, theta_with_bound
from autobots_graph_entropy.domains.spectral_zeta import pole_tower, residue_ratio

logger = get_logger(__name__)

_RELATIVE_FLOOR = 1e-17


class TraceMethod(StrEnum):
    DIRECT = "direct"
    ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class HeatTraceResult:
    """One heat-trace evaluation.

    error_estimate is the rigorous tail bound for the direct method and the magnitude of
    the first omitted pole term for the asymptotic one.
    """

    t: float
    value: float
    method: TraceMethod
    error_estimate: float
    n_max_used: int | None = None


def _check_time(t: float) -> None:
    if not (t > 0.0 and math.isfinite(t)):
        raise DomainError(f"diffusion time must be positive and finite, got {t}")


def trace_direct(graph: GraphSpec, t: float, tol: float = 1e-15) -> HeatTraceResult:
    """Sum the ladder level by level: 2 theta(t) + sum_{k>=1} (2l)^k theta(t l^2k).

    Level k is summed to tol / (2^(k+2) m_k); levels stop once everything beyond them is
    bounded by tol/2. Terms are accumulated smallest first.

    Raises:
        DomainError: t or tol not positive.
        ResourceLimitError: t below direct_min_time, or more than ladder_entry_cap terms.
            The number of eigenvalues with lambda t < 1 grows like t^(-d_s/2).
        PrecisionError: every term underflows (t above roughly 75).
    """
    _check_time(t)
    if tol <= 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    settings = get_app_settings()
    if t < settings.direct_min_time:
        raise ResourceLimitError(
            f"direct trace refused at t={t:g}: below direct_min_time={settings.direct_min_time:g}"
        )

    contributions: list[float] = []
    error = 0.0
    term_count = 0
    level = 0
    log_t = math.log(t)
    while True:
        omitted = omitted_levels_bound(graph, level, t)
        running = math.fsum(contributions)
        if omitted <= min(0.5 * tol, _RELATIVE_FLOOR * running):
            break
        multiplicity = level_multiplicity(graph, level)
        scaled_time = math.exp(log_t + 2.0 * level * graph.log_decimation)
        level_tol = tol / (2.0 ** (level + 2) * multiplicity)
        value, bound, terms = theta_with_bound(scaled_time, level_tol)
        contributions.append(multiplicity * value)
        error += multiplicity * bound
        term_count += terms
        if term_count > settings.ladder_entry_cap:
            raise ResourceLimitError(
                f"direct trace at t={t:g} needs more than {settings.ladder_entry_cap} terms"
            )
        level += 1

    error += omitted
    value = math.fsum(reversed(contributions))
    if not value > 0.0:
        raise PrecisionError(f"direct trace at t={t:g} underflows double precision")
    logger.debug(
        f"direct trace l={graph.decimation} t={t:g} levels={level} terms={term_count} "
        f"error={error:.3e}"
    )
    return HeatTraceResult(t=t, value=value, method=TraceMethod.DIRECT, error_estimate=error)


def trace_asymptotic(graph: GraphSpec, t: float, n_max: int | None = None) -> HeatTraceResult:
    """zeta_0 + A_s t^(-d_s/2) [1 + sum_{n=1}^{n_max} D_re cos(w_n ln t) + D_im sin(w_n ln t)].

    w_n = n pi / ln l. Exact up to O(exp(-1/t)) terms once n_max is large enough, since
    zeta vanishes at the negative integers.
    """
    _check_time(t)
    tower = pole_tower(graph, n_max)
    log_t = math.log(t)
    oscillation = [1.0]
    for n in range(1, tower.n_max + 1):
        phase = tower.frequency(n) * log_t
        oscillation.append(
            tower.delta_re[n] * math.cos(phase) + tower.delta_im[n] * math.sin(phase)
        )
    envelope = tower.spectral_area * math.exp(-0.5 * graph.d_s * log_t)
    value = tower.zeta0 + envelope * math.fsum(oscillation)
    first_omitted = abs(residue_ratio(graph, tower.n_max + 1))
    return HeatTraceResult(
        t=t,
        value=value,
        method=TraceMethod.ASYMPTOTIC,
        error_estimate=envelope * first_omitted,
        n_max_used=tower.n_max,
    )


def smooth_limit_trace(t: float) -> float:
    """l -> infinity trace: zeta_R(0) + A t^(-1/2) with A the limiting spectral area."""
    _check_time(t)
    return SMOOTH_LIMIT_ZETA0 + SMOOTH_LIMIT_AREA / math.sqrt(t)


def decimation_residual(graph: GraphSpec, t: float, tol: float = 1e-15) -> float:
    """Relative residual of K(t/l^2) = 2 theta(t/l^2) + 2l (K(t) - theta(t)).

    Raises:
        PrecisionError: K(t/l^2) underflows, so there is nothing to divide by.
    """
    _check_time(t)
    shrunk = t / (graph.decimation * graph.decimation)
    lhs = trace_direct(graph, shrunk, tol).value
    try:
        outer = trace_direct(graph, t, tol).value
    except PrecisionError:
        # K(t) and theta(t) both sit below the smallest double
        outer = 0.0
    rhs = 2.0 * theta_segment(shrunk, tol) + graph.links_per_iteration * (
        outer - theta_segment(t, tol)
    )
    return abs(lhs - rhs) / abs(lhs)
