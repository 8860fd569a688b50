# ABOUTME: Quadrature oracle for the effective action and the correction coefficients.
# ABOUTME: Integrates dt/t K(t) from eps^2 in v = ln(t/eps^2), one oscillation half-period at a time.

import math
from collections.abc import Callable

import numpy as np
from autobots_devtools_shared_lib.common.observability import get_logger
from scipy.integrate import quad

from autobots_graph_entropy.common.errors import QuadratureError
from autobots_graph_entropy.configs.settings import get_app_settings
from autobots_graph_entropy.domains.entropy.corrections import (
    check_cutoff,
    correction_coefficients,
    damping_ratio,
)
from autobots_graph_entropy.domains.entropy.models import CorrectionCoefficients
from autobots_graph_entropy.domains.entropy.replica import sommerfeld_c
from autobots_graph_entropy.domains.graph_model import GraphSpec
from autobots_graph_entropy.domains.spectral_zeta import pole_tower

logger = get_logger(__name__)

# exp(-a v) has fallen below double resolution past ln(1e17)/a
_DECAY_SPAN = math.log(1e17)
_RELATIVE_TOL = 1e-12


def _damped_integral(
    integrand: Callable[[float], float], decay: float, half_period: float
) -> float:
    """Integral over v in [0, inf) of an integrand damped by exp(-decay v)."""
    settings = get_app_settings()
    v_end = _DECAY_SPAN / decay
    step = min(half_period, 1.0 / decay)
    n_intervals = math.ceil(v_end / step)
    interval_tol = settings.quad_abs_tol / n_intervals
    pieces = []
    for index in range(n_intervals):
        lower = index * step
        upper = min(lower + step, v_end)
        result = quad(
            integrand,
            lower,
            upper,
            epsabs=interval_tol,
            epsrel=_RELATIVE_TOL,
            limit=settings.quad_interval_limit,
            full_output=1,
        )
        if len(result) == 4:
            raise QuadratureError(
                "quadrature did not converge",
                diagnostics={
                    "interval": f"[{lower:.6g}, {upper:.6g}]",
                    "estimate": result[0],
                    "abserr": result[1],
                    "message": result[3],
                },
            )
        pieces.append(result[0])
    logger.debug(
        f"damped integral decay={decay:.6g} intervals={n_intervals} "
        f"per-interval tol={interval_tol:.2e}"
    )
    return math.fsum(pieces)


def frullani_oracle(
    graph: GraphSpec, alpha: float, epsilon: float, n_max: int | None = None
) -> float:
    """W_alpha = -(1/2) int_{eps^2}^inf dt/t (alpha C(alpha)/2) (K(t) - zeta_0), by quadrature.

    K is the pole expansion truncated at n_max. Raises QuadratureError when an interval fails.
    """
    check_cutoff(epsilon)
    prefactor = alpha * sommerfeld_c(alpha) / 2.0
    tower = pole_tower(graph, n_max)
    decay = graph.d_s / 2.0
    cutoff_log = 2.0 * math.log(epsilon)
    orders = np.arange(1, tower.n_max + 1)
    frequencies = orders * math.pi / graph.log_decimation
    delta_re = np.asarray(tower.delta_re[1:])
    delta_im = np.asarray(tower.delta_im[1:])

    def integrand(v: float) -> float:
        phases = frequencies * (v + cutoff_log)
        oscillation = float(np.sum(delta_re * np.cos(phases) + delta_im * np.sin(phases)))
        return math.exp(-decay * v) * (1.0 + oscillation)

    half_period = math.pi / frequencies[-1] if tower.n_max > 0 else 1.0 / decay
    normalized = _damped_integral(integrand, decay, half_period)
    scale = tower.spectral_area * math.exp(-graph.d_s * math.log(epsilon))
    return -0.5 * prefactor * scale * normalized


def frullani_coefficients(graph: GraphSpec, n: int, epsilon: float) -> CorrectionCoefficients:
    """Pi_c, Pi_s of order n from integrating the cos and sin trace modes from eps^2.

    The mode integrals carry the cutoff phase n pi ln(eps^2)/ln l; it is rotated out before
    combining with the residue ratio, so the result should not depend on epsilon.
    """
    check_cutoff(epsilon)
    closed = correction_coefficients(graph, n)
    decay = graph.d_s / 2.0
    frequency = n * math.pi / graph.log_decimation
    cutoff_log = 2.0 * math.log(epsilon)
    phase = frequency * cutoff_log
    half_period = math.pi / frequency

    cos_mode = _damped_integral(
        lambda v: math.exp(-decay * v) * math.cos(frequency * (v + cutoff_log)),
        decay,
        half_period,
    )
    sin_mode = _damped_integral(
        lambda v: math.exp(-decay * v) * math.sin(frequency * (v + cutoff_log)),
        decay,
        half_period,
    )
    cos_rest = math.cos(phase) * cos_mode + math.sin(phase) * sin_mode
    sin_rest = -math.sin(phase) * cos_mode + math.cos(phase) * sin_mode

    pi_c = decay * (closed.delta_re * cos_rest + closed.delta_im * sin_rest)
    pi_s = decay * (closed.delta_im * cos_rest - closed.delta_re * sin_rest)
    logger.debug(
        f"frullani n={n} l={graph.decimation} r={damping_ratio(graph, n):.6g} "
        f"pi_c={pi_c:.6g} pi_s={pi_s:.6g}"
    )
    return CorrectionCoefficients(
        n=n, pi_c=pi_c, pi_s=pi_s, delta_re=closed.delta_re, delta_im=closed.delta_im
    )
