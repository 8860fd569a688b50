# ABOUTME: Replica trick on the cone: Sommerfeld coefficient, effective action W_alpha and the
# ABOUTME: entropy S = lim_{alpha->1} [alpha d/dalpha - 1] W_alpha, closed form and finite difference.

import math
from collections.abc import Callable

from autobots_graph_entropy.common.errors import DomainError
from autobots_graph_entropy.configs.constants import REPLICA_STEP
from autobots_graph_entropy.domains.entropy.corrections import (
    check_cutoff,
    correction_factor,
    correction_terms,
)
from autobots_graph_entropy.domains.graph_model import GraphSpec
from autobots_graph_entropy.domains.spectral_zeta import spectral_area


def _check_alpha(alpha: float) -> None:
    if not alpha > 0.0:
        raise DomainError(f"replica parameter alpha must be positive, got {alpha}")


def sommerfeld_c(alpha: float) -> float:
    """C(alpha) = (1 - alpha^2) / (6 alpha^2), the conical-singularity heat-kernel coefficient."""
    _check_alpha(alpha)
    return (1.0 - alpha * alpha) / (6.0 * alpha * alpha)


def effective_action(graph: GraphSpec, alpha: float, epsilon: float, n_max: int = 0) -> float:
    """W_alpha = A_s (alpha^2 - 1) / (12 alpha d_s eps^d_s), times the log-periodic factor.

    n_max = 0 gives the leading action alone.
    """
    _check_alpha(alpha)
    check_cutoff(epsilon)
    leading = (
        spectral_area(graph)
        * (alpha * alpha - 1.0)
        / (12.0 * alpha * graph.d_s * math.exp(graph.d_s * math.log(epsilon)))
    )
    if n_max == 0:
        return leading
    return leading * correction_factor(correction_terms(graph, epsilon, n_max))


def replica_limit(action: Callable[[float], float], step: float = REPLICA_STEP) -> float:
    """[alpha d/dalpha - 1] action at alpha = 1 by a central difference."""
    if not 0.0 < step < 1.0:
        raise DomainError(f"finite-difference step must lie in (0, 1), got {step}")
    derivative = (action(1.0 + step) - action(1.0 - step)) / (2.0 * step)
    return derivative - action(1.0)


def replica_entropy(graph: GraphSpec, epsilon: float) -> float:
    """A_s / (6 d_s eps^d_s), the replica operator applied to the leading W_alpha."""
    check_cutoff(epsilon)
    return spectral_area(graph) / (6.0 * graph.d_s * math.exp(graph.d_s * math.log(epsilon)))
