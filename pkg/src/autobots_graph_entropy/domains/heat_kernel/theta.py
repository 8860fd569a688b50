# ABOUTME: Dirichlet heat trace of the unit segment, theta(t) = sum_{n>=1} exp(-pi^2 n^2 t).
# ABOUTME: Direct Gaussian sum for t >= 0.1, Jacobi-transformed sum below.

import math

from autobots_graph_entropy.common.errors import DomainError
from autobots_graph_entropy.configs.constants import LN_PI
from autobots_graph_entropy.domains.graph_model import gaussian_tail

# Below this t the transformed series converges faster
_JACOBI_SWITCH = 0.1
# Relative stopping floor, below double-precision resolution of the running sum
_RELATIVE_FLOOR = 1e-17


def _direct(t: float, tol: float) -> tuple[float, float, int]:
    log_base = 2.0 * LN_PI
    terms: list[float] = []
    n = 0
    while True:
        n += 1
        terms.append(math.exp(-math.pi * math.pi * n * n * t))
        bound = gaussian_tail(log_base, n + 1, t)
        if bound <= min(tol, _RELATIVE_FLOOR * terms[0]):
            break
    return math.fsum(reversed(terms)), bound, n


def _jacobi(t: float, tol: float) -> tuple[float, float, int]:
    # theta(t) = 1/(2 sqrt(pi t)) - 1/2 + (1/sqrt(pi t)) sum_{m>=1} exp(-m^2/t)
    prefactor = 1.0 / math.sqrt(math.pi * t)
    log_inverse = -math.log(t)
    leading = 0.5 * prefactor - 0.5
    terms: list[float] = []
    m = 0
    while True:
        m += 1
        terms.append(prefactor * math.exp(-m * m / t))
        bound = prefactor * gaussian_tail(log_inverse, m + 1, 1.0)
        if bound <= min(tol, _RELATIVE_FLOOR * leading):
            break
    return math.fsum([leading, *reversed(terms)]), bound, m


def theta_with_bound(t: float, tol: float) -> tuple[float, float, int]:
    """theta(t) with the bound on the omitted terms and the number of terms summed."""
    if t <= 0.0:
        raise DomainError(f"diffusion time must be positive, got {t}")
    if tol <= 0.0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    if t < _JACOBI_SWITCH:
        return _jacobi(t, tol)
    return _direct(t, tol)


def theta_segment(t: float, tol: float = 1e-16) -> float:
    """sum_{n>=1} exp(-pi^2 n^2 t) to absolute error tol."""
    value, _, _ = theta_with_bound(t, tol)
    return value
