# ABOUTME: Exact spectral zeta of D_{2l,l}: 2 zeta_R(2s) pi^-2s (1 - l^(1-2s)) / (1 - l^(d_s-2s)).
# ABOUTME: Also the constant trace term zeta_0, the spectral area A_s and the smooth-limit pieces.

import cmath
import math

from autobots_graph_entropy.common.errors import DomainError, PoleError, PrecisionError
from autobots_graph_entropy.configs.constants import LN_PI, NEAR_ONE_SWITCH, ZETA_POLE_GUARD
from autobots_graph_entropy.configs.settings import get_app_settings
from autobots_graph_entropy.domains.graph_model import GraphSpec
from autobots_graph_entropy.domains.specfun import (
    ComplexValue,
    gamma_complex,
    riemann_zeta_complex,
    scaled_zeta_near_one,
)

RIEMANN_ZETA_AT_ZERO = -0.5
_MACHINE_EPS = 2.220446049250313e-16


def _nearest_pole(graph: GraphSpec, s: complex) -> complex:
    n = round(s.imag * graph.log_decimation / math.pi)
    return complex(graph.d_s / 2.0, math.pi * n / graph.log_decimation)


def _bracket_parts(graph: GraphSpec, s: complex) -> tuple[complex, complex]:
    # l^(d_s) is replaced by the exact integer 2l
    x = cmath.exp((1.0 - 2.0 * s) * graph.log_decimation)
    return x, 1.0 - 2.0 * x


def _one_minus_exp_over(w: complex, log_l: float) -> complex:
    """(1 - l^-w)/w, finite through w = 0."""
    y = w * log_l
    if abs(y) < 0.5:
        term = 1.0 + 0j
        acc = 0j
        k = 1
        while True:
            acc += term
            term *= -y / (k + 1)
            k += 1
            if abs(term) < 1e-17 * abs(acc):
                break
        return log_l * acc
    return (1.0 - cmath.exp(-y)) / w


def zeta_bracket(graph: GraphSpec, s: ComplexValue) -> ComplexValue:
    """The bracket (1 - l^(1-2s)) / (1 - 2 l^(1-2s)) alone."""
    x, denom = _bracket_parts(graph, complex(s))
    return (1.0 - x) / denom


def line_segment_zeta(s: ComplexValue) -> ComplexValue:
    """Dirichlet zeta of the unit segment, zeta_R(2s)/pi^2s."""
    s = complex(s)
    return riemann_zeta_complex(2.0 * s) * cmath.exp(-2.0 * s * LN_PI)


def smooth_limit_bracket(s: ComplexValue) -> float:
    """Limit of the bracket as l -> infinity at fixed s: 1/2 for Re s < 1/2, 1 for Re s > 1/2."""
    s = complex(s)
    if s.real == 0.5:
        raise DomainError("the bracket has no l -> infinity limit on Re s = 1/2")
    return 0.5 if s.real < 0.5 else 1.0


def zeta_closed(graph: GraphSpec, s: ComplexValue) -> ComplexValue:
    """Spectral zeta function of the diamond graph (zero mode separated).

    The removable singularity at s = 1/2, where the zeta_R pole meets the vanishing bracket
    numerator, is evaluated as [w zeta_R(1+w)] [(1 - l^-w)/w] with w = 2s - 1.

    Raises:
        DomainError: s is not finite.
        PoleError: s within 1e-10 of a pole s_n = d_s/2 + i pi n / ln l.
        PrecisionError: cancellation in the bracket denominator exceeds the budget.
    """
    s = complex(s)
    if not cmath.isfinite(s):
        raise DomainError(f"zeta argument must be finite, got {s}")
    nearest = _nearest_pole(graph, s)
    if abs(s - nearest) < ZETA_POLE_GUARD:
        raise PoleError(
            f"zeta has a pole at s={nearest}; argument {s} is within {ZETA_POLE_GUARD:g}"
        )

    x, denom = _bracket_parts(graph, s)
    w = 2.0 * s - 1.0
    budget = get_app_settings().zeta_precision_budget
    error_estimate = (
        _MACHINE_EPS * (1.0 + abs(w * graph.log_decimation)) * abs(2.0 * x) / abs(denom)
    )
    if error_estimate > budget:
        raise PrecisionError(
            f"bracket denominator cancels at s={s}: estimated relative error "
            f"{error_estimate:.2e} exceeds budget {budget:.2e}"
        )

    pi_power = cmath.exp(-2.0 * s * LN_PI)
    if abs(w) < NEAR_ONE_SWITCH:
        numerator = scaled_zeta_near_one(w) * _one_minus_exp_over(w, graph.log_decimation)
    else:
        numerator = riemann_zeta_complex(2.0 * s) * (1.0 - x)
    return 2.0 * pi_power * numerator / denom


def zeta_zero(graph: GraphSpec) -> float:
    """zeta_0 = zeta_R(0) (2 - l^d_s)/(1 - l^d_s) with l^d_s = 2l, the t-independent trace term."""
    ratio = (2 - graph.links_per_iteration) / (1 - graph.links_per_iteration)
    return RIEMANN_ZETA_AT_ZERO * ratio


def spectral_area(graph: GraphSpec) -> float:
    """A_s = zeta_R(d_s) Gamma(d_s/2) / (2 ln l pi^d_s), the residue at the leading pole."""
    d_s = graph.d_s
    value = (
        riemann_zeta_complex(d_s).real
        * gamma_complex(d_s / 2.0).real
        * math.exp(-d_s * LN_PI)
        / (2.0 * graph.log_decimation)
    )
    return value
