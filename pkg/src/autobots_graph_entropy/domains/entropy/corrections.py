# ABOUTME: Leading entanglement entropy, its dimensionless form and the log-periodic corrections.
# ABOUTME: Pi_c + i Pi_s = (Delta_re + i Delta_im)/(1 + i r_n) with r_n = 2 pi n / (d_s ln l).

import math

from autobots_devtools_shared_lib.common.observability import get_logger

from autobots_graph_entropy.common.errors import DomainError, PrecisionError
from autobots_graph_entropy.configs.constants import LN_PI
from autobots_graph_entropy.domains.entropy.models import (
    Convention,
    CorrectionCoefficients,
    CorrectionTerm,
    EntropyResult,
    Normalization,
)
from autobots_graph_entropy.domains.graph_model import GraphSpec
from autobots_graph_entropy.domains.spectral_zeta import (
    conjugate_leakage,
    pole_tower,
    residue_ratio,
    spectral_area,
)
from autobots_graph_entropy.domains.specfun import gamma_complex, riemann_zeta_complex

logger = get_logger(__name__)

REPLICA_FACTOR = 6.0
_LEAKAGE_LIMIT = 1e-12


def check_cutoff(epsilon: float) -> None:
    if not (epsilon > 0.0 and math.isfinite(epsilon)):
        raise DomainError(f"UV cutoff epsilon must be positive and finite, got {epsilon}")


def damping_ratio(graph: GraphSpec, n: int) -> float:
    """r_n = 2 pi n / (d_s ln l) = 2 pi n / ln(2l)."""
    return 2.0 * math.pi * n / math.log(graph.links_per_iteration)


def cutoff_phase(graph: GraphSpec, n: int, epsilon: float) -> float:
    """n pi ln(eps^2) / ln l."""
    return n * math.pi * 2.0 * math.log(epsilon) / graph.log_decimation


def entropy_leading(
    graph: GraphSpec, epsilon: float, convention: Convention = Convention.PAPER
) -> float:
    """A_s/(d_s eps^d_s), divided by 6 in the replica convention."""
    check_cutoff(epsilon)
    value = spectral_area(graph) / (graph.d_s * math.exp(graph.d_s * math.log(epsilon)))
    if convention is Convention.REPLICA:
        return value / REPLICA_FACTOR
    return value


def entropy_tilde(graph: GraphSpec, normalization: Normalization = Normalization.FIGURE) -> float:
    """Dimensionless entropy, zeta_R(d_s) Gamma(d_s/2) / (2 ln 2l).

    The AREA normalisation multiplies by pi^-d_s and equals S_E eps^d_s under
    Convention.PAPER. Both increase with l towards their l -> infinity limits.
    """
    d_s = graph.d_s
    value = (
        riemann_zeta_complex(d_s).real
        * gamma_complex(d_s / 2.0).real
        / (2.0 * math.log(graph.links_per_iteration))
    )
    if normalization is Normalization.AREA:
        return value * math.exp(-d_s * LN_PI)
    return value


def _coefficients_from_delta(graph: GraphSpec, n: int, delta: complex) -> CorrectionCoefficients:
    r = damping_ratio(graph, n)
    damping = 1.0 + r * r
    return CorrectionCoefficients(
        n=n,
        pi_c=(delta.real + r * delta.imag) / damping,
        pi_s=(delta.imag - r * delta.real) / damping,
        delta_re=delta.real,
        delta_im=delta.imag,
    )


def correction_coefficients(graph: GraphSpec, n: int) -> CorrectionCoefficients:
    """Pi_c, Pi_s of order n >= 1."""
    if n < 1:
        raise DomainError(f"correction order n must be >= 1, got {n}")
    return _coefficients_from_delta(graph, n, residue_ratio(graph, n))


def oscillation_amplitude(graph: GraphSpec, n: int) -> float:
    """sqrt(Pi_c^2 + Pi_s^2) = |Delta_n| / sqrt(1 + r_n^2)."""
    return correction_coefficients(graph, n).amplitude


def correction_terms(
    graph: GraphSpec, epsilon: float, n_max: int | None = None
) -> tuple[CorrectionTerm, ...]:
    """Relative corrections of orders 1..n_max at cutoff epsilon.

    Raises:
        PrecisionError: the conjugate pole residues fail to pair into a real correction.
    """
    check_cutoff(epsilon)
    tower = pole_tower(graph, n_max)
    terms = []
    for n in range(1, tower.n_max + 1):
        delta = tower.delta(n)
        leakage = conjugate_leakage(graph, n)
        if leakage > _LEAKAGE_LIMIT * max(1.0, abs(delta)):
            raise PrecisionError(
                f"residues of s_{n} and s_-{n} are not conjugate (leakage {leakage:.2e})"
            )
        coefficients = _coefficients_from_delta(graph, n, delta)
        phase = cutoff_phase(graph, n, epsilon)
        terms.append(
            CorrectionTerm(
                n=n,
                pi_c=coefficients.pi_c,
                pi_s=coefficients.pi_s,
                cos_term=coefficients.pi_c * math.cos(phase),
                sin_term=coefficients.pi_s * math.sin(phase),
            )
        )
    return tuple(terms)


def correction_factor(terms: tuple[CorrectionTerm, ...]) -> float:
    """1 + sum of the relative corrections."""
    parts = [1.0]
    for term in terms:
        parts.extend((term.cos_term, term.sin_term))
    return math.fsum(parts)


def entropy_full(
    graph: GraphSpec,
    epsilon: float,
    n_max: int | None = None,
    convention: Convention = Convention.PAPER,
) -> EntropyResult:
    """Leading entropy times 1 + sum_n [Pi_c cos(phase_n) + Pi_s sin(phase_n)].

    zeta_0 does not enter: it is independent of the diffusion time.
    """
    leading = entropy_leading(graph, epsilon, convention)
    terms = correction_terms(graph, epsilon, n_max)
    total = leading * correction_factor(terms)
    logger.debug(
        f"entropy l={graph.decimation} eps={epsilon:g} n_max={len(terms)} "
        f"leading={leading:.6g} total={total:.6g}"
    )
    return EntropyResult(
        decimation=graph.decimation,
        epsilon=epsilon,
        d_s=graph.d_s,
        leading=leading,
        tilde=entropy_tilde(graph),
        corrections=terms,
        total=total,
        convention=convention,
    )
