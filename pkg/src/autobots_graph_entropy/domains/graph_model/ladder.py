# ABOUTME: Eigenvalue ladder of the diamond graph: line-segment spectra at scales l^-k.
# ABOUTME: lambda_{n,k} = (pi n l^k)^2 with multiplicities m_0 = 2, m_k = (2l)^k; rigorous tail bounds.

import math
from dataclasses import dataclass

import numpy as np
from autobots_devtools_shared_lib.common.observability import get_logger

from autobots_graph_entropy.common.errors import DomainError, ResourceLimitError
from autobots_graph_entropy.configs.constants import LN_2, LN_PI
from autobots_graph_entropy.configs.settings import get_app_settings
from autobots_graph_entropy.domains.graph_model.graph import GraphSpec

logger = get_logger(__name__)

# exp(-x) below this contributes nothing in double precision
_NEGLIGIBLE_EXPONENT = 745.0
# Euler-Maclaurin tail is applied from this index on
_EM_START = 8


def level_multiplicity(graph: GraphSpec, level: int) -> int:
    """m_0 = 2 and m_k = (2l)^k for k >= 1."""
    if level < 0:
        raise DomainError(f"ladder level must be >= 0, got {level}")
    return 2 if level == 0 else graph.links_per_iteration**level


def level_log_base(graph: GraphSpec, level: int) -> float:
    """log of (pi l^k)^2, the level's fundamental eigenvalue."""
    return 2.0 * (LN_PI + level * graph.log_decimation)


def _level_log_multiplicity(graph: GraphSpec, level: int) -> float:
    return LN_2 if level == 0 else level * math.log(graph.links_per_iteration)


def _safe_exp(x: float) -> float:
    if x > 709.0:
        return math.inf
    if x < -_NEGLIGIBLE_EXPONENT:
        return 0.0
    return math.exp(x)


def gaussian_tail(log_base: float, first_index: int, t: float) -> float:
    """Upper bound on sum_{n >= n0} exp(-base n^2 t).

    Successive ratios are at most exp(-base (2 n0 + 1) t), giving a geometric majorant.
    """
    scale = _safe_exp(log_base) * t
    if math.isinf(scale):
        return 0.0
    leading = _safe_exp(-scale * first_index * first_index)
    if leading == 0.0:
        return 0.0
    return leading / -math.expm1(-scale * (2 * first_index + 1))


def omitted_levels_bound(graph: GraphSpec, first_level: int, t: float) -> float:
    """Bound on the heat-trace mass of every level k >= first_level.

    Level k contributes at most m_k * gaussian_tail(base_k, 1, t). The level-to-level ratio
    rho_k = 2l exp(-pi^2 t l^2k (l^2 - 1)) of the leading Gaussians decreases in k, so once
    rho_k <= 1/2 the remaining levels add at most term_k * rho_k / (1 - rho_k).
    """
    bound = 0.0
    log_t = math.log(t)
    log_spread = math.log(graph.decimation * graph.decimation - 1)
    log_links = math.log(graph.links_per_iteration)
    level = first_level
    while True:
        log_base = level_log_base(graph, level)
        tail = gaussian_tail(log_base, 1, t)
        if tail <= 0.0:
            break
        term = _safe_exp(_level_log_multiplicity(graph, level) + math.log(tail))
        bound += term
        rho = _safe_exp(log_links - _safe_exp(log_base + log_t + log_spread))
        if rho <= 0.5:
            bound += term * rho / (1.0 - rho)
            break
        level += 1
    return bound


def heat_tail_bound(graph: GraphSpec, level_counts: tuple[int, ...], t: float) -> float:
    """Bound on the heat-trace mass omitted by a ladder truncated at level_counts.

    Enumerated levels contribute m_k * gaussian_tail(base_k, n_k + 1, t); the levels past
    the ladder are covered by omitted_levels_bound.
    """
    bound = 0.0
    for level, count in enumerate(level_counts):
        tail = gaussian_tail(level_log_base(graph, level), count + 1, t)
        if tail > 0.0:
            bound += level_multiplicity(graph, level) * tail
    return bound + omitted_levels_bound(graph, len(level_counts), t)


def _power_sum_tail(first_index: int, exponent: complex) -> complex:
    """Euler-Maclaurin estimate of sum_{n >= N} n^-a (N >= 8, Re a > 1)."""
    a = exponent
    log_n = math.log(first_index)
    power = np.exp(-a * log_n)
    inv = 1.0 / first_index
    rising3 = a * (a + 1) * (a + 2)
    rising5 = rising3 * (a + 3) * (a + 4)
    rising7 = rising5 * (a + 5) * (a + 6)
    return complex(
        power * first_index / (a - 1.0)
        + power / 2.0
        + a * power * inv / 12.0
        - rising3 * power * inv**3 / 720.0
        + rising5 * power * inv**5 / 30240.0
        - rising7 * power * inv**7 / 1209600.0
    )


@dataclass(frozen=True)
class LadderLevel:
    """One line-segment copy class of the spectrum."""

    level: int
    multiplicity: int
    base: float
    n_max: int

    def eigenvalues(self) -> np.ndarray:
        n = np.arange(1, self.n_max + 1, dtype=float)
        return self.base * n * n


@dataclass(frozen=True)
class LadderSum:
    """Truncated spectral sum with its omitted-mass bound.

    corrected carries the tail-corrected estimate where one exists (zeta sums).
    """

    value: complex
    tail_bound: float
    corrected: complex | None = None


@dataclass(frozen=True)
class SpectralLadder:
    """Every eigenvalue lambda_{n,k} <= lambda_max, grouped by level. Immutable."""

    graph: GraphSpec
    levels: tuple[LadderLevel, ...]
    lambda_max: float
    t_min: float
    tail_bound: float

    @property
    def k_max(self) -> int:
        return len(self.levels) - 1

    @property
    def level_counts(self) -> tuple[int, ...]:
        return tuple(level.n_max for level in self.levels)

    @property
    def entry_count(self) -> int:
        return sum(self.level_counts)

    def count_below(self, cutoff: float) -> int:
        """Eigenvalues (with multiplicity) not exceeding cutoff; cutoff <= lambda_max."""
        if cutoff > self.lambda_max:
            raise DomainError(
                f"cutoff {cutoff:g} exceeds the ladder's lambda_max {self.lambda_max:g}"
            )
        total = 0
        for level in self.levels:
            n = int(math.floor(math.sqrt(cutoff / level.base)))
            while n > 0 and level.base * n * n > cutoff:
                n -= 1
            total += level.multiplicity * min(n, level.n_max)
        return total

    def heat_sum(self, t: float) -> LadderSum:
        """sum m_k exp(-lambda t) over the ladder, smallest terms first."""
        if t <= 0.0:
            raise DomainError(f"diffusion time must be positive, got {t}")
        terms = []
        for level in reversed(self.levels):
            values = np.exp(-level.eigenvalues()[::-1] * t)
            terms.extend((level.multiplicity * values).tolist())
        return LadderSum(
            value=math.fsum(terms),
            tail_bound=heat_tail_bound(self.graph, self.level_counts, t),
        )

    def zeta_sum(self, s: complex) -> LadderSum:
        """sum m_k lambda^-s over the ladder, with a rigorous bound and a tail-corrected estimate.

        The bound uses the integral test per level and a geometric series over omitted
        levels; it requires Re s > d_s/2. The corrected estimate adds Euler-Maclaurin
        tails and is independent of the special-function kernels.
        """
        s = complex(s)
        sigma = s.real
        graph = self.graph
        if sigma <= graph.d_s / 2.0:
            raise DomainError(
                f"ladder zeta sum diverges for Re s <= d_s/2 = {graph.d_s / 2.0:.6g}, got s={s}"
            )
        a = 2.0 * s
        head = np.exp(-a * np.log(np.arange(1, _EM_START, dtype=float)))
        full_power_sum = complex(head.sum()) + _power_sum_tail(_EM_START, a)

        raw = 0j
        corrected = 0j
        bound = 0.0
        for level in self.levels:
            log_weight = _level_log_multiplicity(graph, level.level)
            weight = np.exp(log_weight - s * level_log_base(graph, level.level))
            weight_abs = math.exp(log_weight - sigma * level_log_base(graph, level.level))
            if level.n_max > 0:
                n = np.arange(1, level.n_max + 1, dtype=float)
                partial = complex(np.exp(-a * np.log(n))[::-1].sum())
            else:
                partial = 0j
            raw += weight * partial
            if level.n_max >= _EM_START - 1:
                corrected += weight * (partial + _power_sum_tail(level.n_max + 1, a))
            else:
                corrected += weight * full_power_sum
            first = level.n_max + 1
            bound += weight_abs * (
                first ** (-2.0 * sigma) + first ** (1.0 - 2.0 * sigma) / (2.0 * sigma - 1.0)
            )

        # Omitted levels k > k_max: m_k base_k^-s = pi^-2s (2 l^(1-2s))^k for k >= 1
        first_omitted = self.k_max + 1
        ratio = np.exp(LN_2 + (1.0 - a) * graph.log_decimation)
        ratio_abs = math.exp(LN_2 + (1.0 - 2.0 * sigma) * graph.log_decimation)
        pi_factor = np.exp(-a * LN_PI)
        pi_factor_abs = math.exp(-2.0 * sigma * LN_PI)
        per_level_bound = 1.0 + 1.0 / (2.0 * sigma - 1.0)
        if first_omitted == 0:
            omitted = pi_factor * (2.0 + ratio / (1.0 - ratio))
            omitted_abs = pi_factor_abs * (2.0 + ratio_abs / (1.0 - ratio_abs))
        else:
            omitted = pi_factor * ratio**first_omitted / (1.0 - ratio)
            omitted_abs = pi_factor_abs * ratio_abs**first_omitted / (1.0 - ratio_abs)
        corrected += complex(omitted) * full_power_sum
        bound += omitted_abs * per_level_bound

        return LadderSum(value=complex(raw), tail_bound=bound, corrected=complex(corrected))


def ladder(
    graph: GraphSpec,
    lambda_max: float,
    target_tol: float,
    *,
    t_min: float | None = None,
) -> SpectralLadder:
    """Enumerate every eigenvalue lambda_{n,k} = (pi n l^k)^2 <= lambda_max.

    tail_bound bounds the heat-trace mass of the omitted eigenvalues at t_min. When
    t_min is not given it is the time at which the first omitted eigenvalue is
    suppressed to target_tol, ln(1/target_tol)/lambda_max.

    Raises:
        DomainError: lambda_max or target_tol not positive.
        ResourceLimitError: more than ladder_entry_cap distinct eigenvalues.
    """
    if lambda_max <= 0.0:
        raise DomainError(f"lambda_max must be positive, got {lambda_max}")
    if target_tol <= 0.0:
        raise DomainError(f"target_tol must be positive, got {target_tol}")
    if t_min is None:
        t_min = math.log(1.0 / target_tol) / lambda_max if target_tol < 1.0 else 1.0 / lambda_max
    if t_min <= 0.0:
        raise DomainError(f"t_min must be positive, got {t_min}")

    cap = get_app_settings().ladder_entry_cap
    sqrt_lambda = math.sqrt(lambda_max)
    levels: list[LadderLevel] = []
    total = 0
    level = 0
    while True:
        base = math.exp(level_log_base(graph, level))
        if base > lambda_max:
            break
        n_max = int(math.floor(sqrt_lambda / math.sqrt(base)))
        while base * (n_max + 1) ** 2 <= lambda_max:
            n_max += 1
        while n_max > 0 and base * n_max * n_max > lambda_max:
            n_max -= 1
        total += n_max
        if total > cap:
            raise ResourceLimitError(
                f"ladder up to lambda_max={lambda_max:g} needs more than {cap} entries"
            )
        levels.append(
            LadderLevel(
                level=level,
                multiplicity=level_multiplicity(graph, level),
                base=base,
                n_max=n_max,
            )
        )
        level += 1

    counts = tuple(item.n_max for item in levels)
    tail = heat_tail_bound(graph, counts, t_min)
    logger.debug(
        f"ladder l={graph.decimation} lambda_max={lambda_max:g} levels={len(levels)} "
        f"entries={total} tail_bound={tail:g} at t_min={t_min:g}"
    )
    if tail > target_tol:
        logger.warning(
            f"ladder tail bound {tail:.3g} at t_min={t_min:.3g} exceeds target_tol={target_tol:.3g}"
        )
    return SpectralLadder(
        graph=graph,
        levels=tuple(levels),
        lambda_max=lambda_max,
        t_min=t_min,
        tail_bound=tail,
    )
