# ABOUTME: Pole tower s_n = d_s/2 + i pi n / ln l of the spectral zeta and its residue coefficients.
# ABOUTME: Delta_{Re,n} + i Delta_{Im,n} = 2 Res_n / Res_0 drive the log-periodic trace oscillations.

import cmath
import math
from dataclasses import dataclass

from autobots_devtools_shared_lib.common.observability import get_logger

from autobots_graph_entropy.common.errors import DomainError
from autobots_graph_entropy.configs.constants import LN_PI
from autobots_graph_entropy.configs.settings import get_app_settings
from autobots_graph_entropy.domains.graph_model import GraphSpec
from autobots_graph_entropy.domains.spectral_zeta.closed_form import spectral_area, zeta_zero
from autobots_graph_entropy.domains.specfun import gamma_complex, riemann_zeta_complex

logger = get_logger(__name__)


@dataclass(frozen=True)
class PoleTower:
    """Poles s_0..s_{n_max} with their normalised residues. Immutable."""

    graph: GraphSpec
    s0: float
    poles: tuple[complex, ...]
    delta_re: tuple[float, ...]
    delta_im: tuple[float, ...]
    zeta0: float
    spectral_area: float

    @property
    def n_max(self) -> int:
        return len(self.poles) - 1

    def frequency(self, n: int) -> float:
        """Angular frequency n pi / ln l of order n in ln t."""
        return self.poles[n].imag

    def delta(self, n: int) -> complex:
        return complex(self.delta_re[n], self.delta_im[n])


def pole(graph: GraphSpec, n: int) -> complex:
    """s_n = d_s/2 + i pi n / ln l for any integer n."""
    return complex(graph.d_s / 2.0, math.pi * n / graph.log_decimation)


def residue(graph: GraphSpec, n: int) -> complex:
    """Residue of zeta(s) Gamma(s) at s_n: zeta_R(2 s_n) Gamma(s_n) pi^(-2 s_n) / (2 ln l)."""
    s_n = pole(graph, n)
    return (
        riemann_zeta_complex(2.0 * s_n)
        * gamma_complex(s_n)
        * cmath.exp(-2.0 * s_n * LN_PI)
        / (2.0 * graph.log_decimation)
    )


def residue_ratio(graph: GraphSpec, n: int, reference: complex | None = None) -> complex:
    """Delta_{Re,n} + i Delta_{Im,n} = 2 Res_n / Res_0 (equals 2 at n = 0)."""
    base = reference if reference is not None else residue(graph, 0)
    return 2.0 * residue(graph, n) / base


def conjugate_leakage(graph: GraphSpec, n: int) -> float:
    """|Delta(s_-n) - conj(Delta(s_n))|, zero when the residues pair into a real trace."""
    return abs(residue_ratio(graph, -n) - residue_ratio(graph, n).conjugate())


def pole_tower(graph: GraphSpec, n_max: int | None = None) -> PoleTower:
    """Poles s_0..s_{n_max} with Delta coefficients, zeta_0 and the spectral area.

    Raises:
        DomainError: n_max < 0.
    """
    if n_max is None:
        n_max = get_app_settings().default_n_max
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")

    reference = residue(graph, 0)
    poles = tuple(pole(graph, n) for n in range(n_max + 1))
    deltas = [residue_ratio(graph, n, reference) for n in range(n_max + 1)]
    logger.debug(
        f"pole tower l={graph.decimation} n_max={n_max} |Delta_n_max|={abs(deltas[-1]):.3e}"
    )
    return PoleTower(
        graph=graph,
        s0=graph.d_s / 2.0,
        poles=poles,
        delta_re=tuple(d.real for d in deltas),
        delta_im=tuple(d.imag for d in deltas),
        zeta0=zeta_zero(graph),
        spectral_area=spectral_area(graph),
    )
