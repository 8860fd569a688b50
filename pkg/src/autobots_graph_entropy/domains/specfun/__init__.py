# ABOUTME: Complex-argument special functions (Gamma, Riemann zeta, near-pole Laurent expansion).
# ABOUTME: Double precision kernels used by every spectral and entropy formula.

from autobots_graph_entropy.domains.specfun.gamma import ComplexValue, gamma_complex
from autobots_graph_entropy.domains.specfun.zeta import (
    riemann_zeta_complex,
    scaled_zeta_near_one,
    zeta_near_one,
)

__all__ = [
    "ComplexValue",
    "gamma_complex",
    "riemann_zeta_complex",
    "scaled_zeta_near_one",
    "zeta_near_one",
]
