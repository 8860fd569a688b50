# ABOUTME: Closed-form spectral zeta function of the diamond graph, its pole tower and spectral area.

from autobots_graph_entropy.domains.spectral_zeta.closed_form import (
    line_segment_zeta,
    smooth_limit_bracket,
    spectral_area,
    zeta_bracket,
    zeta_closed,
    zeta_zero,
)
from autobots_graph_entropy.domains.spectral_zeta.poles import (
    PoleTower,
    conjugate_leakage,
    pole,
    pole_tower,
    residue,
    residue_ratio,
)

__all__ = [
    "PoleTower",
    "conjugate_leakage",
    "line_segment_zeta",
    "pole",
    "pole_tower",
    "residue",
    "residue_ratio",
    "smooth_limit_bracket",
    "spectral_area",
    "zeta_bracket",
    "zeta_closed",
    "zeta_zero",
]
