# ABOUTME: Diamond graph D_{2l,l} model and its eigenvalue ladder (the brute-force spectral oracle).

from autobots_graph_entropy.domains.graph_model.graph import (
    GraphSpec,
    make_graph,
    spectral_dimension_limit,
)
from autobots_graph_entropy.domains.graph_model.ladder import (
    LadderLevel,
    LadderSum,
    SpectralLadder,
    gaussian_tail,
    heat_tail_bound,
    ladder,
    level_multiplicity,
    omitted_levels_bound,
)

__all__ = [
    "GraphSpec",
    "LadderLevel",
    "LadderSum",
    "SpectralLadder",
    "gaussian_tail",
    "heat_tail_bound",
    "ladder",
    "level_multiplicity",
    "make_graph",
    "omitted_levels_bound",
    "spectral_dimension_limit",
]
