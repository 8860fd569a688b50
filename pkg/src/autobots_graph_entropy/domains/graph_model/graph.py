# ABOUTME: GraphSpec for the diamond graph D_{2l,l} and its derived dimensions.
# ABOUTME: d_h = ln(2l)/ln(l) = d_s, d_w = 2, rescaled length L = 1.

import math
from dataclasses import dataclass

from autobots_graph_entropy.common.errors import InvalidDecimationError
from autobots_graph_entropy.configs.constants import (
    LN_2,
    MIN_DECIMATION,
    SMOOTH_LIMIT_SPECTRAL_DIMENSION,
    TOTAL_LENGTH,
    WALK_DIMENSION,
)


@dataclass(frozen=True)
class GraphSpec:
    """Diamond graph with 2l links per iteration, arranged in two branches of l edges."""

    decimation: int

    @property
    def log_decimation(self) -> float:
        return math.log(self.decimation)

    @property
    def hausdorff_dimension(self) -> float:
        # ln(2l)/ln(l) written as 1 + ln2/ln(l): exact at l = 4 and stable for huge l
        return 1.0 + LN_2 / self.log_decimation

    @property
    def spectral_dimension(self) -> float:
        return self.hausdorff_dimension

    @property
    def walk_dimension(self) -> float:
        return WALK_DIMENSION

    @property
    def total_length(self) -> float:
        return TOTAL_LENGTH

    @property
    def embedding_dimension(self) -> float:
        """D = (1 + d_s) + 1, reported only."""
        return 2.0 + self.spectral_dimension

    @property
    def links_per_iteration(self) -> int:
        return 2 * self.decimation

    # Short aliases matching the usual notation
    @property
    def d_h(self) -> float:
        return self.hausdorff_dimension

    @property
    def d_s(self) -> float:
        return self.spectral_dimension

    @property
    def d_w(self) -> float:
        return self.walk_dimension


def make_graph(decimation: int) -> GraphSpec:
    """Build the GraphSpec for decimation factor l.

    Raises:
        InvalidDecimationError: l is not an integer >= 3 (1 < d_s < 2 needs l > 2).
    """
    if isinstance(decimation, bool) or not isinstance(decimation, int):
        raise InvalidDecimationError(f"decimation factor must be an integer, got {decimation!r}")
    if decimation < MIN_DECIMATION:
        raise InvalidDecimationError(
            f"decimation factor must satisfy l >= {MIN_DECIMATION}, got l={decimation}"
        )
    return GraphSpec(decimation=decimation)


def spectral_dimension_limit() -> float:
    """d_s as l -> infinity: the rescaled unit line segment."""
    return SMOOTH_LIMIT_SPECTRAL_DIMENSION
