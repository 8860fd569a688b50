# ABOUTME: Result and coefficient types of the replica entropy pipeline.

from dataclasses import dataclass
from enum import StrEnum


class Convention(StrEnum):
    """Overall normalisation of the entanglement entropy.

    PAPER reports A_s/(d_s eps^d_s); REPLICA keeps the 1/6 produced by the replica operator.
    """

    PAPER = "paper"
    REPLICA = "replica"


class Normalization(StrEnum):
    """Which dimensionless entropy is reported.

    FIGURE is zeta_R(d_s) Gamma(d_s/2) / (2 ln 2l); AREA is S_E eps^d_s = FIGURE * pi^-d_s.
    """

    FIGURE = "figure"
    AREA = "area"


@dataclass(frozen=True)
class CorrectionCoefficients:
    n: int
    pi_c: float
    pi_s: float
    delta_re: float
    delta_im: float

    @property
    def amplitude(self) -> float:
        return (self.pi_c * self.pi_c + self.pi_s * self.pi_s) ** 0.5


@dataclass(frozen=True)
class CorrectionTerm:
    """Order-n contribution Pi_c cos(phase) + Pi_s sin(phase) relative to the leading entropy."""

    n: int
    pi_c: float
    pi_s: float
    cos_term: float
    sin_term: float

    @property
    def value(self) -> float:
        return self.cos_term + self.sin_term


@dataclass(frozen=True)
class EntropyResult:
    """Entanglement entropy at one cutoff, leading term plus log-periodic corrections."""

    decimation: int
    epsilon: float
    d_s: float
    leading: float
    tilde: float
    corrections: tuple[CorrectionTerm, ...]
    total: float
    convention: Convention

    @property
    def correction_sum(self) -> float:
        return sum(term.value for term in self.corrections)
