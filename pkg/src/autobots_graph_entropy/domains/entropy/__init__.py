# ABOUTME: Replica-trick entanglement entropy of the diamond graph with log-periodic corrections.

from autobots_graph_entropy.domains.entropy.corrections import (
    REPLICA_FACTOR,
    correction_coefficients,
    correction_factor,
    correction_terms,
    cutoff_phase,
    damping_ratio,
    entropy_full,
    entropy_leading,
    entropy_tilde,
    oscillation_amplitude,
)
from autobots_graph_entropy.domains.entropy.frullani import frullani_coefficients, frullani_oracle
from autobots_graph_entropy.domains.entropy.models import (
    Convention,
    CorrectionCoefficients,
    CorrectionTerm,
    EntropyResult,
    Normalization,
)
from autobots_graph_entropy.domains.entropy.replica import (
    effective_action,
    replica_entropy,
    replica_limit,
    sommerfeld_c,
)

__all__ = [
    "REPLICA_FACTOR",
    "Convention",
    "CorrectionCoefficients",
    "CorrectionTerm",
    "EntropyResult",
    "Normalization",
    "correction_coefficients",
    "correction_factor",
    "correction_terms",
    "cutoff_phase",
    "damping_ratio",
    "effective_action",
    "entropy_full",
    "entropy_leading",
    "entropy_tilde",
    "frullani_coefficients",
    "frullani_oracle",
    "oscillation_amplitude",
    "replica_entropy",
    "replica_limit",
    "sommerfeld_c",
]
