"""Capacities of the two-use amplitude-damping channel with Markov memory."""

from ._adcap import (
    apply_memory_channel,
    ce2,
    ce_lim,
    cp2,
    entanglement_consumed,
    environment_spectrum,
    evolve,
    mutual_information,
    output_spectrum,
    point_report,
    qe2,
    random_density_matrix,
    tradeoff_curve,
    verify,
)

__all__ = [
    "apply_memory_channel",
    "ce2",
    "ce_lim",
    "cp2",
    "entanglement_consumed",
    "environment_spectrum",
    "evolve",
    "mutual_information",
    "output_spectrum",
    "point_report",
    "qe2",
    "random_density_matrix",
    "tradeoff_curve",
    "verify",
]
