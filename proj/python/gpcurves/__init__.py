"""Gaussian persistence curves.

Diagrams are passed as sequences of ``(birth, death)`` pairs (lists of tuples or
an ``(n, 2)`` array). Weights are named by the CLI tokens: ``none``, ``life``,
``midlife``, ``entropy``, ``mullife``, ``normlife``, ``lifespan``.
"""

from ._gpc import (
    GpcError,
    HypothesisViolatedError,
    canonical,
    gpc_eval,
    gpc_sample,
    injectivity_probe,
    l1_distance,
    l1_norm_closed,
    l1_norm_quadrature,
    load_diagram,
    min_lifespan,
    moment_sum,
    parse_diagram,
    resolve_weights,
    std_normal_cdf,
    std_normal_pdf,
    surface_eval,
    tail_dominance_witness,
    total_lifespan,
    verify,
    wasserstein1,
)

__all__ = [
    "GpcError",
    "HypothesisViolatedError",
    "canonical",
    "gpc_eval",
    "gpc_sample",
    "injectivity_probe",
    "l1_distance",
    "l1_norm_closed",
    "l1_norm_quadrature",
    "load_diagram",
    "min_lifespan",
    "moment_sum",
    "parse_diagram",
    "resolve_weights",
    "std_normal_cdf",
    "std_normal_pdf",
    "surface_eval",
    "tail_dominance_witness",
    "total_lifespan",
    "verify",
    "wasserstein1",
]
