"""Random graphs with tunable degree assortativity from copula graphons."""

from ._core import (
    __version__,
    analyze,
    calibrate_motif,
    calibrate_r,
    canonical,
    degree_function,
    densities,
    evaluate,
    expected_assortativity,
    latent_dim,
    sample_edges,
    sweep,
    verify,
)

__all__ = [
    "__version__",
    "analyze",
    "calibrate_motif",
    "calibrate_r",
    "canonical",
    "degree_function",
    "densities",
    "evaluate",
    "expected_assortativity",
    "latent_dim",
    "sample_edges",
    "sweep",
    "verify",
]
