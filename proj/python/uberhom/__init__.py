"""Bi-coloured filtered homology, überhomology and graph invariants over F2."""

from ._uberhom import (
    Graph,
    PlaneGraph,
    SimplicialComplex,
    UberhomError,
    critical_counts,
    diagonal_homology,
    dissimilarity,
    filtered_homology,
    graded_euler,
    h0,
    h1_0,
    h1_1,
    h2,
    homology_ranks,
    horizontal_homology,
    is_dalmatian,
    matching_complex,
    theta,
    uber_degree0,
    uber_homology,
    verify_tait_decomposition,
)

__all__ = [
    "Graph",
    "PlaneGraph",
    "SimplicialComplex",
    "UberhomError",
    "critical_counts",
    "diagonal_homology",
    "dissimilarity",
    "filtered_homology",
    "graded_euler",
    "h0",
    "h1_0",
    "h1_1",
    "h2",
    "homology_ranks",
    "horizontal_homology",
    "is_dalmatian",
    "matching_complex",
    "theta",
    "uber_degree0",
    "uber_homology",
    "verify_tait_decomposition",
]
