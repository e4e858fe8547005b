"""Iterative higher-order fractal networks: generation and analysis."""

from .boxcover import (
    BoxCoveringResult,
    DimensionEstimate,
    DistanceMatrix,
    all_pairs_distances,
    box_dimension,
    cbb_cover,
    obca_cover,
    similarity_dimension,
)
from .complex import (
    NodeRole,
    PureComplex,
    Skeleton,
    enumerate_l_faces,
    face_count_within,
    faces,
    generalized_degree,
    maximal_cliques,
    verify_facets_match_cliques,
)
from .errors import DisconnectedGraphError, DomainError, EstimationError, SizeError
from .gdd import (
    DegreeDistribution,
    GammaEstimate,
    TheoryTable,
    empirical_gdd,
    fit_power_law,
    gamma_closed_form,
    growth_factor,
    ratio_C_l,
    theory_distribution,
    y_table,
)
from .generator import GeneratorParams, IterationState, compute_S, generate, iterate, predicted_facets

__version__ = "0.1.0"
