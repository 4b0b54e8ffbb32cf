"""Exact spectra of multicone graphs and exhaustive cospectral-mate searches."""

from __future__ import annotations

from .canon import canonical_form, canonical_graph, is_isomorphic
from .ds import (
    CensusReport,
    DSReport,
    cospectral_census,
    find_cospectral_mates,
    verify_ds,
    verify_multicone_family,
)
from .enumerate import EnumerationSpec, enumerate_graphs
from .errors import (
    CapacityError,
    ExpressionSyntaxError,
    Graph6Error,
    PreconditionError,
    SpectraError,
)
from .expr import evaluate_expression, graph_from_expression, parse_graph_expression
from .graph import Graph, degree_profile, multicone, structural_probe
from .graph6 import decode_graph6, encode_graph6
from .poly import IntPoly, count_distinct_roots, count_positive_roots, power_sums
from .quadirr import QuadIrr, Spectrum, spectrum_to_poly
from .spectra import (
    char_poly,
    complement_poly_regular,
    complement_spectrum_regular,
    join_char_poly,
    laplacian_complement_poly,
    laplacian_complement_spectrum,
    laplacian_join_spectrum,
    main_angles,
    multicone_adjacency_spectrum,
    multicone_laplacian_spectrum,
    numeric_spectrum,
    vertex_deleted_identity_residual,
)
from .theorems import (
    check_bound,
    complement_mate_bipartite,
    infer_bidegreed_counts,
    one_positive_eigenvalue_check,
    regularity_from_spectrum,
    spectral_radius_bound,
    three_eigenvalue_check,
)

__version__ = "0.1.0"
