"""Exact domination of graph prisms and universal-fixer verification.

The library builds prisms (two copies of a graph joined by a permutation
matching), computes exact domination numbers, enumerates separable minimum
dominating sets, constructs the adversarial permutation attached to any
vertex that lies on no triangle, and certifies that this permutation
strictly raises the prism's domination number.  A CLI exposes the same
operations with deterministic JSON output.
"""

from .domination import (
    GammaResult,
    dominates,
    domination_number,
    enumerate_gamma_sets,
    find_dominating_set_at_most,
    is_2_packing,
    is_dominating,
    is_independent,
    naive_domination_number,
)
from .graphs import (
    Graph,
    GraphParseError,
    closed_neighborhood,
    closed_neighborhood_set,
    edges_between,
    girth,
    induced_subgraph,
    is_connected,
    is_triangle_free_vertex,
    iter_bits,
    mask_of,
    mask_to_list,
    open_neighborhood,
    parse_edge_list,
    parse_graph6,
    to_graph6,
    triangle_free_vertices,
)
from .prism import (
    CounterexampleError,
    FailureCase,
    adversary_condition_violations,
    adversary_permutation,
    build_prism,
    classify_failure,
    format_permutation,
    identity_permutation,
    prism_gamma,
    random_adversary_permutation,
)
from .separable import (
    EffectiveWitness,
    SeparableSet,
    SeparationProperties,
    check_separation_properties,
    enumerate_separable,
    exists_effective,
    is_effective,
)
from .verify import (
    AdversaryCertificate,
    FixerVerdict,
    GuardExceededError,
    check_graph,
    conjecture_sweep,
    effectiveness_equivalence_probe,
    is_universal_fixer,
)

__all__ = [
    "AdversaryCertificate",
    "CounterexampleError",
    "EffectiveWitness",
    "FailureCase",
    "FixerVerdict",
    "GammaResult",
    "Graph",
    "GraphParseError",
    "GuardExceededError",
    "SeparableSet",
    "SeparationProperties",
    "adversary_condition_violations",
    "adversary_permutation",
    "build_prism",
    "check_graph",
    "check_separation_properties",
    "classify_failure",
    "closed_neighborhood",
    "closed_neighborhood_set",
    "conjecture_sweep",
    "dominates",
    "domination_number",
    "edges_between",
    "effectiveness_equivalence_probe",
    "enumerate_gamma_sets",
    "enumerate_separable",
    "exists_effective",
    "find_dominating_set_at_most",
    "format_permutation",
    "girth",
    "identity_permutation",
    "induced_subgraph",
    "is_2_packing",
    "is_connected",
    "is_dominating",
    "is_effective",
    "is_independent",
    "is_triangle_free_vertex",
    "is_universal_fixer",
    "iter_bits",
    "mask_of",
    "mask_to_list",
    "naive_domination_number",
    "open_neighborhood",
    "parse_edge_list",
    "parse_graph6",
    "prism_gamma",
    "random_adversary_permutation",
    "to_graph6",
    "triangle_free_vertices",
]
