"""Cordial labelings, extremal edge counts, and linear preservers of small graphs."""

from .errors import BudgetError, GraphFormatError, UnknownTagError
from .extremal import (
    BoundReport,
    bound_23_orientable,
    bound_product_cordial,
    bound_sum_cordial,
    bounds_for,
    empirical_max_edges,
    survey,
    minimal_noncordial,
)
from .graph6 import parse_graph6, to_graph6
from .graphs import (
    CanonicalKey,
    Graph,
    canonical_form,
    canonical_representative,
    complete,
    connected_on_support,
    edge_graph,
    edge_index,
    edge_slots,
    empty,
    enumerate_graphs,
    make_graph,
    named,
    named_tags,
    relabel,
    union,
)
from .labeling import (
    EdgeRule,
    GraphProperty,
    Orientation,
    Verdict,
    VertexLabeling,
    check_23_cordial_digraph,
    check_23_orientable,
    check_product_cordial,
    check_property,
    check_sum_cordial,
    friendly_vertex_labelings,
    has_property,
    induced_edge_counts,
    is_k_friendly,
    oracle_23_orientable,
    orientation_feasible,
)
from .preserver import (
    LinearOperator,
    PreserverVerdict,
    SampleFailure,
    SearchReport,
    apply,
    compose,
    identity_operator,
    idempotent_power,
    is_injective,
    is_nonsingular,
    is_surjective,
    is_vertex_permutation,
    membership_bitmap,
    operator_table,
    parse_operator_table,
    search_strong_preservers,
    strongly_preserves,
    vertex_permutation_operator,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "BudgetError",
    "CanonicalKey",
    "EdgeRule",
    "Graph",
    "GraphFormatError",
    "GraphProperty",
    "LinearOperator",
    "Orientation",
    "PreserverVerdict",
    "SampleFailure",
    "SearchReport",
    "UnknownTagError",
    "Verdict",
    "VertexLabeling",
    "apply",
    "bound_23_orientable",
    "bound_product_cordial",
    "bound_sum_cordial",
    "bounds_for",
    "canonical_form",
    "canonical_representative",
    "check_23_cordial_digraph",
    "check_23_orientable",
    "check_product_cordial",
    "check_property",
    "check_sum_cordial",
    "complete",
    "compose",
    "connected_on_support",
    "edge_graph",
    "edge_index",
    "edge_slots",
    "empirical_max_edges",
    "empty",
    "enumerate_graphs",
    "friendly_vertex_labelings",
    "has_property",
    "identity_operator",
    "idempotent_power",
    "induced_edge_counts",
    "is_injective",
    "is_k_friendly",
    "is_nonsingular",
    "is_surjective",
    "is_vertex_permutation",
    "make_graph",
    "membership_bitmap",
    "minimal_noncordial",
    "named",
    "named_tags",
    "operator_table",
    "oracle_23_orientable",
    "orientation_feasible",
    "parse_graph6",
    "parse_operator_table",
    "relabel",
    "search_strong_preservers",
    "strongly_preserves",
    "survey",
    "to_graph6",
    "union",
    "vertex_permutation_operator",
]
