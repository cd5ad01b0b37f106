"""clawcolor: certified (1,1,2,2)-packing colorings of claw-free cubic graphs.

The constructive pipeline decomposes the input (bridge tree, triangle and
diamond-string structure), builds a coloring from a 2-factor of the
underlying cubic multigraph, and verifies the result.  An independent
exact backtracking solver serves as the oracle.
"""

from .coloring import (
    C1A,
    C1B,
    C2A,
    C2B,
    SPEC_1122,
    PackingColoring,
    SPackingSpec,
    parse_coloring_lines,
)
from .canonical import (
    canonical_color,
    canonical_color_with_edge,
    canonical_color_with_matched_edge,
    color_k4,
    color_ring_of_diamonds,
    color_two_edge_connected,
    light_support_property,
)
from .colorer import (
    color_claw_free_cubic,
    color_root_component,
    extend_component,
    free_two_color,
)
from .factorization import (
    Matching,
    TwoFactor,
    matching_through,
    maximum_matching,
    perfect_matching,
    two_factor,
    two_factor_through,
)
from .formats import (
    emit_edgelist,
    emit_graph,
    emit_graph6,
    parse_edgelist,
    parse_graph,
    parse_graph6,
    parse_graph6_lines,
)
from .generators import (
    ExpansionSpec,
    expand_to_clawfree,
    fixtures,
    gen_bridged,
    gen_cubic_multigraph,
    gen_ring_of_diamonds,
    random_expansion_spec,
)
from .multigraph import MultiGraph, all_pairs_distances, is_connected, is_cubic
from .oracle import Violation, solve_spacking, subdivide, verify
from .recognition import (
    BridgeTree,
    ComponentKind,
    Diamond,
    build_bridge_tree,
    find_bridges,
    find_claw,
    find_diamonds,
    is_claw_free,
    is_k4,
    is_ring_of_diamonds,
    is_two_edge_connected,
    multigraph_isomorphic,
)
from .rng import SplitMix64
from .structure import Decomposition, HEdge, StringDiamond, Variant, oum_decompose

__version__ = "0.1.0"

__all__ = [
    "C1A",
    "C1B",
    "C2A",
    "C2B",
    "SPEC_1122",
    "BridgeTree",
    "ComponentKind",
    "Decomposition",
    "Diamond",
    "ExpansionSpec",
    "HEdge",
    "Matching",
    "MultiGraph",
    "PackingColoring",
    "SPackingSpec",
    "SplitMix64",
    "StringDiamond",
    "TwoFactor",
    "Variant",
    "Violation",
    "all_pairs_distances",
    "build_bridge_tree",
    "canonical_color",
    "canonical_color_with_edge",
    "canonical_color_with_matched_edge",
    "color_claw_free_cubic",
    "color_k4",
    "color_ring_of_diamonds",
    "color_root_component",
    "color_two_edge_connected",
    "emit_edgelist",
    "emit_graph",
    "emit_graph6",
    "expand_to_clawfree",
    "extend_component",
    "find_bridges",
    "find_claw",
    "find_diamonds",
    "fixtures",
    "free_two_color",
    "gen_bridged",
    "gen_cubic_multigraph",
    "gen_ring_of_diamonds",
    "is_claw_free",
    "is_connected",
    "is_cubic",
    "is_k4",
    "is_ring_of_diamonds",
    "is_two_edge_connected",
    "light_support_property",
    "matching_through",
    "maximum_matching",
    "multigraph_isomorphic",
    "oum_decompose",
    "parse_coloring_lines",
    "parse_edgelist",
    "parse_graph",
    "parse_graph6",
    "parse_graph6_lines",
    "perfect_matching",
    "random_expansion_spec",
    "solve_spacking",
    "subdivide",
    "two_factor",
    "two_factor_through",
    "verify",
]
