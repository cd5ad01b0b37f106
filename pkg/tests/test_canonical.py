import pytest

from clawcolor import (
    C1A,
    C1B,
    C2A,
    C2B,
    SPEC_1122,
    MultiGraph,
    PackingColoring,
    Variant,
    canonical_color,
    canonical_color_with_edge,
    canonical_color_with_matched_edge,
    color_k4,
    color_ring_of_diamonds,
    color_two_edge_connected,
    expand_to_clawfree,
    gen_ring_of_diamonds,
    light_support_property,
    oum_decompose,
    two_factor,
    verify,
)
from clawcolor.errors import EdgeNotLiftableError, NotK4Error, NotRingOfDiamondsError

# frozen reference coloring of the big_expansion fixture: matching corners
# carry 2a/2b, cycle corners 1a/1b, strings per their two type rules
REFERENCE_BIG_EXPANSION = {
    0: "2a", 1: "1b", 2: "1a", 3: "2a", 4: "1b", 5: "1a", 6: "2a", 7: "1b",
    8: "1a", 9: "2b", 10: "1b", 11: "1a", 12: "2b", 13: "1a", 14: "1b",
    15: "2a", 16: "2b", 17: "1a", 18: "1b", 19: "2a", 20: "2b", 21: "1b",
    22: "1a", 23: "2b", 24: "1b", 25: "1a", 26: "2b", 27: "2a", 28: "1b",
    29: "1a", 30: "2a", 31: "2b", 32: "1b", 33: "1a",
}
LABEL_TO_IDX = {"1a": C1A, "1b": C1B, "2a": C2A, "2b": C2B}


def k4():
    return MultiGraph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])


def assert_valid(g, coloring):
    assert verify(g, SPEC_1122, coloring) == []


def test_color_k4():
    col = color_k4(k4())
    assert sorted(col.assignment.values()) == [C1A, C1B, C2A, C2B]
    assert_valid(k4(), col)


def test_color_k4_rejects_c4():
    with pytest.raises(NotK4Error):
        color_k4(MultiGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))


@pytest.mark.parametrize("k", [2, 3, 5, 10])
def test_ring_coloring(k):
    g = gen_ring_of_diamonds(k)
    col = color_ring_of_diamonds(g)
    assert_valid(g, col)
    # interiors carry the radius-2 classes, exteriors the radius-1 classes
    from clawcolor import find_diamonds

    for d in find_diamonds(g):
        assert {col.assignment[v] for v in d.interiors} == {C2A, C2B}
        assert {col.assignment[v] for v in d.exteriors} <= {C1A, C1B}


def test_ring_coloring_rejects_k4():
    with pytest.raises(NotRingOfDiamondsError):
        color_ring_of_diamonds(k4())


def test_reference_coloring_verifies(named_fixtures):
    g = named_fixtures["big_expansion"]
    col = PackingColoring(
        SPEC_1122, {v: LABEL_TO_IDX[l] for v, l in REFERENCE_BIG_EXPANSION.items()}
    )
    assert_valid(g, col)
    assert light_support_property(g, col)


def test_canonical_on_big_expansion(named_fixtures):
    g = named_fixtures["big_expansion"]
    dec = oum_decompose(g)
    col = canonical_color(g, dec, two_factor(dec.h))
    assert_valid(g, col)
    assert light_support_property(g, col)


def test_canonical_on_k4_expansion():
    g = expand_to_clawfree(k4())
    assert g.n == 12
    col = color_two_edge_connected(g)
    assert_valid(g, col)
    # the matching of K4 has 2 edges: exactly 2 vertices per radius-2 class
    counts = [sum(1 for c in col.assignment.values() if c == i) for i in range(4)]
    assert counts == [4, 4, 2, 2]


def test_canonical_on_prism(named_fixtures):
    g = named_fixtures["prism"]
    col = color_two_edge_connected(g)
    assert_valid(g, col)


def test_matched_pairs_get_heavy_colors(named_fixtures):
    g = named_fixtures["big_expansion"]
    dec = oum_decompose(g)
    factor = two_factor(dec.h)
    col = canonical_color(g, dec, factor)
    for slot in factor.matching.slots:
        e = dec.slot_edge[slot]
        assert col.assignment[e.end_u] == C2A
        assert col.assignment[e.end_v] == C2B
        if not e.diamonds:
            assert g.has_edge(e.end_u, e.end_v)


def test_with_edge_endpoints_light(named_fixtures):
    g = named_fixtures["prism"]
    dec = oum_decompose(g)
    for pair in ((0, 3), (1, 4), (2, 5)):
        col = canonical_color_with_edge(g, dec, pair)
        assert_valid(g, col)
        assert {col.assignment[pair[0]], col.assignment[pair[1]]} == {C1A, C1B}


def test_with_matched_edge_endpoints_heavy(named_fixtures):
    g = named_fixtures["prism"]
    dec = oum_decompose(g)
    for pair in ((0, 3), (1, 4), (2, 5)):
        col = canonical_color_with_matched_edge(g, dec, pair)
        assert_valid(g, col)
        assert {col.assignment[pair[0]], col.assignment[pair[1]]} == {C2A, C2B}


def test_triangle_edge_not_liftable(named_fixtures):
    g = named_fixtures["prism"]
    dec = oum_decompose(g)
    with pytest.raises(EdgeNotLiftableError):
        canonical_color_with_edge(g, dec, (0, 1))


def test_diamond_interior_edge_not_liftable(named_fixtures):
    g = named_fixtures["big_expansion"]
    dec = oum_decompose(g)
    some_diamond = next(e.diamonds[0] for e in dec.h_edges if e.diamonds)
    with pytest.raises(EdgeNotLiftableError):
        canonical_color_with_edge(g, dec, (some_diamond.entry, some_diamond.interiors[0]))


def test_with_edge_on_string_connectors(named_fixtures):
    g = named_fixtures["big_expansion"]
    dec = oum_decompose(g)
    string_edge = next(e for e in dec.h_edges if e.diamonds)
    for pair in string_edge.connector_edges():
        col = canonical_color_with_edge(g, dec, pair)
        assert_valid(g, col)
        assert {col.assignment[pair[0]], col.assignment[pair[1]]} == {C1A, C1B}


def test_transposition_preserves_validity(named_fixtures):
    g = named_fixtures["big_expansion"]
    col = color_two_edge_connected(g)
    for i, j in ((C1A, C1B), (C2A, C2B)):
        assert_valid(g, col.transposed(i, j))


def test_support_property_rejects_bad_coloring(named_fixtures):
    g = named_fixtures["prism"]
    # all-1a is trivially invalid as a packing and also breaks the support
    # property: no 1b neighbors and the prism carries no diamond
    col = PackingColoring(SPEC_1122, {v: C1A for v in range(g.n)})
    assert not light_support_property(g, col)


def test_support_property_on_corpus(base_corpus):
    from clawcolor import Variant, find_bridges

    for _, g in base_corpus:
        if find_bridges(g):
            continue
        dec = oum_decompose(g)
        if dec.variant is not Variant.BUILT:
            continue
        col = canonical_color(g, dec, two_factor(dec.h))
        assert light_support_property(g, col)
