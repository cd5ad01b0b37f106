from itertools import product

import pytest

from clawcolor import (
    ComponentKind,
    MultiGraph,
    build_bridge_tree,
    expand_to_clawfree,
    find_bridges,
    fixtures,
    gen_bridged,
    gen_cubic_multigraph,
    gen_ring_of_diamonds,
    is_claw_free,
    is_connected,
    is_cubic,
    is_ring_of_diamonds,
    random_expansion_spec,
)
from clawcolor.errors import InfeasibleSpecError, KTooSmallError, OddOrderError
from clawcolor.rng import SplitMix64


def test_ring_generator():
    assert gen_ring_of_diamonds(2).n == 8
    assert is_ring_of_diamonds(gen_ring_of_diamonds(2))
    assert gen_ring_of_diamonds(3).n == 12
    g = gen_ring_of_diamonds(10)
    assert g.n == 40 and not find_bridges(g)


def test_ring_too_small():
    with pytest.raises(KTooSmallError):
        gen_ring_of_diamonds(1)


def test_multigraph_n2_is_triple_edge():
    g = gen_cubic_multigraph(2, SplitMix64(0))
    assert g.edge_pairs() == [(0, 1, 3)]


def all_cubic_multigraphs_on_4() -> set:
    """Brute-force enumeration via multiplicity assignment on the 6 pairs."""
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    out = set()
    for mults in product(range(4), repeat=6):
        deg = [0] * 4
        for (u, v), m in zip(pairs, mults):
            deg[u] += m
            deg[v] += m
        if all(d == 3 for d in deg):
            edges = []
            for (u, v), m in zip(pairs, mults):
                edges += [(u, v)] * m
            out.add(MultiGraph(4, edges))
    return out


def test_multigraph_n4_in_enumerated_set():
    valid = all_cubic_multigraphs_on_4()
    assert valid
    for seed in range(25):
        g = gen_cubic_multigraph(4, SplitMix64(seed))
        assert g in valid


def test_multigraph_n10_properties():
    for seed in range(60):
        g = gen_cubic_multigraph(10, SplitMix64(seed))
        assert is_cubic(g) and is_connected(g) and not find_bridges(g)


def test_multigraph_rejects_odd():
    with pytest.raises(OddOrderError):
        gen_cubic_multigraph(5, SplitMix64(0))


def test_expansion_always_claw_free_cubic():
    for seed in range(60):
        rng = SplitMix64(0x9 + seed)
        h = gen_cubic_multigraph((2, 4, 6, 8)[seed % 4], rng)
        spec = random_expansion_spec(h, rng, max_string=2)
        g = expand_to_clawfree(h, spec, rng)
        assert is_cubic(g) and is_claw_free(g) and g.is_simple()
        assert g.n == 3 * h.n + 4 * sum(spec.string_lengths.values())
        assert not find_bridges(g)


def test_bridged_tree_shape_recovered():
    spec = [("k3", 3), ("type3", 1), ("type3", 1), ("type3", 1)]
    g = gen_bridged(spec, SplitMix64(11))
    bt = build_bridge_tree(g)
    assert len(bt.components) == 4
    assert sorted(k.value for k in bt.kinds) == ["K3", "type3", "type3", "type3"]
    center = bt.kinds.index(ComponentKind.TRIANGLE)
    assert sorted(len(a) for a in bt.tree_adj) == [1, 1, 1, 3]
    assert len(bt.tree_adj[center]) == 3


def test_bridged_two_type3():
    g = gen_bridged([("type3", 1), ("type3", 1)], SplitMix64(5))
    bt = build_bridge_tree(g)
    assert bt.b == 1
    assert all(k is ComponentKind.TYPE_III for k in bt.kinds)


def test_bridged_with_diamond_chain():
    spec = [("type3", 1), ("diamond", 2), ("type3", 1)]
    g = gen_bridged(spec, SplitMix64(7))
    bt = build_bridge_tree(g)
    assert sorted(k.value for k in bt.kinds) == ["diamond", "type3", "type3"]
    assert sorted(len(a) for a in bt.tree_adj) == [1, 1, 2]


def test_infeasible_specs():
    with pytest.raises(InfeasibleSpecError):
        gen_bridged([("diamond", 2), ("diamond", 2), ("diamond", 2)], SplitMix64(0))
    with pytest.raises(InfeasibleSpecError):
        gen_bridged([("k3", 2), ("type3", 1)], SplitMix64(0))
    with pytest.raises(InfeasibleSpecError):
        gen_bridged([("type3", 1)], SplitMix64(0))


def test_fixture_catalog():
    fx = fixtures()
    assert set(fx) == {"k4", "petersen", "prism", "h10", "big_expansion", "bridged_star"}
    assert fx["big_expansion"].n == 34
    assert fx["bridged_star"].n == 24
    assert len(find_bridges(fx["bridged_star"])) == 3
    assert not fx["h10"].is_simple()
    # petersen: triangle-free with girth 5
    from clawcolor import all_pairs_distances

    pet = fx["petersen"]
    assert not is_claw_free(pet)
    d = all_pairs_distances(pet)
    assert max(max(r) for r in d) == 2
