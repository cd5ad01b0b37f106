import pytest

from clawcolor import (
    ExpansionSpec,
    MultiGraph,
    Variant,
    expand_to_clawfree,
    gen_cubic_multigraph,
    gen_ring_of_diamonds,
    is_claw_free,
    is_cubic,
    multigraph_isomorphic,
    oum_decompose,
    random_expansion_spec,
)
from clawcolor.errors import NotSimpleError, NotTwoEdgeConnectedError
from clawcolor.rng import SplitMix64


def k4():
    return MultiGraph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])


def test_k4_variant():
    assert oum_decompose(k4()).variant is Variant.K4


def test_ring_variant():
    dec = oum_decompose(gen_ring_of_diamonds(4))
    assert dec.variant is Variant.RING
    assert len(dec.ring_diamonds) == 4


def test_prism_decomposition(named_fixtures):
    dec = oum_decompose(named_fixtures["prism"])
    assert dec.variant is Variant.BUILT
    assert dec.h.n == 2
    assert dec.h.multiplicity(0, 1) == 3
    assert dec.string_lengths() == []


def test_big_expansion_decomposition(named_fixtures):
    dec = oum_decompose(named_fixtures["big_expansion"])
    assert dec.variant is Variant.BUILT
    assert dec.h.n == 6
    # exactly one parallel pair in H
    assert sorted(m for _, _, m in dec.h.edge_pairs()) == [1, 1, 1, 1, 1, 1, 1, 2]
    assert dec.string_lengths() == [2, 2]


def test_decompose_rejects_bridged(named_fixtures):
    with pytest.raises(NotTwoEdgeConnectedError):
        oum_decompose(named_fixtures["bridged_star"])


def test_decompose_rejects_multigraph(named_fixtures):
    with pytest.raises(NotSimpleError):
        oum_decompose(named_fixtures["h10"])


def test_expansion_counts():
    h = MultiGraph(2, [(0, 1)] * 3)
    g = expand_to_clawfree(h)
    assert g.n == 6 and is_cubic(g) and is_claw_free(g)
    g2 = expand_to_clawfree(h, ExpansionSpec({(0, 1, 0): 3}))
    assert g2.n == 6 + 12


def test_expansion_attach_and_connectors():
    h = MultiGraph(2, [(0, 1)] * 3)
    g = expand_to_clawfree(h, ExpansionSpec({(0, 1, 1): 1}))
    dec = oum_decompose(g)
    assert dec.variant is Variant.BUILT
    assert dec.string_lengths() == [1]
    # every connector edge maps back to its slot
    for e in dec.h_edges:
        for pair in e.connector_edges():
            assert dec.edge_slot[pair] == e.slot
        assert dec.attach[(e.slot[0], e.slot)] == e.end_u
        assert dec.attach[(e.slot[1], e.slot)] == e.end_v


@pytest.mark.parametrize("seed", range(25))
def test_round_trip_h_recovery(seed):
    rng = SplitMix64(0xAB0 + seed)
    n_h = (2, 4, 6, 8, 10, 12)[seed % 6]
    h = gen_cubic_multigraph(n_h, rng)
    spec = random_expansion_spec(h, rng, max_string=2)
    g = expand_to_clawfree(h, spec, rng)
    assert is_cubic(g) and is_claw_free(g) and g.is_simple()
    dec = oum_decompose(g)
    assert dec.variant is Variant.BUILT
    assert multigraph_isomorphic(dec.h, h)
    assert sorted(spec.string_lengths[s] for s in h.slots() if spec.string_lengths[s]) == dec.string_lengths()


def test_triangle_partition_covers_everything(named_fixtures):
    g = named_fixtures["big_expansion"]
    dec = oum_decompose(g)
    covered = set()
    for tri in dec.triangles:
        covered |= set(tri)
    for e in dec.h_edges:
        for d in e.diamonds:
            covered |= d.vertices
    assert covered == set(range(g.n))
