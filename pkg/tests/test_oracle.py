import math
import time

import pytest
from hypothesis import given, settings, strategies as st

from clawcolor import (
    C1A,
    C2A,
    SPEC_1122,
    MultiGraph,
    PackingColoring,
    SPackingSpec,
    all_pairs_distances,
    color_claw_free_cubic,
    solve_spacking,
    subdivide,
    verify,
)
from clawcolor.errors import CapExceededError, PartialColoringError

from brute import coloring_valid_brute, relabeled
from clawcolor.rng import SplitMix64


def k4():
    return MultiGraph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])


def test_verify_k4_ok():
    col = PackingColoring(SPEC_1122, {0: 0, 1: 1, 2: 2, 3: 3})
    assert verify(k4(), SPEC_1122, col) == []


def test_verify_reports_violation():
    g = MultiGraph(3, [(0, 1), (1, 2)])
    col = PackingColoring(SPEC_1122, {0: C2A, 1: C1A, 2: C2A})
    violations = verify(g, SPEC_1122, col)
    assert len(violations) == 1
    v = violations[0]
    assert v.pair == (0, 2) and v.distance == 2 and v.label == "2a"


def test_verify_requires_total():
    with pytest.raises(PartialColoringError):
        verify(k4(), SPEC_1122, PackingColoring(SPEC_1122, {0: 0}))


def test_spec_validation():
    with pytest.raises(ValueError):
        SPackingSpec((2, 1))
    with pytest.raises(ValueError):
        SPackingSpec((0, 1))
    assert SPackingSpec((1, 2, 3)).labels() == ("c1", "c2", "c3")
    assert SPEC_1122.labels() == ("1a", "1b", "2a", "2b")


def test_petersen_unsat_fast(named_fixtures):
    start = time.perf_counter()
    assert solve_spacking(named_fixtures["petersen"], SPEC_1122) is None
    assert time.perf_counter() - start < 1.0


def test_c5_specs():
    c5 = MultiGraph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert solve_spacking(c5, SPackingSpec((1, 1))) is None
    col = solve_spacking(c5, SPackingSpec((1, 1, 2)))
    assert col is not None
    assert verify(c5, SPackingSpec((1, 1, 2)), col) == []


def test_k4_specs():
    assert solve_spacking(k4(), SPackingSpec((1,))) is None
    col = solve_spacking(k4(), SPEC_1122)
    assert col is not None and verify(k4(), SPEC_1122, col) == []


def test_cap():
    g = MultiGraph(5, [])
    with pytest.raises(CapExceededError):
        solve_spacking(g, SPEC_1122, cap=4)


def test_solver_output_valid_by_brute(named_fixtures):
    g = named_fixtures["prism"]
    col = solve_spacking(g, SPEC_1122)
    assert col is not None
    assert coloring_valid_brute(g, SPEC_1122.radii, col.assignment)


def test_unsat_stable_under_relabeling(named_fixtures):
    g = named_fixtures["petersen"]
    rng = SplitMix64(0xD15C)
    for _ in range(20):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert solve_spacking(relabeled(g, perm), SPEC_1122) is None


def test_solver_agrees_with_construction(base_corpus):
    for name, g in base_corpus:
        if g.n > 16:
            continue
        col = solve_spacking(g, SPEC_1122)
        assert col is not None, name
        assert verify(g, SPEC_1122, col) == []
        constructed = color_claw_free_cubic(g)
        assert verify(g, SPEC_1122, constructed) == []


def test_subdivide_k4():
    s = subdivide(k4())
    assert s.n == 10 and s.size == 12 and s.is_simple()
    # bipartite: original vertices vs subdivision vertices
    d = all_pairs_distances(s)
    assert all(d[u][v] % 2 == 0 for u in range(4) for v in range(4) if d[u][v] != math.inf)


def test_subdivide_triple_edge():
    s = subdivide(MultiGraph(2, [(0, 1)] * 3))
    assert s.n == 5 and s.is_simple() and s.size == 6


def test_subdivide_triangle_gives_hexagon():
    s = subdivide(MultiGraph(3, [(0, 1), (1, 2), (0, 2)]))
    assert s.n == 6
    assert sorted(s.degrees()) == [2] * 6
    d = all_pairs_distances(s)
    assert max(max(r) for r in d) == 3


def test_subdivision_doubles_distances(base_corpus):
    checked = 0
    for _, g in base_corpus:
        if g.n > 14:
            continue
        s = subdivide(g)
        dg = all_pairs_distances(g)
        ds = all_pairs_distances(s)
        for u in range(g.n):
            for v in range(g.n):
                assert ds[u][v] == 2 * dg[u][v]
        checked += 1
    assert checked >= 5


def test_subdivided_k4_takes_five_classes():
    s = subdivide(k4())
    spec = SPackingSpec((1, 2, 3, 4, 5))
    col = solve_spacking(s, spec, cap=90)
    assert col is not None
    assert verify(s, spec, col) == []


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_solver_round_trip_small_random(seed):
    rng = SplitMix64(seed)
    n = 4 + rng.randrange(5)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.randrange(3) == 0:
                edges.append((u, v))
    g = MultiGraph(n, edges)
    col = solve_spacking(g, SPEC_1122)
    if col is not None:
        assert coloring_valid_brute(g, SPEC_1122.radii, col.assignment)
