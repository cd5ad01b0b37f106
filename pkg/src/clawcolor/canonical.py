"""(1,1,2,2)-colorings of 2-edge-connected claw-free cubic graphs.

Three constructions: the trivial K4 coloring, the ring-of-diamonds
coloring (interiors take the radius-2 classes, each inter-diamond edge
takes both radius-1 classes), and the canonical coloring driven by a
2-factor of the underlying multigraph H:

  * each matching edge's two triangle corners get 2a/2b, with Type 2
    strings alternating 2b/2a along their exteriors and 1a/1b inside;
  * around each 2-factor cycle, triangle corners take roles entry -> 1a
    and exit -> 1b, with Type 1 strings taking 1a/1b on their exteriors
    and 2a/2b inside.

Every constructor verifies its output before returning it.
"""

from __future__ import annotations

from .coloring import C1A, C1B, C2A, C2B, SPEC_1122, PackingColoring
from .errors import (
    EdgeNotLiftableError,
    InternalInvariantError,
    NotK4Error,
    NotRingOfDiamondsError,
    VerificationFailedError,
)
from .factorization import (
    TwoFactor,
    factor_from_matching,
    matching_through,
    two_factor,
    two_factor_through,
)
from .multigraph import MultiGraph
from .oracle import verify
from .recognition import find_diamonds, is_k4, is_ring_of_diamonds
from .structure import Decomposition, Variant, oum_decompose


def _verified(g: MultiGraph, assignment: dict[int, int]) -> PackingColoring:
    coloring = PackingColoring(SPEC_1122, assignment)
    violations = verify(g, SPEC_1122, coloring)
    if violations:
        raise VerificationFailedError(violations)
    return coloring


def color_k4(g: MultiGraph) -> PackingColoring:
    """K4 takes one vertex in each class."""
    if not is_k4(g):
        raise NotK4Error("input is not K4")
    return _verified(g, {v: c for v, c in zip(range(4), (C1A, C1B, C2A, C2B))})


def color_ring_of_diamonds(g: MultiGraph) -> PackingColoring:
    """Diamond interiors get 2a/2b; each connecting edge gets 1a and 1b."""
    if not is_ring_of_diamonds(g):
        raise NotRingOfDiamondsError("input is not a ring of diamonds")
    assignment: dict[int, int] = {}
    exterior = set()
    for d in find_diamonds(g):
        i1, i2 = d.interiors
        assignment[i1] = C2A
        assignment[i2] = C2B
        exterior.update(d.exteriors)
    for u, v, _ in g.edge_pairs():
        if u in exterior and v in exterior and u not in assignment and v not in assignment:
            assignment[u] = C1A
            assignment[v] = C1B
    return _verified(g, assignment)


def canonical_color(
    g: MultiGraph, dec: Decomposition, factor: TwoFactor
) -> PackingColoring:
    """The canonical coloring of a built graph for a 2-factor of its H."""
    if dec.variant is not Variant.BUILT:
        raise InternalInvariantError(
            f"canonical coloring needs the built variant, got {dec.variant}"
        )
    assignment: dict[int, int] = {}

    # matching edges: the corner in the lower-indexed triangle gets 2a
    for slot in factor.matching.slots:
        e = dec.slot_edge[slot]
        assignment[e.end_u] = C2A
        assignment[e.end_v] = C2B
        for d in e.diamonds:
            assignment[d.entry] = C2B
            assignment[d.exit] = C2A
            assignment[d.interiors[0]] = C1A
            assignment[d.interiors[1]] = C1B

    # cycles: per triangle, the entry corner is 1a and the exit corner 1b
    for cycle in factor.cycles:
        m = len(cycle)
        for i, (hv, exit_slot) in enumerate(cycle):
            entry_slot = cycle[(i - 1) % m][1]
            assignment[dec.attach[(hv, entry_slot)]] = C1A
            assignment[dec.attach[(hv, exit_slot)]] = C1B
            e = dec.slot_edge[exit_slot]
            if not e.diamonds:
                continue
            seq = e.diamonds if hv == e.slot[0] else tuple(
                d.reversed() for d in reversed(e.diamonds)
            )
            for d in seq:
                assignment[d.entry] = C1A
                assignment[d.exit] = C1B
                assignment[d.interiors[0]] = C2A
                assignment[d.interiors[1]] = C2B

    if len(assignment) != g.n:
        raise InternalInvariantError(
            f"canonical coloring covered {len(assignment)} of {g.n} vertices"
        )
    return _verified(g, assignment)


def _lift_slot(dec: Decomposition, edge: tuple[int, int]):
    key = (min(edge), max(edge))
    slot = dec.edge_slot.get(key)
    if slot is None:
        raise EdgeNotLiftableError(
            f"edge {key} lies inside a triangle or a diamond; no H-edge image"
        )
    return slot


def canonical_color_with_edge(
    g: MultiGraph, dec: Decomposition, edge: tuple[int, int]
) -> PackingColoring:
    """Canonical coloring via a 2-factor through the edge's H-image.

    The two endpoints of `edge` end up with distinct radius-1 colors.
    """
    slot = _lift_slot(dec, edge)
    coloring = canonical_color(g, dec, two_factor_through(dec.h, slot))
    cols = {coloring.assignment[edge[0]], coloring.assignment[edge[1]]}
    if cols != {C1A, C1B}:
        raise InternalInvariantError(
            f"cycle-edge endpoints carry classes {cols}, expected both radius-1"
        )
    return coloring


def canonical_color_with_matched_edge(
    g: MultiGraph, dec: Decomposition, edge: tuple[int, int]
) -> PackingColoring:
    """Canonical coloring via a perfect matching through the edge's H-image.

    The two endpoints of `edge` end up with distinct radius-2 colors.
    """
    slot = _lift_slot(dec, edge)
    m = matching_through(dec.h, slot)
    coloring = canonical_color(g, dec, factor_from_matching(dec.h, m))
    cols = {coloring.assignment[edge[0]], coloring.assignment[edge[1]]}
    if cols != {C2A, C2B}:
        raise InternalInvariantError(
            f"matched-edge endpoints carry classes {cols}, expected both radius-2"
        )
    return coloring


def color_two_edge_connected(g: MultiGraph) -> PackingColoring:
    """Dispatch on the structure variant; validates all preconditions."""
    dec = oum_decompose(g)
    if dec.variant is Variant.K4:
        return color_k4(g)
    if dec.variant is Variant.RING:
        return color_ring_of_diamonds(g)
    return canonical_color(g, dec, two_factor(dec.h))


def light_support_property(g: MultiGraph, coloring: PackingColoring) -> bool:
    """Check the canonical-coloring support property on a whole graph.

    Every vertex in a radius-1 class must either have two neighbors in the
    partner radius-1 class or lie on a diamond.
    """
    on_diamond: set[int] = set()
    for d in find_diamonds(g):
        on_diamond |= d.vertices
    partner = {C1A: C1B, C1B: C1A}
    for v in range(g.n):
        c = coloring.assignment[v]
        if c not in partner:
            continue
        if v in on_diamond:
            continue
        count = sum(
            1 for w in g.neighbors(v) if coloring.assignment[w] == partner[c]
        )
        if count < 2:
            return False
    return True
