"""(1,1,2,2)-coloring of arbitrary connected claw-free cubic graphs.

Bridgeless graphs go straight to the 2-edge-connected constructions.
Otherwise the bridge tree is rooted at a leaf of a diametral path, the
root component is colored first, and the remaining components are colored
in BFS order.  Each component C with attachment vertices X (its degree-2
vertices) is completed to a 2-edge-connected claw-free cubic graph:

  * |X| even: add a pairing edge on each consecutive pair of X; color so
    that the pair (x1, x2) is a matched edge carrying 2a/2b.
  * |X| odd (including the root, where |X| = 1): remove x1 and its two
    neighbors u, w, join their outer neighbors s, y by an edge, pair up
    the rest of X; color so that s, y carry 1a/1b, then put u -> 1b,
    w -> 1a, x1 -> 2a.  When the completed graph collapses to K4 the
    explicit 7-vertex assignment is used instead.

The color forced on each x1 comes from inspecting the closed neighborhood
of its up-neighbor in the already-colored parent, and is realized by
transposing whole color classes of the child's coloring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import (
    canonical_color_with_edge,
    color_ring_of_diamonds,
    color_two_edge_connected,
    canonical_color_with_matched_edge,
)
from .coloring import C1A, C1B, C2A, C2B, SPEC_1122, PackingColoring
from .errors import (
    ClaimViolatedError,
    DisconnectedError,
    InternalInvariantError,
    NotClawFreeError,
    NotCubicError,
    NotSimpleError,
    PreconditionViolatedError,
    VerificationFailedError,
)
from .multigraph import MultiGraph, is_connected, is_cubic
from .oracle import verify
from .recognition import (
    ComponentKind,
    build_bridge_tree,
    find_bridges,
    find_claw,
    find_diamonds,
    is_k4,
)
from .structure import Variant, oum_decompose


@dataclass(frozen=True)
class TildeConstruction:
    """How a component was completed to a cubic graph, for diagnostics."""

    parity: str  # "even" or "odd"
    removed: tuple[int, ...]
    added_edges: tuple[tuple[int, int], ...]
    graph: MultiGraph
    to_component: tuple[int, ...]  # tilde-local id -> component-local id


def _component_kind(comp: MultiGraph) -> ComponentKind:
    degs = sorted(comp.degrees())
    if comp.n == 3 and degs == [2, 2, 2]:
        return ComponentKind.TRIANGLE
    if comp.n == 4 and degs == [2, 2, 3, 3]:
        ints = [v for v in range(4) if comp.degree(v) == 3]
        exts = [v for v in range(4) if comp.degree(v) == 2]
        if comp.has_edge(*ints) and not comp.has_edge(*exts):
            return ComponentKind.DIAMOND
    return ComponentKind.TYPE_III


def _attachments(comp: MultiGraph, x1: int) -> list[int]:
    xs = [v for v in range(comp.n) if comp.degree(v) == 2]
    if x1 not in xs:
        raise PreconditionViolatedError(
            f"designated attachment {x1} does not have degree 2 in its component"
        )
    return [x1] + [v for v in xs if v != x1]


def _check_independent(comp: MultiGraph, xs: list[int]) -> None:
    for i, u in enumerate(xs):
        for v in xs[i + 1:]:
            if comp.has_edge(u, v):
                raise InternalInvariantError(
                    f"attachment vertices {u} and {v} are adjacent; "
                    "the degree-2 set must be independent"
                )


def _odd_gadget(comp: MultiGraph, x1: int) -> tuple[int, int, int, int]:
    """Locate u, w (neighbors of x1) and their outer neighbors s, y."""
    nbrs = comp.neighbors(x1)
    if len(nbrs) != 2:
        raise PreconditionViolatedError(f"attachment {x1} has degree {len(nbrs)}")
    u, w = nbrs
    if not comp.has_edge(u, w):
        raise PreconditionViolatedError(
            f"neighbors {u}, {w} of attachment {x1} are not adjacent; "
            "the input graph cannot be claw-free"
        )
    s = next(z for z in comp.neighbors(u) if z not in (x1, w))
    y = next(z for z in comp.neighbors(w) if z not in (x1, u))
    if s == y:
        raise PreconditionViolatedError(
            "component is a diamond; the odd construction does not apply"
        )
    if comp.has_edge(s, y):
        raise PreconditionViolatedError(
            f"outer neighbors {s}, {y} are adjacent; impossible in a claw-free "
            "cubic graph"
        )
    return u, w, s, y


def _even_tilde(comp: MultiGraph, xs: list[int]) -> TildeConstruction:
    pairs = [(xs[i], xs[i + 1]) for i in range(0, len(xs), 2)]
    return TildeConstruction(
        parity="even",
        removed=(),
        added_edges=tuple(pairs),
        graph=comp.with_edges(pairs),
        to_component=tuple(range(comp.n)),
    )


def _odd_tilde(
    comp: MultiGraph, x1: int, u: int, w: int, s: int, y: int, xs: list[int]
) -> TildeConstruction:
    pairs = [(xs[i], xs[i + 1]) for i in range(1, len(xs), 2)]
    added = [(s, y)] + pairs
    keep = [v for v in range(comp.n) if v not in (x1, u, w)]
    sub, to_comp = comp.induced(keep)
    to_local = {gv: lv for lv, gv in enumerate(to_comp)}
    tilde = sub.with_edges([(to_local[a], to_local[b]) for a, b in added])
    return TildeConstruction(
        parity="odd",
        removed=(x1, u, w),
        added_edges=tuple(added),
        graph=tilde,
        to_component=tuple(to_comp),
    )


def _explicit_k4_completion(
    tilde: MultiGraph,
    to_comp: tuple[int, ...],
    s: int,
    y: int,
    root_style: bool,
) -> dict[int, int]:
    """Explicit coloring of {s, y} + two symmetric K4 partners.

    Returns component-local colors for the four tilde vertices.  The two
    non-s/y vertices are interchangeable; the smaller id plays the written
    role first.
    """
    others = sorted(
        to_comp[v]
        for v in range(tilde.n)
        if to_comp[v] not in (s, y)
    )
    z, a = others
    if root_style:
        # explicit root assignment: s -> 1b, y -> 1a, fourth -> 2a, apex -> 2b
        return {s: C1B, y: C1A, a: C2A, z: C2B}
    # explicit child assignment: apex -> 2a, fourth -> 2b, s -> 1a, y -> 1b
    return {s: C1A, y: C1B, z: C2A, a: C2B}


def _color_odd_component(
    comp: MultiGraph, xs: list[int], root_style: bool
) -> tuple[dict[int, int], TildeConstruction, frozenset[int]]:
    """Color a Type III component with an odd number of attachments.

    Returns (component-local colors with xs[0] -> 2a, tilde construction,
    component-local vertices on tilde diamonds).
    """
    x1 = xs[0]
    u, w, s, y = _odd_gadget(comp, x1)
    tc = _odd_tilde(comp, x1, u, w, s, y, xs)
    tilde, to_comp = tc.graph, tc.to_component
    to_local = {gv: lv for lv, gv in enumerate(to_comp)}
    colors: dict[int, int] = {}

    if is_k4(tilde):
        colors.update(_explicit_k4_completion(tilde, to_comp, s, y, root_style))
        if root_style:
            colors[u], colors[w] = C1A, C1B
        else:
            colors[u], colors[w] = C1B, C1A
        colors[x1] = C2A
        return colors, tc, frozenset()

    dec = oum_decompose(tilde)
    if dec.variant is Variant.K4:
        raise InternalInvariantError("K4 must be caught before decomposition")
    if dec.variant is Variant.RING:
        sub_col = color_ring_of_diamonds(tilde)
    else:
        sub_col = canonical_color_with_edge(
            tilde, dec, (to_local[s], to_local[y])
        )
    if {sub_col.assignment[to_local[s]], sub_col.assignment[to_local[y]]} != {C1A, C1B}:
        raise InternalInvariantError(
            "joined outer neighbors did not receive the two radius-1 colors"
        )
    if sub_col.assignment[to_local[s]] != C1A:
        sub_col = sub_col.transposed(C1A, C1B)
    for lv in range(tilde.n):
        colors[to_comp[lv]] = sub_col.assignment[lv]
    colors[u] = C1B
    colors[w] = C1A
    colors[x1] = C2A

    tilde_diamond_verts = frozenset(
        to_comp[v] for d in find_diamonds(tilde) for v in d.vertices
    )
    return colors, tc, tilde_diamond_verts


def _color_even_component(
    comp: MultiGraph, xs: list[int]
) -> tuple[dict[int, int], TildeConstruction, frozenset[int]]:
    """Color a Type III component with an even number of attachments."""
    tc = _even_tilde(comp, xs)
    tilde = tc.graph
    dec = oum_decompose(tilde)
    if dec.variant is not Variant.BUILT:
        raise InternalInvariantError(
            f"even completion produced variant {dec.variant}; expected built"
        )
    sub_col = canonical_color_with_matched_edge(tilde, dec, (xs[0], xs[1]))
    if sub_col.assignment[xs[0]] != C2A:
        sub_col = sub_col.transposed(C2A, C2B)
    tilde_diamond_verts = frozenset(
        v for d in find_diamonds(tilde) for v in d.vertices
    )
    return dict(sub_col.assignment), tc, tilde_diamond_verts


def color_root_component(comp: MultiGraph, v: int) -> PackingColoring:
    """Color the root component so its attachment vertex v gets 2a.

    The root is a Type III component with v as its only degree-2 vertex.
    """
    coloring, _, _ = _root_coloring_with_info(comp, v)
    return coloring


def _root_coloring_with_info(comp: MultiGraph, v: int):
    xs = _attachments(comp, v)
    if len(xs) != 1:
        raise PreconditionViolatedError(
            f"root component has {len(xs)} degree-2 vertices, expected exactly 1"
        )
    if _component_kind(comp) is not ComponentKind.TYPE_III:
        raise PreconditionViolatedError("root component must be of Type III")
    colors, tc, diamonds = _color_odd_component(comp, xs, root_style=True)
    coloring = PackingColoring(SPEC_1122, colors)
    _verify_component(comp, coloring)
    return coloring, tc, diamonds


def extend_component(comp: MultiGraph, x1: int, forced: int) -> PackingColoring:
    """Color one non-root component so that x1 gets the forced 2-class."""
    coloring, _, _ = _extension_with_info(comp, x1, forced)
    return coloring


def _extension_with_info(comp: MultiGraph, x1: int, forced: int):
    if forced not in (C2A, C2B):
        raise PreconditionViolatedError("forced color must be a radius-2 class")
    xs = _attachments(comp, x1)
    kind = _component_kind(comp)
    tc = None
    diamonds: frozenset[int] = frozenset()
    if kind is ComponentKind.TRIANGLE:
        others = [z for z in range(3) if z != x1]
        colors = {x1: forced, others[0]: C1A, others[1]: C1B}
    elif kind is ComponentKind.DIAMOND:
        ints = [z for z in range(4) if comp.degree(z) == 3]
        x2 = next(z for z in range(4) if comp.degree(z) == 2 and z != x1)
        colors = {
            ints[0]: C1A,
            ints[1]: C1B,
            x1: forced,
            x2: C2B if forced == C2A else C2A,
        }
        diamonds = frozenset(range(4))
    else:
        _check_independent(comp, xs)
        if len(xs) % 2 == 0:
            colors, tc, diamonds = _color_even_component(comp, xs)
        else:
            colors, tc, diamonds = _color_odd_component(comp, xs, root_style=False)
        if colors[x1] != forced:
            swapped = {C2A: C2B, C2B: C2A}
            colors = {v: swapped.get(c, c) for v, c in colors.items()}
    coloring = PackingColoring(SPEC_1122, colors)
    _verify_component(comp, coloring)
    return coloring, tc, diamonds


def _verify_component(comp: MultiGraph, coloring: PackingColoring) -> None:
    violations = verify(comp, SPEC_1122, coloring)
    if violations:
        raise VerificationFailedError(violations)


def free_two_color(g: MultiGraph, assignment: dict[int, int], attachment: int) -> int:
    """A radius-2 class absent from the colored closed neighborhood.

    `attachment` is the up-neighbor of the component about to be colored;
    its own component is already colored, the new component is not.
    """
    present = set()
    if attachment in assignment:
        present.add(assignment[attachment])
    for z in g.neighbors(attachment):
        if z in assignment:
            present.add(assignment[z])
    for candidate in (C2A, C2B):
        if candidate not in present:
            return candidate
    raise ClaimViolatedError(
        f"both radius-2 classes appear around attachment vertex {attachment}"
    )


def color_claw_free_cubic(g: MultiGraph) -> PackingColoring:
    """A verified (1,1,2,2)-coloring of a connected claw-free cubic graph."""
    if not g.is_simple():
        raise NotSimpleError("input must be a simple graph")
    if not is_connected(g):
        raise DisconnectedError("input graph is disconnected")
    if not is_cubic(g):
        raise NotCubicError("input graph is not cubic")
    claw = find_claw(g)
    if claw is not None:
        raise NotClawFreeError(claw)

    if not find_bridges(g):
        return color_two_edge_connected(g)

    bt = build_bridge_tree(g)
    assignment: dict[int, int] = {}
    # component-local diamond vertices of each completed component, in
    # global ids, for the no-diamond-at-up-neighbor invariant
    tilde_diamonds: dict[int, frozenset[int]] = {}

    order = sorted(range(len(bt.components)), key=lambda c: (bt.depth[c], c))
    for c in order:
        sub, to_global = g.induced(bt.components[c])
        to_local = {gv: lv for lv, gv in enumerate(to_global)}
        if c == bt.root:
            local_col, _, dia = _root_coloring_with_info(
                sub, to_local[bt.degree2[c][0]]
            )
        else:
            q = bt.up_neighbor[c]
            parent = bt.parent[c]
            if (
                bt.kinds[parent] is not ComponentKind.DIAMOND
                and q in tilde_diamonds.get(parent, frozenset())
            ):
                raise InternalInvariantError(
                    f"up-neighbor {q} lies on a diamond of its completed "
                    "component; contradicts the structure of claw-free cubic graphs"
                )
            forced = free_two_color(g, assignment, q)
            local_col, _, dia = _extension_with_info(
                sub, to_local[bt.up_vertex[c]], forced
            )
        tilde_diamonds[c] = frozenset(to_global[v] for v in dia)
        for lv, gv in enumerate(to_global):
            assignment[gv] = local_col.assignment[lv]

    coloring = PackingColoring(SPEC_1122, assignment)
    violations = verify(g, SPEC_1122, coloring)
    if violations:
        raise VerificationFailedError(violations)
    return coloring
