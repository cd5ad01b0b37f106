"""Shared corpus of claw-free cubic test graphs.

The corpus is deterministic (seeded SplitMix64) and spans the shapes the
algorithms branch on: K4, rings, triangle expansions with and without
diamond strings over small multigraphs (including digon and triple-edge
H), and bridged assemblies with K3 / diamond / Type III components.
"""

from __future__ import annotations

import pytest

from clawcolor import (
    ExpansionSpec,
    MultiGraph,
    expand_to_clawfree,
    fixtures,
    gen_bridged,
    gen_cubic_multigraph,
    gen_ring_of_diamonds,
)
from clawcolor.rng import SplitMix64

from brute import relabeled

MAX_CORPUS_N = 24


def _bounded_spec(h: MultiGraph, rng: SplitMix64, budget: int) -> ExpansionSpec:
    """Random string lengths with a bounded total, spread over the slots."""
    lengths = {s: 0 for s in h.slots()}
    slots = list(lengths)
    while budget > 0 and rng.randrange(3):
        lengths[slots[rng.randrange(len(slots))]] += 1
        budget -= 1
    return ExpansionSpec(lengths)


def _build_base_corpus() -> list[tuple[str, MultiGraph]]:
    out: list[tuple[str, MultiGraph]] = []
    fx = fixtures()
    out.append(("k4", fx["k4"]))
    out.append(("prism", fx["prism"]))
    out.append(("bridged_star", fx["bridged_star"]))

    for k in range(2, 7):
        out.append((f"ring{k}", gen_ring_of_diamonds(k)))

    # triangle expansions over random H, total size capped at MAX_CORPUS_N
    for i, (n_h, seed) in enumerate(
        (n_h, seed) for seed in range(10) for n_h in (2, 4, 6, 8)
    ):
        rng = SplitMix64(0xE0 + seed * 37 + n_h)
        h = gen_cubic_multigraph(n_h, rng)
        budget = (MAX_CORPUS_N - 3 * n_h) // 4
        g = expand_to_clawfree(h, _bounded_spec(h, rng, budget), rng)
        assert g.n <= MAX_CORPUS_N
        out.append((f"expansion{i}_h{n_h}", g))

    # bridged assemblies, keeping only results that fit the size cap
    specs = [
        ("two_leaves", [("type3", 1), ("type3", 1)]),
        ("leaf_diamond_leaf", [("type3", 1), ("diamond", 2), ("type3", 1)]),
        ("k3_star", [("k3", 3), ("type3", 1), ("type3", 1), ("type3", 1)]),
        ("leaf_t2_leaf", [("type3", 1), ("type3", 2), ("type3", 1)]),
        (
            "diamond_chain",
            [("type3", 1), ("diamond", 2), ("diamond", 2), ("type3", 1)],
        ),
    ]
    for label, spec in specs:
        found = 0
        for seed in range(160):
            g = gen_bridged(spec, SplitMix64(0xB000 + seed))
            if g.n <= MAX_CORPUS_N:
                out.append((f"{label}_{found}", g))
                found += 1
            if found == 6:
                break
        assert found > 0, f"no small instance for {label}"
    return out


def _with_relabelings(
    base: list[tuple[str, MultiGraph]], copies: int
) -> list[tuple[str, MultiGraph]]:
    out = list(base)
    rng = SplitMix64(0x5EED)
    for name, g in base:
        for j in range(copies):
            perm = list(range(g.n))
            rng.shuffle(perm)
            out.append((f"{name}_relabel{j}", relabeled(g, perm)))
    return out


@pytest.fixture(scope="session")
def named_fixtures():
    return fixtures()


@pytest.fixture(scope="session")
def base_corpus():
    return _build_base_corpus()


@pytest.fixture(scope="session")
def corpus(base_corpus):
    """At least 500 claw-free cubic graphs with n <= MAX_CORPUS_N."""
    copies = max(1, (520 + len(base_corpus) - 1) // len(base_corpus))
    full = _with_relabelings(base_corpus, copies)
    assert len(full) >= 500
    return full
