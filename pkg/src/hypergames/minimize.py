"""Bisimulation minimization for game graphs.

Partition refinement over two edge labels (Left moves and Right moves).
Two positions are equivalent when they lie in the same block of the coarsest
stable partition, i.e. when they are related by the largest two-label
bisimulation.  Every game-theoretic notion in this package (outcomes, order
relations, Grundy values) is invariant under this equivalence.
"""

from __future__ import annotations

from .graph import GameGraph, MoveSets, disjoint_union, reachable


def partition_classes(g: GameGraph) -> dict[str, int]:
    """Coarsest stable partition of ``g``'s positions, as position -> block index.

    Refinement is synchronous: each pass splits blocks by the set of blocks a
    position can reach per move label.  Block indices are assigned in order of
    first appearance over lexicographically sorted positions, so the result is
    deterministic.
    """
    order = g.ids()
    block = {p: 0 for p in order}
    n_blocks = 1
    while True:
        sigs: dict[str, tuple] = {}
        for p in order:
            ms = g.positions[p]
            sigs[p] = (
                block[p],
                frozenset(block[q] for q in ms.left),
                frozenset(block[q] for q in ms.right),
            )
        renumber: dict[tuple, int] = {}
        for p in order:
            renumber.setdefault(sigs[p], len(renumber))
        new_block = {p: renumber[sigs[p]] for p in order}
        if len(renumber) == n_blocks:
            return new_block
        block = new_block
        n_blocks = len(renumber)


def bisim_minimize(g: GameGraph) -> tuple[GameGraph, dict[str, str]]:
    """Quotient the reachable part of ``g`` by bisimilarity.

    Returns the quotient graph and the map from original position ids to
    quotient ids.  Quotient ids are the lexicographically least member of each
    block.  No two distinct quotient positions are bisimilar.
    """
    h = reachable(g)
    block = partition_classes(h)
    members: dict[int, list[str]] = {}
    for p in h.ids():
        members.setdefault(block[p], []).append(p)
    name = {b: min(ps) for b, ps in members.items()}
    quotient: dict[str, MoveSets] = {}
    for b, ps in members.items():
        # Stability of the partition makes every member agree on these sets.
        left = frozenset(name[block[q]] for p in ps for q in h.left(p))
        right = frozenset(name[block[q]] for p in ps for q in h.right(p))
        quotient[name[b]] = MoveSets(left, right)
    mapping = {p: name[block[p]] for p in h.ids()}
    return GameGraph(quotient, mapping[h.root]), mapping


def hyperbisimilar(g1: GameGraph, g2: GameGraph) -> bool:
    """True when the roots of the two graphs are bisimilar.

    Decided by refining the disjoint union of the two position sets, so the
    answer never depends on position names.
    """
    merged, r1, r2 = disjoint_union(g1, g2)
    block = partition_classes(merged)
    return block[r1] == block[r2]
