"""Finite two-player game graphs and their structural operations.

A game is a finite directed graph over named positions.  Each position
carries a set of Left-move targets and a set of Right-move targets, and one
position is distinguished as the root.  Cycles are allowed: a play that never
ends is a draw, so none of the operations here assume wellfoundedness.

Position ids are opaque strings.  Their lexicographic order is used only to
make outputs deterministic; identity of ids across two different graphs
carries no meaning (cross-graph comparison goes through bisimulation, see
``minimize``).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping


class Side(str, Enum):
    """One of the two movers, Left or Right."""

    L = "L"
    R = "R"

    @property
    def opponent(self) -> "Side":
        return Side.R if self is Side.L else Side.L


@dataclass(frozen=True)
class MoveSets:
    """Left and Right move targets available at one position."""

    left: frozenset[str] = frozenset()
    right: frozenset[str] = frozenset()

    @staticmethod
    def of(left: Iterable[str] = (), right: Iterable[str] = ()) -> "MoveSets":
        return MoveSets(frozenset(left), frozenset(right))

    def for_side(self, side: Side) -> frozenset[str]:
        return self.left if side is Side.L else self.right


@dataclass(frozen=True, eq=False)
class GameGraph:
    """Immutable game: a finite map of positions plus a root id.

    Values are treated as immutable after construction; all operations in
    this package are pure functions returning fresh graphs.
    """

    positions: Mapping[str, MoveSets]
    root: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", dict(self.positions))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GameGraph):
            return NotImplemented
        return self.root == other.root and dict(self.positions) == dict(other.positions)

    def __repr__(self) -> str:
        return f"GameGraph({len(self.positions)} positions, root={self.root!r})"

    @staticmethod
    def build(moves: Mapping[str, tuple[Iterable[str], Iterable[str]]], root: str) -> "GameGraph":
        """Convenience constructor from ``{id: (left_targets, right_targets)}``."""
        return GameGraph(
            {p: MoveSets.of(left, right) for p, (left, right) in moves.items()}, root
        )

    @staticmethod
    def impartial(moves: Mapping[str, Iterable[str]], root: str) -> "GameGraph":
        """Constructor for games where both sides share the same moves."""
        return GameGraph({p: MoveSets.of(ts, ts) for p, ts in moves.items()}, root)

    def left(self, p: str) -> frozenset[str]:
        return self.positions[p].left

    def right(self, p: str) -> frozenset[str]:
        return self.positions[p].right

    def moves(self, p: str, side: Side) -> frozenset[str]:
        return self.positions[p].for_side(side)

    def ids(self) -> list[str]:
        return sorted(self.positions)


def single_position(name: str = "0") -> GameGraph:
    """The endgame: one position, no moves for either side."""
    return GameGraph({name: MoveSets()}, name)


def validate(g: GameGraph) -> list[str]:
    """Check structural invariants; an empty report means the graph is valid.

    Reported violations: empty position map, root not declared, move targets
    that name undeclared positions.
    """
    report: list[str] = []
    if not g.positions:
        report.append("graph has no positions")
        return report
    if g.root not in g.positions:
        report.append(f"root {g.root!r} is not a declared position")
    for p in g.ids():
        ms = g.positions[p]
        for side, targets in (("left", ms.left), ("right", ms.right)):
            for q in sorted(targets):
                if q not in g.positions:
                    report.append(f"{side} move {p!r} -> {q!r} targets an undeclared position")
    return report


def reachable(g: GameGraph) -> GameGraph:
    """Restrict ``g`` to the positions reachable from its root."""
    seen = {g.root}
    queue = deque([g.root])
    while queue:
        p = queue.popleft()
        ms = g.positions[p]
        for q in sorted(ms.left | ms.right):
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return GameGraph({p: g.positions[p] for p in sorted(seen)}, g.root)


def is_impartial(g: GameGraph) -> bool:
    """True when every reachable position offers both sides the same moves."""
    h = reachable(g)
    return all(ms.left == ms.right for ms in h.positions.values())


def is_wellfounded(g: GameGraph) -> bool:
    """True when the reachable move graph (either side) is acyclic."""
    h = reachable(g)
    WHITE, GREY, BLACK = 0, 1, 2
    color = {p: WHITE for p in h.positions}
    for start in h.ids():
        if color[start] != WHITE:
            continue
        stack: list[tuple[str, Iterable[str]]] = [(start, iter(sorted(h.left(start) | h.right(start))))]
        color[start] = GREY
        while stack:
            node, it = stack[-1]
            advanced = False
            for q in it:
                if color[q] == GREY:
                    return False
                if color[q] == WHITE:
                    color[q] = GREY
                    stack.append((q, iter(sorted(h.left(q) | h.right(q)))))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()
    return True


def negate(g: GameGraph) -> GameGraph:
    """Swap the two sides' move sets at every position; ids are preserved."""
    return GameGraph(
        {p: MoveSets(ms.right, ms.left) for p, ms in g.positions.items()}, g.root
    )


def _pair_id(p: str, q: str) -> str:
    # Debug-friendly composite id; unambiguous for ids that avoid "|".
    return f"{p}|{q}"


def game_sum(g1: GameGraph, g2: GameGraph) -> GameGraph:
    """Disjunctive sum: the mover picks a component and moves in it.

    Only pairs reachable from ``(root1, root2)`` are materialized, which keeps
    the product at most ``|g1| * |g2|`` positions.
    """
    root = (g1.root, g2.root)
    seen = {root}
    queue = deque([root])
    out: dict[str, MoveSets] = {}
    while queue:
        p, q = queue.popleft()
        left = {(pl, q) for pl in g1.left(p)} | {(p, ql) for ql in g2.left(q)}
        right = {(pr, q) for pr in g1.right(p)} | {(p, qr) for qr in g2.right(q)}
        out[_pair_id(p, q)] = MoveSets(
            frozenset(_pair_id(a, b) for a, b in left),
            frozenset(_pair_id(a, b) for a, b in right),
        )
        for pair in sorted(left | right):
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    return GameGraph(out, _pair_id(*root))


def disjoint_union(g1: GameGraph, g2: GameGraph, tag1: str = "a:", tag2: str = "b:") -> tuple[GameGraph, str, str]:
    """Merge two graphs over prefixed ids; returns the merged graph and both tagged roots.

    The merged root is set to the first graph's root (callers that need both
    entry points use the returned tagged ids).
    """

    def retag(g: GameGraph, tag: str) -> dict[str, MoveSets]:
        return {
            tag + p: MoveSets(
                frozenset(tag + q for q in ms.left),
                frozenset(tag + q for q in ms.right),
            )
            for p, ms in g.positions.items()
        }

    merged = retag(g1, tag1)
    merged.update(retag(g2, tag2))
    return GameGraph(merged, tag1 + g1.root), tag1 + g1.root, tag2 + g2.root
