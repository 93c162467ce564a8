"""Coinductive order relations on games and the outcome classification.

The two relations ``ge`` ("at least as favourable for Left") and ``nge``
(its coinductive complement) are defined jointly as the greatest fixpoint of
one monotone step on pairs of relations:

    step(r1, r2).r1 = {(x, y) | every right move xR has (y, xR) in r2
                                and every left move yL has (yL, x) in r2}
    step(r1, r2).r2 = {(x, y) | some right move xR has (y, xR) in r1
                                or some left move yL has (yL, x) in r1}

On a finite universe the greatest fixpoint is reached by iterating the step
from the full pair of relations; every iteration shrinks the pair, so the
loop terminates.  On wellfounded games the fixpoint is unique and the pair
restricts to the classical inductive order.

Membership of the four pairs ``(x, 0)``, ``(0, x)`` in the two relations
yields the outcome profile of a game, which in turn determines one of nine
sectors: four where a single player (L, R, I or II) can force a win, four
where exactly two players can avoid losing, and a center where every player
can avoid losing.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from .graph import GameGraph, disjoint_union, game_sum, is_wellfounded, negate, single_position


@dataclass(frozen=True)
class RelationPair:
    """A candidate pair of relations over a universe of position ids."""

    r1: frozenset[tuple[str, str]]
    r2: frozenset[tuple[str, str]]
    universe: frozenset[str]

    def __post_init__(self) -> None:
        for rel in (self.r1, self.r2):
            for x, y in rel:
                if x not in self.universe or y not in self.universe:
                    raise ValueError(f"pair ({x!r}, {y!r}) escapes the universe")

    def pairs_sorted(self) -> tuple[list[tuple[str, str]], list[tuple[str, str]]]:
        """Both relations in lexicographic order, for reproducible reports."""
        return sorted(self.r1), sorted(self.r2)


def full_pair(g: GameGraph) -> RelationPair:
    """The top of the lattice: both relations full over ``g``'s positions."""
    ids = frozenset(g.positions)
    full = frozenset((x, y) for x in ids for y in ids)
    return RelationPair(full, full, ids)


def step_pair(rp: RelationPair, g: GameGraph) -> RelationPair:
    """One simultaneous update of both candidate relations over ``g``."""
    if rp.universe != frozenset(g.positions):
        raise ValueError("relation universe does not match the graph's positions")
    ids = sorted(rp.universe)
    r1 = set()
    r2 = set()
    for x in ids:
        xr = g.right(x)
        for y in ids:
            yl = g.left(y)
            if all((y, t) in rp.r2 for t in xr) and all((t, x) in rp.r2 for t in yl):
                r1.add((x, y))
            if any((y, t) in rp.r1 for t in xr) or any((t, x) in rp.r1 for t in yl):
                r2.add((x, y))
    return RelationPair(frozenset(r1), frozenset(r2), rp.universe)


def _adjacency(g: GameGraph, ids: list[str]) -> tuple[np.ndarray, np.ndarray]:
    idx = {p: i for i, p in enumerate(ids)}
    n = len(ids)
    ml = np.zeros((n, n), dtype=np.uint8)
    mr = np.zeros((n, n), dtype=np.uint8)
    for p in ids:
        for q in g.left(p):
            ml[idx[p], idx[q]] = 1
        for q in g.right(p):
            mr[idx[p], idx[q]] = 1
    return ml, mr


def _solve_arrays(g: GameGraph) -> tuple[list[str], np.ndarray, np.ndarray]:
    """Greatest fixpoint over ``g``'s positions as boolean matrices.

    Synchronous iteration from the full pair; both relations only ever
    shrink, so at most ``2 * n^2`` passes are needed and in practice far
    fewer.
    """
    ids = sorted(g.positions)
    ml, mr = _adjacency(g, ids)
    n = len(ids)
    r1 = np.ones((n, n), dtype=bool)
    r2 = np.ones((n, n), dtype=bool)
    while True:
        not_r2 = (~r2).astype(np.uint8)
        bad_right = (mr @ not_r2.T) > 0          # some xR with (y, xR) outside r2
        bad_left = ((ml @ not_r2) > 0).T         # some yL with (yL, x) outside r2
        n1 = ~bad_right & ~bad_left
        r1u = r1.astype(np.uint8)
        n2 = ((mr @ r1u.T) > 0) | (((ml @ r1u) > 0).T)
        if np.array_equal(n1, r1) and np.array_equal(n2, r2):
            return ids, r1, r2
        r1, r2 = n1, n2


@dataclass(frozen=True)
class SolvedPair:
    """Greatest-fixpoint relations over the disjoint union of two games."""

    pair: RelationPair
    root1: str
    root2: str


def solve_pair(g1: GameGraph, g2: Optional[GameGraph] = None) -> SolvedPair:
    """Greatest fixpoint over the disjoint union of ``g1`` and ``g2``.

    ``g2`` defaults to the one-position endgame, which is all the context
    needed to classify a single game.  Position ids are prefixed with ``a:``
    and ``b:`` to keep the two universes apart.
    """
    merged, r1id, r2id = disjoint_union(g1, g2 if g2 is not None else single_position())
    ids, r1, r2 = _solve_arrays(merged)
    idx = {p: i for i, p in enumerate(ids)}
    pairs1 = frozenset((ids[i], ids[j]) for i, j in zip(*np.nonzero(r1)))
    pairs2 = frozenset((ids[i], ids[j]) for i, j in zip(*np.nonzero(r2)))
    rp = RelationPair(pairs1, pairs2, frozenset(ids))
    assert r1id in idx and r2id in idx
    return SolvedPair(rp, r1id, r2id)


def _solve_flags(g1: GameGraph, g2: Optional[GameGraph]) -> tuple[bool, bool, bool, bool]:
    """(root1 r1 root2, root1 r2 root2, root2 r1 root1, root2 r2 root1)."""
    merged, r1id, r2id = disjoint_union(g1, g2 if g2 is not None else single_position())
    ids, r1, r2 = _solve_arrays(merged)
    idx = {p: i for i, p in enumerate(ids)}
    i, j = idx[r1id], idx[r2id]
    return bool(r1[i, j]), bool(r2[i, j]), bool(r1[j, i]), bool(r2[j, i])


def ge(g1: GameGraph, g2: GameGraph) -> bool:
    """Root of ``g1`` related to root of ``g2`` by the greatest-fixpoint r1."""
    return _solve_flags(g1, g2)[0]


def nge(g1: GameGraph, g2: GameGraph) -> bool:
    """Root of ``g1`` related to root of ``g2`` by the greatest-fixpoint r2."""
    return _solve_flags(g1, g2)[1]


@dataclass(frozen=True)
class OutcomeProfile:
    """Four booleans classifying a game against the endgame.

    ``a``: game r1 0 - Left as second player can avoid losing.
    ``b``: 0 r2 game - Left as first player can avoid losing.
    ``c``: 0 r1 game - Right as second player can avoid losing.
    ``d``: game r2 0 - Right as first player can avoid losing.
    """

    a: bool
    b: bool
    c: bool
    d: bool

    def __post_init__(self) -> None:
        if not ((self.a or self.d) and (self.b or self.c)):
            raise ValueError(f"impossible outcome profile {self.as_tuple()}")

    def as_tuple(self) -> tuple[bool, bool, bool, bool]:
        return (self.a, self.b, self.c, self.d)


class Player(str, Enum):
    L = "L"
    R = "R"
    I = "I"  # noqa: E741 - the first player really is called I
    II = "II"


class Sector(str, Enum):
    """The nine outcome classes of the space of games."""

    WIN_L = "WinL"
    WIN_R = "WinR"
    WIN_I = "WinI"
    WIN_II = "WinII"
    NL_L_II = "NL_L_II"
    NL_L_I = "NL_L_I"
    NL_R_I = "NL_R_I"
    NL_R_II = "NL_R_II"
    NL_ALL = "NL_All"


_SECTOR_BY_PROFILE: dict[tuple[bool, bool, bool, bool], Sector] = {
    (True, True, False, False): Sector.WIN_L,
    (False, False, True, True): Sector.WIN_R,
    (True, False, True, False): Sector.WIN_II,
    (False, True, False, True): Sector.WIN_I,
    (True, True, True, False): Sector.NL_L_II,
    (True, True, False, True): Sector.NL_L_I,
    (True, False, True, True): Sector.NL_R_II,
    (False, True, True, True): Sector.NL_R_I,
    (True, True, True, True): Sector.NL_ALL,
}

_WINNER: dict[Sector, Player] = {
    Sector.WIN_L: Player.L,
    Sector.WIN_R: Player.R,
    Sector.WIN_I: Player.I,
    Sector.WIN_II: Player.II,
}


@dataclass(frozen=True)
class Classification:
    sector: Sector
    nonlosing: tuple[Player, ...]
    winning: Optional[Player]


def outcome_profile(g: GameGraph) -> OutcomeProfile:
    """Profile of ``g`` from one fixpoint computation against the endgame."""
    f_a, f_d, f_c, f_b = _solve_flags(g, None)
    return OutcomeProfile(a=f_a, b=f_b, c=f_c, d=f_d)


def classify(p: OutcomeProfile) -> Classification:
    """Sector, non-losing player set and winner (if any) of a profile."""
    sector = _SECTOR_BY_PROFILE.get(p.as_tuple())
    if sector is None:
        raise ValueError(f"inconsistent outcome profile {p.as_tuple()}")
    nonlosing = tuple(
        player
        for player, flag in (
            (Player.L, p.a and p.b),
            (Player.R, p.c and p.d),
            (Player.I, p.b and p.d),
            (Player.II, p.a and p.c),
        )
        if flag
    )
    return Classification(sector, nonlosing, _WINNER.get(sector))


def sector_of(g: GameGraph) -> Sector:
    return classify(outcome_profile(g)).sector


def equidetermined(g1: GameGraph, g2: GameGraph) -> bool:
    """True when both games lie in the same outcome sector."""
    return sector_of(g1) == sector_of(g2)


def conway_sim(g1: GameGraph, g2: GameGraph) -> bool:
    """Classical game equivalence: mutual ``ge``; defined on wellfounded games only.

    Cyclic inputs are rejected because mutual ``ge`` fails to be transitive
    once unlimited plays are available, so it is not an equivalence there.
    """
    if not is_wellfounded(g1) or not is_wellfounded(g2):
        raise ValueError("conway_sim requires wellfounded games")
    f = _solve_flags(g1, g2)
    return f[0] and f[2]


def well_behaved(g: GameGraph) -> bool:
    """True when the game minus itself is a second-player win."""
    return sector_of(game_sum(g, negate(g))) == Sector.WIN_II


def contextual_probe(
    g1: GameGraph, g2: GameGraph, contexts: Sequence[GameGraph]
) -> Optional[GameGraph]:
    """Search the given contexts for one whose sum tells the two games apart.

    Returns the first witness context, or ``None`` when every supplied
    context leaves the sums equidetermined.  This is a semi-decision: a
    ``None`` answer only covers the supplied family.
    """
    for z in contexts:
        if not equidetermined(game_sum(g1, z), game_sum(g2, z)):
            return z
    return None
