"""Arena-based outcome oracle, positional strategies, play and verification.

The arena of a game pairs every position with the side to move.  Non-losing
regions are safety objectives (greatest fixpoints, computed by iterated
removal); winning regions are reachability objectives (least fixpoints,
computed as attractors with ranks).  This solver is independent from the
relation-based classification in ``order`` - the two must agree, and that
agreement is one of the package's core cross-checks.

Strategies are positional: a partial choice map from positions to move
targets for one side.  A bundle groups the role strategies that make up a
player (the first/second-player roles of each side).  Verification explores
every play coherent with the strategy against an arbitrary opponent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .graph import GameGraph, Side, game_sum, negate
from .order import Classification, OutcomeProfile, Player, Sector, classify

Node = tuple[str, Side]


class Role(str, Enum):
    """A side together with whether it moved first or second."""

    LI = "LI"
    LII = "LII"
    RI = "RI"
    RII = "RII"

    @property
    def side(self) -> Side:
        return Side.L if self in (Role.LI, Role.LII) else Side.R

    @property
    def opener(self) -> Side:
        """The side that opens the play this role belongs to."""
        if self is Role.LI:
            return Side.L
        if self is Role.RI:
            return Side.R
        return Side.R if self is Role.LII else Side.L


_ROLES: dict[Player, tuple[Role, Role]] = {
    Player.L: (Role.LI, Role.LII),
    Player.R: (Role.RI, Role.RII),
    Player.I: (Role.LI, Role.RI),
    Player.II: (Role.LII, Role.RII),
}


@dataclass(frozen=True)
class ArenaSolution:
    """Per-node survival and forced-win flags for both sides."""

    graph: GameGraph
    nonlosing: dict[Side, frozenset[Node]]
    winning: dict[Side, frozenset[Node]]
    rank: dict[Side, dict[Node, int]]

    def profile_at(self, p: str) -> OutcomeProfile:
        nl_l = self.nonlosing[Side.L]
        nl_r = self.nonlosing[Side.R]
        return OutcomeProfile(
            a=(p, Side.R) in nl_l,
            b=(p, Side.L) in nl_l,
            c=(p, Side.L) in nl_r,
            d=(p, Side.R) in nl_r,
        )


def _safety(g: GameGraph, me: Side) -> frozenset[Node]:
    """Greatest set of nodes from which ``me`` never gets stuck on move.

    Closure conditions: at my turn some move stays inside the set; at the
    opponent's turn either they are stuck (I win) or all their moves stay
    inside.
    """
    nodes: set[Node] = {(p, s) for p in g.positions for s in Side}
    alive = set(nodes)
    changed = True
    while changed:
        changed = False
        for p, s in sorted(nodes, key=lambda n: (n[0], n[1].value)):
            if (p, s) not in alive:
                continue
            moves = g.moves(p, s)
            if s is me:
                ok = any((q, s.opponent) in alive for q in moves)
            else:
                ok = not moves or all((q, s.opponent) in alive for q in moves)
            if not ok:
                alive.discard((p, s))
                changed = True
    return frozenset(alive)


def _attractor(g: GameGraph, me: Side) -> tuple[frozenset[Node], dict[Node, int]]:
    """Least set of nodes from which ``me`` can force the opponent stuck, with ranks.

    Rank 0: opponent to move and stuck.  At my turn the rank is one more than
    the best winning move; at theirs, one more than their worst escape.
    """
    opp = me.opponent
    rank: dict[Node, int] = {}
    pending: dict[Node, int] = {}
    preds: dict[Node, list[Node]] = {}
    for p in g.positions:
        for s in Side:
            for q in g.moves(p, s):
                preds.setdefault((q, s.opponent), []).append((p, s))
    frontier: list[Node] = []
    for p in sorted(g.positions):
        if not g.moves(p, opp):
            rank[(p, opp)] = 0
            frontier.append((p, opp))
    for p in g.positions:
        pending[(p, opp)] = len(g.moves(p, opp))
    i = 0
    while i < len(frontier):
        node = frontier[i]
        i += 1
        for pred in preds.get(node, ()):  # pred moves into node
            if pred in rank:
                continue
            p, s = pred
            if s is me:
                rank[pred] = rank[node] + 1
                frontier.append(pred)
            else:
                pending[pred] -= 1
                if pending[pred] == 0:
                    rank[pred] = 1 + max(rank[(q, me)] for q in g.moves(p, s))
                    frontier.append(pred)
    return frozenset(rank), rank


def solve_arena(g: GameGraph) -> ArenaSolution:
    """Solve safety and reachability for both sides over all declared positions."""
    nonlosing = {side: _safety(g, side) for side in Side}
    winning = {}
    rank = {}
    for side in Side:
        won, ranks = _attractor(g, side)
        winning[side] = won
        rank[side] = ranks
    for side in Side:
        assert winning[side] <= nonlosing[side]
    return ArenaSolution(g, nonlosing, winning, rank)


def profile_from_arena(g: GameGraph) -> OutcomeProfile:
    """Outcome profile read off the arena flags at the root."""
    return solve_arena(g).profile_at(g.root)


def classify_from_arena(g: GameGraph) -> Classification:
    return classify(profile_from_arena(g))


@dataclass(frozen=True)
class PositionalStrategy:
    """A choice map for one side: position -> chosen move target."""

    side: Side
    choice: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class StrategyBundle:
    """The role strategies composing one player."""

    player: Player
    roles: dict[Role, PositionalStrategy]


def _player_nonlosing(sol: ArenaSolution, root: str, player: Player) -> bool:
    p = sol.profile_at(root)
    return {
        Player.L: p.a and p.b,
        Player.R: p.c and p.d,
        Player.I: p.b and p.d,
        Player.II: p.a and p.c,
    }[player]


def _player_winning(sol: ArenaSolution, root: str, player: Player) -> bool:
    sector = classify(sol.profile_at(root)).sector
    return {
        Player.L: Sector.WIN_L,
        Player.R: Sector.WIN_R,
        Player.I: Sector.WIN_I,
        Player.II: Sector.WIN_II,
    }[player] == sector


def _safe_choices(g: GameGraph, sol: ArenaSolution, side: Side) -> dict[str, str]:
    region = sol.nonlosing[side]
    choice: dict[str, str] = {}
    for p in sorted(g.positions):
        if (p, side) in region and g.moves(p, side):
            safe = sorted(q for q in g.moves(p, side) if (q, side.opponent) in region)
            if safe:
                choice[p] = safe[0]
    return choice


def _winning_choices(g: GameGraph, sol: ArenaSolution, side: Side) -> dict[str, str]:
    region = sol.winning[side]
    ranks = sol.rank[side]
    choice: dict[str, str] = {}
    for p in sorted(g.positions):
        if (p, side) in region and g.moves(p, side):
            # Rank must strictly decrease or play could circle inside the region.
            best = min(
                ((ranks[(q, side.opponent)], q)
                 for q in g.moves(p, side)
                 if (q, side.opponent) in region),
                default=None,
            )
            if best is not None:
                choice[p] = best[1]
    return choice


def synthesize_nonlosing(g: GameGraph, player: Player) -> Optional[StrategyBundle]:
    """Positional strategies letting ``player`` avoid losing, or ``None``.

    A bundle exists exactly when the player's non-losing flag is set; each
    role's choice steers into the safety region, breaking ties toward the
    smallest target id.
    """
    sol = solve_arena(g)
    if not _player_nonlosing(sol, g.root, player):
        return None
    roles = {
        role: PositionalStrategy(role.side, _safe_choices(g, sol, role.side))
        for role in _ROLES[player]
    }
    return StrategyBundle(player, roles)


def synthesize_winning(g: GameGraph, player: Player) -> Optional[StrategyBundle]:
    """Positional strategies forcing a win for ``player``, or ``None``."""
    sol = solve_arena(g)
    if not _player_winning(sol, g.root, player):
        return None
    roles = {
        role: PositionalStrategy(role.side, _winning_choices(g, sol, role.side))
        for role in _ROLES[player]
    }
    return StrategyBundle(player, roles)


@dataclass(frozen=True)
class PlayVerdict:
    """Result of one simulated play: the winner or a draw, plus the trace."""

    result: str  # "WinL" | "WinR" | "Draw"
    trace: list[Node]
    repeated: Optional[Node] = None


def legal_moves(g: GameGraph, p: str, side: Side) -> frozenset[str]:
    """The side's move targets at ``p``; raises ``KeyError`` on unknown ids."""
    if p not in g.positions:
        raise KeyError(f"unknown position {p!r}")
    return g.moves(p, side)


def _needed_roles(opener: Side) -> dict[Side, Role]:
    return {
        Side.L: Role.LI if opener is Side.L else Role.LII,
        Side.R: Role.RI if opener is Side.R else Role.RII,
    }


def play(
    g: GameGraph,
    strat: StrategyBundle,
    counter: StrategyBundle,
    opener: Side,
) -> PlayVerdict:
    """Run the unique play coherent with both bundles from the root.

    The two bundles must cover opposite sides for this opener.  The play ends
    when the mover is stuck (the other side wins) or as soon as a
    (position, mover) state repeats: positional strategies make any longer
    play periodic, so a repeat is already a draw.
    """
    needed = _needed_roles(opener)
    actors: dict[Side, PositionalStrategy] = {}
    for side, role in needed.items():
        owners = [b for b in (strat, counter) if role in b.roles]
        if len(owners) != 1:
            raise ValueError(f"exactly one bundle must provide role {role.value}")
        actors[side] = owners[0].roles[role]
    state: Node = (g.root, opener)
    seen = {state}
    trace = [state]
    while True:
        p, mover = state
        moves = g.moves(p, mover)
        if not moves:
            return PlayVerdict("WinL" if mover is Side.R else "WinR", trace)
        target = actors[mover].choice.get(p)
        if target is None or target not in moves:
            raise ValueError(f"strategy for side {mover.value} undefined or illegal at {p!r}")
        state = (target, mover.opponent)
        trace.append(state)
        if state in seen:
            return PlayVerdict("Draw", trace, repeated=state)
        seen.add(state)


def _explore_role(
    g: GameGraph, strat: PositionalStrategy, role: Role
) -> tuple[bool, bool]:
    """(never stuck, no infinite play) for this role against all opponents."""
    us = role.side
    start: Node = (g.root, role.opener)
    seen: set[Node] = set()
    edges: dict[Node, list[Node]] = {}
    stack = [start]
    seen.add(start)
    never_stuck = True
    while stack:
        p, mover = stack.pop()
        moves = g.moves(p, mover)
        if mover is us:
            if not moves:
                never_stuck = False
                continue
            target = strat.choice.get(p)
            if target is None or target not in moves:
                raise ValueError(
                    f"strategy for role {role.value} undefined or illegal at {p!r}"
                )
            nexts = [(target, mover.opponent)]
        else:
            nexts = [(q, mover.opponent) for q in sorted(moves)]
        edges[(p, mover)] = nexts
        for nxt in nexts:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    # Cycle check over the reachable coherent-state graph.
    WHITE, GREY, BLACK = 0, 1, 2
    color = {n: WHITE for n in seen}
    acyclic = True
    for start_node in seen:
        if color[start_node] != WHITE:
            continue
        dfs: list[tuple[Node, int]] = [(start_node, 0)]
        color[start_node] = GREY
        while dfs:
            node, i = dfs[-1]
            succs = edges.get(node, [])
            if i < len(succs):
                dfs[-1] = (node, i + 1)
                nxt = succs[i]
                if color[nxt] == GREY:
                    acyclic = False
                elif color[nxt] == WHITE:
                    color[nxt] = GREY
                    dfs.append((nxt, 0))
            else:
                color[node] = BLACK
                dfs.pop()
    return never_stuck, acyclic


def verify_strategy(
    g: GameGraph, bundle: StrategyBundle, player: Player, claim: str
) -> bool:
    """Exhaustively check a bundle against every opponent behaviour.

    ``claim`` is ``"nonlosing"`` (the player is never stuck on move) or
    ``"winning"`` (additionally every coherent play is finite, hence ends
    with the opponent stuck).
    """
    if claim not in ("nonlosing", "winning"):
        raise ValueError(f"unknown claim {claim!r}")
    for role in _ROLES[player]:
        if role not in bundle.roles:
            raise ValueError(f"bundle for player {player.value} lacks role {role.value}")
        never_stuck, acyclic = _explore_role(g, bundle.roles[role], role)
        if not never_stuck:
            return False
        if claim == "winning" and not acyclic:
            return False
    return True


def engine_choice(g: GameGraph, sol: ArenaSolution, p: str, side: Side) -> Optional[str]:
    """Best-effort move for an automated player: win if possible, else stay
    safe, else any legal move; deterministic tie-breaks."""
    moves = g.moves(p, side)
    if not moves:
        return None
    opp = side.opponent
    winning = [(sol.rank[side][(q, opp)], q) for q in moves if (q, opp) in sol.winning[side]]
    if winning:
        return min(winning)[1]
    safe = sorted(q for q in moves if (q, opp) in sol.nonlosing[side])
    if safe:
        return safe[0]
    return min(moves)


def make_copycat(g: GameGraph) -> StrategyBundle:
    """The mirror strategy for the second player on ``game_sum(g, negate(g))``.

    At any unbalanced pair the responder restores symmetry by replaying the
    opener's last move in the other component.
    """
    board = game_sum(g, negate(g))
    choices: dict[Side, dict[str, str]] = {Side.L: {}, Side.R: {}}
    for pos in sorted(board.positions):
        u, v = pos.split("|", 1)
        for side in Side:
            if u == v:
                # The opener replayed a self-loop; mirror it on the other side.
                if pos in board.moves(pos, side):
                    choices[side][pos] = pos
                continue
            balanced = sorted(
                q for q in board.moves(pos, side) if q == f"{v}|{v}" or q == f"{u}|{u}"
            )
            if balanced:
                choices[side][pos] = balanced[0]
    return StrategyBundle(
        Player.II,
        {
            Role.LII: PositionalStrategy(Side.L, choices[Side.L]),
            Role.RII: PositionalStrategy(Side.R, choices[Side.R]),
        },
    )
