"""Grundy theory for impartial games, including loopy ones.

Wellfounded impartial games carry the classical natural-number Grundy value
(the mex of the successors' values).  Loopy impartial games extend this with
infinite values ``inf{K}``: positions from which no finite value is
attainable, annotated with the set ``K`` of finite values reachable in one
move.  The marking is computed as the least fixpoint of a one-pass operator
over partial markings; taking the least fixpoint matters, because other
fixpoints exist on cyclic graphs and they mis-classify outcomes.

Two impartial games are interchangeable under every sum context exactly when
their root values coincide, which makes the marking a compositional,
fully abstract semantics; sums of values are computed by the (generalized)
Nim sum without expanding the sum graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .graph import GameGraph, MoveSets, is_impartial, is_wellfounded, negate, reachable, game_sum
from .order import Sector, sector_of

Marking = dict[str, Optional[int]]


@dataclass(frozen=True)
class GrundyValue:
    """A natural number, or an infinite value tagged with its finite escapes.

    ``nat`` is ``None`` for infinite values; ``escapes`` is the set of finite
    values reachable in one move (empty for the plain infinite value) and is
    meaningful only when ``nat`` is ``None``.
    """

    nat: Optional[int]
    escapes: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.nat is not None and self.escapes:
            raise ValueError("finite values carry no escape set")

    @staticmethod
    def of(n: int) -> "GrundyValue":
        return GrundyValue(nat=n)

    @staticmethod
    def loopy(escapes: Iterable[int] = ()) -> "GrundyValue":
        return GrundyValue(nat=None, escapes=frozenset(escapes))

    @property
    def is_finite(self) -> bool:
        return self.nat is not None

    def text(self) -> str:
        """Canonical textual form: decimal digits, ``inf`` or ``inf{k1,k2,...}``."""
        if self.nat is not None:
            return str(self.nat)
        if not self.escapes:
            return "inf"
        return "inf{" + ",".join(str(k) for k in sorted(self.escapes)) + "}"

    def __str__(self) -> str:
        return self.text()


_VALUE_RE = re.compile(r"^(?:(\d+)|inf(?:\{(\d+(?:,\d+)*)\})?)$")


def parse_value(text: str) -> GrundyValue:
    """Inverse of ``GrundyValue.text``."""
    m = _VALUE_RE.match(text)
    if not m:
        raise ValueError(f"not a Grundy value: {text!r}")
    if m.group(1) is not None:
        return GrundyValue.of(int(m.group(1)))
    if m.group(2) is None:
        return GrundyValue.loopy()
    return GrundyValue.loopy(int(k) for k in m.group(2).split(","))


def mex(values: Iterable[int]) -> int:
    """Least natural number not in ``values``."""
    present = set(values)
    n = 0
    while n in present:
        n += 1
    return n


def nim_sum(m: int, n: int) -> int:
    """Binary addition without carries."""
    return m ^ n


def gen_nim_sum(v: GrundyValue, w: GrundyValue) -> GrundyValue:
    """Nim sum extended to infinite values.

    A finite value shifts an infinite value's escape set pointwise; the sum
    of two infinite values has no finite escapes at all.
    """
    if v.is_finite and w.is_finite:
        return GrundyValue.of(nim_sum(v.nat, w.nat))
    if v.is_finite:
        return GrundyValue.loopy(nim_sum(k, v.nat) for k in w.escapes)
    if w.is_finite:
        return GrundyValue.loopy(nim_sum(k, w.nat) for k in v.escapes)
    return GrundyValue.loopy()


def _require_impartial(g: GameGraph) -> GameGraph:
    h = reachable(g)
    if not all(ms.left == ms.right for ms in h.positions.values()):
        raise ValueError("impartial game required")
    return h


def grundy_wf(g: GameGraph) -> int:
    """Classical Grundy value of a wellfounded impartial game's root."""
    h = _require_impartial(g)
    if not is_wellfounded(h):
        raise ValueError("wellfounded game required")
    memo: dict[str, int] = {}
    stack: list[tuple[str, bool]] = [(h.root, False)]
    while stack:
        p, expanded = stack.pop()
        if p in memo:
            continue
        if expanded:
            memo[p] = mex(memo[q] for q in h.left(p))
        else:
            stack.append((p, True))
            stack.extend((q, False) for q in sorted(h.left(p)) if q not in memo)
    return memo[h.root]


def marking_step(g: GameGraph, marking: Marking) -> Marking:
    """One pass of the marking operator over a partial marking.

    A position obtains the mex of its marked successors provided each
    unmarked successor can answer with that very value; positions failing
    the proviso come out unmarked.  The proviso is what keeps a mark stable:
    an unmarked successor holding an answer to the mex can never later claim
    the mex itself.
    """
    out: Marking = {}
    for p in sorted(g.positions):
        succs = sorted(g.left(p))
        finite = [marking[q] for q in succs if marking[q] is not None]
        m = mex(finite)
        ok = all(
            any(marking[z] == m for z in g.left(q))
            for q in succs
            if marking[q] is None
        )
        out[p] = m if ok else None
    return out


def base_marking(g: GameGraph) -> Marking:
    """Least fixpoint of the marking operator, from the all-unmarked start.

    Each position changes value at most once (unmarked to a fixed number),
    so at most ``|positions| + 1`` passes are needed.
    """
    h = _require_impartial(g)
    marking: Marking = {p: None for p in h.positions}
    while True:
        nxt = marking_step(h, marking)
        if nxt == marking:
            return marking
        marking = nxt


def extend_marking(g: GameGraph, marking: Marking) -> dict[str, GrundyValue]:
    """Annotate each unmarked position with its one-move finite escapes."""
    h = _require_impartial(g)
    out: dict[str, GrundyValue] = {}
    for p, m in marking.items():
        if m is not None:
            out[p] = GrundyValue.of(m)
        else:
            out[p] = GrundyValue.loopy(
                marking[q] for q in h.left(p) if marking[q] is not None
            )
    return out


def grundy_marking(g: GameGraph) -> dict[str, GrundyValue]:
    """Total value assignment for every reachable position of an impartial game."""
    h = _require_impartial(g)
    return extend_marking(h, base_marking(h))


def grundy_root(g: GameGraph) -> GrundyValue:
    return grundy_marking(g)[g.root]


class ImpartialOutcome(str, Enum):
    WIN_II = "WinII"
    WIN_I = "WinI"
    DRAW = "Draw"


def outcome_of_value(v: GrundyValue) -> ImpartialOutcome:
    """Outcome of an impartial position from its value alone.

    Zero loses for the mover; any other finite value wins for the mover, as
    does an infinite value that can escape to zero; otherwise both players
    can at least draw.
    """
    if v.is_finite:
        return ImpartialOutcome.WIN_II if v.nat == 0 else ImpartialOutcome.WIN_I
    return ImpartialOutcome.WIN_I if 0 in v.escapes else ImpartialOutcome.DRAW


_SECTOR_OF_OUTCOME = {
    ImpartialOutcome.WIN_II: Sector.WIN_II,
    ImpartialOutcome.WIN_I: Sector.WIN_I,
    ImpartialOutcome.DRAW: Sector.NL_ALL,
}


def sector_of_outcome(o: ImpartialOutcome) -> Sector:
    """The outcome sector an impartial game with this outcome must occupy."""
    return _SECTOR_OF_OUTCOME[o]


def nim_heap(n: int) -> GameGraph:
    """The single-heap take-away game of size ``n``: ids ``*0`` .. ``*n``."""
    moves = {f"*{k}": [f"*{j}" for j in range(k)] for k in range(n + 1)}
    return GameGraph.impartial(moves, f"*{n}")


def make_canonical(v: GrundyValue) -> GameGraph:
    """The canonical impartial game carrying value ``v``.

    Finite values are heap games; infinite values get one core position with
    a self-move plus a move onto the heap chain for each escape, the chains
    sharing their tails.
    """
    if v.is_finite:
        return nim_heap(v.nat)
    core = v.text()
    top = max(v.escapes) if v.escapes else 0
    moves: dict[str, list[str]] = {
        f"*{k}": [f"*{j}" for j in range(k)] for k in range(top + 1)
    }
    if not v.escapes:
        moves = {}
    moves[core] = [core] + [f"*{k}" for k in sorted(v.escapes)]
    return GameGraph.impartial(moves, core)


def impartial_equiv(g1: GameGraph, g2: GameGraph) -> bool:
    """Exact interchangeability of impartial games: equal root values."""
    return grundy_root(g1) == grundy_root(g2)


def _probe_bound(m1: dict[str, GrundyValue], m2: dict[str, GrundyValue]) -> int:
    finite = [v.nat for m in (m1, m2) for v in m.values() if v.is_finite]
    return 1 + max(finite, default=-1)


def efficient_equiv(g1: GameGraph, g2: GameGraph) -> bool:
    """Interchangeability decided without comparing values directly.

    Games whose difference with themselves is a second-player win are told
    apart (or identified) by a single sum; the rest need only heap-game
    contexts up to one more than the largest finite value in either marking.
    """
    _require_impartial(g1)
    _require_impartial(g2)
    wb1 = sector_of(game_sum(g1, negate(g1))) == Sector.WIN_II
    wb2 = sector_of(game_sum(g2, negate(g2))) == Sector.WIN_II
    if wb1 != wb2:
        return False
    if wb1 and wb2:
        return sector_of(game_sum(g1, g2)) == Sector.WIN_II
    bound = _probe_bound(grundy_marking(g1), grundy_marking(g2))
    for alpha in range(bound + 1):
        ctx = nim_heap(alpha)
        if sector_of(game_sum(g1, ctx)) != sector_of(game_sum(g2, ctx)):
            return False
    return True
