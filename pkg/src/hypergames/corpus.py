"""Game serialization (the HYG format), the named game catalog, and a
seeded random game generator.

HYG documents are single-line JSON objects::

    {"hyg":1,"positions":{"<id>":{"left":[...],"right":[...]}, ...},"root":"<id>"}

A position may instead carry one ``"moves"`` list, shorthand for identical
left and right sets; ``"moves"`` may not be combined with ``"left"`` or
``"right"`` at the same position.  Canonical output sorts every key and list,
uses no whitespace, emits ``"moves"`` exactly when the whole graph is
impartial, and ends with a newline, so serialization is byte-stable.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass

from .graph import GameGraph, MoveSets, validate

FORMAT_VERSION = 1


class ParseError(ValueError):
    """Malformed document: not valid JSON or not valid HYG structure."""


class InvalidGraphError(ValueError):
    """Well-formed document describing a broken graph (dangling ids etc.)."""


def _string_list(value: object, where: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ParseError(f"{where}: expected a list of position ids")
    return value


def parse(text: str) -> GameGraph:
    """Parse an HYG document; move lists are deduplicated on load."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"line {e.lineno} column {e.colno}: {e.msg}") from e
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    if doc.get("hyg") != FORMAT_VERSION:
        raise ParseError(f'missing or unsupported "hyg" version (expected {FORMAT_VERSION})')
    root = doc.get("root")
    if not isinstance(root, str):
        raise ParseError('missing or non-string "root"')
    raw = doc.get("positions")
    if not isinstance(raw, dict) or not raw:
        raise ParseError('"positions" must be a non-empty object')
    positions: dict[str, MoveSets] = {}
    for pid, entry in raw.items():
        if not isinstance(entry, dict):
            raise ParseError(f"position {pid!r}: expected an object")
        keys = set(entry)
        if "moves" in keys:
            if keys & {"left", "right"}:
                raise ParseError(f'position {pid!r}: "moves" excludes "left"/"right"')
            ts = frozenset(_string_list(entry["moves"], f"position {pid!r} moves"))
            positions[pid] = MoveSets(ts, ts)
            extra = keys - {"moves"}
        else:
            left = frozenset(_string_list(entry.get("left", []), f"position {pid!r} left"))
            right = frozenset(_string_list(entry.get("right", []), f"position {pid!r} right"))
            positions[pid] = MoveSets(left, right)
            extra = keys - {"left", "right"}
        if extra:
            raise ParseError(f"position {pid!r}: unknown keys {sorted(extra)}")
    g = GameGraph(positions, root)
    problems = validate(g)
    if problems:
        raise InvalidGraphError("; ".join(problems))
    return g


def serialize(g: GameGraph) -> str:
    """Canonical HYG text for a valid graph."""
    impartial_everywhere = all(ms.left == ms.right for ms in g.positions.values())
    body: dict[str, dict] = {}
    for pid in g.ids():
        ms = g.positions[pid]
        if impartial_everywhere:
            body[pid] = {"moves": sorted(ms.left)}
        else:
            body[pid] = {"left": sorted(ms.left), "right": sorted(ms.right)}
    doc = {"hyg": FORMAT_VERSION, "root": g.root, "positions": body}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


# ---------------------------------------------------------------------------
# Catalog

_STAR_RE = re.compile(r"^star(\d+)$")
_INF_RE = re.compile(r"^inf(?:\{(\d+(?:,\d+)*)\})?$")

# Road map for the one-vehicle traffic game.  Towns C, D and K are dead ends;
# the junction layout makes {C,D,K}, {A,E,G}, {B,F,H} and {N,O} groups of
# mutually bisimilar towns, for eight classes in total.
_TRAFFIC_JAM: dict[str, list[str]] = {
    "A": ["C"],
    "B": ["A", "C", "E"],
    "C": [],
    "D": [],
    "E": ["C"],
    "F": ["C", "E"],
    "G": ["D"],
    "H": ["D", "G"],
    "I": ["E", "F", "J", "N"],
    "J": ["F", "O"],
    "K": [],
    "L": ["B", "G", "H", "K"],
    "M": ["H", "I", "L"],
    "N": ["J", "M", "O"],
    "O": ["J", "M", "N"],
}


def _star(n: int) -> GameGraph:
    return GameGraph.impartial(
        {f"*{k}": [f"*{j}" for j in range(k)] for k in range(n + 1)}, f"*{n}"
    )


def _fixed_catalog() -> dict[str, GameGraph]:
    zero = GameGraph.build({"0": ([], [])}, "0")
    return {
        "zero": zero,
        "one": GameGraph.build({"1": (["0"], []), "0": ([], [])}, "1"),
        "minus_one": GameGraph.build({"-1": ([], ["0"]), "0": ([], [])}, "-1"),
        "a": GameGraph.build({"a": (["b"], []), "b": ([], ["a"])}, "a"),
        "b": GameGraph.build({"a": (["b"], []), "b": ([], ["a"])}, "b"),
        "a0": GameGraph.build(
            {"a0": (["b0"], ["0"]), "b0": (["0"], ["a0"]), "0": ([], [])}, "a0"
        ),
        "b0": GameGraph.build(
            {"a0": (["b0"], ["0"]), "b0": (["0"], ["a0"]), "0": ([], [])}, "b0"
        ),
        "c": GameGraph.impartial({"c": ["c"]}, "c"),
        "c1": GameGraph.build({"c1": (["c1"], ["0"]), "0": ([], [])}, "c1"),
        "d": GameGraph.impartial(
            {"d": ["d'"], "d'": ["d'", "0"], "0": []}, "d"
        ),
        "traffic_jam": GameGraph.impartial(_TRAFFIC_JAM, "M"),
    }


def catalog_names() -> list[str]:
    """Stable listing of the named games (star sizes beyond 3 and arbitrary
    ``inf{...}`` cores resolve too, they just are not enumerated)."""
    return sorted(
        list(_fixed_catalog()) + ["star0", "star1", "star2", "star3", "inf", "inf{1,2}"]
    )


def catalog(name: str) -> GameGraph:
    """Look up a named game; raises ``KeyError`` for unknown names."""
    fixed = _fixed_catalog()
    if name in fixed:
        return fixed[name]
    m = _STAR_RE.match(name)
    if m:
        return _star(int(m.group(1)))
    m = _INF_RE.match(name)
    if m:
        from .grundy import GrundyValue, make_canonical

        escapes = [int(k) for k in m.group(1).split(",")] if m.group(1) else []
        return make_canonical(GrundyValue.loopy(escapes))
    raise KeyError(f"unknown catalog game {name!r}")


# ---------------------------------------------------------------------------
# Random generator

@dataclass(frozen=True)
class GeneratorParams:
    """Knobs for the seeded random game generator."""

    positions: int = 6
    density: float = 0.3
    impartial: bool = False
    acyclic: bool = False
    seed: int = 0

    def __post_init__(self) -> None:
        if self.positions < 1:
            raise ValueError("positions must be at least 1")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError("density must lie in [0, 1]")


def generate(params: GeneratorParams) -> GameGraph:
    """Deterministic random game for the given parameters.

    The root is ``p0``.  Acyclic graphs only draw edges toward strictly
    higher indices, so the root sits at the top of a topological order and
    wellfoundedness holds by construction.
    """
    rng = random.Random(params.seed)
    n = params.positions
    ids = [f"p{i}" for i in range(n)]

    def targets(i: int) -> frozenset[str]:
        if params.acyclic:
            candidates = range(i + 1, n)
        else:
            candidates = range(n)
        return frozenset(ids[j] for j in candidates if rng.random() < params.density)

    positions: dict[str, MoveSets] = {}
    for i in range(n):
        left = targets(i)
        right = left if params.impartial else targets(i)
        positions[ids[i]] = MoveSets(left, right)
    return GameGraph(positions, ids[0])
