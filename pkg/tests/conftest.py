"""Shared seeded corpora for the test suite.

Everything is deterministic: graphs come from the package's own generator
with fixed seeds, so failures reproduce exactly.
"""

from __future__ import annotations

from functools import lru_cache

from hypergames import GameGraph, GeneratorParams, generate


def mixed_graph(seed: int, max_positions: int = 8) -> GameGraph:
    """One seeded graph cycling through sizes and structural flags."""
    return generate(
        GeneratorParams(
            positions=1 + seed % max_positions,
            density=0.25 + 0.08 * (seed % 4),
            impartial=seed % 3 == 0,
            acyclic=seed % 2 == 0,
            seed=seed,
        )
    )


def impartial_graph(seed: int, max_positions: int = 8, acyclic: bool | None = None) -> GameGraph:
    return generate(
        GeneratorParams(
            positions=1 + seed % max_positions,
            density=0.25 + 0.08 * (seed % 4),
            impartial=True,
            acyclic=(seed % 2 == 0) if acyclic is None else acyclic,
            seed=seed,
        )
    )


@lru_cache(maxsize=None)
def mixed_corpus(count: int, max_positions: int = 8, base_seed: int = 0) -> tuple[GameGraph, ...]:
    return tuple(mixed_graph(base_seed + k, max_positions) for k in range(count))


@lru_cache(maxsize=None)
def impartial_corpus(
    count: int, max_positions: int = 8, base_seed: int = 0, acyclic: bool | None = None
) -> tuple[GameGraph, ...]:
    return tuple(impartial_graph(base_seed + k, max_positions, acyclic) for k in range(count))
