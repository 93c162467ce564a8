from __future__ import annotations

from conftest import mixed_corpus

from hypergames import (
    GameGraph,
    bisim_minimize,
    catalog,
    game_sum,
    hyperbisimilar,
    outcome_profile,
    partition_classes,
    reachable,
)


def test_no_leaf_graph_collapses_to_self_loop():
    g = GameGraph.build(
        {
            "x": (["y"], ["x", "z"]),
            "y": (["z", "x"], ["y"]),
            "z": (["x"], ["y", "z"]),
        },
        "x",
    )
    q, mapping = bisim_minimize(g)
    assert len(q.positions) == 1
    only = q.root
    assert q.left(only) == frozenset({only})
    assert q.right(only) == frozenset({only})
    assert set(mapping.values()) == {only}


def test_star2_already_minimal():
    q, mapping = bisim_minimize(catalog("star2"))
    assert len(q.positions) == 3
    assert sorted(mapping) == ["*0", "*1", "*2"]
    assert len(set(mapping.values())) == 3


def test_traffic_jam_collapse_classes():
    q, mapping = bisim_minimize(catalog("traffic_jam"))
    groups: dict[str, set[str]] = {}
    for p, b in mapping.items():
        groups.setdefault(b, set()).add(p)
    assert sorted(map(sorted, groups.values())) == [
        ["A", "E", "G"],
        ["B", "F", "H"],
        ["C", "D", "K"],
        ["I"],
        ["J"],
        ["L"],
        ["M"],
        ["N", "O"],
    ]
    assert len(q.positions) == 8


def test_quotient_is_minimal_and_equivalent():
    for g in mixed_corpus(50):
        q, _ = bisim_minimize(g)
        blocks = partition_classes(q)
        assert len(set(blocks.values())) == len(q.positions)
        assert hyperbisimilar(g, q)


def test_quotient_never_grows():
    for g in mixed_corpus(30):
        q, _ = bisim_minimize(g)
        assert len(q.positions) <= len(reachable(g).positions)


def test_hyperbisimilar_identity_and_star_separation():
    g = catalog("a0")
    assert hyperbisimilar(g, g)
    assert not hyperbisimilar(catalog("star1"), catalog("star2"))


def test_hyperbisimilar_ignores_names():
    g1 = GameGraph.build({"x": (["y"], []), "y": ([], [])}, "x")
    g2 = GameGraph.build({"p": (["q"], []), "q": ([], [])}, "p")
    assert hyperbisimilar(g1, g2)


def test_sum_commutes_and_associates_up_to_bisimilarity():
    corpus = mixed_corpus(24, max_positions=5)
    for k in range(0, 24, 3):
        g1, g2, g3 = corpus[k], corpus[k + 1], corpus[k + 2]
        assert hyperbisimilar(game_sum(g1, g2), game_sum(g2, g1))
        assert hyperbisimilar(game_sum(game_sum(g1, g2), g3), game_sum(g1, game_sum(g2, g3)))


def test_outcome_profile_is_bisimulation_invariant():
    for g in mixed_corpus(40, max_positions=6):
        q, _ = bisim_minimize(g)
        assert outcome_profile(g) == outcome_profile(q)
