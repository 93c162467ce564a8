"""Generalized Grundy values on a loopy road map, and sums of marked games
computed without ever building the sum graph.

Run from the repository root:  python3 demos/03_grundy_markings.py
"""

from hypergames import (
    GameGraph,
    bisim_minimize,
    catalog,
    game_sum,
    gen_nim_sum,
    grundy_marking,
    grundy_root,
    outcome_of_value,
)

print("=== Marking the traffic jam road map ===\n")
tj = catalog("traffic_jam")
marking = grundy_marking(tj)
quotient, mapping = bisim_minimize(tj)
groups: dict[str, list[str]] = {}
for town, rep in sorted(mapping.items()):
    groups.setdefault(rep, []).append(town)
for rep in sorted(groups, key=lambda r: marking[r].text()):
    towns = ",".join(groups[rep])
    print(f"value {marking[rep].text():>8}: towns {{{towns}}}")

print("""
A vehicle is parked in one town and each player in turn drives it along an
arrow; whoever cannot move loses.  Dead-end towns are worth 0.  Towns in the
loop cluster get infinite values whose subscripts list the finite values one
move away - those are the mover's escape hatches.
""")

print("=== Two vehicles: add values, not graphs ===\n")
for first, second in [("H", "I"), ("I", "J")]:
    v1, v2 = marking[first], marking[second]
    total = gen_nim_sum(v1, v2)
    print(f"vehicles at {first} ({v1}) and {second} ({v2}): "
          f"sum value {total}, outcome {outcome_of_value(total).value}")

direct = grundy_root(game_sum(GameGraph(tj.positions, "H"), GameGraph(tj.positions, "I")))
print("\ncross-check against the sum graph for H+I:", direct.text())

print("\n=== Values are a complete invariant ===\n")
from hypergames import impartial_equiv

print("town C interchangeable with town D:",
      impartial_equiv(GameGraph(tj.positions, "C"), GameGraph(tj.positions, "D")))
print("town I interchangeable with town J:",
      impartial_equiv(GameGraph(tj.positions, "I"), GameGraph(tj.positions, "J")))
print("""
Equal values mean the positions can replace each other inside any multi-
vehicle configuration; different values always admit a distinguishing
configuration built from heap games.
""")
