"""Synthesize positional strategies, verify them exhaustively, and watch two
strategies battle to a draw.

Run from the repository root:  python3 demos/02_strategies_and_play.py
"""

from hypergames import (
    Player,
    PositionalStrategy,
    Role,
    Side,
    StrategyBundle,
    catalog,
    game_sum,
    make_copycat,
    negate,
    play,
    synthesize_nonlosing,
    synthesize_winning,
    verify_strategy,
)

print("=== Non-losing strategy for Left on game a ===\n")
a = catalog("a")
left = synthesize_nonlosing(a, Player.L)
for role, strat in sorted(left.roles.items(), key=lambda kv: kv[0].value):
    print(f"role {role.value}: choice map {dict(sorted(strat.choice.items()))}")
print("verified non-losing:", verify_strategy(a, left, Player.L, "nonlosing"))

print("\n=== A play that spirals into a draw ===\n")
right = StrategyBundle(
    Player.R,
    {
        Role.RI: PositionalStrategy(Side.R, {"b": "a"}),
        Role.RII: PositionalStrategy(Side.R, {"b": "a"}),
    },
)
verdict = play(a, left, right, opener=Side.L)
trace = " -> ".join(f"{p}/{m.value}" for p, m in verdict.trace)
print("trace:", trace)
print("result:", verdict.result, "| repeated state:", verdict.repeated)

print("\n=== Winning strategies exist only in win sectors ===\n")
d = catalog("d")
winning = synthesize_winning(d, Player.II)
print("game d, player II:", "found" if winning else "none",
      "| verified winning:", verify_strategy(d, winning, Player.II, "winning"))
c = catalog("c")
print("game c, player II:", synthesize_winning(c, Player.II))

print("\n=== The mirror defence on a difference game ===\n")
g = catalog("star2")
board = game_sum(g, negate(g))
mirror = make_copycat(g)
print("board positions:", len(board.positions))
print("mirror verified non-losing for II:",
      verify_strategy(board, mirror, Player.II, "nonlosing"))
print("""
Whatever the opener does in one component, the responder repeats it in the
other; the board can never get ahead of the responder, so the second player
never runs out of answers on any game minus itself.
""")
