"""Tour of outcome classification: who survives which game, and why the
order on loopy games is stranger than the classical one.

Run from the repository root:  python3 demos/01_outcomes_and_sectors.py
"""

from hypergames import catalog, classify, ge, nge, outcome_profile

print("=== The nine sectors on the catalog games ===\n")
for name in ("zero", "one", "minus_one", "star1", "a", "b", "a0", "b0", "c", "d"):
    game = catalog(name)
    profile = outcome_profile(game)
    cls = classify(profile)
    nl = ",".join(p.value for p in cls.nonlosing)
    win = cls.winning.value if cls.winning else "-"
    print(f"{name:>9}: profile={tuple(int(x) for x in profile.as_tuple())}  "
          f"sector={cls.sector.value:<8} nonlosing={{{nl}}} winner={win}")

print("""
Games with cycles can sit outside the four classical win sectors: in game
`a` Left wins as second player and can keep an infinite run going as first
player, so both L and II avoid losing but nobody can force a win.  The
heavily looped game `c` lets every player survive forever.
""")

print("=== Non-transitivity of the order ===\n")
c, c1, zero = catalog("c"), catalog("c1"), catalog("zero")
print("ge(c1, c)   =", ge(c1, c))
print("ge(c, zero) =", ge(c, zero))
print("ge(c1, zero)=", ge(c1, zero), " <- the chain does not compose!")
print("nge(c1, zero)=", nge(c1, zero))
print("""
The middle game `c` can absorb moves forever, so the usual pivot argument
for transitivity breaks down.  This is why exact comparison of loopy games
goes through sums and contexts instead of chaining the order.
""")
