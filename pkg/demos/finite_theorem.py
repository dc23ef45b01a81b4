# Finite transformation monoids: minimality against the two almost periodicity notions.
from semiflows import finite

# 0 -> 1 -> 2 -> 1: point 0 is transient, {1, 2} is the only minimal set
S = finite.monoid_closure([(1, 2, 1)], 3)
print("monoid size:", len(S.monoid))
print("minimal sets:", [sorted(m) for m in finite.minimal_subsets(S)])

for x in range(S.n):
    print(x,
          "orbit", sorted(finite.orbit(S, x).points),
          "minimal", finite.is_minimal_orbit_closure(S, x),
          "modified AP", finite.is_ap_modified(S, x),
          "syndetic AP", finite.is_ap_syndetic(S, x))

# Syndetic AP holds everywhere on a finite monoid (take K = monoid), so it cannot detect 0's transience.
# The modified notion can, and agrees with minimality:
print(finite.verify_theorem(S))

# a small witness K for point 1
print("K for 1:", finite.modified_ap_witness(S, 1))

# The same check over every single-map system on 4 points
rows = finite.sweep("theorem", 4, finite.enumerate_systems(4, 1))
print(len(rows), "systems,", sum(not r["passed"] for r in rows), "failures")

# and every pair of maps on 3 points
rows = finite.sweep("theorem", 3, finite.enumerate_systems(3, 2))
print(len(rows), "systems,", sum(not r["passed"] for r in rows), "failures")

# flows: with bijective generators, syndetic AP is the right notion again
rows = finite.sweep("flow", 4, finite.enumerate_systems(4, 2, permutations=True))
print(len(rows), "permutation systems,", sum(not r["passed"] for r in rows), "failures")

# systems serialise as text
print(finite.dumps_system(S), end="")
