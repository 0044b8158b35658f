"""
Verifying codes and inspecting shares
=====================================

A walk through the verification layer: shadows, witnesses, and the exact
rational share bookkeeping behind the lower-bound arguments.
"""

from fractions import Fraction

from circodes import CirculantGraph, Code, Kind

# C(14;1,3): vertices 0..13, x ~ y when they differ by 1 or 3 around the cycle
g = CirculantGraph(14)
print(g, "degree", g.degree)
print("N[0] =", sorted(g.closed_neighborhood(0)))

# A code is just a vertex subset.  Its shadow at u is the part of the code
# visible from u's closed neighbourhood; distinct nonempty shadows are what
# let a monitor pin down a fault location.
code = Code(g, {0, 1, 6, 7, 12, 13})
for u in (0, 3, 9):
    print(f"shadow({u}) = {sorted(code.shadow(u))}")

print("dominating:", bool(code.is_dominating()))
print("locating:  ", bool(code.is_locating()))
print("identifying:", bool(code.is_identifying()))

# Failed checks come with a concrete witness.  Drop a vertex and the
# verifier names the smallest colliding pair.
damaged = Code(g, {0, 1, 6, 7, 12})
result = damaged.is_locating()
print("\nafter removing 13:", result.status.value, "witness", result.witness)
u, v = result.witness
print(f"shadow({u}) = {sorted(damaged.shadow(u))} = shadow({v})")

# The share of a code vertex redistributes each vertex's "coverage" evenly
# over the code members that see it.  Shares are exact fractions; summed
# over the code they always give n, which is the engine of the n/3 and
# 4n/11 lower bounds.
print("\nshares:")
for u in sorted(code.members):
    print(f"  gamma({u}) = {code.share(u)}")
print("sum =", code.sum_of_shares(), "= n")

# Vertices with large share are tightly constrained: in any identifying
# code a share above 11/4 forces the shadow-size profile (1,2,2,2,3).
ident = Code(CirculantGraph(22), {0, 1, 4, 5, 11, 12, 15, 16})
heavy = ident.heavy_vertices(Fraction(11, 4))
print("\nheavy vertices of the period-11 code in C(22;1,3):", heavy)
for u in heavy:
    print(f"  profile({u}) = {ident.profile(u)}")
