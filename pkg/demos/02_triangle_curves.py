"""Generating triples as triangle curves.

A triple (a, b, c) with abc = 1 generating a finite group G encodes a
curve with G-action whose quotient is the line branched over three points;
the branching orders are the element orders, and an exact branched-cover
count gives the genus.  This demo enumerates triples, computes genera and
stabilizer sets, and compares marked with unmarked equivalence.
"""

from surfmoduli import (
    TripleType,
    elementary_abelian,
    enumerate_triples,
    genus,
    sigma_set,
    symmetric,
    triples_equivalent,
)

print("=== all generating triples of S4, by type ===")
S4 = symmetric(4)
by_type = {}
for t in enumerate_triples(S4):
    by_type.setdefault(t.triple_type.orders, []).append(t)
for orders, triples in sorted(by_type.items()):
    g = genus(triples[0])
    tag = "hyperbolic" if g >= 2 else f"genus {g}"
    print(f"  type {orders}: {len(triples)} triples, {tag}")

print()
print("=== a (5,5,5)-triple on (Z/5)^2 ===")
G = elementary_abelian(5)
t = enumerate_triples(G, triple_type=TripleType(5, 5, 5))[0]
print("triple:", (t.a, t.b, t.c))
print("genus:", genus(t), " (2g - 2 = 25 * (3 * 4/5 - 2) = 10)")
sigma = sigma_set(t)
print(f"stabilizer set: {len(sigma)} elements "
      "(identity plus three cyclic subgroups of order 5)")

print()
print("=== marked vs unmarked equivalence on (Z/5)^2 ===")
x, y = G.generators
t1 = next(
    tt for tt in enumerate_triples(G) if tt.a == x and tt.b == y
)
t2 = next(
    tt for tt in enumerate_triples(G) if tt.a == y and tt.b == x
)
print("swap (x, y, .) vs (y, x, .):")
print("  marked  (inner automorphisms only):",
      triples_equivalent(t1, t2, mode="marked"))
print("  unmarked (all automorphisms):      ",
      triples_equivalent(t1, t2, mode="unmarked"))
print("(the group is abelian, so inner automorphisms are trivial, but the")
print(" coordinate swap is an outer automorphism carrying one to the other)")
