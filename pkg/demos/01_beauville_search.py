"""Searching finite groups for Beauville structures.

A Beauville structure on a finite group G is a pair of generating triples,
each describing a curve of genus >= 2 with G-action branched over three
points, such that no nontrivial group element has fixed points on both
curves.  The quotient of the product of the two curves is then a rigid
surface.  This demo searches a few small groups and scans the abelian
groups of order up to 30.
"""

from surfmoduli import (
    abelian_catalog,
    alternating,
    elementary_abelian,
    genus,
    is_beauville_pair,
    psl2,
    scan,
    search,
    structure_invariants,
)

print("=== the classical example: (Z/5)^2 ===")
G = elementary_abelian(5)
structures = search(G)
print(f"{G!r} carries {len(structures)} structures (up to conjugation)")
s = structures[0]
print("first structure:")
print("  T1 =", (s.t1.a, s.t1.b, s.t1.c), "genus", genus(s.t1))
print("  T2 =", (s.t2.a, s.t2.b, s.t2.c), "genus", genus(s.t2))
print("  freeness re-check:", is_beauville_pair(s.t1, s.t2))
print("  surface invariants:", structure_invariants(s).as_dict())

print()
print("=== the order-60 simple group has none ===")
A5 = alternating(5)
print(f"{A5!r}: structures found = {len(search(A5))}")
print("(every hyperbolic triple of A5 contains an order-5 element, and the")
print(" powers of any such element sweep out both classes of 5-cycles, so")
print(" the stabilizer sets of two hyperbolic triples always overlap)")

print()
print("=== PSL(2,7), order 168 ===")
P = psl2(7)
found = search(P, stop_at_first=True)
s = found[0]
print("found a structure with triple types",
      s.t1.triple_type.orders, "and", s.t2.triple_type.orders)
print("curve genera:", genus(s.t1), "and", genus(s.t2))
print("surface invariants:", structure_invariants(s).as_dict())

print()
print("=== scanning all abelian groups of order <= 30 ===")
for row in scan(abelian_catalog(30)):
    mark = "YES" if row.beauville else "no "
    print(f"  {row.group:>12}  order {row.order:>3}  beauville {mark}"
          f"  ({row.elapsed_ms} ms)")
