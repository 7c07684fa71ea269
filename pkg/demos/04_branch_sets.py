"""Exact Moebius equivalence of branch sets on the line.

A hyperelliptic curve is determined by its branch set up to Moebius
transformations.  The built-in family pins 2g+1 branch points at
-2g, 0, 1, ..., 2g-1 and moves one rational parameter; deciding whether
two such sets are equivalent over the rationals is a finite, exact search
(a map is fixed by the images of three points).
"""

from fractions import Fraction

from surfmoduli import (
    MoebiusMap,
    apply_map,
    family_branch_set,
    moebius_equivalent,
)

print("=== the one-parameter family at genus 3 ===")
b7 = family_branch_set(3, 7)
b8 = family_branch_set(3, 8)
print("parameter 7:", sorted(p.value for p in b7))
print("parameter 8:", sorted(p.value for p in b8))
print("equivalent over Q:", moebius_equivalent(b7, b8) is not None)

print()
print("=== a disguised copy is recognized ===")
m = MoebiusMap(Fraction(2), Fraction(-3), Fraction(1), Fraction(5))
target = apply_map(m, b7)
print("image of parameter-7 set under (2z-3)/(z+5):")
print("  ", sorted(p.sort_key() for p in target)[:4], "...")
cert = moebius_equivalent(b7, target)
print("certificate found:", cert)
print("certificate carries the set exactly:", apply_map(cert, b7) == target)
print("(the certificate need not equal the original map; any carrier will do)")

print()
print("=== small sets that cross-ratios tell apart ===")
from surfmoduli import BranchSet, ProjPoint

inf = ProjPoint.infinity()
s3 = BranchSet([ProjPoint(0), ProjPoint(1), inf, ProjPoint(3)])
s4 = BranchSet([ProjPoint(0), ProjPoint(1), inf, ProjPoint(4)])
print("{0,1,inf,3} ~ {0,1,inf,4}:", moebius_equivalent(s3, s4) is not None)
