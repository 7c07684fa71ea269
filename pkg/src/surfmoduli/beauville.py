"""Unmixed Beauville structures and invariants of the quotient surfaces.

A Beauville structure on a finite group G is a pair of hyperbolic
generating triples whose stabilizer sets meet only in the identity, so
that the diagonal action of G on the product of the two triangle curves
is free.  Both stabilizer sets are unions of conjugacy classes, so the
freeness condition is equivalent to their class supports sharing only the
identity class; the search below exploits that.

The quotient surface of a structure with curve genera ``(g1, g2)`` has

    chi = (g1 - 1)(g2 - 1) / |G|,   ksq = 8 chi,   e = 4 chi,   tau = 0,

with q = 0 and pg = chi - 1 because both quotient curves are rational.
"""

from __future__ import annotations

import time
from functools import cached_property
from typing import Iterable

from .errors import GroupMismatch, NonIntegralChi, SurfModuliError
from .groups import PermGroup, Permutation
from .invariants import SurfaceInvariants
from .triangles import (
    SphericalTriple,
    _base_triples,
    enumerate_triples,
    genus,
    is_hyperbolic,
    sigma_class_indices,
    sigma_set,
    triples_equivalent,
)


def is_beauville_pair(t1: SphericalTriple, t2: SphericalTriple) -> bool:
    """Freeness test: both triples hyperbolic, stabilizer sets meeting
    only in the identity.  This is the reference element-level check."""
    if t1.group is not t2.group:
        raise GroupMismatch("triples live on different groups")
    if not (is_hyperbolic(t1) and is_hyperbolic(t2)):
        return False
    common = sigma_set(t1) & sigma_set(t2)
    return common == {t1.group.identity}


class BeauvilleStructure:
    """An ordered pair of triples forming an unmixed Beauville structure."""

    def __init__(self, t1: SphericalTriple, t2: SphericalTriple, _check=True):
        if _check and not is_beauville_pair(t1, t2):
            raise ValueError("the two triples do not form a Beauville structure")
        self.t1 = t1
        self.t2 = t2

    @property
    def group(self) -> PermGroup:
        return self.t1.group

    def key(self) -> tuple:
        return self.t1.key() + self.t2.key()

    @cached_property
    def triples_unmarked_equivalent(self) -> bool:
        """Whether the two triples are equivalent under some automorphism.

        Reported, never filtered on: the rigidity definition asks the two
        curves to be nonisomorphic, but equality as unmarked triples is
        only a necessary symptom, so the flag is surfaced to the caller.
        """
        return triples_equivalent(self.t1, self.t2, mode="unmarked")

    def invariants(self) -> SurfaceInvariants:
        return structure_invariants(self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BeauvilleStructure)
            and self.group is other.group
            and self.key() == other.key()
        )

    def __hash__(self) -> int:
        return hash((id(self.group),) + self.key())

    def __repr__(self) -> str:
        return f"BeauvilleStructure({self.t1!r}, {self.t2!r})"

    def as_dict(self, with_flag: bool = True) -> dict:
        out = {
            "t1": self.t1.as_dict(),
            "t2": self.t2.as_dict(),
            "invariants": self.invariants().as_dict(),
        }
        if with_flag:
            out["triples_unmarked_equivalent"] = self.triples_unmarked_equivalent
        return out


def _canonical_pair_key(
    G: PermGroup, t1: SphericalTriple, t2: SphericalTriple
) -> tuple:
    """Lexicographically least simultaneous conjugate of the six entries."""
    perms = (t1.a, t1.b, t1.c, t2.a, t2.b, t2.c)
    best = None
    for h in G.elements:
        cand = tuple(p.conjugated_by(h).images for p in perms)
        if best is None or cand < best:
            best = cand
    return best


def _structure_from_key(G: PermGroup, key: tuple) -> BeauvilleStructure:
    perms = [Permutation(images) for images in key]
    t1 = SphericalTriple(G, perms[0], perms[1], perms[2], _check=False)
    t2 = SphericalTriple(G, perms[3], perms[4], perms[5], _check=False)
    return BeauvilleStructure(t1, t2, _check=False)


def search(G: PermGroup, stop_at_first: bool = False) -> list[BeauvilleStructure]:
    """All unmixed Beauville structures on G, or the first one found.

    The first triple runs over triples whose leading entry is a class
    representative; since structures are reported up to simultaneous
    conjugation this loses nothing.  Candidate second triples are bucketed
    by the class support of their stabilizer set, and a pair is admitted
    exactly when the two supports share only the identity class.  Results
    are deduplicated by the lexicographically least simultaneous conjugate
    and returned in deterministic order.
    """
    first = _base_triples(G, hyperbolic_only=True)
    if not first:
        return []
    second = enumerate_triples(G, hyperbolic_only=True)

    identity_class = G.class_index_of(G.identity)
    buckets: dict[frozenset[int], list[SphericalTriple]] = {}
    for t in second:
        buckets.setdefault(sigma_class_indices(t), []).append(t)

    found: dict[tuple, None] = {}
    for t1 in first:
        sig1 = sigma_class_indices(t1)
        for sig2, bucket in buckets.items():
            if sig1 & sig2 != {identity_class}:
                continue
            for t2 in bucket:
                key = _canonical_pair_key(G, t1, t2)
                if key not in found:
                    found[key] = None
                    if stop_at_first:
                        return [_structure_from_key(G, key)]
    return [_structure_from_key(G, key) for key in sorted(found)]


def isogenous_invariants(
    g1: int, g2: int, group_order: int
) -> SurfaceInvariants:
    """Invariants of a free quotient of a product of curves of genera
    ``g1, g2 >= 2`` by a group of the given order."""
    if g1 < 2 or g2 < 2:
        raise ValueError("both genera must be at least 2")
    if group_order < 1:
        raise ValueError("group order must be positive")
    num = (g1 - 1) * (g2 - 1)
    if num % group_order != 0:
        raise NonIntegralChi(
            f"({g1}-1)({g2}-1) = {num} is not divisible by {group_order}"
        )
    chi = num // group_order
    return SurfaceInvariants.from_chi_ksq(chi, 8 * chi)


def structure_invariants(structure: BeauvilleStructure) -> SurfaceInvariants:
    """Invariants of the surface attached to a Beauville structure.

    Both quotient curves are rational, so q = 0 and pg = chi - 1.
    """
    base = isogenous_invariants(
        genus(structure.t1), genus(structure.t2), structure.group.order
    )
    return SurfaceInvariants.from_chi_ksq(
        base.chi, base.ksq, q=0, pg=base.chi - 1
    )


class ScanRow:
    """One row of a family scan report."""

    __slots__ = ("group", "order", "beauville", "structures_found",
                 "elapsed_ms", "error")

    def __init__(self, group, order, beauville, structures_found, elapsed_ms,
                 error=None):
        self.group = group
        self.order = order
        self.beauville = beauville
        self.structures_found = structures_found
        self.elapsed_ms = elapsed_ms
        self.error = error

    def as_dict(self) -> dict:
        out = {
            "group": self.group,
            "order": self.order,
            "beauville": self.beauville,
            "structures_found": self.structures_found,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.error is not None:
            out["error"] = self.error
        return out

    def __repr__(self) -> str:
        return f"ScanRow({self.as_dict()!r})"


def scan(
    family: Iterable[PermGroup],
    stop_at_first: bool = True,
    progress=None,
) -> list[ScanRow]:
    """Per-group Beauville verdicts for a family of groups.

    Errors raised for one group are recorded in its row and do not abort
    the rest of the scan.  With ``stop_at_first`` (the default) each group
    is only searched until the first structure certifies a yes.
    """
    rows = []
    for G in family:
        name = G.name or f"degree{G.degree}"
        started = time.perf_counter()
        try:
            results = search(G, stop_at_first=stop_at_first)
            elapsed = int(round((time.perf_counter() - started) * 1000))
            rows.append(
                ScanRow(name, G.order, bool(results), len(results), elapsed)
            )
        except SurfModuliError as exc:
            elapsed = int(round((time.perf_counter() - started) * 1000))
            rows.append(ScanRow(name, G.order, False, 0, elapsed, str(exc)))
        if progress is not None:
            progress(rows[-1])
    return rows
