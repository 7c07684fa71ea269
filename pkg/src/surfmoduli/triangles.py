"""Generating triples of a finite group as combinatorial triangle curves.

A triple ``(a, b, c)`` with ``a b c = 1`` and ``<a, b> = G`` encodes a
connected degree-|G| cover of the line branched over three ordered points,
with branching orders the element orders ``(m1, m2, m3)``.  The genus of
the cover comes from the branched-cover count

    2 g - 2 = |G| * (-2 + sum_i (1 - 1/m_i)),

evaluated here in exact integer arithmetic.  The stabilizer set Sigma of a
triple is the set of group elements fixing some point of the cover: the
union over the group of all conjugates of all powers of a, b and c, which
is a union of full conjugacy classes.
"""

from __future__ import annotations

from typing import Literal, Optional

from .errors import GroupMismatch, NonIntegralGenus
from .groups import PermGroup, Permutation


class TripleType:
    """The sorted multiset of branching orders of a triple."""

    __slots__ = ("orders",)

    def __init__(self, m1: int, m2: int, m3: int):
        orders = tuple(sorted((m1, m2, m3)))
        if orders[0] < 1:
            raise ValueError("branching orders must be positive")
        self.orders = orders

    @property
    def m1(self) -> int:
        return self.orders[0]

    @property
    def m2(self) -> int:
        return self.orders[1]

    @property
    def m3(self) -> int:
        return self.orders[2]

    def __eq__(self, other) -> bool:
        return isinstance(other, TripleType) and self.orders == other.orders

    def __hash__(self) -> int:
        return hash(self.orders)

    def __repr__(self) -> str:
        return f"TripleType{self.orders}"


class SphericalTriple:
    """An ordered generating triple ``(a, b, c)`` with ``a b c = 1``.

    The three branch points are ordered; permuting the entries gives a
    different triple.  Instances are immutable.
    """

    __slots__ = ("group", "a", "b", "c", "_hash")

    def __init__(
        self,
        group: PermGroup,
        a: Permutation,
        b: Permutation,
        c: Permutation,
        _check: bool = True,
    ):
        if _check:
            for g in (a, b, c):
                group.index_of(g)
            if not (a * b * c).is_identity():
                raise ValueError("a * b * c is not the identity")
            if not group.generates([a, b]):
                raise ValueError("the pair (a, b) does not generate the group")
        self.group = group
        self.a = a
        self.b = b
        self.c = c
        self._hash = hash((id(group), a, b, c))

    @property
    def triple_type(self) -> TripleType:
        return TripleType(
            self.group.element_order(self.a),
            self.group.element_order(self.b),
            self.group.element_order(self.c),
        )

    def conjugated_by(self, h: Permutation) -> "SphericalTriple":
        return SphericalTriple(
            self.group,
            self.a.conjugated_by(h),
            self.b.conjugated_by(h),
            self.c.conjugated_by(h),
            _check=False,
        )

    def key(self) -> tuple:
        """Deterministic sort and identity key (the three image tuples)."""
        return (self.a.images, self.b.images, self.c.images)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SphericalTriple)
            and self.group is other.group
            and self.a == other.a
            and self.b == other.b
            and self.c == other.c
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SphericalTriple({self.a!r}, {self.b!r}, {self.c!r})"

    def as_dict(self) -> dict:
        """JSON-ready form: group reference, images, type, genus."""
        return {
            "group": self.group.name or f"degree{self.group.degree}",
            "a": list(self.a.images),
            "b": list(self.b.images),
            "c": list(self.c.images),
            "type": list(self.triple_type.orders),
            "genus": genus(self),
        }


def genus(triple: SphericalTriple) -> int:
    """Genus of the cover encoded by the triple, computed exactly.

    Each branching order divides the group order, so the right-hand side
    of the genus count is an integer; a parity or sign violation raises
    :class:`NonIntegralGenus` (impossible for a valid triple).
    """
    n = triple.group.order
    rhs = -2 * n
    for x in (triple.a, triple.b, triple.c):
        m = triple.group.element_order(x)
        rhs += n - n // m
    if (rhs + 2) % 2 != 0 or rhs + 2 < 0:
        raise NonIntegralGenus(f"2g - 2 = {rhs} admits no genus")
    return (rhs + 2) // 2


def is_hyperbolic(triple: SphericalTriple) -> bool:
    """True iff the associated curve has genus at least 2."""
    return genus(triple) >= 2


def sigma_set(triple: SphericalTriple) -> frozenset[Permutation]:
    """All elements acting with fixed points on the cover.

    This is the union over the group of the conjugates of all powers of
    a, b and c; it always contains the identity and is closed under
    conjugation and inversion.
    """
    G = triple.group
    classes = G.conjugacy_classes()
    out: set[Permutation] = set()
    for ci in sigma_class_indices(triple):
        out.update(classes[ci].elements)
    return frozenset(out)


def sigma_class_indices(triple: SphericalTriple) -> frozenset[int]:
    """Conjugacy classes (by index) covered by the stabilizer set."""
    G = triple.group
    return (
        G.power_class_signature(triple.a)
        | G.power_class_signature(triple.b)
        | G.power_class_signature(triple.c)
    )


def _base_triples(
    G: PermGroup,
    triple_type: Optional[TripleType] = None,
    hyperbolic_only: bool = False,
) -> list[SphericalTriple]:
    """Triples whose first entry is a conjugacy-class representative.

    Every triple on G is a simultaneous conjugate of exactly one of these
    with the same first-entry class; generation and type are conjugation
    invariant, so filtering here is sound.
    """
    out = []
    for cls in G.conjugacy_classes():
        a = cls.representative
        for b in G.elements:
            if not G.generates_pair(a, b):
                continue
            c = (a * b).inverse()
            t = SphericalTriple(G, a, b, c, _check=False)
            if triple_type is not None and t.triple_type != triple_type:
                continue
            if hyperbolic_only and not is_hyperbolic(t):
                continue
            out.append(t)
    return out


def enumerate_triples(
    G: PermGroup,
    triple_type: Optional[TripleType] = None,
    hyperbolic_only: bool = False,
) -> list[SphericalTriple]:
    """All generating triples of G, optionally filtered by type.

    Enumerates pairs with the first entry restricted to class
    representatives, then closes the result back up under simultaneous
    conjugation.  The output order is deterministic: by conjugacy class of
    the first entry, then by element index of the first and second entries.
    """
    base_list = _base_triples(G, triple_type, hyperbolic_only)
    if G.is_abelian:
        # classes are singletons, so the base enumeration is already full
        full = base_list
    else:
        seen: set[tuple] = set()
        full = []
        for base in base_list:
            for h in G.elements:
                t = base.conjugated_by(h)
                k = t.key()
                if k not in seen:
                    seen.add(k)
                    full.append(t)
    index = G._index
    full.sort(
        key=lambda t: (
            G.class_index_of(t.a),
            index[t.a],
            index[t.b],
        )
    )
    return full


def triples_equivalent(
    t1: SphericalTriple,
    t2: SphericalTriple,
    mode: Literal["marked", "unmarked"] = "marked",
) -> bool:
    """Equivalence of triples under inner (marked) or all (unmarked)
    automorphisms, applied componentwise.

    ``c`` follows automatically once ``a`` and ``b`` match, because any
    homomorphic image of ``(a, b, c)`` again multiplies to the identity.
    """
    if t1.group is not t2.group:
        raise GroupMismatch("triples live on different groups")
    G = t1.group
    if t1.triple_type != t2.triple_type:
        return False
    if mode == "marked":
        if G.class_index_of(t1.a) != G.class_index_of(t2.a):
            return False
        return any(
            t1.a.conjugated_by(h) == t2.a and t1.b.conjugated_by(h) == t2.b
            for h in G.elements
        )
    if mode == "unmarked":
        return any(
            phi(t1.a) == t2.a and phi(t1.b) == t2.b
            for phi in G.automorphisms()
        )
    raise ValueError(f"unknown mode {mode!r}")


def branch_permutation_orbit(t: SphericalTriple) -> list[SphericalTriple]:
    """The six triples obtained by reordering the three branch points.

    Generated by the rotation ``(a, b, c) -> (b, c, a)`` and the reversal
    ``(a, b, c) -> (c^-1, b^-1, a^-1)``, both of which preserve the
    product-one and generation conditions.
    """
    def rot(x: SphericalTriple) -> SphericalTriple:
        return SphericalTriple(x.group, x.b, x.c, x.a, _check=False)

    def rev(x: SphericalTriple) -> SphericalTriple:
        return SphericalTriple(
            x.group,
            x.c.inverse(),
            x.b.inverse(),
            x.a.inverse(),
            _check=False,
        )

    orbit: dict[tuple, SphericalTriple] = {}
    frontier = [t]
    while frontier:
        x = frontier.pop()
        if x.key() in orbit:
            continue
        orbit[x.key()] = x
        frontier.append(rot(x))
        frontier.append(rev(x))
    return [orbit[k] for k in sorted(orbit)]
