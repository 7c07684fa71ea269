"""Exact arithmetic on finite permutation groups.

Elements are permutations of ``{1, ..., n}`` stored as tuples of images.
A :class:`PermGroup` materializes its full element set at construction
(capped at :data:`ORDER_BOUND`), so every later question -- membership,
conjugacy, generation, simplicity, automorphisms -- reduces to finite
enumeration with no floating point and no randomness.  All public types
are immutable after construction and safe to share between workers.
"""

from __future__ import annotations

import math
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import AutBoundExceeded, DegreeMismatch, OrderBoundExceeded

ORDER_BOUND = 100_000
AUT_BOUND = 2_000


class Permutation:
    """A permutation of ``{1, ..., n}`` given by its tuple of images.

    ``images[i - 1]`` is where point ``i`` goes.  Composition is the left
    action: ``(p * q)(x) == p(q(x))``.  Instances are immutable; equality
    and hashing are by image tuple.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images!r}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> "Permutation":
        # products and conjugates of bijections are bijections; skip validation
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Permutation":
        """Build a permutation from disjoint cycles of 1-based points."""
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for i, point in enumerate(cycle):
                if not 1 <= point <= degree or point in seen:
                    raise ValueError(f"bad cycle point {point} in {cycles!r}")
                seen.add(point)
                images[point - 1] = cycle[(i + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise DegreeMismatch(
                f"degree {len(self.images)} vs {len(other.images)}"
            )
        img = self.images
        return Permutation._raw(tuple(img[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j - 1] = i + 1
        return Permutation._raw(tuple(inv))

    def conjugated_by(self, h: "Permutation") -> "Permutation":
        """Return ``h * self * h^-1`` in a single pass."""
        him = h.images
        sim = self.images
        out = [0] * len(sim)
        for i in range(len(sim)):
            out[him[i] - 1] = him[sim[i] - 1]
        return Permutation._raw(tuple(out))

    def __pow__(self, k: int) -> "Permutation":
        n = len(self.images)
        if k == 0:
            return Permutation.identity(n)
        base = self if k > 0 else self.inverse()
        k = abs(k)
        out = [0] * n
        for cycle in base.cycles(fixed_points=True):
            m = len(cycle)
            for i, point in enumerate(cycle):
                out[point - 1] = cycle[(i + k) % m]
        return Permutation._raw(tuple(out))

    def cycles(self, fixed_points: bool = False) -> list[list[int]]:
        """Disjoint cycles, each starting at its least point, sorted by it."""
        seen = [False] * len(self.images)
        out = []
        for start in range(1, len(self.images) + 1):
            if seen[start - 1]:
                continue
            cur, cycle = start, []
            while not seen[cur - 1]:
                seen[cur - 1] = True
                cycle.append(cur)
                cur = self.images[cur - 1]
            if len(cycle) > 1 or fixed_points:
                out.append(cycle)
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles(fixed_points=True)))

    def is_identity(self) -> bool:
        return all(j == i + 1 for i, j in enumerate(self.images))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def order_of(g: Permutation) -> int:
    """Least ``k >= 1`` with ``g^k`` the identity."""
    return g.order()


class ConjugacyClass:
    """One conjugacy class, with its lexicographically least representative."""

    __slots__ = ("representative", "elements")

    def __init__(self, representative: Permutation, elements: frozenset[Permutation]):
        self.representative = representative
        self.elements = elements

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self.elements

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __repr__(self) -> str:
        return f"ConjugacyClass({self.representative!r}, size={len(self.elements)})"


def _mulclose(
    generators: Sequence[Permutation],
    bound: int = ORDER_BOUND,
    keep_parents: bool = False,
):
    """Breadth-first closure of ``generators`` under right multiplication.

    Returns ``(elements, index, parents)`` where ``elements`` is in
    deterministic BFS order starting from the identity and ``parents[i]``
    is ``(parent_index, generator_index)`` recording one witness word per
    element (``None`` for the identity).
    """
    degree = generators[0].degree
    identity = Permutation.identity(degree)
    elements = [identity]
    index = {identity: 0}
    parents: list[Optional[tuple[int, int]]] = [None]
    frontier = 0
    while frontier < len(elements):
        x = elements[frontier]
        for gi, g in enumerate(generators):
            y = x * g
            if y not in index:
                if len(elements) >= bound:
                    raise OrderBoundExceeded(
                        f"closure exceeded {bound} elements"
                    )
                index[y] = len(elements)
                elements.append(y)
                parents.append((frontier, gi))
        frontier += 1
    if keep_parents:
        return elements, index, parents
    return elements, index, None


class PermGroup:
    """A finite group of permutations with its element set materialized.

    Construct with :func:`close` or the builders in
    :mod:`surfmoduli.catalog`.  ``elements`` is a tuple in a deterministic
    breadth-first order with the identity first; each element also carries
    a witness word in the generators (used to extend generator assignments
    to homomorphisms).  Groups compare by object identity.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        elements: Sequence[Permutation],
        index: dict[Permutation, int],
        parents: Sequence[Optional[tuple[int, int]]],
        name: Optional[str] = None,
    ):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._index = index
        self._parents = tuple(parents)
        self.name = name
        self._order_cache: dict[int, int] = {}
        self._cyclic_cache: dict[int, frozenset[int]] = {}
        self._power_sig_cache: dict[int, frozenset[int]] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._index

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label}: degree {self.degree}, order {self.order}>"

    def index_of(self, g: Permutation) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise ValueError(f"{g!r} is not an element of {self!r}") from None

    def element_order(self, g: Permutation) -> int:
        i = self.index_of(g)
        cached = self._order_cache.get(i)
        if cached is None:
            cached = self._order_cache[i] = g.order()
        return cached

    def generator_word(self, g: Permutation) -> list[int]:
        """A witness word: generator indices whose product is ``g``."""
        word: list[int] = []
        i = self.index_of(g)
        while self._parents[i] is not None:
            i, gi = self._parents[i]
            word.append(gi)
        word.reverse()
        return word

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(
            a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1 :]
        )

    @cached_property
    def _classes(self) -> tuple[ConjugacyClass, ...]:
        gens = self.generators
        assigned = [False] * self.order
        classes = []
        for start in range(self.order):
            if assigned[start]:
                continue
            seed = self.elements[start]
            orbit = [seed]
            seen = {seed}
            assigned[start] = True
            frontier = 0
            while frontier < len(orbit):
                x = orbit[frontier]
                for g in gens:
                    y = x.conjugated_by(g)
                    if y not in seen:
                        seen.add(y)
                        orbit.append(y)
                        assigned[self._index[y]] = True
                frontier += 1
            rep = min(seen, key=lambda p: p.images)
            classes.append(ConjugacyClass(rep, frozenset(seen)))
        return tuple(classes)

    @cached_property
    def _class_index(self) -> dict[Permutation, int]:
        out = {}
        for ci, cls in enumerate(self._classes):
            for g in cls.elements:
                out[g] = ci
        return out

    def conjugacy_classes(self) -> tuple[ConjugacyClass, ...]:
        """Partition into conjugation orbits, identity class first."""
        return self._classes

    def class_index_of(self, g: Permutation) -> int:
        if g not in self._index:
            raise ValueError(f"{g!r} is not an element of {self!r}")
        return self._class_index[g]

    def cyclic_subgroup_indices(self, g: Permutation) -> frozenset[int]:
        """Element indices of the cyclic subgroup generated by ``g``."""
        i = self.index_of(g)
        cached = self._cyclic_cache.get(i)
        if cached is None:
            idxs = set()
            p = g
            while True:
                idxs.add(self._index[p])
                if p.is_identity():
                    break
                p = p * g
            cached = self._cyclic_cache[i] = frozenset(idxs)
        return cached

    def power_class_signature(self, g: Permutation) -> frozenset[int]:
        """Class indices met by the nontrivial and trivial powers of ``g``.

        This is exactly the set of conjugacy classes contained in the union
        of all conjugates of all powers of ``g``.
        """
        i = self.index_of(g)
        cached = self._power_sig_cache.get(i)
        if cached is None:
            cidx = self._class_index
            sig = set()
            p = g
            while True:
                sig.add(cidx[p])
                if p.is_identity():
                    break
                p = p * g
            cached = self._power_sig_cache[i] = frozenset(sig)
        return cached

    def generates(self, elems: Sequence[Permutation]) -> bool:
        """True iff the closure of ``elems`` is the whole group."""
        for g in elems:
            self.index_of(g)
        if not elems:
            return self.order == 1
        sub, _, _ = _mulclose(list(elems), bound=self.order + 1)
        return len(sub) == self.order

    def generates_pair(self, a: Permutation, b: Permutation) -> bool:
        """Fast two-element generation test.

        For abelian groups the subgroup generated by two elements is the
        product set of their cyclic subgroups, so its size is
        ``|<a>| * |<b>| / |<a> n <b>|`` and no closure is needed.
        """
        if self.is_abelian:
            ca = self.cyclic_subgroup_indices(a)
            cb = self.cyclic_subgroup_indices(b)
            return len(ca) * len(cb) == self.order * len(ca & cb)
        sub, _, _ = _mulclose([a, b], bound=self.order + 1)
        return len(sub) == self.order

    def normal_closure_size(self, g: Permutation) -> int:
        """Order of the smallest normal subgroup containing ``g``."""
        gens = [g]
        while True:
            sub, sub_index, _ = _mulclose(gens, bound=self.order + 1)
            new = None
            for h in self.generators:
                for x in sub:
                    y = x.conjugated_by(h)
                    if y not in sub_index:
                        new = y
                        break
                if new is not None:
                    break
            if new is None:
                return len(sub)
            gens.append(new)

    def is_simple(self) -> bool:
        """True iff every nontrivial class normally generates the group."""
        if self.order < 2:
            raise ValueError("simplicity is defined for groups of order >= 2")
        for cls in self._classes:
            if cls.representative.is_identity():
                continue
            if self.normal_closure_size(cls.representative) != self.order:
                return False
        return True

    @cached_property
    def _inner_generator_images(self) -> frozenset[tuple]:
        gens = self.generators
        out = set()
        for h in self.elements:
            out.add(tuple(g.conjugated_by(h).images for g in gens))
        return frozenset(out)

    def _extend_generator_images(
        self, target: "PermGroup", images: Sequence[Permutation]
    ) -> Optional[list[Permutation]]:
        """Extend a generator assignment along the witness words.

        Returns the full element-by-element image list when the assignment
        is consistent with the whole multiplication table (checked against
        every pair (element, generator)), else ``None``.
        """
        full: list[Optional[Permutation]] = [None] * self.order
        full[0] = target.identity
        for i in range(1, self.order):
            pi, gi = self._parents[i]
            full[i] = full[pi] * images[gi]
        index = self._index
        for i, x in enumerate(self.elements):
            fx = full[i]
            for gi, g in enumerate(self.generators):
                if full[index[x * g]] != fx * images[gi]:
                    return None
        return full  # type: ignore[return-value]

    def automorphisms(self) -> list["GroupMap"]:
        """All automorphisms, by backtracking over generator images.

        Candidate images are constrained to elements of the same order
        lying in a conjugacy class of the same size; partial assignments
        are pruned when a product order disagrees.  Each returned map is
        flagged inner or outer.  Raises :class:`AutBoundExceeded` when the
        group is larger than ``AUT_BOUND``.
        """
        if self.order > AUT_BOUND:
            raise AutBoundExceeded(
                f"|G| = {self.order} exceeds AUT_BOUND = {AUT_BOUND}"
            )
        gens = self.generators
        class_size = {ci: len(c) for ci, c in enumerate(self._classes)}
        candidates = []
        for g in gens:
            og = self.element_order(g)
            sz = class_size[self.class_index_of(g)]
            candidates.append(
                [
                    t
                    for t in self.elements
                    if self.element_order(t) == og
                    and class_size[self.class_index_of(t)] == sz
                ]
            )

        found: list[GroupMap] = []
        assignment: list[Permutation] = []

        def backtrack(pos: int):
            if pos == len(gens):
                full = self._extend_generator_images(self, assignment)
                if full is not None and len(set(full)) == self.order:
                    found.append(
                        GroupMap(
                            self,
                            self,
                            tuple(assignment),
                            _full_images=full,
                        )
                    )
                return
            for t in candidates[pos]:
                ok = True
                for j in range(pos):
                    if (gens[j] * gens[pos]).order() != (
                        assignment[j] * t
                    ).order():
                        ok = False
                        break
                if ok:
                    assignment.append(t)
                    backtrack(pos + 1)
                    assignment.pop()

        backtrack(0)
        found.sort(key=lambda m: tuple(p.images for p in m.images))
        return found


class GroupMap:
    """A homomorphism between materialized groups, given on generators.

    The generator assignment is extended along each element's witness word
    and checked for consistency against the full multiplication table at
    construction; an inconsistent assignment raises ``ValueError``.
    """

    def __init__(
        self,
        source: PermGroup,
        target: PermGroup,
        images: Sequence[Permutation],
        _full_images: Optional[list[Permutation]] = None,
    ):
        if len(images) != len(source.generators):
            raise ValueError("one image per source generator is required")
        for t in images:
            target.index_of(t)
        self.source = source
        self.target = target
        self.images = tuple(images)
        if _full_images is None:
            _full_images = source._extend_generator_images(target, self.images)
            if _full_images is None:
                raise ValueError(
                    "generator assignment does not extend to a homomorphism"
                )
        self._full = _full_images
        self._mapping = {
            g: _full_images[i] for i, g in enumerate(source.elements)
        }

    def __call__(self, g: Permutation) -> Permutation:
        try:
            return self._mapping[g]
        except KeyError:
            raise ValueError(f"{g!r} is not in the source group") from None

    @cached_property
    def is_bijective(self) -> bool:
        return (
            self.source.order == self.target.order
            and len(set(self._full)) == self.source.order
        )

    @cached_property
    def is_inner(self) -> bool:
        """True iff this is conjugation by some element (endomaps only)."""
        if self.source is not self.target:
            return False
        key = tuple(p.images for p in self.images)
        return key in self.source._inner_generator_images

    def compose(self, other: "GroupMap") -> "GroupMap":
        """The map ``self o other`` (apply ``other`` first)."""
        if other.target is not self.source:
            raise ValueError("codomain/domain mismatch in composition")
        return GroupMap(
            other.source,
            self.target,
            tuple(self(other(g)) for g in other.source.generators),
        )

    def inverse(self) -> "GroupMap":
        if not self.is_bijective:
            raise ValueError("only bijective maps can be inverted")
        back = {v: k for k, v in self._mapping.items()}
        return GroupMap(
            self.target,
            self.source,
            tuple(back[g] for g in self.target.generators),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupMap)
            and self.source is other.source
            and self.target is other.target
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash((id(self.source), id(self.target), self.images))

    def __repr__(self) -> str:
        kind = "inner " if self.source is self.target and self.is_inner else ""
        return f"<{kind}GroupMap {list(self.images)!r}>"


def close(
    generators: Sequence[Permutation],
    name: Optional[str] = None,
    bound: int = ORDER_BOUND,
) -> PermGroup:
    """Materialize the group generated by ``generators``.

    All generators must share one degree (:class:`DegreeMismatch`), and
    the closure must stay within ``bound`` (:class:`OrderBoundExceeded`).
    """
    generators = list(generators)
    if not generators:
        raise ValueError("at least one generator is required")
    degree = generators[0].degree
    for g in generators[1:]:
        if g.degree != degree:
            raise DegreeMismatch(
                f"generator degrees differ: {degree} vs {g.degree}"
            )
    elements, index, parents = _mulclose(generators, bound=bound, keep_parents=True)
    return PermGroup(degree, generators, elements, index, parents, name=name)
