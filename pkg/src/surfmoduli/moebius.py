"""Exact Moebius equivalence of finite branch sets on the projective line.

Everything is rational: points are exact fractions or the point at
infinity, maps are 2x2 rational matrices in a projective canonical form,
and no floating point is used anywhere.  A map is determined by the images
of three points, so equivalence of two n-point sets is decidable by fixing
one ordered triple inside the first set and trying every ordered triple of
the second as its image.  A ``None`` verdict therefore means "no rational
equivalence"; equivalence over larger fields is out of scope.

The built-in one-parameter family is the branch set of the genus-g
hyperelliptic curve

    w^2 = (z - a)(z + 2g) * prod_{i=0}^{2g-1} (z - i),

namely {a, -2g, 0, 1, ..., 2g-1}, of size 2g + 2, defined for g >= 3 and
any rational parameter a avoiding the fixed roots.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import ExcludedParameter, SizeMismatch

RationalLike = Union[int, str, Fraction]


class ProjPoint:
    """A point of the rational projective line: a fraction or infinity.

    Finite values are stored as :class:`fractions.Fraction`, which keeps
    them in lowest terms with positive denominator.
    """

    __slots__ = ("value",)

    def __init__(self, value: Optional[RationalLike]):
        self.value = None if value is None else Fraction(value)

    @staticmethod
    def infinity() -> "ProjPoint":
        return ProjPoint(None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def sort_key(self) -> tuple:
        # finite points by value, infinity last
        if self.value is None:
            return (1, Fraction(0))
        return (0, self.value)

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjPoint) and self.value == other.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    @staticmethod
    def parse(token: str) -> "ProjPoint":
        token = token.strip()
        if token in ("inf", "oo", "infinity"):
            return ProjPoint.infinity()
        return ProjPoint(Fraction(token))


class BranchSet:
    """A finite set of at least three distinct projective points."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable[ProjPoint]):
        points = list(points)
        unique = frozenset(points)
        if len(unique) != len(points):
            raise ValueError("branch points must be distinct")
        if len(unique) < 3:
            raise ValueError("a branch set needs at least three points")
        self.points = unique

    def sorted_points(self) -> list[ProjPoint]:
        return sorted(self.points, key=ProjPoint.sort_key)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p: ProjPoint) -> bool:
        return p in self.points

    def __eq__(self, other) -> bool:
        return isinstance(other, BranchSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        inner = ", ".join(repr(p) for p in self.sorted_points())
        return f"BranchSet({{{inner}}})"


class MoebiusMap:
    """An invertible rational map z -> (a z + b) / (c z + d).

    Stored projectively: entries are scaled so that the first nonzero
    entry in the order (a, b, c, d) equals 1, making equality of maps
    equality of matrices.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: RationalLike, b: RationalLike,
                 c: RationalLike, d: RationalLike):
        a, b, c, d = (Fraction(x) for x in (a, b, c, d))
        if a * d - b * c == 0:
            raise ValueError("degenerate matrix: determinant is zero")
        for pivot in (a, b, c, d):
            if pivot != 0:
                a, b, c, d = a / pivot, b / pivot, c / pivot, d / pivot
                break
        self.a, self.b, self.c, self.d = a, b, c, d

    @staticmethod
    def identity() -> "MoebiusMap":
        return MoebiusMap(1, 0, 0, 1)

    def __call__(self, p: ProjPoint) -> ProjPoint:
        if p.is_infinite:
            if self.c == 0:
                return ProjPoint.infinity()
            return ProjPoint(self.a / self.c)
        den = self.c * p.value + self.d
        if den == 0:
            return ProjPoint.infinity()
        return ProjPoint((self.a * p.value + self.b) / den)

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """Matrix product: apply ``other`` first."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def matrix(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return ((self.a, self.b), (self.c, self.d))

    def __eq__(self, other) -> bool:
        return isinstance(other, MoebiusMap) and self.matrix() == other.matrix()

    def __hash__(self) -> int:
        return hash(self.matrix())

    def __repr__(self) -> str:
        return f"MoebiusMap({self.a}, {self.b}, {self.c}, {self.d})"

    @staticmethod
    def to_zero_one_inf(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> "MoebiusMap":
        """The unique map sending (p1, p2, p3) to (0, 1, inf)."""
        if len({p1, p2, p3}) != 3:
            raise ValueError("the three points must be distinct")
        if p1.is_infinite:
            z2, z3 = p2.value, p3.value
            return MoebiusMap(0, z2 - z3, 1, -z3)
        if p2.is_infinite:
            z1, z3 = p1.value, p3.value
            return MoebiusMap(1, -z1, 1, -z3)
        if p3.is_infinite:
            z1, z2 = p1.value, p2.value
            return MoebiusMap(1, -z1, 0, z2 - z1)
        z1, z2, z3 = p1.value, p2.value, p3.value
        return MoebiusMap(z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1))

    @staticmethod
    def through_triples(
        source: tuple[ProjPoint, ProjPoint, ProjPoint],
        target: tuple[ProjPoint, ProjPoint, ProjPoint],
    ) -> "MoebiusMap":
        """The unique map sending the source triple to the target triple."""
        fwd = MoebiusMap.to_zero_one_inf(*source)
        back = MoebiusMap.to_zero_one_inf(*target).inverse()
        return back.compose(fwd)


def apply_map(m: MoebiusMap, branch: BranchSet) -> BranchSet:
    """Image of a branch set; cardinality is preserved."""
    return BranchSet([m(p) for p in branch])


def family_branch_set(genus: int, param: RationalLike) -> BranchSet:
    """Branch set {a, -2g, 0, 1, ..., 2g-1} of the one-parameter family.

    Raises :class:`ExcludedParameter` when the parameter collides with one
    of the fixed roots.
    """
    if genus < 3:
        raise ValueError("the family is defined for genus >= 3")
    a = Fraction(param)
    fixed = [Fraction(-2 * genus)] + [Fraction(i) for i in range(2 * genus)]
    if a in fixed:
        raise ExcludedParameter(
            f"parameter {a} is one of the fixed roots of the genus-{genus} family"
        )
    return BranchSet([ProjPoint(a)] + [ProjPoint(v) for v in fixed])


def moebius_equivalent(b1: BranchSet, b2: BranchSet) -> Optional[MoebiusMap]:
    """A rational map carrying ``b1`` onto ``b2``, or ``None``.

    Any map with ``m(b1) = b2`` is determined by where it sends one fixed
    ordered triple of ``b1``, so trying every ordered triple of ``b2`` as
    the image is a complete decision procedure over the rationals.  Target
    triples are tried in lexicographic order of the sorted points and the
    first certificate is returned.
    """
    if len(b1) != len(b2):
        raise SizeMismatch(f"branch sets of sizes {len(b1)} and {len(b2)}")
    source = tuple(b1.sorted_points()[:3])
    for target in itertools.permutations(b2.sorted_points(), 3):
        m = MoebiusMap.through_triples(source, target)
        if apply_map(m, b1) == b2:
            return m
    return None
