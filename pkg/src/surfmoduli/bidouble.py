"""Invariants and classification predicates for bidouble covers of the
quadric and their simple-type specialization.

A bidouble cover is a (Z/2)^2 Galois cover of P1 x P1 cut out by a pair of
equations of bidegrees (2a, 2b) and (2c, 2d) with a, b, c, d >= 3.  Its
holomorphic Euler characteristic is the sum of the Euler characteristics
of the four character sheaves pushed down to the quadric,

    chi = 1 + (a-1)(b-1) + (c-1)(d-1) + (a+c-1)(b+d-1).

Two conventions for the canonical self-intersection are carried side by
side.  The canonical class pulls back from the class (a+c-2, b+d-2) on the
quadric, whose self-intersection is 2(a+c-2)(b+d-2); through the degree-4
cover this gives

    ksq = 8 (a+c-2)(b+d-2),

which is the primary value here.  The classically printed value without
the covering-degree factor is kept verbatim as ``ksq_paper`` and is always
reported alongside.

The simple-type case d = b gives the three-parameter family whose
diffeomorphism type depends only on b and a+c; the one-step move
(a, b, c) -> (a+1, b, c-1) is a diffeomorphism whenever a, b, c-1 >= 2,
and chains of such steps decide diffeomorphism inside the family.  The
non-deformation predicate certifies, from four integers (a, b, c, k)
subject to arithmetic conditions (I)-(IV), that the simple bidouble types
(2a,2b),(2c,2b) and (2a+2k,2b),(2c-2k,2b) land in different connected
components of their moduli space.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .invariants import SurfaceInvariants


@dataclass(frozen=True)
class BidoubleType:
    """Bidegrees ((2a, 2b), (2c, 2d)) of a bidouble cover, a..d >= 3."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if min(self.a, self.b, self.c, self.d) < 3:
            raise ValueError("bidouble types need a, b, c, d >= 3")


@dataclass(frozen=True)
class AbcType:
    """A simple-type cover (d = b), entries positive.

    Entries below 3 are admitted because the one-step diffeomorphism
    theorem applies down to a, b, c-1 >= 2 and its hypotheses must be
    checkable on out-of-bound neighbours; invariants computed for such
    types carry the sub-bound flag.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise ValueError("abc types need positive entries")

    @property
    def below_standard_bound(self) -> bool:
        return min(self.a, self.b, self.c) < 3


@dataclass(frozen=True)
class BidoubleInvariants:
    """Surface invariants plus the second ksq convention."""

    invariants: SurfaceInvariants
    ksq_paper: int
    below_standard_bound: bool = False

    @property
    def chi(self) -> int:
        return self.invariants.chi

    @property
    def ksq(self) -> int:
        return self.invariants.ksq

    def as_dict(self) -> dict:
        out = dict(self.invariants.as_dict())
        out["ksq_paper"] = self.ksq_paper
        if self.below_standard_bound:
            out["below_standard_bound"] = True
        return out


def _chi(a: int, b: int, c: int, d: int) -> int:
    return 1 + (a - 1) * (b - 1) + (c - 1) * (d - 1) + (a + c - 1) * (b + d - 1)


def _ksq_paper(a: int, b: int, c: int, d: int) -> int:
    return (a + c - 2) * (b + d - 2)


def bidouble_invariants(t: BidoubleType) -> BidoubleInvariants:
    """chi, both ksq conventions, and the Noether-derived e and tau."""
    chi = _chi(t.a, t.b, t.c, t.d)
    printed = _ksq_paper(t.a, t.b, t.c, t.d)
    return BidoubleInvariants(
        invariants=SurfaceInvariants.from_chi_ksq(chi, 8 * printed),
        ksq_paper=printed,
    )


def abc_invariants(t: AbcType) -> BidoubleInvariants:
    """Invariants of the simple-type cover with d = b.

    These depend on (a, b, c) only through b and a+c.  Types with an entry
    equal to 2 use the same formulas and carry the sub-bound flag.
    """
    chi = _chi(t.a, t.b, t.c, t.b)
    printed = _ksq_paper(t.a, t.b, t.c, t.b)
    return BidoubleInvariants(
        invariants=SurfaceInvariants.from_chi_ksq(chi, 8 * printed),
        ksq_paper=printed,
        below_standard_bound=t.below_standard_bound,
    )


def _step_allowed(s: AbcType) -> bool:
    # hypotheses for the move (a, b, c) -> (a+1, b, c-1)
    return s.a >= 2 and s.b >= 2 and s.c - 1 >= 2


def diffeo_step(s: AbcType, s2: AbcType) -> bool:
    """True iff ``s2`` is one elementary diffeomorphism step from ``s``.

    A step transfers one unit between a and c; the hypotheses
    a, b, c-1 >= 2 must hold in the direction actually applied.
    """
    if (s2.a, s2.b, s2.c) == (s.a + 1, s.b, s.c - 1):
        return _step_allowed(s)
    if (s2.a, s2.b, s2.c) == (s.a - 1, s.b, s.c + 1):
        return _step_allowed(s2)
    return False


def diffeo_equivalent(s: AbcType, s2: AbcType) -> Optional[list[AbcType]]:
    """Chain of elementary steps from ``s`` to ``s2``, or ``None``.

    Equivalence requires equal b and equal a+c; the witness chain lists
    every intermediate type, each consecutive pair being a valid step.
    """
    if s.b != s2.b or s.a + s.c != s2.a + s2.c:
        return None
    if s == s2:
        return [s]
    # steps move along the line a + c = const; breadth-first with parents
    frontier = deque([s])
    parent: dict[AbcType, Optional[AbcType]] = {s: None}
    while frontier:
        cur = frontier.popleft()
        nexts = []
        if _step_allowed(cur):
            nexts.append(AbcType(cur.a + 1, cur.b, cur.c - 1))
        if cur.a - 1 >= 1:
            back = AbcType(cur.a - 1, cur.b, cur.c + 1)
            if _step_allowed(back):
                nexts.append(back)
        for nxt in nexts:
            if nxt in parent:
                continue
            parent[nxt] = cur
            if nxt == s2:
                chain = [nxt]
                while parent[chain[-1]] is not None:
                    chain.append(parent[chain[-1]])
                chain.reverse()
                return chain
            frontier.append(nxt)
    return None


_CONDITION_TEXT = {
    "I": "a, b, c, k strictly positive even integers with a, b, c-k >= 4",
    "II": "a >= 2c + 1",
    "III": "b >= c + 2",
    "IV1": "b >= 2a + 2k - 1",
    "IV2": "a >= b + 2",
}


@dataclass(frozen=True)
class NondefReport:
    """Truth value of each clause of the non-deformation criterion."""

    a: int
    b: int
    c: int
    k: int
    conditions: dict = field(compare=False)

    @property
    def verdict(self) -> bool:
        c = self.conditions
        return c["I"] and c["II"] and c["III"] and (c["IV1"] or c["IV2"])

    def failing(self) -> list[str]:
        out = [name for name in ("I", "II", "III") if not self.conditions[name]]
        if not (self.conditions["IV1"] or self.conditions["IV2"]):
            out.append("IV1/IV2")
        return out

    def as_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "k": self.k,
            "verdict": self.verdict,
            "conditions": dict(self.conditions),
            "failing": self.failing(),
        }

    @staticmethod
    def condition_text(name: str) -> str:
        return _CONDITION_TEXT[name]


def nondef_predicate(a: int, b: int, c: int, k: int) -> NondefReport:
    """Decide the non-deformation criterion for the pair of simple types
    (2a,2b),(2c,2b) versus (2a+2k,2b),(2c-2k,2b).

    A true verdict certifies the two types are not deformation
    equivalent; since they share b and a+c they always have equal chi and
    ksq, so the certificate separates surfaces with matching invariants.
    """
    all_even_positive = all(v > 0 and v % 2 == 0 for v in (a, b, c, k))
    conditions = {
        "I": all_even_positive and a >= 4 and b >= 4 and c - k >= 4,
        "II": a >= 2 * c + 1,
        "III": b >= c + 2,
        "IV1": b >= 2 * a + 2 * k - 1,
        "IV2": a >= b + 2,
    }
    return NondefReport(a, b, c, k, conditions)


@dataclass(frozen=True)
class TypeClassification:
    """Bidouble types matching target invariants, with diffeo grouping."""

    chi: int
    ksq: int
    convention: str
    bound: int
    types: tuple
    diffeo_classes: tuple  # ((b, a+c), types-with-d-equal-b) pairs

    def as_dict(self) -> dict:
        return {
            "chi": self.chi,
            "ksq": self.ksq,
            "convention": self.convention,
            "bound": self.bound,
            "types": [[t.a, t.b, t.c, t.d] for t in self.types],
            "diffeo_classes": [
                {
                    "b": key[0],
                    "a_plus_c": key[1],
                    "types": [[t.a, t.b, t.c, t.d] for t in members],
                }
                for key, members in self.diffeo_classes
            ],
        }


def enumerate_types(
    chi: int, ksq: int, bound: int, paper_convention: bool = False
) -> TypeClassification:
    """All bidouble types with entries in [3, bound] matching (chi, ksq).

    ``ksq`` is compared in the pullback convention unless
    ``paper_convention`` is set.  Types with d = b are additionally grouped
    into diffeomorphism classes by their (b, a+c) invariant.
    """
    matches = []
    for a in range(3, bound + 1):
        for b in range(3, bound + 1):
            for c in range(3, bound + 1):
                for d in range(3, bound + 1):
                    if _chi(a, b, c, d) != chi:
                        continue
                    printed = _ksq_paper(a, b, c, d)
                    value = printed if paper_convention else 8 * printed
                    if value == ksq:
                        matches.append(BidoubleType(a, b, c, d))
    classes: dict[tuple[int, int], list[BidoubleType]] = {}
    for t in matches:
        if t.d == t.b:
            classes.setdefault((t.b, t.a + t.c), []).append(t)
    return TypeClassification(
        chi=chi,
        ksq=ksq,
        convention="paper" if paper_convention else "pullback",
        bound=bound,
        types=tuple(matches),
        diffeo_classes=tuple(sorted(classes.items())),
    )
