"""Bidouble/abc invariants, diffeomorphism chains, non-deformation tests."""

import itertools

import pytest

from surfmoduli.bidouble import (
    AbcType,
    BidoubleType,
    abc_invariants,
    bidouble_invariants,
    diffeo_equivalent,
    diffeo_step,
    enumerate_types,
    nondef_predicate,
)


def direct_image_chi(a, b, c, d):
    """Oracle: sum the Euler characteristics of the four character sheaves
    O_Q(-p, -q) for (p, q) in {(0,0), (a,b), (c,d), (a+c, b+d)}, using
    chi(O_Q(-p, -q)) = (p-1)(q-1) for p, q >= 1 and 1 for (0, 0)."""
    total = 0
    for p, q in ((0, 0), (a, b), (c, d), (a + c, b + d)):
        total += 1 if (p, q) == (0, 0) else (p - 1) * (q - 1)
    return total


class TestTypes:
    def test_bidouble_bound(self):
        with pytest.raises(ValueError):
            BidoubleType(2, 3, 3, 3)

    def test_abc_accepts_small_entries_with_flag(self):
        assert AbcType(2, 3, 3).below_standard_bound
        assert not AbcType(3, 3, 3).below_standard_bound
        with pytest.raises(ValueError):
            AbcType(0, 3, 3)


class TestInvariants:
    def test_3333(self):
        inv = bidouble_invariants(BidoubleType(3, 3, 3, 3))
        assert direct_image_chi(3, 3, 3, 3) == 34  # oracle: 1 + 4 + 4 + 25
        assert inv.chi == 34
        assert inv.ksq == 128
        assert inv.ksq_paper == 16

    def test_3456(self):
        inv = bidouble_invariants(BidoubleType(3, 4, 5, 6))
        assert direct_image_chi(3, 4, 5, 6) == 90
        assert inv.chi == 90 and inv.ksq == 384 and inv.ksq_paper == 48

    def test_chi_oracle_exhaustive(self):
        for a, b, c, d in itertools.product(range(3, 13), repeat=4):
            inv = bidouble_invariants(BidoubleType(a, b, c, d))
            assert inv.chi == direct_image_chi(a, b, c, d)

    def test_abc_matches_bidouble_with_d_equal_b(self):
        assert (
            abc_invariants(AbcType(3, 3, 3)).as_dict()
            == bidouble_invariants(BidoubleType(3, 3, 3, 3)).as_dict()
        )

    def test_abc_233_relaxed(self):
        inv = abc_invariants(AbcType(2, 3, 3))
        assert inv.chi == 1 + 2 + 4 + 4 * 5 == 27
        assert inv.below_standard_bound

    def test_abc_depends_only_on_b_and_a_plus_c(self):
        a = abc_invariants(AbcType(3, 4, 5)).as_dict()
        b = abc_invariants(AbcType(5, 4, 3)).as_dict()
        c = abc_invariants(AbcType(4, 4, 4)).as_dict()
        assert a == b == c

    def test_noether_relations(self):
        inv = bidouble_invariants(BidoubleType(4, 5, 6, 7)).invariants
        assert inv.e == 12 * inv.chi - inv.ksq
        assert inv.tau == inv.ksq - 8 * inv.chi


class TestDiffeoStep:
    def test_233_to_332(self):
        assert diffeo_step(AbcType(2, 3, 3), AbcType(3, 3, 2))

    def test_232_to_331_blocked(self):
        assert not diffeo_step(AbcType(2, 3, 2), AbcType(3, 3, 1))

    def test_self_is_not_a_step(self):
        s = AbcType(3, 3, 3)
        assert not diffeo_step(s, s)

    def test_step_preserves_invariants(self):
        for a, b, c in itertools.product(range(2, 7), repeat=3):
            s = AbcType(a, b, c)
            s2 = AbcType(a + 1, b, c - 1) if c - 1 >= 1 else None
            if s2 and diffeo_step(s, s2):
                assert abc_invariants(s).chi == abc_invariants(s2).chi
                assert abc_invariants(s).ksq == abc_invariants(s2).ksq

    def test_symmetry_of_step(self):
        for a, b, c in itertools.product(range(2, 7), repeat=3):
            s = AbcType(a, b, c)
            if c - 1 >= 1:
                s2 = AbcType(a + 1, b, c - 1)
                assert diffeo_step(s, s2) == diffeo_step(s2, s)


class TestDiffeoEquivalent:
    def test_235_to_532_three_steps(self):
        chain = diffeo_equivalent(AbcType(2, 3, 5), AbcType(5, 3, 2))
        assert chain is not None
        assert [(t.a, t.b, t.c) for t in chain] == [
            (2, 3, 5),
            (3, 3, 4),
            (4, 3, 3),
            (5, 3, 2),
        ]
        for s, s2 in zip(chain, chain[1:]):
            assert diffeo_step(s, s2)

    def test_different_b_rejected(self):
        assert diffeo_equivalent(AbcType(3, 4, 5), AbcType(3, 5, 4)) is None

    def test_different_sum_rejected(self):
        assert diffeo_equivalent(AbcType(3, 4, 5), AbcType(4, 4, 5)) is None

    def test_equivalence_relation_axioms_up_to_8(self):
        types = [
            AbcType(a, b, c)
            for a, b, c in itertools.product(range(2, 9), repeat=3)
        ]
        by_line = {}
        for t in types:
            by_line.setdefault((t.b, t.a + t.c), []).append(t)
        for t in types:
            assert diffeo_equivalent(t, t) is not None  # reflexive
        for members in by_line.values():
            for s in members:
                for s2 in members:
                    fwd = diffeo_equivalent(s, s2) is not None
                    back = diffeo_equivalent(s2, s) is not None
                    assert fwd == back  # symmetric
        for members in by_line.values():
            for s in members:
                reach = {
                    s2
                    for s2 in members
                    if diffeo_equivalent(s, s2) is not None
                }
                for s2 in reach:
                    reach2 = {
                        s3
                        for s3 in members
                        if diffeo_equivalent(s2, s3) is not None
                    }
                    assert reach2 <= reach  # transitive

    def test_chain_invariants_constant(self):
        chain = diffeo_equivalent(AbcType(2, 5, 8), AbcType(8, 5, 2))
        assert chain
        chis = {abc_invariants(t).chi for t in chain}
        assert len(chis) == 1


class TestNondef:
    def test_positive_case(self):
        assert nondef_predicate(14, 8, 6, 2).verdict

    def test_odd_k_fails_I(self):
        rep = nondef_predicate(14, 8, 6, 3)
        assert not rep.verdict
        assert not rep.conditions["I"]
        assert "I" in rep.failing()

    def test_small_a_fails_II(self):
        rep = nondef_predicate(8, 8, 6, 2)
        assert not rep.verdict
        assert not rep.conditions["II"]
        assert "II" in rep.failing()

    def test_odd_b_fails_I(self):
        rep = nondef_predicate(14, 7, 6, 2)
        assert not rep.verdict
        assert not rep.conditions["I"]

    def test_true_verdict_implies_matching_invariants(self):
        cases = [
            (a, b, c, k)
            for a in range(4, 20, 2)
            for b in range(4, 20, 2)
            for c in range(4, 12, 2)
            for k in range(2, 6, 2)
        ]
        hits = 0
        for a, b, c, k in cases:
            if not nondef_predicate(a, b, c, k).verdict:
                continue
            hits += 1
            s = bidouble_invariants(BidoubleType(a, b, c, b))
            s2 = bidouble_invariants(BidoubleType(a + k, b, c - k, b))
            assert s.chi == s2.chi and s.ksq == s2.ksq
        assert hits > 0


class TestEnumerateTypes:
    def test_finds_3333(self):
        result = enumerate_types(34, 128, 12)
        assert BidoubleType(3, 3, 3, 3) in result.types
        assert ((3, 6), (BidoubleType(3, 3, 3, 3),)) in [
            (k, tuple(v)) for k, v in result.diffeo_classes
        ]

    def test_chi_2_is_empty(self):
        # exhaustive check of the minimum: chi(3,3,3,3) = 34 is least
        result = enumerate_types(2, 8, 12)
        assert result.types == ()
        lows = [
            bidouble_invariants(BidoubleType(a, b, c, d)).chi
            for a, b, c, d in itertools.product(range(3, 7), repeat=4)
        ]
        assert min(lows) == 34

    def test_bound_zero_empty(self):
        assert enumerate_types(34, 128, 0).types == ()

    def test_paper_convention_flag(self):
        assert enumerate_types(34, 16, 12, paper_convention=True).types == (
            BidoubleType(3, 3, 3, 3),
        )
