"""Group core: closure, classes, generation, simplicity, automorphisms."""

import itertools

import pytest
from conftest import naive_conjugacy_partition, naive_is_simple, naive_mulclose

from surfmoduli import catalog
from surfmoduli.errors import AutBoundExceeded, DegreeMismatch, OrderBoundExceeded
from surfmoduli.groups import GroupMap, Permutation, close, order_of


class TestPermutation:
    def test_validation(self):
        with pytest.raises(ValueError):
            Permutation([1, 1, 3])
        with pytest.raises(ValueError):
            Permutation([0, 1])

    def test_composition_is_left_action(self):
        p = Permutation.from_cycles(3, [1, 2])
        q = Permutation.from_cycles(3, [2, 3])
        assert (p * q)(2) == p(q(2))

    def test_inverse_and_pow(self):
        p = Permutation.from_cycles(5, [1, 2, 3, 4, 5])
        assert (p * p.inverse()).is_identity()
        assert p**5 == Permutation.identity(5)
        assert p**-2 == (p.inverse()) ** 2

    def test_conjugated_by_matches_products(self):
        p = Permutation.from_cycles(4, [1, 2, 3])
        h = Permutation.from_cycles(4, [2, 4])
        assert p.conjugated_by(h) == h * p * h.inverse()

    def test_order_examples(self):
        assert order_of(Permutation.identity(3)) == 1
        assert order_of(Permutation.from_cycles(5, [1, 2, 3, 4, 5])) == 5
        assert order_of(Permutation.from_cycles(5, [1, 2], [3, 4, 5])) == 6


class TestClose:
    def test_identity_gives_trivial_group(self):
        G = close([Permutation.identity(3)])
        assert G.order == 1

    def test_s5_order_matches_naive_closure(self):
        gens = [
            Permutation.from_cycles(5, [1, 2, 3, 4, 5]),
            Permutation.from_cycles(5, [1, 2]),
        ]
        assert len(naive_mulclose(gens)) == 120  # oracle
        assert close(gens).order == 120

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            close([Permutation.identity(3), Permutation.identity(4)])

    def test_order_bound(self):
        gens = [
            Permutation.from_cycles(5, [1, 2, 3, 4, 5]),
            Permutation.from_cycles(5, [1, 2]),
        ]
        with pytest.raises(OrderBoundExceeded):
            close(gens, bound=50)

    def test_elements_closed(self, small_catalog):
        G = small_catalog["S4"]
        els = set(G.elements)
        for g in list(els)[:6]:
            for h in list(els)[:6]:
                assert g * h in els
                assert g.inverse() in els


class TestConjugacyClasses:
    def test_cyclic_all_singletons(self, small_catalog):
        G = small_catalog["C5"]
        assert [len(c) for c in G.conjugacy_classes()] == [1] * 5

    def test_s4_class_sizes(self, small_catalog):
        G = small_catalog["S4"]
        oracle = sorted(len(c) for c in naive_conjugacy_partition(G))
        sizes = sorted(len(c) for c in G.conjugacy_classes())
        assert sizes == oracle == [1, 3, 6, 6, 8]

    def test_trivial_group_one_class(self):
        G = catalog.cyclic(1)
        assert len(G.conjugacy_classes()) == 1

    def test_classes_partition_and_conj_closed(self, small_catalog):
        for name in ("S4", "D5", "A4"):
            G = small_catalog[name]
            classes = G.conjugacy_classes()
            assert sum(len(c) for c in classes) == G.order
            for cls in classes:
                for g in cls:
                    for h in G.generators:
                        assert g.conjugated_by(h) in cls

    def test_representative_is_lex_least(self, small_catalog):
        G = small_catalog["S4"]
        for cls in G.conjugacy_classes():
            assert cls.representative.images == min(
                p.images for p in cls.elements
            )


class TestGenerates:
    def test_s4_examples(self, small_catalog):
        G = small_catalog["S4"]
        a = Permutation.from_cycles(4, [1, 2])
        b = Permutation.from_cycles(4, [1, 2, 3, 4])
        assert len(naive_mulclose([a, b])) == 24  # oracle
        assert G.generates([a, b])
        x = Permutation.from_cycles(4, [1, 2], [3, 4])
        y = Permutation.from_cycles(4, [1, 3], [2, 4])
        assert len(naive_mulclose([x, y])) == 4  # oracle
        assert not G.generates([x, y])
        assert G.generates(list(G.elements))

    def test_pair_fast_path_matches_closure(self, small_catalog):
        for name in ("C12", "EA3x3", "C2xC2"):
            G = small_catalog[name]
            for a in G.elements:
                for b in G.elements:
                    expected = len(naive_mulclose([a, b])) == G.order
                    assert G.generates_pair(a, b) == expected

    def test_membership_required(self, small_catalog):
        G = small_catalog["C5"]
        with pytest.raises(ValueError):
            G.generates([Permutation.from_cycles(5, [1, 2])])

    def test_cyclic_subgroup_size_is_element_order(self, small_catalog):
        for name in ("S4", "C12", "D5"):
            G = small_catalog[name]
            for g in G.elements:
                assert len(G.cyclic_subgroup_indices(g)) == order_of(g)


class TestIsSimple:
    def test_examples(self, small_catalog):
        assert small_catalog["A5"].is_simple()
        assert not small_catalog["C6"].is_simple()
        assert small_catalog["C7"].is_simple()

    def test_order_one_rejected(self):
        with pytest.raises(ValueError):
            catalog.cyclic(1).is_simple()

    def test_agrees_with_normal_subgroup_enumeration(self, small_catalog):
        for name, G in small_catalog.items():
            if G.order < 2:
                continue
            if len(G.conjugacy_classes()) > 13:
                # the class-union enumeration is exponential in the class
                # count; abelian groups are covered by the prime test below
                continue
            assert G.is_simple() == naive_is_simple(G), name

    def test_abelian_simple_iff_prime_order(self, small_catalog):
        primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}
        for name, G in small_catalog.items():
            if G.order < 2 or not G.is_abelian:
                continue
            assert G.is_simple() == (G.order in primes), name


class TestAutomorphisms:
    def test_c5(self, small_catalog):
        auts = small_catalog["C5"].automorphisms()
        assert len(auts) == 4
        assert sum(a.is_inner for a in auts) == 1

    def test_s3(self, small_catalog):
        auts = small_catalog["S3"].automorphisms()
        assert len(auts) == 6
        assert all(a.is_inner for a in auts)

    def test_trivial_group(self):
        auts = catalog.cyclic(1).automorphisms()
        assert len(auts) == 1

    def test_bound(self):
        G = catalog.symmetric(7)  # order 5040 > 2000
        with pytest.raises(AutBoundExceeded):
            G.automorphisms()

    def test_group_axioms(self, small_catalog):
        for name in ("C5", "S3", "A4", "C2xC2"):
            G = small_catalog[name]
            auts = G.automorphisms()
            keys = {a.images for a in auts}
            identity = GroupMap(G, G, G.generators)
            assert identity.images in keys
            for a in auts:
                assert a.inverse().images in keys
                for b in auts:
                    assert a.compose(b).images in keys

    def test_ea5x5_aut_count(self, small_catalog):
        # |GL(2, 5)| = (25 - 1)(25 - 5)
        auts = small_catalog["EA5x5"].automorphisms()
        assert len(auts) == 480

    def test_counts_match_brute_force_bijections(self, small_catalog):
        # every bijective generator assignment that extends = automorphism
        for name in ("C6", "S3"):
            G = small_catalog[name]
            count = 0
            for images in itertools.product(G.elements, repeat=len(G.generators)):
                try:
                    m = GroupMap(G, G, images)
                except ValueError:
                    continue
                if m.is_bijective:
                    count += 1
            assert count == len(G.automorphisms())


class TestGroupMap:
    def test_rejects_non_homomorphism(self, small_catalog):
        G = small_catalog["S4"]
        a = Permutation.from_cycles(4, [1, 2])
        b = Permutation.from_cycles(4, [1, 2, 3, 4])
        with pytest.raises(ValueError):
            GroupMap(G, G, [b, a])  # order profile cannot match

    def test_mapping_respects_products(self, small_catalog):
        G = small_catalog["S3"]
        for m in G.automorphisms():
            for x in G.elements:
                for y in G.elements:
                    assert m(x * y) == m(x) * m(y)
