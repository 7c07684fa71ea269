"""Shared brute-force oracles, deliberately independent of the library's
optimized code paths: plain worklist closures, raw double loops, and
element-level stabilizer sets computed by conjugating over the whole group.
"""

from __future__ import annotations

import itertools

import pytest

from surfmoduli.groups import Permutation


def naive_mulclose(perms):
    """Worklist closure under products only; finiteness supplies inverses."""
    elements = set(perms)
    if not elements:
        return elements
    degree = next(iter(elements)).degree
    elements.add(Permutation.identity(degree))
    work = list(elements)
    while work:
        x = work.pop()
        for y in list(elements):
            for z in (x * y, y * x):
                if z not in elements:
                    elements.add(z)
                    work.append(z)
    return elements


def naive_conjugacy_partition(G):
    """Conjugate every element by every element; no generator tricks."""
    remaining = set(G.elements)
    classes = []
    while remaining:
        x = min(remaining, key=lambda p: p.images)
        cls = {x.conjugated_by(h) for h in G.elements}
        classes.append(frozenset(cls))
        remaining -= cls
    return classes


def naive_is_simple(G):
    """Enumerate all normal subgroups as class unions closed under product."""
    classes = naive_conjugacy_partition(G)
    identity_cls = next(c for c in classes if G.identity in c)
    others = [c for c in classes if c is not identity_cls]
    normal_orders = set()
    for r in range(len(others) + 1):
        for combo in itertools.combinations(others, r):
            subset = set(identity_cls)
            for c in combo:
                subset |= c
            if G.order % len(subset) != 0:
                continue
            if all(x * y in subset for x in subset for y in subset):
                normal_orders.add(len(subset))
    return normal_orders == {1, G.order}


def naive_triples(G):
    """All generating triples by the raw |G|^2 double loop."""
    out = []
    for a in G.elements:
        for b in G.elements:
            if len(naive_mulclose([a, b])) != G.order:
                continue
            out.append((a, b, (a * b).inverse()))
    return out


def naive_sigma(G, triple):
    """Element-level stabilizer set: conjugate all powers by everything."""
    out = set()
    for x in triple:
        p = x
        while True:
            for h in G.elements:
                out.add(p.conjugated_by(h))
            if p.is_identity():
                break
            p = p * x
    return out


def naive_genus(G, triple):
    rhs = -2 * G.order
    for x in triple:
        rhs += G.order - G.order // x.order()
    assert (rhs + 2) % 2 == 0
    return (rhs + 2) // 2


def naive_canonical_pair(G, t1, t2):
    """Least simultaneous conjugate of the six image tuples."""
    perms = t1 + t2
    return min(
        tuple(p.conjugated_by(h).images for p in perms) for h in G.elements
    )


@pytest.fixture(scope="session")
def small_catalog():
    from surfmoduli import catalog

    return {
        "C2": catalog.cyclic(2),
        "C3": catalog.cyclic(3),
        "C5": catalog.cyclic(5),
        "C6": catalog.cyclic(6),
        "C7": catalog.cyclic(7),
        "C12": catalog.cyclic(12),
        "C2xC2": catalog.builtin("C2xC2"),
        "S3": catalog.symmetric(3),
        "S4": catalog.symmetric(4),
        "A4": catalog.alternating(4),
        "A5": catalog.alternating(5),
        "D4": catalog.dihedral(4),
        "D5": catalog.dihedral(5),
        "EA3x3": catalog.elementary_abelian(3),
        "EA5x5": catalog.elementary_abelian(5),
    }
