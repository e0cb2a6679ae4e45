from fractions import Fraction
import json

import pytest
from hypothesis import given, settings, strategies as st

from dihedral_loci.groups import automorphisms, dihedral_group, make_group
from dihedral_loci.hurwitz import (
    HurwitzError,
    HurwitzVector,
    InconsistentSignature,
    Signature,
    apply_aut,
    as_vector,
    braid_move,
    class_multiset,
    delta,
    generates,
    normalize_triple,
    orbifold_euler,
    product_one,
    riemann_hurwitz_genus,
    signature_of,
)

from oracles import bfs_orbit


def vectors(group, min_len=3, max_len=6):
    return st.lists(st.integers(0, group.order - 1), min_size=min_len, max_size=max_len).map(
        lambda xs: HurwitzVector(group, tuple(xs))).filter(lambda v: v.r >= min_len)


G6 = make_group(1, 6)
G5 = make_group(1, 5)


@settings(max_examples=150, deadline=None)
@given(vectors(G6))
def test_braid_relation(v):
    for i in range(1, v.r - 1):
        lhs = braid_move(braid_move(braid_move(v, i), i + 1), i)
        rhs = braid_move(braid_move(braid_move(v, i + 1), i), i + 1)
        assert lhs == rhs


@settings(max_examples=150, deadline=None)
@given(vectors(G6, 4, 7))
def test_far_braids_commute(v):
    for i in range(1, v.r):
        for j in range(i + 2, v.r):
            assert braid_move(braid_move(v, i), j) == braid_move(braid_move(v, j), i)


@settings(max_examples=150, deadline=None)
@given(vectors(G5, 2, 6))
def test_inverse_and_product(v):
    for i in range(1, v.r):
        w = braid_move(v, i)
        assert braid_move(w, i, -1) == v
        assert w.product() == v.product()
        assert sorted(map(v.group.order_idx, w.branches)) == sorted(map(v.group.order_idx, v.branches))


@settings(max_examples=60, deadline=None)
@given(vectors(G6, 2, 5), st.integers(0, 10_000))
def test_aut_commutes_with_braids(v, pick):
    auts = automorphisms(G6)
    phi = auts[pick % len(auts)]
    for i in range(1, v.r):
        assert apply_aut(braid_move(v, i), phi) == braid_move(apply_aut(v, phi), i)
        assert class_multiset(braid_move(v, i)) == class_multiset(v)


def test_identity_entries_are_dropped():
    g = dihedral_group(4)
    v = as_vector(g, [(1, 0, 0), (0, 0, 0), (1, 0, 0)])
    assert v.r == 2 and product_one(v)


def test_signature_and_genus():
    g = make_group(1, 6)
    v = as_vector(g, [(1, 0, 1), (1, 0, 1), (1, 1, 1), (1, 1, 1), (0, 0, 1), (0, 0, 1)])
    assert product_one(v) and generates(v)
    sig = signature_of(v)
    assert sig == Signature(0, (2,) * 6)
    assert orbifold_euler(sig) == Fraction(-1)
    assert riemann_hurwitz_genus(24, sig) == 13
    assert delta(sig) == 3


@pytest.mark.parametrize("order,orders,genus", [
    (6, (2, 2, 3), 0),       # D_3 acting on P^1
    (4, (2, 2, 2, 2), 1),
    (8, (2, 2, 2, 2, 2), 3),
])
def test_riemann_hurwitz_values(order, orders, genus):
    assert riemann_hurwitz_genus(order, Signature(0, orders)) == genus


def test_inconsistent_signature():
    with pytest.raises(InconsistentSignature):
        riemann_hurwitz_genus(5, Signature(0, (2, 2, 2)))
    with pytest.raises(InconsistentSignature):
        Signature(0, (1, 2))


def test_braid_needs_genus_zero_and_range():
    g = dihedral_group(3)
    v = HurwitzVector(g, (3, 3), ((1, 2),))
    with pytest.raises(HurwitzError):
        braid_move(v, 1)
    with pytest.raises(HurwitzError):
        braid_move(as_vector(g, [(1, 0, 0), (1, 0, 0)]), 2)


def test_json_roundtrip():
    g = make_group(1, 4)
    v = HurwitzVector(g, (5, 9, 12), ((1, 2),))
    doc = json.loads(v.dumps())
    assert doc["genus"] == 1 and doc["branches"][0].startswith("y^")
    assert HurwitzVector.from_json(doc) == v


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8, 9])
def test_triple_normalization_reachable(n):
    # oracle: the whole orbit of the triple under <sigma_1, sigma_2>, both directions
    g = make_group(1, n)
    mul, inv = g._mul, g._inv
    for a in range(n):
        for b in range(n):
            for c in range(n):
                v = as_vector(g, [(1, a, 1), (1, b, 0), (1, c, 1)])
                w = normalize_triple(v, 1)
                ls = [g.coords[t][1] for t in w.branches]
                assert ls[0] == ls[1] or ls[1] == ls[2]
                assert w.branches in bfs_orbit(v.branches, mul, inv, positions=(0, 1))


def test_triple_inside_longer_vector():
    g = make_group(1, 7)
    v = as_vector(g, [(0, 0, 1), (1, 1, 1), (1, 5, 1), (1, 3, 0), (0, 0, 1)])
    w = normalize_triple(v, 2)
    assert w.branches[0] == v.branches[0] and w.branches[-1] == v.branches[-1]
    assert w.product() == v.product()
    with pytest.raises(HurwitzError):
        normalize_triple(v, 1)
