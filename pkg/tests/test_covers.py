import numpy as np
import pytest

from dihedral_loci.classify import parse_in
from dihedral_loci.covers import (
    COROLLARY_PAIRS,
    CoverType,
    admissible_rows,
    coset_labels,
    dimension_pair,
    enumerate_admissible,
    euler_rows,
    genus_checks,
    iiic_catalog,
    is_admissible,
    quotient_vector,
    restrict_index2,
    restricted_delta_rows,
    restricted_signature,
    rh_genus_rows,
)
from dihedral_loci.groups import (
    GroupError,
    Subgroup,
    automorphisms,
    dihedral_group,
    dihedral_identification,
    distinguished_subgroup,
    find_subgroup,
    index2_subgroups,
    is_dihedral,
    make_group,
)
from dihedral_loci.hurwitz import (
    HurwitzError,
    HurwitzVector,
    braid_move,
    delta,
    generates,
    product_one,
    riemann_hurwitz_genus,
    signature_of,
)
from dihedral_loci.orbits import same_orbit

from oracles import brute_admissible

PATTERNS = {
    CoverType.I: (1, 1, 1, 1, 1, 1),
    CoverType.II: (1, 1, 1, 1, 0),
    CoverType.IIIA: (1, 1, 1, 1),
    CoverType.IIIB: (1, 1, 0, 0),
}


def _template(group, labels, ct):
    order = group.order_table

    def ok(pos, a):
        q, m = labels[a], order[a]
        if ct is CoverType.I:
            return m == 2 and q == 1
        if ct is CoverType.II:
            return (m == 2 and q == 1) if pos < 4 else (m > 1 and q == 0)
        if ct is CoverType.IIIA:
            return (m == 2 and q == 1) if pos < 3 else (q == 1 and m % 2 == 0 and m >= 4)
        if ct is CoverType.IIIB:
            if pos < 2:
                return m == 2 and q == 1
            return q == 0 and (m > 1 if pos == 2 else m > 2)
        if pos < 3:
            return m == 2 and q > 0
        return q == 0 and m > 2
    return ok


def _extra(group, labels, ct):
    order = group.order_table
    if ct is CoverType.IIIB:
        return lambda v: order[v[2]] <= order[v[3]]
    if ct is CoverType.IIIC:
        return lambda v: len({labels[a] for a in v[:3]}) == 3
    return lambda v: True


@pytest.mark.parametrize("gt,n,ct", [
    (1, 2, "I"), (1, 3, "I"), (1, 4, "I"),
    (1, 2, "II"), (1, 3, "II"), (1, 4, "II"),
    (1, 3, "IIIa"), (1, 4, "IIIa"), (1, 5, "IIIa"),
    (1, 3, "IIIb"), (1, 4, "IIIb"), (1, 6, "IIIb"),
    (2, 2, "I"), (2, 4, "II"), (3, 4, "IIIb"),
])
def test_enumeration_matches_brute_force(gt, n, ct):
    ct = CoverType.parse(ct)
    g = make_group(gt, n)
    h = distinguished_subgroup(g)
    labels = coset_labels(g, h)
    expected = brute_admissible(g, None, ct.length, _template(g, labels, ct), _extra(g, labels, ct))
    rows = admissible_rows(g, h, ct)
    assert sorted(expected) == [tuple(r) for r in rows.tolist()]


@pytest.mark.parametrize("n", [2, 3])
def test_iiic_enumeration_matches_brute_force(n):
    for g, h in iiic_catalog(n):
        labels = coset_labels(g, h)
        ct = CoverType.IIIC
        expected = brute_admissible(g, None, 4, _template(g, labels, ct), _extra(g, labels, ct))
        assert len(admissible_rows(g, h, ct)) == len(expected) == 0


def test_admissibility_examples():
    g = make_group(1, 6)
    nf = parse_in(g, "((y,1),(y,1),(yx,1),(yx,1),(e,1),(e,1))")
    assert is_admissible(nf, "I")
    # six reflections inside <(x,0),(y,1)>: product one, but not surjective
    trapped = parse_in(g, "((y,1),(y,1),(yx,1),(yx,1),(yx^2,1),(yx^2,1))")
    assert product_one(trapped) and not generates(trapped)
    assert not is_admissible(trapped, "I")
    with pytest.raises(GroupError):
        is_admissible(nf, "I", distinguished_subgroup(make_group(1, 3)))


def test_iiia_exists_for_odd_n():
    # (x,1) has order 2n when n is odd, so the fourth template slot is filled
    g = make_group(1, 3)
    v = parse_in(g, "((y,1),(yx^2,1),(e,1),(x,1))")
    assert is_admissible(v, "IIIa")
    assert g.order_idx(v.branches[-1]) == 6
    for n in (5, 7):
        assert len(admissible_rows(make_group(1, n), distinguished_subgroup(make_group(1, n)), "IIIa")) > 0


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10, 12])
def test_type2_has_nothing(n):
    g = make_group(2, n)
    h = distinguished_subgroup(g)
    for ct in ("I", "II", "IIIa", "IIIb"):
        assert len(admissible_rows(g, h, ct)) == 0


def test_quotient_vector_examples():
    g = make_group(1, 6)
    nf = parse_in(g, "((y,1),(y,1),(yx,1),(yx,1),(e,1),(e,1))")
    assert quotient_vector(nf, find_subgroup(g, "H_{1,2}")) == (0, 0, 0, 0, 1, 1)
    assert quotient_vector(nf, find_subgroup(g, "H_{1,6}")) == (0, 0, 1, 1, 1, 1)
    assert quotient_vector(nf, distinguished_subgroup(g)) == PATTERNS[CoverType.I]
    with pytest.raises(GroupError):
        quotient_vector(nf, Subgroup(g, tuple(range(g.order))))


def test_restriction_examples():
    g = make_group(1, 6)
    nf = parse_in(g, "((y,1),(y,1),(yx,1),(yx,1),(e,1),(e,1))")
    rc = restrict_index2(nf, find_subgroup(g, "H_{1,6}"))
    assert rc.genus == 1 and rc.signature.orders == (2, 2, 2, 2) and rc.delta == 4

    v2 = parse_in(g, "((y,1),(yx^{-1},1),(e,1),(e,1),(x,0))")
    rc = restrict_index2(v2, find_subgroup(g, "H_{1,3}"))
    assert rc.genus == 0 and rc.signature.orders == (2, 2, 2, 2, 2, 2, 3) and rc.delta == 4

    vb = parse_in(g, "((yx,1),(e,1),(y,0),(x,0))")
    h = distinguished_subgroup(g)
    rc = restrict_index2(vb, h)
    assert rc.genus == 0 and rc.signature.orders == (2, 2, 6, 6) and rc.delta == 1
    dn = dihedral_group(6)
    phi = dihedral_identification(h)
    sub_vec = rc.in_subgroup()
    mapped = HurwitzVector(dn, tuple(phi.images[b] for b in sub_vec.branches))
    assert same_orbit(mapped, parse_in(dn, "(y,yx^{-2},x,x)"), automorphisms(dn))


def test_restriction_rejects_vectors_inside_subgroup():
    g = make_group(1, 4)
    h = distinguished_subgroup(g)
    v = parse_in(g, "((y,0),(y,0))")
    with pytest.raises(HurwitzError):
        restrict_index2(v, h)


def test_dimension_pair_examples():
    g = make_group(1, 6)
    h = distinguished_subgroup(g)
    nf = parse_in(g, "((y,1),(y,1),(yx,1),(yx,1),(e,1),(e,1))")
    assert dimension_pair(nf, h, find_subgroup(g, "H_{1,2}")) == (3, 5)
    v2 = parse_in(g, "((y,1),(yx,1),(yx,1),(e,1),(y,0))")
    assert dimension_pair(v2, h, find_subgroup(g, "H_{1,6}")) == (2, 2)
    va = parse_in(g, "((y,1),(yx^{-1},1),(e,1),(x,1))")
    assert dimension_pair(va, h, find_subgroup(g, "H_{1,4}")) == (1, 1)
    vb = parse_in(g, "((yx,1),(e,1),(y,0),(x,0))")
    assert [dimension_pair(vb, h, find_subgroup(g, s))[1] for s in ("H_{1,2}", "H_{1,4}", "H_{1,6}")] == [1, 2, 1]


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_restriction_invariants_over_all_admissible(n):
    g = make_group(1, n)
    h = distinguished_subgroup(g)
    subs = [s for s in index2_subgroups(g) if is_dihedral(s)]
    for ct in (CoverType.I, CoverType.II, CoverType.IIIA, CoverType.IIIB):
        rows = admissible_rows(g, h, ct)
        for row in rows[:: max(1, len(rows) // 40)].tolist():
            v = HurwitzVector(g, tuple(row))
            assert quotient_vector(v, h) == PATTERNS[ct]
            assert delta(restricted_signature(v, h)) == ct.delta_h
            for s in subs:
                rc = restrict_index2(v, s)
                q = quotient_vector(v, s)
                orders = [g.order_idx(b) for b in v.branches]
                expected_len = sum(2 for qi, m in zip(q, orders) if qi == 0) + sum(
                    1 for qi, m in zip(q, orders) if qi == 1 and m > 2)
                assert rc.vector.r == expected_len
                checks = genus_checks(v, s)
                assert checks["genus_via_G"] == checks["genus_via_sub"]
                assert checks["euler_doubles"]
                assert riemann_hurwitz_genus(s.order, rc.signature) == checks["genus_via_G"]
                # braid-equivalent inputs restrict to the same invariants
                assert restricted_signature(braid_move(v, 1), s) == restricted_signature(v, s)


@pytest.mark.parametrize("n", [4, 6])
def test_vectorised_rows_agree_with_scalar(n):
    g = make_group(1, n)
    h = distinguished_subgroup(g)
    for ct in ("I", "II", "IIIb"):
        rows = admissible_rows(g, h, ct)[:50]
        base, scale = euler_rows(g, rows)
        for s in index2_subgroups(g):
            genus, dl = restricted_delta_rows(g, rows, s)
            sub_e, _ = euler_rows(g, rows, s)
            via_sub = rh_genus_rows(s.order, sub_e, scale)
            for i, row in enumerate(rows.tolist()):
                v = HurwitzVector(g, tuple(row))
                sig = restricted_signature(v, s)
                assert (genus[i], dl[i]) == (sig.genus, delta(sig))
                assert via_sub[i] == riemann_hurwitz_genus(g.order, signature_of(v))
            assert np.all(sub_e == 2 * base)


@pytest.mark.parametrize("n", range(2, 9))
def test_iiic_catalog_shape(n):
    cat = iiic_catalog(n)
    assert len(cat) == (3 if n % 4 == 0 and (n // 4) % 2 else 2)
    for g, h in cat:
        assert g.order == 8 * n and h.order == 2 * n
        assert h.is_normal() and is_dihedral(h)
        labels = coset_labels(g, h)
        assert sorted(set(labels.tolist())) == [0, 1, 2, 3]


def test_catalog_n3_order():
    g, _ = iiic_catalog(3)[0]
    assert g.name == "D_3 x (Z/2)^2" and g.order == 24


def test_corollary_lists():
    assert COROLLARY_PAIRS[CoverType.I] == {(3, 4), (3, 5)}
    assert COROLLARY_PAIRS[CoverType.IIIC] == frozenset()


def test_bound_refusal():
    g = make_group(1, 60)
    with pytest.raises(GroupError):
        enumerate_admissible(g, None, "I")
