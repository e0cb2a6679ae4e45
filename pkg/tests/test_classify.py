import json

import pytest

from dihedral_loci.classify import (
    CONDITIONS,
    classify,
    condition_holds,
    invariant_profile,
    load_fixture,
    verify_corollary_pairs,
    verify_nonexistence,
    verify_remark_equivalence,
    verify_tables,
)
from dihedral_loci.classify import _compare_vprime
from dihedral_loci.groups import automorphisms, dihedral_group
from dihedral_loci.hurwitz import HurwitzVector
from dihedral_loci.classify import parse_in

# orbit counts under braids x Aut(G)_H found by exhaustive search
ORBITS = {
    ("I", 2): 2, ("I", 3): 1, ("I", 4): 2, ("I", 5): 1, ("I", 6): 2, ("I", 8): 2, ("I", 10): 2,
    ("II", 2): 1, ("II", 3): 2, ("II", 4): 3, ("II", 5): 2, ("II", 6): 4, ("II", 10): 4,
    ("IIIa", 2): 0, ("IIIa", 3): 1, ("IIIa", 4): 1, ("IIIa", 5): 1, ("IIIa", 6): 1,
    ("IIIb", 2): 0, ("IIIb", 3): 1, ("IIIb", 4): 1, ("IIIb", 6): 1,
}


@pytest.mark.parametrize("ct,n", sorted(ORBITS))
def test_orbit_counts(ct, n):
    r = classify(ct, 1, n)
    assert len(r.classes) == ORBITS[ct, n]
    assert r.exhausted
    assert sum(c.admissible_members for c in r.classes) == r.admissible_count
    assert all(c.orbit.size >= c.admissible_members for c in r.classes)


def test_listed_forms_match():
    r = classify("II", 1, 6)
    assert r.ok
    assert sorted(r.matched.values()) == [0, 1, 2, 3]
    r = classify("II", 1, 2)
    assert r.ok and r.matched == {"II.1": 0, "II.n2": 0}


def test_cover_i_m_odd_forms_collide():
    # the two m-odd forms lie in a single orbit, so the check fails honestly
    r = classify("I", 1, 6)
    assert r.matched["I.2"] == r.matched["I.3"]
    assert not r.ok and any("I.2 and I.3" in f for f in r.failures)


def test_iiia_odd_n_orbit_unmatched():
    r = classify("IIIa", 1, 5)
    assert r.admissible_count > 0 and r.unmatched == [0] and not r.ok


def test_other_group_types_and_catalog():
    assert classify("II", 2, 4).ok and classify("II", 2, 4).admissible_count == 0
    assert classify("IIIb", 3, 4).admissible_count == 0
    r = classify("IIIc", 1, 4)
    assert r.ok and len(r.catalog) == 3


def test_classification_partial_under_cap():
    r = classify("I", 1, 6, node_cap=2)
    assert r.partial and not r.ok


def test_conditions():
    assert set(CONDITIONS) >= {"all", "n2", "m_odd", "m_even", "n_even", "n_even_ge4"}
    assert condition_holds("m_odd", 6) and not condition_holds("m_odd", 4) and not condition_holds("m_odd", 5)
    assert condition_holds("m_odd_ge3", 10) and not condition_holds("m_odd_ge3", 2)
    with pytest.raises(ValueError):
        condition_holds("sometimes", 3)


def test_fixture_conditions_are_known():
    tables = load_fixture("tables.json")
    for t in tables["tables"]:
        assert t["condition"] in CONDITIONS
        assert all(r["condition"] in CONDITIONS for r in t["rows"])
    for forms in load_fixture("normal_forms.json")["lemmas"].values():
        for f in forms:
            assert f["applies"] in CONDITIONS and f["distinct"] in CONDITIONS


def _failing(report):
    return sorted({(row.table, row.subgroup) for row, _ in report.mismatches})


def test_tables_n2_extra_cover_ii_table_passes():
    r = verify_tables(2)
    assert all(row.ok for row in r.rows if row.table == "II.n2")
    assert len([row for row in r.rows if row.table == "II.n2" and row.subgroup.startswith("H_")]) == 6


def test_tables_n10_iiia_h14():
    r = verify_tables(10)
    row = next(row for row in r.rows if row.table == "IIIa" and row.subgroup == "H_{1,4}")
    cells = {c.column: c for c in row.cells}
    assert (cells["genus"].computed, cells["delta"].computed) == (0, 1) and row.ok


def test_tables_known_fixture_discrepancies_n6():
    # every failing row traces to an inconsistent fixture entry
    assert _failing(verify_tables(6)) == [
        ("I.1", "H_{1,4}"),  # four odd entries force genus 1
        ("I.1", "H_{1,5}"),  # listed vector only generates a Klein group
        ("I.2", "H_{1,5}"),  # reflection classes split 2+4, lifts all share one class
        ("I.3", "H_{1,3}"),  # seven entries where eight are needed
        ("I.3", "H_{1,4}"),  # row repeats the H_{1,2} row
        ("II.1", "H_{1,4}"),  # (y,0) lies in H_{1,4}
        ("IIIa", "H_{1,2}"),  # product is x^4, trivial only for n = 4
    ]


def test_tables_n3_pass():
    r = verify_tables(3)
    assert r.ok and r.tables == ["I.1", "II.1", "II.2a"]


def test_vprime_comparison_detects_changes():
    dn = dihedral_group(6)
    good = parse_in(dn, "(y,y,yx,yx,yx,yx)")
    assert _compare_vprime("(yx,yx,yx,yx,y,y)", good, None).ok
    assert not _compare_vprime("(y,y,yx^2,yx^2,yx^4,yx^4)", good, None).ok
    assert not _compare_vprime("(y,y,yx,yx)", good, None).ok
    handle = HurwitzVector(dn, parse_in(dn, "(y,y)").branches, ((0, 1),))
    cell = _compare_vprime("(x,x^{-1};y,y)", handle, None)
    assert cell.ok and "profile" in cell.computed


def test_invariant_profile_aut_invariant():
    dn = dihedral_group(6)
    auts = automorphisms(dn)
    v = parse_in(dn, "(e,yx;y,y,yx^2,yx^4)")
    p = invariant_profile(v, auts)
    for phi in auts:
        w = HurwitzVector(dn, tuple(phi.images[b] for b in v.branches),
                          tuple((phi.images[a], phi.images[b]) for a, b in v.handles))
        assert invariant_profile(w, auts) == p


def test_reports_deterministic():
    a = json.dumps(verify_tables(6).to_json())
    b = json.dumps(verify_tables(6).to_json())
    assert a == b
    assert json.dumps(verify_corollary_pairs(4).to_json()) == json.dumps(verify_corollary_pairs(4).to_json())
    assert verify_tables(6).to_json()["schema"] == 1


def test_nonexistence_and_pairs_and_remark():
    r = verify_nonexistence(8)
    assert r.ok and {e["group_type"] for e in r.entries} == {"Type2", "Type3", "catalog"}
    c = verify_corollary_pairs(6)
    assert c.ok
    iiib = next(e for e in c.entries if e["cover_type"] == "IIIb")
    assert [1, 3] not in iiib["observed_pairs"]
    rem = verify_remark_equivalence(4)
    assert rem.ok and rem.full_aut_same and not rem.restricted_aut_same
    with pytest.raises(ValueError):
        verify_remark_equivalence(5)
