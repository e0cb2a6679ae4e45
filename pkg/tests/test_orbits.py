import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dihedral_loci.covers import admissible_rows
from dihedral_loci.groups import (
    automorphisms,
    automorphisms_fixing,
    distinguished_subgroup,
    make_group,
)
from dihedral_loci.hurwitz import HurwitzError, HurwitzVector, as_vector
from dihedral_loci.orbits import (
    NODE_CAP_ENV,
    AutAction,
    default_node_cap,
    naive_orbit,
    orbit,
    pack,
    same_orbit,
    same_orbit_search,
    unpack,
)

from oracles import bfs_orbit


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 48), st.lists(st.lists(st.integers(0, 47), min_size=5, max_size=5), min_size=1, max_size=20))
def test_pack_roundtrip_and_order(base, rows):
    arr = np.array(rows, dtype=np.int64) % base
    keys = pack(arr, base)
    assert np.array_equal(unpack(keys, base, 5), arr)
    by_key = [tuple(r) for r in arr[np.argsort(keys, kind="stable")]]
    assert by_key == sorted(map(tuple, arr))


def test_pack_overflow_refused():
    with pytest.raises(HurwitzError):
        pack(np.zeros((1, 13), dtype=np.int64), 48)


def _oracle_size(v, auts):
    g = v.group
    return len(bfs_orbit(v.branches, g._mul, g._inv, perms=[a.images for a in auts]))


@pytest.mark.parametrize("n,ct", [(2, "I"), (3, "I"), (3, "II"), (4, "II"), (4, "IIIa"), (5, "IIIb"), (6, "IIIb")])
def test_engine_matches_bfs_oracle(n, ct):
    g = make_group(1, n)
    h = distinguished_subgroup(g)
    auts = automorphisms_fixing(g, h)
    rows = admissible_rows(g, h, ct)
    v = HurwitzVector(g, tuple(int(t) for t in rows[0]))
    oc = orbit(v, auts)
    assert oc.exhausted
    assert oc.size == _oracle_size(v, auts)
    assert oc.size == len(naive_orbit(v, auts))
    # representative is the least vector of the orbit
    assert oc.representative.branches == min(bfs_orbit(v.branches, g._mul, g._inv, perms=[a.images for a in auts]))


def test_braid_only_orbit_matches_oracle():
    g = make_group(1, 3)
    v = as_vector(g, [(1, 0, 1), (1, 1, 1), (1, 2, 0), (0, 1, 0)])
    oc = orbit(v)
    assert oc.size == len(bfs_orbit(v.branches, g._mul, g._inv))
    assert v in oc


def test_same_orbit_symmetric_and_negative():
    g = make_group(1, 4)
    h = distinguished_subgroup(g)
    auts = automorphisms_fixing(g, h)
    action = AutAction(g, auts)
    rows = admissible_rows(g, h, "II")
    reps = []
    for row in rows:
        v = HurwitzVector(g, tuple(int(t) for t in row))
        if not any(same_orbit(v, r, action=action) for r in reps):
            reps.append(v)
    assert len(reps) == 3
    for a in reps:
        for b in reps:
            found, exhausted = same_orbit_search(a, b, action=action)
            assert found == (a is b)
            # a negative answer is only given after the whole orbit was seen
            assert found or exhausted


def test_node_cap_reports_partial(monkeypatch):
    g = make_group(1, 6)
    v = as_vector(g, [(1, 0, 1), (1, 0, 1), (1, 1, 1), (1, 1, 1), (0, 0, 1), (0, 0, 1)])
    oc = orbit(v, automorphisms(g), node_cap=2)
    assert not oc.exhausted
    monkeypatch.setenv(NODE_CAP_ENV, "7")
    assert default_node_cap() == 7
    assert not orbit(v, automorphisms(g)).exhausted


def test_orbit_rejects_positive_genus():
    g = make_group(1, 3)
    with pytest.raises(HurwitzError):
        orbit(HurwitzVector(g, (1,), ((2, 3),)))
