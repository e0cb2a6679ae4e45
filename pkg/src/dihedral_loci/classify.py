"""Classification runs and fixture verification.

Every entry point returns a report object with ``ok``, ``partial`` (some
search hit the node cap) and a deterministic ``to_json``.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable

import numpy as np

from .covers import (
    COROLLARY_PAIRS,
    CoverType,
    admissible_rows,
    euler_rows,
    iiic_catalog,
    is_admissible,
    quotient_vector,
    restrict_index2,
    restricted_delta_rows,
    rh_genus_rows,
)
from .groups import (
    FiniteGroup,
    GroupError,
    GroupMap,
    GroupType,
    Subgroup,
    automorphism_from_generators,
    automorphisms,
    automorphisms_fixing,
    dihedral_group,
    dihedral_identification,
    distinguished_subgroup,
    find_subgroup,
    generating_automorphisms,
    index2_subgroups,
    is_dihedral,
    make_group,
)
from .hurwitz import (
    HurwitzError,
    HurwitzVector,
    apply_aut,
    class_index,
    delta,
    generates,
    product_one,
    riemann_hurwitz_genus,
    signature_of,
)
from .notation import format_element, format_word, parse_element, parse_vector
from .orbits import AutAction, OrbitClass, orbit, same_orbit_search

SCHEMA = 1
DEFAULT_NS = (2, 3, 4, 5, 6, 10, 12)
LEMMA_COVER_TYPES = (CoverType.I, CoverType.II, CoverType.IIIA, CoverType.IIIB)

# ---------------------------------------------------------------------------
# fixtures and applicability conditions


def _m_odd(n: int) -> bool:
    return n % 2 == 0 and (n // 2) % 2 == 1


CONDITIONS: dict[str, Callable[[int], bool]] = {
    "all": lambda n: True,
    "never": lambda n: False,
    "n2": lambda n: n == 2,
    "n_odd": lambda n: n % 2 == 1,
    "n_gt2": lambda n: n > 2,
    "n_ge3": lambda n: n >= 3,
    "n_even": lambda n: n % 2 == 0,
    "n_even_gt2": lambda n: n % 2 == 0 and n > 2,
    "n_even_ge4": lambda n: n % 2 == 0 and n >= 4,
    "m_odd": _m_odd,
    "m_even": lambda n: n % 4 == 0,
    "m_odd_ge3": lambda n: _m_odd(n) and n >= 6,
}


def condition_holds(name: str, n: int) -> bool:
    try:
        return CONDITIONS[name](n)
    except KeyError:
        raise ValueError(f"unknown applicability condition {name!r}") from None


@functools.cache
def load_fixture(name: str) -> dict:
    text = resources.files("dihedral_loci").joinpath("fixtures", name).read_text(encoding="utf-8")
    return json.loads(text)


def lemma_forms(cover_type: CoverType) -> list[dict]:
    return load_fixture("normal_forms.json")["lemmas"].get(cover_type.value, [])


def parse_in(group: FiniteGroup, text: str) -> HurwitzVector:
    handles, branches = parse_vector(text, group)
    return HurwitzVector(group, tuple(b.index for b in branches),
                         tuple((a.index, b.index) for a, b in handles))


def vector_words(v: HurwitzVector) -> list[str]:
    coords = v.group.coords
    ext = v.group.group_type is not GroupType.DN
    return [format_element(coords[b], ext) for b in v.branches]


def _handle_words(v: HurwitzVector) -> list[list[str]]:
    coords = v.group.coords
    return [[format_word(*coords[a][:2]), format_word(*coords[b][:2])] for a, b in v.handles]


# ---------------------------------------------------------------------------
# classification


@dataclass
class ClassEntry:
    orbit: OrbitClass
    admissible_members: int
    least_admissible: HurwitzVector
    forms: list[str] = field(default_factory=list)

    def to_json(self, index: int) -> dict:
        return {
            "index": index,
            "least_admissible": vector_words(self.least_admissible),
            "admissible_members": self.admissible_members,
            "orbit_size": self.orbit.size,
            "canonical_states": int(len(self.orbit.states)),
            "exhausted": self.orbit.exhausted,
            "normal_forms": list(self.forms),
        }


@dataclass
class FormMatch:
    form_id: str
    vector: HurwitzVector
    admissible: bool
    orbit_index: int | None
    distinct: bool
    equivalent_to: str | None

    def to_json(self) -> dict:
        return {
            "id": self.form_id,
            "vector": vector_words(self.vector),
            "admissible": self.admissible,
            "orbit": self.orbit_index,
            "asserted_distinct": self.distinct,
            "equivalent_to": self.equivalent_to,
        }


@dataclass
class ClassificationReport:
    cover_type: CoverType
    group_type: str
    n: int
    group_name: str
    admissible_count: int
    classes: list[ClassEntry]
    forms: list[FormMatch]
    failures: list[str]
    catalog: list[dict] = field(default_factory=list)

    @property
    def exhausted(self) -> bool:
        return all(c.orbit.exhausted for c in self.classes)

    @property
    def partial(self) -> bool:
        return not self.exhausted

    @property
    def ok(self) -> bool:
        return not self.failures and self.exhausted

    @property
    def matched(self) -> dict[str, int | None]:
        return {f.form_id: f.orbit_index for f in self.forms}

    @property
    def unmatched(self) -> list[int]:
        return [i for i, c in enumerate(self.classes) if not c.forms]

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "classification",
            "parameters": {"cover_type": self.cover_type.value, "group_type": self.group_type, "n": self.n},
            "group": self.group_name,
            "admissible_count": self.admissible_count,
            "orbit_count": len(self.classes),
            "orbits": [c.to_json(i) for i, c in enumerate(self.classes)],
            "matched_normal_forms": self.matched,
            "normal_forms": [f.to_json() for f in self.forms],
            "unmatched_orbits": self.unmatched,
            "catalog": self.catalog,
            "exhausted": self.exhausted,
            "failures": self.failures,
            "ok": self.ok,
        }


def partition_rows(group: FiniteGroup, rows: np.ndarray, action: AutAction,
                   node_cap: int | None = None) -> tuple[list[OrbitClass], np.ndarray]:
    """Split sorted admissible ``rows`` into orbits; returns the orbits and
    the orbit index of every row."""
    canon = action.canonical(rows)
    assigned = np.full(len(rows), -1, dtype=np.int64)
    out: list[OrbitClass] = []
    while True:
        free = np.flatnonzero(assigned < 0)
        if len(free) == 0:
            break
        seed = HurwitzVector(group, tuple(int(i) for i in rows[free[0]]))
        oc = orbit(seed, action=action, node_cap=node_cap)
        hit = oc.contains_keys(canon) & (assigned < 0)
        hit[free[0]] = True
        assigned[hit] = len(out)
        out.append(oc)
    return out, assigned


def _lemma_matches(group: FiniteGroup, sub: Subgroup, cover_type: CoverType, n: int,
                   classes: list[OrbitClass], action: AutAction) -> list[FormMatch]:
    out = []
    for form in lemma_forms(cover_type):
        if not condition_holds(form["applies"], n):
            continue
        v = parse_in(group, form["v"])
        key = action.canonical(np.array([v.branches], dtype=np.int64))
        where = [i for i, oc in enumerate(classes) if v.r == len(oc.representative.branches)
                 and oc.contains_keys(key)[0]]
        out.append(FormMatch(
            form_id=form["id"],
            vector=v,
            admissible=is_admissible(v, cover_type, sub),
            orbit_index=where[0] if where else None,
            distinct=condition_holds(form.get("distinct", "never"), n),
            equivalent_to=form.get("equivalent_to"),
        ))
    return out


def _lemma_failures(forms: list[FormMatch], classes: list[ClassEntry]) -> list[str]:
    failures = []
    by_id = {f.form_id: f for f in forms}
    for f in forms:
        if not f.admissible:
            failures.append(f"{f.form_id}: listed normal form is not admissible")
        if f.orbit_index is None:
            failures.append(f"{f.form_id}: no orbit contains the listed normal form")
    distinct = [f for f in forms if f.distinct and f.orbit_index is not None]
    for i, a in enumerate(distinct):
        for b in distinct[i + 1:]:
            if a.orbit_index == b.orbit_index:
                failures.append(f"{a.form_id} and {b.form_id}: listed as inequivalent but share orbit {a.orbit_index}")
    for f in forms:
        if f.equivalent_to and f.equivalent_to in by_id:
            other = by_id[f.equivalent_to]
            if f.orbit_index is None or f.orbit_index != other.orbit_index:
                failures.append(f"{f.form_id}: expected in the orbit of {other.form_id}")
    for i, c in enumerate(classes):
        if not c.forms:
            failures.append(f"orbit {i} (least admissible {vector_words(c.least_admissible)}) matches no listed normal form")
    return failures


def _subgroup_action(group: FiniteGroup, sub: Subgroup) -> AutAction:
    return AutAction(group, generating_automorphisms(automorphisms_fixing(group, sub)))


def classify(cover_type: CoverType | str, group_type: GroupType | str | int = 1, n: int = 3,
             node_cap: int | None = None) -> ClassificationReport:
    """Enumerate admissible vectors and split them into braid x Aut(G)_H orbits.

    Listed normal forms are only attached to Type1 runs; for the other group
    types, and for the (Z/2)^2 cover type over its catalog, any admissible
    vector is itself a failure.
    """
    cover_type = CoverType.parse(cover_type)
    if cover_type is CoverType.IIIC:
        return _classify_catalog(n)
    gt = GroupType.parse(group_type)
    group = make_group(gt, n)
    sub = distinguished_subgroup(group)
    rows = admissible_rows(group, sub, cover_type)
    action = _subgroup_action(group, sub)
    orbits, assigned = partition_rows(group, rows, action, node_cap)
    classes = []
    for i, oc in enumerate(orbits):
        members = np.flatnonzero(assigned == i)
        least = HurwitzVector(group, tuple(int(t) for t in rows[members[0]]))
        classes.append(ClassEntry(oc, int(len(members)), least))
    failures: list[str] = []
    forms: list[FormMatch] = []
    if gt is GroupType.TYPE1:
        forms = _lemma_matches(group, sub, cover_type, n, orbits, action)
        for f in forms:
            if f.orbit_index is not None:
                classes[f.orbit_index].forms.append(f.form_id)
        failures = _lemma_failures(forms, classes)
    elif len(rows):
        failures.append(f"{len(rows)} admissible vectors where none should exist")
    return ClassificationReport(cover_type, gt.value, n, group.name, int(len(rows)), classes, forms, failures)


def _classify_catalog(n: int) -> ClassificationReport:
    catalog, failures, total = [], [], 0
    for group, sub in iiic_catalog(n):
        count = int(len(admissible_rows(group, sub, CoverType.IIIC)))
        total += count
        catalog.append({"group": group.name, "order": group.order, "admissible_count": count})
        if count:
            failures.append(f"{group.name}: {count} admissible vectors where none should exist")
    return ClassificationReport(CoverType.IIIC, "catalog", n, "catalog", total, [], [], failures, catalog)


# ---------------------------------------------------------------------------
# table verification


@dataclass
class Cell:
    column: str
    expected: object
    computed: object
    ok: bool
    note: str = ""
    partial: bool = False

    def to_json(self) -> dict:
        doc = {"column": self.column, "expected": self.expected, "computed": self.computed, "ok": self.ok}
        if self.note:
            doc["note"] = self.note
        return doc


@dataclass
class RowResult:
    table: str
    subgroup: str
    condition: str
    cells: list[Cell]
    partial: bool = False

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cells)

    def to_json(self) -> dict:
        return {"table": self.table, "subgroup": self.subgroup, "condition": self.condition,
                "ok": self.ok, "cells": [c.to_json() for c in self.cells]}


@dataclass
class TableReport:
    n: int
    rows: list[RowResult]
    tables: list[str]
    skipped: list[str]
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors and all(r.ok for r in self.rows)

    @property
    def partial(self) -> bool:
        return any(r.partial for r in self.rows)

    @property
    def mismatches(self) -> list[tuple[RowResult, Cell]]:
        return [(r, c) for r in self.rows for c in r.cells if not c.ok]

    def note(self) -> str:
        if not self.tables:
            return f"n = {self.n}: no applicable tables"
        return (f"n = {self.n}: verified tables {', '.join(self.tables)}; "
                f"not applicable: {', '.join(self.skipped) or 'none'}")

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "kind": "tables",
            "n": self.n,
            "tables": self.tables,
            "not_applicable": self.skipped,
            "note": self.note(),
            "rows": [r.to_json() for r in self.rows],
            "cells_checked": sum(len(r.cells) for r in self.rows),
            "mismatched_cells": len(self.mismatches),
            "errors": self.errors,
            "ok": self.ok,
        }


@functools.lru_cache(maxsize=None)
def _dn_context(k: int):
    dn = dihedral_group(k)
    auts = automorphisms(dn)
    return dn, auts, AutAction(dn, generating_automorphisms(auts))


def _transport(v: HurwitzVector, phi: GroupMap, sub: Subgroup) -> HurwitzVector:
    conv = sub.from_parent_idx
    im = phi.images
    return HurwitzVector(phi.target, tuple(im[conv(b)] for b in v.branches),
                         tuple((im[conv(a)], im[conv(b)]) for a, b in v.handles))


def invariant_profile(v: HurwitzVector, auts: list[GroupMap], parent_order: int | None = None) -> dict:
    """Data compared for positive-genus entries: everything except the
    handle pair itself."""
    group = v.group
    cls = class_index(group)
    classes = min(tuple(sorted(cls[phi.images[b]] for b in v.branches)) for phi in auts)
    sig = signature_of(v)
    try:
        genus_c = riemann_hurwitz_genus(group.order, sig)
    except HurwitzError:
        genus_c = None
    return {
        "signature": list(sig.orders),
        "genus": sig.genus,
        "delta": delta(sig),
        "classes": list(classes),
        "generates": generates(v),
        "genus_C": genus_c,
    }


def _compare_vprime(expected_text: str, computed: HurwitzVector, node_cap: int | None) -> Cell:
    dn, auts, action = _dn_context(computed.group.n)
    shown = {"handles": _handle_words(computed), "branches": vector_words(computed)}
    try:
        expected = parse_in(dn, expected_text)
    except GroupError as exc:
        return Cell("v_prime", expected_text, shown, False, f"unparseable fixture entry: {exc}")
    if expected.genus != computed.genus:
        return Cell("v_prime", expected_text, shown, False,
                    f"fixture has genus {expected.genus}, restriction has genus {computed.genus}")
    if computed.genus == 0:
        if expected.r != computed.r:
            return Cell("v_prime", expected_text, shown, False,
                        f"fixture has {expected.r} branch entries, restriction has {computed.r}")
        notes = []
        if not product_one(expected):
            notes.append("fixture entry violates the product relation")
        found, exhausted = same_orbit_search(computed, expected, action=action, node_cap=node_cap)
        if not found:
            notes.append("not in the braid x Aut orbit of the restriction" if exhausted
                         else "orbit search hit the node cap")
        return Cell("v_prime", expected_text, shown, found, "; ".join(notes) or "same orbit",
                    partial=not found and not exhausted)
    prof_e = invariant_profile(expected, auts)
    prof_c = invariant_profile(computed, auts)
    diff = [k for k in prof_c if prof_c[k] != prof_e[k]]
    note = "invariant profile agrees" if not diff else "profile differs in " + ", ".join(diff)
    if not product_one(expected):
        note += "; fixture entry violates the product relation (not part of the profile)"
    return Cell("v_prime", expected_text, {**shown, "profile": prof_c, "fixture_profile": prof_e},
                not diff, note)


def _verify_row(group: FiniteGroup, v: HurwitzVector, sub: Subgroup, table_id: str, label: str,
                condition: str, row: dict, node_cap: int | None) -> RowResult:
    cells: list[Cell] = []
    try:
        rc = restrict_index2(v, sub)
    except (HurwitzError, GroupError) as exc:
        return RowResult(table_id, label, condition, [Cell("restriction", None, None, False, str(exc))])
    if "v_quot" in row:
        got = list(quotient_vector(v, sub))
        cells.append(Cell("v_quot", row["v_quot"], got, got == row["v_quot"]))
    cells.append(Cell("genus", row["genus"], rc.genus, rc.genus == row["genus"]))
    cells.append(Cell("delta", row["delta"], rc.delta, rc.delta == row["delta"]))
    partial = False
    if row.get("v_prime"):
        phi = dihedral_identification(sub)
        cell = _compare_vprime(row["v_prime"], _transport(rc.vector, phi, sub), node_cap)
        partial = cell.partial
        cells.append(cell)
    return RowResult(table_id, label, condition, cells, partial)


def verify_tables(n: int, node_cap: int | None = None) -> TableReport:
    """Recompute every applicable table row at ``n`` and compare cell by cell."""
    doc = load_fixture("tables.json")
    group = make_group(GroupType.TYPE1, n)
    h = distinguished_subgroup(group)
    report = TableReport(n, [], [], [])
    for table in doc["tables"]:
        tid = table["id"]
        if not condition_holds(table["condition"], n):
            report.skipped.append(tid)
            continue
        report.tables.append(tid)
        ct = CoverType.parse(table["cover_type"])
        try:
            v = parse_in(group, table["v"])
        except GroupError as exc:
            report.errors.append(f"{tid}: {exc}")
            continue
        adm = is_admissible(v, ct, h)
        report.rows.append(RowResult(tid, "v", "all", [Cell("admissible", True, adm, adm)]))
        head = table["header"]
        report.rows.append(_verify_row(group, v, h, tid, "H", "all", {
            "genus": head["genus_H"], "delta": head["delta_H"], "v_prime": head.get("v_H"),
        }, node_cap))
        for row in table["rows"]:
            if not condition_holds(row["condition"], n):
                continue
            try:
                sub = find_subgroup(group, row["subgroup"])
            except GroupError as exc:
                report.errors.append(f"{tid} {row['subgroup']}: {exc}")
                continue
            report.rows.append(_verify_row(group, v, sub, tid, row["subgroup"], row["condition"], row, node_cap))
    return report


# ---------------------------------------------------------------------------
# non-existence


@dataclass
class NonexistenceReport:
    n_max: int
    entries: list[dict]

    @property
    def ok(self) -> bool:
        return all(e["admissible_count"] == 0 for e in self.entries)

    partial = False

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "kind": "nonexistence", "n_max": self.n_max,
                "scope": "group types 2 and 3 over all cover types with an index-2 H; "
                         "the (Z/2)^2 cover type over a fixed catalog of groups",
                "entries": self.entries, "ok": self.ok}


def nonexistence_params(n_max: int) -> list[tuple[str, int]]:
    out = [("Type2", n) for n in range(2, n_max + 1, 2)]
    out += [("Type3", n) for n in range(4, n_max + 1, 8)]
    out += [("catalog", n) for n in range(2, n_max + 1)]
    return out


def verify_nonexistence(n_max: int) -> NonexistenceReport:
    entries = []
    for kind, n in nonexistence_params(n_max):
        if kind == "catalog":
            for group, sub in iiic_catalog(n):
                count = len(admissible_rows(group, sub, CoverType.IIIC))
                entries.append({"group": group.name, "group_type": kind, "n": n,
                                "cover_type": "IIIc", "admissible_count": int(count)})
            continue
        group = make_group(kind, n)
        sub = distinguished_subgroup(group)
        for ct in LEMMA_COVER_TYPES:
            count = len(admissible_rows(group, sub, ct))
            entries.append({"group": group.name, "group_type": kind, "n": n,
                            "cover_type": ct.value, "admissible_count": int(count)})
    return NonexistenceReport(n_max, entries)


# ---------------------------------------------------------------------------
# dimension pairs and arithmetic consistency


@dataclass
class CorollaryReport:
    n: int
    entries: list[dict]

    partial = False

    @property
    def ok(self) -> bool:
        return all(e["ok"] for e in self.entries)

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "kind": "corollary_pairs", "n": self.n,
                "entries": self.entries, "ok": self.ok}


def _pair_entry(group: FiniteGroup, h: Subgroup, ct: CoverType) -> dict:
    rows = admissible_rows(group, h, ct)
    subs = [s for s in index2_subgroups(group) if is_dihedral(s)]
    entry = {"cover_type": ct.value, "admissible_count": int(len(rows)),
             "dihedral_subgroups": [s.name for s in subs]}
    allowed = COROLLARY_PAIRS[ct]
    if len(rows) == 0:
        entry.update(observed_pairs=[], equal_pairs=[], allowed_pairs=sorted(map(list, allowed)),
                     genus_agreement=True, euler_doubling=True, delta_h_expected=True, ok=True)
        return entry
    base_e, scale = euler_rows(group, rows)
    genus_c = rh_genus_rows(group.order, base_e, scale)
    genus_ok = bool(np.all(genus_c >= 0))
    euler_ok = True
    _, delta_h = restricted_delta_rows(group, rows, h)
    strict, equal = set(), set()
    for s in subs:
        sub_e, _ = euler_rows(group, rows, s)
        euler_ok &= bool(np.all(sub_e == 2 * base_e))
        genus_ok &= bool(np.all(rh_genus_rows(s.order, sub_e, scale) == genus_c))
        if s == h:
            continue
        _, delta_s = restricted_delta_rows(group, rows, s)
        pairs = np.unique(np.stack([delta_h, delta_s], axis=1), axis=0)
        for a, b in pairs.tolist():
            (strict if a < b else equal if a == b else set()).add((a, b))
    delta_h_ok = bool(np.all(delta_h == ct.delta_h))
    outside = sorted(strict - allowed)
    entry.update(
        observed_pairs=sorted(map(list, strict)),
        equal_pairs=sorted(map(list, equal)),
        allowed_pairs=sorted(map(list, allowed)),
        outside_list=[list(p) for p in outside],
        genus_agreement=genus_ok,
        euler_doubling=euler_ok,
        delta_h_expected=delta_h_ok,
        ok=genus_ok and euler_ok and delta_h_ok and not outside,
    )
    return entry


def verify_corollary_pairs(n: int) -> CorollaryReport:
    """Dimension pairs over all admissible Type1 vectors and dihedral index-2
    subgroups, plus the genus and Euler-characteristic identities."""
    group = make_group(GroupType.TYPE1, n)
    h = distinguished_subgroup(group)
    return CorollaryReport(n, [_pair_entry(group, h, ct) for ct in LEMMA_COVER_TYPES])


# ---------------------------------------------------------------------------
# equivalence of the two single-parameter forms


@dataclass
class RemarkReport:
    n: int
    full_aut_same: bool
    full_aut_exhausted: bool
    restricted_aut_same: bool
    restricted_aut_exhausted: bool
    witness_is_automorphism: bool
    witness_braid_equivalent: bool
    vectors: dict

    @property
    def partial(self) -> bool:
        return not (self.full_aut_exhausted or self.full_aut_same) or not (
            self.restricted_aut_exhausted or self.restricted_aut_same)

    @property
    def ok(self) -> bool:
        return (self.full_aut_same and not self.restricted_aut_same and self.restricted_aut_exhausted
                and self.witness_is_automorphism and self.witness_braid_equivalent)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA, "kind": "remark_equivalence", "n": self.n, "vectors": self.vectors,
            "same_orbit_full_aut": self.full_aut_same,
            "same_orbit_aut_fixing_H": self.restricted_aut_same,
            "aut_fixing_H_search_exhausted": self.restricted_aut_exhausted,
            "witness_is_automorphism": self.witness_is_automorphism,
            "witness_maps_into_braid_orbit": self.witness_braid_equivalent,
            "ok": self.ok,
        }


def verify_remark_equivalence(n: int, node_cap: int | None = None) -> RemarkReport:
    if n % 2:
        raise ValueError("the equivalence is stated for even n")
    doc = load_fixture("normal_forms.json")["remark"]
    group = make_group(GroupType.TYPE1, n)
    h = distinguished_subgroup(group)
    va, vb = parse_in(group, doc["IIIa"]), parse_in(group, doc["IIIb"])
    full = AutAction(group, generating_automorphisms(automorphisms(group)))
    same_full, ex_full = same_orbit_search(va, vb, action=full, node_cap=node_cap)
    same_h, ex_h = same_orbit_search(va, vb, action=_subgroup_action(group, h), node_cap=node_cap)
    gens = [parse_element(k, group) for k in doc["witness"]]
    imgs = [parse_element(t, group) for t in doc["witness"].values()]
    try:
        phi = automorphism_from_generators(group, gens, imgs)
        is_aut = True
        witness_ok = any(
            same_orbit_search(apply_aut(src, phi), dst, node_cap=node_cap)[0]
            for src, dst in ((vb, va), (va, vb)))
    except GroupError:
        is_aut, witness_ok = False, False
    return RemarkReport(n, same_full, ex_full, same_h, ex_h, is_aut, witness_ok,
                        {"IIIa": vector_words(va), "IIIb": vector_words(vb)})


# ---------------------------------------------------------------------------
# full pipeline


@dataclass
class FullReport:
    n_max: int
    parts: list[tuple[str, object]]

    @property
    def ok(self) -> bool:
        return all(p.ok for _, p in self.parts)

    @property
    def partial(self) -> bool:
        return any(p.partial for _, p in self.parts)

    def summary(self) -> list[tuple[str, bool]]:
        return [(name, p.ok) for name, p in self.parts]

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "kind": "verify_all", "n_max": self.n_max,
                "summary": [{"check": name, "ok": ok} for name, ok in self.summary()],
                "reports": [{"check": name, **p.to_json()} for name, p in self.parts],
                "ok": self.ok}


def verify_all(n_max: int = 10, ns: tuple[int, ...] = DEFAULT_NS, node_cap: int | None = None,
               progress: Callable[[str], None] | None = None) -> FullReport:
    chosen = [n for n in ns if n <= n_max]
    parts: list[tuple[str, object]] = []

    def run(name: str, fn, *args):
        if progress:
            progress(name)
        parts.append((name, fn(*args)))

    for n in chosen:
        for ct in LEMMA_COVER_TYPES:
            run(f"classify {ct.value} Type1 n={n}", classify, ct, GroupType.TYPE1, n, node_cap)
    for n in chosen:
        run(f"tables n={n}", verify_tables, n, node_cap)
    run(f"nonexistence n<={n_max}", verify_nonexistence, n_max)
    for n in chosen:
        run(f"corollary pairs n={n}", verify_corollary_pairs, n)
    for n in chosen:
        if n % 2 == 0 and n >= 4:
            run(f"remark n={n}", verify_remark_equivalence, n, node_cap)
    return FullReport(n_max, parts)


__all__ = [
    "CONDITIONS",
    "ClassificationReport",
    "CorollaryReport",
    "DEFAULT_NS",
    "FullReport",
    "NonexistenceReport",
    "RemarkReport",
    "TableReport",
    "classify",
    "condition_holds",
    "invariant_profile",
    "load_fixture",
    "partition_rows",
    "vector_words",
    "verify_all",
    "verify_corollary_pairs",
    "verify_nonexistence",
    "verify_remark_equivalence",
    "verify_tables",
]
