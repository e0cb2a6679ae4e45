"""Markdown rendering of the report objects in :mod:`dihedral_loci.classify`."""

from __future__ import annotations

import json

from .classify import (
    ClassificationReport,
    CorollaryReport,
    FullReport,
    NonexistenceReport,
    RemarkReport,
    TableReport,
)


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _vec(words) -> str:
    return "(" + ", ".join(words) + ")"


def _table(header: list[str], rows: list[list]) -> list[str]:
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return out


def classification_md(r: ClassificationReport, level: int = 2) -> str:
    h = "#" * level
    lines = [f"{h} Classification: cover {r.cover_type.value}, {r.group_type}, n = {r.n}", ""]
    lines.append(f"- group: {r.group_name}")
    lines.append(f"- admissible vectors: {r.admissible_count}")
    if r.catalog:
        lines += ["", *_table(["group", "order", "admissible"],
                              [[c["group"], c["order"], c["admissible_count"]] for c in r.catalog])]
    else:
        lines.append(f"- orbits: {len(r.classes)}")
        if r.classes:
            rows = [[i, _vec(c.to_json(i)["least_admissible"]), c.admissible_members, c.orbit.size,
                     "yes" if c.orbit.exhausted else "no (cap)", ", ".join(c.forms) or "-"]
                    for i, c in enumerate(r.classes)]
            lines += ["", *_table(["#", "least admissible member", "admissible members", "orbit size",
                                   "exhausted", "normal forms"], rows)]
        if r.forms:
            rows = [[f.form_id, _vec(f.to_json()["vector"]), "yes" if f.admissible else "no",
                     "-" if f.orbit_index is None else f.orbit_index,
                     "yes" if f.distinct else "no"] for f in r.forms]
            lines += ["", *_table(["form", "vector", "admissible", "orbit", "asserted distinct"], rows)]
    if r.failures:
        lines += ["", "Failures:", *[f"- {f}" for f in r.failures]]
    lines += ["", f"Status: {_status(r.ok)}" + ("" if r.exhausted else " (partial: node cap reached)"), ""]
    return "\n".join(lines)


def _cell_text(cell) -> str:
    if cell is None:
        return "-"
    if cell.column == "v_prime":
        comp = cell.computed
        body = _vec(comp["branches"])
        if comp["handles"]:
            hs = ", ".join(f"{a}, {b}" for a, b in comp["handles"])
            body = f"({hs}; {', '.join(comp['branches'])})"
        text = f"fixture {cell.expected}; computed {body}"
    elif cell.column == "v_quot":
        text = "(" + ",".join(map(str, cell.computed)) + ")"
    else:
        text = str(cell.computed)
    if not cell.ok:
        text = f"**MISMATCH** {text}" + ("" if cell.column == "v_prime" else f" (fixture {cell.expected})")
    if cell.column == "v_prime" and cell.note:
        text += f" [{cell.note}]"
    return text


def tables_md(r: TableReport, level: int = 2) -> str:
    h = "#" * level
    lines = [f"{h} Table verification, n = {r.n}", "", r.note(), ""]
    for tid in r.tables:
        rows = [row for row in r.rows if row.table == tid]
        lines.append(f"{h}# {tid}")
        lines.append("")
        body = []
        for row in rows:
            cells = {c.column: c for c in row.cells}
            if row.subgroup == "v":
                lines.append(f"- normal form admissible: {_cell_text(cells['admissible'])}")
                continue
            body.append([row.subgroup, _cell_text(cells.get("v_quot")), _cell_text(cells.get("genus")),
                         _cell_text(cells.get("delta")), _cell_text(cells.get("v_prime"))
                         if "v_prime" in cells else _cell_text(cells.get("restriction")),
                         _status(row.ok)])
        lines += ["", *_table(["H'", "v_{G/H'}", "g_{C/H'}", "delta_{H'}", "v_{H'}", "status"], body), ""]
    if r.errors:
        lines += ["Errors:", *[f"- {e}" for e in r.errors], ""]
    lines.append(f"Mismatched cells: {len(r.mismatches)}. Status: {_status(r.ok)}")
    lines.append("")
    return "\n".join(lines)


def nonexistence_md(r: NonexistenceReport, level: int = 2) -> str:
    h = "#" * level
    rows = [[e["group"], e["n"], e["cover_type"], e["admissible_count"]] for e in r.entries]
    lines = [f"{h} Non-existence, n <= {r.n_max}", "",
             *_table(["group", "n", "cover type", "admissible"], rows), "",
             f"Status: {_status(r.ok)}", ""]
    return "\n".join(lines)


def corollary_md(r: CorollaryReport, level: int = 2) -> str:
    h = "#" * level
    fmt = lambda ps: ", ".join(f"({a},{b})" for a, b in ps) or "-"  # noqa: E731
    rows = [[e["cover_type"], e["admissible_count"], fmt(e["observed_pairs"]), fmt(e["allowed_pairs"]),
             fmt(e["equal_pairs"]), "yes" if e["genus_agreement"] else "no",
             "yes" if e["euler_doubling"] else "no", _status(e["ok"])] for e in r.entries]
    lines = [f"{h} Dimension pairs, n = {r.n}", "",
             *_table(["cover", "admissible", "strict pairs seen", "allowed", "equal pairs",
                      "genus agrees", "Euler doubles", "status"], rows), "",
             f"Status: {_status(r.ok)}", ""]
    return "\n".join(lines)


def remark_md(r: RemarkReport, level: int = 2) -> str:
    h = "#" * level
    lines = [
        f"{h} Cover IIIa vs IIIb forms, n = {r.n}", "",
        f"- IIIa form: {_vec(r.vectors['IIIa'])}",
        f"- IIIb form: {_vec(r.vectors['IIIb'])}",
        f"- same orbit under braids x Aut(G): {'yes' if r.full_aut_same else 'no'}",
        f"- same orbit under braids x Aut(G)_H: {'yes' if r.restricted_aut_same else 'no'}"
        + ("" if r.restricted_aut_exhausted else " (search incomplete)"),
        f"- witness map is an automorphism: {'yes' if r.witness_is_automorphism else 'no'}",
        f"- witness carries one form into the other's braid orbit: "
        f"{'yes' if r.witness_braid_equivalent else 'no'}",
        "", f"Status: {_status(r.ok)}", "",
    ]
    return "\n".join(lines)


_RENDER = {
    ClassificationReport: classification_md,
    TableReport: tables_md,
    NonexistenceReport: nonexistence_md,
    CorollaryReport: corollary_md,
    RemarkReport: remark_md,
}


def full_md(r: FullReport) -> str:
    lines = [f"# Verification run, n <= {r.n_max}", "",
             *_table(["check", "status"], [[name, _status(ok)] for name, ok in r.summary()]), "",
             f"Overall: {_status(r.ok)}", ""]
    for _, part in r.parts:
        lines.append(to_markdown(part, level=2))
    return "\n".join(lines)


def to_markdown(report, level: int = 2) -> str:
    if isinstance(report, FullReport):
        return full_md(report)
    return _RENDER[type(report)](report, level)


def to_json_text(report) -> str:
    doc = report if isinstance(report, dict) else report.to_json()
    return json.dumps(doc, indent=2) + "\n"


def render(report, fmt: str) -> str:
    return to_json_text(report) if fmt == "json" else to_markdown(report)


__all__ = ["render", "to_json_text", "to_markdown"]
