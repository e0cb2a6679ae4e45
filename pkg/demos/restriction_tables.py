"""Restrict a cover to every dihedral index-2 subgroup and compare with the stored tables.

Run with ``python demos/restriction_tables.py [n]``. Rows whose stored entry
disagrees with the computation are shown with both values.
"""

import sys

from dihedral_loci import (
    CoverType,
    distinguished_subgroup,
    index2_subgroups,
    is_dihedral,
    make_group,
    restrict_index2,
)
from dihedral_loci.classify import lemma_forms, parse_in, verify_tables

n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
group = make_group(1, n)
h = distinguished_subgroup(group)

# Start from the first cover I normal form and restrict it by hand.
form = parse_in(group, lemma_forms(CoverType.I)[0]["v"])
print(f"cover I form over {group.name}: {lemma_forms(CoverType.I)[0]['v']}\n")
for sub in index2_subgroups(group):
    if sub.members == h.members or is_dihedral(sub) is None:
        continue
    rc = restrict_index2(form, sub)
    print(f"  {sub.label:8s} quotient {rc.quotient}  genus {rc.genus}  delta {rc.delta}")

# Now every table at this n.
report = verify_tables(n)
print("\n" + report.note())
print(f"{len(report.rows)} rows checked, {len(report.mismatches)} cells disagree")
for row, cell in report.mismatches:
    print(f"  {row.table:6s} {row.subgroup:8s} {cell.column:8s} stored {cell.expected}  computed {cell.computed}")
