"""Walk through one classification by hand: cover type II over D_6 x Z/2.

Run with ``python demos/classify_cover_ii.py [n]``.
"""

import sys

from dihedral_loci import (
    CoverType,
    automorphisms_fixing,
    distinguished_subgroup,
    enumerate_admissible,
    make_group,
    orbit,
)
from dihedral_loci.classify import classify, vector_words

n = int(sys.argv[1]) if len(sys.argv) > 1 else 6

# The ambient group and the dihedral index-2 subgroup H = D_n x {0}.
group = make_group(1, n)
h = distinguished_subgroup(group)
print(f"{group.name}: order {group.order}, H = {h.name} of order {h.order}")

# Admissible vectors: five branch points, four lying outside H, one inside.
vectors = enumerate_admissible(group, h, CoverType.II)
print(f"admissible vectors: {len(vectors)}")
print("first one:", ", ".join(vector_words(vectors[0])))

# One orbit by hand, under braid moves and automorphisms that preserve H.
auts = automorphisms_fixing(group, h)
first = orbit(vectors[0], auts)
print(f"its orbit has {first.size} vectors (search exhausted: {first.exhausted})")

# The library does the same for every vector and matches the listed normal forms.
report = classify(CoverType.II, 1, n)
print(f"\n{len(report.classes)} orbits")
for i, entry in enumerate(report.classes):
    forms = ", ".join(entry.forms) or "unmatched"
    print(f"  orbit {i}: {entry.admissible_members:5d} admissible members -> {forms}")
print("status:", "PASS" if report.ok else "FAIL")
