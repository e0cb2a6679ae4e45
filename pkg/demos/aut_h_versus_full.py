"""Two cover III normal forms that only become equivalent once H may move.

Under braids and all of Aut(G) the IIIa and IIIb forms share an orbit. If the
automorphisms must preserve H the orbits separate. Run with
``python demos/aut_h_versus_full.py [n]`` for even n >= 4.
"""

import sys

from dihedral_loci import automorphisms, automorphisms_fixing, distinguished_subgroup, make_group
from dihedral_loci.classify import verify_remark_equivalence

n = int(sys.argv[1]) if len(sys.argv) > 1 else 4
group = make_group(1, n)
h = distinguished_subgroup(group)
print(f"|Aut({group.name})| = {len(automorphisms(group))}, of which {len(automorphisms_fixing(group, h))} preserve H")

r = verify_remark_equivalence(n)
print("IIIa form:", ", ".join(r.vectors["IIIa"]))
print("IIIb form:", ", ".join(r.vectors["IIIb"]))
print("same orbit, all automorphisms:      ", r.full_aut_same)
print("same orbit, automorphisms fixing H: ", r.restricted_aut_same)
print("explicit witness maps one to the other:", r.witness_is_automorphism and r.witness_braid_equivalent)
