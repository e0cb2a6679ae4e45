"""Hurwitz-vector classification of dihedral symmetry loci in moduli of curves."""

from .classify import (
    classify,
    verify_all,
    verify_corollary_pairs,
    verify_nonexistence,
    verify_remark_equivalence,
    verify_tables,
)
from .covers import (
    CoverType,
    RestrictedCover,
    admissible_rows,
    dimension_pair,
    enumerate_admissible,
    iiic_catalog,
    is_admissible,
    quotient_vector,
    restrict_index2,
)
from .groups import (
    FiniteGroup,
    GroupElement,
    GroupError,
    GroupMap,
    GroupType,
    Subgroup,
    automorphisms,
    automorphisms_fixing,
    dihedral_group,
    dihedral_identification,
    distinguished_subgroup,
    find_subgroup,
    index2_subgroups,
    is_dihedral,
    make_group,
    named_subgroup,
)
from .hurwitz import (
    HurwitzError,
    HurwitzVector,
    InconsistentSignature,
    Signature,
    apply_aut,
    braid_move,
    delta,
    generates,
    normalize_triple,
    orbifold_euler,
    product_one,
    riemann_hurwitz_genus,
    signature_of,
)
from .orbits import AutAction, OrbitClass, orbit, same_orbit

__all__ = [
    "admissible_rows",
    "apply_aut",
    "AutAction",
    "automorphisms",
    "automorphisms_fixing",
    "braid_move",
    "classify",
    "CoverType",
    "delta",
    "dihedral_group",
    "dihedral_identification",
    "dimension_pair",
    "distinguished_subgroup",
    "enumerate_admissible",
    "find_subgroup",
    "FiniteGroup",
    "generates",
    "GroupElement",
    "GroupError",
    "GroupMap",
    "GroupType",
    "HurwitzError",
    "HurwitzVector",
    "iiic_catalog",
    "InconsistentSignature",
    "index2_subgroups",
    "is_admissible",
    "is_dihedral",
    "make_group",
    "named_subgroup",
    "normalize_triple",
    "orbifold_euler",
    "orbit",
    "OrbitClass",
    "product_one",
    "quotient_vector",
    "restrict_index2",
    "RestrictedCover",
    "riemann_hurwitz_genus",
    "same_orbit",
    "Signature",
    "signature_of",
    "Subgroup",
    "verify_all",
    "verify_corollary_pairs",
    "verify_nonexistence",
    "verify_remark_equivalence",
    "verify_tables",
]
