"""Hurwitz vectors, the braid and automorphism actions, and genus bookkeeping."""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .groups import (
    FiniteGroup,
    GroupElement,
    GroupError,
    GroupMap,
    GroupType,
    closure_idx,
    format_coords,
    group_from_json,
    parse_coords,
)


class HurwitzError(ValueError):
    pass


class InconsistentSignature(HurwitzError):
    pass


@dataclass(frozen=True)
class Signature:
    """Base genus and the sorted multiset of branching indices."""

    genus: int
    orders: tuple[int, ...]

    def __post_init__(self):
        if self.genus < 0 or any(m < 2 for m in self.orders):
            raise InconsistentSignature(f"bad signature ({self.genus}; {self.orders})")
        object.__setattr__(self, "orders", tuple(sorted(self.orders)))

    @property
    def r(self) -> int:
        return len(self.orders)

    def __str__(self) -> str:
        body = ",".join(map(str, self.orders)) or "-"
        return f"({self.genus}; {body})"


@dataclass(frozen=True, eq=False)
class HurwitzVector:
    """Handle pairs and branch entries, stored as element indices of ``group``.

    Identity branch entries are dropped on construction.
    """

    group: FiniteGroup
    branches: tuple[int, ...]
    handles: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        ident = self.group.identity_index
        object.__setattr__(self, "branches", tuple(int(b) for b in self.branches if int(b) != ident))
        object.__setattr__(self, "handles", tuple((int(a), int(b)) for a, b in self.handles))

    @classmethod
    def from_elements(cls, branches: Sequence[GroupElement],
                      handles: Sequence[tuple[GroupElement, GroupElement]] = ()) -> HurwitzVector:
        items = list(branches) + [h for pair in handles for h in pair]
        if not items:
            raise HurwitzError("cannot infer the group of an empty vector")
        group = items[0].group
        for el in items:
            group._check(el)
        return cls(group, tuple(b.index for b in branches), tuple((a.index, b.index) for a, b in handles))

    @property
    def genus(self) -> int:
        return len(self.handles)

    @property
    def r(self) -> int:
        return len(self.branches)

    def __len__(self) -> int:
        return len(self.branches)

    def __eq__(self, other) -> bool:
        return (isinstance(other, HurwitzVector) and other.group is self.group
                and other.branches == self.branches and other.handles == self.handles)

    def __hash__(self) -> int:
        return hash((id(self.group), self.branches, self.handles))

    def __lt__(self, other: HurwitzVector) -> bool:
        return self.key() < other.key()

    def key(self) -> tuple:
        """Exact dedup key; lexicographic order follows the element order."""
        return (self.handles, self.branches)

    @property
    def branch_elements(self) -> list[GroupElement]:
        return [GroupElement(self.group, b) for b in self.branches]

    @property
    def handle_elements(self) -> list[tuple[GroupElement, GroupElement]]:
        return [(GroupElement(self.group, a), GroupElement(self.group, b)) for a, b in self.handles]

    def entries(self) -> list[int]:
        return [h for pair in self.handles for h in pair] + list(self.branches)

    def product(self) -> int:
        g = self.group
        acc = g.identity_index
        for a, b in self.handles:
            comm = g.mul_idx(g.mul_idx(a, b), g.mul_idx(g.inv_idx(a), g.inv_idx(b)))
            acc = g.mul_idx(acc, comm)
        for c in self.branches:
            acc = g.mul_idx(acc, c)
        return acc

    def __str__(self) -> str:
        fmt = lambda i: format_coords(self.group.coords[i])  # noqa: E731
        hs = ", ".join(f"{fmt(a)}, {fmt(b)}" for a, b in self.handles)
        bs = ", ".join(fmt(b) for b in self.branches)
        return f"[{hs}; {bs}]" if self.handles else f"[{bs}]"

    def to_json(self) -> dict:
        fmt = lambda i: format_coords(self.group.coords[i])  # noqa: E731
        return {
            "group": self.group.to_json(),
            "genus": self.genus,
            "handles": [[fmt(a), fmt(b)] for a, b in self.handles],
            "branches": [fmt(b) for b in self.branches],
        }

    @classmethod
    def from_json(cls, doc: dict, group: FiniteGroup | None = None) -> HurwitzVector:
        group = group or group_from_json(doc["group"])
        idx = lambda t: group.index[parse_coords(t)]  # noqa: E731
        handles = tuple((idx(a), idx(b)) for a, b in doc.get("handles", []))
        if len(handles) != doc.get("genus", len(handles)):
            raise HurwitzError("genus does not match the number of handle pairs")
        return cls(group, tuple(idx(b) for b in doc["branches"]), handles)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def product_one(v: HurwitzVector) -> bool:
    return v.product() == v.group.identity_index


def generated_subgroup(v: HurwitzVector) -> frozenset:
    return closure_idx(v.group, v.entries())


def generates(v: HurwitzVector, group: FiniteGroup | None = None) -> bool:
    """Whether the entries of ``v`` generate ``group`` (default: the vector's own group)."""
    group = group or v.group
    if group is not v.group:
        raise HurwitzError("vector and group differ")
    return len(generated_subgroup(v)) == group.order


def signature_of(v: HurwitzVector) -> Signature:
    return Signature(v.genus, tuple(v.group.order_idx(b) for b in v.branches))


def orbifold_euler(sig: Signature) -> Fraction:
    return 2 - 2 * sig.genus - sum((1 - Fraction(1, m) for m in sig.orders), Fraction(0))


def riemann_hurwitz_genus(group_order: int, sig: Signature) -> int:
    """Genus of C from ``2g - 2 = |G| (2g' - 2 + sum(1 - 1/m_i))``."""
    two_g_minus_2 = -group_order * orbifold_euler(sig)
    if two_g_minus_2.denominator != 1 or two_g_minus_2.numerator % 2 or two_g_minus_2 < -2:
        raise InconsistentSignature(f"|G| = {group_order} with {sig} gives 2g-2 = {two_g_minus_2}")
    return int(two_g_minus_2) // 2 + 1


def delta(sig: Signature) -> int:
    """Dimension of the fixed locus, ``3 g' - 3 + r`` for the quotient signature."""
    return 3 * sig.genus - 3 + sig.r


# ---------------------------------------------------------------------------
# braid and automorphism actions


def _check_braid_index(v: HurwitzVector, i: int) -> None:
    if v.genus:
        raise HurwitzError("braid moves act on genus-0 vectors only")
    if not 1 <= i <= v.r - 1:
        raise HurwitzError(f"braid index {i} out of range 1..{v.r - 1}")


def braid_move(v: HurwitzVector, i: int, direction: int = 1) -> HurwitzVector:
    """Apply ``sigma_i`` (``direction=+1``) or its inverse; ``i`` is 1-based.

    ``sigma_i: (.., a, b, ..) -> (.., a b a^-1, a, ..)``.
    """
    _check_braid_index(v, i)
    g = v.group
    br = list(v.branches)
    a, b = br[i - 1], br[i]
    if direction > 0:
        br[i - 1], br[i] = g.conj_idx(b, a), a
    else:
        br[i - 1], br[i] = b, g.conj_idx(a, g.inv_idx(b))
    return HurwitzVector(g, tuple(br))


def apply_aut(v: HurwitzVector, phi: GroupMap) -> HurwitzVector:
    if phi.source is not v.group or phi.target is not v.group:
        raise HurwitzError("automorphism acts on a different group")
    im = phi.images
    return HurwitzVector(v.group, tuple(im[b] for b in v.branches),
                         tuple((im[a], im[b]) for a, b in v.handles))


def conjugacy_classes(group: FiniteGroup) -> list[frozenset]:
    return list(_classes(group))


@functools.lru_cache(maxsize=128)
def _classes(group: FiniteGroup) -> tuple[frozenset, ...]:
    seen: set[int] = set()
    out = []
    for a in range(group.order):
        if a in seen:
            continue
        cls = frozenset(group.conj_idx(a, b) for b in range(group.order))
        seen |= cls
        out.append(cls)
    return tuple(out)


def class_index(group: FiniteGroup) -> list[int]:
    out = [0] * group.order
    for k, cls in enumerate(_classes(group)):
        for a in cls:
            out[a] = k
    return out


def class_multiset(v: HurwitzVector) -> tuple[int, ...]:
    idx = class_index(v.group)
    return tuple(sorted(idx[b] for b in v.branches))


# ---------------------------------------------------------------------------
# triple normalization


def _is_triple_normal(v: HurwitzVector, i: int) -> bool:
    a, b, c = v.branches[i - 1:i + 2]
    la, lb, lc = (v.group.coords[t][1] for t in (a, b, c))
    return la == lb or lb == lc


def normalize_triple(v: HurwitzVector, i: int) -> HurwitzVector:
    """Braid the reflections at positions ``i, i+1, i+2`` (1-based) until two
    adjacent ones share their rotation exponent.

    Uses only ``sigma_i^{-1}`` and ``sigma_{i+1}``: on the exponent gaps
    ``(b - a, c - b)`` these act as ``(d1, d2 - d1)`` and ``(d1 - d2, d2)``,
    so subtractive Euclid on the gaps terminates with one gap zero.
    """
    if v.group.group_type not in (GroupType.TYPE1, GroupType.DN):
        raise HurwitzError("triple normalization needs dihedral reflection arithmetic")
    if v.genus or not 1 <= i <= v.r - 2:
        raise HurwitzError(f"no branch triple at position {i}")
    coords = v.group.coords
    if not all(coords[t][0] == 1 for t in v.branches[i - 1:i + 2]):
        raise HurwitzError("triple entries must all be reflections")
    n = v.group.n
    cur = v
    while not _is_triple_normal(cur, i):
        a, b, c = (coords[t][1] for t in cur.branches[i - 1:i + 2])
        d1, d2 = (b - a) % n, (c - b) % n
        if d1 >= d2:
            cur = braid_move(cur, i + 1, +1)
        else:
            cur = braid_move(cur, i, -1)
    return cur


def as_vector(group: FiniteGroup, items: Iterable) -> HurwitzVector:
    """Convenience: a genus-0 vector from elements, coordinate triples or indices."""
    out = []
    for it in items:
        if isinstance(it, GroupElement):
            group._check(it)
            out.append(it.index)
        elif isinstance(it, tuple):
            out.append(group.index[(it[0] % 2, it[1] % group.n, it[2])])
        elif isinstance(it, str):
            out.append(group.index[parse_coords(it)])
        else:
            out.append(int(it))
    return HurwitzVector(group, tuple(out))


__all__ = [
    "GroupError",
    "HurwitzError",
    "HurwitzVector",
    "InconsistentSignature",
    "Signature",
    "apply_aut",
    "as_vector",
    "braid_move",
    "class_multiset",
    "conjugacy_classes",
    "delta",
    "generated_subgroup",
    "generates",
    "normalize_triple",
    "orbifold_euler",
    "product_one",
    "riemann_hurwitz_genus",
    "signature_of",
]
