"""Exact arithmetic in D_n and its order-4n extensions.

Every element is stored as a coordinate triple ``(k, l, s)`` meaning
``y^k x^l`` in the dihedral part together with an extension coordinate ``s``.
What ``s`` means depends on the group type:

* ``Type1``  -- ``D_n x Z/2``; ``s`` is the ``Z/2`` coordinate.
* ``Type2``  -- ``D_2n = <z, y>`` with ``x = z^2``; the triple encodes ``y^k z^(2l + s)``.
* ``Type3``  -- ``D_n  x| <b>`` where ``b y b^-1 = y x^2`` and ``b x b^-1 = x^(2h-1)``,
  ``n = 4h`` with ``h`` odd; the triple encodes ``y^k x^l b^s``.
* ``Dn``     -- the bare dihedral group, ``s`` is always 0.
* ``ExplicitTable`` -- externally supplied multiplication; ``s`` may be any
  small non-negative integer.

Elements are sorted by their coordinates, so element index order and the
total order ``(reflection-bit, rotation-exponent, extension-coordinate)``
coincide.  All arithmetic runs on integer indices through a Cayley table.
"""

from __future__ import annotations

import functools
import json
import math
import re
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Sequence

import numpy as np

Coords = tuple[int, int, int]

DEFAULT_AUT_BOUND = 200


class GroupError(ValueError):
    """Raised for invalid group parameters or operands."""


class GroupType(str, Enum):
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    TYPE3 = "Type3"
    DN = "Dn"
    EXPLICIT = "ExplicitTable"

    @classmethod
    def parse(cls, value: GroupType | str | int) -> GroupType:
        if isinstance(value, GroupType):
            return value
        text = str(value).strip()
        aliases = {"1": cls.TYPE1, "2": cls.TYPE2, "3": cls.TYPE3, "dn": cls.DN, "d": cls.DN}
        if text.lower() in aliases:
            return aliases[text.lower()]
        for member in cls:
            if member.value.lower() == text.lower():
                return member
        raise GroupError(f"unknown group type {value!r}")


def format_coords(c: Coords) -> str:
    return f"y^{c[0]} x^{c[1]} | {c[2]}"


_COORD_RE = re.compile(r"^\s*y\^(\d+)\s+x\^(\d+)\s*\|\s*(\d+)\s*$")


def parse_coords(text: str) -> Coords:
    match = _COORD_RE.match(text)
    if match is None:
        raise GroupError(f"malformed element string {text!r}")
    k, l, s = (int(g) for g in match.groups())
    return (k, l, s)


class FiniteGroup:
    """A finite group given by sorted coordinate triples and a Cayley table.

    Instances are immutable once built.  Use :func:`make_group` for the named
    families and :func:`explicit_group` for anything else.
    """

    def __init__(
        self,
        group_type: GroupType,
        n: int,
        coords: Iterable[Coords],
        mul: Callable[[Coords, Coords], Coords],
        name: str | None = None,
    ):
        self.group_type = group_type
        self.n = n
        self.coords: tuple[Coords, ...] = tuple(sorted(set(coords)))
        self.index: dict[Coords, int] = {c: i for i, c in enumerate(self.coords)}
        self.name = name or f"{group_type.value}(n={n})"
        size = len(self.coords)
        table = np.empty((size, size), dtype=np.int64)
        for i, a in enumerate(self.coords):
            for j, b in enumerate(self.coords):
                try:
                    table[i, j] = self.index[mul(a, b)]
                except KeyError:
                    raise GroupError(f"{self.name}: product of {a} and {b} leaves the element set")
        self._finish(table)

    @classmethod
    def from_table(cls, group_type, n, coords, table, name=None) -> FiniteGroup:
        """Build from an explicit Cayley table indexed like ``coords`` (which must be sorted)."""
        self = cls.__new__(cls)
        self.group_type = group_type
        self.n = n
        self.coords = tuple(coords)
        if list(self.coords) != sorted(self.coords):
            raise GroupError("coordinates must be sorted")
        self.index = {c: i for i, c in enumerate(self.coords)}
        self.name = name or f"{group_type.value}(n={n})"
        self._finish(np.asarray(table, dtype=np.int64))
        return self

    def _finish(self, table: np.ndarray) -> None:
        size = len(self.coords)
        self.table = table
        self.table.setflags(write=False)
        self._mul = table.tolist()
        ident = [i for i in range(size) if all(self._mul[i][j] == j for j in range(size))]
        if len(ident) != 1:
            raise GroupError(f"{self.name}: no unique identity")
        self.identity_index = ident[0]
        self._inv = [0] * size
        for i in range(size):
            row = self._mul[i]
            hits = [j for j in range(size) if row[j] == self.identity_index]
            if len(hits) != 1:
                raise GroupError(f"{self.name}: element {self.coords[i]} has no inverse")
            self._inv[i] = hits[0]
        self._order = [self._compute_order(i) for i in range(size)]
        self.inverse_table = np.array(self._inv, dtype=np.int64)
        self.order_table = np.array(self._order, dtype=np.int64)
        # conj[a][b] = a b a^-1
        self._conj = [[self._mul[self._mul[a][b]][self._inv[a]] for b in range(size)] for a in range(size)]
        self.conj_table = np.array(self._conj, dtype=np.int64)

    def _compute_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != self.identity_index:
            cur = self._mul[cur][i]
            k += 1
        return k

    # -- basic protocol -------------------------------------------------
    def __len__(self) -> int:
        return len(self.coords)

    @property
    def order(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return (GroupElement(self, i) for i in range(len(self.coords)))

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.name} order={self.order}>"

    @property
    def params(self) -> dict[str, int]:
        out = {"n": self.n}
        if self.n % 2 == 0:
            out["m"] = out["d"] = self.n // 2
        if self.n % 4 == 0:
            out["h"] = self.n // 4
        return out

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self, self.identity_index)

    def element(self, k: int = 0, l: int = 0, s: int = 0) -> GroupElement:
        c = (k % 2, l % self.n, s)
        if c not in self.index:
            raise GroupError(f"{format_coords(c)} is not an element of {self.name}")
        return GroupElement(self, self.index[c])

    def __getitem__(self, index: int) -> GroupElement:
        return GroupElement(self, index)

    @property
    def x(self) -> GroupElement:
        return self.element(0, 1, 0)

    @property
    def y(self) -> GroupElement:
        return self.element(1, 0, 0)

    @property
    def e(self) -> GroupElement:
        return self.identity

    @property
    def z(self) -> GroupElement:
        """The extension generator: (e,1), z, or beta_2 depending on the type."""
        return self.element(0, 0, 1)

    def parse(self, text: str) -> GroupElement:
        return GroupElement(self, self.index[parse_coords(text)])

    # -- index-level arithmetic ------------------------------------------
    def mul_idx(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv_idx(self, a: int) -> int:
        return self._inv[a]

    def order_idx(self, a: int) -> int:
        return self._order[a]

    def conj_idx(self, a: int, b: int) -> int:
        """Return ``b a b^-1`` on indices."""
        return self._conj[b][a]

    def prod_idx(self, items: Iterable[int]) -> int:
        acc = self.identity_index
        for a in items:
            acc = self._mul[acc][a]
        return acc

    def power_idx(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self._inv[a], -k
        acc = self.identity_index
        for _ in range(k % self._order[a]):
            acc = self._mul[acc][a]
        return acc

    # -- element-level API -------------------------------------------------
    def _check(self, *elements: GroupElement) -> None:
        for el in elements:
            if not isinstance(el, GroupElement) or el.group is not self:
                raise GroupError(f"operand {el!r} does not belong to {self.name}")

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        self._check(a, b)
        return GroupElement(self, self._mul[a.index][b.index])

    def inv(self, a: GroupElement) -> GroupElement:
        self._check(a)
        return GroupElement(self, self._inv[a.index])

    def element_order(self, a: GroupElement) -> int:
        self._check(a)
        return self._order[a.index]

    def conjugate(self, a: GroupElement, b: GroupElement) -> GroupElement:
        """``b a b^-1``."""
        self._check(a, b)
        return GroupElement(self, self._conj[b.index][a.index])

    def center(self) -> list[GroupElement]:
        size = len(self)
        return [GroupElement(self, a) for a in range(size)
                if all(self._mul[a][b] == self._mul[b][a] for b in range(size))]

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def to_json(self) -> dict:
        return {
            "type": self.group_type.value,
            "n": self.n,
            "elements": [format_coords(c) for c in self.coords],
        }


@functools.total_ordering
class GroupElement:
    """An element bound to its group; compares by coordinates."""

    __slots__ = ("group", "index")

    def __init__(self, group: FiniteGroup, index: int):
        self.group = group
        self.index = index

    @property
    def coords(self) -> Coords:
        return self.group.coords[self.index]

    @property
    def k(self) -> int:
        return self.coords[0]

    @property
    def l(self) -> int:
        return self.coords[1]

    @property
    def s(self) -> int:
        return self.coords[2]

    @property
    def is_reflection(self) -> bool:
        return self.coords[0] == 1

    @property
    def order(self) -> int:
        return self.group.order_idx(self.index)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return self.group.mul(self, other)

    def __pow__(self, k: int) -> GroupElement:
        return GroupElement(self.group, self.group.power_idx(self.index, k))

    def __invert__(self) -> GroupElement:
        return self.group.inv(self)

    def inverse(self) -> GroupElement:
        return self.group.inv(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupElement) and other.group is self.group and other.index == self.index

    def __lt__(self, other: GroupElement) -> bool:
        self.group._check(other)
        return self.index < other.index

    def __hash__(self) -> int:
        return hash((id(self.group), self.index))

    def __str__(self) -> str:
        return format_coords(self.coords)

    def __repr__(self) -> str:
        return f"<{self} in {self.group.name}>"


# ---------------------------------------------------------------------------
# Group construction


def _dihedral_mul(n: int):
    def mul(a: Coords, b: Coords) -> Coords:
        k1, l1, _ = a
        k2, l2, _ = b
        sign = -1 if k2 else 1
        return ((k1 + k2) % 2, (sign * l1 + l2) % n, 0)
    return mul


def _type1_mul(n: int):
    def mul(a: Coords, b: Coords) -> Coords:
        k1, l1, s1 = a
        k2, l2, s2 = b
        sign = -1 if k2 else 1
        return ((k1 + k2) % 2, (sign * l1 + l2) % n, (s1 + s2) % 2)
    return mul


def _type2_mul(n: int):
    # y^k z^j with j = 2l + s taken mod 2n
    def mul(a: Coords, b: Coords) -> Coords:
        k1, l1, s1 = a
        k2, l2, s2 = b
        j1, j2 = 2 * l1 + s1, 2 * l2 + s2
        sign = -1 if k2 else 1
        j = (sign * j1 + j2) % (2 * n)
        return ((k1 + k2) % 2, j // 2, j % 2)
    return mul


def _type3_mul(n: int):
    h = n // 4

    def phi(k: int, l: int) -> tuple[int, int]:
        # conjugation by beta_2: y -> y x^2, x -> x^(2h-1)
        return k, (2 * k + (2 * h - 1) * l) % n

    def mul(a: Coords, b: Coords) -> Coords:
        k1, l1, s1 = a
        k2, l2, s2 = b
        if s1:
            k2, l2 = phi(k2, l2)
        sign = -1 if k2 else 1
        return ((k1 + k2) % 2, (sign * l1 + l2) % n, (s1 + s2) % 2)
    return mul


def make_group(group_type: GroupType | str | int, n: int) -> FiniteGroup:
    """Build one of the named families.  Results are cached, so equal
    parameters give the identical object."""
    return _make_group(GroupType.parse(group_type), int(n))


@functools.lru_cache(maxsize=None)
def _make_group(gt: GroupType, n: int) -> FiniteGroup:
    if n < 2:
        raise GroupError(f"n must be at least 2, got {n}")
    if gt is GroupType.DN:
        coords = [(k, l, 0) for k in range(2) for l in range(n)]
        return FiniteGroup(gt, n, coords, _dihedral_mul(n), name=f"D_{n}")
    coords = [(k, l, s) for k in range(2) for l in range(n) for s in range(2)]
    if gt is GroupType.TYPE1:
        return FiniteGroup(gt, n, coords, _type1_mul(n), name=f"D_{n} x Z/2")
    if gt is GroupType.TYPE2:
        if n % 2:
            raise GroupError(f"Type2 needs n = 2d even, got n = {n}")
        return FiniteGroup(gt, n, coords, _type2_mul(n), name=f"D_{2 * n} (Type2, n={n})")
    if gt is GroupType.TYPE3:
        if n % 4 or (n // 4) % 2 == 0:
            raise GroupError(f"Type3 needs n = 4h with h odd, got n = {n}")
        return FiniteGroup(gt, n, coords, _type3_mul(n), name=f"D_{n} x| Z/2 (Type3, h={n // 4})")
    raise GroupError("ExplicitTable groups are built with explicit_group()")


def explicit_group(name: str, n: int, coords: Iterable[Coords],
                   mul: Callable[[Coords, Coords], Coords]) -> FiniteGroup:
    return FiniteGroup(GroupType.EXPLICIT, n, coords, mul, name=name)


def group_from_json(doc: dict) -> FiniteGroup:
    gt = GroupType.parse(doc["type"])
    if gt is GroupType.EXPLICIT:
        raise GroupError("ExplicitTable groups cannot be rebuilt from an element list alone")
    group = make_group(gt, int(doc["n"]))
    listed = sorted(parse_coords(t) for t in doc["elements"])
    if listed != list(group.coords):
        raise GroupError("element list does not match the named group")
    return group


def dihedral_group(n: int) -> FiniteGroup:
    return make_group(GroupType.DN, n)


# ---------------------------------------------------------------------------
# Subgroups


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    elements: tuple[int, ...]
    label: str | None = None
    _members: frozenset = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))
        object.__setattr__(self, "_members", frozenset(self.elements))

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and other.parent is self.parent and other._members == self._members

    def __hash__(self) -> int:
        return hash((id(self.parent), self._members))

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, item) -> bool:
        if isinstance(item, GroupElement):
            return item.group is self.parent and item.index in self._members
        return item in self._members

    def contains_idx(self, i: int) -> bool:
        return i in self._members

    @property
    def members(self) -> frozenset:
        return self._members

    def element_list(self) -> list[GroupElement]:
        return [GroupElement(self.parent, i) for i in self.elements]

    def with_label(self, label: str | None) -> Subgroup:
        return Subgroup(self.parent, self.elements, label)

    @property
    def name(self) -> str:
        return self.label or f"<subgroup of order {self.order}>"

    def is_normal(self) -> bool:
        g = self.parent
        return all(g.conj_idx(h, a) in self._members for a in range(g.order) for h in self.elements)

    def membership_mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[list(self.elements)] = True
        return mask

    @functools.cached_property
    def as_group(self) -> FiniteGroup:
        """This subgroup as a standalone group (same coordinate labels)."""
        g = self.parent
        coords = [g.coords[i] for i in self.elements]
        pos = {i: j for j, i in enumerate(self.elements)}
        table = [[pos[g.mul_idx(a, b)] for b in self.elements] for a in self.elements]
        name = self.label or f"subgroup of {g.name}"
        return FiniteGroup.from_table(GroupType.EXPLICIT, g.n, coords, table, name=name)

    def to_parent_idx(self, sub_index: int) -> int:
        return self.elements[sub_index]

    def from_parent_idx(self, parent_index: int) -> int:
        return self.as_group.index[self.parent.coords[parent_index]]

    def to_json(self) -> dict:
        return {
            "type": self.parent.group_type.value,
            "n": self.parent.n,
            "label": self.label,
            "elements": [format_coords(self.parent.coords[i]) for i in self.elements],
        }


def _as_indices(group: FiniteGroup, items: Iterable) -> list[int]:
    out = []
    for item in items:
        if isinstance(item, GroupElement):
            group._check(item)
            out.append(item.index)
        elif isinstance(item, tuple):
            out.append(group.index[(item[0] % 2, item[1] % group.n, item[2])])
        else:
            out.append(int(item))
    return out


def closure_idx(group: FiniteGroup, gens: Iterable[int]) -> frozenset:
    gens = list(dict.fromkeys(gens))
    seen = {group.identity_index}
    queue = deque([group.identity_index])
    mul = group._mul
    while queue:
        a = queue.popleft()
        row = mul[a]
        for g in gens:
            b = row[g]
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return frozenset(seen)


def subgroup_closure(group: FiniteGroup, generators: Iterable, label: str | None = None) -> Subgroup:
    """Least subgroup containing ``generators`` (elements, coordinate triples or indices)."""
    return Subgroup(group, tuple(closure_idx(group, _as_indices(group, generators))), label)


# generator lists of the named subgroups, as functions of n
_CATALOG: dict[GroupType, dict[str, list[Coords]]] = {
    GroupType.TYPE1: {
        "H": [(0, 1, 0), (1, 0, 0)],
        "K": [(0, 1, 0)],
        "H_{1,1}": [(0, 1, 0), (0, 0, 1)],
        "H_{1,2}": [(0, 1, 0), (1, 0, 1)],
        "H_{1,3}": [(0, 2, 0), (1, 0, 0), (0, 0, 1)],
        "H_{1,4}": [(0, 2, 0), (1, 0, 0), (0, 1, 1)],
        "H_{1,5}": [(0, 2, 0), (1, 1, 0), (0, 0, 1)],
        "H_{1,6}": [(0, 2, 0), (1, 1, 0), (0, 1, 1)],
    },
    GroupType.TYPE2: {
        # coordinates encode y^k z^(2l+s): x = z^2 = (0,1,0), z = (0,0,1), yz = (1,0,1)
        "H": [(0, 1, 0), (1, 0, 0)],
        "H_{2,1}": [(0, 0, 1)],
        "H_{2,2}": [(0, 1, 0), (1, 0, 1)],
    },
    GroupType.TYPE3: {
        "H": [(0, 1, 0), (1, 0, 0)],
        "H_{3,1}": [(0, 1, 0), (0, 0, 1)],
        "H_{3,2}": [(0, 1, 0), (1, 0, 1)],
        "H_{3,3}": [(0, 2, 0), (1, 0, 0), (0, 0, 1)],
        "H_{3,4}": [(0, 2, 0), (1, 0, 0), (0, 1, 1)],
        "H_{3,5}": [(0, 2, 0), (1, 1, 0), (0, 0, 1)],
        "H_{3,6}": [(0, 2, 0), (1, 1, 0), (0, 1, 1)],
    },
    GroupType.DN: {"K": [(0, 1, 0)]},
}


def catalog_labels(group: FiniteGroup) -> list[str]:
    return list(_CATALOG.get(group.group_type, {}))


def named_subgroup(group: FiniteGroup, label: str) -> Subgroup:
    """Closure of the catalog generators for ``label`` (e.g. ``"H_{1,4}"``)."""
    try:
        gens = _CATALOG[group.group_type][label]
    except KeyError:
        raise GroupError(f"no subgroup {label!r} in the catalog for {group.group_type.value}")
    return subgroup_closure(group, gens, label=label)


def distinguished_subgroup(group: FiniteGroup) -> Subgroup:
    """The index-2 subgroup H isomorphic to D_n (extension coordinate 0)."""
    return named_subgroup(group, "H")


def index2_subgroups(group: FiniteGroup) -> list[Subgroup]:
    """All index-2 subgroups, labelled from the catalog where they match.

    Computed as kernels of the nonzero functionals on G / <g^2>, an
    elementary abelian 2-group.
    """
    size = group.order
    squares = closure_idx(group, {group.mul_idx(a, a) for a in range(size)})
    # coset of each element modulo the square subgroup, as a bit vector over a basis
    basis: list[int] = []
    coset_of = {}
    for a in range(size):
        rep = None
        for h in squares:
            c = group.mul_idx(a, h)
            rep = c if rep is None else min(rep, c)
        coset_of[a] = rep
    reps_vec: dict[int, int] = {coset_of[group.identity_index]: 0}
    for a in range(size):
        ca = coset_of[a]
        if ca in reps_vec:
            continue
        bit = 1 << len(basis)
        basis.append(a)
        new = {}
        for rep, vec in reps_vec.items():
            new[coset_of[group.mul_idx(rep, a)]] = vec | bit
        reps_vec.update(new)
    rank = len(basis)
    labelled = {}
    for label in catalog_labels(group):
        sub = named_subgroup(group, label)
        if sub.index == 2 and sub.members not in labelled:
            labelled[sub.members] = label
    out = []
    for functional in range(1, 1 << rank):
        kernel = tuple(a for a in range(size)
                       if bin(reps_vec[coset_of[a]] & functional).count("1") % 2 == 0)
        members = frozenset(kernel)
        out.append(Subgroup(group, kernel, labelled.get(members)))
    out.sort(key=lambda s: (s.label is None, _label_key(s.label), s.elements))
    return out


def _label_key(label: str | None):
    if label is None:
        return (2, 0, 0)
    if label == "H":
        return (0, 0, 0)
    nums = re.findall(r"\d+", label)
    return (1, *map(int, nums)) if nums else (1, 0, 0)


def find_subgroup(group: FiniteGroup, label: str) -> Subgroup:
    for sub in index2_subgroups(group):
        if sub.label == label:
            return sub
    raise GroupError(f"{label} is not an index-2 subgroup of {group.name}")


def is_dihedral(sub: Subgroup | FiniteGroup) -> tuple[GroupElement, GroupElement] | None:
    """Witnesses ``(r, s)`` with ``|r| = |S|/2``, ``|s| = 2``, ``s r s^-1 = r^-1``
    generating ``S``, searched smallest-first; ``None`` if there are none."""
    if isinstance(sub, FiniteGroup):
        sub = Subgroup(sub, tuple(range(sub.order)))
    g = sub.parent
    size = sub.order
    if size < 4 or size % 2:
        return None
    half = size // 2
    for r in sub.elements:
        if g.order_idx(r) != half:
            continue
        cyclic = closure_idx(g, [r])
        r_inv = g.inv_idx(r)
        for s in sub.elements:
            if g.order_idx(s) != 2 or s in cyclic:
                continue
            if g.conj_idx(r, s) == r_inv:
                return GroupElement(g, r), GroupElement(g, s)
    return None


# ---------------------------------------------------------------------------
# Homomorphisms


@dataclass(frozen=True, eq=False)
class GroupMap:
    source: FiniteGroup
    target: FiniteGroup
    images: tuple[int, ...]
    kind: str = "homomorphism"

    def __call__(self, el: GroupElement) -> GroupElement:
        self.source._check(el)
        return GroupElement(self.target, self.images[el.index])

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupMap) and other.source is self.source
                and other.target is self.target and other.images == self.images)

    def __hash__(self) -> int:
        return hash((id(self.source), id(self.target), self.images))

    def is_homomorphism(self) -> bool:
        s, t, im = self.source, self.target, self.images
        return all(im[s.mul_idx(a, b)] == t.mul_idx(im[a], im[b])
                   for a in range(s.order) for b in range(s.order))

    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.source.order == self.target.order

    def compose(self, other: GroupMap) -> GroupMap:
        """``self o other``: apply ``other`` first."""
        if other.target is not self.source:
            raise GroupError("maps are not composable")
        images = tuple(self.images[i] for i in other.images)
        kind = "automorphism" if self.kind == other.kind == "automorphism" else "homomorphism"
        return GroupMap(other.source, self.target, images, kind)

    def inverse(self) -> GroupMap:
        if not self.is_bijective():
            raise GroupError("map is not invertible")
        inv = [0] * self.source.order
        for i, j in enumerate(self.images):
            inv[j] = i
        return GroupMap(self.target, self.source, tuple(inv), self.kind)

    def maps_onto(self, sub: Subgroup) -> bool:
        return {self.images[i] for i in sub.elements} == set(sub.elements)


def extend_to_hom(source: FiniteGroup, gens: Sequence[int], images: Sequence[int],
                  target: FiniteGroup | None = None) -> list[int] | None:
    """Extend generator images to a homomorphism on ``<gens>``.

    Returns the image list over the generated subgroup (``-1`` outside it), or
    ``None`` when the assignment is inconsistent.
    """
    target = target or source
    img = [-1] * source.order
    img[source.identity_index] = target.identity_index
    queue = deque([source.identity_index])
    smul, tmul = source._mul, target._mul
    while queue:
        a = queue.popleft()
        ia = img[a]
        for g, h in zip(gens, images):
            b = smul[a][g]
            want = tmul[ia][h]
            if img[b] == -1:
                img[b] = want
                queue.append(b)
            elif img[b] != want:
                return None
    return img


def hom_from_generators(source: FiniteGroup, gens: Sequence, images: Sequence,
                        target: FiniteGroup | None = None, kind: str = "homomorphism") -> GroupMap:
    target = target or source
    gi = _as_indices(source, gens)
    hi = _as_indices(target, images)
    img = extend_to_hom(source, gi, hi, target)
    if img is None:
        raise GroupError("generator images do not define a homomorphism")
    if -1 in img:
        raise GroupError("the listed generators do not generate the source group")
    return GroupMap(source, target, tuple(img), kind)


def automorphism_from_generators(group: FiniteGroup, gens: Sequence, images: Sequence) -> GroupMap:
    phi = hom_from_generators(group, gens, images, kind="automorphism")
    if not phi.is_bijective():
        raise GroupError("generator images do not define an automorphism")
    return phi


def generating_tuple(group: FiniteGroup) -> list[int]:
    """A deterministic generating tuple: scan elements by decreasing order, then
    by index, keeping those not already in the closure."""
    gens: list[int] = []
    current = closure_idx(group, [])
    for a in sorted(range(group.order), key=lambda i: (-group.order_idx(i), i)):
        if len(current) == group.order:
            break
        if a not in current:
            gens.append(a)
            current = closure_idx(group, gens)
    return gens


def automorphisms(group: FiniteGroup, bound: int = DEFAULT_AUT_BOUND) -> list[GroupMap]:
    """All automorphisms, found by assigning images to a fixed generating tuple."""
    if group.order > bound:
        raise GroupError(f"refusing to enumerate Aut of a group of order {group.order} > {bound}")
    return list(_automorphisms_cached(group))


@functools.lru_cache(maxsize=64)
def _automorphisms_cached(group: FiniteGroup) -> tuple[GroupMap, ...]:
    gens = generating_tuple(group)
    candidates = [[b for b in range(group.order) if group.order_idx(b) == group.order_idx(g)] for g in gens]
    found: list[GroupMap] = []

    def search(depth: int, chosen: list[int]) -> None:
        if depth == len(gens):
            img = extend_to_hom(group, gens, chosen)
            if img is not None and len(set(img)) == group.order:
                found.append(GroupMap(group, group, tuple(img), "automorphism"))
            return
        for b in candidates[depth]:
            chosen.append(b)
            if depth == 0 or extend_to_hom(group, gens[: depth + 1], chosen) is not None:
                search(depth + 1, chosen)
            chosen.pop()

    search(0, [])
    found.sort(key=lambda f: f.images)
    return tuple(found)


def automorphisms_fixing(group: FiniteGroup, sub: Subgroup, bound: int = DEFAULT_AUT_BOUND) -> list[GroupMap]:
    """Automorphisms mapping ``sub`` onto itself as a set."""
    return [phi for phi in automorphisms(group, bound) if phi.maps_onto(sub)]


def generating_automorphisms(auts: Sequence[GroupMap]) -> list[GroupMap]:
    """A small subset of ``auts`` generating the same group (greedy)."""
    if not auts:
        return []
    gens: list[GroupMap] = []
    size = auts[0].source.order
    closure = {tuple(range(size))}
    for phi in auts:
        if phi.images in closure:
            continue
        gens.append(phi)
        closure = _perm_closure([g.images for g in gens], size)
    return gens


def _perm_closure(perms: Sequence[tuple[int, ...]], size: int) -> set[tuple[int, ...]]:
    ident = tuple(range(size))
    seen = {ident}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for q in perms:
            r = tuple(q[i] for i in p)
            if r not in seen:
                seen.add(r)
                queue.append(r)
    return seen


def dihedral_identification(sub: Subgroup) -> GroupMap:
    """A fixed isomorphism from a dihedral subgroup onto the abstract D_k, |sub| = 2k.

    ``H_{1,3}`` and ``H_{1,5}`` use the fixed convention sending their catalog
    generators to ``x^(m+1), y, x^m``; ``H`` in the three group types sends
    ``x, y`` to ``x, y``; every other subgroup maps its :func:`is_dihedral`
    witnesses to ``(x, y)``.
    """
    g = sub.parent
    witnesses = is_dihedral(sub)
    if witnesses is None:
        raise GroupError(f"{sub.name} is not dihedral")
    k = sub.order // 2
    dn = dihedral_group(k) if k >= 2 else None
    if dn is None:
        raise GroupError("D_1 is not supported")
    src = sub.as_group
    to_sub = lambda c: src.index[c]  # noqa: E731
    if g.group_type is GroupType.TYPE1 and sub.label in ("H_{1,3}", "H_{1,5}"):
        m = g.n // 2
        gens = [to_sub(g.coords[i]) for i in _as_indices(g, _CATALOG[GroupType.TYPE1][sub.label])]
        images = [dn.element(0, m + 1).index, dn.element(1, 0).index, dn.element(0, m).index]
    elif sub.label == "H" and sub.order == 2 * g.n:
        gens = [to_sub((0, 1, 0)), to_sub((1, 0, 0))]
        images = [dn.x.index, dn.y.index]
    else:
        r, s = witnesses
        gens = [to_sub(r.coords), to_sub(s.coords)]
        images = [dn.x.index, dn.y.index]
    phi = hom_from_generators(src, gens, images, target=dn, kind="isomorphism")
    if not phi.is_bijective():
        raise GroupError(f"identification of {sub.name} is not bijective")
    return phi


def dump_group(group: FiniteGroup) -> str:
    return json.dumps(group.to_json())


def lcm_of_orders(group: FiniteGroup) -> int:
    return functools.reduce(math.lcm, group._order, 1)
