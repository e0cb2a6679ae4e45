"""Cover-type admissibility, enumeration, and restriction of covers to index-2 subgroups."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .groups import (
    FiniteGroup,
    GroupError,
    Subgroup,
    closure_idx,
    distinguished_subgroup,
    explicit_group,
    format_coords,
    _type2_mul,
    _type3_mul,
)
from .hurwitz import (
    HurwitzError,
    HurwitzVector,
    Signature,
    delta,
    generates,
    orbifold_euler,
    product_one,
    riemann_hurwitz_genus,
    signature_of,
)

DEFAULT_GROUP_BOUND = 200


class CoverType(str, Enum):
    I = "I"
    II = "II"
    IIIA = "IIIa"
    IIIB = "IIIb"
    IIIC = "IIIc"

    @classmethod
    def parse(cls, value: CoverType | str) -> CoverType:
        if isinstance(value, CoverType):
            return value
        key = str(value).replace("-", "").replace("_", "").lower()
        for ct in cls:
            if ct.value.lower() == key:
                return ct
        raise ValueError(f"unknown cover type {value!r}")

    @property
    def length(self) -> int:
        return {"I": 6, "II": 5}.get(self.value, 4)

    @property
    def quotient_index(self) -> int:
        return 4 if self is CoverType.IIIC else 2

    @property
    def delta_h(self) -> int | None:
        return {"I": 3, "II": 2, "IIIa": 1, "IIIb": 1}.get(self.value)


# Strict dimension pairs allowed for each cover type.
COROLLARY_PAIRS: dict[CoverType, frozenset] = {
    CoverType.I: frozenset({(3, 4), (3, 5)}),
    CoverType.II: frozenset({(2, 3), (2, 4)}),
    CoverType.IIIA: frozenset({(1, 2)}),
    CoverType.IIIB: frozenset({(1, 2), (1, 3)}),
    CoverType.IIIC: frozenset(),
}


# ---------------------------------------------------------------------------
# quotient maps


def coset_labels(group: FiniteGroup, sub: Subgroup) -> np.ndarray:
    """Label each element by its coset of a normal subgroup of index 2 or 4.

    Index 2 gives ``0 / 1``.  Index 4 requires a Klein quotient; labels are
    ``0..3`` with the group law ``a xor b``.
    """
    if sub.parent is not group:
        raise GroupError("subgroup of a different group")
    if sub.index not in (2, 4) or not sub.is_normal():
        raise GroupError(f"need a normal subgroup of index 2 or 4, got index {sub.index}")
    labels = np.full(group.order, -1, dtype=np.int64)
    labels[list(sub.elements)] = 0
    reps = [group.identity_index]
    for a in range(group.order):
        if labels[a] >= 0:
            continue
        if sub.index == 4 and len(reps) == 3:
            # third nontrivial coset is the product of the first two
            code = 3
        else:
            code = len(reps)
        reps.append(a)
        for h in sub.elements:
            labels[group.mul_idx(a, h)] = code
    if sub.index == 4:
        # check the labelling is a homomorphism onto (Z/2)^2
        for a in range(group.order):
            if labels[group.mul_idx(a, a)] != 0:
                raise GroupError("quotient is cyclic of order 4, not (Z/2)^2")
        for a in reps[1:]:
            for b in reps[1:]:
                if labels[group.mul_idx(a, b)] != labels[a] ^ labels[b]:
                    raise GroupError("coset labelling is not a homomorphism")
    return labels


def quotient_vector(v: HurwitzVector, sub: Subgroup) -> tuple[int, ...]:
    """Images of the branch entries in ``G / H'`` (index 2 only)."""
    if sub.index != 2:
        raise GroupError(f"quotient vectors need an index-2 subgroup, got index {sub.index}")
    return tuple(0 if sub.contains_idx(b) else 1 for b in v.branches)


# ---------------------------------------------------------------------------
# admissibility templates


def _position_masks(group: FiniteGroup, sub: Subgroup, cover_type: CoverType,
                    params: dict | None) -> tuple[list[np.ndarray], np.ndarray]:
    labels = coset_labels(group, sub)
    order = group.order_table
    nontrivial = order > 1
    params = params or {}
    two = order == 2

    def fix(mask: np.ndarray, key: str) -> np.ndarray:
        return mask & (order == params[key]) if key in params else mask

    if cover_type is CoverType.I:
        masks = [two & (labels == 1)] * 6
    elif cover_type is CoverType.II:
        masks = [two & (labels == 1)] * 4 + [fix(nontrivial & (labels == 0), "c5")]
    elif cover_type is CoverType.IIIA:
        fourth = (labels == 1) & (order % 2 == 0) & (order >= 4)
        if "d4" in params:
            fourth &= order == 2 * params["d4"]
        masks = [two & (labels == 1)] * 3 + [fourth]
    elif cover_type is CoverType.IIIB:
        masks = [two & (labels == 1)] * 2 + [fix(nontrivial & (labels == 0), "c3"),
                                            fix((order > 2) & (labels == 0), "c4")]
    else:
        masks = [two & (labels > 0)] * 3 + [fix((order > 2) & (labels == 0), "c4")]
    return masks, labels


def _row_filter(group: FiniteGroup, cover_type: CoverType, labels: np.ndarray,
                rows: np.ndarray) -> np.ndarray:
    if len(rows) == 0:
        return np.zeros(0, dtype=bool)
    order = group.order_table
    if cover_type is CoverType.IIIB:
        return order[rows[:, 2]] <= order[rows[:, 3]]
    if cover_type is CoverType.IIIC:
        q = labels[rows[:, :3]]
        return (q[:, 0] != q[:, 1]) & (q[:, 0] != q[:, 2]) & (q[:, 1] != q[:, 2])
    return np.ones(len(rows), dtype=bool)


def _check_sub(group: FiniteGroup, sub: Subgroup, cover_type: CoverType) -> None:
    if sub.parent is not group:
        raise GroupError("subgroup of a different group")
    if sub.index != cover_type.quotient_index:
        raise GroupError(f"cover type {cover_type.value} needs H of index {cover_type.quotient_index}, "
                         f"got index {sub.index}")


def is_admissible(v: HurwitzVector, cover_type: CoverType | str, sub: Subgroup | None = None) -> bool:
    cover_type = CoverType.parse(cover_type)
    group = v.group
    sub = sub or distinguished_subgroup(group)
    _check_sub(group, sub, cover_type)
    if v.genus or v.r != cover_type.length or not product_one(v):
        return False
    masks, labels = _position_masks(group, sub, cover_type, None)
    if not all(mask[b] for mask, b in zip(masks, v.branches)):
        return False
    row = np.array([v.branches], dtype=np.int64)
    return bool(_row_filter(group, cover_type, labels, row)[0]) and generates(v)


class _Joins:
    """Memoised subgroup joins ``<S, a>`` keyed by subgroup id."""

    def __init__(self, group: FiniteGroup):
        self.group = group
        start = frozenset({group.identity_index})
        self.subs = [start]
        self.ids = {start: 0}
        self.cache: dict[tuple[int, int], int] = {}

    def sizes(self) -> np.ndarray:
        return np.array([len(s) for s in self.subs], dtype=np.int64)

    def join(self, sid: np.ndarray, elems: np.ndarray) -> np.ndarray:
        pairs, inverse = np.unique(np.stack([sid, elems], axis=1), axis=0, return_inverse=True)
        out = np.empty(len(pairs), dtype=np.int64)
        for j, (s, a) in enumerate(pairs.tolist()):
            key = (s, a)
            if key not in self.cache:
                sub = self.subs[s]
                if a in sub:
                    self.cache[key] = s
                else:
                    new = closure_idx(self.group, list(sub) + [a]) if len(sub) > 1 else closure_idx(self.group, [a])
                    if new not in self.ids:
                        self.ids[new] = len(self.subs)
                        self.subs.append(new)
                    self.cache[key] = self.ids[new]
            out[j] = self.cache[key]
        return out[inverse.ravel()]


def admissible_rows(group: FiniteGroup, sub: Subgroup, cover_type: CoverType | str,
                    params: dict | None = None, bound: int = DEFAULT_GROUP_BOUND) -> np.ndarray:
    """All admissible vectors as a lexicographically sorted ``(N, r)`` index array."""
    cover_type = CoverType.parse(cover_type)
    if group.order > bound:
        raise GroupError(f"refusing to enumerate over a group of order {group.order} > {bound}")
    _check_sub(group, sub, cover_type)
    masks, labels = _position_masks(group, sub, cover_type, params)
    r = len(masks)
    mul, inv = group.table, group.inverse_table
    joins = _Joins(group)
    rows = np.zeros((1, 0), dtype=np.int64)
    prod = np.array([group.identity_index], dtype=np.int64)
    sid = np.zeros(1, dtype=np.int64)
    for pos in range(r - 1):
        cand = np.flatnonzero(masks[pos])
        if len(cand) == 0 or len(rows) == 0:
            return np.zeros((0, r), dtype=np.int64)
        rep = np.repeat(np.arange(len(rows)), len(cand))
        elems = np.tile(cand, len(rows))
        rows = np.concatenate([rows[rep], elems[:, None]], axis=1)
        prod = mul[prod[rep], elems]
        sid = joins.join(sid[rep], elems)
    last = inv[prod]
    keep = masks[r - 1][last]
    rows = np.concatenate([rows[keep], last[keep][:, None]], axis=1)
    if len(rows) == 0:
        return rows
    sid = joins.join(sid[keep], last[keep])
    keep = (joins.sizes()[sid] == group.order) & _row_filter(group, cover_type, labels, rows)
    rows = rows[keep]
    order = np.lexsort(rows.T[::-1])
    return rows[order]


def enumerate_admissible(group: FiniteGroup, sub: Subgroup | None, cover_type: CoverType | str,
                         params: dict | None = None, bound: int = DEFAULT_GROUP_BOUND) -> list[HurwitzVector]:
    sub = sub or distinguished_subgroup(group)
    rows = admissible_rows(group, sub, cover_type, params, bound)
    return [HurwitzVector(group, tuple(row)) for row in rows.tolist()]


# ---------------------------------------------------------------------------
# restriction to index-2 subgroups


@dataclass(frozen=True, eq=False)
class RestrictedCover:
    """The cover ``C -> C/H'`` induced by a vector over ``G``.

    ``vector`` lives in ``G`` (parent indices); ``tags`` gives, per branch
    entry, the 1-based base point it lies over and its lift index.
    """

    subgroup: Subgroup
    quotient: tuple[int, ...]
    vector: HurwitzVector
    tags: tuple[tuple[int, int], ...]

    @property
    def genus(self) -> int:
        return self.vector.genus

    @property
    def signature(self) -> Signature:
        return signature_of(self.vector)

    @property
    def delta(self) -> int:
        return delta(self.signature)

    def in_subgroup(self) -> HurwitzVector:
        """The same vector over ``subgroup.as_group``."""
        sub = self.subgroup
        conv = sub.from_parent_idx
        return HurwitzVector(sub.as_group, tuple(conv(b) for b in self.vector.branches),
                             tuple((conv(a), conv(b)) for a, b in self.vector.handles))

    def to_json(self) -> dict:
        fmt = lambda i: format_coords(self.vector.group.coords[i])  # noqa: E731
        return {
            "subgroup": self.subgroup.name,
            "v_quot": list(self.quotient),
            "genus": self.genus,
            "delta": self.delta,
            "handles": [[fmt(a), fmt(b)] for a, b in self.vector.handles],
            "v_prime": [fmt(b) for b in self.vector.branches],
        }


def restricted_signature(v: HurwitzVector, sub: Subgroup) -> Signature:
    """Signature of ``C -> C/H'`` read off from orders and quotient images."""
    if v.genus:
        raise HurwitzError("restriction is defined for genus-0 vectors")
    q = quotient_vector(v, sub)
    k = sum(q)
    if k == 0:
        raise HurwitzError("no branch entry leaves the subgroup; the vector is not surjective onto G/H'")
    orders: list[int] = []
    for qi, b in zip(q, v.branches):
        m = v.group.order_idx(b)
        if qi == 0:
            orders += [m, m]
        elif m > 2:
            orders.append(m // 2)
    return Signature((k - 2) // 2, tuple(orders))


def _handle_search(group: FiniteGroup, sub: Subgroup, elliptic: list[int], genus: int) -> list[tuple[int, int]]:
    """First handle pairs (lexicographic in element order) closing the product
    relation and generating ``sub`` together with ``elliptic``."""
    members = list(sub.elements)
    mul, inv = group._mul, group._inv
    comm_pairs: dict[int, list[tuple[int, int]]] = {}
    for a in members:
        for b in members:
            c = mul[mul[a][b]][mul[inv[a]][inv[b]]]
            comm_pairs.setdefault(c, []).append((a, b))
    target = inv[group.prod_idx(elliptic)]

    def search(depth: int, need: int, chosen: list[tuple[int, int]]):
        if depth == genus - 1:
            for a, b in comm_pairs.get(need, ()):
                gens = [h for pair in chosen for h in pair] + [a, b] + elliptic
                if len(closure_idx(group, gens)) == sub.order:
                    return chosen + [(a, b)]
            return None
        for a in members:
            for b in members:
                c = mul[mul[a][b]][mul[inv[a]][inv[b]]]
                found = search(depth + 1, mul[inv[c]][need], chosen + [(a, b)])
                if found is not None:
                    return found
        return None

    found = search(0, target, [])
    if found is None:
        raise HurwitzError(f"no handle pairs found for the restriction to {sub.name}")
    return found


def restrict_index2(v: HurwitzVector, sub: Subgroup) -> RestrictedCover:
    """Hurwitz data of ``C -> C/H'`` for an index-2 subgroup ``H'``."""
    group = v.group
    if v.genus:
        raise HurwitzError("restriction is defined for genus-0 vectors")
    q = quotient_vector(v, sub)
    outside = [i for i, qi in enumerate(q) if qi]
    if not outside:
        raise HurwitzError("no branch entry leaves the subgroup; the vector is not surjective onto G/H'")
    mul, inv = group.mul_idx, group.inv_idx
    conj = lambda a, b: group.conj_idx(a, b)  # b a b^-1  # noqa: E731
    t = v.branches[outside[0]]
    entries: list[int] = []
    tags: list[tuple[int, int]] = []
    handles: list[tuple[int, int]] = []
    if len(outside) == 2:
        p, s_pos = outside
        r = v.r
        # rotate so the first outside entry leads, then pull the second one
        # leftwards with inverse braid moves; the entries it passes get conjugated
        order = [(p + j) % r for j in range(r)]
        s_rot = order.index(s_pos)
        s = v.branches[s_pos]
        s_inv = inv(s)
        middle = [(conj(v.branches[i], s_inv), i) for i in order[1:s_rot]]
        tail = [(v.branches[i], i) for i in order[s_rot + 1:]]
        rest = middle + tail
        lifted = [(mul(t, t), p, 0)]
        lifted += [(c, i, 0) for c, i in rest]
        lifted.append((conj(mul(s, s), t), s_pos, 0))
        lifted += [(conj(c, t), i, 1) for c, i in rest]
        for elem, i, lift in lifted:
            if elem != group.identity_index:
                entries.append(elem)
                tags.append((i + 1, lift))
    else:
        for i, (qi, b) in enumerate(zip(q, v.branches)):
            if qi == 0:
                entries += [b, conj(b, t)]
                tags += [(i + 1, 0), (i + 1, 1)]
            elif mul(b, b) != group.identity_index:
                entries.append(mul(b, b))
                tags.append((i + 1, 0))
        handles = _handle_search(group, sub, entries, (len(outside) - 2) // 2)
    vec = HurwitzVector(group, tuple(entries), tuple(handles))
    if not all(sub.contains_idx(e) for e in vec.entries()):
        raise HurwitzError("restricted entries leave the subgroup")
    if not product_one(vec):
        raise HurwitzError("restricted vector violates the product relation")
    if len(closure_idx(group, vec.entries())) != sub.order:
        raise HurwitzError(f"restricted vector does not generate {sub.name}")
    expected = restricted_signature(v, sub)
    if signature_of(vec) != expected:
        raise HurwitzError("restricted signature disagrees with the lifting rule")
    return RestrictedCover(sub, q, vec, tuple(tags))


def dimension_pair(v: HurwitzVector, sub_h: Subgroup, sub_h2: Subgroup) -> tuple[int, int]:
    return delta(restricted_signature(v, sub_h)), delta(restricted_signature(v, sub_h2))


def genus_checks(v: HurwitzVector, sub: Subgroup) -> dict:
    """Genus of C computed through G and through ``sub``, plus Euler doubling."""
    base = signature_of(v)
    lifted = restricted_signature(v, sub)
    return {
        "genus_via_G": riemann_hurwitz_genus(v.group.order, base),
        "genus_via_sub": riemann_hurwitz_genus(sub.order, lifted),
        "euler_base": orbifold_euler(base),
        "euler_sub": orbifold_euler(lifted),
        "euler_doubles": orbifold_euler(lifted) == 2 * orbifold_euler(base),
    }


# ---------------------------------------------------------------------------
# vectorised arithmetic over many vectors


def restricted_delta_rows(group: FiniteGroup, rows: np.ndarray, sub: Subgroup) -> tuple[np.ndarray, np.ndarray]:
    """``(genus, delta)`` of the restriction to ``sub`` for every row."""
    mask = sub.membership_mask()
    order = group.order_table[rows]
    out = ~mask[rows]
    k = out.sum(axis=1)
    genus = (k - 2) // 2
    r = (2 * (~out)).sum(axis=1) + (out & (order > 2)).sum(axis=1)
    return genus, 3 * genus - 3 + r


def euler_rows(group: FiniteGroup, rows: np.ndarray, sub: Subgroup | None = None) -> tuple[np.ndarray, int]:
    """Orbifold Euler characteristics scaled by ``L``: base rows, or their
    restriction to ``sub`` when given.  Returns ``(values * L, L)``."""
    order = group.order_table[rows]
    scale = int(np.lcm.reduce(np.unique(group.order_table)))
    if sub is None:
        return 2 * scale - (scale - scale // order).sum(axis=1), scale
    out = ~sub.membership_mask()[rows]
    k = out.sum(axis=1)
    genus = (k - 2) // 2
    loss_in = np.where(~out, 2 * (scale - scale // order), 0)
    half = np.maximum(order // 2, 1)
    loss_out = np.where(out & (order > 2), scale - scale // half, 0)
    return (2 - 2 * genus) * scale - loss_in.sum(axis=1) - loss_out.sum(axis=1), scale


def rh_genus_rows(group_order: int, euler_scaled: np.ndarray, scale: int) -> np.ndarray:
    """Genus from scaled Euler characteristics; ``-1`` marks a non-integral result."""
    num = -group_order * euler_scaled
    ok = (num % (2 * scale)) == 0
    return np.where(ok, num // (2 * scale) + 1, -1)


# ---------------------------------------------------------------------------
# groups for the (Z/2)^2 cover type


def _times_klein_bit(name: str, n: int, base_mul) -> FiniteGroup:
    coords = [(k, l, s) for k in range(2) for l in range(n) for s in range(4)]

    def mul(a, b):
        k, l, s = base_mul((a[0], a[1], a[2] & 1), (b[0], b[1], b[2] & 1))
        return k, l, s | ((a[2] ^ b[2]) & 2)

    return explicit_group(name, n, coords, mul)


def _type1_base(n: int):
    def mul(a, b):
        sign = -1 if b[0] else 1
        return (a[0] + b[0]) % 2, (sign * a[1] + b[1]) % n, (a[2] + b[2]) % 2
    return mul


def iiic_catalog(n: int, bound: int = DEFAULT_GROUP_BOUND) -> list[tuple[FiniteGroup, Subgroup]]:
    """Concrete groups with a normal ``H = D_n`` and Klein quotient.

    Extension coordinate ``s`` in ``0..3``: bit 0 is the first extension,
    bit 1 a further central ``Z/2``.  ``H`` is always the set with ``s = 0``.
    """
    if n < 2:
        raise GroupError("n must be at least 2")
    if 8 * n > bound:
        raise GroupError(f"catalog groups of order {8 * n} exceed the bound {bound}")
    out = [
        _times_klein_bit(f"D_{n} x (Z/2)^2", n, _type1_base(n)),
        _times_klein_bit(f"D_{2 * n} x Z/2", n, _type2_mul(n)),
    ]
    if n % 4 == 0 and (n // 4) % 2 == 1:
        out.append(_times_klein_bit(f"(D_{n} x| Z/2) x Z/2", n, _type3_mul(n)))
    result = []
    for group in out:
        members = tuple(i for i, c in enumerate(group.coords) if c[2] == 0)
        result.append((group, Subgroup(group, members, "H")))
    return result


__all__ = [
    "COROLLARY_PAIRS",
    "CoverType",
    "RestrictedCover",
    "admissible_rows",
    "coset_labels",
    "dimension_pair",
    "enumerate_admissible",
    "genus_checks",
    "iiic_catalog",
    "is_admissible",
    "quotient_vector",
    "restrict_index2",
    "restricted_signature",
]
