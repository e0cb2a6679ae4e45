"""Breadth-first orbit enumeration under braid moves and a set of automorphisms.

Vectors of length ``r`` over a group of order ``N`` are packed into int64 keys
(base ``N``, first entry most significant), so numeric key order is the
lexicographic order of the vectors.  The search runs on Aut-canonical forms:
every state is the least key in its orbit under the group generated by the
supplied automorphisms, and the braid moves commute with that group.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .groups import FiniteGroup, GroupMap
from .hurwitz import HurwitzError, HurwitzVector

DEFAULT_NODE_CAP = 10_000_000
NODE_CAP_ENV = "DIHEDRAL_LOCI_NODE_CAP"
_AUT_CLOSURE_LIMIT = 200_000
_CHUNK_CELLS = 8_000_000


def default_node_cap() -> int:
    raw = os.environ.get(NODE_CAP_ENV)
    return int(raw) if raw else DEFAULT_NODE_CAP


class OrbitCapExceeded(RuntimeError):
    pass


def _powers(base: int, r: int) -> np.ndarray:
    if base ** r >= 2 ** 63:
        raise HurwitzError(f"vectors of length {r} over a group of order {base} do not fit int64 keys")
    return np.array([base ** (r - 1 - j) for j in range(r)], dtype=np.int64)


def pack(rows: np.ndarray, base: int) -> np.ndarray:
    rows = np.asarray(rows, dtype=np.int64)
    return rows @ _powers(base, rows.shape[-1])


def unpack(keys: np.ndarray, base: int, r: int) -> np.ndarray:
    keys = np.asarray(keys, dtype=np.int64)
    out = np.empty(keys.shape + (r,), dtype=np.int64)
    rest = keys.copy()
    for j in range(r - 1, -1, -1):
        out[..., j] = rest % base
        rest //= base
    return out


def _as_perm(group: FiniteGroup, phi) -> tuple[int, ...]:
    if isinstance(phi, GroupMap):
        if phi.source is not group or phi.target is not group:
            raise HurwitzError("automorphism acts on a different group")
        return phi.images
    perm = tuple(int(i) for i in phi)
    if sorted(perm) != list(range(group.order)):
        raise HurwitzError("automorphism is not a permutation of the group")
    return perm


class AutAction:
    """The permutation group generated by ``auts`` acting entrywise on packed vectors."""

    def __init__(self, group: FiniteGroup, auts: Iterable = ()):
        self.group = group
        gens = list(dict.fromkeys(_as_perm(group, a) for a in auts))
        ident = tuple(range(group.order))
        seen = {ident}
        queue = deque([ident])
        while queue:
            p = queue.popleft()
            for q in gens:
                nxt = tuple(q[i] for i in p)
                if nxt not in seen:
                    if len(seen) >= _AUT_CLOSURE_LIMIT:
                        raise HurwitzError("automorphism closure too large")
                    seen.add(nxt)
                    queue.append(nxt)
        self.perms = np.array(sorted(seen), dtype=np.int64)
        self.generators = gens

    @property
    def size(self) -> int:
        return len(self.perms)

    def _chunks(self, rows: np.ndarray):
        step = max(1, _CHUNK_CELLS // (self.size * max(1, rows.shape[1])))
        for start in range(0, len(rows), step):
            yield rows[start:start + step]

    def image_keys(self, rows: np.ndarray) -> np.ndarray:
        """Keys of every image, shape ``(|A|, len(rows))``."""
        return pack(self.perms[:, rows], self.group.order)

    def canonical(self, rows: np.ndarray) -> np.ndarray:
        rows = np.asarray(rows, dtype=np.int64)
        if len(rows) == 0:
            return np.empty(0, dtype=np.int64)
        return np.concatenate([self.image_keys(c).min(axis=0) for c in self._chunks(rows)])

    def image_counts(self, rows: np.ndarray) -> np.ndarray:
        """Number of distinct Aut-images of each row."""
        rows = np.asarray(rows, dtype=np.int64)
        out = []
        for c in self._chunks(rows):
            keys = np.sort(self.image_keys(c), axis=0)
            out.append(1 + (np.diff(keys, axis=0) != 0).sum(axis=0))
        return np.concatenate(out) if out else np.empty(0, dtype=np.int64)


def braid_images(group: FiniteGroup, rows: np.ndarray) -> list[np.ndarray]:
    """``sigma_i`` applied to every row, one array per ``i``."""
    conj = group.conj_table  # conj[a, b] = a b a^-1
    out = []
    for i in range(rows.shape[1] - 1):
        a, b = rows[:, i], rows[:, i + 1]
        new = rows.copy()
        new[:, i] = conj[a, b]
        new[:, i + 1] = a
        out.append(new)
    return out


@dataclass(frozen=True, eq=False)
class OrbitClass:
    """One braid x Aut orbit.

    ``states`` holds the sorted Aut-canonical keys reached; ``size`` counts
    every distinct vector, i.e. the Aut-images of all states.
    """

    representative: HurwitzVector
    size: int
    moves: str
    exhausted: bool
    states: np.ndarray = field(repr=False)
    action: AutAction = field(repr=False)

    def __contains__(self, v: HurwitzVector) -> bool:
        return bool(self.contains_keys(_canonical_of(v, self.action))[0])

    def contains_keys(self, canonical_keys: np.ndarray) -> np.ndarray:
        keys = np.asarray(canonical_keys, dtype=np.int64)
        pos = np.searchsorted(self.states, keys)
        pos = np.minimum(pos, len(self.states) - 1)
        return self.states[pos] == keys

    def to_json(self) -> dict:
        return {
            "representative": self.representative.to_json()["branches"],
            "size": self.size,
            "moves": self.moves,
            "exhausted": self.exhausted,
        }


def _canonical_of(v: HurwitzVector, action: AutAction) -> np.ndarray:
    return action.canonical(np.array([v.branches], dtype=np.int64))


def _check_vector(v: HurwitzVector) -> None:
    if v.genus:
        raise HurwitzError("orbit search needs a genus-0 vector")
    if v.r == 0:
        raise HurwitzError("empty vector")


def _bfs(v: HurwitzVector, action: AutAction, node_cap: int, target: int | None):
    """Returns ``(states, exhausted, found)``."""
    group = v.group
    start = _canonical_of(v, action)
    visited = start.copy()
    frontier = start
    if target is not None and start[0] == target:
        return visited, False, True
    r = v.r
    while len(frontier):
        rows = unpack(frontier, group.order, r)
        cand = np.unique(np.concatenate([action.canonical(m) for m in braid_images(group, rows)]))
        fresh = cand[~np.isin(cand, visited, assume_unique=True)]
        if len(fresh) == 0:
            break
        visited = np.union1d(visited, fresh)
        if target is not None and np.any(fresh == target):
            return visited, False, True
        if len(visited) > node_cap:
            return visited, False, False
        frontier = fresh
    return visited, True, False


def _describe(r: int, action: AutAction) -> str:
    return f"sigma_1..sigma_{r - 1} x <{len(action.generators)} automorphism generators> (|A| = {action.size})"


def orbit(v: HurwitzVector, aut_list: Sequence = (), node_cap: int | None = None,
          action: AutAction | None = None) -> OrbitClass:
    """Closure of ``v`` under the braid moves and the group generated by ``aut_list``.

    Only forward ``sigma_i`` are applied: each acts as a permutation of a
    finite set, so its inverse is one of its powers and the closure is the same.
    """
    _check_vector(v)
    action = action or AutAction(v.group, aut_list)
    cap = default_node_cap() if node_cap is None else node_cap
    if v.r == 1:
        states, exhausted = _canonical_of(v, action), True
    else:
        states, exhausted, _ = _bfs(v, action, cap, None)
    size = int(action.image_counts(unpack(states, v.group.order, v.r)).sum())
    rep = HurwitzVector(v.group, tuple(int(i) for i in unpack(states[:1], v.group.order, v.r)[0]))
    return OrbitClass(rep, size, _describe(v.r, action), exhausted, states, action)


def same_orbit_search(v: HurwitzVector, w: HurwitzVector, aut_list: Sequence = (),
                      node_cap: int | None = None, action: AutAction | None = None) -> tuple[bool, bool]:
    """``(found, exhausted)``; a negative answer is conclusive only when exhausted."""
    _check_vector(v)
    _check_vector(w)
    if v.group is not w.group:
        raise HurwitzError("vectors live in different groups")
    if v.r != w.r or sorted(v.group.order_idx(b) for b in v.branches) != sorted(
            w.group.order_idx(b) for b in w.branches):
        return False, True
    action = action or AutAction(v.group, aut_list)
    target = int(_canonical_of(w, action)[0])
    if v.r == 1:
        return int(_canonical_of(v, action)[0]) == target, True
    cap = default_node_cap() if node_cap is None else node_cap
    _, exhausted, found = _bfs(v, action, cap, target)
    return found, exhausted


def same_orbit(v: HurwitzVector, w: HurwitzVector, aut_list: Sequence = (),
               node_cap: int | None = None, action: AutAction | None = None) -> bool:
    return same_orbit_search(v, w, aut_list, node_cap, action)[0]


def naive_orbit(v: HurwitzVector, aut_list: Sequence = ()) -> set[tuple[int, ...]]:
    """Plain set-based closure under all ``sigma_i^{+-1}`` and single automorphisms."""
    from .hurwitz import apply_aut, braid_move

    seen = {v.branches}
    queue = deque([v])
    while queue:
        cur = queue.popleft()
        nbrs = [braid_move(cur, i, d) for i in range(1, cur.r) for d in (1, -1)]
        nbrs += [apply_aut(cur, phi) for phi in aut_list]
        for nb in nbrs:
            if nb.branches not in seen:
                seen.add(nb.branches)
                queue.append(nb)
    return seen


__all__ = [
    "AutAction",
    "DEFAULT_NODE_CAP",
    "NODE_CAP_ENV",
    "OrbitCapExceeded",
    "OrbitClass",
    "braid_images",
    "naive_orbit",
    "orbit",
    "pack",
    "same_orbit",
    "same_orbit_search",
    "unpack",
]
