"""Finite groups given by Cayley tables over the labels 0..n-1.

Element 0 is always the identity. Subsets of a group ("element sets") are
passed around as sorted tuples of labels.
"""

from __future__ import annotations

import itertools
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .errors import BadLabeling, InvalidArgument, InvalidOrder, NotAGroup, ResourceLimit

ElementSet = tuple  # sorted tuple of element labels

MAX_SUBGROUP_ORDER = 64


def as_element_set(items: Iterable[int]) -> ElementSet:
    return tuple(sorted(set(int(a) for a in items)))


class FiniteGroup:
    """Group with elements 0..n-1, ``table[a][b] = a + b`` and identity 0.

    The table is validated on construction (Latin square, identity at 0,
    associativity over all n^3 triples) unless ``check=False``.
    """

    def __init__(self, table, *, check: bool = True, name: str | None = None):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise NotAGroup("Cayley table must be a non-empty square array")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise NotAGroup(f"table entries must lie in 0..{n - 1}")
        if check:
            _check_table(arr)
        arr.setflags(write=False)
        self.table = arr
        self.order = n
        self.name = name or f"group of order {n}"
        inv = np.argmin(arr, axis=1)  # column holding the identity 0
        inv.setflags(write=False)
        self.inverse = inv
        self._rows = arr.tolist()
        self._inv = inv.tolist()

    # scalar arithmetic ---------------------------------------------------
    def add(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def neg(self, a: int) -> int:
        return self._inv[a]

    def sub(self, a: int, b: int) -> int:
        """a - b, read as a + (-b)."""
        return self._rows[a][self._inv[b]]

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self._rows[x][a]
            k += 1
        return k

    @property
    def diff_table(self) -> np.ndarray:
        """``diff_table[a, b] = a - b``."""
        if not hasattr(self, "_diff"):
            d = self.table[:, self.inverse]
            d.setflags(write=False)
            self._diff = d
        return self._diff

    def generated(self, gens: Iterable[int]) -> ElementSet:
        """Subgroup generated by ``gens`` (closure under +; finite, so inverses come free)."""
        members = {0}
        frontier = [0]
        gens = list(set(int(g) for g in gens))
        while frontier:
            nxt = []
            for a in frontier:
                row = self._rows[a]
                for g in gens:
                    c = row[g]
                    if c not in members:
                        members.add(c)
                        nxt.append(c)
            frontier = nxt
        return tuple(sorted(members))

    def is_subgroup(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        if 0 not in s or any(not 0 <= a < self.order for a in s):
            return False
        return all(self._rows[a][self._inv[b]] in s for a in s for b in s)

    def to_json(self) -> dict:
        return {"order": self.order, "table": self._rows}

    @classmethod
    def from_json(cls, doc: dict) -> "FiniteGroup":
        try:
            table = doc["table"]
        except (KeyError, TypeError):
            raise InvalidArgument("group document needs a 'table' entry") from None
        g = from_cayley_table(table)
        if "order" in doc and doc["order"] != g.order:
            raise InvalidArgument(f"declared order {doc['order']} does not match table size {g.order}")
        return g

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"


def _check_table(arr: np.ndarray) -> None:
    n = arr.shape[0]
    full = np.arange(n)
    if not (np.sort(arr, axis=1) == full).all() or not (np.sort(arr, axis=0) == full[:, None]).all():
        raise NotAGroup("Cayley table is not a Latin square")
    if not (arr[0] == full).all() or not (arr[:, 0] == full).all():
        # a Latin square has some identity only if some row is the identity row
        raise BadLabeling("element 0 must be the identity; relabel the table")
    # (a+b)+c == a+(b+c) for every triple
    left = arr[arr]  # left[a, b, c] = (a+b)+c
    right = arr[:, arr]  # right[a, b, c] = a+(b+c)
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = bad[0].tolist()
        raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")


def from_cayley_table(table: Sequence[Sequence[int]]) -> FiniteGroup:
    return FiniteGroup(table)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidOrder("cyclic group needs n >= 1")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, check=False, name=f"Z{n}")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Componentwise product; the pair (a, b) gets label a*|h| + b."""
    m = h.order
    a = np.arange(g.order * m)
    ga, hb = a // m, a % m
    table = g.table[ga[:, None], ga[None, :]] * m + h.table[hb[:, None], hb[None, :]]
    return FiniteGroup(table, check=False, name=f"{g.name}x{h.name}")


def from_elements(elements: Sequence[Hashable], op: Callable, name: str | None = None) -> FiniteGroup:
    """Tabulate ``op`` on a list of hashable elements whose first entry is the identity."""
    index = {e: i for i, e in enumerate(elements)}
    if len(index) != len(elements):
        raise InvalidArgument("duplicate elements")
    try:
        table = [[index[op(a, b)] for b in elements] for a in elements]
    except KeyError as exc:
        raise NotAGroup(f"operation leaves the element list: {exc}") from None
    return FiniteGroup(table, name=name)


def generate_elements(gens: Sequence[Hashable], op: Callable, identity: Hashable) -> list:
    """Closure of ``gens`` under ``op``, identity first, then BFS order."""
    elems = [identity]
    seen = {identity}
    i = 0
    while i < len(elems):
        a = elems[i]
        for g in gens:
            c = op(a, g)
            if c not in seen:
                seen.add(c)
                elems.append(c)
        i += 1
    return elems


def _cached(g: FiniteGroup, key: str, compute):
    cache = g.__dict__.setdefault("_cache", {})
    if key not in cache:
        cache[key] = compute()
    return list(cache[key])


def subgroups(g: FiniteGroup, max_order: int = MAX_SUBGROUP_ORDER) -> list[ElementSet]:
    """All subgroups, sorted by size and then lexicographically.

    Every subgroup is a join of cyclic subgroups, so we start from the cyclic
    ones and close the family under joins with a cyclic subgroup.
    """
    if g.order > max_order:
        raise ResourceLimit(f"subgroup enumeration is limited to order <= {max_order}")
    return _cached(g, "subgroups", lambda: _subgroups(g))


def _subgroups(g: FiniteGroup) -> list[ElementSet]:
    cyc = {g.generated([a]) for a in g.elements}
    found = set(cyc)
    frontier = list(cyc)
    cyc = list(cyc)
    while frontier:
        nxt = []
        for h in frontier:
            hs = set(h)
            for c in cyc:
                if hs.issuperset(c):
                    continue
                k = g.generated(h + c)
                if k not in found:
                    found.add(k)
                    nxt.append(k)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), s))


def is_normal(g: FiniteGroup, h: Iterable[int]) -> bool:
    hs = set(h)
    for a in g.elements:
        for x in hs:
            if g.sub(g.add(a, x), a) not in hs:
                return False
    return True


def normal_subgroups(g: FiniteGroup, max_order: int = MAX_SUBGROUP_ORDER) -> list[ElementSet]:
    subs = subgroups(g, max_order)
    if g.is_abelian:
        return subs
    return _cached(g, "normal", lambda: [h for h in subs if is_normal(g, h)])


def cosets(g: FiniteGroup, i: Iterable[int]) -> list[ElementSet]:
    """Left cosets d + i, sorted by smallest member."""
    i = tuple(i)
    seen: set[int] = set()
    out = []
    for d in g.elements:
        if d in seen:
            continue
        c = as_element_set(g.add(d, x) for x in i)
        seen.update(c)
        out.append(c)
    return out


def is_union_of_cosets(g: FiniteGroup, a: Iterable[int], i: Iterable[int]) -> bool:
    i = tuple(i)
    if not g.is_subgroup(i):
        raise InvalidArgument(f"{i} is not a subgroup")
    aset = set(a)
    return all(g.add(d, x) in aset for d in aset for x in i)


def is_isomorphic_bruteforce(g: FiniteGroup, h: FiniteGroup):
    """Search all bijections fixing 0; returns one isomorphism as a tuple, or None."""
    if g.order != h.order:
        return None
    n = g.order
    for perm in itertools.permutations(range(1, n)):
        f = np.array((0,) + perm)
        if np.array_equal(f[g.table], h.table[f[:, None], f[None, :]]):
            return tuple(f.tolist())
    return None
