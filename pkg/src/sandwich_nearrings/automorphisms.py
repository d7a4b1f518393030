"""Group automorphisms stored as image arrays, automorphism groups and their orbits."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidArgument, ResourceLimit
from .groups import ElementSet, FiniteGroup, as_element_set, subgroups

MAX_AUT_GROUP_ORDER = 64
MAX_AUT_SIZE = 100_000


@dataclass(frozen=True)
class GroupMap:
    """A total self-map of a group, ``image[a] = s(a)``."""

    image: tuple
    group: FiniteGroup = field(compare=False, repr=False)

    def __call__(self, a: int) -> int:
        return self.image[a]

    def compose(self, other: "GroupMap") -> "GroupMap":
        """self after other."""
        return GroupMap(tuple(self.image[b] for b in other.image), self.group)

    def inverse(self) -> "GroupMap":
        inv = [0] * len(self.image)
        for a, b in enumerate(self.image):
            inv[b] = a
        return GroupMap(tuple(inv), self.group)

    def is_identity(self) -> bool:
        return all(a == b for a, b in enumerate(self.image))


def as_map(g: FiniteGroup, m) -> GroupMap:
    if isinstance(m, GroupMap):
        img = m.image
    else:
        img = tuple(int(x) for x in m)
    if len(img) != g.order:
        raise InvalidArgument(f"map has {len(img)} images, group has {g.order} elements")
    if any(not 0 <= x < g.order for x in img):
        raise InvalidArgument("map image out of range")
    return GroupMap(img, g)


def identity_map(g: FiniteGroup) -> GroupMap:
    return GroupMap(tuple(range(g.order)), g)


def multiplication_map(g: FiniteGroup, k: int) -> GroupMap:
    """x -> k*x on a cyclic group Z_n."""
    return GroupMap(tuple((k * a) % g.order for a in range(g.order)), g)


def is_endomorphism(g: FiniteGroup, m) -> bool:
    img = np.asarray(as_map(g, m).image)
    return bool((img[g.table] == g.table[img[:, None], img[None, :]]).all())


def is_automorphism(g: FiniteGroup, m) -> bool:
    m = as_map(g, m)
    return len(set(m.image)) == g.order and is_endomorphism(g, m)


class AutomorphismSet:
    """A group S of automorphisms of ``group``.

    Maps are deduplicated and sorted by image; the identity is therefore
    always at index 0 (it is the lexicographically smallest bijection fixing 0).
    """

    def __init__(self, group: FiniteGroup, maps: Iterable, *, check: bool = True):
        self.group = group
        ms = sorted({as_map(group, m).image for m in maps})
        self.maps = tuple(GroupMap(img, group) for img in ms)
        self.images = np.array(ms, dtype=np.int64).reshape(len(ms), group.order)
        self.images.setflags(write=False)
        self.identity_index = 0
        if check:
            self._check()
        self._index = {m.image: i for i, m in enumerate(self.maps)}

    def _check(self):
        if not self.maps or not self.maps[0].is_identity():
            raise InvalidArgument("automorphism set must contain the identity")
        for m in self.maps:
            if not is_automorphism(self.group, m):
                raise InvalidArgument(f"{m.image} is not an automorphism")
        imgs = {m.image for m in self.maps}
        comp = self.images[:, self.images]  # comp[i, j, a] = s_i(s_j(a))
        for row in comp.reshape(-1, self.group.order):
            if tuple(row.tolist()) not in imgs:
                raise InvalidArgument("automorphism set is not closed under composition")

    def __len__(self):
        return len(self.maps)

    def __iter__(self):
        return iter(self.maps)

    def __contains__(self, m) -> bool:
        img = m.image if isinstance(m, GroupMap) else tuple(m)
        return img in self._index

    def index(self, m) -> int:
        img = m.image if isinstance(m, GroupMap) else tuple(m)
        return self._index[img]

    def __eq__(self, other):
        return isinstance(other, AutomorphismSet) and self.group == other.group and self.maps == other.maps

    def __hash__(self):
        return hash(tuple(m.image for m in self.maps))

    def __repr__(self):
        return f"AutomorphismSet(order={len(self)}, group={self.group.name!r})"

    def orbit(self, a: int) -> ElementSet:
        return as_element_set(self.images[:, a].tolist())

    def is_trivial(self) -> bool:
        return len(self.maps) == 1

    def as_group(self) -> FiniteGroup:
        """The abstract group of S; label i is ``maps[i]``, composition s_i after s_j."""
        comp = self.images[:, self.images].reshape(-1, self.group.order)
        table = [self._index[tuple(r)] for r in comp.tolist()]
        n = len(self.maps)
        return FiniteGroup(np.array(table).reshape(n, n), check=False, name="S")

    def subgroups(self) -> list["AutomorphismSet"]:
        """All subgroups of S, smallest first."""
        return [AutomorphismSet(self.group, [self.maps[i] for i in h], check=False)
                for h in subgroups(self.as_group(), max_order=10**6)]

    def generators(self) -> list[GroupMap]:
        """A small generating set: greedily add the first map outside the closure so far."""
        gens: list[GroupMap] = []
        reached = {self.maps[0].image}
        for m in self.maps[1:]:
            if m.image in reached:
                continue
            gens.append(m)
            reached = {t.image for t in closure_as_group(self.group, gens).maps}
            if len(reached) == len(self.maps):
                break
        return gens

    def to_json(self, generators_only: bool = False) -> list:
        maps = self.generators() if generators_only else self.maps
        return [list(m.image) for m in maps]

    @classmethod
    def from_json(cls, group: FiniteGroup, doc) -> "AutomorphismSet":
        return closure_as_group(group, doc)


def closure_as_group(g: FiniteGroup, maps: Iterable) -> AutomorphismSet:
    """Smallest automorphism group containing ``maps``."""
    gens = [as_map(g, m) for m in maps]
    for m in gens:
        if not is_automorphism(g, m):
            raise InvalidArgument(f"{m.image} is not an automorphism")
    ident = identity_map(g)
    found = {ident.image: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                c = s.compose(a)
                if c.image not in found:
                    found[c.image] = c
                    nxt.append(c)
        frontier = nxt
        if len(found) > MAX_AUT_SIZE:
            raise ResourceLimit("automorphism group too large")
    return AutomorphismSet(g, found.values(), check=False)


def _generating_set(g: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = {0}
    for a in g.elements:
        if a not in span:
            gens.append(a)
            span = set(g.generated(gens))
    return gens


def _extend(g: FiniteGroup, gens: list[int], imgs: list[int]):
    """Extend gens[i] -> imgs[i] to a homomorphism of <gens>, or None if inconsistent."""
    img = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            fa = img[a]
            for b, fb in zip(gens, imgs):
                c = g.add(a, b)
                fc = g.add(fa, fb)
                known = img.get(c)
                if known is None:
                    img[c] = fc
                    nxt.append(c)
                elif known != fc:
                    return None
        frontier = nxt
    return img


def automorphism_group(g: FiniteGroup, max_order: int = MAX_AUT_GROUP_ORDER) -> AutomorphismSet:
    """Aut(g): backtrack over images of a generating set, extending and validating."""
    if g.order > max_order:
        raise ResourceLimit(f"automorphism search is limited to order <= {max_order}")
    cache = g.__dict__.setdefault("_cache", {})
    if "aut" not in cache:
        cache["aut"] = _automorphism_group(g)
    return cache["aut"]


def _automorphism_group(g: FiniteGroup) -> AutomorphismSet:
    gens = _generating_set(g)
    orders = [g.element_order(a) for a in g.elements]
    found = []

    def search(t, imgs):
        if t == len(gens):
            img = _extend(g, gens, imgs)
            if img is not None and len(set(img.values())) == g.order:
                found.append(tuple(img[a] for a in g.elements))
                if len(found) > MAX_AUT_SIZE:
                    raise ResourceLimit("automorphism group too large")
            return
        for y in g.elements:
            if orders[y] != orders[gens[t]]:
                continue
            trial = imgs + [y]
            img = _extend(g, gens[: t + 1], trial)
            if img is None or len(set(img.values())) != len(img):
                continue
            search(t + 1, trial)

    search(0, [])
    return AutomorphismSet(g, found, check=False)


def _check_invariant(s: AutomorphismSet, carrier) -> tuple:
    c = as_element_set(carrier)
    cs = set(c)
    for m in s.maps:
        for a in c:
            if m.image[a] not in cs:
                raise InvalidArgument(f"carrier not S-invariant: {a} -> {m.image[a]}")
    return c


def orbits(s: AutomorphismSet, carrier: Iterable[int]) -> list[ElementSet]:
    c = _check_invariant(s, carrier)
    seen: set[int] = set()
    out = []
    for a in c:
        if a in seen:
            continue
        o = s.orbit(a)
        seen.update(o)
        out.append(o)
    return out


def orbit_representatives(s: AutomorphismSet, carrier: Iterable[int]) -> list[int]:
    return [o[0] for o in orbits(s, carrier)]


def is_fixedpointfree_on(s: AutomorphismSet, m: Iterable[int]) -> bool:
    m = as_element_set(m)
    if 0 in m:
        raise InvalidArgument("fixedpointfreeness is defined on sets avoiding 0")
    _check_invariant(s, m)
    if not m:
        return True
    cols = s.images[1:][:, list(m)]
    return not (cols == np.asarray(m)).any()


def fixedpoint_witness(s: AutomorphismSet, m: Iterable[int]):
    """First (element, map image) with a non-identity map fixing the element, or None."""
    for a in as_element_set(m):
        for t in s.maps[1:]:
            if t.image[a] == a:
                return a, t.image
    return None


def regular_orbits(s: AutomorphismSet) -> list[ElementSet]:
    """Orbits on the nonzero elements on which S acts without fixed points."""
    g = s.group
    return [o for o in orbits(s, range(1, g.order)) if len(o) == len(s)]
