"""Finite zero-symmetric near-rings of functions into a group.

Elements are functions ``domain -> Gamma`` stored as rows of an integer
array, sorted lexicographically, so the zero function is element 0.
Addition is pointwise; multiplication is ``a o' b = a o phi o b`` (for
transformation near-rings phi is the identity on Gamma).

Operation tables are computed on first use. Everything that only needs the
elements themselves (actions, ring test, identities) works row-wise and
never builds an |N| x |N| table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .automorphisms import AutomorphismSet, orbit_representatives
from .errors import InvalidArgument, NotIsomorphic, ResourceLimit
from .groups import FiniteGroup, as_element_set
from .sandwich import SandwichScheme, trivial_autos

DEFAULT_MAX_ELEMENTS = 4096
MAX_TRIPLE_ELEMENTS = 512

SANDWICH_CENTRALIZER = "sandwich-centralizer"
SANDWICH = "sandwich"
TRANSFORMATION = "transformation"


class NearRing:
    def __init__(self, gamma: FiniteGroup, domain: Sequence[int], values, kind: str,
                 phi: Optional[Sequence[int]] = None, scheme: Optional[SandwichScheme] = None,
                 *, presorted: bool = False):
        self.gamma = gamma
        self.domain = tuple(int(a) for a in domain)
        if not self.domain or self.domain[0] != 0:
            raise InvalidArgument("domain must start with 0")
        self.kind = kind
        self.scheme = scheme
        vals = np.asarray(values, dtype=np.int64).reshape(-1, len(self.domain))
        if not presorted:
            vals = np.unique(vals, axis=0)
        if len(vals) == 0 or vals[0].any():
            raise InvalidArgument("a near-ring must contain the zero function")
        if (vals[:, 0] != 0).any():
            raise InvalidArgument("every element must send 0 to 0")
        vals.setflags(write=False)
        self.values = vals
        n = gamma.order
        pos = np.full(n, -1, dtype=np.int64)
        pos[list(self.domain)] = np.arange(len(self.domain))
        self.pos = pos
        phi = np.arange(n) if phi is None else np.asarray(phi, dtype=np.int64)
        if (pos[phi] < 0).any():
            raise InvalidArgument("sandwich function must map into the domain")
        self.phi = phi
        # (a o' b)[x] = a[phi_col[b[x]]]
        self.phi_col = pos[phi]
        d = len(self.domain)
        if d * np.log2(max(n, 2)) < 62:
            self._weights = n ** np.arange(d - 1, -1, -1, dtype=np.int64)
            self._codes = vals @ self._weights
        else:
            self._weights = None
            self._lookup = {r.tobytes(): i for i, r in enumerate(vals)}
        self._add_table = None
        self._mul_table = None

    # element access --------------------------------------------------------
    def __len__(self):
        return len(self.values)

    @property
    def size(self) -> int:
        return len(self.values)

    def element(self, i: int) -> tuple:
        return tuple(self.values[i].tolist())

    def as_function(self, i: int) -> dict:
        return dict(zip(self.domain, self.values[i].tolist()))

    def indices_of(self, rows) -> np.ndarray:
        """Indices of the given value rows; raises for rows outside the near-ring."""
        rows = np.asarray(rows, dtype=np.int64)
        flat = rows.reshape(-1, len(self.domain))
        if self._weights is not None:
            codes = flat @ self._weights
            idx = np.searchsorted(self._codes, codes)
            idx = np.minimum(idx, len(self._codes) - 1)
            bad = self._codes[idx] != codes
            if bad.any():
                raise InvalidArgument(f"{flat[np.argmax(bad)].tolist()} is not an element")
        else:
            try:
                idx = np.array([self._lookup[r.tobytes()] for r in flat], dtype=np.int64)
            except KeyError:
                raise InvalidArgument("value row is not an element") from None
        return idx.reshape(rows.shape[:-1])

    def index_of(self, element) -> int:
        if isinstance(element, (int, np.integer)):
            if not 0 <= element < len(self):
                raise InvalidArgument(f"element index {element} out of range")
            return int(element)
        if isinstance(element, dict):
            element = [element[x] for x in self.domain]
        row = np.asarray(element, dtype=np.int64)
        if row.shape != (len(self.domain),):
            raise InvalidArgument("element has the wrong length")
        return int(self.indices_of(row[None, :])[0])

    def contains(self, element) -> bool:
        try:
            self.index_of(element)
        except InvalidArgument:
            return False
        return True

    # pointwise arithmetic on value rows ---------------------------------------
    def add_rows(self, a, b) -> np.ndarray:
        return self.gamma.table[a, b]

    def mul_rows(self, a, b) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        cols = self.phi_col[b]
        a, cols = np.broadcast_arrays(a, cols)
        return np.take_along_axis(a, cols, axis=-1)

    # operation tables ----------------------------------------------------------
    def _table(self, op) -> np.ndarray:
        n = len(self)
        d = len(self.domain)
        out = np.empty((n, n), dtype=np.int32)
        chunk = max(1, 4_000_000 // max(1, n * d))
        v = self.values
        for start in range(0, n, chunk):
            a = v[start:start + chunk, None, :]
            rows = op(a, v[None, :, :])
            out[start:start + chunk] = self.indices_of(rows)
        out.setflags(write=False)
        return out

    @property
    def add_table(self) -> np.ndarray:
        if self._add_table is None:
            self._add_table = self._table(self.add_rows)
        return self._add_table

    @property
    def mul_table(self) -> np.ndarray:
        if self._mul_table is None:
            self._mul_table = self._table(self.mul_rows)
        return self._mul_table

    def with_tables(self, add_table=None, mul_table=None) -> "NearRing":
        """Copy carrying explicit operation tables (used for fault injection)."""
        other = object.__new__(NearRing)
        other.__dict__.update(self.__dict__)
        if add_table is not None:
            other._add_table = np.asarray(add_table)
        if mul_table is not None:
            other._mul_table = np.asarray(mul_table)
        return other

    def value_sets(self) -> list:
        """V_x = {a(x) : a in N} for each domain point x."""
        n = self.gamma.order
        return [np.flatnonzero(np.bincount(self.values[:, c], minlength=n)) for c in range(len(self.domain))]

    def to_json(self, tables: bool = True) -> dict:
        doc = {"kind": self.kind, "group": self.gamma.to_json(), "domain": list(self.domain),
               "elements": self.values.tolist()}
        if self.kind != TRANSFORMATION:
            doc["phi"] = self.phi.tolist()
        if tables:
            doc["add"] = self.add_table.tolist()
            doc["mul"] = self.mul_table.tolist()
        return doc

    @classmethod
    def from_json(cls, doc: dict, group: Optional[FiniteGroup] = None) -> "NearRing":
        """Load a dump; closure under + and o' is re-derived, stored tables are ignored."""
        try:
            g = group or FiniteGroup.from_json(doc["group"])
            kind = doc.get("kind", TRANSFORMATION)
            domain = doc["domain"]
            elements = doc["elements"]
            phi = doc.get("phi")
        except (KeyError, TypeError) as exc:
            raise InvalidArgument(f"malformed near-ring document: {exc}") from None
        if kind not in (SANDWICH_CENTRALIZER, SANDWICH, TRANSFORMATION):
            raise InvalidArgument(f"unknown near-ring kind {kind!r}")
        if kind == TRANSFORMATION:
            phi = None
            if list(domain) != list(range(g.order)):
                raise InvalidArgument("a transformation near-ring is defined on the whole group")
        elif phi is None:
            raise InvalidArgument("sandwich near-rings need a phi entry")
        try:
            vals = np.asarray(elements, dtype=np.int64)
        except (TypeError, ValueError):
            raise InvalidArgument("elements must be integer arrays") from None
        if vals.ndim != 2 or vals.shape[1] != len(domain) or (len(vals) and (vals.min() < 0 or vals.max() >= g.order)):
            raise InvalidArgument("elements must be value arrays over the domain")
        n = cls(g, domain, vals, kind, phi=phi)
        n.add_table  # raises if not closed
        n.mul_table
        return n

    def __repr__(self):
        return f"NearRing({self.kind}, |N|={len(self)}, group={self.gamma.name!r})"


# constructors -------------------------------------------------------------------

def _mixed_radix(n: int, k: int) -> np.ndarray:
    """All k-digit base-n numbers in increasing order, most significant digit first."""
    codes = np.arange(n ** k, dtype=np.int64)
    powers = n ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (codes[:, None] // powers[None, :]) % n


def enumerate_centralizer_nearring(scheme: SandwichScheme, max_elements: int = DEFAULT_MAX_ELEMENTS,
                                   *, check: bool = True) -> NearRing:
    """All f: X -> Gamma with f(0) = 0 and f(s(x)) = s(f(x)).

    Values on the orbit representatives of X1 are free; everything else is
    forced by S. Fixedpointfreeness makes the propagation conflict-free.
    """
    if check:
        scheme.require_valid()
    g, s = scheme.gamma, scheme.s
    x = scheme.x
    reps = orbit_representatives(s, scheme.x1)
    k = len(reps)
    size = g.order ** k
    if size > max_elements:
        raise ResourceLimit(f"near-ring would have {g.order}^{k} = {size} elements (cap {max_elements})")
    pos = {a: i for i, a in enumerate(x)}
    digits = _mixed_radix(g.order, k)
    vals = np.zeros((size, len(x)), dtype=np.int64)
    for j, e in enumerate(reps):
        for row in s.images:
            vals[:, pos[int(row[e])]] = row[digits[:, j]]
    kind = SANDWICH if s.is_trivial() else SANDWICH_CENTRALIZER
    # first differing coordinate of two elements is always an orbit minimum,
    # so mixed-radix order over the sorted representatives is lexicographic
    return NearRing(g, x, vals, kind, phi=scheme.phi, scheme=scheme, presorted=True)


def sandwich_nearring(g: FiniteGroup, phi: Sequence[int], max_elements: int = DEFAULT_MAX_ELEMENTS) -> NearRing:
    """The plain sandwich near-ring M0(X, Gamma, phi)."""
    return enumerate_centralizer_nearring(SandwichScheme(g, trivial_autos(g), tuple(phi)), max_elements)


def build_annihilating_nearring(g: FiniteGroup, z: Iterable[int],
                                max_elements: int = DEFAULT_MAX_ELEMENTS) -> NearRing:
    """All f: Gamma -> Gamma with f(0) = 0 and f vanishing on z; composition as product."""
    z = set(as_element_set(z))
    if 0 not in z:
        raise InvalidArgument("the annihilated set must contain 0")
    free = [a for a in g.elements if a not in z]
    size = g.order ** len(free)
    if size > max_elements:
        raise ResourceLimit(f"near-ring would have {size} elements (cap {max_elements})")
    vals = np.zeros((size, g.order), dtype=np.int64)
    vals[:, free] = _mixed_radix(g.order, len(free))
    return NearRing(g, range(g.order), vals, TRANSFORMATION, presorted=True)


def centralizer_nearring(g: FiniteGroup, s: AutomorphismSet, max_maps: int = 10 ** 6) -> NearRing:
    """M_S(Gamma) by brute force over every zero-fixing self-map of Gamma."""
    n = g.order
    if n ** (n - 1) > max_maps:
        raise ResourceLimit(f"{n}^{n - 1} candidate maps exceed {max_maps}")
    vals = np.zeros((n ** (n - 1), n), dtype=np.int64)
    vals[:, 1:] = _mixed_radix(n, n - 1)
    keep = np.ones(len(vals), dtype=bool)
    for row in s.images:
        # f(s(a)) == s(f(a)) for every a
        keep &= (vals[:, row] == row[vals]).all(axis=1)
    return NearRing(g, range(n), vals[keep], TRANSFORMATION, presorted=True)


def transformation_nearring(g: FiniteGroup, maps: Iterable[Sequence[int]]) -> NearRing:
    """Near-ring given by an explicit list of zero-fixing maps on Gamma; closure is verified."""
    rows = [list(m) for m in maps]
    rows.append([0] * g.order)
    vals = np.asarray(rows, dtype=np.int64)
    if vals.shape[1] != g.order or vals.min() < 0 or vals.max() >= g.order:
        raise InvalidArgument("maps must be arrays of group elements")
    nr = NearRing(g, range(g.order), vals, TRANSFORMATION)
    nr.add_table  # raises if not closed
    nr.mul_table
    return nr


# products -----------------------------------------------------------------------

def nr_add(n: NearRing, a, b) -> tuple:
    ia, ib = n.index_of(a), n.index_of(b)
    return tuple(n.add_rows(n.values[ia], n.values[ib]).tolist())


def nr_mul(n: NearRing, a, b) -> tuple:
    """Pointwise x -> a(phi(b(x)))."""
    ia, ib = n.index_of(a), n.index_of(b)
    return tuple(n.mul_rows(n.values[ia], n.values[ib]).tolist())


# axioms ---------------------------------------------------------------------------

@dataclass
class AxiomReport:
    failures: dict = field(default_factory=dict)  # axiom -> witness tuple of element indices
    checked: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.ok:
            return f"all near-ring axioms hold ({self.checked.get('triples', 0)} triples checked)"
        return "; ".join(f"{k} fails at {list(v)}" for k, v in sorted(self.failures.items()))

    def to_json(self) -> dict:
        return {"ok": self.ok, "failures": {k: list(v) for k, v in self.failures.items()},
                "checked": self.checked}


def _first(mask: np.ndarray, offset=()):
    hit = np.argwhere(mask)
    if len(hit) == 0:
        return None
    return tuple(int(v) for v in offset) + tuple(int(v) for v in hit[0])


def verify_axioms(n: NearRing, max_elements: int = MAX_TRIPLE_ELEMENTS) -> AxiomReport:
    """Exhaustive check of the near-ring axioms on the operation tables."""
    size = len(n)
    if size > max_elements:
        raise ResourceLimit(f"triple checks limited to {max_elements} elements")
    add, mul = n.add_table, n.mul_table
    rep = AxiomReport()
    idx = np.arange(size)
    zero = 0
    if (add[zero] != idx).any() or (add[:, zero] != idx).any():
        rep.failures["additive_identity"] = (int(np.argmax((add[zero] != idx) | (add[:, zero] != idx))),)
    has_inv = (add == zero).any(axis=1) & (add == zero).any(axis=0)
    if not has_inv.all():
        rep.failures["additive_inverse"] = (int(np.argmin(has_inv)),)
    if (mul[zero] != zero).any() or (mul[:, zero] != zero).any():
        rep.failures["zero_symmetric"] = (int(np.argmax((mul[zero] != zero) | (mul[:, zero] != zero))),)
    chunk = max(1, 2_000_000 // (size * size))
    for start in range(0, size, chunk):
        a = idx[start:start + chunk, None, None]
        b = idx[None, :, None]
        c = idx[None, None, :]
        checks = {
            "additive_associativity": add[add[a, b], c] != add[a, add[b, c]],
            "multiplicative_associativity": mul[mul[a, b], c] != mul[a, mul[b, c]],
            "right_distributivity": mul[add[a, b], c] != add[mul[a, c], mul[b, c]],
        }
        for name, bad in checks.items():
            if name not in rep.failures:
                w = _first(bad)
                if w is not None:
                    rep.failures[name] = (w[0] + start, w[1], w[2])
    rep.checked = {"elements": size, "triples": size ** 3}
    return rep


def is_ring(n: NearRing) -> bool:
    """+ commutative and left distributive.

    Addition is pointwise, and a o' (b + c) at x only depends on the pair
    (b(x), c(x)), which ranges over all of V_x x V_x as b and c vary
    independently. So both laws reduce exactly to statements over the value
    sets V_x.
    """
    g = n.gamma
    t = g.table
    pairs = set()
    for vx in n.value_sets():
        u = vx[:, None]
        v = vx[None, :]
        if (t[u, v] != t[v, u]).any():
            return False
        pairs.update(zip(np.broadcast_to(u, (len(vx), len(vx))).ravel().tolist(),
                         np.broadcast_to(v, (len(vx), len(vx))).ravel().tolist()))
    if not pairs:
        return True
    uv = np.array(sorted(pairs), dtype=np.int64)
    cols = np.unique(np.stack([n.phi_col[uv[:, 0]], n.phi_col[uv[:, 1]],
                               n.phi_col[t[uv[:, 0], uv[:, 1]]]], axis=1), axis=0)
    cu, cv, cs = cols.T
    vals = n.values
    # most near-rings fail on a few rows; settle those before the full pass
    head = vals[:64]
    if (head[:, cs] != t[head[:, cu], head[:, cv]]).any():
        return False
    step = max(1, 1_000_000 // max(1, len(vals)))
    for start in range(0, len(uv), step):
        sl = slice(start, start + step)
        lhs = vals[:, cs[sl]]
        rhs = t[vals[:, cu[sl]], vals[:, cv[sl]]]
        if (lhs != rhs).any():
            return False
    return True


def is_ring_bruteforce(n: NearRing) -> bool:
    add, mul = n.add_table, n.mul_table
    if (add != add.T).any():
        return False
    idx = np.arange(len(n))
    a = idx[:, None, None]
    b = idx[None, :, None]
    c = idx[None, None, :]
    return bool((mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]).all())


def ring_witness(n: NearRing):
    """First triple (a, b, c) with a o' (b + c) != a o' b + a o' c, from the tables."""
    add, mul = n.add_table, n.mul_table
    idx = np.arange(len(n))
    for a in idx:
        bad = mul[a, add] != add[mul[a][:, None], mul[a][None, :]]
        w = _first(bad)
        if w is not None:
            return (int(a),) + w
    return None


# identities ---------------------------------------------------------------------------

@dataclass
class IdentityReport:
    two_sided: Optional[int]
    right: list
    left: list

    def to_json(self) -> dict:
        return {"two_sided": self.two_sided, "right": self.right, "left": self.left}


def identities(n: NearRing) -> IdentityReport:
    """Left, right and two-sided multiplicative identities.

    e is a left identity iff e(phi(v)) = v for every value v any element takes;
    e is a right identity iff for each x the columns at phi(e(x)) and at x
    coincide across all elements.
    """
    vals = n.values
    # columns that agree on every element are interchangeable
    seen: dict = {}
    col_class = np.array([seen.setdefault(c.tobytes(), len(seen)) for c in np.ascontiguousarray(vals.T)])
    cols = n.phi_col[vals]  # cols[e, x] = column of phi(e(x))
    right = np.flatnonzero((col_class[cols] == col_class[None, :]).all(axis=1)).tolist()
    left = []
    vsets = n.value_sets()
    need = np.unique(np.concatenate(vsets))
    need_cols = n.phi_col[need]
    left = np.flatnonzero((vals[:, need_cols] == need[None, :]).all(axis=1)).tolist()
    both = sorted(set(left) & set(right))
    return IdentityReport(both[0] if both else None, right, left)


def identities_from_tables(n: NearRing) -> IdentityReport:
    mul = n.mul_table
    idx = np.arange(len(n))
    right = [int(e) for e in idx if (mul[:, e] == idx).all()]
    left = [int(e) for e in idx if (mul[e, :] == idx).all()]
    both = sorted(set(left) & set(right))
    return IdentityReport(both[0] if both else None, right, left)


def identity_function_index(n: NearRing) -> Optional[int]:
    """Index of x -> x on the domain, if it is an element."""
    row = np.asarray(n.domain)
    try:
        return n.index_of(row)
    except InvalidArgument:
        return None


# isomorphisms -------------------------------------------------------------------------------

@dataclass
class IsomorphismCertificate:
    pairs: list  # (source index, target index)
    source_size: int
    target_size: int

    def to_json(self) -> dict:
        return {"pairs": self.pairs, "source_size": self.source_size, "target_size": self.target_size}


def verify_isomorphism(src: NearRing, dst: NearRing, mapping: Sequence[int]) -> None:
    """Raise NotIsomorphic unless ``mapping`` (src index -> dst index) is a near-ring isomorphism."""
    h = np.asarray(mapping)
    if len(src) != len(dst):
        raise NotIsomorphic("sizes differ", {"source": len(src), "target": len(dst)})
    if len(set(h.tolist())) != len(h):
        raise NotIsomorphic("map is not injective")
    bad = h[src.add_table] != dst.add_table[h[:, None], h[None, :]]
    w = _first(bad)
    if w is not None:
        raise NotIsomorphic("map is not additive", {"pair": w})
    bad = h[src.mul_table] != dst.mul_table[h[:, None], h[None, :]]
    w = _first(bad)
    if w is not None:
        raise NotIsomorphic("map is not multiplicative", {"pair": w})


def restriction_isomorphism(n: NearRing, scheme: SandwichScheme,
                            max_elements: int = DEFAULT_MAX_ELEMENTS) -> IsomorphismCertificate:
    """Certify that f -> f restricted to X maps a transformation near-ring onto M0(X, Gamma, phi, S)."""
    if n.kind != TRANSFORMATION:
        raise InvalidArgument("restriction_isomorphism needs a transformation near-ring")
    target = enumerate_centralizer_nearring(scheme, max_elements)
    if len(n) != len(target):
        raise NotIsomorphic("sizes differ", {"source": len(n), "target": len(target)})
    cols = [n.pos[x] for x in scheme.x]
    restricted = n.values[:, cols]
    try:
        h = target.indices_of(restricted)
    except InvalidArgument as exc:
        raise NotIsomorphic(f"restriction is not well defined: {exc}") from None
    verify_isomorphism(n, target, h)
    return IsomorphismCertificate([(i, int(j)) for i, j in enumerate(h)], len(n), len(target))


def subnearring_closure(n: NearRing, gens: Iterable[int]) -> list:
    """Indices of the subnear-ring generated by ``gens`` (closure under +, - and o')."""
    add, mul = n.add_table, n.mul_table
    neg = np.argmax(add == 0, axis=1)
    members = {0} | {n.index_of(g) for g in gens}
    while True:
        m = np.array(sorted(members))
        new = set(add[m[:, None], m[None, :]].ravel().tolist())
        new |= set(mul[m[:, None], m[None, :]].ravel().tolist())
        new |= set(neg[m].tolist())
        if new <= members:
            return sorted(members)
        members |= new
