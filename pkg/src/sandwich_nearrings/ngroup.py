"""Near-ring actions on a group: ideals, subgroups, types, the ~ relation and N-automorphisms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .automorphisms import AutomorphismSet, automorphism_group
from .errors import InternalInconsistency, NotType1
from .groups import ElementSet, FiniteGroup, normal_subgroups, subgroups
from .nearring import TRANSFORMATION, NearRing
from .sandwich import SandwichScheme

# exhaustive law checks need the |N| x |N| tables; above this they are skipped
LAW_CHECK_MAX_ELEMENTS = 256


def column_classes(arr: np.ndarray) -> list:
    """Label columns of ``arr`` so that equal columns share a label (first-seen order)."""
    seen: dict = {}
    cols = np.ascontiguousarray(arr.T)
    return [seen.setdefault(c.tobytes(), len(seen)) for c in cols]


class NGroupAction:
    """``act[m, g]`` is the action of near-ring element m on group element g.

    Element 0 of the near-ring is its zero.
    """

    def __init__(self, nearring: Optional[NearRing], carrier: FiniteGroup, act):
        self.nearring = nearring
        self.carrier = carrier
        act = np.asarray(act, dtype=np.int64)
        act.setflags(write=False)
        self.act = act

    @property
    def size(self) -> int:
        return self.act.shape[0]

    @property
    def column_ids(self) -> list:
        """Equal ids for carrier elements acted on identically by every m."""
        if not hasattr(self, "_cid"):
            self._cid = column_classes(self.act)
        return self._cid

    def orbit(self, gamma: int) -> ElementSet:
        """N gamma."""
        hit = np.bincount(self.act[:, gamma], minlength=self.carrier.order)
        return tuple(np.flatnonzero(hit).tolist())

    def verify_laws(self) -> None:
        """(m1 + m2) g = m1 g + m2 g and (m1 m2) g = m1 (m2 g) for every entry."""
        n = self.nearring
        t = self.carrier.table
        a = self.act
        if a[0].any():
            raise InternalInconsistency("zero element does not act as zero")
        add, mul = n.add_table, n.mul_table
        lhs = a[add]  # lhs[m1, m2, g]
        rhs = t[a[:, None, :], a[None, :, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            raise InternalInconsistency(f"additive action law fails at {bad[0].tolist()}")
        lhs = a[mul]
        rhs = np.take_along_axis(np.broadcast_to(a[:, None, :], lhs.shape), np.broadcast_to(a[None, :, :], lhs.shape), axis=2)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            raise InternalInconsistency(f"multiplicative action law fails at {bad[0].tolist()}")


def _maybe_verify(action: NGroupAction, verify) -> NGroupAction:
    if verify is None:
        verify = action.nearring is not None and action.size <= LAW_CHECK_MAX_ELEMENTS
    if verify:
        action.verify_laws()
    return action


def action_from_scheme(n: NearRing, scheme: Optional[SandwichScheme] = None, verify=None) -> NGroupAction:
    """m . g := m(phi(g))."""
    scheme = scheme or n.scheme
    if scheme is None or tuple(n.domain) != scheme.x or tuple(n.phi.tolist()) != scheme.phi:
        raise InternalInconsistency("near-ring was not built from this scheme")
    act = n.values[:, n.phi_col]
    return _maybe_verify(NGroupAction(n, scheme.gamma, act), verify)


def action_from_transformation(n: NearRing, verify=None) -> NGroupAction:
    """m . g := m(g)."""
    if n.kind != TRANSFORMATION:
        raise InternalInconsistency("natural action needs a transformation near-ring")
    return _maybe_verify(NGroupAction(n, n.gamma, n.values), verify)


def natural_action(n: NearRing, verify=None) -> NGroupAction:
    if n.kind == TRANSFORMATION:
        return action_from_transformation(n, verify)
    return action_from_scheme(n, verify=verify)


def is_faithful(a: NGroupAction) -> bool:
    # only the zero element (row 0) may annihilate everything
    return bool(a.act[1:].any(axis=1).all())


def annihilator(a: NGroupAction, d) -> list[int]:
    cols = sorted(set(d))
    if not cols:
        return list(range(a.size))
    return np.flatnonzero(~a.act[:, cols].any(axis=1)).tolist()


def generators_split(a: NGroupAction):
    """(theta1, theta0, other): generators, annihilated elements, the rest."""
    n = a.carrier.order
    theta1, theta0, other = [], [], []
    by_class: dict = {}
    for g in range(n):
        cid = a.column_ids[g]
        if cid not in by_class:
            by_class[cid] = a.orbit(g)
        o = by_class[cid]
        if len(o) == n:
            theta1.append(g)
        elif o == (0,):
            theta0.append(g)
        else:
            other.append(g)
    return tuple(theta1), tuple(theta0), tuple(other)


def ideal_violation(a: NGroupAction, ideal, *, lexicographic: bool = True):
    """A triple (m, g, i) with m(g + i) - m(g) outside ``ideal``, or None if it is an N-ideal.

    With ``lexicographic`` the smallest such triple in (m, g, i) order is
    returned; otherwise the search stops at the first bad column pair.
    """
    g = a.carrier
    members = np.zeros(g.order, dtype=bool)
    members[list(ideal)] = True
    act = a.act
    diff = g.diff_table
    best = None
    seen = set()
    cid = a.column_ids
    for gamma in range(g.order):
        for i in sorted(ideal):
            c = g.add(gamma, i)
            key = (cid[c], cid[gamma])
            if not lexicographic:
                if key in seen:
                    continue
                seen.add(key)
            bad = ~members[diff[act[:, c], act[:, gamma]]]
            if bad.any():
                cand = (int(np.argmax(bad)), gamma, i)
                if not lexicographic:
                    return cand
                if best is None or cand < best:
                    best = cand
    return best


def is_n_ideal(a: NGroupAction, ideal) -> bool:
    return ideal_violation(a, ideal, lexicographic=False) is None


def n_ideals(a: NGroupAction) -> list[ElementSet]:
    return [i for i in normal_subgroups(a.carrier) if is_n_ideal(a, i)]


def subgroup_escape(a: NGroupAction, k):
    """First (m, x) with m x outside k, or None when k is an N-subgroup."""
    members = np.zeros(a.carrier.order, dtype=bool)
    members[list(k)] = True
    cols = sorted(k)
    bad = ~members[a.act[:, cols]]
    hit = np.argwhere(bad)
    if len(hit) == 0:
        return None
    m, c = hit[0].tolist()
    return m, cols[c]


def n_subgroups(a: NGroupAction) -> list[ElementSet]:
    return [k for k in subgroups(a.carrier) if subgroup_escape(a, k) is None]


@dataclass
class TypeVerdict:
    faithful: bool
    theta0: ElementSet
    theta1: ElementSet
    other: ElementSet
    type0: bool
    type1: bool
    type2: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"faithful": self.faithful, "theta0": list(self.theta0), "theta1": list(self.theta1),
                "types": {"type0": self.type0, "type1": self.type1, "type2": self.type2},
                "witness": self.witness}


def _nontrivial(g: FiniteGroup, sets):
    return [h for h in sets if 1 < len(h) < g.order]


def classify(a: NGroupAction) -> TypeVerdict:
    g = a.carrier
    theta1, theta0, other = generators_split(a)
    witness: dict = {}
    ideal = None
    for i in _nontrivial(g, normal_subgroups(g)):
        if is_n_ideal(a, i):
            ideal = i
            break
    if ideal is not None:
        witness["n_ideal"] = list(ideal)
    if other:
        witness["non_generator"] = other[0]
    simple = ideal is None
    type0 = g.order > 1 and simple and bool(theta1)
    type1 = type0 and not other
    acts = bool(a.act.any())
    sub = None
    for k in _nontrivial(g, subgroups(g)):
        if subgroup_escape(a, k) is None:
            sub = k
            break
    if sub is not None:
        witness["n_subgroup"] = list(sub)
    type2 = acts and sub is None
    if type2 and not type1:
        raise InternalInconsistency("type 2 action that is not of type 1")
    return TypeVerdict(is_faithful(a), theta0, theta1, other, type0, type1, type2, witness)


def equiv_classes(a: NGroupAction) -> list[ElementSet]:
    """Classes of g1 ~ g2 iff m g1 = m g2 for all m, sorted by smallest member."""
    classes: dict = {}
    for g, c in enumerate(a.column_ids):
        classes.setdefault(c, []).append(g)
    return sorted(tuple(v) for v in classes.values())


def aut_n(a: NGroupAction, candidates: Optional[AutomorphismSet] = None) -> AutomorphismSet:
    """Automorphisms s of the carrier with s(m g) = m s(g) for all m, g."""
    g = a.carrier
    cand = candidates or automorphism_group(g)
    imgs = cand.images
    act = a.act
    # cheap rejection on a prefix of rows, then the full check on survivors
    head = act[: min(len(act), 32)]
    ok = (imgs[:, head] == head[:, imgs].transpose(1, 0, 2)).all(axis=(1, 2))
    keep = []
    for idx in np.flatnonzero(ok):
        s = imgs[idx]
        if (s[act] == act[:, s]).all():
            keep.append(cand.maps[idx])
    return AutomorphismSet(g, keep, check=True)


def invariant_representatives(a: NGroupAction, s: Optional[AutomorphismSet] = None) -> ElementSet:
    """An S-invariant set of ~ representatives containing 0, S = Aut_N.

    Greedy: take the smallest generator whose class is not yet represented and
    adjoin its whole S-orbit (whose members lie in distinct classes).
    """
    theta1, _, other = generators_split(a)
    if other:
        raise NotType1(f"element {other[0]} is neither a generator nor annihilated")
    s = s or aut_n(a)
    classes = equiv_classes(a)
    cls_of = {g: i for i, c in enumerate(classes) for g in c}
    covered = {cls_of[0]}
    x = {0}
    for gamma in theta1:
        if cls_of[gamma] in covered:
            continue
        orb = s.orbit(gamma)
        met = [cls_of[o] for o in orb]
        if len(set(met)) != len(met) or covered.intersection(met):
            raise InternalInconsistency(f"orbit of {gamma} meets a class twice")
        covered.update(met)
        x.update(orb)
    if len(covered) != len(classes):
        raise InternalInconsistency("representatives do not cover every class")
    return tuple(sorted(x))


def product_with_zero(a: NGroupAction, copies: int = 2) -> NGroupAction:
    """Action of N x Z where Z is a near-ring with zero multiplication acting trivially."""
    return NGroupAction(None, a.carrier, np.tile(a.act, (copies, 1)))
