"""1- and 2-primitivity of sandwich centralizer near-rings, decided two ways.

The theorem side looks only at the scheme: the family C of normal subgroups
sitting inside the zero fiber of phi, property (P), and whether the zero fiber
contains a nontrivial subgroup. The direct side materializes the near-ring,
lets it act on the group by m . g = m(phi(g)) and enumerates N-ideals and
N-subgroups. ``cross_check`` demands that both agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .automorphisms import AutomorphismSet
from .errors import InternalInconsistency, InvalidArgument, NotEmbeddable, TheoremMismatch
from .groups import ElementSet, is_union_of_cosets, normal_subgroups
from .nearring import DEFAULT_MAX_ELEMENTS, NearRing, enumerate_centralizer_nearring, identities, is_ring
from .ngroup import (
    NGroupAction,
    action_from_scheme,
    aut_n,
    classify,
    equiv_classes,
    invariant_representatives,
    is_faithful,
)
from .sandwich import SandwichScheme, gamma0, validate_scheme

EMBED_PAIR_BUDGET = 65_536


# theorem side ------------------------------------------------------------------

def _orbit_ids(s: AutomorphismSet, n: int) -> list:
    """Orbit label (smallest member) of every group element."""
    return s.images.min(axis=0).tolist()


def compute_c(scheme: SandwichScheme) -> list[ElementSet]:
    """Normal subgroups I inside the zero fiber that it is a union of cosets of, and
    with S(phi(g + i)) = S(phi(g)) for every g outside the fiber and i in I."""
    g = scheme.gamma
    z = gamma0(scheme)
    zs = set(z)
    phi = scheme.phi
    orb = _orbit_ids(scheme.s, g.order)
    out = []
    for i in normal_subgroups(g):
        if not zs.issuperset(i) or not is_union_of_cosets(g, z, i):
            continue
        if all(orb[phi[g.add(gamma, x)]] == orb[phi[gamma]]
               for gamma in g.elements if gamma not in zs for x in i):
            out.append(i)
    return out


@dataclass
class PropertyPReport:
    c_members: list
    holds: bool
    witnesses: dict  # nontrivial I in C -> (i, g1, s image, g) or None

    def to_json(self) -> dict:
        return {"c": [list(c) for c in self.c_members], "holds": self.holds,
                "witnesses": {",".join(map(str, k)): (None if w is None else [w[0], w[1], list(w[2]), w[3]])
                              for k, w in self.witnesses.items()}}


def p_witness(scheme: SandwichScheme, ideal):
    """First (i, g1, s, g) in lexicographic order with phi(g1 + i) = s(phi(g1)) and s(g) - g outside I."""
    g = scheme.gamma
    phi = scheme.phi
    zs = set(gamma0(scheme))
    members = set(ideal)
    for i in sorted(ideal):
        for g1 in g.elements:
            if g1 in zs:
                continue
            target = phi[g.add(g1, i)]
            for m in scheme.s.maps:
                if target != m.image[phi[g1]]:
                    continue
                for gamma in g.elements:
                    if g.sub(m.image[gamma], gamma) not in members:
                        return i, g1, m.image, gamma
    return None


def property_p(scheme: SandwichScheme) -> PropertyPReport:
    c = compute_c(scheme)
    witnesses = {i: p_witness(scheme, i) for i in c if len(i) > 1}
    return PropertyPReport(c, all(w is not None for w in witnesses.values()), witnesses)


def subgroup_in_gamma0(scheme: SandwichScheme) -> Optional[ElementSet]:
    """Smallest nontrivial subgroup of the group inside the zero fiber, if any.

    Every nontrivial subgroup contains a nontrivial cyclic one, so cyclic
    subgroups suffice.
    """
    zs = set(gamma0(scheme))
    g = scheme.gamma
    found = [h for h in (g.generated([a]) for a in zs - {0}) if zs.issuperset(h)]
    return min(found, key=lambda h: (len(h), h)) if found else None


def theorem_conditions(scheme: SandwichScheme) -> dict:
    rep = validate_scheme(scheme).checks
    ok = lambda *names: all(rep.get(n, (False,))[0] for n in names)  # noqa: E731
    return {
        "2a_group": True,
        "2b_x_shape": ok("phi_shape", "x1_nonempty"),
        "2c_autos": ok("phi_shape", "s_invariant_x", "fixedpointfree_x1"),
        "2d_phi": ok("phi_shape", "phi_zero", "range_in_x", "equivariant"),
    }


@dataclass
class PrimitivityVerdict:
    size: Optional[int] = None
    ring: Optional[bool] = None
    theorem: Optional[dict] = None
    direct: Optional[dict] = None
    agree: Optional[bool] = None
    identity: Optional[dict] = None
    witnesses: dict = field(default_factory=dict)
    scheme: Optional[SandwichScheme] = None

    @property
    def one_primitive(self) -> Optional[bool]:
        side = self.direct if self.direct is not None else self.theorem
        return side["one_primitive"] if side else None

    @property
    def two_primitive(self) -> Optional[bool]:
        side = self.direct if self.direct is not None else self.theorem
        return side["two_primitive"] if side else None

    def summary(self) -> str:
        if self.two_primitive:
            level = "2-primitive"
        elif self.one_primitive:
            level = "1-primitive, not 2-primitive"
        else:
            level = "not 1-primitive"
        if self.ring:
            level += " (ring: density theorems not applicable)"
        ident = "identity" if self.identity and self.identity["two_sided"] else "no identity"
        return f"{level}, {ident}, |N|={self.size}"

    def to_json(self) -> dict:
        return {"scheme": None if self.scheme is None else self.scheme.to_json(),
                "size": self.size, "ring": self.ring, "theorem": self.theorem, "direct": self.direct,
                "agree": self.agree, "identity": self.identity,
                "one_primitive": self.one_primitive, "two_primitive": self.two_primitive,
                "witnesses": self.witnesses}


def _build(scheme, nearring, max_elements):
    if nearring is None:
        nearring = enumerate_centralizer_nearring(scheme, max_elements)
    return nearring


def _theorem_side(scheme: SandwichScheme, ring: bool) -> tuple[dict, dict]:
    p = property_p(scheme)
    sub = subgroup_in_gamma0(scheme)
    # for rings the conclusions are still reported, but nothing is claimed for them
    applicable = not ring
    one = p.holds
    two = p.holds and sub is None
    side = {"applicable": applicable, "conditions": theorem_conditions(scheme),
            "c": [list(c) for c in p.c_members], "p_holds": p.holds,
            "gamma0_subgroup_free": sub is None, "one_primitive": one, "two_primitive": two}
    wit = {}
    if not p.holds:
        bad = next(i for i, w in p.witnesses.items() if w is None)
        wit["p_failure"] = list(bad)
    if sub is not None:
        wit["gamma0_subgroup"] = list(sub)
    return side, wit


def theorem_verdict(scheme: SandwichScheme, nearring: Optional[NearRing] = None,
                    max_elements: int = DEFAULT_MAX_ELEMENTS) -> PrimitivityVerdict:
    scheme.require_valid()
    n = _build(scheme, nearring, max_elements)
    ring = is_ring(n)
    side, wit = _theorem_side(scheme, ring)
    return PrimitivityVerdict(size=len(n), ring=ring, theorem=side, witnesses=wit, scheme=scheme)


def _direct_side(scheme: SandwichScheme, n: NearRing, verify=None) -> tuple[dict, dict, NGroupAction]:
    a = action_from_scheme(n, scheme, verify=verify)
    tv = classify(a)
    faithful = is_faithful(a)
    side = {"faithful": faithful, "theta0": list(tv.theta0), "theta1": list(tv.theta1),
            "type0": tv.type0, "type1": tv.type1, "type2": tv.type2,
            "one_primitive": faithful and tv.type1, "two_primitive": faithful and tv.type2}
    wit = {}
    if "n_ideal" in tv.witness:
        wit["n_ideal"] = tv.witness["n_ideal"]
    if "n_subgroup" in tv.witness:
        wit["n_subgroup"] = tv.witness["n_subgroup"]
    return side, wit, a


def direct_verdict(scheme: SandwichScheme, nearring: Optional[NearRing] = None,
                   max_elements: int = DEFAULT_MAX_ELEMENTS, verify=None) -> PrimitivityVerdict:
    n = _build(scheme, nearring, max_elements)
    side, wit, _ = _direct_side(scheme, n, verify)
    return PrimitivityVerdict(size=len(n), ring=is_ring(n), direct=side, witnesses=wit, scheme=scheme)


def cross_check(scheme: SandwichScheme, nearring: Optional[NearRing] = None,
                max_elements: int = DEFAULT_MAX_ELEMENTS, *, raise_on_mismatch: bool = True,
                verify=None) -> PrimitivityVerdict:
    scheme.require_valid()
    n = _build(scheme, nearring, max_elements)
    ring = is_ring(n)
    theo, wit = _theorem_side(scheme, ring)
    direct, dwit, _ = _direct_side(scheme, n, verify)
    wit.update(dwit)
    ids = identities(n)
    agree = (theo["one_primitive"] == direct["one_primitive"]
             and theo["two_primitive"] == direct["two_primitive"])
    v = PrimitivityVerdict(size=len(n), ring=ring, theorem=theo, direct=direct, agree=agree,
                           identity={"two_sided": ids.two_sided is not None, "right": bool(ids.right),
                                     "left": bool(ids.left)},
                           witnesses=wit, scheme=scheme)
    if not agree and not ring and raise_on_mismatch:
        raise TheoremMismatch(f"theorem and direct verdicts disagree for phi={scheme.phi}", v)
    return v


# embedding -----------------------------------------------------------------------

@dataclass
class Embedding:
    scheme: SandwichScheme
    target: NearRing
    image: np.ndarray  # image[n] = index of f_n in target
    rows: np.ndarray  # rows[n] = values of f_n on X
    exhaustive: bool

    @property
    def pairing(self) -> list:
        return [(i, int(j)) for i, j in enumerate(self.image)]


def _pairs(size: int, budget: int, seed: int = 0):
    if size * size <= budget:
        j, k = np.divmod(np.arange(size * size), size)
        return j, k, True
    rng = np.random.default_rng(seed)
    j = rng.integers(0, size, budget)
    k = rng.integers(0, size, budget)
    return j, k, False


def embed(a: NGroupAction, max_elements: int = DEFAULT_MAX_ELEMENTS,
          candidates: Optional[AutomorphismSet] = None, pair_budget: int = EMBED_PAIR_BUDGET) -> Embedding:
    """Represent a faithful type-1 action inside M0(X, Gamma, phi, S), n -> (x -> n x).

    Additivity and multiplicativity of n -> f_n are checked on every pair when
    |N|^2 fits in ``pair_budget``, otherwise on a fixed pseudo-random sample.
    """
    if a.nearring is None:
        raise NotEmbeddable("the action has no near-ring attached")
    if not is_faithful(a):
        raise NotEmbeddable("action is not faithful")
    tv = classify(a)
    if not tv.type1:
        raise NotEmbeddable("action is not of type 1")
    g = a.carrier
    s = aut_n(a, candidates)
    x = invariant_representatives(a, s)
    xs = set(x)
    rep_of = {}
    for cls in equiv_classes(a):
        r = [c for c in cls if c in xs]
        if len(r) != 1:
            raise InternalInconsistency(f"class {cls} has representatives {r}")
        for c in cls:
            rep_of[c] = r[0]
    scheme = SandwichScheme(g, s, tuple(rep_of[c] for c in g.elements))
    report = validate_scheme(scheme)
    if not report.ok:
        raise InternalInconsistency(f"embedded scheme is invalid: {report.summary()}")
    target = enumerate_centralizer_nearring(scheme, max_elements, check=False)
    rows = a.act[:, list(x)]
    try:
        image = target.indices_of(rows)
    except InvalidArgument:
        raise InternalInconsistency("some f_n is not in the centralizer near-ring") from None
    if len(np.unique(image)) != len(rows):
        raise InternalInconsistency("n -> f_n is not injective")
    src = a.nearring
    j, k, exhaustive = _pairs(len(src), pair_budget)
    vj, vk = src.values[j], src.values[k]
    s_add = src.indices_of(src.add_rows(vj, vk))
    s_mul = src.indices_of(src.mul_rows(vj, vk))
    if (rows[s_add] != g.table[rows[j], rows[k]]).any():
        raise InternalInconsistency("n -> f_n is not additive")
    if (rows[s_mul] != target.mul_rows(rows[j], rows[k])).any():
        raise InternalInconsistency("n -> f_n is not multiplicative")
    return Embedding(scheme, target, image, rows, exhaustive)


def density_check(image, scheme: SandwichScheme, max_elements: int = DEFAULT_MAX_ELEMENTS) -> bool:
    """For finite X density means the image is the whole near-ring."""
    full = enumerate_centralizer_nearring(scheme, max_elements)
    rows = np.asarray(image, dtype=np.int64).reshape(-1, len(full.domain))
    idx = full.indices_of(rows)  # raises if some row is not an element
    return len(np.unique(idx)) == len(full)
