"""Sandwich schemes (group, automorphism group S, sandwich function phi).

The representative set X is never stored: it is the fixed-point set of phi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .automorphisms import (
    AutomorphismSet,
    closure_as_group,
    fixedpoint_witness,
    identity_map,
    orbit_representatives,
    orbits,
)
from .errors import InvalidArgument, InvalidRecipe
from .groups import ElementSet, FiniteGroup, as_element_set


@dataclass(frozen=True, eq=False)
class SandwichScheme:
    gamma: FiniteGroup
    s: AutomorphismSet
    phi: tuple

    def __post_init__(self):
        object.__setattr__(self, "phi", tuple(int(v) for v in self.phi))
        if self.s.group != self.gamma:
            raise InvalidArgument("automorphism set acts on a different group")

    @property
    def x(self) -> ElementSet:
        return tuple(a for a, v in enumerate(self.phi) if a == v)

    @property
    def x1(self) -> ElementSet:
        return tuple(a for a in self.x if a != 0)

    @property
    def gamma0(self) -> ElementSet:
        return gamma0(self)

    def __eq__(self, other):
        return (isinstance(other, SandwichScheme) and self.phi == other.phi
                and self.gamma == other.gamma and self.s == other.s)

    def __hash__(self):
        return hash((self.phi, hash(self.s)))

    def to_json(self) -> dict:
        # S is stored by generators; loading takes the closure
        return {"group": self.gamma.to_json(), "autos": self.s.to_json(generators_only=True),
                "phi": list(self.phi)}

    @classmethod
    def from_json(cls, doc: dict) -> "SandwichScheme":
        try:
            g = FiniteGroup.from_json(doc["group"])
            s = closure_as_group(g, doc.get("autos") or [])
            phi = doc["phi"]
        except (KeyError, TypeError) as exc:
            raise InvalidArgument(f"malformed scheme document: {exc}") from None
        if not isinstance(phi, list) or not all(isinstance(v, int) for v in phi):
            raise InvalidArgument("phi must be a list of integers")
        return cls(g, s, tuple(phi))

    def require_valid(self) -> "SandwichScheme":
        report = validate_scheme(self)
        if not report.ok:
            raise InvalidArgument(f"invalid sandwich scheme: {report.summary()}")
        return self


def trivial_autos(g: FiniteGroup) -> AutomorphismSet:
    return AutomorphismSet(g, [identity_map(g)], check=False)


@dataclass
class ValidationReport:
    checks: dict = field(default_factory=dict)  # name -> (passed, counterexample or None)

    def record(self, name, counterexample=None):
        self.checks[name] = (counterexample is None, counterexample)

    @property
    def ok(self) -> bool:
        return all(p for p, _ in self.checks.values())

    @property
    def failures(self) -> dict:
        return {k: c for k, (p, c) in self.checks.items() if not p}

    def summary(self) -> str:
        return "; ".join(f"{k}: {c}" for k, c in self.failures.items()) or "all checks pass"

    def to_json(self) -> dict:
        return {k: {"pass": p, "counterexample": c} for k, (p, c) in self.checks.items()}


def validate_scheme(scheme: SandwichScheme) -> ValidationReport:
    rep = ValidationReport()
    g, phi = scheme.gamma, scheme.phi
    n = g.order
    if len(phi) != n or any(not 0 <= v < n for v in phi):
        rep.record("phi_shape", {"length": len(phi), "order": n})
        return rep
    rep.record("phi_shape")
    rep.record("phi_zero", None if phi[0] == 0 else {"phi(0)": phi[0]})
    bad = next((a for a in range(n) if phi[phi[a]] != phi[a]), None)
    rep.record("range_in_x", None if bad is None else {"gamma": bad, "phi": phi[bad]})
    x = scheme.x
    x1 = scheme.x1
    rep.record("x1_nonempty", None if x1 else {"x": list(x)})
    xs = set(x)
    cx = None
    for a in x:
        for m in scheme.s.maps:
            if m.image[a] not in xs:
                cx = {"x": a, "s": list(m.image)}
                break
        if cx:
            break
    rep.record("s_invariant_x", cx)
    cx = None
    for a in range(n):
        for m in scheme.s.maps:
            if phi[m.image[a]] != m.image[phi[a]]:
                cx = {"gamma": a, "s": list(m.image), "phi(s(gamma))": phi[m.image[a]],
                      "s(phi(gamma))": m.image[phi[a]]}
                break
        if cx:
            break
    rep.record("equivariant", cx)
    w = fixedpoint_witness(scheme.s, x1)
    rep.record("fixedpointfree_x1", None if w is None else {"x": w[0], "s": list(w[1])})
    return rep


def gamma0(scheme: SandwichScheme) -> ElementSet:
    return tuple(a for a, v in enumerate(scheme.phi) if v == 0)


@dataclass(frozen=True)
class PhiRecipe:
    """Inputs of the orbit construction of phi.

    ``reps`` lists one representative per S-orbit of ``g``; ``j`` holds the
    positions in ``reps`` whose orbits make up X1; ``f`` sends each remaining
    representative into X1.
    """

    gamma: FiniteGroup
    s: AutomorphismSet
    g: tuple
    reps: tuple
    j: frozenset
    f: dict = field(default_factory=dict, hash=False)

    @property
    def k(self) -> tuple:
        return tuple(i for i in range(len(self.reps)) if i not in self.j)

    def x1(self) -> ElementSet:
        return as_element_set(a for i in self.j for a in self.s.orbit(self.reps[i]))

    def to_json(self) -> dict:
        return {"group": self.gamma.to_json(), "autos": self.s.to_json(), "g": list(self.g),
                "reps": list(self.reps), "j": sorted(self.j),
                "f": {str(k): v for k, v in sorted(self.f.items())}}

    @classmethod
    def from_json(cls, doc: dict) -> "PhiRecipe":
        try:
            g = FiniteGroup.from_json(doc["group"])
            s = closure_as_group(g, doc.get("autos") or [])
            return cls(g, s, tuple(doc["g"]), tuple(doc["reps"]), frozenset(doc["j"]),
                       {int(k): int(v) for k, v in doc.get("f", {}).items()})
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgument(f"malformed recipe document: {exc}") from None


def _check_recipe(r: PhiRecipe) -> None:
    g = as_element_set(r.g)
    if 0 in g or any(not 0 < a < r.gamma.order for a in g):
        raise InvalidRecipe("G must be a subset of the nonzero elements")
    try:
        orbs = orbits(r.s, g)
    except InvalidArgument as exc:
        raise InvalidRecipe(f"G is not S-invariant: {exc}") from None
    w = fixedpoint_witness(r.s, g)
    if w is not None:
        raise InvalidRecipe(f"S is not fixedpointfree on G: {w[1]} fixes {w[0]}")
    rep_orbits = [r.s.orbit(e) for e in r.reps]
    if sorted(rep_orbits) != sorted(orbs) or len(set(rep_orbits)) != len(rep_orbits):
        raise InvalidRecipe("reps must contain exactly one element of each orbit of G")
    if not r.j:
        raise InvalidRecipe("J must be nonempty")
    if any(not 0 <= i < len(r.reps) for i in r.j):
        raise InvalidRecipe("J indexes outside reps")
    x1 = set(r.x1())
    ks = {r.reps[i] for i in r.k}
    if set(r.f) != ks:
        raise InvalidRecipe(f"f must be defined exactly on the K representatives {sorted(ks)}")
    for e, v in r.f.items():
        if v not in x1:
            raise InvalidRecipe(f"f({e}) = {v} lies outside X1")


def build_phi(recipe: PhiRecipe) -> SandwichScheme:
    _check_recipe(recipe)
    s = recipe.s
    phi = [0] * recipe.gamma.order
    for a in recipe.x1():
        phi[a] = a
    for i in recipe.k:
        e = recipe.reps[i]
        fe = recipe.f[e]
        for m in s.maps:
            phi[m.image[e]] = m.image[fe]
    scheme = SandwichScheme(recipe.gamma, s, tuple(phi))
    if scheme.x1 != recipe.x1():
        raise InvalidRecipe("construction produced an X different from the recipe's")
    return scheme


def decompose_phi(scheme: SandwichScheme) -> PhiRecipe:
    """Canonical recipe of a valid scheme (minimum-element representatives)."""
    scheme.require_valid()
    z = set(gamma0(scheme))
    g = tuple(a for a in scheme.gamma.elements if a not in z)
    reps = tuple(orbit_representatives(scheme.s, g))
    x1 = set(scheme.x1)
    j = frozenset(i for i, e in enumerate(reps) if e in x1)
    f = {e: scheme.phi[e] for i, e in enumerate(reps) if i not in j}
    return PhiRecipe(scheme.gamma, scheme.s, g, reps, j, f)


def identity_scheme(g: FiniteGroup, s: Optional[AutomorphismSet] = None) -> SandwichScheme:
    """X = Gamma and phi = id."""
    return SandwichScheme(g, s or trivial_autos(g), tuple(range(g.order)))
