"""The four worked examples (two on Z4, one on Z7, one on Z15) as checkable claims."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .automorphisms import automorphism_group, closure_as_group, is_fixedpointfree_on, multiplication_map
from .errors import NotIsomorphic
from .groups import cyclic
from .nearring import (
    build_annihilating_nearring,
    enumerate_centralizer_nearring,
    identities,
    nr_mul,
    restriction_isomorphism,
)
from .ngroup import action_from_transformation, classify, generators_split, ideal_violation, subgroup_escape
from .primitivity import compute_c, cross_check
from .sandwich import PhiRecipe, SandwichScheme, build_phi, trivial_autos, validate_scheme

Z7_PHI = (0, 1, 6, 0, 0, 1, 6)


@dataclass
class Claim:
    example: str
    name: str
    expected: object
    observed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.observed

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        text = f"[{mark}] {self.example}: {self.name}"
        if not self.ok:
            text += f" (expected {self.expected!r}, got {self.observed!r})"
        return text

    def to_json(self) -> dict:
        return {"example": self.example, "claim": self.name, "ok": self.ok,
                "expected": _plain(self.expected), "observed": _plain(self.observed)}


def _plain(v):
    if isinstance(v, (tuple, list)):
        return [_plain(a) for a in v]
    if isinstance(v, (set, frozenset)):
        return sorted(_plain(a) for a in v)
    return v


def _certified(n, scheme) -> bool:
    try:
        cert = restriction_isomorphism(n, scheme)
    except NotIsomorphic:
        return False
    return cert.source_size == cert.target_size == len(n)


def z4_small() -> list[Claim]:
    ex = "Z4, f(2)=f(3)=0"
    g = cyclic(4)
    n = build_annihilating_nearring(g, {0, 2, 3})
    a = action_from_transformation(n)
    theta1, theta0, _ = generators_split(a)
    out = [Claim(ex, "|N|", 4, len(n)),
           Claim(ex, "theta1", (1,), theta1),
           Claim(ex, "theta0", (0, 2, 3), theta0)]
    # the f with f(1)=3 moves 1 + 2 to 0 - 3 = 1, outside {0, 2}
    f = n.index_of([0, 3, 0, 0])
    diff = g.sub(int(a.act[f, g.add(1, 2)]), int(a.act[f, 1]))
    out.append(Claim(ex, "f(1+2)-f(1) for f(1)=3", 1, diff))
    out.append(Claim(ex, "{0,2} is an N-ideal", False, ideal_violation(a, (0, 2)) is None))
    out.append(Claim(ex, "{0,2} is an N-subgroup", True, subgroup_escape(a, (0, 2)) is None))
    tv = classify(a)
    out.append(Claim(ex, "type1 and not type2", (True, False), (tv.type1, tv.type2)))
    scheme = SandwichScheme(g, trivial_autos(g), (0, 1, 0, 0))
    iso = _certified(n, scheme)
    out.append(Claim(ex, "restriction to X={0,1} is an isomorphism", True, iso))
    m = enumerate_centralizer_nearring(scheme)
    prod = nr_mul(m, [0, 1], [0, 2])
    out.append(Claim(ex, "g1 o' g2 with g1(1)=1, g2(1)=2", (0, 0), prod))
    return out


def z4_large() -> list[Claim]:
    ex = "Z4, f(3)=0"
    g = cyclic(4)
    n = build_annihilating_nearring(g, {0, 3})
    a = action_from_transformation(n)
    tv = classify(a)
    scheme = SandwichScheme(g, trivial_autos(g), (0, 1, 2, 0))
    iso = _certified(n, scheme)
    return [Claim(ex, "|N|", 16, len(n)),
            Claim(ex, "type2", True, tv.type2),
            Claim(ex, "restriction to X={0,1,2} is an isomorphism", True, iso)]


def z7(phi: Optional[Sequence[int]] = None) -> list[Claim]:
    """``phi`` replaces the constructed sandwich function (for fault injection)."""
    ex = "Z7, S={id,-id}"
    g = cyclic(7)
    s = closure_as_group(g, [multiplication_map(g, 6)])
    recipe = PhiRecipe(g, s, (1, 2, 5, 6), (6, 5), frozenset({0}), {5: 1})
    scheme = build_phi(recipe)
    if phi is not None:
        scheme = SandwichScheme(g, s, tuple(phi))
    out = [Claim(ex, "phi", Z7_PHI, scheme.phi)]
    valid = validate_scheme(scheme).ok
    out.append(Claim(ex, "scheme is valid", True, valid))
    if not valid:
        return out
    n = enumerate_centralizer_nearring(scheme)
    out.append(Claim(ex, "|N| = 7^1", 7, len(n)))
    v = cross_check(scheme, n, raise_on_mismatch=False)
    out.append(Claim(ex, "2-primitive, sides agree", (True, True), (bool(v.two_primitive), bool(v.agree))))
    ids = identities(n)
    out.append(Claim(ex, "right identity present", True, bool(ids.right)))
    out.append(Claim(ex, "two-sided identity absent", True, ids.two_sided is None))
    return out


def z15() -> list[Claim]:
    ex = "Z15, S=Aut"
    g = cyclic(15)
    s = automorphism_group(g)
    orbit1 = s.orbit(1)
    phi = tuple(a if a in orbit1 else 0 for a in g.elements)
    scheme = SandwichScheme(g, s, phi)
    v = cross_check(scheme, raise_on_mismatch=False)
    return [Claim(ex, "|Aut| = (3-1)(5-1)", 8, len(s)),
            Claim(ex, "|S(1)|", 8, len(orbit1)),
            Claim(ex, "fixedpointfree on S(1)", True, is_fixedpointfree_on(s, orbit1)),
            Claim(ex, "fixedpointfree on Z15 minus 0", False, is_fixedpointfree_on(s, range(1, 15))),
            Claim(ex, "C", [(0,)], compute_c(scheme)),
            Claim(ex, "1-primitive, not 2-primitive, sides agree", (True, False, True),
                  (bool(v.one_primitive), bool(v.two_primitive), bool(v.agree))),
            Claim(ex, "|N|", 15, v.size)]


def all_claims(z7_phi: Optional[Sequence[int]] = None) -> tuple[list[Claim], float]:
    t0 = time.perf_counter()
    claims = z4_small() + z4_large() + z7(z7_phi) + z15()
    return claims, time.perf_counter() - t0
