"""Exhaustive enumeration of sandwich schemes over small groups.

For each group, each subgroup S of its automorphism group and each canonical
recipe (minimum-element orbit representatives), exactly one scheme is
produced; schemes are therefore deduplicated by (S, phi) per group, not by
isomorphism of the resulting near-rings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .automorphisms import AutomorphismSet, automorphism_group, regular_orbits
from .catalog import small_groups
from .errors import NearRingError, ResourceLimit
from .groups import FiniteGroup
from .nearring import DEFAULT_MAX_ELEMENTS
from .primitivity import cross_check
from .sandwich import PhiRecipe, SandwichScheme, build_phi


@dataclass(frozen=True)
class SchemeJob:
    group_name: str
    s_index: int  # position of S in automorphism_subgroups(group)
    scheme: SandwichScheme

    @property
    def key(self) -> str:
        """Stable identifier, e.g. ``Z4/S0/0,1,0,0``."""
        return f"{self.group_name}/S{self.s_index}/{','.join(map(str, self.scheme.phi))}"


def canonical_recipes(s: AutomorphismSet, max_elements: int = DEFAULT_MAX_ELEMENTS) -> Iterator[PhiRecipe]:
    """Every recipe whose G is a union of regular orbits, with min-element representatives."""
    g = s.group
    orbs = regular_orbits(s)
    for r in range(1, len(orbs) + 1):
        for chosen in itertools.combinations(orbs, r):
            gset = tuple(sorted(a for o in chosen for a in o))
            reps = tuple(o[0] for o in chosen)
            for jr in range(1, r + 1):
                if g.order ** jr > max_elements:
                    break
                for j in itertools.combinations(range(r), jr):
                    x1 = sorted(a for i in j for a in chosen[i])
                    ks = [reps[i] for i in range(r) if i not in j]
                    for vals in itertools.product(x1, repeat=len(ks)):
                        yield PhiRecipe(g, s, gset, reps, frozenset(j), dict(zip(ks, vals)))


def automorphism_subgroups(g: FiniteGroup) -> list[AutomorphismSet]:
    return automorphism_group(g).subgroups()


def iter_schemes(max_order: int = 8, max_elements: int = DEFAULT_MAX_ELEMENTS,
                 cyclic_only: bool = False, groups: Optional[list] = None) -> Iterator[SchemeJob]:
    for g in groups if groups is not None else small_groups(max_order, cyclic_only):
        for idx, s in enumerate(automorphism_subgroups(g)):
            for recipe in canonical_recipes(s, max_elements):
                yield SchemeJob(g.name, idx, build_phi(recipe))


def census_record(job: SchemeJob, max_elements: int = DEFAULT_MAX_ELEMENTS) -> dict:
    """One census line: identifying fields plus the cross-checked verdict (which embeds the scheme)."""
    sch = job.scheme
    rec = {"key": job.key, "group": job.group_name, "order": sch.gamma.order, "s_order": len(sch.s)}
    try:
        rec["verdict"] = cross_check(sch, max_elements=max_elements, raise_on_mismatch=False).to_json()
    except ResourceLimit as exc:
        rec["scheme"] = sch.to_json()
        rec["skipped"] = str(exc)
    except NearRingError as exc:
        rec["scheme"] = sch.to_json()
        rec["error"] = f"{type(exc).__name__}: {exc}"
    return rec
