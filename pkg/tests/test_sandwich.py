import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sandwich_nearrings import (
    InvalidArgument,
    InvalidRecipe,
    PhiRecipe,
    SandwichScheme,
    automorphism_group,
    build_phi,
    canonical_recipes,
    closure_as_group,
    cyclic,
    decompose_phi,
    gamma0,
    identity_scheme,
    multiplication_map,
    small_groups,
    trivial_autos,
    validate_scheme,
)


@pytest.fixture
def z7_s():
    g = cyclic(7)
    return g, closure_as_group(g, [multiplication_map(g, 6)])


def z7_recipe(g, s, f5=1):
    return PhiRecipe(g, s, (1, 2, 5, 6), (6, 5), frozenset({0}), {5: f5})


def test_build_phi_z7(z7_s):
    g, s = z7_s
    scheme = build_phi(z7_recipe(g, s))
    assert scheme.phi == (0, 1, 6, 0, 0, 1, 6)
    assert scheme.x == (0, 1, 6)
    # the alternative choice f(5) = 6 gives a different phi
    assert build_phi(z7_recipe(g, s, 6)).phi == (0, 1, 1, 0, 0, 6, 6)


def test_build_phi_z4_and_identity():
    g = cyclic(4)
    scheme = build_phi(PhiRecipe(g, trivial_autos(g), (1,), (1,), frozenset({0}), {}))
    assert scheme.phi == (0, 1, 0, 0) and scheme.x == (0, 1)
    z7 = cyclic(7)
    s = closure_as_group(z7, [multiplication_map(z7, 6)])
    full = build_phi(PhiRecipe(z7, s, tuple(range(1, 7)), (1, 2, 3), frozenset({0, 1, 2}), {}))
    assert full.phi == tuple(range(7))


def test_build_phi_errors(z7_s):
    g, s = z7_s
    with pytest.raises(InvalidRecipe, match="J"):
        build_phi(PhiRecipe(g, s, (1, 2, 5, 6), (6, 5), frozenset(), {6: 1, 5: 1}))
    with pytest.raises(InvalidRecipe, match="outside X1"):
        build_phi(PhiRecipe(g, s, (1, 2, 5, 6), (6, 5), frozenset({0}), {5: 2}))
    z4 = cyclic(4)
    aut = automorphism_group(z4)
    with pytest.raises(InvalidRecipe, match="fixedpointfree"):
        build_phi(PhiRecipe(z4, aut, (2,), (2,), frozenset({0}), {}))
    with pytest.raises(InvalidRecipe, match="invariant"):
        build_phi(PhiRecipe(g, s, (1, 2), (1, 2), frozenset({0}), {2: 1}))


def test_validate_scheme_examples(z7_s):
    g, s = z7_s
    scheme = build_phi(z7_recipe(g, s))
    assert validate_scheme(scheme).ok
    assert scheme.phi[5] == 1 == g.neg(scheme.phi[2])
    z4 = cyclic(4)
    bad = SandwichScheme(z4, automorphism_group(z4), (0, 1, 2, 0))
    rep = validate_scheme(bad)
    assert not rep.ok
    cx = rep.failures["equivariant"]
    assert cx["gamma"] == 1 and cx["s"] == [0, 3, 2, 1]
    assert cx["phi(s(gamma))"] == 0 and cx["s(phi(gamma))"] == 3
    assert validate_scheme(identity_scheme(z4)).ok


def test_validate_scheme_other_failures():
    z4 = cyclic(4)
    e = trivial_autos(z4)
    assert "x1_nonempty" in validate_scheme(SandwichScheme(z4, e, (0, 0, 0, 0))).failures
    assert "range_in_x" in validate_scheme(SandwichScheme(z4, e, (0, 1, 0, 2))).failures
    assert "phi_zero" in validate_scheme(SandwichScheme(z4, e, (1, 1, 2, 3))).failures
    assert "phi_shape" in validate_scheme(SandwichScheme(z4, e, (0, 1))).failures
    # -id fixes 2, which lies in X1
    assert "fixedpointfree_x1" in validate_scheme(identity_scheme(z4, automorphism_group(z4))).failures


def test_decompose_examples(z7_s):
    g, s = z7_s
    r = decompose_phi(build_phi(z7_recipe(g, s)))
    assert r.g == (1, 2, 5, 6) and r.reps == (1, 2)
    assert r.x1() == (1, 6) and r.f == {2: 6}
    r = decompose_phi(identity_scheme(g, s))
    assert r.g == tuple(range(1, 7)) and r.k == ()
    z4 = cyclic(4)
    r = decompose_phi(SandwichScheme(z4, trivial_autos(z4), (0, 1, 0, 0)))
    assert r.g == (1,) and r.x1() == (1,) and r.k == ()
    with pytest.raises(InvalidArgument):
        decompose_phi(SandwichScheme(z4, trivial_autos(z4), (0, 0, 0, 0)))


def test_gamma0_examples(z7_s):
    g, s = z7_s
    z4 = cyclic(4)
    assert gamma0(SandwichScheme(z4, trivial_autos(z4), (0, 1, 0, 0))) == (0, 2, 3)
    assert gamma0(build_phi(z7_recipe(g, s))) == (0, 3, 4)
    assert gamma0(identity_scheme(g)) == (0,)


def test_json_round_trips(z7_s):
    g, s = z7_s
    scheme = build_phi(z7_recipe(g, s))
    assert SandwichScheme.from_json(scheme.to_json()) == scheme
    recipe = z7_recipe(g, s)
    assert PhiRecipe.from_json(recipe.to_json()) == recipe
    for doc in ({}, {"group": {"table": [[0]]}}, {"group": g.to_json(), "autos": [], "phi": "x"}):
        with pytest.raises(InvalidArgument):
            SandwichScheme.from_json(doc)


def _all_schemes(max_order=6):
    out = []
    for g in small_groups(max_order):
        for s in automorphism_group(g).subgroups():
            out.extend(build_phi(r) for r in canonical_recipes(s, 10 ** 9))
    return out


SCHEMES = _all_schemes()


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(SCHEMES))
def test_constructed_schemes_satisfy_invariants(scheme):
    rep = validate_scheme(scheme)
    assert rep.ok, rep.summary()
    phi = scheme.phi
    assert all(phi[phi[a]] == phi[a] for a in range(len(phi)))
    assert build_phi(decompose_phi(scheme)).phi == phi


def test_every_valid_phi_is_constructed():
    """On small groups the canonical recipes reach every valid phi exactly once."""
    import itertools

    for g in small_groups(5):
        for s in automorphism_group(g).subgroups():
            built = sorted(build_phi(r).phi for r in canonical_recipes(s, 10 ** 9))
            assert len(built) == len(set(built))
            brute = []
            for tail in itertools.product(range(g.order), repeat=g.order - 1):
                sch = SandwichScheme(g, s, (0,) + tail)
                if validate_scheme(sch).ok:
                    brute.append(sch.phi)
            assert built == sorted(brute), (g.name, len(s))
