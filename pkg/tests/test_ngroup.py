import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sandwich_nearrings import (
    InternalInconsistency,
    NGroupAction,
    NotType1,
    SandwichScheme,
    action_from_scheme,
    action_from_transformation,
    aut_n,
    automorphism_group,
    build_annihilating_nearring,
    build_phi,
    canonical_recipes,
    classify,
    closure_as_group,
    cyclic,
    enumerate_centralizer_nearring,
    equiv_classes,
    generators_split,
    invariant_representatives,
    is_faithful,
    multiplication_map,
    n_ideals,
    n_subgroups,
    small_groups,
    transformation_nearring,
)
from sandwich_nearrings.ngroup import annihilator, ideal_violation, product_with_zero

from . import oracles


def z4_small():
    return action_from_transformation(build_annihilating_nearring(cyclic(4), {0, 2, 3}))


def z4_large():
    return action_from_transformation(build_annihilating_nearring(cyclic(4), {0, 3}))


def z7_action():
    g = cyclic(7)
    s = closure_as_group(g, [multiplication_map(g, 6)])
    n = enumerate_centralizer_nearring(SandwichScheme(g, s, (0, 1, 6, 0, 0, 1, 6)))
    return action_from_scheme(n), s


def zero_action(g):
    n = build_annihilating_nearring(g, range(g.order))
    return action_from_transformation(n)


def test_action_examples():
    a = z4_small()
    assert not a.act[:, [0, 2, 3]].any()
    assert a.act[:, 1].tolist() == [a.nearring.values[i][1] for i in range(4)]
    assert not a.act[0].any()
    b, _ = z7_action()
    m = b.nearring.index_of([0, 3, 4])  # m(1) = 3 forces m(6) = -3 = 4
    assert b.act[m, 2] == 4
    assert not zero_action(cyclic(5)).act.any()


def test_action_laws_are_checked():
    n = build_annihilating_nearring(cyclic(4), {0, 2, 3})
    a = action_from_transformation(n)
    broken = a.act.copy()
    broken[1, 1] = (broken[1, 1] + 1) % 4
    with pytest.raises(InternalInconsistency):
        NGroupAction(n, n.gamma, broken).verify_laws()


def test_generators_split_examples():
    assert generators_split(z4_small())[:2] == ((1,), (0, 2, 3))
    assert generators_split(z4_large())[:2] == ((1, 2), (0, 3))
    assert generators_split(zero_action(cyclic(4)))[1] == (0, 1, 2, 3)


def test_faithful_examples():
    assert is_faithful(z4_small()) and is_faithful(z4_large()) and is_faithful(z7_action()[0])
    assert not is_faithful(product_with_zero(z4_small()))
    assert is_faithful(zero_action(cyclic(4)))


def test_annihilator_examples():
    a = z4_small()
    assert annihilator(a, {0}) == [0, 1, 2, 3]
    assert annihilator(a, {1}) == [0]
    assert annihilator(a, range(4)) == [0]


def test_n_ideal_examples():
    a = z4_small()
    m, gamma, i = ideal_violation(a, (0, 2))
    g = a.carrier
    assert (gamma, i) == (1, 2)
    assert g.sub(int(a.act[m, 3]), int(a.act[m, 1])) not in (0, 2)
    f3 = a.nearring.index_of([0, 3, 0, 0])
    assert g.sub(int(a.act[f3, 3]), int(a.act[f3, 1])) == 1
    for act in (a, z4_large(), zero_action(cyclic(4))):
        ideals = n_ideals(act)
        assert (0,) in ideals and (0, 1, 2, 3) in ideals
    z15 = cyclic(15)
    aut = automorphism_group(z15)
    orbit = aut.orbit(1)
    n = enumerate_centralizer_nearring(SandwichScheme(z15, aut, tuple(a if a in orbit else 0 for a in range(15))))
    assert n_ideals(action_from_scheme(n)) == [(0,), tuple(range(15))]


def test_n_subgroup_examples():
    assert (0, 2) in n_subgroups(z4_small())
    assert (0, 2) not in n_subgroups(z4_large())
    g = cyclic(4)
    assert n_subgroups(zero_action(g)) == [(0,), (0, 2), (0, 1, 2, 3)]


def test_classify_examples():
    v = classify(z4_small())
    assert v.type1 and not v.type2
    assert classify(z4_large()).type2
    v = classify(zero_action(cyclic(4)))
    assert not (v.type0 or v.type1 or v.type2)


def test_equiv_classes_examples():
    assert equiv_classes(z4_small()) == [(0, 2, 3), (1,)]
    g = cyclic(5)
    n = build_annihilating_nearring(g, {0})
    assert equiv_classes(action_from_transformation(n)) == [(a,) for a in range(5)]
    assert equiv_classes(zero_action(g)) == [tuple(range(5))]


def test_aut_n_examples():
    assert [m.image for m in aut_n(z4_small())] == [(0, 1, 2, 3)]
    a, s = z7_action()
    found = {m.image for m in aut_n(a)}
    assert {m.image for m in s} <= found
    g = cyclic(5)
    assert len(aut_n(zero_action(g))) == len(automorphism_group(g))


def test_invariant_representatives_examples():
    assert invariant_representatives(z4_small()) == (0, 1)
    assert invariant_representatives(z4_large()) == (0, 1, 2)
    a, _ = z7_action()
    assert generators_split(a)[0] == (1, 2, 5, 6)
    assert equiv_classes(a) == [(0, 3, 4), (1, 5), (2, 6)]
    assert invariant_representatives(a) == (0, 1, 6)


def test_invariant_representatives_needs_type1():
    # f(3) = 0 and f(2) in {0, 2}: closed, and N.2 = {0, 2} is neither Gamma nor {0}
    g = cyclic(4)
    rows = [r for r in build_annihilating_nearring(g, {0, 3}).values.tolist() if r[2] in (0, 2)]
    a = action_from_transformation(transformation_nearring(g, rows))
    assert a.orbit(2) == (0, 2)
    with pytest.raises(NotType1):
        invariant_representatives(a)


def _schemes(max_order=6, cap=300):
    out = []
    for g in small_groups(max_order):
        for s in automorphism_group(g).subgroups():
            out.extend(build_phi(r) for r in canonical_recipes(s, cap))
    return out


SCHEMES = _schemes()


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SCHEMES))
def test_classify_matches_definitions(scheme):
    n = enumerate_centralizer_nearring(scheme)
    a = action_from_scheme(n, verify=True)
    t = scheme.gamma.table.tolist()
    act = [tuple(r) for r in a.act.tolist()]
    faithful, type1, type2 = oracles.types(t, act)
    v = classify(a)
    assert (is_faithful(a), v.type1, v.type2) == (faithful, type1, type2)
    assert n_ideals(a) == [i for i in oracles.all_subgroups(t)
                           if oracles.normal(t, i) and oracles.is_n_ideal(t, act, i)]
    assert n_subgroups(a) == [k for k in oracles.all_subgroups(t) if oracles.is_n_subgroup(act, k)]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SCHEMES))
def test_aut_n_closed_under_inverse(scheme):
    n = enumerate_centralizer_nearring(scheme)
    a = action_from_scheme(n)
    found = aut_n(a)
    imgs = {m.image for m in found}
    for m in found:
        assert m.inverse().image in imgs
        s = np.asarray(m.image)
        assert (s[a.act] == a.act[:, s]).all()
    assert {m.image for m in scheme.s} <= imgs


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SCHEMES))
def test_type2_implies_type1(scheme):
    a = action_from_scheme(enumerate_centralizer_nearring(scheme))
    v = classify(a)
    assert not v.type2 or v.type1
    assert not v.type1 or v.type0
