from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from propcat.errors import ContentMismatch, ListMismatch, TypeMismatch
from propcat.instances.qubits import qubits_instance
from propcat.instances.zmod import ZmodArrow, hom, zcompose, zmod_instance, zswap
from propcat.laws import check_sm_functor_laws, check_ssmc_laws
from propcat.propification import (
    PropArrow,
    beta,
    beta_inverse,
    content,
    embed_functor,
    lift,
    phi_list,
    prop_compose,
    prop_id,
    prop_sym,
    prop_tensor,
    propify,
    split_list,
    strip,
    strip_functor,
)

Z = zmod_instance()

objs = st.integers(0, 12)
lists = st.lists(objs, max_size=4).map(tuple)


def test_content_is_a_left_fold():
    assert content((), Z) == 0
    assert content((4,), Z) == 4
    assert content((4, 6, 9), Z) == 1


def test_lift_checks_content():
    p = lift(ZmodArrow(2, 2, 1), (4, 6), (2,), Z)
    assert p.dom == (4, 6) and strip(p) == ZmodArrow(2, 2, 1)
    with pytest.raises(ContentMismatch):
        lift(ZmodArrow(2, 2, 1), (4,), (2,), Z)


def test_arrows_compare_by_all_three_parts():
    f = ZmodArrow(2, 2, 1)
    assert lift(f, (4, 6), (2,), Z) == lift(f, (4, 6), (2,), Z)
    assert lift(f, (4, 6), (2,), Z) != lift(f, (6, 4), (2,), Z)
    with pytest.raises(TypeError):
        hash(lift(f, (2,), (2,), Z))


def test_compose_needs_equal_lists():
    f = lift(ZmodArrow(0, 2, 1), (), (2,), Z)
    g = lift(ZmodArrow(2, 0, 0), (4, 6), (), Z)
    with pytest.raises(ListMismatch, match="bureaucracy"):
        prop_compose(f, g)


def test_compose_needs_same_base():
    with pytest.raises(TypeMismatch):
        prop_compose(prop_id((2,), Z), prop_id((2,), zmod_instance()))


@given(lists, lists)
def test_symmetry_payload(a, b):
    s = prop_sym(a, b, Z)
    assert s.dom == a + b and s.cod == b + a
    assert strip(s) == zswap(content(a, Z), content(b, Z))


@given(lists, st.data())
def test_strip_preserves_composition(a, data):
    c1 = content(a, Z)
    m = data.draw(objs)
    f = data.draw(st.sampled_from(list(hom(c1, m))))
    g = data.draw(st.sampled_from(list(hom(m, data.draw(objs)))))
    pf = lift(f, a, (m,), Z)
    pg = lift(g, (m,), (g.m,), Z)
    assert strip(prop_compose(pf, pg)) == zcompose(f, g)
    assert strip(prop_tensor(pf, pg)) == Z.tensor_arr(f, g)


def test_beta_components():
    b = beta((4, 6), Z)
    assert b.dom == (4, 6) and b.cod == (2,) and strip(b) == Z.id(2)
    assert prop_compose(b, beta_inverse((4, 6), Z)) == prop_id((4, 6), Z)
    assert beta((), Z).cod == (0,)


def test_phi_is_identity_on_singletons():
    E = embed_functor(Z)
    assert phi_list(E, (5,)) == prop_id((5,), Z)


def test_split_list_keeps_order():
    rng = random.Random(0)
    for _ in range(100):
        groups = split_list((1, 2, 3), rng)
        assert tuple(x for g in groups for x in g) == (1, 2, 3)


@settings(deadline=None)
@given(st.integers(0, 10_000))
def test_propify_is_an_ssmc(seed):
    assert check_ssmc_laws(propify(Z), seed=seed, trials=3).passed


def test_embed_and_strip_are_monoidal():
    for C in (Z, qubits_instance(3)):
        for F in (embed_functor(C), strip_functor(C)):
            report = check_sm_functor_laws(F, seed=1, trials=100)
            assert report.passed, str(report)
