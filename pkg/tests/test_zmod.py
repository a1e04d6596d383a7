from __future__ import annotations

import itertools
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from propcat.errors import InvalidArrow, TypeMismatch
from propcat.instances.zmod import (
    MAX_OBJ,
    ZmodArrow,
    hom,
    hom_size,
    is_valid,
    zcompose,
    zid,
    zmod_instance,
    zswap,
    ztensor,
)
from propcat.laws import check_ssmc_laws

Z = zmod_instance()


@st.composite
def arrows(draw, max_obj: int = MAX_OBJ) -> ZmodArrow:
    n = draw(st.integers(0, max_obj))
    m = draw(st.integers(0, max_obj))
    return draw(st.sampled_from(list(hom(n, m))))


def test_compose_example():
    h = zcompose(ZmodArrow(4, 6, 3), ZmodArrow(6, 2, 1))
    assert h == ZmodArrow(4, 2, 1)


def test_identity_residues():
    assert zid(1).k == 0
    assert zid(0).k == 1
    assert zid(7).k == 1


@pytest.mark.parametrize("n, m, k", [(4, 6, 1), (2, 0, 1), (3, 9, 1), (-1, 2, 0)])
def test_invalid_arrows_rejected(n, m, k):
    with pytest.raises(InvalidArrow):
        ZmodArrow(n, m, k)


def test_residue_normalised():
    assert ZmodArrow(4, 6, 9) == ZmodArrow(4, 6, 3)


def test_compose_type_mismatch():
    with pytest.raises(TypeMismatch):
        zcompose(ZmodArrow(4, 6, 3), ZmodArrow(4, 2, 0))


def test_swap_is_identity():
    for n, m in itertools.product(range(6), repeat=2):
        assert zswap(n, m) == zid(gcd(n, m))


@given(arrows(), arrows())
def test_tensor_commutes(f, g):
    assert ztensor(f, g) == ztensor(g, f)


def test_tensor_preserves_validity_exhaustively():
    homs = {(n, m): list(hom(n, m)) for n in range(11) for m in range(11)}
    for (n, m), (n2, m2) in itertools.product(homs, repeat=2):
        for f in homs[n, m]:
            for g in homs[n2, m2]:
                t = ztensor(f, g)
                assert is_valid(t.n, t.m, t.k)


def test_gcd_monoid_exhaustive():
    objs = range(MAX_OBJ + 1)
    for a, b, c in itertools.product(objs, repeat=3):
        assert gcd(gcd(a, b), c) == gcd(a, gcd(b, c))
    assert all(gcd(a, 0) == a == gcd(0, a) for a in objs)


def test_hom_sizes():
    assert [f.k for f in hom(4, 6)] == [0, 3]
    assert hom_size(4, 6) == 2
    assert hom_size(3, 0) == 1 and list(hom(3, 0)) == [ZmodArrow(3, 0, 0)]
    assert hom_size(0, 0) == float("inf")
    assert len(list(hom(0, 0, window=2))) == 5


def test_evaluation_on_elements():
    f = ZmodArrow(4, 6, 3)
    assert [f(x) for x in range(4)] == [0, 3, 0, 3]


def test_ssmc_laws_pass():
    report = check_ssmc_laws(Z, seed=3, trials=200)
    assert report.passed, str(report)
