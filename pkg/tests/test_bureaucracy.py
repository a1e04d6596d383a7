from __future__ import annotations

import random

import pytest

from propcat.bureaucracy import (
    ElementaryMove,
    RewiringPath,
    auto_adapt,
    bureaucracy,
    divider,
    factorize,
    gatherer,
    is_bureaucracy,
    unit_divider,
    unit_gatherer,
)
from propcat.errors import ContentMismatch, NoSuchWire
from propcat.instances.zmod import ZmodArrow, zcompose, zmod_instance
from propcat.propification import content, lift, prop_compose, strip

Z = zmod_instance()


def test_bureaucracy_exists_iff_contents_agree():
    p = bureaucracy((4, 6), (2,), Z)
    assert is_bureaucracy(p, Z)
    with pytest.raises(NoSuchWire):
        bureaucracy((4,), (6,), Z)


def test_elementary_types():
    assert divider(4, 6, Z).dom == (2,) and divider(4, 6, Z).cod == (4, 6)
    assert gatherer(4, 6, Z).cod == (2,)
    assert unit_divider(Z).dom == (0,) and unit_divider(Z).cod == ()
    assert unit_gatherer(Z).dom == ()


def test_moves_apply_and_reject():
    assert ElementaryMove("gather", 1, 4, 6).apply((3, 4, 6), Z) == (3, 2)
    assert ElementaryMove("divide", 0, 4, 6).apply((2, 5), Z) == (4, 6, 5)
    assert ElementaryMove("unit_gather", 1).apply((3,), Z) == (3, 0)
    with pytest.raises(ContentMismatch):
        ElementaryMove("gather", 0, 4, 6).apply((6, 4), Z)
    with pytest.raises(ContentMismatch):
        ElementaryMove("unit_divide", 0).apply((3,), Z)
    with pytest.raises(ValueError):
        ElementaryMove("unit_gather", 5).apply((3,), Z)


def test_factorize_shape():
    path = factorize((4, 6, 9), (1, 0), Z)
    kinds = [m.kind for m in path.moves]
    assert kinds == ["gather", "gather", "divide"]
    lists = path.replay(Z)
    assert lists[0] == (4, 6, 9) and lists[-1] == (1, 0)
    assert path.evaluate(Z) == bureaucracy((4, 6, 9), (1, 0), Z)
    assert factorize((), (), Z).evaluate(Z) == bureaucracy((), (), Z)


def random_walk(a, rng, steps=6):
    """A path of random moves out of ``a``."""
    moves, l = [], tuple(a)
    for _ in range(steps):
        options = [ElementaryMove("unit_gather", rng.randint(0, len(l)))]
        options += [ElementaryMove("gather", i, l[i], l[i + 1]) for i in range(len(l) - 1)]
        options += [ElementaryMove("unit_divide", i) for i, x in enumerate(l) if x == 0]
        for i, x in enumerate(l):
            y = rng.choice([0, x, 2 * x, 1])
            if Z.tensor_obj(x, y) == x:
                options.append(ElementaryMove("divide", i, x, y))
        move = rng.choice(options)
        moves.append(move)
        l = move.apply(l, Z)
    return RewiringPath(tuple(a), l, tuple(moves))


def test_every_path_gives_the_same_arrow():
    rng = random.Random(3)
    for _ in range(500):
        a = tuple(rng.randint(0, 12) for _ in range(rng.randint(0, 3)))
        path = random_walk(a, rng)
        assert path.evaluate(Z) == bureaucracy(a, path.target, Z)


def test_auto_adapt_composes_in_the_base():
    g = lift(ZmodArrow(0, 2, 1), (), (2,), Z)
    f = lift(ZmodArrow(2, 0, 0), (4, 6), (), Z)
    adapted = auto_adapt(g, f, Z)
    assert strip(adapted) == zcompose(strip(g), strip(f))
    assert content(adapted.dom, Z) == 0
