from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from propcat.cli.terms import (
    Box,
    Bur,
    Div,
    Gath,
    Id,
    Par,
    Seq,
    Sym,
    TermSyntaxError,
    UnitDiv,
    UnitGath,
    format_term,
    parse_term,
)


def test_id_with_two_colours():
    assert parse_term("id([4,6])") == Id((4, 6))


def test_gatherer_then_box():
    t = parse_term("gath(4,6) ; z(1: 2 -> 3)")
    assert t == Seq(Gath(4, 6), Box("z", 1, (2,), (3,)))


def test_unclosed_id_reports_column():
    with pytest.raises(TermSyntaxError) as info:
        parse_term("id(")
    assert (info.value.line, info.value.col) == (1, 4)
    assert isinstance(info.value, SyntaxError)


def test_error_on_second_line():
    with pytest.raises(TermSyntaxError) as info:
        parse_term("id([1]) ;\n  ; id([1])")
    assert (info.value.line, info.value.col) == (2, 3)


def test_unexpected_character():
    with pytest.raises(TermSyntaxError, match="unexpected character"):
        parse_term("id([1]) & id([1])")


def test_precedence_and_associativity():
    a, b, c = (Box(n) for n in "abc")
    assert parse_term("a ; b * c") == Seq(a, Par(b, c))
    assert parse_term("a * b ; c") == Seq(Par(a, b), c)
    assert parse_term("a ; b ; c") == Seq(Seq(a, b), c)
    assert parse_term("a * b * c") == Par(Par(a, b), c)
    assert parse_term("a ; (b ; c)") == Seq(a, Seq(b, c))


def test_all_atoms():
    t = parse_term("sym([1],[2,3]) ; bur([1] -> [1,0]) ; div(4, 6) * gath(A, [B, C]) ; "
                   "unitdiv * unitgath ; CNOT([2] -> [1, 1]) # trailing comment")
    nodes = []

    def walk(u):
        if isinstance(u, (Seq, Par)):
            walk(u.left)
            walk(u.right)
        else:
            nodes.append(u)

    walk(t)
    assert nodes == [Sym((1,), (2, 3)), Bur((1,), (1, 0)), Div(4, 6), Gath("A", ("B", "C")),
                     UnitDiv(), UnitGath(), Box("CNOT", None, (2,), (1, 1))]


def test_spans_do_not_affect_equality():
    t = parse_term("  id([1])")
    assert t.span.col == 3
    assert t == Id((1,))


objs = st.recursive(st.integers(0, 20) | st.sampled_from(["A", "B", "x1"]),
                    lambda inner: st.lists(inner, max_size=2).map(tuple), max_leaves=4)
objlists = st.lists(objs, max_size=3).map(tuple)
sides = st.lists(objs, min_size=0, max_size=2).map(tuple)
atoms = st.one_of(
    st.builds(Id, objlists),
    st.builds(Sym, objlists, objlists),
    st.builds(Bur, objlists, objlists),
    st.builds(Div, objs, objs),
    st.builds(Gath, objs, objs),
    st.just(UnitDiv()),
    st.just(UnitGath()),
    st.builds(Box, st.sampled_from(["z", "f", "CNOT"])),
    st.builds(Box, st.just("z"), st.integers(-3, 9) | st.none(), sides, sides),
)
terms = st.recursive(atoms, lambda inner: st.builds(Seq, inner, inner) | st.builds(Par, inner, inner),
                     max_leaves=8)


@given(terms)
def test_print_parse_round_trip(t):
    assert parse_term(format_term(t)) == t
