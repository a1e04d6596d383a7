from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from propcat.cli.backends import free_backend, zmod_backend
from propcat.cli.checker import TermTypeError
from propcat.cli.render import render, term_graph
from propcat.cli.terms import parse_term

ZB = zmod_backend()


def edges(dot: str) -> list[str]:
    return [line.strip() for line in dot.splitlines() if "->" in line]


def test_identity_is_a_single_wire():
    g = term_graph(parse_term("id([5])"), ZB)
    assert [n.kind for n in g.nodes] == ["in", "out"]
    assert len(g.wires) == 1 and g.wires[0].source == ("in", 0) and g.wires[0].sink == ("out", 0)
    assert edges(render(parse_term("id([5])"), ZB, "dot")) == ['in:o0 -> out:i0 [label="5"];']


def test_divider_fans_out():
    dot = render(parse_term("div(4, 6)"), ZB, "dot")
    es = edges(dot)
    assert sum(e.startswith("in:o0 -> n1") for e in es) == 1
    assert sum(e.startswith("n1 -> out") for e in es) == 2
    assert "orientation=90" in dot


def test_gatherer_points_the_other_way():
    assert "orientation=270" in render(parse_term("gath(4, 6)"), ZB, "dot")


def test_swaps_and_identities_collapse_into_wires():
    g = term_graph(parse_term("sym([1], [2]) ; sym([2], [1]) ; id([1, 2])"), ZB)
    assert len(g.nodes) == 2
    assert [(w.source, w.sink) for w in g.wires] == [(("in", 0), ("out", 0)),
                                                     (("in", 1), ("out", 1))]


def test_crossing_wire():
    g = term_graph(parse_term("sym([3], [5])"), ZB)
    assert [(w.colour, w.source, w.sink) for w in g.wires] == [(5, ("in", 1), ("out", 0)),
                                                              (3, ("in", 0), ("out", 1))]


@pytest.mark.parametrize("fmt", ["dot", "svg"])
def test_deterministic(fmt):
    text = "z(1: [] -> [2]) ; bur([2] -> [4, 6]) ; z(0: [4, 6] -> [])"
    assert render(parse_term(text), ZB, fmt) == render(parse_term(text), ZB, fmt)


def test_svg_is_well_formed():
    t = parse_term("(h ; sym([B], [A]) ; g) * id([B]) ; gath(A, B)")
    root = ET.fromstring(render(t, free_backend(), "svg", show_content=True))
    ns = "{http://www.w3.org/2000/svg}"
    assert root.tag == ns + "svg"
    assert len(root.findall(ns + "rect")) == 2
    assert len(root.findall(ns + "polygon")) == 1


def test_show_content_notes():
    t = parse_term("bur([2] -> [4, 6])")
    assert "2 → 2" in render(t, ZB, "dot", show_content=True)
    assert "→" not in render(t, ZB, "dot")


def test_ill_typed_terms_are_rejected():
    with pytest.raises(TermTypeError):
        render(parse_term("z(1: [] -> [2]) ; z(0: [4, 6] -> [])"), ZB)


def test_unknown_format():
    with pytest.raises(ValueError):
        render(parse_term("id([])"), ZB, "png")
