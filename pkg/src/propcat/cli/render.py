"""DOT and SVG rendering of typed terms.

A term is first flattened into an open port graph: boxes, bureaucracy
triangles, and one wire per connected chain of identities and swaps. The
layout is a pure function of the term, so output is byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from html import escape

from propcat.propification import content
from propcat.cli.backends import TermBackend
from propcat.cli.checker import _atom_type, typecheck
from propcat.cli.terms import Box, Bur, Div, Gath, Id, Par, Seq, Sym, Term, UnitDiv, UnitGath


@dataclass
class Node:
    ident: str
    kind: str  # "in", "out", "box" or "bureaucracy"
    label: str
    inputs: tuple
    outputs: tuple
    note: str = ""


@dataclass
class Wire:
    colour: object
    source: tuple | None = None
    sink: tuple | None = None


@dataclass
class Graph:
    nodes: list[Node] = field(default_factory=list)
    wires: list[Wire] = field(default_factory=list)


class _Builder:
    def __init__(self, backend: TermBackend, show_content: bool):
        self.backend = backend
        self.show_content = show_content
        self.nodes: list[Node] = []
        self.parent: list[int] = []
        self.ends: list[Wire] = []

    def var(self, colour) -> int:
        self.parent.append(len(self.parent))
        self.ends.append(Wire(colour))
        return len(self.parent) - 1

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, u: int, v: int):
        ru, rv = self.find(u), self.find(v)
        if ru != rv:
            keep, drop = self.ends[ru], self.ends[rv]
            keep.source = keep.source or drop.source
            keep.sink = keep.sink or drop.sink
            self.parent[rv] = ru

    def node(self, kind, label, inputs, outputs, note="") -> tuple[list[int], list[int]]:
        n = Node(f"n{len(self.nodes)}", kind, label, tuple(inputs), tuple(outputs), note)
        self.nodes.append(n)
        ins = []
        for j, c in enumerate(inputs):
            v = self.var(c)
            self.ends[v].sink = (n.ident, j)
            ins.append(v)
        outs = []
        for j, c in enumerate(outputs):
            v = self.var(c)
            self.ends[v].source = (n.ident, j)
            outs.append(v)
        return ins, outs

    def build(self, t: Term) -> tuple[list[int], list[int]]:
        if isinstance(t, Seq):
            ins, mid = self.build(t.left)
            mid2, outs = self.build(t.right)
            for u, v in zip(mid, mid2):
                self.union(u, v)
            return ins, outs
        if isinstance(t, Par):
            a, b = self.build(t.left)
            c, d = self.build(t.right)
            return a + c, b + d
        dom, cod = _atom_type(t, self.backend)
        if isinstance(t, Id):
            vs = [self.var(c) for c in dom]
            return vs, vs
        if isinstance(t, Sym):
            vs = [self.var(c) for c in dom]
            k = len(t.left)
            return vs, vs[k:] + vs[:k]
        note = ""
        if self.show_content:
            C = self.backend.base
            note = f"{self.backend.show(content(dom, C))} → {self.backend.show(content(cod, C))}"
        if isinstance(t, Box):
            return self.node("box", self.backend.label(t), dom, cod, note)
        label = {Bur: "bur", Div: "div", Gath: "gath",
                 UnitDiv: "unitdiv", UnitGath: "unitgath"}[type(t)]
        return self.node("bureaucracy", label, dom, cod, note)


def term_graph(t: Term, backend: TermBackend, show_content: bool = False) -> Graph:
    typecheck(t, backend)  # ill-typed seams would leave dangling wires
    b = _Builder(backend, show_content)
    b.nodes.append(None)  # placeholder for the input boundary, fixed below
    ins, outs = b.build(t)
    dom = tuple(b.ends[b.find(v)].colour for v in ins)
    cod = tuple(b.ends[b.find(v)].colour for v in outs)
    b.nodes[0] = Node("in", "in", "in", (), dom)
    b.nodes.append(Node("out", "out", "out", cod, ()))
    for j, v in enumerate(ins):
        b.ends[b.find(v)].source = ("in", j)
    for j, v in enumerate(outs):
        b.ends[b.find(v)].sink = ("out", j)
    roots = sorted({b.find(v) for v in range(len(b.parent))})
    order = {n.ident: i for i, n in enumerate(b.nodes)}
    wires = sorted((b.ends[r] for r in roots),
                   key=lambda w: (order[w.sink[0]], w.sink[1]))
    return Graph(b.nodes, wires)


# -- DOT --------------------------------------------------------------------

def _dot_quote(s: str) -> str:
    # Labels are built from identifiers and integers; "\n" escapes are intended.
    return '"' + s.replace('"', '\\"') + '"'


def _record_escape(s: str) -> str:
    return "".join("\\" + ch if ch in "{}|<>" else ch for ch in s)


def _ports(prefix: str, n: int) -> str:
    return "|".join(f"<{prefix}{j}>" for j in range(n))


def _bureaucracy_orientation(node: Node) -> int:
    return 270 if len(node.inputs) >= len(node.outputs) else 90


def to_dot(g: Graph, backend: TermBackend) -> str:
    lines = ["digraph term {", "  rankdir=LR;",
             '  node [fontname="Helvetica", fontsize=10];',
             '  edge [fontname="Helvetica", fontsize=9];']
    for n in g.nodes:
        label = n.label + (f"\\n{n.note}" if n.note else "")
        if n.kind in ("in", "out"):
            width = len(n.outputs) if n.kind == "in" else len(n.inputs)
            if width:
                prefix = "o" if n.kind == "in" else "i"
                lines.append(f"  {n.ident} [shape=record, style=dashed, "
                             f"label={_dot_quote(_ports(prefix, width))}];")
            else:
                lines.append(f"  {n.ident} [shape=point];")
        elif n.kind == "box":
            fields = [f"{{{_ports('i', len(n.inputs))}}}"] if n.inputs else []
            fields.append(_record_escape(n.label) + (f"\\n{_record_escape(n.note)}" if n.note else ""))
            if n.outputs:
                fields.append(f"{{{_ports('o', len(n.outputs))}}}")
            lines.append(f"  {n.ident} [shape=record, label={_dot_quote('{' + '|'.join(fields) + '}')}];")
        else:
            lines.append(f"  {n.ident} [shape=triangle, orientation={_bureaucracy_orientation(n)}, "
                         f"style=filled, fillcolor=lightgrey, label={_dot_quote(label)}];")
    kinds = {n.ident: n.kind for n in g.nodes}

    def end(ident, port, prefix):
        return ident if kinds[ident] == "bureaucracy" else f"{ident}:{prefix}{port}"

    for w in g.wires:
        src = end(*w.source, "o")
        dst = end(*w.sink, "i")
        lines.append(f"  {src} -> {dst} [label={_dot_quote(backend.show(w.colour))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- SVG --------------------------------------------------------------------

COLUMN = 130
PORT_GAP = 28
BOX_W = 60
MARGIN = 30


def _layout(g: Graph) -> dict[str, tuple[int, int, int, int]]:
    """Column layout: each node sits one column right of everything feeding it."""
    feeds: dict[str, set[str]] = {n.ident: set() for n in g.nodes}
    for w in g.wires:
        feeds[w.sink[0]].add(w.source[0])
    column: dict[str, int] = {}
    for n in g.nodes[:-1]:  # box order is already topological
        column[n.ident] = 1 + max((column[s] for s in feeds[n.ident]), default=-1)
    column["out"] = 1 + max(column.values())
    boxes = {}
    heights: dict[int, int] = {}
    for n in g.nodes:
        col = column[n.ident]
        h = PORT_GAP * max(len(n.inputs), len(n.outputs), 1)
        y = heights.get(col, MARGIN)
        boxes[n.ident] = (MARGIN + col * COLUMN, y, BOX_W, h)
        heights[col] = y + h + PORT_GAP
    return boxes


def _port_xy(box, index, count, side):
    x, y, w, h = box
    py = y + h * (2 * index + 1) // (2 * max(count, 1))
    return (x + w if side == "out" else x), py


def to_svg(g: Graph, backend: TermBackend) -> str:
    boxes = _layout(g)
    width = max(x + w for x, _, w, _ in boxes.values()) + MARGIN
    height = max(y + h for _, y, _, h in boxes.values()) + MARGIN
    by_id = {n.ident: n for n in g.nodes}
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}" font-family="Helvetica" font-size="11">']
    for w in g.wires:
        s, t = by_id[w.source[0]], by_id[w.sink[0]]
        x1, y1 = _port_xy(boxes[s.ident], w.source[1], len(s.outputs), "out")
        x2, y2 = _port_xy(boxes[t.ident], w.sink[1], len(t.inputs), "in")
        mx = (x1 + x2) // 2
        out.append(f'  <path d="M {x1} {y1} C {mx} {y1}, {mx} {y2}, {x2} {y2}" '
                   f'fill="none" stroke="black"/>')
        out.append(f'  <text x="{x1 + 4}" y="{y1 - 4}">{escape(backend.show(w.colour))}</text>')
    for n in g.nodes:
        x, y, w, h = boxes[n.ident]
        cx = x + w // 2
        if n.kind in ("in", "out"):
            side = "out" if n.kind == "in" else "in"
            count = len(n.outputs) if n.kind == "in" else len(n.inputs)
            for j in range(count):
                px, py = _port_xy(boxes[n.ident], j, count, side)
                out.append(f'  <circle cx="{px}" cy="{py}" r="2"/>')
            continue
        if n.kind == "box":
            out.append(f'  <rect x="{x}" y="{y}" width="{w}" height="{h}" '
                       f'fill="white" stroke="black"/>')
        else:
            if _bureaucracy_orientation(n) == 270:
                pts = f"{x},{y} {x},{y + h} {x + w},{y + h // 2}"
            else:
                pts = f"{x + w},{y} {x + w},{y + h} {x},{y + h // 2}"
            out.append(f'  <polygon points="{pts}" fill="lightgrey" stroke="black"/>')
        out.append(f'  <text x="{cx}" y="{y + h // 2 + 4}" text-anchor="middle">'
                   f'{escape(n.label)}</text>')
        if n.note:
            out.append(f'  <text x="{cx}" y="{y + h + 12}" text-anchor="middle" '
                       f'font-size="9">{escape(n.note)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(t: Term, backend: TermBackend, fmt: str = "svg", show_content: bool = False) -> str:
    g = term_graph(t, backend, show_content)
    if fmt == "dot":
        return to_dot(g, backend)
    if fmt == "svg":
        return to_svg(g, backend)
    raise ValueError(f"unknown format {fmt!r}")
