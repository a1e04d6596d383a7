"""Bureaucracy isomorphisms: the arrows ``[id_c]`` between lists of equal content.

Between two lists there is exactly one bureaucracy arrow when their contents
agree and none otherwise, so every adapter can be computed from the two
lists alone. :func:`factorize` spells that arrow out as elementary dividers
and gatherers placed at explicit wire positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Literal

from propcat.errors import ContentMismatch, NoSuchWire
from propcat.laws import SsmcInstance
from propcat.propification import (
    ObjList,
    PropArrow,
    content,
    lists_eq,
    prop_compose,
    prop_id,
    prop_tensor,
)


def is_bureaucracy(p: PropArrow, C: SsmcInstance) -> bool:
    c = content(p.dom, C)
    return (C.obj_eq(c, content(p.cod, C))
            and C.arr_eq(p.payload, C.id(c)))


def bureaucracy(a: ObjList, b: ObjList, C: SsmcInstance) -> PropArrow:
    """The unique bureaucracy arrow ``a -> b``."""
    a, b = tuple(a), tuple(b)
    ca, cb = content(a, C), content(b, C)
    if not C.obj_eq(ca, cb):
        raise NoSuchWire(f"no bureaucracy arrow {a!r} -> {b!r}: "
                         f"contents {ca!r} and {cb!r} differ")
    return PropArrow(a, b, C.id(ca), C)


def divider(x: Any, y: Any, C: SsmcInstance) -> PropArrow:
    return bureaucracy((C.tensor_obj(x, y),), (x, y), C)


def gatherer(x: Any, y: Any, C: SsmcInstance) -> PropArrow:
    return bureaucracy((x, y), (C.tensor_obj(x, y),), C)


def unit_divider(C: SsmcInstance) -> PropArrow:
    return bureaucracy((C.unit,), (), C)


def unit_gatherer(C: SsmcInstance) -> PropArrow:
    return bureaucracy((), (C.unit,), C)


MoveKind = Literal["divide", "gather", "unit_divide", "unit_gather"]


@dataclass(frozen=True)
class ElementaryMove:
    """One divider or gatherer, ``position`` wires from the left."""

    kind: MoveKind
    position: int
    x: Any = None
    y: Any = None

    def apply(self, l: ObjList, C: SsmcInstance) -> ObjList:
        p = self.position
        if p < 0 or p > len(l):
            raise ValueError(f"position {p} outside a list of length {len(l)}")
        if self.kind == "unit_gather":
            return l[:p] + (C.unit,) + l[p:]
        if self.kind == "unit_divide":
            if p >= len(l) or not C.obj_eq(l[p], C.unit):
                raise ContentMismatch(f"no unit wire at position {p} of {l!r}")
            return l[:p] + l[p + 1:]
        xy = C.tensor_obj(self.x, self.y)
        if self.kind == "gather":
            if p + 1 >= len(l) or not lists_eq(l[p:p + 2], (self.x, self.y), C):
                raise ContentMismatch(f"cannot gather {self.x!r}, {self.y!r} at {p} of {l!r}")
            return l[:p] + (xy,) + l[p + 2:]
        if p >= len(l) or not C.obj_eq(l[p], xy):
            raise ContentMismatch(f"cannot divide {xy!r} at {p} of {l!r}")
        return l[:p] + (self.x, self.y) + l[p + 1:]

    def arrow(self, l: ObjList, C: SsmcInstance) -> PropArrow:
        """The move as an arrow out of ``l``: flanking identities around it."""
        p = self.position
        if self.kind == "unit_gather":
            core, width = unit_gatherer(C), 0
        elif self.kind == "unit_divide":
            core, width = unit_divider(C), 1
        elif self.kind == "gather":
            core, width = gatherer(self.x, self.y, C), 2
        else:
            core, width = divider(self.x, self.y, C), 1
        left, right = prop_id(l[:p], C), prop_id(l[p + width:], C)
        return prop_tensor(prop_tensor(left, core), right)


@dataclass(frozen=True)
class RewiringPath:
    source: ObjList
    target: ObjList
    moves: tuple[ElementaryMove, ...]

    def replay(self, C: SsmcInstance) -> list[ObjList]:
        """The intermediate lists, from ``source`` to ``target``."""
        lists = [self.source]
        for move in self.moves:
            lists.append(move.apply(lists[-1], C))
        if not lists_eq(lists[-1], self.target, C):
            raise ContentMismatch(f"path ends at {lists[-1]!r}, not {self.target!r}")
        return lists

    def evaluate(self, C: SsmcInstance) -> PropArrow:
        lists = self.replay(C)
        result = prop_id(self.source, C)
        for move, l in zip(self.moves, lists):
            result = prop_compose(result, move.arrow(l, C))
        return result


def _gather_moves(l: ObjList, C: SsmcInstance) -> list[ElementaryMove]:
    """Moves collapsing ``l`` left to right into ``[content(l)]``."""
    if not l:
        return [ElementaryMove("unit_gather", 0)]
    moves, acc = [], l[0]
    for y in l[1:]:
        moves.append(ElementaryMove("gather", 0, acc, y))
        acc = C.tensor_obj(acc, y)
    return moves


def _invert(move: ElementaryMove) -> ElementaryMove:
    kind = {"gather": "divide", "divide": "gather",
            "unit_gather": "unit_divide", "unit_divide": "unit_gather"}[move.kind]
    return ElementaryMove(kind, move.position, move.x, move.y)


def factorize(a: ObjList, b: ObjList, C: SsmcInstance) -> RewiringPath:
    """Canonical path: gather ``a`` down to one wire, then divide out to ``b``."""
    a, b = tuple(a), tuple(b)
    bureaucracy(a, b, C)  # raises NoSuchWire
    down = _gather_moves(a, C)
    up = [_invert(m) for m in reversed(_gather_moves(b, C))]
    return RewiringPath(a, b, tuple(down + up))


def auto_adapt(pf: PropArrow, pg: PropArrow, C: SsmcInstance) -> PropArrow:
    """``pf ; bureaucracy ; pg``, plugging content-compatible seams."""
    adapter = bureaucracy(pf.cod, pg.dom, C)
    return prop_compose(pf, prop_compose(adapter, pg))
