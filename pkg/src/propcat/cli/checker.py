"""Type checking, bureaucracy elaboration and evaluation of diagram terms.

Sequential composition demands the two lists at a seam be equal item by
item. When they differ but carry the same content, the seam is *adaptable*:
the unique bureaucracy arrow between them fixes it.
"""

from __future__ import annotations

from typing import Any

from propcat.bureaucracy import bureaucracy, divider, gatherer, unit_divider, unit_gatherer
from propcat.errors import ListMismatch, PropcatError
from propcat.propification import PropArrow, content, lists_eq, prop_compose, prop_id, prop_sym, prop_tensor
from propcat.cli.backends import TermBackend
from propcat.cli.terms import Box, Bur, Div, Gath, Id, Par, Seq, Span, Sym, Term, UnitDiv, UnitGath

ObjList = tuple


class TermTypeError(PropcatError):
    def __init__(self, message: str, location: Span | None, expected: ObjList,
                 found: ObjList, adaptable: bool):
        where = f" at {location}" if location else ""
        super().__init__(f"{message}{where}")
        self.location, self.expected, self.found = location, expected, found
        self.adaptable = adaptable


class NotAdaptable(TermTypeError):
    pass


def _seam_error(cls, t: Seq, found, expected, backend: TermBackend):
    C = backend.base
    adaptable = C.obj_eq(content(found, C), content(expected, C))
    shown = lambda l: "[" + ", ".join(backend.show(x) for x in l) + "]"
    hint = "; the contents agree, so a bureaucracy adapter fits" if adaptable else ""
    return cls(f"seam mismatch: left side ends in {shown(found)}, right side starts "
               f"with {shown(expected)}{hint}", t.span, expected, found, adaptable)


def _atom_type(t: Term, backend: TermBackend) -> tuple[ObjList, ObjList]:
    C = backend.base
    if isinstance(t, Id):
        a = backend.objlist(t.objs)
        return a, a
    if isinstance(t, Sym):
        a, b = backend.objlist(t.left), backend.objlist(t.right)
        return a + b, b + a
    if isinstance(t, Bur):
        a, b = backend.objlist(t.dom), backend.objlist(t.cod)
        if not C.obj_eq(content(a, C), content(b, C)):
            raise TermTypeError("bureaucracy between lists of different content", t.span,
                                b, a, False)
        return a, b
    if isinstance(t, (Div, Gath)):
        x, y = backend.to_obj(t.x), backend.to_obj(t.y)
        joined, split = (C.tensor_obj(x, y),), (x, y)
        return (joined, split) if isinstance(t, Div) else (split, joined)
    if isinstance(t, UnitDiv):
        return (C.unit,), ()
    if isinstance(t, UnitGath):
        return (), (C.unit,)
    if isinstance(t, Box):
        p = backend.box(t)
        return p.dom, p.cod
    raise TypeError(f"not a term: {t!r}")


def typecheck(t: Term, backend: TermBackend) -> tuple[ObjList, ObjList]:
    """The type ``(dom, cod)`` of ``t``, or the first :class:`TermTypeError`."""
    if isinstance(t, Seq):
        a, b = typecheck(t.left, backend)
        b2, c = typecheck(t.right, backend)
        if not lists_eq(b, b2, backend.base):
            raise _seam_error(TermTypeError, t, b, b2, backend)
        return a, c
    if isinstance(t, Par):
        a, b = typecheck(t.left, backend)
        c, d = typecheck(t.right, backend)
        return a + c, b + d
    return _atom_type(t, backend)


def _elaborate(t: Term, backend: TermBackend) -> tuple[Term, ObjList, ObjList]:
    if isinstance(t, Seq):
        left, a, b = _elaborate(t.left, backend)
        right, b2, c = _elaborate(t.right, backend)
        if not lists_eq(b, b2, backend.base):
            err = _seam_error(NotAdaptable, t, b, b2, backend)
            if not err.adaptable:
                raise err
            raw = lambda l: tuple(backend.to_raw(x) for x in l)
            left = Seq(left, Bur(raw(b), raw(b2), span=t.span), span=t.span)
        if left is t.left and right is t.right:
            return t, a, c
        return Seq(left, right, span=t.span), a, c
    if isinstance(t, Par):
        left, a, b = _elaborate(t.left, backend)
        right, c, d = _elaborate(t.right, backend)
        if left is t.left and right is t.right:
            return t, a + c, b + d
        return Par(left, right, span=t.span), a + c, b + d
    a, b = _atom_type(t, backend)
    return t, a, b


def elaborate(t: Term, backend: TermBackend) -> Term:
    """Insert a ``bur`` node at every adaptable seam; well-typed terms come back as is."""
    return _elaborate(t, backend)[0]


def count_bureaucracy(t: Term) -> int:
    if isinstance(t, (Seq, Par)):
        return count_bureaucracy(t.left) + count_bureaucracy(t.right)
    return int(isinstance(t, Bur))


def _eval(t: Term, backend: TermBackend) -> PropArrow:
    C = backend.base
    if isinstance(t, Seq):
        return prop_compose(_eval(t.left, backend), _eval(t.right, backend))
    if isinstance(t, Par):
        return prop_tensor(_eval(t.left, backend), _eval(t.right, backend))
    if isinstance(t, Id):
        return prop_id(backend.objlist(t.objs), C)
    if isinstance(t, Sym):
        return prop_sym(backend.objlist(t.left), backend.objlist(t.right), C)
    if isinstance(t, Bur):
        return bureaucracy(backend.objlist(t.dom), backend.objlist(t.cod), C)
    if isinstance(t, Div):
        return divider(backend.to_obj(t.x), backend.to_obj(t.y), C)
    if isinstance(t, Gath):
        return gatherer(backend.to_obj(t.x), backend.to_obj(t.y), C)
    if isinstance(t, UnitDiv):
        return unit_divider(C)
    if isinstance(t, UnitGath):
        return unit_gatherer(C)
    return backend.box(t)


def evaluate(t: Term, backend: TermBackend) -> PropArrow:
    """Fold a well-typed term into an arrow of Prop(C)."""
    typecheck(t, backend)
    try:
        return _eval(t, backend)
    except ListMismatch as exc:
        raise RuntimeError(f"internal error: typechecked term failed to compose: {exc}") from exc


def underlying(t: Term, backend: TermBackend) -> Any:
    """The arrow of C the term denotes."""
    return evaluate(t, backend).payload
