"""The diagram term language: AST, tokenizer, parser and printer.

Grammar::

    term    := seq
    seq     := par (";" par)*
    par     := atom ("*" atom)*
    atom    := "id(" objlist ")" | "sym(" objlist "," objlist ")"
             | "bur(" objlist "->" objlist ")" | "div(" obj "," obj ")"
             | "gath(" obj "," obj ")" | "unitdiv" | "unitgath"
             | boxlit | "(" term ")"
    boxlit  := IDENT [ "(" [INT ":"] side "->" side ")" ]
    side    := obj | objlist
    objlist := "[" [obj ("," obj)*] "]"
    obj     := INT | IDENT | objlist

Objects stay raw here (ints, names, nested tuples); a backend turns them
into objects of a concrete category.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from propcat.errors import PropcatError

RawObj = Union[int, str, tuple]


class TermSyntaxError(PropcatError, SyntaxError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at line {line}, column {col}")
        self.message, self.line, self.col = message, line, col


@dataclass(frozen=True)
class Span:
    line: int
    col: int
    start: int
    end: int

    def __str__(self) -> str:
        return f"{self.line}:{self.col}"


def _span():
    return field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Id:
    objs: tuple
    span: Span | None = _span()


@dataclass(frozen=True)
class Sym:
    left: tuple
    right: tuple
    span: Span | None = _span()


@dataclass(frozen=True)
class Box:
    name: str
    param: int | None = None
    dom: tuple | None = None
    cod: tuple | None = None
    span: Span | None = _span()


@dataclass(frozen=True)
class Bur:
    dom: tuple
    cod: tuple
    span: Span | None = _span()


@dataclass(frozen=True)
class Div:
    x: RawObj
    y: RawObj
    span: Span | None = _span()


@dataclass(frozen=True)
class Gath:
    x: RawObj
    y: RawObj
    span: Span | None = _span()


@dataclass(frozen=True)
class UnitDiv:
    span: Span | None = _span()


@dataclass(frozen=True)
class UnitGath:
    span: Span | None = _span()


@dataclass(frozen=True)
class Seq:
    left: Term
    right: Term
    span: Span | None = _span()


@dataclass(frozen=True)
class Par:
    left: Term
    right: Term
    span: Span | None = _span()


Term = Union[Id, Sym, Box, Bur, Div, Gath, UnitDiv, UnitGath, Seq, Par]

KEYWORDS = {"id", "sym", "bur", "div", "gath", "unitdiv", "unitgath"}

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+|\#[^\n]*)
  | (?P<nl>\n)
  | (?P<arrow>->)
  | (?P<int>-?\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
  | (?P<punct>[()\[\],:;*])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens, pos, line, line_start = [], 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise TermSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line, line_start = line + 1, m.end()
        elif kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1, pos))
        pos = m.end()
    if tokens:
        # Point end-of-input errors just past the last token, not at a trailing newline.
        last = tokens[-1]
        tokens.append(Token("eof", "", last.line, last.col + len(last.text), last.pos + len(last.text)))
    else:
        tokens.append(Token("eof", "", 1, 1, 0))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise TermSyntaxError(f"{message}, found {found}", tok.line, tok.col)

    def accept(self, text: str) -> Token | None:
        if self.tok.text == text and self.tok.kind != "eof":
            tok = self.tok
            self.i += 1
            return tok
        return None

    def expect(self, text: str) -> Token:
        return self.accept(text) or self.error(f"expected {text!r}")

    def span_from(self, start: Token) -> Span:
        last = self.tokens[self.i - 1]
        return Span(start.line, start.col, start.pos, last.pos + len(last.text))

    def term(self) -> Term:
        start = self.tok
        t = self.par()
        while self.accept(";"):
            t = Seq(t, self.par(), span=self.span_from(start))
        return t

    def par(self) -> Term:
        start = self.tok
        t = self.atom()
        while self.accept("*"):
            t = Par(t, self.atom(), span=self.span_from(start))
        return t

    def atom(self) -> Term:
        start = self.tok
        if self.accept("("):
            t = self.term()
            self.expect(")")
            return t
        if start.kind != "ident":
            self.error("expected a term")
        self.i += 1
        name = start.text
        if name == "unitdiv":
            return UnitDiv(span=self.span_from(start))
        if name == "unitgath":
            return UnitGath(span=self.span_from(start))
        if name in ("id", "sym", "bur", "div", "gath"):
            self.expect("(")
            if name == "id":
                node = Id(self.objlist())
            elif name == "sym":
                a = self.objlist()
                self.expect(",")
                node = Sym(a, self.objlist())
            elif name == "bur":
                a = self.objlist()
                self.expect("->")
                node = Bur(a, self.objlist())
            else:
                x = self.obj()
                self.expect(",")
                node = (Div if name == "div" else Gath)(x, self.obj())
            self.expect(")")
            return _with_span(node, self.span_from(start))
        if not self.accept("("):
            return Box(name, span=self.span_from(start))
        param = None
        if self.tok.kind == "int" and self.tokens[self.i + 1].text == ":":
            param = int(self.tok.text)
            self.i += 2
        dom = self.side()
        self.expect("->")
        cod = self.side()
        self.expect(")")
        return Box(name, param, dom, cod, span=self.span_from(start))

    def side(self) -> tuple:
        return self.objlist() if self.tok.text == "[" else (self.obj(),)

    def objlist(self) -> tuple:
        self.expect("[")
        items = []
        if not self.accept("]"):
            items.append(self.obj())
            while self.accept(","):
                items.append(self.obj())
            self.expect("]")
        return tuple(items)

    def obj(self) -> RawObj:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return int(tok.text)
        if tok.kind == "ident" and tok.text not in KEYWORDS:
            self.i += 1
            return tok.text
        if tok.text == "[":
            return self.objlist()
        self.error("expected an object")


def _with_span(node, span):
    return type(node)(*[getattr(node, f) for f in node.__dataclass_fields__ if f != "span"],
                      span=span)


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    if p.tok.kind != "eof":
        p.error("expected ';', '*' or end of input")
    return t


# -- printing ---------------------------------------------------------------

def format_obj(x: RawObj) -> str:
    if isinstance(x, tuple):
        return format_objlist(x)
    return str(x)


def format_objlist(xs: tuple) -> str:
    return "[" + ", ".join(format_obj(x) for x in xs) + "]"


def format_term(t: Term) -> str:
    if isinstance(t, Seq):
        right = format_term(t.right)
        if isinstance(t.right, Seq):
            right = f"({right})"
        return f"{format_term(t.left)} ; {right}"
    if isinstance(t, Par):
        left, right = format_term(t.left), format_term(t.right)
        if isinstance(t.left, Seq):
            left = f"({left})"
        if isinstance(t.right, (Seq, Par)):
            right = f"({right})"
        return f"{left} * {right}"
    if isinstance(t, Id):
        return f"id({format_objlist(t.objs)})"
    if isinstance(t, Sym):
        return f"sym({format_objlist(t.left)}, {format_objlist(t.right)})"
    if isinstance(t, Bur):
        return f"bur({format_objlist(t.dom)} -> {format_objlist(t.cod)})"
    if isinstance(t, Div):
        return f"div({format_obj(t.x)}, {format_obj(t.y)})"
    if isinstance(t, Gath):
        return f"gath({format_obj(t.x)}, {format_obj(t.y)})"
    if isinstance(t, UnitDiv):
        return "unitdiv"
    if isinstance(t, UnitGath):
        return "unitgath"
    if t.dom is None:
        return t.name
    param = "" if t.param is None else f"{t.param}: "
    return f"{t.name}({param}{format_objlist(t.dom)} -> {format_objlist(t.cod)})"


def iter_nodes(t: Term):
    """Pre-order traversal."""
    yield t
    if isinstance(t, (Seq, Par)):
        yield from iter_nodes(t.left)
        yield from iter_nodes(t.right)
