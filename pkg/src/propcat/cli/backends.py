"""Term backends: how raw syntax objects and box literals map into a category."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from propcat.errors import PropcatError
from propcat.instances.freeprop import DEFAULT_SIGNATURE, Signature, free_prop, fgen, parse_signature
from propcat.instances.qubits import GATES, qubits_instance
from propcat.instances.zmod import ZmodArrow, zmod_instance
from propcat.laws import SsmcInstance
from propcat.propification import PropArrow, content
from propcat.cli.terms import Box, RawObj, Span


class TermResolveError(PropcatError):
    """A box literal or object that the backend cannot interpret."""

    def __init__(self, message: str, span: Span | None = None):
        where = f" at {span}" if span else ""
        super().__init__(f"{message}{where}")
        self.span = span


@dataclass(frozen=True)
class TermBackend:
    name: str
    base: SsmcInstance
    to_obj: Callable[[RawObj], Any]
    to_raw: Callable[[Any], RawObj]
    resolve_box: Callable[[Box, Callable], PropArrow]

    def objlist(self, raw: tuple) -> tuple:
        return tuple(self.to_obj(x) for x in raw)

    def box(self, node: Box) -> PropArrow:
        try:
            return self.resolve_box(node, self.objlist)
        except TermResolveError:
            raise
        except PropcatError as exc:
            raise TermResolveError(f"bad box {node.name}: {exc}", node.span) from exc

    def label(self, node: Box) -> str:
        return node.name if node.param is None else f"{node.name}({node.param})"

    def show(self, x: Any) -> str:
        raw = self.to_raw(x)
        if isinstance(raw, tuple):
            return "[" + ",".join(str(r) for r in raw) + "]"
        return str(raw)


def _int_obj(kind: str):
    def convert(x):
        if isinstance(x, bool) or not isinstance(x, int) or x < 0:
            raise TermResolveError(f"{kind} objects are non-negative integers, got {x!r}")
        return x
    return convert


def zmod_backend() -> TermBackend:
    Z = zmod_instance()
    to_obj = _int_obj("zmod")

    def resolve(node: Box, objlist) -> PropArrow:
        if node.name != "z" or node.param is None or node.dom is None:
            raise TermResolveError(f"zmod boxes are written z(k: dom -> cod), got {node.name}",
                                   node.span)
        a, b = objlist(node.dom), objlist(node.cod)
        return PropArrow(a, b, ZmodArrow(content(a, Z), content(b, Z), node.param), Z)

    return TermBackend("zmod", Z, to_obj, lambda x: x, resolve)


def qubits_backend(max_wires: int = 3) -> TermBackend:
    Q = qubits_instance(max_wires)

    def resolve(node: Box, objlist) -> PropArrow:
        gate = GATES.get(node.name)
        if gate is None:
            raise TermResolveError(f"unknown gate {node.name}; known: {', '.join(GATES)}",
                                   node.span)
        if node.param is not None:
            raise TermResolveError(f"gate {node.name} takes no parameter", node.span)
        a = objlist(node.dom) if node.dom is not None else (1,) * gate.n
        b = objlist(node.cod) if node.cod is not None else (1,) * gate.m
        return PropArrow(a, b, gate, Q)

    return TermBackend("qubits", Q, _int_obj("qubits"), lambda x: x, resolve)


def free_backend(sig: Signature = DEFAULT_SIGNATURE) -> TermBackend:
    F = free_prop(sig)

    def to_obj(x):
        names = x if isinstance(x, tuple) else (x,)
        for c in names:
            if c not in sig.colours:
                raise TermResolveError(f"unknown colour {c!r}")
        return tuple(names)

    def to_raw(x):
        return x[0] if len(x) == 1 else tuple(x)

    def resolve(node: Box, objlist) -> PropArrow:
        if node.name not in sig:
            raise TermResolveError(f"unknown generator {node.name}", node.span)
        if node.param is not None:
            raise TermResolveError(f"generator {node.name} takes no parameter", node.span)
        g = sig[node.name]
        a = objlist(node.dom) if node.dom is not None else tuple((c,) for c in g.dom)
        b = objlist(node.cod) if node.cod is not None else tuple((c,) for c in g.cod)
        return PropArrow(a, b, fgen(g), F)

    return TermBackend("free", F, to_obj, to_raw, resolve)


BACKENDS = ("zmod", "qubits", "free")


def get_backend(name: str, signature: str | Path | None = None) -> TermBackend:
    if name == "zmod":
        return zmod_backend()
    if name == "qubits":
        return qubits_backend()
    if name == "free":
        sig = parse_signature(Path(signature).read_text()) if signature else DEFAULT_SIGNATURE
        return free_backend(sig)
    raise ValueError(f"unknown instance {name!r}; choose from {', '.join(BACKENDS)}")
