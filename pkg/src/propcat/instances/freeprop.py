"""The free prop over a signature, with equality decided by graph isomorphism.

A :class:`FreeDiagram` is an open port graph. Sources are the domain
boundary ports ``(-1, i)`` and box output ports ``(b, j)``; sinks are box
input ports followed by the codomain boundary ports. ``wires[s]`` is the
source plugged into sink ``s``. Box order is always topological: a box only
reads from the domain or from earlier boxes.

Two diagrams are equal in the free prop iff there is a label-preserving box
bijection that carries one wiring onto the other while fixing the boundary.
That decides the prop axioms (interchange, swap naturality, σ² = id, ...)
without any rewriting.
"""

from __future__ import annotations

import random
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable

from propcat.errors import BoxLimitExceeded, InvalidArrow, TypeMismatch
from propcat.laws import SMFunctorData, SsmcInstance, strict_functor

BOX_CAP = 8

Port = tuple[int, int]


@dataclass(frozen=True)
class Generator:
    name: str
    dom: tuple[str, ...]
    cod: tuple[str, ...]


@dataclass(frozen=True)
class Signature:
    colours: tuple[str, ...]
    generators: tuple[Generator, ...]

    def __post_init__(self):
        known = set(self.colours)
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise InvalidArrow("duplicate generator names")
        for g in self.generators:
            bad = [c for c in g.dom + g.cod if c not in known]
            if bad:
                raise InvalidArrow(f"generator {g.name} uses unknown colours {bad}")

    def __getitem__(self, name: str) -> Generator:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(g.name == name for g in self.generators)


_GEN_LINE = re.compile(
    r"^gen\s+(?P<name>[A-Za-z_]\w*)\s*:\s*\[(?P<dom>[^\]]*)\]\s*->\s*\[(?P<cod>[^\]]*)\]$")
_COLOUR_LINE = re.compile(r"^colou?rs?\s+(?P<names>[A-Za-z_][\w\s,]*)$")


def _colour_list(text: str) -> tuple[str, ...]:
    return tuple(c.strip() for c in text.split(",") if c.strip())


def parse_signature(text: str) -> Signature:
    """Parse lines ``gen name : [a,b] -> [c]`` and optional ``colour A, B``."""
    colours: list[str] = []
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _GEN_LINE.match(line):
            g = Generator(m["name"], _colour_list(m["dom"]), _colour_list(m["cod"]))
            gens.append(g)
            colours += [c for c in g.dom + g.cod if c not in colours]
        elif m := _COLOUR_LINE.match(line):
            colours += [c for c in re.split(r"[\s,]+", m["names"].strip())
                        if c and c not in colours]
        else:
            raise ValueError(f"signature line {lineno}: cannot parse {raw!r}")
    return Signature(tuple(colours), tuple(gens))


def format_signature(sig: Signature) -> str:
    lines = [f"colour {', '.join(sig.colours)}"]
    lines += [f"gen {g.name} : [{','.join(g.dom)}] -> [{','.join(g.cod)}]"
              for g in sig.generators]
    return "\n".join(lines) + "\n"


DEFAULT_SIGNATURE = parse_signature("""
gen f : [A] -> [B]
gen g : [A,B] -> [A]
gen h : [] -> [B,A]
""")


@dataclass(frozen=True, eq=False)
class FreeDiagram:
    dom: tuple[str, ...]
    cod: tuple[str, ...]
    boxes: tuple[Generator, ...]
    wires: tuple[Port, ...]
    _offsets: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        offsets, total = [], 0
        for box in self.boxes:
            offsets.append(total)
            total += len(box.dom)
        object.__setattr__(self, "_offsets", tuple(offsets))
        if len(self.wires) != total + len(self.cod):
            raise InvalidArrow("wiring does not cover every sink exactly once")
        if Counter(self.wires) != Counter(self._all_sources()):
            raise InvalidArrow("every source must be plugged exactly once")
        for s, src in enumerate(self.wires):
            box, j = self._sink(s)
            if src[0] >= 0 and box is not None and src[0] >= box:
                raise InvalidArrow("box order is not topological")
            if self.source_colour(src) != self.sink_colour(s):
                raise InvalidArrow(f"wire colour mismatch at sink {s}")

    def _all_sources(self):
        yield from ((-1, i) for i in range(len(self.dom)))
        for b, box in enumerate(self.boxes):
            yield from ((b, j) for j in range(len(box.cod)))

    def _sink(self, s: int) -> tuple[int | None, int]:
        n_box_sinks = len(self.wires) - len(self.cod)
        if s >= n_box_sinks:
            return None, s - n_box_sinks
        b = max(i for i, off in enumerate(self._offsets) if off <= s
                and len(self.boxes[i].dom) > s - off)
        return b, s - self._offsets[b]

    def box_input(self, b: int, j: int) -> Port:
        return self.wires[self._offsets[b] + j]

    def output(self, k: int) -> Port:
        return self.wires[len(self.wires) - len(self.cod) + k]

    def source_colour(self, src: Port) -> str:
        b, j = src
        return self.dom[j] if b < 0 else self.boxes[b].cod[j]

    def sink_colour(self, s: int) -> str:
        box, j = self._sink(s)
        return self.cod[j] if box is None else self.boxes[box].dom[j]

    def consumers(self) -> dict[Port, tuple[int | None, int]]:
        """Map each source to the sink it feeds, as (box or None, port)."""
        return {src: self._sink(s) for s, src in enumerate(self.wires)}

    def __eq__(self, other):
        if not isinstance(other, FreeDiagram):
            return NotImplemented
        return isomorphic(self, other)

    __hash__ = None

    def __repr__(self) -> str:
        names = ",".join(b.name for b in self.boxes) or "-"
        return f"D[{list(self.dom)} -> {list(self.cod)} | {names}]"


def fid(a) -> FreeDiagram:
    a = tuple(a)
    return FreeDiagram(a, a, (), tuple((-1, i) for i in range(len(a))))


def fswap(a, b) -> FreeDiagram:
    a, b = tuple(a), tuple(b)
    wires = tuple((-1, len(a) + k) for k in range(len(b))) + tuple((-1, k) for k in range(len(a)))
    return FreeDiagram(a + b, b + a, (), wires)


def fgen(g: Generator) -> FreeDiagram:
    wires = tuple((-1, i) for i in range(len(g.dom))) + tuple((0, j) for j in range(len(g.cod)))
    return FreeDiagram(g.dom, g.cod, (g,), wires)


def fcompose(d1: FreeDiagram, d2: FreeDiagram) -> FreeDiagram:
    if d1.cod != d2.dom:
        raise TypeMismatch(f"cannot plug {list(d1.cod)} into {list(d2.dom)}")
    n1 = len(d1.boxes)

    def resolve(src):
        b, j = src
        return d1.output(j) if b < 0 else (b + n1, j)

    n_box_sinks1 = len(d1.wires) - len(d1.cod)
    wires = d1.wires[:n_box_sinks1] + tuple(resolve(s) for s in d2.wires)
    return FreeDiagram(d1.dom, d2.cod, d1.boxes + d2.boxes, wires)


def ftensor(d1: FreeDiagram, d2: FreeDiagram) -> FreeDiagram:
    n1, k1 = len(d1.boxes), len(d1.dom)

    def shift(src):
        b, j = src
        return (-1, j + k1) if b < 0 else (b + n1, j)

    split1 = len(d1.wires) - len(d1.cod)
    split2 = len(d2.wires) - len(d2.cod)
    wires = (d1.wires[:split1] + tuple(shift(s) for s in d2.wires[:split2])
             + d1.wires[split1:] + tuple(shift(s) for s in d2.wires[split2:]))
    return FreeDiagram(d1.dom + d2.dom, d1.cod + d2.cod, d1.boxes + d2.boxes, wires)


# -- equality ---------------------------------------------------------------

def isomorphic(d1: FreeDiagram, d2: FreeDiagram, cap: int = BOX_CAP) -> bool:
    """Boundary-fixing, label-preserving isomorphism of port graphs.

    Assignments forced by the wiring are propagated from the boundary; boxes
    left unconstrained (closed components) are matched by backtracking over
    same-label candidates.
    """
    if len(d1.boxes) > cap or len(d2.boxes) > cap:
        raise BoxLimitExceeded(f"equality oracle is capped at {cap} boxes")
    if d1.dom != d2.dom or d1.cod != d2.cod:
        return False
    if Counter(b.name for b in d1.boxes) != Counter(b.name for b in d2.boxes):
        return False
    cons1, cons2 = d1.consumers(), d2.consumers()

    def match_sources(s1, s2, todo):
        if (s1[0] < 0) != (s2[0] < 0) or s1[1] != s2[1]:
            return False
        if s1[0] >= 0:
            todo.append((s1[0], s2[0]))
        return True

    def match_sinks(t1, t2, todo):
        if (t1[0] is None) != (t2[0] is None) or t1[1] != t2[1]:
            return False
        if t1[0] is not None:
            todo.append((t1[0], t2[0]))
        return True

    def propagate(mapping, used, todo):
        mapping, used = dict(mapping), set(used)
        while todo:
            b1, b2 = todo.pop()
            if b1 in mapping:
                if mapping[b1] != b2:
                    return None
                continue
            if b2 in used or d1.boxes[b1] != d2.boxes[b2]:
                return None
            mapping[b1] = b2
            used.add(b2)
            box = d1.boxes[b1]
            for j in range(len(box.dom)):
                if not match_sources(d1.box_input(b1, j), d2.box_input(b2, j), todo):
                    return None
            for j in range(len(box.cod)):
                if not match_sinks(cons1[(b1, j)], cons2[(b2, j)], todo):
                    return None
        return mapping, used

    todo: list[tuple[int, int]] = []
    for k in range(len(d1.cod)):
        if not match_sources(d1.output(k), d2.output(k), todo):
            return False
    for i in range(len(d1.dom)):
        if not match_sinks(cons1[(-1, i)], cons2[(-1, i)], todo):
            return False
    start = propagate({}, set(), todo)

    def search(state):
        if state is None:
            return False
        mapping, used = state
        free = [b for b in range(len(d1.boxes)) if b not in mapping]
        if not free:
            return True
        b1 = free[0]
        return any(search(propagate(mapping, used, [(b1, b2)]))
                   for b2 in range(len(d2.boxes))
                   if b2 not in used and d2.boxes[b2] == d1.boxes[b1])

    return search(start)


# -- sampling ---------------------------------------------------------------

def _forward(sig: Signature, dom, rng: random.Random, n_boxes: int):
    """Apply ``n_boxes`` random generators to the wires of ``dom``.

    Returns the boxes, the wiring of their input sinks, and the open
    sources left at the end (in a random order).
    """
    open_ports = [((-1, i), c) for i, c in enumerate(dom)]
    boxes, box_wires = [], []
    for b in range(n_boxes):
        avail = Counter(c for _, c in open_ports)
        options = [g for g in sig.generators if not Counter(g.dom) - avail]
        if not options:
            break
        g = rng.choice(options)
        taken = []
        for c in g.dom:
            idx = rng.choice([i for i, (p, col) in enumerate(open_ports)
                              if col == c and i not in taken])
            taken.append(idx)
        box_wires += [open_ports[i][0] for i in taken]
        open_ports = [p for i, p in enumerate(open_ports) if i not in taken]
        pos = rng.randint(0, len(open_ports))
        open_ports[pos:pos] = [((len(boxes), j), c) for j, c in enumerate(g.cod)]
        boxes.append(g)
    rng.shuffle(open_ports)
    return boxes, box_wires, open_ports


def sample_from(sig: Signature, dom, rng: random.Random, max_boxes: int = 2) -> FreeDiagram:
    boxes, box_wires, outs = _forward(sig, tuple(dom), rng, rng.randint(0, max_boxes))
    return FreeDiagram(tuple(dom), tuple(c for _, c in outs), tuple(boxes),
                       tuple(box_wires) + tuple(p for p, _ in outs))


def sample_between(sig: Signature, dom, cod, rng: random.Random,
                   max_boxes: int = 2, attempts: int = 30) -> FreeDiagram | None:
    dom, cod = tuple(dom), tuple(cod)
    for _ in range(attempts):
        boxes, box_wires, outs = _forward(sig, dom, rng, rng.randint(0, max_boxes))
        if Counter(c for _, c in outs) != Counter(cod):
            continue
        outputs = []
        for c in cod:
            i = next(i for i, (_, col) in enumerate(outs) if col == c)
            outputs.append(outs.pop(i)[0])
        return FreeDiagram(dom, cod, tuple(boxes), tuple(box_wires) + tuple(outputs))
    return None


def _split_tuple(a, rng: random.Random) -> tuple:
    a = tuple(a)
    cuts = sorted(rng.sample(range(len(a) + 1), k=min(len(a) + 1, rng.randint(0, 2))))
    groups, start = [], 0
    for cut in cuts + [len(a)]:
        groups.append(a[start:cut])
        start = cut
    return tuple(groups)


def free_prop(sig: Signature = DEFAULT_SIGNATURE, max_boxes: int = 2,
              cap: int = BOX_CAP) -> SsmcInstance:
    """The free prop over ``sig``; objects are tuples of colour names."""
    colours = sig.colours

    def sample_obj(rng):
        return tuple(rng.choice(colours) for _ in range(rng.randint(0, 2))) if colours else ()

    return SsmcInstance(
        name="free",
        unit=(),
        tensor_obj=lambda a, b: tuple(a) + tuple(b),
        id=fid,
        compose=fcompose,
        tensor_arr=ftensor,
        swap=fswap,
        dom=lambda d: d.dom,
        cod=lambda d: d.cod,
        sample_obj=sample_obj,
        sample_arr=lambda a, b, rng: sample_between(sig, a, b, rng, max_boxes),
        arr_eq=lambda d1, d2: isomorphic(d1, d2, cap),
        sample_from=lambda a, rng: sample_from(sig, a, rng, max_boxes),
        split=_split_tuple,
    )


def generator(sig: Signature, name: str) -> FreeDiagram:
    return fgen(sig[name])


# -- interpretation ---------------------------------------------------------

def evaluate_diagram(d: FreeDiagram, target: SsmcInstance,
                     on_colour: Callable[[str], Any],
                     on_generator: Callable[[Generator], Any]) -> Any:
    """Interpret ``d`` in ``target`` box by box, routing wires with swaps."""

    def wire_obj(ports):
        objs = [on_colour(colour_of[p]) for p in ports]
        acc = target.unit
        for o in objs:
            acc = target.tensor_obj(acc, o)
        return acc

    def route(current, wanted):
        """Arrow permuting ``current`` ports into the order ``wanted``."""
        arrow = target.id(wire_obj(current))
        current = list(current)
        for pos, port in enumerate(wanted):
            i = current.index(port)
            while i > pos:
                left, (x, y), right = current[:i - 1], current[i - 1:i + 1], current[i + 1:]
                step = target.tensor_arr(
                    target.tensor_arr(target.id(wire_obj(left)),
                                      target.swap(on_colour(colour_of[x]), on_colour(colour_of[y]))),
                    target.id(wire_obj(right)))
                arrow = target.compose(arrow, step)
                current[i - 1], current[i] = y, x
                i -= 1
        return arrow

    colour_of = {(-1, i): c for i, c in enumerate(d.dom)}
    for b, box in enumerate(d.boxes):
        colour_of.update({(b, j): c for j, c in enumerate(box.cod)})
    current = [(-1, i) for i in range(len(d.dom))]
    result = target.id(wire_obj(current))
    for b, box in enumerate(d.boxes):
        ins = [d.box_input(b, j) for j in range(len(box.dom))]
        rest = [p for p in current if p not in ins]
        result = target.compose(result, route(current, ins + rest))
        step = target.tensor_arr(on_generator(box), target.id(wire_obj(rest)))
        result = target.compose(result, step)
        current = [(b, j) for j in range(len(box.cod))] + rest
    outs = [d.output(k) for k in range(len(d.cod))]
    return target.compose(result, route(current, outs))


def interpretation(source: SsmcInstance, target: SsmcInstance,
                   on_colour: Callable[[str], Any],
                   on_generator: Callable[[Generator], Any],
                   name: str = "interp") -> SMFunctorData:
    """The strict prop morphism free(sig) -> target fixed by generator images."""

    def on_obj(a):
        acc = target.unit
        for c in a:
            acc = target.tensor_obj(acc, on_colour(c))
        return acc

    return strict_functor(source, target, on_obj,
                          lambda d: evaluate_diagram(d, target, on_colour, on_generator),
                          name=name)
