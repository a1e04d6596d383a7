"""The coloured prop Prop(C) of a symmetric strict monoidal category C.

Objects of Prop(C) are tuples of C-objects (the colours). An arrow
``[f] : a -> b`` is a :class:`PropArrow` whose payload ``f`` is a C-arrow
from ``content(a)`` to ``content(b)``. Lists are rigid: two arrows with the
same payload but different lists are different arrows.

>>> from propcat.instances.zmod import zmod_instance
>>> C = zmod_instance()
>>> content((4, 6), C)
2
>>> lift(C.id(2), (4, 6), (2,), C)
[z(1: 2 -> 2)] : (4, 6) -> (2,)
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import chain
from typing import Any, Callable

from propcat.errors import ContentMismatch, ListMismatch, TypeMismatch
from propcat.laws import (
    LawReport,
    MonoidalNatData,
    SMFunctorData,
    SsmcInstance,
    arrow_between,
    arrow_from,
    compose_functors,
    expect_equal,
    expect_obj,
    first_failure,
    identity_functor,
    monoidal_nat_laws,
    random_arrow,
    run_laws,
    strict_functor,
)

ObjList = tuple


def content(l: ObjList, C: SsmcInstance) -> Any:
    """Tensor of the items of ``l`` by a left fold; the unit when empty."""
    if not l:
        return C.unit
    acc = l[0]
    for x in l[1:]:
        acc = C.tensor_obj(acc, x)
    return acc


def lists_eq(a: ObjList, b: ObjList, C: SsmcInstance) -> bool:
    return len(a) == len(b) and all(C.obj_eq(x, y) for x, y in zip(a, b))


@dataclass(frozen=True, eq=False)
class PropArrow:
    dom: ObjList
    cod: ObjList
    payload: Any
    base: SsmcInstance = field(repr=False)

    def __post_init__(self):
        C = self.base
        for side, l, end in (("domain", self.dom, C.dom),
                             ("codomain", self.cod, C.cod)):
            if not isinstance(l, tuple):
                raise TypeError(f"{side} list must be a tuple, got {l!r}")
            if not C.obj_eq(end(self.payload), content(l, C)):
                raise ContentMismatch(
                    f"{side} of {C.show(self.payload)} is "
                    f"{end(self.payload)!r} but content{l!r} = {content(l, C)!r}")

    def __eq__(self, other):
        if not isinstance(other, PropArrow):
            return NotImplemented
        C = self.base
        return (lists_eq(self.dom, other.dom, C)
                and lists_eq(self.cod, other.cod, C)
                and C.arr_eq(self.payload, other.payload))

    __hash__ = None

    def __repr__(self) -> str:
        return f"[{self.base.show(self.payload)}] : {self.dom!r} -> {self.cod!r}"


def lift(f: Any, a: ObjList, b: ObjList, C: SsmcInstance) -> PropArrow:
    """``[f] : a -> b``; raises :class:`ContentMismatch` on a bad type."""
    return PropArrow(tuple(a), tuple(b), f, C)


def strip(pf: PropArrow) -> Any:
    return pf.payload


def _same_base(pf: PropArrow, pg: PropArrow) -> SsmcInstance:
    if pf.base is not pg.base:
        raise TypeMismatch("arrows live in the propifications of different categories")
    return pf.base


def prop_compose(pf: PropArrow, pg: PropArrow) -> PropArrow:
    """``pf`` then ``pg``; the seam lists must agree element-wise."""
    C = _same_base(pf, pg)
    if not lists_eq(pf.cod, pg.dom, C):
        same = C.obj_eq(content(pf.cod, C), content(pg.dom, C))
        hint = " (contents agree: insert a bureaucracy adapter)" if same else ""
        raise ListMismatch(f"cannot plug {pf.cod!r} into {pg.dom!r}{hint}")
    return PropArrow(pf.dom, pg.cod, C.compose(pf.payload, pg.payload), C)


def prop_tensor(pf: PropArrow, pg: PropArrow) -> PropArrow:
    C = _same_base(pf, pg)
    return PropArrow(pf.dom + pg.dom, pf.cod + pg.cod,
                     C.tensor_arr(pf.payload, pg.payload), C)


def prop_sym(a: ObjList, b: ObjList, C: SsmcInstance) -> PropArrow:
    a, b = tuple(a), tuple(b)
    return PropArrow(a + b, b + a, C.swap(content(a, C), content(b, C)), C)


def prop_id(a: ObjList, C: SsmcInstance) -> PropArrow:
    a = tuple(a)
    return PropArrow(a, a, C.id(content(a, C)), C)


# -- Prop(C) seen as an SSMC ------------------------------------------------

def _split_object(C: SsmcInstance, y, rng: random.Random) -> ObjList:
    if C.split is not None:
        return tuple(C.split(y, rng))
    options = [(y,), (C.unit, y), (y, C.unit)]
    if C.obj_eq(y, C.unit):
        options.append(())
    return rng.choice(options)


def split_list(l: ObjList, rng: random.Random) -> tuple:
    """Random grouping of ``l`` into consecutive sublists (empty groups allowed)."""
    cuts = sorted(rng.sample(range(len(l) + 1), k=min(len(l) + 1, rng.randint(0, 2))))
    groups, start = [], 0
    for cut in cuts + [len(l)]:
        groups.append(tuple(l[start:cut]))
        start = cut
    if rng.random() < 0.2:
        groups.insert(rng.randint(0, len(groups)), ())
    return tuple(groups)


@lru_cache(maxsize=None)
def propify(C: SsmcInstance, max_len: int = 3) -> SsmcInstance:
    """Prop(C) as an :class:`SsmcInstance` whose objects are tuples."""

    # Short lists dominate so bounded instances (Qubits) rarely overflow.
    lengths = [n for n in range(max_len + 1) for _ in range(max(1, 3 - abs(n - 1)))]

    def sample_obj(rng):
        return tuple(C.sample_obj(rng) for _ in range(rng.choice(lengths)))

    def sample_arr(a, b, rng):
        f = arrow_between(C, content(a, C), content(b, C), rng)
        return None if f is None else PropArrow(a, b, f, C)

    def sample_from(a, rng):
        if C.sample_from is None:
            for _ in range(4):
                pf = sample_arr(a, sample_obj(rng), rng)
                if pf is not None:
                    return pf
        f = arrow_from(C, content(a, C), rng)
        return PropArrow(a, _split_object(C, C.cod(f), rng), f, C)

    return SsmcInstance(
        name=f"Prop({C.name})",
        unit=(),
        tensor_obj=lambda a, b: tuple(a) + tuple(b),
        id=lambda a: prop_id(a, C),
        compose=prop_compose,
        tensor_arr=prop_tensor,
        swap=lambda a, b: prop_sym(a, b, C),
        dom=lambda pf: pf.dom,
        cod=lambda pf: pf.cod,
        sample_obj=sample_obj,
        sample_arr=sample_arr,
        obj_eq=lambda a, b: lists_eq(a, b, C),
        arr_eq=lambda pf, pg: pf == pg,
        sample_from=sample_from,
        split=split_list,
        show=repr,
    )


def embed_functor(C: SsmcInstance) -> SMFunctorData:
    """``[_]_C : C -> Prop(C)``, strong but not strict."""

    def divider(a, b):
        return PropArrow((C.tensor_obj(a, b),), (a, b), C.id(C.tensor_obj(a, b)), C)

    def gatherer(a, b):
        return PropArrow((a, b), (C.tensor_obj(a, b),), C.id(C.tensor_obj(a, b)), C)

    return SMFunctorData(
        source=C,
        target=propify(C),
        on_obj=lambda c: (c,),
        on_arr=lambda f: PropArrow((C.dom(f),), (C.cod(f),), f, C),
        phi_pair=divider,
        phi_unit=PropArrow((C.unit,), (), C.id(C.unit), C),
        phi_pair_inv=gatherer,
        phi_unit_inv=PropArrow((), (C.unit,), C.id(C.unit), C),
        name=f"[_]_{C.name}",
    )


def strip_functor(C: SsmcInstance) -> SMFunctorData:
    """``{_}_C : Prop(C) -> C``, strict."""
    return strict_functor(propify(C), C, lambda l: content(l, C), strip,
                          name=f"{{_}}_{C.name}")


# -- functoriality ----------------------------------------------------------

def _image_list(F: SMFunctorData, l: ObjList) -> ObjList:
    return tuple(F.on_obj(c) for c in l)


def phi_list(F: SMFunctorData, l: ObjList) -> Any:
    """The coherence iso ``F({l}) -> {F(l_1), ..., F(l_n)}`` in the target."""
    C, D = F.source, F.target
    if not l:
        return F.phi_unit
    if len(l) == 1:
        return D.id(F.on_obj(l[0]))
    a, b = l[:-1], l[-1:]
    return D.compose(F.phi_pair(content(a, C), content(b, C)),
                     D.tensor_arr(phi_list(F, a), phi_list(F, b)))


def phi_list_inverse(F: SMFunctorData, l: ObjList) -> Any:
    C, D = F.source, F.target
    if not l:
        if F.phi_unit_inv is None:
            raise ValueError(f"{F.name} supplies no inverse for its unit component")
        return F.phi_unit_inv
    if len(l) == 1:
        return D.id(F.on_obj(l[0]))
    if F.phi_pair_inv is None:
        raise ValueError(f"{F.name} supplies no inverse for its coherence family")
    a, b = l[:-1], l[-1:]
    return D.compose(D.tensor_arr(phi_list_inverse(F, a), phi_list_inverse(F, b)),
                     F.phi_pair_inv(content(a, C), content(b, C)))


@dataclass(frozen=True, eq=False)
class PropMorphism:
    """A strict monoidal functor Prop(C) -> Prop(D), given on colours.

    ``on_colour`` returns the image of one colour as a list of D-objects.
    """

    source: SsmcInstance
    target: SsmcInstance
    on_colour: Callable[[Any], ObjList]
    on_arrow: Callable[[PropArrow], PropArrow]
    name: str = "G"

    def on_obj(self, l: ObjList) -> ObjList:
        return tuple(chain.from_iterable(self.on_colour(c) for c in l))

    def __call__(self, pf: PropArrow) -> PropArrow:
        return self.on_arrow(pf)

    def as_functor(self) -> SMFunctorData:
        return strict_functor(propify(self.source), propify(self.target),
                              self.on_obj, self.on_arrow, name=self.name)


def prop_of_functor(F: SMFunctorData) -> PropMorphism:
    """Prop(F): colours ``c |-> [F(c)]``, arrows ``[f] |-> [φ_b ∘ F(f) ∘ φ_a⁻¹]``."""
    D = F.target

    def on_arrow(pf: PropArrow) -> PropArrow:
        payload = D.compose(D.compose(phi_list_inverse(F, pf.dom), F.on_arr(pf.payload)),
                            phi_list(F, pf.cod))
        return PropArrow(_image_list(F, pf.dom), _image_list(F, pf.cod), payload, D)

    return PropMorphism(F.source, D, lambda c: (F.on_obj(c),), on_arrow,
                        name=f"Prop({F.name})")


# -- the monoidal equivalence -----------------------------------------------

def beta(l: ObjList, C: SsmcInstance) -> PropArrow:
    """``[id_{l}] : l -> [{l}]``."""
    c = content(l, C)
    return PropArrow(tuple(l), (c,), C.id(c), C)


def beta_inverse(l: ObjList, C: SsmcInstance) -> PropArrow:
    c = content(l, C)
    return PropArrow((c,), tuple(l), C.id(c), C)


def beta_transformation(C: SsmcInstance) -> MonoidalNatData:
    """β : id ⇒ [{_}_C]_C on Prop(C)."""
    P = propify(C)
    return MonoidalNatData(identity_functor(P),
                           compose_functors(strip_functor(C), embed_functor(C)),
                           lambda l: beta(l, C), name=f"beta[{C.name}]")


def equivalence_laws(C: SsmcInstance, nat: MonoidalNatData | None = None):
    P = propify(C)
    E = embed_functor(C)
    nat = nat or beta_transformation(C)
    bt = nat.component

    def strip_embed_objects(rng):
        c = C.sample_obj(rng)
        return expect_obj(C, content(E.on_obj(c), C), c)

    def strip_embed_arrows(rng):
        f = random_arrow(C, rng)
        return expect_equal(C, strip(E.on_arr(f)), f)

    def beta_unit(rng):
        return expect_equal(P, bt(()), PropArrow((), (C.unit,), C.id(C.unit), C))

    def beta_tensor(rng):
        a, b = P.sample_obj(rng), P.sample_obj(rng)
        ab = C.tensor_obj(content(a, C), content(b, C))
        return expect_equal(P, bt(a + b), PropArrow(a + b, (ab,), C.id(ab), C))

    def beta_invertible(rng):
        l = P.sample_obj(rng)
        return first_failure(
            expect_equal(P, prop_compose(bt(l), beta_inverse(l, C)), prop_id(l, C)),
            expect_equal(P, prop_compose(beta_inverse(l, C), bt(l)),
                         prop_id((content(l, C),), C)),
        )

    laws = {f"beta_{k}": v for k, v in monoidal_nat_laws(nat).items()}
    laws.update(strip_embed_objects=strip_embed_objects,
                strip_embed_arrows=strip_embed_arrows,
                beta_unit=beta_unit, beta_tensor=beta_tensor,
                beta_invertible=beta_invertible)
    return laws


def check_equivalence(C: SsmcInstance, seed: int = 0, trials: int = 100,
                      nat: MonoidalNatData | None = None) -> LawReport:
    """Witnesses that Prop(C), seen as an SSMC, is monoidally equivalent to C."""
    return run_laws(f"equivalence[{C.name}]", equivalence_laws(C, nat), seed, trials)
