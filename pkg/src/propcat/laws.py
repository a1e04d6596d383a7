"""Instance records for symmetric strict monoidal categories and a seeded
law-checking harness.

An :class:`SsmcInstance` bundles the pure functions realising one SSMC.
Composition is stored in diagram order: ``compose(f, g)`` is "f then g".
Law suites are dictionaries mapping a law name to a callable that draws
its own data from a :class:`random.Random` and returns ``None`` on success
or a description of the counterexample.

>>> from propcat.instances.zmod import zmod_instance
>>> check_ssmc_laws(zmod_instance(), seed=7, trials=20).passed
True
"""

from __future__ import annotations

import operator
import random
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from functools import reduce
from typing import Any

from propcat.errors import IllTyped, OutOfBounds, PropcatError

Law = Callable[[random.Random], "str | None"]

#: Per-trial seeds are ``seed * TRIAL_STRIDE + trial``.
TRIAL_STRIDE = 1_000_003
MAX_RESAMPLE = 100


@dataclass(frozen=True, eq=False)
class SsmcInstance:
    """Capability record of one symmetric strict monoidal category.

    ``sample_from`` and ``split`` are optional: the first draws an arrow
    out of a given object, the second draws a list of objects whose tensor
    is the given object. Harness helpers fall back to generic strategies
    when they are absent.
    """

    name: str
    unit: Any
    tensor_obj: Callable[[Any, Any], Any]
    id: Callable[[Any], Any]
    compose: Callable[[Any, Any], Any]
    tensor_arr: Callable[[Any, Any], Any]
    swap: Callable[[Any, Any], Any]
    dom: Callable[[Any], Any]
    cod: Callable[[Any], Any]
    sample_obj: Callable[[random.Random], Any]
    sample_arr: Callable[[Any, Any, random.Random], Any]
    obj_eq: Callable[[Any, Any], bool] = operator.eq
    arr_eq: Callable[[Any, Any], bool] = operator.eq
    sample_from: Callable[[Any, random.Random], Any] | None = None
    split: Callable[[Any, random.Random], tuple] | None = None
    show: Callable[[Any], str] = repr

    def __repr__(self) -> str:
        return f"SsmcInstance({self.name!r})"


@dataclass(frozen=True, eq=False)
class SMFunctorData:
    """A strong symmetric monoidal functor between two instances.

    ``phi_pair(a, b)`` is the component F(a⊗b) → F(a)⊗F(b) and
    ``phi_unit`` the arrow F(I) → I. Inverses are supplied explicitly;
    ``None`` means the instance did not certify invertibility.
    """

    source: SsmcInstance
    target: SsmcInstance
    on_obj: Callable[[Any], Any]
    on_arr: Callable[[Any], Any]
    phi_pair: Callable[[Any, Any], Any]
    phi_unit: Any
    phi_pair_inv: Callable[[Any, Any], Any] | None = None
    phi_unit_inv: Any = None
    name: str = "F"

    def __call__(self, f: Any) -> Any:
        return self.on_arr(f)


def strict_functor(source, target, on_obj, on_arr, name="F") -> SMFunctorData:
    """An SSM functor: every coherence component is an identity."""

    def phi(a, b):
        return target.id(on_obj(source.tensor_obj(a, b)))

    unit_id = target.id(on_obj(source.unit))
    return SMFunctorData(source, target, on_obj, on_arr, phi, unit_id,
                         phi, unit_id, name=name)


def identity_functor(C: SsmcInstance) -> SMFunctorData:
    return strict_functor(C, C, lambda a: a, lambda f: f, name=f"id_{C.name}")


def compose_functors(F: SMFunctorData, G: SMFunctorData) -> SMFunctorData:
    """The functor "F then G", with the composite coherence family."""
    D = G.target

    def phi(a, b):
        return D.compose(G.on_arr(F.phi_pair(a, b)),
                         G.phi_pair(F.on_obj(a), F.on_obj(b)))

    phi_inv = None
    if F.phi_pair_inv is not None and G.phi_pair_inv is not None:
        def phi_inv(a, b):
            return D.compose(G.phi_pair_inv(F.on_obj(a), F.on_obj(b)),
                             G.on_arr(F.phi_pair_inv(a, b)))

    unit = D.compose(G.on_arr(F.phi_unit), G.phi_unit)
    unit_inv = None
    if F.phi_unit_inv is not None and G.phi_unit_inv is not None:
        unit_inv = D.compose(G.phi_unit_inv, G.on_arr(F.phi_unit_inv))
    return SMFunctorData(
        F.source, D,
        lambda a: G.on_obj(F.on_obj(a)),
        lambda f: G.on_arr(F.on_arr(f)),
        phi, unit, phi_inv, unit_inv,
        name=f"{F.name};{G.name}",
    )


@dataclass(frozen=True, eq=False)
class MonoidalNatData:
    """A candidate monoidal natural transformation F ⇒ G."""

    F: SMFunctorData
    G: SMFunctorData
    component: Callable[[Any], Any]
    name: str = "beta"


@dataclass(frozen=True, order=True)
class Failure:
    seed: int
    detail: str


@dataclass(frozen=True)
class LawReport:
    law: str
    trials: int
    seed: int
    failures: tuple[Failure, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.failures

    def failed_laws(self) -> set[str]:
        return {f.detail.split(":", 1)[0] for f in self.failures}

    def to_dict(self) -> dict:
        return {
            "law": self.law,
            "trials": self.trials,
            "seed": self.seed,
            "failures": [{"seed": f.seed, "detail": f.detail}
                         for f in self.failures],
            "passed": self.passed,
        }

    @classmethod
    def merge(cls, law: str, reports, seed: int | None = None) -> LawReport:
        reports = list(reports)
        failures = tuple(sorted(f for r in reports for f in r.failures))
        return cls(law, max(r.trials for r in reports),
                   reports[0].seed if seed is None else seed, failures)

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"[{status}] {self.law}: {self.trials} trials, seed {self.seed}"
        if self.failures:
            line += f", {len(self.failures)} failures"
            for f in self.failures[:5]:
                line += f"\n    seed {f.seed}: {f.detail}"
        return line


LAW_REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["law", "trials", "seed", "failures", "passed"],
    "additionalProperties": False,
    "properties": {
        "law": {"type": "string"},
        "trials": {"type": "integer", "minimum": 1},
        "seed": {"type": "integer"},
        "failures": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["seed", "detail"],
                "additionalProperties": False,
                "properties": {
                    "seed": {"type": "integer"},
                    "detail": {"type": "string"},
                },
            },
        },
        "passed": {"type": "boolean"},
    },
}


def run_laws(name: str, laws: Mapping[str, Law], seed: int,
             trials: int) -> LawReport:
    """Run every law once per trial and collect counterexamples.

    Each (trial, law) pair gets its own deterministic generator, so reports
    are reproducible and independent of law order. Data beyond a desk-scale
    bound (:class:`OutOfBounds`) is redrawn; :class:`IllTyped` from a
    sampler propagates; any other library error counts as a failure.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    failures = []
    for t in range(trials):
        trial_seed = seed * TRIAL_STRIDE + t
        for law_name, law in laws.items():
            detail = _run_one(law, law_name, trial_seed)
            if detail is not None:
                failures.append(Failure(trial_seed, f"{law_name}: {detail}"))
    return LawReport(name, trials, seed, tuple(sorted(failures)))


def _run_one(law: Law, law_name: str, trial_seed: int) -> str | None:
    for attempt in range(MAX_RESAMPLE):
        rng = random.Random(f"{trial_seed}:{law_name}:{attempt}")
        try:
            return law(rng)
        except OutOfBounds:
            continue
        except IllTyped:
            raise
        except PropcatError as exc:
            return f"{type(exc).__name__}: {exc}"
    return f"no in-bounds sample after {MAX_RESAMPLE} attempts"


# -- sampling helpers -------------------------------------------------------

def tensor_all(C: SsmcInstance, objs) -> Any:
    objs = list(objs)
    if not objs:
        return C.unit
    return reduce(C.tensor_obj, objs)


def _check_typed(C, f, dom=None, cod=None):
    if dom is not None and not C.obj_eq(C.dom(f), dom):
        raise IllTyped(f"{C.name}: sampled {C.show(f)} does not start at {dom!r}")
    if cod is not None and not C.obj_eq(C.cod(f), cod):
        raise IllTyped(f"{C.name}: sampled {C.show(f)} does not end at {cod!r}")
    return f


def arrow_between(C: SsmcInstance, a, b, rng: random.Random):
    """A sampled arrow a → b, or ``None`` when the sampler finds none."""
    f = C.sample_arr(a, b, rng)
    return None if f is None else _check_typed(C, f, a, b)


def arrow_from(C: SsmcInstance, a, rng: random.Random):
    """A sampled arrow out of ``a``; falls back to the identity."""
    if C.sample_from is not None:
        return _check_typed(C, C.sample_from(a, rng), a)
    for _ in range(8):
        f = arrow_between(C, a, C.sample_obj(rng), rng)
        if f is not None:
            return f
    return C.id(a)


def random_arrow(C: SsmcInstance, rng: random.Random):
    return arrow_from(C, C.sample_obj(rng), rng)


def same_arrow(C: SsmcInstance, f, g) -> bool:
    return (C.obj_eq(C.dom(f), C.dom(g)) and C.obj_eq(C.cod(f), C.cod(g))
            and C.arr_eq(f, g))


def expect_equal(C: SsmcInstance, lhs, rhs) -> str | None:
    if same_arrow(C, lhs, rhs):
        return None
    return f"{C.show(lhs)} != {C.show(rhs)}"


def expect_obj(C: SsmcInstance, lhs, rhs) -> str | None:
    return None if C.obj_eq(lhs, rhs) else f"{lhs!r} != {rhs!r}"


def first_failure(*details) -> str | None:
    return next((d for d in details if d is not None), None)


# -- SSMC laws --------------------------------------------------------------

def ssmc_laws(C: SsmcInstance) -> dict[str, Law]:
    """Strict-case SSMC axioms, each as a sampled law."""
    t, c, I = C.tensor_obj, C.compose, C.unit

    def strict_associativity(rng):
        a, b, d = (C.sample_obj(rng) for _ in range(3))
        return expect_obj(C, t(t(a, b), d), t(a, t(b, d)))

    def strict_unit(rng):
        a = C.sample_obj(rng)
        return first_failure(expect_obj(C, t(I, a), a), expect_obj(C, t(a, I), a))

    def identity(rng):
        f = random_arrow(C, rng)
        return first_failure(expect_equal(C, c(C.id(C.dom(f)), f), f),
                             expect_equal(C, c(f, C.id(C.cod(f))), f))

    def compose_associativity(rng):
        f = random_arrow(C, rng)
        g = arrow_from(C, C.cod(f), rng)
        h = arrow_from(C, C.cod(g), rng)
        return expect_equal(C, c(c(f, g), h), c(f, c(g, h)))

    def tensor_associativity(rng):
        f, g, h = (random_arrow(C, rng) for _ in range(3))
        lhs = C.tensor_arr(C.tensor_arr(f, g), h)
        return expect_equal(C, lhs, C.tensor_arr(f, C.tensor_arr(g, h)))

    def tensor_unit(rng):
        f = random_arrow(C, rng)
        return first_failure(expect_equal(C, C.tensor_arr(C.id(I), f), f),
                             expect_equal(C, C.tensor_arr(f, C.id(I)), f))

    def tensor_identity(rng):
        a, b = C.sample_obj(rng), C.sample_obj(rng)
        return expect_equal(C, C.tensor_arr(C.id(a), C.id(b)), C.id(t(a, b)))

    def tensor_typing(rng):
        f, g = random_arrow(C, rng), random_arrow(C, rng)
        fg = C.tensor_arr(f, g)
        return first_failure(expect_obj(C, C.dom(fg), t(C.dom(f), C.dom(g))),
                             expect_obj(C, C.cod(fg), t(C.cod(f), C.cod(g))))

    def interchange(rng):
        f, g = random_arrow(C, rng), random_arrow(C, rng)
        h, k = arrow_from(C, C.cod(f), rng), arrow_from(C, C.cod(g), rng)
        lhs = c(C.tensor_arr(f, g), C.tensor_arr(h, k))
        return expect_equal(C, lhs, C.tensor_arr(c(f, h), c(g, k)))

    def swap_involution(rng):
        a, b = C.sample_obj(rng), C.sample_obj(rng)
        return expect_equal(C, c(C.swap(a, b), C.swap(b, a)), C.id(t(a, b)))

    def swap_naturality(rng):
        f, g = random_arrow(C, rng), random_arrow(C, rng)
        lhs = c(C.tensor_arr(f, g), C.swap(C.cod(f), C.cod(g)))
        rhs = c(C.swap(C.dom(f), C.dom(g)), C.tensor_arr(g, f))
        return expect_equal(C, lhs, rhs)

    def hexagon(rng):
        a, b, d = (C.sample_obj(rng) for _ in range(3))
        rhs = c(C.tensor_arr(C.swap(a, b), C.id(d)),
                C.tensor_arr(C.id(b), C.swap(a, d)))
        return expect_equal(C, C.swap(a, t(b, d)), rhs)

    def swap_unit(rng):
        a = C.sample_obj(rng)
        return expect_equal(C, C.swap(a, I), C.id(a))

    def arr_eq_congruence(rng):
        f = random_arrow(C, rng)
        f2 = c(C.id(C.dom(f)), f)
        if not (C.arr_eq(f, f) and C.arr_eq(f2, f) == C.arr_eq(f, f2)):
            return "arr_eq is not reflexive and symmetric"
        if not C.arr_eq(f, f2):
            return None  # reported by the identity law
        h, g = arrow_from(C, C.cod(f), rng), random_arrow(C, rng)
        return first_failure(
            expect_equal(C, c(f2, h), c(f, h)),
            expect_equal(C, C.tensor_arr(f2, g), C.tensor_arr(f, g)),
            expect_equal(C, C.tensor_arr(g, f2), C.tensor_arr(g, f)),
        )

    return {
        "strict_associativity": strict_associativity,
        "strict_unit": strict_unit,
        "identity": identity,
        "compose_associativity": compose_associativity,
        "tensor_associativity": tensor_associativity,
        "tensor_unit": tensor_unit,
        "tensor_identity": tensor_identity,
        "tensor_typing": tensor_typing,
        "interchange": interchange,
        "swap_involution": swap_involution,
        "swap_naturality": swap_naturality,
        "hexagon": hexagon,
        "swap_unit": swap_unit,
        "arr_eq_congruence": arr_eq_congruence,
    }


def check_ssmc_laws(C: SsmcInstance, seed: int = 0,
                    trials: int = 100) -> LawReport:
    return run_laws(f"ssmc[{C.name}]", ssmc_laws(C), seed, trials)


# -- functor laws -----------------------------------------------------------

def sm_functor_laws(F: SMFunctorData) -> dict[str, Law]:
    """Strict-case coherence of a strong symmetric monoidal functor."""
    S, T = F.source, F.target
    Fo, Fa, phi = F.on_obj, F.on_arr, F.phi_pair
    c, t = T.compose, T.tensor_arr

    def preserves_types(rng):
        f = random_arrow(S, rng)
        return first_failure(expect_obj(T, T.dom(Fa(f)), Fo(S.dom(f))),
                             expect_obj(T, T.cod(Fa(f)), Fo(S.cod(f))))

    def identity(rng):
        a = S.sample_obj(rng)
        return expect_equal(T, Fa(S.id(a)), T.id(Fo(a)))

    def composition(rng):
        f = random_arrow(S, rng)
        g = arrow_from(S, S.cod(f), rng)
        return expect_equal(T, Fa(S.compose(f, g)), c(Fa(f), Fa(g)))

    def phi_invertible(rng):
        if F.phi_pair_inv is None or F.phi_unit_inv is None:
            return "no inverse supplied for the coherence family"
        a, b = S.sample_obj(rng), S.sample_obj(rng)
        p, q = phi(a, b), F.phi_pair_inv(a, b)
        u, v = F.phi_unit, F.phi_unit_inv
        return first_failure(
            expect_equal(T, c(p, q), T.id(Fo(S.tensor_obj(a, b)))),
            expect_equal(T, c(q, p), T.id(T.tensor_obj(Fo(a), Fo(b)))),
            expect_equal(T, c(u, v), T.id(Fo(S.unit))),
            expect_equal(T, c(v, u), T.id(T.unit)),
        )

    def phi_naturality(rng):
        f, g = random_arrow(S, rng), random_arrow(S, rng)
        lhs = c(Fa(S.tensor_arr(f, g)), phi(S.cod(f), S.cod(g)))
        rhs = c(phi(S.dom(f), S.dom(g)), t(Fa(f), Fa(g)))
        return expect_equal(T, lhs, rhs)

    def phi_associativity(rng):
        a, b, d = (S.sample_obj(rng) for _ in range(3))
        lhs = c(phi(S.tensor_obj(a, b), d), t(phi(a, b), T.id(Fo(d))))
        rhs = c(phi(a, S.tensor_obj(b, d)), t(T.id(Fo(a)), phi(b, d)))
        return expect_equal(T, lhs, rhs)

    def phi_unit(rng):
        a = S.sample_obj(rng)
        left = c(phi(S.unit, a), t(F.phi_unit, T.id(Fo(a))))
        right = c(phi(a, S.unit), t(T.id(Fo(a)), F.phi_unit))
        return first_failure(expect_equal(T, left, T.id(Fo(a))),
                             expect_equal(T, right, T.id(Fo(a))))

    def phi_symmetry(rng):
        a, b = S.sample_obj(rng), S.sample_obj(rng)
        lhs = c(Fa(S.swap(a, b)), phi(b, a))
        rhs = c(phi(a, b), T.swap(Fo(a), Fo(b)))
        return expect_equal(T, lhs, rhs)

    return {
        "preserves_types": preserves_types,
        "identity": identity,
        "composition": composition,
        "phi_invertible": phi_invertible,
        "phi_naturality": phi_naturality,
        "phi_associativity": phi_associativity,
        "phi_unit": phi_unit,
        "phi_symmetry": phi_symmetry,
    }


def check_sm_functor_laws(F: SMFunctorData, seed: int = 0,
                          trials: int = 100) -> LawReport:
    return run_laws(f"sm_functor[{F.name}]", sm_functor_laws(F), seed, trials)


# -- monoidal natural transformations ---------------------------------------

def monoidal_nat_laws(N: MonoidalNatData) -> dict[str, Law]:
    F, G, beta = N.F, N.G, N.component
    S, T = F.source, F.target
    c = T.compose

    def component_types(rng):
        a = S.sample_obj(rng)
        b = beta(a)
        return first_failure(expect_obj(T, T.dom(b), F.on_obj(a)),
                             expect_obj(T, T.cod(b), G.on_obj(a)))

    def naturality(rng):
        f = random_arrow(S, rng)
        lhs = c(F.on_arr(f), beta(S.cod(f)))
        return expect_equal(T, lhs, c(beta(S.dom(f)), G.on_arr(f)))

    def monoidality(rng):
        a, b = S.sample_obj(rng), S.sample_obj(rng)
        lhs = c(beta(S.tensor_obj(a, b)), G.phi_pair(a, b))
        rhs = c(F.phi_pair(a, b), T.tensor_arr(beta(a), beta(b)))
        return expect_equal(T, lhs, rhs)

    def unit(rng):
        return expect_equal(T, c(beta(S.unit), G.phi_unit), F.phi_unit)

    return {
        "component_types": component_types,
        "naturality": naturality,
        "monoidality": monoidality,
        "unit": unit,
    }


def check_monoidal_nat(N: MonoidalNatData, seed: int = 0,
                       trials: int = 100) -> LawReport:
    return run_laws(f"monoidal_nat[{N.name}]", monoidal_nat_laws(N),
                    seed, trials)
