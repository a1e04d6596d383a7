"""The scalable functor S(P) = Prop(P̄) and its comonad structure.

A colour of S(P) is a whole object of P, so a wire of S(P) is a bundle of
P-wires. An object of S(P) therefore reads as a grouped list; grouping is a
view over :mod:`propcat.propification`, not a separate type.

* ``counit`` (⟨_⟩_P) forgets the grouping: ``[f] |-> f``.
* ``comult`` (ν_P) puts every colour into its own singleton group one
  level up: ``(x_1, ..., x_n) |-> ((x_1,), ..., (x_n,))`` and ``[f] |-> [[f]]``.
  This is Prop([_]_P̄) computed directly.
"""

from __future__ import annotations

from typing import Any

from propcat.laws import (
    LawReport,
    SMFunctorData,
    SsmcInstance,
    expect_equal,
    expect_obj,
    first_failure,
    random_arrow,
    run_laws,
    strict_functor,
)
from propcat.propification import (
    ObjList,
    PropArrow,
    PropMorphism,
    content,
    embed_functor,
    phi_list,
    prop_of_functor,
    propify,
    strip,
)


def scalable(P: SsmcInstance) -> SsmcInstance:
    """S(P) as an instance."""
    return propify(P)


def flatten(groups: ObjList, P: SsmcInstance) -> Any:
    """The P-object carried by a grouped list."""
    return content(groups, P)


def counit(sp: PropArrow) -> Any:
    return strip(sp)


def counit_functor(P: SsmcInstance) -> SMFunctorData:
    """⟨_⟩_P : S(P) -> P as a strict functor."""
    return strict_functor(propify(P), P, lambda a: content(a, P), strip,
                          name=f"<_>_{P.name}")


def comult_obj(a: ObjList) -> ObjList:
    return tuple((x,) for x in a)


def comult(sp: PropArrow) -> PropArrow:
    """ν(sp), an arrow of S(S(P))."""
    return PropArrow(comult_obj(sp.dom), comult_obj(sp.cod), sp, propify(sp.base))


def comult_functor(P: SsmcInstance) -> SMFunctorData:
    """ν_P : S(P) -> S(S(P)) as a strict functor."""
    SP = propify(P)
    return strict_functor(SP, propify(SP), comult_obj, comult, name=f"nu_{P.name}")


def is_singleton_regrouping(a: ObjList) -> bool:
    """Whether every colour of the S²(P) object ``a`` is a one-element group."""
    return all(isinstance(g, tuple) and len(g) == 1 for g in a)


def s_of_morphism(G: SMFunctorData) -> PropMorphism:
    """S(G) for a strict prop morphism G : P -> Q."""
    Q = G.target

    def on_arrow(sp: PropArrow) -> PropArrow:
        return PropArrow(tuple(G.on_obj(x) for x in sp.dom),
                         tuple(G.on_obj(x) for x in sp.cod),
                         G.on_arr(sp.payload), Q)

    return PropMorphism(G.source, Q, lambda x: (G.on_obj(x),), on_arrow,
                        name=f"S({G.name})")


# -- law suites -------------------------------------------------------------

def adjunction_laws(C: SsmcInstance, P: SsmcInstance,
                    counit_of=counit_functor) -> dict:
    """Triangle identities; ``counit_of`` is injectable for mutation tests."""
    PC = propify(C)
    eps_P = counit_of(P)
    eps_PC = counit_of(PC)
    emb_P = embed_functor(P)
    unit_prop = prop_of_functor(embed_functor(C)).as_functor()

    def triangle_prop_objects(rng):
        x = P.sample_obj(rng)
        return expect_obj(P, eps_P.on_obj(emb_P.on_obj(x)), x)

    def triangle_prop_arrows(rng):
        f = random_arrow(P, rng)
        return expect_equal(P, eps_P.on_arr(emb_P.on_arr(f)), f)

    def triangle_ssmc_objects(rng):
        a = PC.sample_obj(rng)
        return expect_obj(PC, eps_PC.on_obj(unit_prop.on_obj(a)), a)

    def triangle_ssmc_arrows(rng):
        pf = random_arrow(PC, rng)
        return expect_equal(PC, eps_PC.on_arr(unit_prop.on_arr(pf)), pf)

    return {
        "triangle_prop_objects": triangle_prop_objects,
        "triangle_prop_arrows": triangle_prop_arrows,
        "triangle_ssmc_objects": triangle_ssmc_objects,
        "triangle_ssmc_arrows": triangle_ssmc_arrows,
    }


def check_adjunction(C: SsmcInstance, P: SsmcInstance, seed: int = 0,
                     trials: int = 100, counit_of=counit_functor) -> LawReport:
    return run_laws(f"adjunction[{C.name},{P.name}]",
                    adjunction_laws(C, P, counit_of), seed, trials)


def comonad_laws(P: SsmcInstance, counit_of=counit_functor) -> dict:
    SP = propify(P)
    S2P = propify(SP)
    eps_SP = counit_of(SP)
    S_eps = s_of_morphism(counit_of(P))
    S_nu = s_of_morphism(comult_functor(P))

    def counit_left(rng):
        sp = random_arrow(SP, rng)
        nu = comult(sp)
        return first_failure(expect_obj(SP, eps_SP.on_obj(nu.dom), sp.dom),
                             expect_equal(SP, eps_SP.on_arr(nu), sp))

    def counit_right(rng):
        sp = random_arrow(SP, rng)
        nu = comult(sp)
        return first_failure(expect_obj(SP, S_eps.on_obj(nu.dom), sp.dom),
                             expect_equal(SP, S_eps(nu), sp))

    def coassociativity(rng):
        sp = random_arrow(SP, rng)
        nu = comult(sp)
        return expect_equal(propify(S2P), comult(nu), S_nu(nu))

    def singleton_regrouping(rng):
        sp = random_arrow(SP, rng)
        nu = comult(sp)
        ok = is_singleton_regrouping(nu.dom) and is_singleton_regrouping(nu.cod)
        return None if ok else f"{nu!r} is not a singleton regrouping"

    def empty_group(rng):
        # The unit colour (an empty bundle) is a genuine wire of S(P).
        sp = SP.id((P.unit,))
        nu = comult(sp)
        return first_failure(expect_equal(SP, eps_SP.on_arr(nu), sp),
                             expect_equal(SP, S_eps(nu), sp),
                             expect_equal(propify(S2P), comult(nu), S_nu(nu)))

    return {
        "counit_left": counit_left,
        "counit_right": counit_right,
        "coassociativity": coassociativity,
        "singleton_regrouping": singleton_regrouping,
        "empty_group": empty_group,
    }


def check_comonad_laws(P: SsmcInstance, seed: int = 0, trials: int = 100,
                       counit_of=counit_functor) -> LawReport:
    return run_laws(f"comonad[{P.name}]", comonad_laws(P, counit_of), seed, trials)


def naturality_laws(F: SMFunctorData | None = None,
                    G: SMFunctorData | None = None) -> dict:
    """Naturality of [_] against Prop(F) and of ⟨_⟩ against S(G).

    ``F`` is any SM functor C -> D; ``G`` a strict prop morphism P -> Q.
    """
    laws = {}
    if F is not None:
        C, D = F.source, F.target
        PF = prop_of_functor(F)
        emb_C, emb_D = embed_functor(C), embed_functor(D)
        PD = propify(D)

        def unit_objects(rng):
            c = C.sample_obj(rng)
            return expect_obj(PD, PF.on_obj(emb_C.on_obj(c)), emb_D.on_obj(F.on_obj(c)))

        def unit_arrows(rng):
            f = random_arrow(C, rng)
            return expect_equal(PD, PF(emb_C.on_arr(f)), emb_D.on_arr(F.on_arr(f)))

        def unit_singleton_phi(rng):
            # φ_[c] is the identity, so the conjugation in Prop(F) vanishes.
            c = C.sample_obj(rng)
            return expect_equal(D, phi_list(F, (c,)), D.id(F.on_obj(c)))

        laws.update(unit_objects=unit_objects, unit_arrows=unit_arrows,
                    unit_singleton_phi=unit_singleton_phi)
    if G is not None:
        P, Q = G.source, G.target
        SG = s_of_morphism(G)
        SP = propify(P)

        def counit_objects(rng):
            a = SP.sample_obj(rng)
            return expect_obj(Q, content(SG.on_obj(a), Q), G.on_obj(content(a, P)))

        def counit_arrows(rng):
            sp = random_arrow(SP, rng)
            return expect_equal(Q, counit(SG(sp)), G.on_arr(counit(sp)))

        def s_agrees_with_prop(rng):
            sp = random_arrow(SP, rng)
            return expect_equal(propify(Q), SG(sp), prop_of_functor(G)(sp))

        laws.update(counit_objects=counit_objects, counit_arrows=counit_arrows,
                    s_agrees_with_prop=s_agrees_with_prop)
    return laws


def check_naturality(F: SMFunctorData | None = None, G: SMFunctorData | None = None,
                     seed: int = 0, trials: int = 100) -> LawReport:
    names = ",".join(x.name for x in (F, G) if x is not None)
    return run_laws(f"naturality[{names}]", naturality_laws(F, G), seed, trials)
