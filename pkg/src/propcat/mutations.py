"""Deliberately broken structures, used to show the law suites are not vacuous.

Each mutant is small and targeted; the matching suite must report failure.

* :func:`broken_zmod_swap` makes the ℤ-mod swap depend on argument order
  (multiplying by 2 when ``n < m``). A uniform change would still commute
  with every arrow, since ℤ-mod endomorphisms commute, so order dependence
  is what breaks the symmetry laws.
* :func:`dropped_phi_inverse` forgets the certified inverse of a functor's
  coherence family.
* :func:`counit_dropping_group` forgets the last group when stripping.
* :func:`doubled_beta` and :func:`broken_zmod_tensor` are extra mutants for
  the ℤ-mod equivalence and SSMC suites.
"""

from __future__ import annotations

import dataclasses
from math import gcd

from propcat.instances.zmod import ZmodArrow, zid, zmod_instance
from propcat.laws import MonoidalNatData, SMFunctorData, SsmcInstance, strict_functor
from propcat.propification import PropArrow, beta_transformation, content, propify, strip


def broken_zmod_swap() -> SsmcInstance:
    def swap(n, m):
        g = gcd(n, m)
        return ZmodArrow(g, g, 2) if n < m else zid(g)

    return zmod_instance(swap=swap, name="zmod[broken swap]")


def broken_zmod_tensor() -> SsmcInstance:
    """Tensor of objects by ``max`` while arrows still tensor through gcd."""
    return zmod_instance(tensor_obj=max, name="zmod[broken tensor]")


def dropped_phi_inverse(F: SMFunctorData) -> SMFunctorData:
    return dataclasses.replace(F, phi_pair_inv=None, name=f"{F.name}[no phi inverse]")


def counit_dropping_group(P: SsmcInstance) -> SMFunctorData:
    """A counit whose object map ignores the last group of a grouped list."""
    return strict_functor(propify(P), P, lambda a: content(tuple(a)[:-1], P), strip,
                          name=f"<_>_{P.name}[drops a group]")


def doubled_beta(C: SsmcInstance) -> MonoidalNatData:
    """β on ℤ-mod with the payload multiplied by 2 on two-element lists."""
    good = beta_transformation(C)

    def component(l):
        b = good.component(l)
        if len(l) != 2:
            return b
        c = content(l, C)
        return PropArrow(b.dom, b.cod, ZmodArrow(c, c, 2), C)

    return dataclasses.replace(good, component=component, name=f"{good.name}[doubled]")
