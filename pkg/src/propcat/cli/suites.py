"""The law suites ``propcat laws <instance>`` runs."""

from __future__ import annotations

from typing import Callable

from propcat.instances.freeprop import DEFAULT_SIGNATURE, free_prop, interpretation
from propcat.instances.qubits import (
    GATES,
    QubitArrow,
    conjugation_functor,
    doubling_functor,
    qubits_instance,
)
from propcat.instances.zmod import zmod_instance
from propcat.laws import LawReport, check_sm_functor_laws, check_ssmc_laws
from propcat.propification import check_equivalence, embed_functor, propify, strip_functor
from propcat.scalable import check_adjunction, check_comonad_laws, check_naturality

Suite = Callable[[int, int], LawReport]

# Images of the default signature's generators in Qubits: A and B are one wire.
_XOR = QubitArrow.from_entries(2, 1, [[1, 0, 0, 1], [0, 1, 1, 0]])
_BELL = QubitArrow.from_entries(0, 2, [[1], [0], [0], [1]])
DEFAULT_QUBIT_IMAGES = {"f": GATES["X"], "g": _XOR, "h": _BELL}


def default_interpretation(target=None):
    """The default free prop mapped into Qubits: every colour is one wire."""
    source = free_prop(DEFAULT_SIGNATURE)
    target = target or qubits_instance(4)
    return interpretation(source, target, lambda c: 1,
                          lambda g: DEFAULT_QUBIT_IMAGES[g.name], name="interp")


def suites_for(name: str) -> dict[str, Suite]:
    if name == "zmod":
        C = zmod_instance()
        PC = propify(C)
        return {
            "ssmc": lambda s, k: check_ssmc_laws(C, s, k),
            "ssmc-prop": lambda s, k: check_ssmc_laws(PC, s, k),
            "embed": lambda s, k: check_sm_functor_laws(embed_functor(C), s, k),
            "strip": lambda s, k: check_sm_functor_laws(strip_functor(C), s, k),
            "equivalence": lambda s, k: check_equivalence(C, s, k),
            "adjunction": lambda s, k: check_adjunction(C, PC, s, k),
            "comonad": lambda s, k: check_comonad_laws(PC, s, k),
        }
    if name == "qubits":
        Q, Q6 = qubits_instance(3), qubits_instance(6)
        double = doubling_functor(Q, Q6)
        conj = conjugation_functor(Q)
        return {
            "ssmc": lambda s, k: check_ssmc_laws(Q, s, k),
            "ssmc-prop": lambda s, k: check_ssmc_laws(propify(Q), s, k),
            "embed": lambda s, k: check_sm_functor_laws(embed_functor(Q), s, k),
            "strip": lambda s, k: check_sm_functor_laws(strip_functor(Q), s, k),
            "conjugation": lambda s, k: check_sm_functor_laws(conj, s, k),
            "doubling": lambda s, k: check_sm_functor_laws(double, s, k),
            "equivalence": lambda s, k: check_equivalence(Q, s, k),
            "adjunction": lambda s, k: check_adjunction(zmod_instance(), Q, s, k),
            "comonad": lambda s, k: check_comonad_laws(Q, s, k),
            "naturality": lambda s, k: check_naturality(double, conj, s, k),
        }
    if name == "free":
        F = free_prop(DEFAULT_SIGNATURE)
        interp = default_interpretation()
        return {
            "ssmc": lambda s, k: check_ssmc_laws(F, s, k),
            "ssmc-prop": lambda s, k: check_ssmc_laws(propify(F), s, k),
            "embed": lambda s, k: check_sm_functor_laws(embed_functor(F), s, k),
            "strip": lambda s, k: check_sm_functor_laws(strip_functor(F), s, k),
            "interpretation": lambda s, k: check_sm_functor_laws(interp, s, k),
            "equivalence": lambda s, k: check_equivalence(F, s, k),
            "adjunction": lambda s, k: check_adjunction(zmod_instance(), F, s, k),
            "comonad": lambda s, k: check_comonad_laws(F, s, k),
            "naturality": lambda s, k: check_naturality(interp, interp, s, k),
        }
    raise ValueError(f"unknown instance {name!r}")

