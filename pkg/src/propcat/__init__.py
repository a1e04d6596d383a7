"""Propification of symmetric strict monoidal categories."""

from propcat.bureaucracy import bureaucracy, divider, factorize, gatherer
from propcat.errors import PropcatError
from propcat.laws import (
    LawReport,
    MonoidalNatData,
    SMFunctorData,
    SsmcInstance,
    check_monoidal_nat,
    check_sm_functor_laws,
    check_ssmc_laws,
)
from propcat.propification import PropArrow, check_equivalence, content, propify, strip
from propcat.scalable import check_adjunction, check_comonad_laws, check_naturality, scalable

__version__ = "0.1.0"

__all__ = [
    "LawReport", "MonoidalNatData", "PropArrow", "PropcatError", "SMFunctorData",
    "SsmcInstance", "bureaucracy", "check_adjunction", "check_comonad_laws",
    "check_equivalence", "check_monoidal_nat", "check_naturality",
    "check_sm_functor_laws", "check_ssmc_laws", "content", "divider", "factorize",
    "gatherer", "propify", "scalable", "strip",
]
