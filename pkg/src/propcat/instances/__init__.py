"""Concrete categories: ℤ-mod, Qubits and free props."""

from propcat.instances.freeprop import DEFAULT_SIGNATURE, free_prop, parse_signature
from propcat.instances.qubits import qubits_instance
from propcat.instances.zmod import zmod_instance

__all__ = ["DEFAULT_SIGNATURE", "free_prop", "parse_signature", "qubits_instance",
           "zmod_instance"]
