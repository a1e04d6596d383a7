from __future__ import annotations

import random
from fractions import Fraction

import pytest

from propcat.errors import ArityExceeded, DimensionMismatch, InvalidArrow
from propcat.instances.qubits import (
    GATES,
    QubitArrow,
    conjugation_functor,
    doubling_functor,
    qcompose,
    qid,
    qswap,
    qtensor,
    qubits_instance,
    random_matrix,
)
from propcat.laws import check_sm_functor_laws, check_ssmc_laws

X, CNOT = GATES["X"], GATES["CNOT"]


def test_swap_squares_to_identity():
    s = qswap(1, 1)
    assert qcompose(s, s) == qid(2)


def test_x_does_not_commute_with_cnot():
    x1 = qtensor(X, qid(1))
    assert qcompose(x1, CNOT) != qcompose(CNOT, x1)


def test_interchange_exact():
    rng = random.Random(0)
    for _ in range(100):
        n, m, p = (rng.randint(0, 1) for _ in range(3))
        n2, m2, p2 = (rng.randint(0, 1) for _ in range(3))
        f, f2 = random_matrix(n, m, rng), random_matrix(m, p, rng)
        g, g2 = random_matrix(n2, m2, rng), random_matrix(m2, p2, rng)
        lhs = qcompose(qtensor(f, g), qtensor(f2, g2))
        assert lhs == qtensor(qcompose(f, f2), qcompose(g, g2))


def test_hexagon_exact():
    for n in range(6):
        for m in range(6 - n):
            for k in range(6 - n - m):
                lhs = qswap(n, m + k)
                rhs = qcompose(qtensor(qswap(n, m), qid(k)), qtensor(qid(m), qswap(n, k)))
                assert lhs == rhs


def test_swap_moves_first_wire_last():
    # |1⟩|0⟩ on (1 wire, 1 wire) becomes |0⟩|1⟩.
    ket10 = qtensor(GATES["ket1"], GATES["ket0"])
    assert qcompose(ket10, qswap(1, 1)) == qtensor(GATES["ket0"], GATES["ket1"])


def test_exact_gaussian_entries():
    half = QubitArrow.from_entries(1, 1, [[Fraction(1, 2), (0, Fraction(1, 2))], [0, 1]])
    assert half.entry(0, 1) == (0, Fraction(1, 2))
    assert qcompose(half, qid(1)) == half
    assert QubitArrow.from_entries(0, 0, [[2]]) == QubitArrow.from_entries(0, 0, [[Fraction(4, 2)]])
    with pytest.raises(InvalidArrow):
        QubitArrow.from_entries(0, 0, [[0.5j]])


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        qcompose(X, CNOT)


def test_arity_bound():
    Q = qubits_instance(2)
    with pytest.raises(ArityExceeded):
        Q.tensor_arr(CNOT, X)
    with pytest.raises(ArityExceeded):
        Q.id(3)
    with pytest.raises(ValueError):
        qubits_instance(7)


def test_builtin_gates_are_unitary_or_states():
    for name in ("X", "Y", "Z", "S", "CNOT", "CZ", "SWAP"):
        g = GATES[name]
        dagger = QubitArrow(g.m, g.n, g.re.T.copy(), -g.im.T.copy(), g.den)
        assert qcompose(g, dagger) == qid(g.n), name
    assert qcompose(GATES["ket0"], GATES["bra0"]) == qid(0)
    assert qcompose(GATES["ket1"], GATES["bra0"]) == QubitArrow.from_entries(0, 0, [[0]])


def test_ssmc_laws_pass():
    report = check_ssmc_laws(qubits_instance(3), seed=2, trials=100)
    assert report.passed, str(report)


def test_functors_pass():
    Q, Q6 = qubits_instance(3), qubits_instance(6)
    for F in (conjugation_functor(Q), doubling_functor(Q, Q6)):
        report = check_sm_functor_laws(F, seed=4, trials=100)
        assert report.passed, str(report)
