"""Qubits: n -> m arrows are 2^m × 2^n matrices with Gaussian-rational entries.

Entries are stored exactly as integer real and imaginary parts over one
positive common denominator, always in lowest terms, so equality is plain
array comparison. Composition is the matrix product, tensor the Kronecker
product (big-endian: the first factor indexes the high bits).
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import reduce
from math import gcd
from numbers import Rational

import numpy as np

from propcat.errors import ArityExceeded, DimensionMismatch, InvalidArrow
from propcat.laws import SMFunctorData, SsmcInstance, strict_functor

HARD_MAX_WIRES = 6


def _as_gaussian(x) -> tuple[Fraction, Fraction]:
    if isinstance(x, tuple):
        return Fraction(x[0]), Fraction(x[1])
    if isinstance(x, (Rational, int)):
        return Fraction(x), Fraction(0)
    if isinstance(x, complex):
        if x.real != int(x.real) or x.imag != int(x.imag):
            raise InvalidArrow(f"inexact complex entry {x!r}")
        return Fraction(int(x.real)), Fraction(int(x.imag))
    raise InvalidArrow(f"unsupported entry {x!r}")


class QubitArrow:
    __slots__ = ("n", "m", "re", "im", "den")

    def __init__(self, n: int, m: int, re: np.ndarray, im: np.ndarray, den: int = 1):
        shape = (2 ** m, 2 ** n)
        if re.shape != shape or im.shape != shape:
            raise DimensionMismatch(f"{re.shape} matrix cannot be an arrow {n} -> {m}")
        if den <= 0:
            raise InvalidArrow("denominator must be positive")
        g = reduce(gcd, (int(v) for v in re.flat), den)
        g = reduce(gcd, (int(v) for v in im.flat), g)
        self.n, self.m = n, m
        self.re, self.im, self.den = re // g, im // g, den // g

    @classmethod
    def from_entries(cls, n: int, m: int, rows) -> QubitArrow:
        """Build from a nested list, rows indexed by output basis states."""
        entries = [[_as_gaussian(x) for x in row] for row in rows]
        den = reduce(lambda a, b: a * b // gcd(a, b),
                     (part.denominator for row in entries for z in row for part in z), 1)
        re = np.array([[int(z[0] * den) for z in row] for row in entries], dtype=object)
        im = np.array([[int(z[1] * den) for z in row] for row in entries], dtype=object)
        if re.ndim != 2:
            re = re.reshape(2 ** m, 2 ** n)
            im = im.reshape(2 ** m, 2 ** n)
        return cls(n, m, re, im, den)

    def entry(self, i: int, j: int) -> tuple[Fraction, Fraction]:
        return (Fraction(int(self.re[i, j]), self.den),
                Fraction(int(self.im[i, j]), self.den))

    def conjugate(self) -> QubitArrow:
        return QubitArrow(self.n, self.m, self.re, -self.im, self.den)

    def __eq__(self, other):
        if not isinstance(other, QubitArrow):
            return NotImplemented
        return (self.n == other.n and self.m == other.m and self.den == other.den
                and np.array_equal(self.re, other.re)
                and np.array_equal(self.im, other.im))

    def __hash__(self):
        return hash((self.n, self.m, self.den, tuple(self.re.flat), tuple(self.im.flat)))

    def __repr__(self) -> str:
        def fmt(i, j):
            a, b = self.entry(i, j)
            if b == 0:
                return str(a)
            return f"{a}+{b}i" if a else f"{b}i"
        rows = "; ".join(" ".join(fmt(i, j) for j in range(2 ** self.n))
                         for i in range(2 ** self.m))
        return f"Q[{self.n}->{self.m}]({rows})"


def qcompose(f: QubitArrow, g: QubitArrow) -> QubitArrow:
    """``f`` then ``g``: the product g·f."""
    if f.m != g.n:
        raise DimensionMismatch(f"cannot compose {f.n}->{f.m} with {g.n}->{g.m}")
    re = g.re.dot(f.re) - g.im.dot(f.im)
    im = g.re.dot(f.im) + g.im.dot(f.re)
    return QubitArrow(f.n, g.m, re, im, f.den * g.den)


def qtensor(f: QubitArrow, g: QubitArrow) -> QubitArrow:
    re = np.kron(f.re, g.re) - np.kron(f.im, g.im)
    im = np.kron(f.re, g.im) + np.kron(f.im, g.re)
    return QubitArrow(f.n + g.n, f.m + g.m, re, im, f.den * g.den)


def _zeros(n: int, m: int) -> np.ndarray:
    return np.zeros((2 ** m, 2 ** n), dtype=object)


def qid(n: int) -> QubitArrow:
    re = _zeros(n, n)
    for i in range(2 ** n):
        re[i, i] = 1
    return QubitArrow(n, n, re, _zeros(n, n))


def qswap(n: int, m: int) -> QubitArrow:
    """Sends |x⟩⊗|y⟩ (x on n wires, y on m wires) to |y⟩⊗|x⟩."""
    re = _zeros(n + m, n + m)
    for x in range(2 ** n):
        for y in range(2 ** m):
            re[y * 2 ** n + x, x * 2 ** m + y] = 1
    return QubitArrow(n + m, n + m, re, _zeros(n + m, n + m))


def _gates() -> dict[str, QubitArrow]:
    i = (0, 1)
    m_i = (0, -1)
    return {
        "X": QubitArrow.from_entries(1, 1, [[0, 1], [1, 0]]),
        "Y": QubitArrow.from_entries(1, 1, [[0, m_i], [i, 0]]),
        "Z": QubitArrow.from_entries(1, 1, [[1, 0], [0, -1]]),
        "S": QubitArrow.from_entries(1, 1, [[1, 0], [0, i]]),
        "CNOT": QubitArrow.from_entries(2, 2, [[1, 0, 0, 0], [0, 1, 0, 0],
                                               [0, 0, 0, 1], [0, 0, 1, 0]]),
        "CZ": QubitArrow.from_entries(2, 2, [[1, 0, 0, 0], [0, 1, 0, 0],
                                             [0, 0, 1, 0], [0, 0, 0, -1]]),
        "SWAP": qswap(1, 1),
        "ket0": QubitArrow.from_entries(0, 1, [[1], [0]]),
        "ket1": QubitArrow.from_entries(0, 1, [[0], [1]]),
        "bra0": QubitArrow.from_entries(1, 0, [[1, 0]]),
        "bra1": QubitArrow.from_entries(1, 0, [[0, 1]]),
    }


GATES = _gates()

_ENTRY_CHOICES = [0, 0, 0, 0, 1, -1, (0, 1), (0, -1), Fraction(1, 2), 2]


def random_matrix(n: int, m: int, rng: random.Random) -> QubitArrow:
    rows = [[rng.choice(_ENTRY_CHOICES) for _ in range(2 ** n)] for _ in range(2 ** m)]
    return QubitArrow.from_entries(n, m, rows)


def _compositions(n: int, rng: random.Random) -> tuple:
    parts, left = [], n
    while left:
        p = rng.randint(1, left)
        parts.append(p)
        left -= p
    if rng.random() < 0.2:
        parts.insert(rng.randint(0, len(parts)), 0)
    return tuple(parts)


def qubits_instance(max_wires: int = 3) -> SsmcInstance:
    if not 0 <= max_wires <= HARD_MAX_WIRES:
        raise ValueError(f"max_wires must lie in [0, {HARD_MAX_WIRES}]")

    def bounded(n):
        if n > max_wires:
            raise ArityExceeded(f"{n} wires exceed the bound {max_wires}")
        return n

    def tensor_obj(a, b):
        return bounded(a + b)

    def tensor_arr(f, g):
        bounded(f.n + g.n)
        bounded(f.m + g.m)
        return qtensor(f, g)

    small = [w for w in (0, 1, 1, 1, 2) if w <= max_wires]

    def sample_arr(n, m, rng):
        return random_matrix(bounded(n), bounded(m), rng)

    return SsmcInstance(
        name=f"qubits{max_wires}",
        unit=0,
        tensor_obj=tensor_obj,
        id=lambda n: qid(bounded(n)),
        compose=qcompose,
        tensor_arr=tensor_arr,
        swap=lambda a, b: qswap(a, tensor_obj(a, b) - a),
        dom=lambda f: f.n,
        cod=lambda f: f.m,
        sample_obj=lambda rng: rng.choice(small),
        sample_arr=sample_arr,
        split=_compositions,
    )


def conjugation_functor(Q: SsmcInstance) -> SMFunctorData:
    """Entrywise complex conjugation, a strict prop morphism Q -> Q."""
    return strict_functor(Q, Q, lambda n: n, lambda f: f.conjugate(), name="conj")


def doubling_functor(source: SsmcInstance, target: SsmcInstance) -> SMFunctorData:
    """n |-> 2n, M |-> M⊗M: strong monoidal with a wire-shuffling coherence.

    φ_{a,b} reorders the wire blocks (a, b, a, b) into (a, a, b, b).
    """

    def phi(a, b):
        return qtensor(qtensor(qid(a), qswap(b, a)), qid(b))

    def phi_inv(a, b):
        return qtensor(qtensor(qid(a), qswap(a, b)), qid(b))

    def on_arr(f):
        target.tensor_obj(f.n, f.n)
        target.tensor_obj(f.m, f.m)
        return qtensor(f, f)

    return SMFunctorData(source, target, lambda n: target.tensor_obj(n, n), on_arr,
                         phi, qid(0), phi_inv, qid(0), name="double")
