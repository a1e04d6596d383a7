"""ℤ-mod: objects are integers n ≥ 0 standing for ℤ/nℤ (ℤ/0ℤ = ℤ).

An arrow n -> m is the module map sending 1 to the residue ``k``. Tensor of
objects is ``gcd``, the unit is 0 and the swap is the identity. Tensor of
arrows transports through the isomorphism ℤ/n ⊗ ℤ/n' ≅ ℤ/gcd(n, n') sending
1⊗1 to 1, so it multiplies residues.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from propcat.errors import InvalidArrow, TypeMismatch
from propcat.laws import SsmcInstance

MAX_OBJ = 12
#: Residues of ℤ -> ℤ maps are drawn and enumerated from this window.
Z_WINDOW = 5


def is_valid(n: int, m: int, k: int) -> bool:
    if n < 0 or m < 0:
        return False
    if m > 0:
        return (n * k) % m == 0
    return n == 0 or k == 0


@dataclass(frozen=True)
class ZmodArrow:
    n: int
    m: int
    k: int

    def __post_init__(self):
        if not all(isinstance(v, int) for v in (self.n, self.m, self.k)):
            raise InvalidArrow(f"non-integer data {self.n!r}, {self.m!r}, {self.k!r}")
        if self.m > 0:
            object.__setattr__(self, "k", self.k % self.m)
        if not is_valid(self.n, self.m, self.k):
            raise InvalidArrow(f"1 |-> {self.k} is not a module map Z/{self.n} -> Z/{self.m}")

    def __call__(self, x: int) -> int:
        """Image of the element ``x`` of ℤ/n."""
        y = x * self.k
        return y % self.m if self.m else y

    def __repr__(self) -> str:
        return f"z({self.k}: {self.n} -> {self.m})"


def zid(n: int) -> ZmodArrow:
    return ZmodArrow(n, n, 1)


def zcompose(f: ZmodArrow, g: ZmodArrow) -> ZmodArrow:
    if f.m != g.n:
        raise TypeMismatch(f"cannot compose {f!r} with {g!r}")
    return ZmodArrow(f.n, g.m, f.k * g.k)


def ztensor(f: ZmodArrow, g: ZmodArrow) -> ZmodArrow:
    return ZmodArrow(gcd(f.n, g.n), gcd(f.m, g.m), f.k * g.k)


def zswap(n: int, m: int) -> ZmodArrow:
    return zid(gcd(n, m))


def hom(n: int, m: int, window: int = Z_WINDOW) -> Iterator[ZmodArrow]:
    """Every arrow n -> m; maps ℤ -> ℤ restricted to ``|k| <= window``."""
    if m > 0:
        for k in range(m):
            if (n * k) % m == 0:
                yield ZmodArrow(n, m, k)
    elif n == 0:
        for k in range(-window, window + 1):
            yield ZmodArrow(0, 0, k)
    else:
        yield ZmodArrow(n, 0, 0)


def hom_size(n: int, m: int) -> int | float:
    if m > 0:
        return gcd(n, m)
    return 1 if n > 0 else float("inf")


def _sample_arr(n, m, rng: random.Random) -> ZmodArrow:
    if m > 0:
        g = gcd(n, m)
        return ZmodArrow(n, m, rng.randrange(g) * (m // g))
    if n == 0:
        return ZmodArrow(0, 0, rng.randint(-Z_WINDOW, Z_WINDOW))
    return ZmodArrow(n, 0, 0)


def _split(n: int, rng: random.Random) -> tuple:
    options = [(n,), (n, 0), (0, n), (n, n)]
    if 0 < 2 * n <= MAX_OBJ:
        options += [(n, 2 * n), (2 * n, 3 * n)] if 3 * n <= MAX_OBJ else [(n, 2 * n)]
    if n == 0:
        options.append(())
    return rng.choice(options)


def zmod_instance(swap=zswap, tensor_obj=gcd, name: str = "zmod") -> SsmcInstance:
    """ℤ-mod with objects sampled from [0, 12].

    ``swap`` and ``tensor_obj`` can be overridden to build mutants.
    """
    return SsmcInstance(
        name=name,
        unit=0,
        tensor_obj=tensor_obj,
        id=zid,
        compose=zcompose,
        tensor_arr=ztensor,
        swap=swap,
        dom=lambda f: f.n,
        cod=lambda f: f.m,
        sample_obj=lambda rng: rng.randint(0, MAX_OBJ),
        sample_arr=_sample_arr,
        split=_split,
    )
