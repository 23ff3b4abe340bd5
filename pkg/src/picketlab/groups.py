"""Exact arithmetic in a fixed finite abelian p-group.

A :class:`GroupType` fixes a prime p and a multiset of cyclic exponents
(e_1, ..., e_k), presenting the group as Z/(p**e_1) x ... x Z/(p**e_k).
Exponents are stored in ascending order so that the first coordinates span
the subgroups of small exponent; the decomposition routines lean on that
ordering throughout.  :class:`Element` values are coefficient vectors in
this fixed decomposition, reduced coordinatewise.  Everything is immutable.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GroupMismatchError, WordSizeError

#: Height assigned to the zero element; compares above every finite height.
INFINITE = math.inf

DEFAULT_GUARD_BITS = 63

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def guard_bits() -> int:
    """Active word-size guard; group orders p**N >= 2**bits are rejected.

    The default keeps every residue inside a signed 64-bit word.  The
    environment variable ``PICKETLAB_GUARD_BITS`` lowers (or raises) the
    guard, which the test suite uses to exercise rejection paths cheaply.
    """
    return int(os.environ.get("PICKETLAB_GUARD_BITS", DEFAULT_GUARD_BITS))


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit integers."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class GroupType:
    """Shape of a finite abelian p-group in a fixed cyclic decomposition.

    ``exponents`` is stable-sorted ascending on construction, so callers may
    pass the multiset in any monotone order; coordinates of every
    :class:`Element` refer to the stored (ascending) order.
    """

    p: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"p must be a prime integer, got {self.p!r}")
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 1 for e in exps):
            raise ValueError(f"exponents must be positive, got {exps}")
        object.__setattr__(self, "exponents", tuple(sorted(exps)))
        bits = guard_bits()
        if self.p ** self.max_exponent >= (1 << bits):
            raise WordSizeError(
                f"p**N = {self.p}**{self.max_exponent} exceeds the 2**{bits} guard"
            )

    # -- shape queries ----------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.exponents)

    @property
    def max_exponent(self) -> int:
        """N, the largest cyclic exponent (0 for the zero group)."""
        return self.exponents[-1] if self.exponents else 0

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(self.p**e for e in self.exponents)

    @property
    def order_exponent(self) -> int:
        """log_p of the group order."""
        return sum(self.exponents)

    def isotypic_counts(self) -> dict[int, int]:
        """Multiplicity of each cyclic exponent (the Ulm invariants)."""
        counts: dict[int, int] = {}
        for e in self.exponents:
            counts[e] = counts.get(e, 0) + 1
        return counts

    def prefix_rank(self, n: int) -> int:
        """Number of coordinates with exponent <= n (a coordinate prefix)."""
        return sum(1 for e in self.exponents if e <= n)

    # -- element construction ---------------------------------------------

    def element(self, coeffs: Iterable[int]) -> "Element":
        return Element(self, tuple(coeffs))

    def zero(self) -> "Element":
        return Element(self, (0,) * self.rank)

    def generator(self, i: int) -> "Element":
        """Standard generator of the i-th cyclic coordinate."""
        coeffs = [0] * self.rank
        coeffs[i] = 1
        return Element(self, tuple(coeffs))

    def generators(self) -> tuple["Element", ...]:
        return tuple(self.generator(i) for i in range(self.rank))

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {"p": self.p, "lambda": list(self.exponents)}

    @classmethod
    def from_dict(cls, data: dict) -> "GroupType":
        return cls(int(data["p"]), tuple(int(e) for e in data["lambda"]))


@dataclass(frozen=True)
class Element:
    """A group element as a reduced coefficient vector.

    Coefficients are reduced modulo p**e_i on construction, so any integer
    vector of the right length is accepted.
    """

    gtype: GroupType
    coeffs: tuple[int, ...]

    def __post_init__(self):
        mods = self.gtype.moduli
        if len(self.coeffs) != len(mods):
            raise ValueError(
                f"expected {len(mods)} coordinates, got {len(self.coeffs)}"
            )
        object.__setattr__(
            self, "coeffs", tuple(int(c) % m for c, m in zip(self.coeffs, mods))
        )

    def _require_same_type(self, other: "Element") -> None:
        if self.gtype != other.gtype:
            raise GroupMismatchError(
                f"elements live in different groups: {self.gtype} vs {other.gtype}"
            )

    # -- group operations ---------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        self._require_same_type(other)
        return Element(
            self.gtype, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "Element":
        return Element(self.gtype, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "Element":
        if not isinstance(scalar, int):
            return NotImplemented
        return Element(self.gtype, tuple(scalar * a for a in self.coeffs))

    def __mul__(self, scalar: int) -> "Element":
        return self.__rmul__(scalar)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- invariants -----------------------------------------------------------

    def order_exponent(self) -> int:
        """Smallest e >= 0 with p**e * x == 0."""
        p = self.gtype.p
        best = 0
        for a, lam in zip(self.coeffs, self.gtype.exponents):
            if a == 0:
                continue
            v = 0
            while a % p == 0:
                a //= p
                v += 1
            best = max(best, lam - v)
        return best

    def height(self):
        """Largest r with x in p**r * G, or INFINITE for the zero element.

        For a nonzero element this is the least p-adic valuation over its
        nonzero coordinates (each reduced coordinate has valuation below its
        exponent, so the minimum of the valuations is exact).
        """
        if self.is_zero():
            return INFINITE
        p = self.gtype.p
        best = None
        for a in self.coeffs:
            if a == 0:
                continue
            v = 0
            while a % p == 0:
                a //= p
                v += 1
            best = v if best is None else min(best, v)
        return best

    # -- serialization -----------------------------------------------------

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_list(cls, gtype: GroupType, data: Sequence[int]) -> "Element":
        return cls(gtype, tuple(int(c) for c in data))


def add(x: Element, y: Element) -> Element:
    return x + y


def scalar_mul(a: int, x: Element) -> Element:
    return a * x


def order_exponent(x: Element) -> int:
    return x.order_exponent()
