"""
Lens spaces L(p, q) as arithmetic objects.

H_1(L(p, q)) is cyclic of order p, generated by the core l_1 of the first
solid torus, and the linking form is lk(a l_1, b l_1) = abq/p in Q/Z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import FrozenSet


def mod_inverse(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` in [0, p)."""
    if p < 1:
        raise ValueError("modulus must be positive")
    if gcd(a, p) != 1:
        raise ValueError(f"{a} is not invertible modulo {p}")
    if p == 1:
        return 0
    return pow(a, -1, p)


@dataclass(frozen=True, order=True)
class QmodZ:
    """A rational number modulo 1, kept as a reduced fraction in [0, 1)."""

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        if self.denominator < 1:
            raise ValueError("denominator must be positive")
        f = Fraction(self.numerator % self.denominator, self.denominator)
        object.__setattr__(self, "numerator", f.numerator)
        object.__setattr__(self, "denominator", f.denominator)

    def __add__(self, other: "QmodZ") -> "QmodZ":
        f = Fraction(self.numerator, self.denominator) + Fraction(other.numerator, other.denominator)
        return QmodZ(f.numerator, f.denominator)

    def __str__(self):
        if self.numerator == 0:
            return "0"
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("p must be positive")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"L({self.p}, {self.q}): p and q must be coprime")
        object.__setattr__(self, "q", self.q % self.p)

    @property
    def qbar(self) -> int:
        return mod_inverse(self.q, self.p)

    def __str__(self):
        return f"L({self.p},{self.q})"


def linking_form(L: LensSpace, a: int, b: int) -> QmodZ:
    """lk(a l_1, b l_1) = abq/p."""
    return QmodZ(a * b * L.q % L.p, L.p)


def homeomorphic(L: LensSpace, L2: LensSpace) -> bool:
    """Orientation-preserving homeomorphism: q' = q or qq' = 1 mod p."""
    if L.p != L2.p:
        return False
    p = L.p
    return (L.q - L2.q) % p == 0 or (L.q * L2.q) % p == 1 % p


def squares_mod(p: int) -> FrozenSet[int]:
    return frozenset(n * n % p for n in range(p))


def homotopy_equivalent(L: LensSpace, L2: LensSpace) -> bool:
    """Orientation-preserving homotopy equivalence: qq' is a square mod p."""
    if L.p != L2.p:
        return False
    return (L.q * L2.q) % L.p in squares_mod(L.p)


def invariant_set(L: LensSpace) -> FrozenSet[QmodZ]:
    """{n^2 q / p : 1 <= n < p}, non-coprime n included."""
    return frozenset(linking_form(L, n, n) for n in range(1, L.p))


def normal_form(L: LensSpace) -> LensSpace:
    return LensSpace(L.p, min(L.q, L.qbar))
