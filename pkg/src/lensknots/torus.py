"""Torus knots and the lifts of generator knots of lens spaces."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .braid import BraidWord
from .poly import ONE, LaurentPoly, div_exact


class TorusLinkError(ValueError):
    """Parameters describe a torus link with several components."""


@dataclass(frozen=True)
class TorusParams:
    a: int
    b: int

    def __post_init__(self):
        a, b = abs(self.a), abs(self.b)
        if max(a, b) >= 2 and gcd(a, b) != 1:
            raise TorusLinkError(f"T({self.a}, {self.b}) is a torus link, not a knot")
        if a == 0 and b == 0:
            raise ValueError("T(0, 0) is not a knot")

    def is_unknot(self) -> bool:
        return abs(self.a) <= 1 or abs(self.b) <= 1

    @property
    def genus(self) -> int:
        if self.is_unknot():
            return 0
        return (abs(self.a) - 1) * (abs(self.b) - 1) // 2

    def __str__(self):
        return f"T({self.a}, {self.b})"


def torus_braid(tp: TorusParams) -> BraidWord:
    """(sigma_1 ... sigma_{|a|-1})^|b| on |a| strands, mirrored when ab < 0."""
    if tp.a == 0:
        raise ValueError("torus_braid needs a != 0")
    n = abs(tp.a)
    sign = 1 if (tp.a > 0) == (tp.b >= 0) else -1
    cycle = tuple(sign * i for i in range(1, n))
    return BraidWord(n, cycle * abs(tp.b))


def torus_alexander_closed(tp: TorusParams) -> LaurentPoly:
    """t^{-g} (1 - t)(1 - t^{ab}) / ((1 - t^a)(1 - t^b)).

    Absolute values of the parameters are used; the Alexander polynomial
    of a knot cannot tell it from its mirror image.
    """
    if tp.is_unknot():
        return ONE
    a, b = sorted((abs(tp.a), abs(tp.b)))
    return _closed_form(a, b)


@lru_cache(maxsize=4096)
def _closed_form(a: int, b: int) -> LaurentPoly:
    def one_minus_t(k):
        return LaurentPoly.from_t_coeffs({0: 1, k: -1})

    num = one_minus_t(1) * one_minus_t(a * b)
    den = one_minus_t(a) * one_minus_t(b)
    g = (a - 1) * (b - 1) // 2
    return div_exact(num, den).shift(-2 * g)


def lift_generator(p: int, q: int, n: int) -> TorusParams:
    """Torus knot covering the knot in L(p, q) that represents n[l_1] + [m_1]."""
    if p < 1:
        raise ValueError("p must be positive")
    if gcd(p, q) != 1:
        raise ValueError(f"gcd(p, q) = gcd({p}, {q}) != 1")
    if not 1 <= n < p:
        raise ValueError(f"n = {n} must satisfy 1 <= n < p = {p}")
    if gcd(n, p) != 1:
        raise ValueError(f"gcd(n, p) = gcd({n}, {p}) != 1")
    return TorusParams(n, p - q * n)
