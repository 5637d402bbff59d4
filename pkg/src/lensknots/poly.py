"""
Exact Laurent polynomials in t with integer coefficients.

Exponents are stored on the half-integer grid: a key ``e`` in the
coefficient map stands for ``u**e`` where ``u = t**(1/2)``.  Knot
polynomials therefore have only even keys, and links with an even number
of components have only odd keys.

The same container is reused for Conway polynomials in ``z``; there the
keys are plain powers of ``z`` (see :func:`substitute_z`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple


class NonExactDivisionError(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = int(v)
                if v:
                    c[int(e)] = v
        self._c: Dict[int, int] = c
        self._hash = None

    # constructors

    @classmethod
    def _raw(cls, c: Dict[int, int]) -> "LaurentPoly":
        # c must already be free of zero entries
        obj = cls.__new__(cls)
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def u(cls, e: int, c: int = 1) -> "LaurentPoly":
        """The monomial ``c * t**(e/2)``."""
        return cls({e: c})

    @classmethod
    def t(cls, k: int, c: int = 1) -> "LaurentPoly":
        """The monomial ``c * t**k``."""
        return cls({2 * k: c})

    @classmethod
    def from_t_coeffs(cls, coeffs: Mapping[int, int]) -> "LaurentPoly":
        return cls({2 * k: v for k, v in coeffs.items()})

    # inspection

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def items(self) -> Iterable[Tuple[int, int]]:
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def span(self) -> int:
        """Width of the support, in u-exponents."""
        if not self._c:
            return 0
        return self.max_exp() - self.min_exp()

    def coefficient(self, e: int) -> int:
        return self._c.get(e, 0)

    def at_one(self) -> int:
        return sum(self._c.values())

    def invert(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        return LaurentPoly._raw({-e: v for e, v in self._c.items()})

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by u**e."""
        return LaurentPoly._raw({k + e: v for k, v in self._c.items()})

    def normalized_unit(self) -> "LaurentPoly":
        """Representative of ``self`` modulo the units +-u**k.

        The lowest exponent is moved to 0 and the lowest coefficient made
        positive.
        """
        if not self._c:
            return self
        lo = self.min_exp()
        p = self.shift(-lo)
        return -p if p._c[0] < 0 else p

    # arithmetic

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> Dict[str, int]:
        return {str(e): v for e, v in sorted(self._c.items())}


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    c = dict(a._c)
    for e, v in b._c.items():
        w = c.get(e, 0) + v
        if w:
            c[e] = w
        else:
            c.pop(e, None)
    return LaurentPoly._raw(c)


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    c: Dict[int, int] = {}
    for e1, v1 in a._c.items():
        for e2, v2 in b._c.items():
            e = e1 + e2
            c[e] = c.get(e, 0) + v1 * v2
    return LaurentPoly._raw({e: v for e, v in c.items() if v})


def div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``a == b * q``.

    Raises ZeroDivisionError for ``b == 0`` and NonExactDivisionError when
    no Laurent polynomial with integer coefficients satisfies the equation.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    alo, blo = a.min_exp(), b.min_exp()
    # dense ascending coefficients of a, shifted to start at u^0
    rem = [0] * (a.max_exp() - alo + 1)
    for e, v in a._c.items():
        rem[e - alo] = v
    bterms = sorted((e - blo, v) for e, v in b._c.items())
    bdeg, lead = bterms[-1]
    qlen = len(rem) - bdeg
    if qlen <= 0:
        raise NonExactDivisionError(f"{a} is not divisible by {b}")
    quot = [0] * qlen
    lower = bterms[:-1]
    for i in range(qlen - 1, -1, -1):
        top = rem[i + bdeg]
        if not top:
            continue
        qi, r = divmod(top, lead)
        if r:
            raise NonExactDivisionError(f"{a} is not divisible by {b}")
        quot[i] = qi
        rem[i + bdeg] = 0
        for e, v in lower:
            rem[i + e] -= qi * v
    if any(rem):
        raise NonExactDivisionError(f"{a} is not divisible by {b}")
    shift = alo - blo
    return LaurentPoly._raw({i + shift: v for i, v in enumerate(quot) if v})


# Conway polynomials

_Z = LaurentPoly({-1: 1, 1: -1})  # t^{-1/2} - t^{1/2}


def substitute_z(conway: LaurentPoly) -> LaurentPoly:
    """Evaluate a polynomial in z at ``z = t^{-1/2} - t^{1/2}``.

    ``conway`` uses plain z-powers as keys, which must be non-negative.
    """
    out = ZERO
    for k, c in conway.items():
        if k < 0:
            raise ValueError("Conway polynomials have non-negative z-exponents")
        out = out + (_Z ** k) * c
    return out


def conway_from_alexander(delta: LaurentPoly) -> LaurentPoly:
    """Inverse of :func:`substitute_z`.

    Works for any polynomial in the image of the substitution, i.e. one
    with ``delta(1/t) == (-1)**k delta(t)`` termwise; anything else raises
    ValueError.
    """
    rest = delta
    out: Dict[int, int] = {}
    while rest:
        d = rest.max_exp()
        if d < 0:
            raise ValueError(f"{delta} is not a polynomial in t^-1/2 - t^1/2")
        # leading term of z^d is (-1)^d u^d
        c = rest.coefficient(d) * (-1) ** d
        out[d] = c
        rest = rest - (_Z ** d) * c
    return LaurentPoly(out)


# Text format


def _format_exp(e: int, var: str, half: bool) -> str:
    if half:
        if e % 2 == 0:
            k = str(e // 2)
        else:
            k = f"{e}/2"
    else:
        k = str(e)
    if k == "1":
        return var
    return f"{var}^{k}"


def format_poly(p: LaurentPoly, var: str = "t", half: bool | None = None,
                descending: bool = False) -> str:
    """Render ``p`` as e.g. ``t^-1 - 1 + t`` (ascending exponents by default).

    For ``var='t'`` keys are u-exponents and are printed halved; for any
    other variable they are printed as-is unless ``half`` says otherwise.
    """
    if half is None:
        half = var == "t"
    if p.is_zero():
        return "0"
    parts = []
    terms = p.items()
    if descending:
        terms = terms[::-1]
    for i, (e, c) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = _format_exp(e, var, half)
            body = mono if a == 1 else f"{a}*{mono}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?(?:([a-zA-Z])(?:\s*\^\s*\(?\s*(-?\d+)(?:\s*/\s*(\d+))?\s*\)?)?)?\s*"
)


def parse_poly(text: str, var: str = "t", half: bool | None = None) -> LaurentPoly:
    """Parse the output of :func:`format_poly` (and minor variants).

    Accepts unicode minus signs and exponents such as ``t^-1/2`` or
    ``t^(1/2)``.
    """
    if half is None:
        half = var == "t"
    s = text.replace("−", "-").strip()
    if not s:
        raise ValueError("empty polynomial")
    pos = 0
    out: Dict[int, int] = {}
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sign, coef, v, num, den = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r}")
        if coef is None and v is None:
            raise ValueError(f"cannot parse polynomial {text!r}")
        if v is not None and v != var:
            raise ValueError(f"unexpected variable {v!r} in {text!r}")
        c = int(coef) if coef is not None else 1
        if sign == "-":
            c = -c
        if v is None:
            e = 0
        else:
            k = Fraction(int(num), int(den) if den else 1) if num is not None else Fraction(1)
            if half:
                k = k * 2
            if k.denominator != 1:
                raise ValueError(f"exponent {k} not on the grid in {text!r}")
            e = int(k)
        out[e] = out.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(out)


# Quotient ring Z/r[u]/(u^{2m} - 1)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class ModulusSpec:
    """The ideal (t^m - 1, r) with m = r**s."""

    r: int
    s: int

    def __post_init__(self):
        if not is_prime(self.r):
            raise ValueError(f"r = {self.r} is not prime")
        if self.s < 1:
            raise ValueError(f"s = {self.s} must be >= 1")

    @property
    def m(self) -> int:
        return self.r ** self.s

    def __str__(self):
        return f"(t^{self.m} - 1, {self.r})"


@dataclass(frozen=True)
class Residue:
    """Image of a Laurent polynomial in Z/r[u]/(u^{2m} - 1)."""

    mod: ModulusSpec
    terms: Tuple[Tuple[int, int], ...]  # sorted (u-exponent, coefficient)

    @classmethod
    def from_map(cls, mod: ModulusSpec, c: Mapping[int, int]) -> "Residue":
        period, r = 2 * mod.m, mod.r
        acc: Dict[int, int] = {}
        for e, v in c.items():
            k = e % period
            acc[k] = (acc.get(k, 0) + v) % r
        return cls(mod, tuple(sorted((e, v) for e, v in acc.items() if v)))

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self.terms)

    def is_one(self) -> bool:
        return self.terms == ((0, 1),)

    def __add__(self, other: "Residue") -> "Residue":
        self._check(other)
        c = dict(self.terms)
        for e, v in other.terms:
            c[e] = c.get(e, 0) + v
        return Residue.from_map(self.mod, c)

    def __mul__(self, other: "Residue") -> "Residue":
        self._check(other)
        c: Dict[int, int] = {}
        for e1, v1 in self.terms:
            for e2, v2 in other.terms:
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return Residue.from_map(self.mod, c)

    def _check(self, other):
        if not isinstance(other, Residue) or other.mod != self.mod:
            raise ValueError("residues live in different quotient rings")

    def __str__(self):
        return format_poly(LaurentPoly(dict(self.terms)))

    def to_json(self):
        return {str(e): v for e, v in self.terms}


def reduce_mod(p: LaurentPoly, mod: ModulusSpec) -> Residue:
    """Reduce ``p`` modulo (t^m - 1, r), i.e. u^{2m} = 1 over Z/r."""
    return Residue.from_map(mod, p._c)
