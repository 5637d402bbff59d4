"""
Links as braid closures.

A braid word is a tuple of nonzero integers; ``i`` stands for the Artin
generator sigma_i and ``-i`` for its inverse.  The Alexander polynomial of
the closure is computed from the Seifert matrix of the Bennequin surface
(one disk per strand, one half-twisted band per letter), which gives the
Conway normalization with no unit ambiguity.  The reduced Burau
representation provides an independent check up to units.

Sign conventions are pinned by two anchors: closure(sigma_1^3) has
Conway polynomial z^2 + 1 and closure(sigma_1^2) has Conway polynomial z,
with z = t^{-1/2} - t^{1/2}.  With these, the skein relation reads

    Delta(w with +sigma_i) - Delta(w with -sigma_i) = z * Delta(w with the letter removed).
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from .poly import ONE, ZERO, LaurentPoly, ModulusSpec, div_exact


class SplitClosureError(ValueError):
    """The Bennequin surface is disconnected, so the closure is a split link."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"letter {x} is not a generator of B_{self.strands}")

    @classmethod
    def parse(cls, text: str, strands: Optional[int] = None) -> "BraidWord":
        """Parse ``"1 1 -2"``; the strand count defaults to max|letter| + 1.

        A leading ``n=4`` (optionally followed by ``:``) sets the strand
        count, as used in batch files.
        """
        body = text.strip()
        if body.startswith("n="):
            head, _, body = body.partition(" ")
            head = head[2:].rstrip(":")
            if strands is None:
                strands = int(head)
        try:
            letters = [int(tok) for tok in body.replace(",", " ").split()]
        except ValueError:
            raise ValueError(f"cannot parse braid word {text!r}") from None
        if strands is None:
            strands = max((abs(x) for x in letters), default=0) + 1
        return cls(strands, tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(str(x) for x in self.letters)

    def key(self) -> str:
        return f"n={self.strands}: {self}"

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("cannot multiply braids with different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in self.letters))


def closure_components(w: BraidWord) -> int:
    """Number of components of the closure: cycles of the braid permutation."""
    perm = list(range(w.strands))
    for x in w.letters:
        i = abs(x) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen = [False] * w.strands
    cycles = 0
    for start in range(w.strands):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def crossing_change(w: BraidWord, pos: int) -> BraidWord:
    _check_pos(w, pos)
    letters = list(w.letters)
    letters[pos] = -letters[pos]
    return BraidWord(w.strands, tuple(letters))


def delete_letter(w: BraidWord, pos: int) -> BraidWord:
    """Oriented smoothing of the crossing at ``pos``."""
    _check_pos(w, pos)
    return BraidWord(w.strands, w.letters[:pos] + w.letters[pos + 1:])


def _check_pos(w: BraidWord, pos: int):
    if not 0 <= pos < len(w.letters):
        raise IndexError(f"position {pos} out of range for a word of length {len(w.letters)}")


def full_twist(n: int, k: int = 1) -> BraidWord:
    """((sigma_1 ... sigma_{n-1})^n)^k; negative k negates every letter."""
    if n < 2:
        raise ValueError("full twists need at least two strands")
    sign = 1 if k >= 0 else -1
    cycle = tuple(sign * i for i in range(1, n))
    return BraidWord(n, cycle * (n * abs(k)))


def cyclic_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs, including across the closure seam."""
    stack: List[int] = []
    for x in w.letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and stack[lo] == -stack[hi - 1]:
        lo += 1
        hi -= 1
    return BraidWord(w.strands, tuple(stack[lo:hi]))


# Seifert matrix of the Bennequin surface


@dataclass(frozen=True)
class SeifertMatrix:
    entries: Tuple[Tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def transpose(self) -> "SeifertMatrix":
        return SeifertMatrix(tuple(zip(*self.entries)) if self.entries else ())

    def alexander(self) -> LaurentPoly:
        """det(t^{1/2} V - t^{-1/2} V^T)."""
        return _seifert_determinant(self.entries)


def _band_columns(w: BraidWord) -> List[List[int]]:
    cols: List[List[int]] = [[] for _ in range(w.strands)]
    for k, x in enumerate(w.letters):
        cols[abs(x)].append(k)
    return cols[1:]


def seifert_matrix(w: BraidWord) -> SeifertMatrix:
    """Seifert matrix of the surface made of ``w.strands`` disks and one band per letter.

    The basis has one loop for each pair of consecutive bands in the same
    column, running up one band and down the next.
    """
    cols = _band_columns(w)
    if any(not c for c in cols):
        raise SplitClosureError(f"closure of {w.key()} is split")
    sign = [1 if x > 0 else -1 for x in w.letters]

    gens = []  # (column, index in column, first band, second band)
    for i, col in enumerate(cols):
        for j in range(len(col) - 1):
            gens.append((i, j, col[j], col[j + 1]))
    index = {(i, j): g for g, (i, j, _, _) in enumerate(gens)}
    N = len(gens)
    V = [[0] * N for _ in range(N)]

    for g, (i, j, a, b) in enumerate(gens):
        if sign[a] == sign[b]:
            V[g][g] = -sign[a]
        h = index.get((i, j + 1))
        if h is not None:
            # next loop in the column shares band b
            if sign[b] > 0:
                V[g][h] = 1
            else:
                V[h][g] = -1
        nxt = cols[i + 1] if i + 1 < len(cols) else ()
        for jj in range(len(nxt) - 1):
            c, d = nxt[jj], nxt[jj + 1]
            h = index[(i + 1, jj)]
            if a < c < b < d:
                V[g][h] = -1
            elif c < a < d < b:
                V[g][h] = 1
    return SeifertMatrix(tuple(tuple(row) for row in V))


def bareiss_det(M: Sequence[Sequence], one, zero, divide: Callable):
    """Fraction-free determinant over an integral domain with exact ``divide``."""
    A = [list(row) for row in M]
    n = len(A)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if A[k][k] == zero:
            for i in range(k + 1, n):
                if A[i][k] != zero:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return zero
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = divide(row_i[j] * akk - aik * row_k[j], prev)
        prev = akk
    d = A[n - 1][n - 1]
    return d if sign > 0 else -d


def _int_det(M) -> int:
    return bareiss_det(M, 1, 0, lambda a, b: a // b)


def _seifert_determinant(V) -> LaurentPoly:
    # det(u V - u^{-1} V^T) = u^{-N} Q(u^2) with Q(x) = det(x V - V^T),
    # a polynomial of degree <= N; recover Q by interpolation.
    N = len(V)
    if N == 0:
        return ONE
    xs = list(range(-(N // 2), N - N // 2 + 1))
    ys = []
    for x in xs:
        ys.append(_int_det([[x * V[i][j] - V[j][i] for j in range(N)] for i in range(N)]))
    coeffs = _interpolate(xs, ys)
    return LaurentPoly({2 * k - N: c for k, c in enumerate(coeffs)})


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> List[int]:
    """Coefficients (ascending) of the integer polynomial through the points."""
    n = len(xs)
    # Newton divided differences
    dd = [Fraction(y) for y in ys]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + dd[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * p for s, p in zip(shifted, poly)]
        poly[0] += dd[i]
    out = []
    for c in poly:
        if c.denominator != 1:
            raise ArithmeticError("interpolated Seifert determinant is not integral")
        out.append(int(c))
    return out


# Alexander polynomial of a closure

_cache: dict = {}
_cache_lock = threading.Lock()


def alexander_of_closure(w: BraidWord) -> LaurentPoly:
    """Conway-normalized Alexander polynomial of the closure of ``w``.

    Split closures give 0.  Results are memoized on the cyclically reduced
    word.
    """
    w = cyclic_reduce(w)
    key = w.key()
    hit = _cache.get(key)
    if hit is not None:
        return hit
    if w.strands == 1:
        delta = ONE
    else:
        try:
            delta = seifert_matrix(w).alexander()
        except SplitClosureError:
            delta = ZERO
    with _cache_lock:
        _cache[key] = delta
    return delta


def clear_cache():
    with _cache_lock:
        _cache.clear()


def load_cache(path: str | os.PathLike) -> int:
    """Merge a JSON cache file into the in-memory cache; returns entries read."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except FileNotFoundError:
        return 0
    with _cache_lock:
        for key, coeffs in data.items():
            _cache[key] = LaurentPoly({int(e): v for e, v in coeffs.items()})
    return len(data)


def save_cache(path: str | os.PathLike):
    with _cache_lock:
        data = {k: v.to_json() for k, v in sorted(_cache.items())}
    with open(path, "w") as fh:
        json.dump(data, fh, indent=0, sort_keys=True)


# Reduced Burau representation


def _burau_generator(m: int, i: int, positive: bool):
    # column-action convention; m = strands - 1, i = 1-based generator index
    M = [[ONE if a == b else ZERO for b in range(m)] for a in range(m)]
    t, tinv = LaurentPoly.t(1), LaurentPoly.t(-1)
    r = i - 1
    if positive:
        M[r][r] = -t
        if r > 0:
            M[r - 1][r] = t
        if r < m - 1:
            M[r + 1][r] = ONE
    else:
        M[r][r] = -tinv
        if r > 0:
            M[r - 1][r] = ONE
        if r < m - 1:
            M[r + 1][r] = tinv
    return M


def _matmul(A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[sum((A[a][c] * B[c][b] for c in range(k) if A[a][c] and B[c][b]), ZERO)
             for b in range(m)] for a in range(n)]


def burau_matrix(w: BraidWord):
    """Reduced Burau matrix of ``w`` as a list of rows of LaurentPoly."""
    if w.strands < 2:
        raise ValueError("the reduced Burau representation needs at least two strands")
    m = w.strands - 1
    B = [[ONE if a == b else ZERO for b in range(m)] for a in range(m)]
    for x in w.letters:
        B = _matmul(B, _burau_generator(m, abs(x), x > 0))
    return B


def burau_alexander_upto_units(w: BraidWord) -> LaurentPoly:
    """det(I - B(w)); equals Delta * (1 + t + ... + t^{n-1}) up to +-t^{k/2}."""
    B = burau_matrix(w)
    m = len(B)
    A = [[(ONE if a == b else ZERO) - B[a][b] for b in range(m)] for a in range(m)]
    return bareiss_det(A, ONE, ZERO, div_exact)


def equal_up_to_units(a: LaurentPoly, b: LaurentPoly) -> bool:
    return a.normalized_unit() == b.normalized_unit()


def geometric_sum(n: int) -> LaurentPoly:
    """1 + t + ... + t^{n-1}."""
    return LaurentPoly.from_t_coeffs({k: 1 for k in range(n)})


# Periodic links and twisting along the axis


@dataclass(frozen=True)
class PeriodicSpec:
    """Closure of ``pattern`` repeated r^s times, then -q full twists.

    The closure is r^s-periodic about the braid axis; appending full
    twists realizes 1/q surgery on that axis.
    """

    pattern: BraidWord
    mod: ModulusSpec
    q: int = 0

    def __post_init__(self):
        if self.pattern.strands < 2:
            raise ValueError("periodic patterns need at least two strands")

    @property
    def period(self) -> int:
        return self.mod.m


def periodic_closure(spec: PeriodicSpec, twist_sign: int = -1) -> BraidWord:
    """The word whose closure is L(q).

    ``twist_sign=-1`` appends ``full_twist(n, -q)``; ``+1`` uses the opposite
    handedness.
    """
    if twist_sign not in (1, -1):
        raise ValueError("twist_sign must be +1 or -1")
    n = spec.pattern.strands
    word = BraidWord(n, spec.pattern.letters * spec.period)
    if spec.q:
        word = word * full_twist(n, twist_sign * spec.q)
    return word


def orbit_crossing_change(spec: PeriodicSpec, pos: int) -> PeriodicSpec:
    """Change the whole Z_{r^s}-orbit of the crossing at ``pos`` in the pattern."""
    return replace(spec, pattern=crossing_change(spec.pattern, pos))
