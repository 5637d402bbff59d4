"""
Reproducible test suites shared by ``lensknots verify`` and the test suite.

Every suite returns a :class:`SuiteResult`; failures carry a short text
description of the offending input.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from math import gcd
from typing import Iterator, List, Tuple

from .braid import (
    BraidWord,
    PeriodicSpec,
    alexander_of_closure,
    burau_alexander_upto_units,
    closure_components,
    delete_letter,
    equal_up_to_units,
    geometric_sum,
)
from .obstruction import forward_violations, lemma4_verify, sweep_triples
from .poly import LaurentPoly, ModulusSpec, parse_poly
from .torus import TorusParams, torus_alexander_closed, torus_braid

Z = LaurentPoly({-1: 1, 1: -1})
LEMMA4_MODULI = ((2, 1), (3, 1), (2, 2))


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checks} checks, {len(self.failures)} violations"


def random_word(rng: random.Random, max_strands: int = 4, max_len: int = 12,
                min_strands: int = 2, min_len: int = 1) -> BraidWord:
    n = rng.randint(min_strands, max_strands)
    length = rng.randint(min_len, max_len)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def random_periodic_specs(seed: int = 0, count: int = 100) -> Iterator[PeriodicSpec]:
    rng = random.Random(seed)
    for _ in range(count):
        pattern = random_word(rng, max_strands=3, max_len=6)
        r, s = rng.choice(LEMMA4_MODULI)
        yield PeriodicSpec(pattern, ModulusSpec(r, s), rng.randint(-2, 2))


def symmetry_holds(w: BraidWord, delta: LaurentPoly) -> bool:
    c = closure_components(w)
    if delta.invert() != delta * (-1) ** (c - 1):
        return False
    if c == 1:
        return all(e % 2 == 0 for e in delta.coeffs) and delta.at_one() == 1
    return all((e - (c - 1)) % 2 == 0 for e in delta.coeffs)


def skein_suite(seed: int = 0, count: int = 200) -> Tuple[SuiteResult, List[Tuple[BraidWord, LaurentPoly]]]:
    """Delta(+) - Delta(-) = z Delta(0) at a random letter of random words.

    Also returns every (word, Delta) pair computed, for the symmetry suite.
    """
    rng = random.Random(seed)
    res = SuiteResult("skein relation")
    seen = []
    for _ in range(count):
        w = random_word(rng)
        pos = rng.randrange(len(w))
        i = abs(w.letters[pos])
        letters = list(w.letters)
        letters[pos] = i
        plus = BraidWord(w.strands, tuple(letters))
        letters[pos] = -i
        minus = BraidWord(w.strands, tuple(letters))
        zero = delete_letter(w, pos)
        dp, dm, d0 = (alexander_of_closure(x) for x in (plus, minus, zero))
        seen += [(plus, dp), (minus, dm), (zero, d0)]
        res.checks += 1
        if dp - dm != Z * d0:
            res.failures.append(f"{w.key()} at {pos}")
    return res, seen


def burau_suite(seed: int = 1, count: int = 100) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("Burau cross-check")
    for _ in range(count):
        w = random_word(rng)
        res.checks += 1
        lhs = alexander_of_closure(w) * geometric_sum(w.strands)
        if not equal_up_to_units(lhs, burau_alexander_upto_units(w)):
            res.failures.append(w.key())
    return res


def torus_pairs(max_ab: int = 40) -> List[Tuple[int, int]]:
    return [(a, b) for a in range(2, max_ab) for b in range(a + 1, max_ab // a + 1)
            if gcd(a, b) == 1 and a * b <= max_ab]


def torus_suite(max_ab: int = 40) -> Tuple[SuiteResult, List[Tuple[BraidWord, LaurentPoly]]]:
    res = SuiteResult(f"torus closed form vs braid (ab <= {max_ab})")
    seen = []
    for a, b in torus_pairs(max_ab):
        tp = TorusParams(a, b)
        w = torus_braid(tp)
        d = alexander_of_closure(w)
        seen.append((w, d))
        res.checks += 1
        if d != torus_alexander_closed(tp):
            res.failures.append(str(tp))
    return res, seen


def load_calibration() -> List[Tuple[BraidWord, LaurentPoly]]:
    text = resources.files("lensknots").joinpath("data/calibration.txt").read_text()
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, expected = line.partition("|")
        out.append((BraidWord.parse(word), parse_poly(expected)))
    return out


def calibration_suite() -> SuiteResult:
    res = SuiteResult("calibration corpus")
    for w, expected in load_calibration():
        res.checks += 1
        got = alexander_of_closure(w)
        if got != expected:
            res.failures.append(f"{w.key()}: got {got}, expected {expected}")
    return res


def symmetry_suite(pairs) -> SuiteResult:
    res = SuiteResult("symmetry/normalization")
    for w, d in pairs:
        res.checks += 1
        if not symmetry_holds(w, d):
            res.failures.append(f"{w.key()}: {d}")
    return res


def _violations_for_p(p: int):
    out, checks = [], 0
    for _, q, n in sweep_triples(p, p):
        checks += 1
        out += [str(v) for v in forward_violations(p, q, n)]
    return checks, out


def theorem1_suite(pmax: int = 30, workers: int = 1) -> SuiteResult:
    """Congruence to 1 implies n^2 = 1 or qbar^2 mod r^s, for all p <= pmax."""
    res = SuiteResult(f"forward congruence sweep (p <= {pmax})")
    ps = list(range(2, pmax + 1))
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_violations_for_p, ps))
    else:
        results = [_violations_for_p(p) for p in ps]
    for checks, bad in results:
        res.checks += checks
        res.failures += bad
    return res


def lemma4_suite(seed: int = 0, count: int = 100) -> SuiteResult:
    res = SuiteResult(f"orbit crossing change congruence ({count} specs, both twist signs)")
    for spec in random_periodic_specs(seed, count):
        for pos in range(len(spec.pattern)):
            for sign in (-1, 1):
                res.checks += 1
                if not lemma4_verify(spec, pos, sign):
                    res.failures.append(
                        f"pattern {spec.pattern.key()} r^s={spec.mod.r}^{spec.mod.s} q={spec.q} pos={pos} sign={sign}"
                    )
    return res
