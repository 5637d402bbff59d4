"""
Congruence obstructions for generator knots in lens spaces.

A knot K_n in L(p, q) representing n[l_1] + [m_1] lifts to the torus knot
T(n, p - qn).  If some knot homologous to K_n has a lift with trivial
Alexander polynomial, then the lift of K_n is congruent to 1 modulo
(t^{r^s} - 1, r) for every prime power r^s dividing p.  That congruence
forces n^2 = 1 or n^2 = qbar^2 modulo r^s.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass, field
from math import gcd
from typing import List, Tuple

from .braid import PeriodicSpec, alexander_of_closure, orbit_crossing_change, periodic_closure
from .lens import LensSpace, QmodZ, linking_form, mod_inverse
from .poly import ModulusSpec, reduce_mod
from .torus import lift_generator, torus_alexander_closed


class Branch(str, enum.Enum):
    UNIT = "UNIT"  # n^2 = 1
    QBAR = "QBAR"  # n^2 = qbar^2
    BOTH = "BOTH"
    NEITHER = "NEITHER"


class Conclusion(str, enum.Enum):
    UNIT = "n^2=1 mod p"
    QBAR = "n^2=qbar^2 mod p"
    MIXED = "MIXED"
    EXCLUDED = "EXCLUDED"


def maximal_prime_powers(p: int) -> List[ModulusSpec]:
    """Prime powers exactly dividing ``p``, in increasing order of the prime."""
    if p < 2:
        raise ValueError("p must be at least 2")
    out = []
    r = 2
    while r * r <= p:
        if p % r == 0:
            s = 0
            while p % r == 0:
                p //= r
                s += 1
            out.append(ModulusSpec(r, s))
        r += 1
    if p > 1:
        out.append(ModulusSpec(p, 1))
    return out


def _check_triple(p: int, q: int, n: int):
    lift_generator(p, q, n)  # validates coprimality and range


def lift_alexander(p: int, q: int, n: int):
    return torus_alexander_closed(lift_generator(p, q, n))


def theorem1_congruence(p: int, q: int, n: int, mod: ModulusSpec) -> bool:
    """Is the lift of K_n congruent to 1 modulo (t^{r^s} - 1, r)?"""
    _check_triple(p, q, n)
    if p % mod.m:
        raise ValueError(f"{mod.m} does not divide {p}")
    return reduce_mod(lift_alexander(p, q, n), mod).is_one()


def theorem1_predicate(n: int, q: int, mod: ModulusSpec) -> Branch:
    m = mod.m
    if gcd(q, mod.r) != 1 or gcd(n, mod.r) != 1:
        raise ValueError(f"n = {n} and q = {q} must be prime to {mod.r}")
    unit = n * n % m == 1 % m
    qbar = (n * q) ** 2 % m == 1 % m
    if unit and qbar:
        return Branch.BOTH
    if unit:
        return Branch.UNIT
    if qbar:
        return Branch.QBAR
    return Branch.NEITHER


@dataclass(frozen=True)
class FactorResult:
    r: int
    s: int
    congruence_holds: bool
    branch: Branch

    @property
    def m(self) -> int:
        return self.r ** self.s


@dataclass(frozen=True)
class ObstructionReport:
    p: int
    q: int
    n: int
    per_factor: Tuple[FactorResult, ...]
    global_conclusion: Conclusion
    linking: QmodZ
    lift: Tuple[int, int] = field(default=(0, 0))

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "n": self.n,
            "lift": list(self.lift),
            "linking": str(self.linking),
            "per_factor": [
                {**asdict(f), "branch": f.branch.value} for f in self.per_factor
            ],
            "global_conclusion": self.global_conclusion.value,
        }

    def render(self) -> str:
        lines = [
            f"L({self.p},{self.q}), class n = {self.n}: lift T{self.lift}, lk = {self.linking}",
            f"{'r':>4} {'s':>3} {'r^s':>5}  {'congruent':<9}  branch",
        ]
        for f in self.per_factor:
            lines.append(f"{f.r:>4} {f.s:>3} {f.m:>5}  {'yes' if f.congruence_holds else 'no':<9}  {f.branch.value}")
        lines.append(f"conclusion: {self.global_conclusion.value}")
        return "\n".join(lines)


def obstruction_report(p: int, q: int, n: int) -> ObstructionReport:
    tp = lift_generator(p, q, n)
    delta = torus_alexander_closed(tp)
    factors = []
    for mod in maximal_prime_powers(p):
        holds = reduce_mod(delta, mod).is_one()
        branch = theorem1_predicate(n, q, mod)
        if branch is Branch.BOTH:
            # qbar^2 = 1 mod r^s here, so both alternatives are one congruence
            branch = Branch.UNIT
        factors.append(FactorResult(mod.r, mod.s, holds, branch))

    qbar = mod_inverse(q, p)
    if any(f.branch is Branch.NEITHER for f in factors):
        conclusion = Conclusion.EXCLUDED
    elif (n * n - 1) % p == 0:
        conclusion = Conclusion.UNIT
    elif (n * n - qbar * qbar) % p == 0:
        conclusion = Conclusion.QBAR
    else:
        conclusion = Conclusion.MIXED
    return ObstructionReport(
        p, q, n, tuple(factors), conclusion,
        linking_form(LensSpace(p, q), n, n), (tp.a, tp.b),
    )


@dataclass(frozen=True)
class Violation:
    p: int
    q: int
    n: int
    r: int
    s: int

    def __str__(self):
        return f"p={self.p} q={self.q} n={self.n} r^s={self.r}^{self.s}"


def sweep_triples(pmax: int, pmin: int = 2):
    """All valid (p, q, n) with pmin <= p <= pmax, 1 <= q, n < p."""
    for p in range(max(pmin, 2), pmax + 1):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            for n in range(1, p):
                if gcd(n, p) == 1:
                    yield p, q, n


def forward_violations(p: int, q: int, n: int) -> List[Violation]:
    """Factors where the lift is congruent to 1 but the predicate fails."""
    delta = lift_alexander(p, q, n)
    bad = []
    for mod in maximal_prime_powers(p):
        if reduce_mod(delta, mod).is_one() and theorem1_predicate(n, q, mod) is Branch.NEITHER:
            bad.append(Violation(p, q, n, mod.r, mod.s))
    return bad


def lemma4_verify(spec: PeriodicSpec, pos: int, twist_sign: int = -1) -> bool:
    """Compare L(q) and L'(q) modulo (t^{r^s} - 1, r) after an orbit crossing change."""
    before = alexander_of_closure(periodic_closure(spec, twist_sign))
    after = alexander_of_closure(periodic_closure(orbit_crossing_change(spec, pos), twist_sign))
    return reduce_mod(before, spec.mod) == reduce_mod(after, spec.mod)
