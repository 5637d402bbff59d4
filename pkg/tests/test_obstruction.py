from math import gcd

import pytest
import sympy

from lensknots.braid import BraidWord, PeriodicSpec, alexander_of_closure, periodic_closure
from lensknots.lens import LensSpace, QmodZ, homeomorphic
from lensknots.obstruction import (
    Branch,
    Conclusion,
    forward_violations,
    lemma4_verify,
    maximal_prime_powers,
    obstruction_report,
    sweep_triples,
    theorem1_congruence,
    theorem1_predicate,
)
from lensknots.poly import ModulusSpec, Residue, reduce_mod
from lensknots.torus import lift_generator, torus_alexander_closed


def test_maximal_prime_powers():
    assert maximal_prime_powers(12) == [ModulusSpec(2, 2), ModulusSpec(3, 1)]
    assert maximal_prime_powers(7) == [ModulusSpec(7, 1)]
    assert maximal_prime_powers(8) == [ModulusSpec(2, 3)]
    assert maximal_prime_powers(2 * 3 * 5 * 7 * 49) == [ModulusSpec(2, 1), ModulusSpec(3, 1),
                                                          ModulusSpec(5, 1), ModulusSpec(7, 3)]
    with pytest.raises(ValueError):
        maximal_prime_powers(1)


@pytest.mark.parametrize("p", range(2, 200))
def test_maximal_prime_powers_multiply_back(p):
    prod = 1
    for mod in maximal_prime_powers(p):
        prod *= mod.m
        assert gcd(mod.m, p // mod.m) == 1
    assert prod == p


def test_congruence_examples():
    mod5 = ModulusSpec(5, 1)
    assert not theorem1_congruence(5, 1, 2, mod5)
    # t^-1 - 1 + t = t^4 + 4 + t in Z/5[t]/(t^5 - 1)
    residue = reduce_mod(torus_alexander_closed(lift_generator(5, 1, 2)), mod5)
    assert residue == Residue.from_map(mod5, {8: 1, 0: 4, 2: 1})

    assert theorem1_congruence(5, 2, 3, mod5)

    mod8 = ModulusSpec(2, 3)
    assert not theorem1_congruence(8, 1, 3, mod8)
    residue = reduce_mod(torus_alexander_closed(lift_generator(8, 1, 3)), mod8)
    assert residue == Residue.from_map(mod8, {14: 1, 10: 1, 6: 1, 2: 1, 0: 1})


def test_congruence_trivial_class():
    for p, q, _ in sweep_triples(20):
        for mod in maximal_prime_powers(p):
            assert theorem1_congruence(p, q, 1, mod)


def test_congruence_errors():
    with pytest.raises(ValueError):
        theorem1_congruence(6, 1, 2, ModulusSpec(2, 1))
    with pytest.raises(ValueError):
        theorem1_congruence(6, 1, 1, ModulusSpec(5, 1))


def test_predicate_examples():
    assert theorem1_predicate(2, 1, ModulusSpec(5, 1)) is Branch.NEITHER
    assert theorem1_predicate(3, 2, ModulusSpec(7, 1)) is Branch.QBAR
    assert theorem1_predicate(3, 1, ModulusSpec(2, 3)) is Branch.BOTH
    for q in (1, 2, 3, 4):
        assert theorem1_predicate(1, q, ModulusSpec(5, 1)) in (Branch.UNIT, Branch.BOTH)
    assert theorem1_predicate(1, 2, ModulusSpec(5, 1)) is Branch.UNIT
    with pytest.raises(ValueError):
        theorem1_predicate(2, 1, ModulusSpec(2, 1))


def test_report_examples():
    rep = obstruction_report(5, 1, 2)
    assert rep.global_conclusion is Conclusion.EXCLUDED
    assert rep.linking == QmodZ(4, 5)
    assert rep.per_factor[0].branch is Branch.NEITHER
    assert not rep.per_factor[0].congruence_holds

    rep = obstruction_report(7, 2, 3)
    assert rep.global_conclusion is Conclusion.QBAR
    assert rep.linking == QmodZ(4, 7)
    assert LensSpace(7, 2).qbar == 4

    for p, q in [(5, 2), (12, 5), (9, 4)]:
        rep = obstruction_report(p, q, 1)
        assert rep.global_conclusion is Conclusion.UNIT
        assert rep.linking == QmodZ(q, p)


def test_converse_witness():
    # n^2 = 1 mod 8 but the lift T(3,5) is not congruent to 1
    rep = obstruction_report(8, 1, 3)
    (factor,) = rep.per_factor
    assert (factor.r, factor.s) == (2, 3)
    assert factor.congruence_holds is False
    assert factor.branch is Branch.UNIT
    assert rep.global_conclusion is Conclusion.UNIT


def test_report_json_and_render():
    rep = obstruction_report(12, 5, 5)
    data = rep.to_json()
    assert data["lift"] == [5, -13]
    assert [(f["r"], f["s"]) for f in data["per_factor"]] == [(2, 2), (3, 1)]
    assert data["global_conclusion"] == "n^2=1 mod p"
    assert "conclusion: n^2=1 mod p" in rep.render()


def test_report_conclusions_consistent():
    seen = set()
    for p, q, n in sweep_triples(30):
        rep = obstruction_report(p, q, n)
        seen.add(rep.global_conclusion)
        qbar = LensSpace(p, q).qbar
        branches = {f.branch for f in rep.per_factor}
        assert Branch.BOTH not in branches
        assert [f.m for f in rep.per_factor] == [m.m for m in maximal_prime_powers(p)]
        if rep.global_conclusion is Conclusion.EXCLUDED:
            assert Branch.NEITHER in branches
        elif rep.global_conclusion is Conclusion.UNIT:
            assert (n * n - 1) % p == 0
        elif rep.global_conclusion is Conclusion.QBAR:
            assert (n * n - qbar * qbar) % p == 0
        else:
            assert Branch.NEITHER not in branches
            assert (n * n - 1) % p and (n * n - qbar * qbar) % p
        assert rep.linking == QmodZ(n * n * q, p)
    # every unit squares to 1 mod 3, 4 and 8, so MIXED needs p >= 35
    assert seen == {Conclusion.EXCLUDED, Conclusion.UNIT, Conclusion.QBAR}


def _sympy_residue(a, b, m, r):
    t = sympy.Symbol("t")
    g = (a - 1) * (b - 1) // 2
    poly = sympy.Poly(sympy.cancel((1 - t) * (1 - t ** (a * b)) / ((1 - t**a) * (1 - t**b))), t)
    acc = {}
    for (e,), c in poly.terms():
        k = (int(e) - g) % m
        acc[k] = (acc.get(k, 0) + int(c)) % r
    return {k: v for k, v in acc.items() if v}


def test_mixed_example():
    # qbar = 18; n^2 = 16 is 1 mod 5 and qbar^2 mod 7, but neither mod 35
    rep = obstruction_report(35, 2, 4)
    assert rep.global_conclusion is Conclusion.MIXED
    assert [f.branch for f in rep.per_factor] == [Branch.UNIT, Branch.QBAR]
    assert all(f.congruence_holds for f in rep.per_factor)
    assert rep.lift == (4, 27)
    assert _sympy_residue(4, 27, 5, 5) == {0: 1}
    assert _sympy_residue(4, 27, 7, 7) == {0: 1}


@pytest.mark.parametrize("pmax", [16])
def test_forward_implication_small(pmax):
    for p, q, n in sweep_triples(pmax):
        assert forward_violations(p, q, n) == []


def test_unknot_lifts_are_congruent():
    for p, q, n in sweep_triples(30):
        if lift_generator(p, q, n).is_unknot():
            for mod in maximal_prime_powers(p):
                assert theorem1_congruence(p, q, n, mod)


def test_consistency_with_homeomorphism():
    good = (Conclusion.UNIT, Conclusion.QBAR)
    for p in range(2, 31):
        values = {}
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            values[q] = {obstruction_report(p, q, n).linking
                         for n in range(1, p) if gcd(n, p) == 1
                         and obstruction_report(p, q, n).global_conclusion in good}
            L = LensSpace(p, q)
            assert values[q] == {QmodZ(q, p), QmodZ(L.qbar, p)}
        for q in values:
            for q2 in values:
                if homeomorphic(LensSpace(p, q), LensSpace(p, q2)):
                    assert values[q] == values[q2]


def test_lemma4_examples():
    mod3 = ModulusSpec(3, 1)
    assert lemma4_verify(PeriodicSpec(BraidWord(2, (1,)), mod3, 1), 0)
    assert lemma4_verify(PeriodicSpec(BraidWord(2, (1,)), mod3, 0), 0)
    spec = PeriodicSpec(BraidWord(3, (1, 2)), ModulusSpec(2, 1), 0)
    assert lemma4_verify(spec, 0)
    for sign in (-1, 1):
        assert lemma4_verify(PeriodicSpec(BraidWord(3, (1, -2, 2)), ModulusSpec(2, 2), 2), 1, sign)


def test_lemma4_needs_the_whole_orbit():
    # changing a single crossing of the repeated word breaks the congruence
    spec = PeriodicSpec(BraidWord(2, (1,)), ModulusSpec(3, 1), 0)
    word = periodic_closure(spec)
    single = BraidWord(2, (-1,) + word.letters[1:])
    before = reduce_mod(alexander_of_closure(word), spec.mod)
    after = reduce_mod(alexander_of_closure(single), spec.mod)
    assert before != after
