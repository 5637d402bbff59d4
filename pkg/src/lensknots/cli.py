"""Command-line front end: ``lensknots <verb> ...``.

Exit status: 0 success, 1 invalid input, 2 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import braid as br
from .lens import (
    LensSpace,
    homeomorphic,
    homotopy_equivalent,
    invariant_set,
    linking_form,
    normal_form,
)
from .obstruction import lemma4_verify, obstruction_report
from .poly import ModulusSpec, conway_from_alexander, format_poly, reduce_mod
from .torus import TorusParams, lift_generator, torus_alexander_closed, torus_braid
from . import suites

CACHE_ENV = "LENSKNOTS_CACHE"


class CrossCheckFailure(RuntimeError):
    pass


def _emit(args, text: str, data):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _delta_record(w: br.BraidWord) -> dict:
    delta = br.alexander_of_closure(w)
    conway = conway_from_alexander(delta)
    return {
        "braid": str(w),
        "strands": w.strands,
        "components": br.closure_components(w),
        "alexander": format_poly(delta),
        "alexander_coeffs": delta.to_json(),
        "conway": format_poly(conway, "z", descending=True),
    }


def cmd_alexander(args):
    if args.input:
        with open(args.input) as fh:
            lines = [ln.split("#", 1)[0].strip() for ln in fh]
        words = [br.BraidWord.parse(ln, args.strands) for ln in lines if ln]
    elif args.braid is not None:
        words = [br.BraidWord.parse(args.braid, args.strands)]
    else:
        raise ValueError("give --braid WORD or --input FILE")
    records = [_delta_record(w) for w in words]
    if args.json:
        print(json.dumps(records if args.input else records[0], sort_keys=True))
        return
    for rec in records:
        if args.input:
            print(f"[n={rec['strands']}: {rec['braid']}]")
        print(f"Δ = {rec['alexander']}")
        print(f"∇ = {rec['conway']}")


def cmd_torus(args):
    tp = TorusParams(args.a, args.b)
    closed = torus_alexander_closed(tp)
    w = torus_braid(tp)
    via_braid = br.alexander_of_closure(w)
    ok = closed == via_braid
    _emit(args, "\n".join([
        f"{tp}: braid n={w.strands}: {w}",
        f"closed form: {closed}",
        f"braid closure: {via_braid}",
        f"cross-check: {'ok' if ok else 'MISMATCH'}",
    ]), {"a": tp.a, "b": tp.b, "braid": str(w), "strands": w.strands,
         "closed_form": format_poly(closed), "braid_closure": format_poly(via_braid), "agree": ok})
    if not ok:
        raise CrossCheckFailure(f"closed form and braid pipeline disagree for {tp}")


def cmd_lift(args):
    tp = lift_generator(args.p, args.q, args.n)
    delta = torus_alexander_closed(tp)
    _emit(args, f"lift of n={args.n} in L({args.p},{args.q}): {tp}\nΔ = {delta}",
          {"p": args.p, "q": args.q, "n": args.n, "torus": [tp.a, tp.b],
           "unknot": tp.is_unknot(), "alexander": format_poly(delta)})


def _sorted_set(L):
    return sorted(invariant_set(L), key=lambda x: (x.numerator * L.p // x.denominator))


def cmd_lens(args):
    L1, L2 = LensSpace(args.p, args.q), LensSpace(args.p2, args.q2)
    homeo, homot = homeomorphic(L1, L2), homotopy_equivalent(L1, L2)
    s1, s2 = _sorted_set(L1), _sorted_set(L2)
    n1, n2 = normal_form(L1), normal_form(L2)
    yn = lambda b: "yes" if b else "no"
    _emit(args, "\n".join([
        f"{L1} vs {L2}",
        f"homeomorphic: {yn(homeo)}",
        f"homotopy-equivalent: {yn(homot)}",
        f"invariant set {L1}: {{{', '.join(map(str, s1))}}}",
        f"invariant set {L2}: {{{', '.join(map(str, s2))}}}",
        f"normal forms: {n1}, {n2}",
    ]), {"homeomorphic": homeo, "homotopy_equivalent": homot,
         "invariant_sets": [[str(x) for x in s1], [str(x) for x in s2]],
         "normal_forms": [[n1.p, n1.q], [n2.p, n2.q]]})


def cmd_linking(args):
    L = LensSpace(args.p, args.q)
    b = args.n if args.m is None else args.m
    lk = linking_form(L, args.n, b)
    _emit(args, f"lk({args.n}[l1], {b}[l1]) in {L} = {lk}",
          {"p": L.p, "q": L.q, "a": args.n, "b": b, "linking": str(lk)})


def cmd_obstruct(args):
    rep = obstruction_report(args.p, args.q, args.n)
    _emit(args, rep.render(), rep.to_json())


def cmd_lemma4(args):
    pattern = br.BraidWord.parse(args.pattern, args.strands)
    spec = br.PeriodicSpec(pattern, ModulusSpec(args.r, args.s), args.q)
    changed = br.orbit_crossing_change(spec, args.pos)
    w1 = br.periodic_closure(spec, args.twist_sign)
    w2 = br.periodic_closure(changed, args.twist_sign)
    d1, d2 = br.alexander_of_closure(w1), br.alexander_of_closure(w2)
    r1, r2 = reduce_mod(d1, spec.mod), reduce_mod(d2, spec.mod)
    ok = lemma4_verify(spec, args.pos, args.twist_sign)
    _emit(args, "\n".join([
        f"L(q):  n={w1.strands}: {w1}",
        f"  Δ = {d1}   mod {spec.mod}: {r1}",
        f"L'(q): n={w2.strands}: {w2}",
        f"  Δ = {d2}   mod {spec.mod}: {r2}",
        f"congruent: {'yes' if ok else 'NO'}",
    ]), {"before": format_poly(d1), "after": format_poly(d2),
         "residue_before": r1.to_json(), "residue_after": r2.to_json(), "congruent": ok})
    if not ok:
        raise CrossCheckFailure("orbit crossing change broke the congruence")


def cmd_verify(args):
    results = [suites.calibration_suite()]
    torus, seen_t = suites.torus_suite(args.max_ab)
    skein, seen_s = suites.skein_suite(args.seed, args.words)
    results += [torus, skein, suites.symmetry_suite(seen_t + seen_s),
                suites.burau_suite(args.seed + 1, args.words // 2),
                suites.theorem1_suite(args.pmax, args.workers),
                suites.lemma4_suite(args.seed, args.specs)]
    total = sum(len(r.failures) for r in results)
    if args.json:
        print(json.dumps({"suites": [{"name": r.name, "checks": r.checks, "violations": r.failures}
                                     for r in results], "violations": total}, sort_keys=True))
    else:
        for r in results:
            print(r.line())
            for f in r.failures[:20]:
                print(f"    {f}")
        print(f"{total} violations")
    if total:
        raise CrossCheckFailure(f"{total} violations")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are invalid input, not cross-check failures
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--cache", default=os.environ.get(CACHE_ENV),
                        help=f"JSON file memoizing Alexander polynomials (default: ${CACHE_ENV})")

    parser = _Parser(prog="lensknots", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("alexander", parents=[common], help="Alexander/Conway polynomial of a braid closure")
    p.add_argument("--braid", help='signed generators, e.g. "1 1 1"')
    p.add_argument("--strands", type=int)
    p.add_argument("--input", help="batch file, one braid word per line (optional n= prefix)")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("torus", parents=[common], help="torus knot closed form vs braid closure")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("lift", parents=[common], help="torus knot covering K_n in L(p,q)")
    for name in ("p", "q", "n"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("lens", help="lens space comparisons")
    lsub = p.add_subparsers(dest="lens_verb", required=True)
    c = lsub.add_parser("compare", parents=[common])
    for name in ("p", "q", "p2", "q2"):
        c.add_argument(name, type=int)
    c.set_defaults(func=cmd_lens)

    p = sub.add_parser("linking", parents=[common], help="linking form n^2 q / p")
    for name in ("p", "q", "n"):
        p.add_argument(name, type=int)
    p.add_argument("m", type=int, nargs="?", help="second class (default: n)")
    p.set_defaults(func=cmd_linking)

    p = sub.add_parser("obstruct", parents=[common], help="congruence obstruction report")
    for name in ("p", "q", "n"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("lemma4", parents=[common], help="one orbit crossing change check")
    p.add_argument("--pattern", required=True)
    p.add_argument("--strands", type=int)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--q", type=int, default=0)
    p.add_argument("--pos", type=int, default=0)
    p.add_argument("--twist-sign", type=int, default=-1, choices=(-1, 1))
    p.set_defaults(func=cmd_lemma4)

    p = sub.add_parser("verify", parents=[common], help="run every reproducibility suite")
    p.add_argument("--pmax", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--words", type=int, default=200)
    p.add_argument("--specs", type=int, default=100)
    p.add_argument("--max-ab", type=int, default=40)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cache:
        br.load_cache(args.cache)
    try:
        args.func(args)
    except CrossCheckFailure as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, IndexError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.cache:
        br.save_cache(args.cache)
    return 0


if __name__ == "__main__":
    sys.exit(main())
