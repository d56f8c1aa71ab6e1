"""Command-line front end.

Commands: classify, order, nr, quotient, teich, decompose, ktheory, snumber,
verify.  Exit codes: 0 ok, 1 property failure, 2 usage error, 3 domain error.
Structured output via --json is byte-deterministic for identical invocations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classification import CaseI, CaseII, classify, supernatural_order
from .errors import DomainError
from .functions import load_function
from .ktheory import algebra_k_groups, ideal_k_groups, primed_algebra_k_groups
from .padic import parse_multiplier, teichmuller
from .representations import orbit_decompose
from .unit_groups import find_nr, quotient_group, unit_order
from .verify import SUITES, Bounds, run_suites


def _emit(args: argparse.Namespace, payload: dict, human: str) -> int:
    if args.json:
        print(json.dumps({"status": "ok", **payload}, sort_keys=True))
    else:
        print(human)
    return 0


def _classification_payload(verdict) -> dict:
    if isinstance(verdict, CaseI):
        return {
            "case": "I",
            "threshold": verdict.threshold,
            "order": verdict.order,
            "exact": verdict.exact,
        }
    if isinstance(verdict, CaseII):
        return {"case": "II", "order": verdict.order, "exact": verdict.exact}
    return {
        "case": "III",
        "valuation": verdict.valuation,
        "unit_residue": verdict.unit_residue,
        "precision": verdict.precision,
        "exact": verdict.exact,
    }


def _classification_text(verdict) -> str:
    note = "" if verdict.exact else " (consistent up to the known precision)"
    if isinstance(verdict, CaseI):
        return (
            f"case I: unit, not a root of unity; threshold level {verdict.threshold}, "
            f"order {verdict.order} at the threshold{note}"
        )
    if isinstance(verdict, CaseII):
        return f"case II: root of unity of order {verdict.order}{note}"
    return (
        f"case III: valuation {verdict.valuation}, unit cofactor "
        f"{verdict.unit_residue} mod p^{verdict.precision}{note}"
    )


def cmd_classify(args: argparse.Namespace) -> int:
    verdict = classify(args.p, parse_multiplier(args.r), precision=args.precision)
    payload = {"p": args.p, "r": args.r, **_classification_payload(verdict)}
    return _emit(args, payload, _classification_text(verdict))


def cmd_order(args: argparse.Namespace) -> int:
    value = unit_order(args.p, args.level, parse_multiplier(args.r))
    payload = {"p": args.p, "r": args.r, "level": args.level, "order": value}
    return _emit(args, payload, str(value))


def cmd_nr(args: argparse.Namespace) -> int:
    value = find_nr(args.p, parse_multiplier(args.r), cap=args.cap)
    payload = {"p": args.p, "r": args.r, "threshold": value}
    return _emit(args, payload, str(value))


def cmd_quotient(args: argparse.Namespace) -> int:
    quotient = quotient_group(args.p, parse_multiplier(args.r), cap=args.cap)
    payload = {
        "p": args.p,
        "r": args.r,
        "level": quotient.level,
        "subgroup_order": quotient.subgroup.order,
        "order": quotient.order,
        "coset_reps": list(quotient.coset_reps),
        "table": [list(row) for row in quotient.table],
    }
    lines = [
        f"level: {quotient.level}",
        f"subgroup order: {quotient.subgroup.order}",
        f"quotient order: {quotient.order}",
        f"coset representatives: {' '.join(str(c) for c in quotient.coset_reps)}",
        "table:",
    ]
    lines += ["  " + " ".join(str(v) for v in row) for row in quotient.table]
    return _emit(args, payload, "\n".join(lines))


def cmd_teich(args: argparse.Namespace) -> int:
    value = teichmuller(args.p, args.index, args.level)
    payload = {"p": args.p, "i": args.index, "level": args.level, "residue": value}
    return _emit(args, payload, str(value))


def cmd_decompose(args: argparse.Namespace) -> int:
    spec = parse_multiplier(args.r)
    dec = orbit_decompose(args.p, spec, args.x, precision=args.precision)
    payload = {
        "p": args.p,
        "r": args.r,
        "x": args.x,
        "case": dec.case,
        "p_exponent": dec.p_exponent,
        "coset_index": dec.coset_index,
        "section": dec.section_value,
        "tail": dec.tail,
        "precision": dec.precision,
        "k": dec.k,
    }
    parts = [
        f"case {dec.case}",
        f"p-exponent {dec.p_exponent}",
        f"coset {dec.coset_index} (section {dec.section_value})",
        f"tail {dec.tail} mod p^{dec.precision}",
    ]
    if dec.k is not None:
        parts.append(f"k {dec.k}")
    return _emit(args, payload, ", ".join(parts))


def cmd_ktheory(args: argparse.Namespace) -> int:
    verdict = classify(args.p, parse_multiplier(args.r), precision=args.precision)
    if args.ideal:
        k0, k1 = ideal_k_groups(verdict, args.p, primed=args.primed)
        variant = "ideal-primed" if args.primed else "ideal"
    elif args.primed:
        k0, k1 = primed_algebra_k_groups(verdict, args.p)
        variant = "algebra-primed"
    else:
        k0, k1 = algebra_k_groups(verdict, args.p)
        variant = "algebra"
    payload = {
        "p": args.p,
        "r": args.r,
        "variant": variant,
        "case": _classification_payload(verdict)["case"],
        "K0": str(k0),
        "K1": str(k1),
    }
    return _emit(args, payload, f"K0 = {k0}\nK1 = {k1}")


def cmd_snumber(args: argparse.Namespace) -> int:
    number = supernatural_order(args.p, parse_multiplier(args.r), cap=args.cap)
    factors = [[q, "inf" if e == float("inf") else e] for q, e in number.factors]
    payload = {"p": args.p, "r": args.r, "supernatural": str(number), "factors": factors}
    return _emit(args, payload, str(number))


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    bounds = Bounds(
        max_p=args.max_p,
        max_level=args.max_level,
        max_len=args.max_len,
        window=args.window,
        seed=args.seed,
        p=args.p,
        r=parse_multiplier(args.r) if args.r else None,
        function=load_function(args.fn) if args.fn else None,
    )
    results = run_suites(names, bounds, parallel=args.parallel)
    failures = sum(result.failed for result in results)
    if args.json:
        payload = {
            "status": "ok" if failures == 0 else "fail",
            "results": [
                {
                    "suite": result.suite,
                    "property": result.name,
                    "passed": result.passed,
                    "failed": result.failed,
                    "failures": result.failures,
                }
                for result in results
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for result in results:
            print(f"{result.suite}/{result.name}: {result.passed} passed, {result.failed} failed")
            for detail in result.failures:
                print(f"  FAIL {detail}")
        print(f"{len(results)} properties, {failures} failing checks")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padicmult",
        description="Exact computations around multiplication operators on p-adic integers.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON payload")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.set_defaults(func=handler)
        return cmd

    c = command("classify", cmd_classify, "case trichotomy of a multiplier")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-r", required=True, help='multiplier: "2", "-7", "teich(2)", "digits:[1,2,0]"')
    c.add_argument("--precision", type=int, default=6)

    c = command("order", cmd_order, "multiplicative order in U_N")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-r", required=True)
    c.add_argument("-N", dest="level", type=int, required=True)

    c = command("nr", cmd_nr, "threshold level where orders gain a factor of p")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-r", required=True)
    c.add_argument("--cap", type=int, default=64)

    c = command("quotient", cmd_quotient, "finite quotient of the unit sphere")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-r", required=True)
    c.add_argument("--cap", type=int, default=64)

    c = command("teich", cmd_teich, "root-of-unity lift of a residue")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-i", dest="index", type=int, required=True)
    c.add_argument("-N", dest="level", type=int, required=True)

    c = command("decompose", cmd_decompose, "orbit decomposition of an integer")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-r", required=True)
    c.add_argument("-x", type=int, required=True)
    c.add_argument("--precision", type=int, default=6)

    c = command("ktheory", cmd_ktheory, "symbolic K-group descriptors")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-r", required=True)
    c.add_argument("--precision", type=int, default=6)
    c.add_argument("--primed", action="store_true", help="finite-cyclic crossed product")
    c.add_argument("--ideal", action="store_true", help="kernel ideal instead of the algebra")

    c = command("snumber", cmd_snumber, "supernatural order of a unit multiplier")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("-r", required=True)
    c.add_argument("--cap", type=int, default=64)

    c = command("verify", cmd_verify, "run the property suites")
    c.add_argument("--suite", choices=["all", *SUITES], default="all")
    c.add_argument("--max-p", dest="max_p", type=int, default=7)
    c.add_argument("--max-N", dest="max_level", type=int, default=5)
    c.add_argument("--max-len", dest="max_len", type=int, default=4)
    c.add_argument("--window", type=int, default=8)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("-p", type=int, default=None, help="pin the prime (digits suite)")
    c.add_argument("-r", default=None, help="pin the multiplier (digits suite)")
    c.add_argument("--fn", default=None, help="JSON function file to use instead of random ones")
    c.add_argument("--parallel", action="store_true", help="run suites on a thread pool")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        if getattr(args, "json", False):
            print(json.dumps({"status": "error", "code": exc.code, "message": str(exc)}, sort_keys=True))
        else:
            print(f"error ({exc.code}): {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
