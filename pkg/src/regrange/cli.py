"""Command-line interface.

Exit codes: 0 success, 2 invalid input (including out-of-range targets),
3 internal certification failure or failed verification.  Every subcommand
takes --json for machine-readable output; identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from regrange import __version__, kernels
from regrange.construct import (
    algebraic_range,
    certificate,
    construct_algebraic,
    construct_scheme_ideal,
    regularity_range,
    verify_certificate,
)
from regrange.errors import CertificationError, InputError, RegRangeError
from regrange.hilbert import (
    gotzmann_decomposition,
    gotzmann_number_or_none,
    is_admissible,
    parse_hilbert_function,
    parse_polynomial,
)
from regrange.minfun import minimal_f, minimal_g
from regrange.monomial import lex_ideal, reg_ss
from regrange.oracle import verify_main_theorem
from regrange.selfcheck import run_all


def _emit_json(data):
    print(json.dumps(data, indent=2, sort_keys=True))


def cmd_range(args):
    u = parse_hilbert_function(args.hf)
    rr = regularity_range(u)
    tail = u.tail
    r_tail = gotzmann_number_or_none(tail)
    r_dtail = gotzmann_number_or_none(tail.delta()) if tail.degree >= 1 else None
    if args.json:
        _emit_json(
            {
                "hilbert_function": u.literal(),
                "m_u": rr.min_reg,
                "M_u": rr.max_reg,
                "rho": u.rho(),
                "tail": str(tail),
                "gotzmann_tail": r_tail,
                "gotzmann_derived_tail": r_dtail,
            }
        )
    else:
        print(f"{rr.min_reg} {rr.max_reg}")
        print(f"rho = {u.rho()}")
        print(f"tail = {tail}")
        if r_tail is not None:
            print(f"gotzmann number of tail = {r_tail}")
        if r_dtail is not None:
            print(f"gotzmann number of derived tail = {r_dtail}")
    return 0


def cmd_construct(args):
    u = parse_hilbert_function(args.hf)
    ideal = construct_scheme_ideal(u, args.m, args.n)
    cert = certificate(u, args.m, ideal)
    if args.json:
        _emit_json(cert)
    else:
        print(ideal.to_text())
        print(f"hilbert function: {u}")
        print(f"interval: [{cert['m_u']}, {cert['M_u']}]")
        print(f"requested m: {args.m}")
        print(f"hv = {tuple(cert['hv'])}")
        print(f"gv = {tuple(cert['gv'])}")
    return 0


def cmd_algebraic(args):
    f = parse_hilbert_function(args.hf)
    ideal = construct_algebraic(f, args.a)
    rr, _ = algebraic_range(f)
    if args.json:
        _emit_json(
            {
                "hilbert_function": f.literal(),
                "interval": [rr.min_reg, rr.max_reg],
                "requested_a": args.a,
                "ideal": ideal.to_json_dict(),
            }
        )
    else:
        print(ideal.to_text())
        print(f"hilbert function: {f}")
        print(f"interval: [{rr.min_reg}, {rr.max_reg}]")
        print(f"requested a: {args.a}")
    return 0


def cmd_lex(args):
    h = parse_hilbert_function(args.hf)
    nvars = args.n if args.n is not None else max(1, h(1))
    ideal = lex_ideal(h, nvars)
    r = reg_ss(ideal)
    if args.json:
        data = ideal.to_json_dict()
        data["hilbert_function"] = h.literal()
        _emit_json(data)
    else:
        print(ideal.to_text())
        print(f"regularity = {r}")
    return 0


def cmd_minfun(args):
    p = parse_polynomial(args.poly)
    h = minimal_g(p, args.r) if args.g else minimal_f(p, args.r)
    if args.json:
        _emit_json({"function": h.literal(), "display": str(h)})
    else:
        print(h.literal())
    return 0


def cmd_gotzmann(args):
    p = parse_polynomial(args.poly)
    seq = gotzmann_decomposition(p)
    if args.json:
        _emit_json(
            {
                "polynomial": str(p),
                "admissible": seq is not None,
                "gotzmann_number": None if seq is None else len(seq),
                "decomposition_exponents": None if seq is None else list(seq),
            }
        )
    else:
        if seq is None:
            print("not admissible")
        else:
            print(f"gotzmann number = {len(seq)}")
            print("admissible = true")
            print(f"decomposition exponents = {tuple(seq)}")
    return 0


def cmd_vectors(args):
    from regrange.borelvec import gv_from, hv_from

    u = parse_hilbert_function(args.hf)
    n = args.n if args.n is not None else u(1) - 1
    if args.m < max(1, u.rho()):
        raise InputError(
            f"degree m={args.m} must be at least max(1, rho) = {max(1, u.rho())}"
        )
    hv = hv_from(u, args.m, n)
    gv = gv_from(u.tail, args.m, n)
    if args.json:
        _emit_json({"hv": list(hv), "gv": list(gv), "m": args.m, "n": n})
    else:
        print(f"hv = {hv}")
        print(f"gv = {gv}")
    return 0


def cmd_enumerate(args):
    u = parse_hilbert_function(args.hf)
    report = verify_main_theorem(u, args.n, args.cap, args.threads)
    if args.json:
        _emit_json(report)
    else:
        print(f"n = {report['n']}")
        print(f"m_u M_u = {report['m_u']} {report['M_u']}")
        print("spectrum = " + " ".join(str(m) for m in report["spectrum"]))
        print(f"ideals = {report['ideal_count']}")
        for m, count in sorted(report["count_by_regularity"].items()):
            print(f"  regularity {m}: {count} ideal(s)")
        print("PASS" if report["pass"] else "FAIL: " + "; ".join(report["failures"]))
    if not report["pass"]:
        raise CertificationError("; ".join(report["failures"]))
    return 0


def cmd_selfcheck(args):
    if args.verify_file:
        with open(args.verify_file, encoding="utf-8") as fh:
            data = json.load(fh)
        failures = verify_certificate(data)
        if args.json:
            _emit_json({"pass": not failures, "failures": failures})
        else:
            print("PASS" if not failures else "FAIL: " + "; ".join(failures))
        if failures:
            raise CertificationError("; ".join(failures))
        return 0
    results = run_all(seed=args.seed, iters=args.iters)
    bad = False
    if args.json:
        _emit_json(
            {
                "backend": kernels.BACKEND,
                "seed": args.seed,
                "iters": args.iters,
                "results": [
                    {"name": r.name, "cases": r.cases, "failures": r.failures}
                    for r in results
                ],
                "pass": all(r.passed for r in results),
            }
        )
        bad = not all(r.passed for r in results)
    else:
        print(f"backend: {kernels.BACKEND}")
        for r in results:
            if r.passed:
                print(f"PASS {r.name} ({r.cases} cases)")
            else:
                bad = True
                print(f"FAIL {r.name} ({r.cases} cases, {len(r.failures)} failures)")
                for msg in r.failures[:5]:
                    print(f"  {msg}")
    if bad:
        raise CertificationError("property suites reported failures")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="regrange",
        description=(
            "Exact interval of Castelnuovo-Mumford regularities achievable for "
            "a Hilbert function, with certified strongly stable ideal witnesses."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=fn)
        return p

    p = add("range", cmd_range, "print the achievable regularity interval")
    p.add_argument("hf", help="Hilbert function literal, e.g. '1,5 ; 2z^2+3z+1'")

    p = add("construct", cmd_construct, "build a certified saturated strongly stable ideal")
    p.add_argument("hf")
    p.add_argument("-m", type=int, required=True, help="target regularity")
    p.add_argument("-n", type=int, default=None, help="ambient index n (x0..xn)")

    p = add("algebraic", cmd_algebraic, "build an ideal of x1..xn with the given quotient Hilbert function")
    p.add_argument("hf")
    p.add_argument("-a", type=int, required=True, help="target regularity")

    p = add("lex", cmd_lex, "lex-segment ideal of an O-sequence")
    p.add_argument("hf")
    p.add_argument("-n", type=int, default=None, help="number of variables x1..xn")

    p = add("minfun", cmd_minfun, "minimal Hilbert function with a given tail and regularity bound")
    p.add_argument("poly", help="tail polynomial in z")
    p.add_argument("-r", type=int, required=True, help="target regularity")
    p.add_argument("--g", action="store_true", help="bumped variant pinning the regularity")

    p = add("gotzmann", cmd_gotzmann, "Gotzmann number and admissibility of a polynomial")
    p.add_argument("poly")

    p = add("vectors", cmd_vectors, "height and growth vectors forced on one degree")
    p.add_argument("hf")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, default=None)

    p = add("enumerate", cmd_enumerate, "brute-force spectrum report over all saturated strongly stable ideals")
    p.add_argument("hf")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("--cap", type=int, default=None, help="search-space cap (or REGRANGE_ENUM_CAP)")
    p.add_argument("--threads", type=int, default=1)

    p = add("selfcheck", cmd_selfcheck, "run the seed-pinned property suites")
    p.add_argument("--seed", type=int, default=20250810)
    p.add_argument("--iters", type=int, default=10_000)
    p.add_argument("--verify-file", default=None, help="re-verify a construct --json certificate")

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CertificationError as exc:
        print(f"internal certification failure: {exc}", file=sys.stderr)
        return 3
    except (InputError, RegRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
