"""Command-line front end: construct, enumerate, check, and certify.

Output is deterministic: identical invocations produce identical bytes.
Results go to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 a checked property was violated, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .analysis import (
    certificate,
    check_divisibility,
    check_growth,
    check_ratio_bounds,
    cross_check,
    dissect_verdict,
)
from .automata import ap_machine, decompose, dfa_from_json
from .construction import Params, suggest_params
from .lengthsets import (
    jsonl_line,
    make_geometric_core,
    make_scaled_factorials,
)


def _ratio_arg(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a p/q rational: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"ratio must be positive: {text}")
    return value


def _params(args: argparse.Namespace) -> Params:
    return Params(args.alpha, args.beta)


def _load_dfa(path: str):
    with open(path, "r", encoding="utf-8") as fp:
        try:
            obj = json.load(fp)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: invalid JSON: {exc}") from None
    return dfa_from_json(obj)


def _fraction_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def cmd_gen(args: argparse.Namespace) -> int:
    p = _params(args)
    stream = make_scaled_factorials(p).records()
    if args.format == "csv":
        print("n,j,length")
    emitted = 0
    for n, j, length in stream:
        if args.count is not None and emitted >= args.count:
            break
        if args.n_max is not None and n > args.n_max:
            break
        if args.format == "jsonl":
            print(jsonl_line(n, j, length))
        elif args.format == "csv":
            print(f"{n},{j},{length}")
        else:
            print(length)
        emitted += 1
    return 0


def cmd_check_growth(args: argparse.Namespace) -> int:
    p = _params(args)
    s = make_geometric_core(p, args.c) if args.core else make_scaled_factorials(p)
    report = check_growth(s, args.mode, args.c, args.count)
    doc = {
        "set": s.descriptor,
        "mode": report.mode,
        "c": _fraction_str(report.c),
        "checked_pairs": report.checked_count,
        "ok": report.ok,
        "witness": None
        if report.witness is None
        else {
            "index": report.witness[0],
            "length": str(report.witness[1]),
            "successor_length": str(report.witness[2]),
        },
    }
    print(json.dumps(doc))
    return 0 if report.ok else 1


def cmd_check_divisibility(args: argparse.Namespace) -> int:
    p = _params(args)
    report = check_divisibility(p, args.n_max)
    doc = {
        "alpha": p.alpha,
        "beta": p.beta,
        "n_max": args.n_max,
        "checked": report.checked_count,
        "ok": report.ok,
        "witness": None
        if report.witness is None
        else {
            "j": report.witness[0],
            "n": report.witness[1],
            "length": str(report.witness[2]),
            "divisor": str(report.witness[3]),
        },
    }
    print(json.dumps(doc))
    return 0 if report.ok else 1


def cmd_check_ratio(args: argparse.Namespace) -> int:
    p = _params(args)
    report = check_ratio_bounds(p, args.count)
    doc = {
        "alpha": p.alpha,
        "beta": p.beta,
        "steps": report.steps,
        "within_level": report.within_level,
        "cross_level": report.cross_level,
        "equality_cases": report.equality_cases,
        "gap_skips": [
            {
                "from": {"j": skip.from_index[0], "n": skip.from_index[1]},
                "to": {"j": skip.to_index[0], "n": skip.to_index[1]},
            }
            for skip in report.gap_skips
        ],
        "ok": report.ok,
        "witness": None
        if report.witness is None
        else {
            "from": {"j": report.witness[0][0], "n": report.witness[0][1]},
            "to": {"j": report.witness[1][0], "n": report.witness[1][1]},
            "reason": report.witness[2],
        },
    }
    print(json.dumps(doc))
    return 0 if report.ok else 1


def cmd_dissect(args: argparse.Namespace) -> int:
    p = _params(args)
    if args.dfa is not None:
        if args.q is not None or args.r is not None:
            raise ValueError("give either --dfa or --q/--r, not both")
        machine = _load_dfa(args.dfa)
    else:
        if args.q is None or args.r is None:
            raise ValueError("need --dfa FILE or both --q and --r")
        machine = ap_machine(args.q, args.r)
    verdict = dissect_verdict(p, machine)
    cross = None
    if args.cross_check is not None:
        cross = (args.cross_check, cross_check(p, machine, args.cross_check))
    print(json.dumps(certificate(p, machine, verdict, cross), indent=2))
    return 0


def cmd_suggest(args: argparse.Namespace) -> int:
    print(json.dumps(suggest_params(args.c).to_json()))
    return 0


def cmd_dfa_normalize(args: argparse.Namespace) -> int:
    print(json.dumps(_load_dfa(args.path).to_json()))
    return 0


def cmd_dfa_decompose(args: argparse.Namespace) -> int:
    machine = _load_dfa(args.path)
    components, exceptional = decompose(machine)
    doc = {
        "components": [{"q": comp.q, "r": comp.r} for comp in components],
        "exceptional_lengths": [str(x) for x in exceptional],
    }
    print(json.dumps(doc))
    return 0


def _add_params_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--alpha", type=int, required=True, help="lower generator, >= 1")
    sub.add_argument("--beta", type=int, required=True, help="upper generator, > alpha")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unary-dissect",
        description=(
            "Construct a geometrically growing unary language from scaled "
            "factorials and certify that no unary regular language dissects it."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    gen = subs.add_parser("gen", help="enumerate the language's word lengths")
    _add_params_args(gen)
    bound = gen.add_mutually_exclusive_group(required=True)
    bound.add_argument("--count", type=int, help="emit this many lengths")
    bound.add_argument("--n-max", dest="n_max", type=int, help="emit all levels <= N")
    gen.add_argument(
        "--format", choices=["jsonl", "csv", "plain"], default="jsonl"
    )
    gen.set_defaults(func=cmd_gen, count=None, n_max=None)

    check = subs.add_parser("check", help="verify a proven property at desk scale")
    checks = check.add_subparsers(dest="check_command", required=True)

    growth = checks.add_parser("growth", help="growth-rate property of the language")
    _add_params_args(growth)
    growth.add_argument("--c", type=_ratio_arg, required=True, help="bound as p/q")
    growth.add_argument("--count", type=int, required=True, help="prefix size")
    growth.add_argument(
        "--mode", choices=["geometric", "constant"], default="geometric"
    )
    growth.add_argument(
        "--core",
        action="store_true",
        help="check the c-geometrically-growing core instead of the full language",
    )
    growth.set_defaults(func=cmd_check_growth)

    div = checks.add_parser("divisibility", help="level divisor divides every length")
    _add_params_args(div)
    div.add_argument("--n-max", dest="n_max", type=int, required=True)
    div.set_defaults(func=cmd_check_divisibility)

    ratio = checks.add_parser("ratio", help="successor length ratios stay in bounds")
    _add_params_args(ratio)
    ratio.add_argument("--count", type=int, required=True, help="successor steps")
    ratio.set_defaults(func=cmd_check_ratio)

    dissect = subs.add_parser(
        "dissect", help="certify that a regular machine does not dissect the language"
    )
    _add_params_args(dissect)
    dissect.add_argument("--dfa", help="machine JSON file (normal or table form)")
    dissect.add_argument("--q", type=int, help="progression offset (with --r)")
    dissect.add_argument("--r", type=int, help="progression period (with --q)")
    dissect.add_argument(
        "--cross-check",
        dest="cross_check",
        type=int,
        help="replay the verdict against this many enumerated lengths",
    )
    dissect.set_defaults(func=cmd_dissect)

    suggest = subs.add_parser("suggest", help="pick (alpha, beta) below a growth bound")
    suggest.add_argument("--c", type=_ratio_arg, required=True, help="bound as p/q, > 1")
    suggest.set_defaults(func=cmd_suggest)

    dfa = subs.add_parser("dfa", help="inspect one-letter machines")
    dfa_subs = dfa.add_subparsers(dest="dfa_command", required=True)
    normalize = dfa_subs.add_parser("normalize", help="print tail+cycle normal form")
    normalize.add_argument("path")
    normalize.set_defaults(func=cmd_dfa_normalize)
    decomp = dfa_subs.add_parser(
        "decompose", help="split into progression components plus exceptions"
    )
    decomp.add_argument("path")
    decomp.set_defaults(func=cmd_dfa_decompose)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
