"""Command-line front end.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal guard tripped.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .duality import (
    DualMonomial,
    madsen_generator_degrees,
    milnor_generator_degrees,
    pair,
    poincare_series,
)
from .errors import DomainError, GuardError, ParseError
from .expr import MAX_SUPERSCRIPT, format_element, format_tensor, parse_element
from .freealg import coproduct, tensor_map
from .limitmaps import DEFAULT_LIFT_STEPS, lift, phi_R, phi_U_to_A2, pi
from .nishida import sq_act
from .quotients import DEFAULT_MAX_STEPS, Algebra, basis, madsen_decompose, milnor_decompose, normalize
from .seqcore import excess, order_key, sort_sequences

ALGEBRAS = [a.value for a in Algebra]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _comma_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--max-steps", type=int, help="rewrite-step cap (normalisation or lifting)")
    common.add_argument("--max-superscript", type=int, default=MAX_SUPERSCRIPT)

    parser = _Parser(prog="qalgebra", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help, expr=True):
        p = sub.add_parser(name, parents=[common], help=help)
        if expr:
            p.add_argument("expression")
        return p

    p = verb("normalize", "reduce to normal form")
    p.add_argument("--algebra", choices=ALGEBRAS, required=True)
    p = verb("coproduct", "coproduct, optionally normalised componentwise")
    p.add_argument("--algebra", choices=ALGEBRAS, default="f0")
    verb("excess", "excess of each monomial")
    p = verb("action", "opposite Steenrod action Sq^a")
    p.add_argument("--sq", type=int, required=True)
    p.add_argument("--algebra", choices=ALGEBRAS, required=True)
    p = verb("basis", "basis of an algebra in one degree", expr=False)
    p.add_argument("--algebra", choices=ALGEBRAS, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--length", type=int)
    p = verb("dims", "dimension table", expr=False)
    p.add_argument("--algebra", choices=ALGEBRAS, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--length", type=int)
    p.add_argument("--check-dual", action="store_true", help="compare with the dual Poincare series")
    p = verb("pair", "pair a dual monomial with a monomial")
    p.add_argument("--lambda", dest="lam", type=_comma_list, required=True, help="lambda_1,...,lambda_k")
    p = verb("decompose", "Madsen or Milnor coordinates of a monomial")
    p.add_argument("--style", choices=["madsen", "milnor"], required=True)
    p.add_argument("--length", type=int)
    p = verb("lift", "preimage under pi_k of an R[k] monomial")
    p.add_argument("--length", type=int, required=True)
    p = verb("pi", "pi_k: A2(k) -> R[k]")
    p.add_argument("--length", type=int, required=True)
    p = verb("phi", "phi_k: R[k] -> R[k+1], or U[k] -> A2(k) with --algebra u")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--algebra", choices=["r", "u"], default="r")
    verb("verify", "run the acceptance suites", expr=False)
    return parser


def _single(x: frozenset, what: str) -> tuple[int, ...]:
    if len(x) != 1:
        raise DomainError(f"{what} expects a single monomial")
    return next(iter(x))


def _terms(x) -> list[list[int]]:
    return [list(s) for s in sort_sequences(x)]


def _execute(args) -> tuple[object, str, list]:
    """Return (json result, text output, checks)."""
    parse = lambda: parse_element(args.expression, args.max_superscript)  # noqa: E731
    steps = args.max_steps or DEFAULT_MAX_STEPS
    v = args.verb
    if v == "normalize":
        r = normalize(parse(), args.algebra, steps)
        return {"terms": _terms(r)}, format_element(r), []
    if v == "coproduct":
        t = coproduct(parse())
        if args.algebra != "f0":
            t = tensor_map(lambda e: normalize(e, args.algebra, steps), t)
        terms = sorted(t, key=lambda tup: [order_key(s) for s in tup])
        return {"terms": [[list(s) for s in tup] for tup in terms]}, format_tensor(t), []
    if v == "excess":
        rows = [(s, excess(s)) for s in sort_sequences(parse())]
        shown = ["inf" if e == float("inf") else e for _, e in rows]
        text = "\n".join(f"{format_element({s})}\t{e}" for (s, _), e in zip(rows, shown))
        return [{"monomial": list(s), "excess": e} for (s, _), e in zip(rows, shown)], text, []
    if v == "action":
        r = sq_act(args.sq, parse(), args.algebra)
        return {"terms": _terms(r)}, format_element(r), []
    if v == "basis":
        seqs = basis(args.algebra, args.degree, args.length)
        return [list(s) for s in seqs], "\n".join(format_element({s}) for s in seqs), []
    if v == "dims":
        return _dims(args)
    if v == "pair":
        s = _single(parse(), "pair")
        bit = pair(DualMonomial(len(args.lam), tuple(args.lam)), s)
        return bit, str(bit), []
    if v == "decompose":
        s = _single(parse(), "decompose")
        if args.style == "madsen":
            vec = madsen_decompose(s)
        else:
            vec = milnor_decompose(s, args.length if args.length is not None else max(len(s), 1))
        return list(vec), ",".join(map(str, vec)), []
    if v == "lift":
        s = _single(parse(), "lift")
        r = lift(args.length, s, args.max_steps or DEFAULT_LIFT_STEPS)
        return {"terms": _terms(r)}, format_element(r), []
    if v == "pi":
        r = pi(args.length, parse())
        return {"terms": _terms(r)}, format_element(r), []
    if v == "phi":
        x = parse()
        r = phi_U_to_A2(x, args.length) if args.algebra == "u" else phi_R(args.length, x)
        return {"terms": _terms(r)}, format_element(r), []
    if v == "verify":
        results = checks.run_all()
        passed = sum(r.passed for r in results)
        lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}" for r in results]
        lines.append(f"{passed}/{len(results)} suites passed")
        return {"passed": passed, "failed": len(results) - passed}, "\n".join(lines), [r.as_dict() for r in results]
    raise UsageError(f"unknown verb {v}")


def _dims(args):
    alg = Algebra.parse(args.algebra)
    dims = [len(basis(alg, d, args.length)) for d in range(args.max_degree + 1)]
    table = [{"degree": d, "dimension": n} for d, n in enumerate(dims)]
    found = []
    if args.check_dual:
        if alg is Algebra.A2 and args.length is None:
            series = poincare_series(milnor_generator_degrees(args.max_degree), args.max_degree)
        elif alg is Algebra.R and args.length:
            series = poincare_series(madsen_generator_degrees(args.length), args.max_degree)
        elif alg is Algebra.F0 and args.length:
            series = poincare_series([1] * args.length, args.max_degree)
        else:
            series = None
        if series is None:
            raise DomainError(f"no dual Poincare series known for {alg.name} with these options")
        for row, expected in zip(table, series):
            row["dual"] = expected
            row["match"] = row["dimension"] == expected
            found.append({"name": f"degree {row['degree']}", "pass": row["match"],
                          "detail": f"{row['dimension']} vs {expected}"})
    lines = []
    for row in table:
        line = f"{row['degree']}\t{row['dimension']}"
        if args.check_dual:
            line += f"\t{row['dual']}\t{'ok' if row['match'] else 'MISMATCH'}"
        lines.append(line)
    return table, "\n".join(lines), found


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    inputs = {k: v for k, v in vars(args).items() if k not in ("json", "verb")}
    try:
        result, text, found = _execute(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GuardError as exc:
        print(f"internal guard tripped: {exc}", file=sys.stderr)
        return 3
    if args.json:
        report = {"command": args.verb, "inputs": inputs, "result": result, "checks": found}
        print(json.dumps(report, sort_keys=True))
    else:
        print(text)
    if args.verb == "verify" and not all(c["pass"] for c in found):
        return 1
    if args.verb == "dims" and found and not all(c["pass"] for c in found):
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
