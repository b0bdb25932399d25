"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 resource limit hit, 3 a check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass

from .errors import DefectError, Overflow, ParseError, PosetError
from .hochschild import coefficient_cross_check, strata, expand_ar_power, verify_lemma_gph
from .lexsum import (
    LexSumSpec, L_chain_substitution, factor_L, floor_theorem_L_minus, lex_sum,
    parse_sp, pascal_arrays, sp_evaluate, sp_to_poset,
)
from .linearization import GroupRingElement, enumerate_linearizations, group_ring_L
from .orderchrom import count_maps, order_chromatic_polynomial, qualifying_primes, verify_divisibility
from .poset import ConstraintSystem, Poset
from .strengthen import check_strengthening, strengthen_felsner, strengthen_iterative

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_MISMATCH = 0, 1, 2, 3


class CheckFailed(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None
    limit: int | None
    output_format: str

    def __post_init__(self):
        if self.limit is not None and self.limit <= 0:
            raise ValueError("--limit must be positive")


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise PosetError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})") from None


def _emit(args, text_lines, payload):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _oracle_L(p: Poset, limit) -> GroupRingElement:
    even = odd = 0
    for lin in enumerate_linearizations(p, limit):
        if lin.sign > 0:
            even += 1
        else:
            odd += 1
    return GroupRingElement(even, odd)


def _pm(L: GroupRingElement) -> str:
    return f"L+={L.plus} L-={L.minus}"


def cmd_count(args):
    p = Poset.from_dict(_read_json(args.file))
    L = group_ring_L(p, args.limit)
    lines = [f"{_pm(L)} (L0={L.even} L1={L.odd})"]
    payload = {"L0": L.even, "L1": L.odd, "L+": L.plus, "L-": L.minus}
    if args.check:
        oracle = _oracle_L(p, args.limit)
        payload["oracle"] = {"L0": oracle.even, "L1": oracle.odd}
        lines.append(f"oracle {_pm(oracle)}")
        if oracle != L:
            _emit(args, lines, payload)
            raise CheckFailed("dynamic programme and enumeration disagree")
    _emit(args, lines, payload)


def cmd_chrom(args):
    s = ConstraintSystem.from_dict(_read_json(args.file))
    res = order_chromatic_polynomial(s)
    primes = "{" + ", ".join(str(q) for q in sorted(res.denominator_prime_set)) + "}"
    lines = [f"C(S,n) = {res.polynomial.format()}, c={res.component_count}, "
             f"bound={res.bound}, primes={primes}"]
    payload = {
        "polynomial": [str(c) for c in res.polynomial.coeffs],
        "text": res.polynomial.format(),
        "c": res.component_count, "bound": res.bound,
        "primes": sorted(res.denominator_prime_set), "divisibility": [],
    }
    ok = True
    ps = [args.prime] if args.prime else qualifying_primes(s, 2)
    for q in ps:
        rep = verify_divisibility(s, q, range(0, 2 * q + 1))
        lines.extend("  " + ln for ln in rep.lines())
        payload["divisibility"].append({"p": q, "passed": rep.passed})
        ok &= rep.passed
    if args.check:
        for n in range(len(s) + 5):
            if res.polynomial(n) != count_maps(s, n):
                ok = False
                lines.append(f"mismatch at n={n}")
    _emit(args, lines, payload)
    if not ok:
        raise CheckFailed("order-chromatic check failed")


def cmd_sp(args):
    expr = parse_sp(args.expression)
    L = sp_evaluate(expr)
    lines = [_pm(L)]
    payload = {"L+": L.plus, "L-": L.minus}
    if args.check:
        oracle = group_ring_L(sp_to_poset(expr), args.limit)
        lines.append(f"oracle {_pm(oracle)}")
        payload["oracle"] = {"L+": oracle.plus, "L-": oracle.minus}
        if oracle.pm != L.pm:
            _emit(args, lines + ["MISMATCH"], payload)
            raise CheckFailed("closed form disagrees with counting")
    _emit(args, lines, payload)


def cmd_pascal(args):
    plus, minus = pascal_arrays(args.rows)
    lines = ["L+"] + [" ".join(str(v) for v in row) for row in plus]
    lines += ["L-"] + [" ".join(str(v) for v in row) for row in minus]
    _emit(args, lines, {"plus": plus, "minus": minus})


def _sizes(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"bad size list {text!r}") from None


def cmd_floor(args):
    base = Poset.from_dict(_read_json(args.file))
    sizes = _sizes(args.sizes)
    value = floor_theorem_L_minus(base, sizes)
    oracle = L_chain_substitution(base, sizes).minus
    if value is None:
        lines = [f"formula not applicable; counted L-={oracle}"]
    else:
        lines = [f"formula L-={value}; counted L-={oracle}"]
    payload = {"formula": value, "oracle": oracle}
    _emit(args, lines, payload)
    if args.check and value is not None and value != oracle:
        raise CheckFailed(f"formula gives {value}, counting gives {oracle}")


def cmd_strengthen(args):
    p = Poset.from_dict(_read_json(args.file))
    chain = [x for x in args.chain.split(",") if x] if args.chain else []
    build = strengthen_felsner if args.method == "felsner" else strengthen_iterative
    res = build(p, chain)
    added = sorted(res.added_relations, key=lambda r: (p.index(r[0]), p.index(r[1])))
    payload = {"method": res.method, "order": res.order.to_dict(), "added": [list(r) for r in added]}
    lines = [res.order.to_json(), "added: " + ", ".join(f"{a}<{b}" for a, b in added)]
    ok = True
    if args.check:
        flags = check_strengthening(p, chain, res.order)
        payload["invariants"] = flags
        lines.append(" ".join(f"{k}={v}" for k, v in flags.items()))
        ok = all(flags.values())
    _emit(args, lines, payload)
    if not ok:
        raise CheckFailed("strengthening invariants violated")


def cmd_hochschild(args):
    p = args.prime
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        rep = verify_lemma_gph(p)
    lines = rep.lines()
    payload = {
        "p": p, "is_prime": rep.is_prime, "passed": rep.passed,
        "raw_terms": [rep.expansion_raw_terms, rep.ad_raw_terms],
        "monomials": [{"monomial": m.render(), "coefficient": c} for m, c, _, _ in rep.entries],
    }
    ok = rep.passed
    if args.check and p >= 3:
        expansion = expand_ar_power(p)
        checks = [coefficient_cross_check(p, ms, expansion) for ms in strata(p)]
        for c in checks:
            lines.append(f"cross-check {c.monomial.render()}: C(S,{p})={c.count} / {c.divisor} "
                         f"vs {c.actual} {'ok' if c.passed else 'FAIL'}")
        payload["cross_check"] = [c.passed for c in checks]
        ok &= all(c.passed for c in checks)
    _emit(args, lines, payload)
    if not ok and rep.is_prime:
        raise CheckFailed("residual coefficient not divisible by p")


def _load_lexsum(doc) -> LexSumSpec:
    try:
        base = Poset.from_dict(doc["base"])
        parts = [Poset.from_dict(d) for d in doc["parts"]]
    except (KeyError, TypeError):
        raise PosetError("lexicographic-sum document needs 'base' and 'parts'") from None
    return LexSumSpec(base, parts)


def cmd_factor(args):
    spec = _load_lexsum(_read_json(args.file))
    L = factor_L(spec)
    lines = [_pm(L)]
    payload = {"L+": L.plus, "L-": L.minus}
    if args.check:
        oracle = group_ring_L(lex_sum(spec), args.limit)
        lines.append(f"oracle {_pm(oracle)}")
        payload["oracle"] = {"L+": oracle.plus, "L-": oracle.minus}
        if oracle != L:
            _emit(args, lines, payload)
            raise CheckFailed("factorisation disagrees with counting")
    _emit(args, lines, payload)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--limit", type=int, default=None, help="cap on linearizations counted")
    common.add_argument("--check", action="store_true", help="compare against brute force")

    parser = argparse.ArgumentParser(prog="posetlin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="even/odd linear-extension counts")
    p.add_argument("file")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("chrom", parents=[common], help="order-chromatic polynomial")
    p.add_argument("file")
    p.add_argument("--prime", type=int, default=None)
    p.set_defaults(func=cmd_chrom)

    p = sub.add_parser("sp", parents=[common], help="evaluate a series-parallel expression")
    p.add_argument("expression")
    p.set_defaults(func=cmd_sp)

    p = sub.add_parser("pascal", parents=[common], help="Pascal-type arrays")
    p.add_argument("--rows", type=int, default=8)
    p.set_defaults(func=cmd_pascal)

    p = sub.add_parser("floor", parents=[common], help="sign-imbalance of a chain substitution")
    p.add_argument("file")
    p.add_argument("--sizes", required=True, help="comma-separated chain sizes")
    p.set_defaults(func=cmd_floor)

    p = sub.add_parser("strengthen", parents=[common], help="make the complement of a chain a chain")
    p.add_argument("file")
    p.add_argument("--chain", default="", help="comma-separated chain elements")
    p.add_argument("--method", choices=("iterative", "felsner"), default="iterative")
    p.set_defaults(func=cmd_strengthen)

    p = sub.add_parser("hochschild", parents=[common], help="free-ring expansion mod p")
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_hochschild)

    p = sub.add_parser("factor", parents=[common], help="factorised count of a lexicographic sum")
    p.add_argument("file")
    p.set_defaults(func=cmd_factor)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        RunConfig(args.command, getattr(args, "file", None), args.limit, args.format)
        args.func(args)
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except DefectError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except Overflow as exc:
        print(f"limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
