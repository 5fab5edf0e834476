"""Command-line frontend: analyze, enumerate, class, tables, verify, counterexample.

Output goes to stdout (text, csv, or json), diagnostics to stderr.
Exit codes: 0 all pass, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import (
    EndoError,
    Endo,
    fixed_points,
    format_endo,
    is_idempotent,
    jump_points,
    omega,
    parse_endo,
)
from .enumeration import (
    DEFAULT_CAP,
    count_endos,
    filter_endos,
    has_fixed_set,
    has_jump_set,
)
from .enumeration import is_idempotent as _idempotent_predicate
from .idempotents import cayley_tables, enumerate_id_family
from .classes import class_of, congruence_counterexample, type_of, validate_noncongruence_triple
from .verify import CLAIMS, run_claim


def _emit_json(command: str, n: int | None, params: dict, result) -> None:
    print(json.dumps({"command": command, "n": n, "params": params, "result": result}))


def _parse_literal(text: str) -> Endo:
    if "," not in text and text.isdigit() and len(text) > 1:
        print(f"note: interpreting compact digit form as n={len(text)}", file=sys.stderr)
    return parse_endo(text)


def _parse_points(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(",") if tok != "")
    except ValueError:
        raise EndoError(f"malformed point list {text!r}")


def cmd_analyze(args: argparse.Namespace) -> int:
    a = _parse_literal(args.endo)
    om = omega(a)
    td = type_of(a)
    result = {
        "endo": format_endo(a),
        "n": len(a),
        "fixed_points": list(fixed_points(a)),
        "jump_points": list(jump_points(a)),
        "idempotent": is_idempotent(a),
        "omega": format_endo(om.endo),
        "omega_index": om.index,
        "blocks": [list(b) for b in td.blocks],
        "jumps": list(td.jumps),
    }
    if args.format == "json":
        _emit_json("analyze", len(a), {"endo": args.endo}, result)
        return 0
    print(f"endo: {result['endo']}")
    print(f"n: {result['n']}")
    print(f"fixed points: {_points_text(result['fixed_points'])}")
    print(f"jump points: {_points_text(result['jump_points'])}")
    print(f"idempotent: {'yes' if result['idempotent'] else 'no'}")
    print(f"omega: {result['omega']} (index {result['omega_index']})")
    blocks = " ".join(f"[{s},{e}]" for s, e in result["blocks"])
    print(f"type: blocks {blocks}; jumps {_points_text(result['jumps'])}")
    return 0


def _points_text(points) -> str:
    return ",".join(str(p) for p in points) if points else "none"


def cmd_enumerate(args: argparse.Namespace) -> int:
    preds = []
    if args.idempotent:
        preds.append(_idempotent_predicate)
    if args.fixed is not None:
        preds.append(has_fixed_set(_parse_points(args.fixed)))
    if args.jumps is not None and args.no_jumps:
        print("error: --jumps and --no-jumps are mutually exclusive", file=sys.stderr)
        return 2
    if args.jumps is not None:
        preds.append(has_jump_set(_parse_points(args.jumps)))
    if args.no_jumps:
        preds.append(has_jump_set(()))
    stream = filter_endos(args.n, *preds, cap=args.cap_override)
    params = {
        "idempotent": args.idempotent,
        "fixed": args.fixed,
        "jumps": args.jumps,
        "no_jumps": args.no_jumps,
        "count": args.count,
    }
    if args.count:
        total = sum(1 for _ in stream)
        if args.format == "json":
            _emit_json("enumerate", args.n, params, {"count": total})
        else:
            print(total)
        return 0
    if args.format == "json":
        _emit_json("enumerate", args.n, params, [format_endo(a) for a in stream])
    else:
        for a in stream:
            print(format_endo(a))
    return 0


def cmd_class(args: argparse.Namespace) -> int:
    a = _parse_literal(args.endo)
    if not is_idempotent(a):
        eps = omega(a).endo
        print(
            f"note: {format_endo(a)} is not idempotent; reporting the class of its "
            f"omega power {format_endo(eps)}",
            file=sys.stderr,
        )
    else:
        eps = a
    rep = class_of(eps, cap=args.cap_override)
    if args.format == "json":
        _emit_json("class", len(eps), {"endo": args.endo}, rep.to_record())
        return 0 if rep.ok else 1
    rec = rep.to_record()
    print(f"idempotent: {rec['idempotent']}")
    print(f"blocks: {' '.join(f'[{s},{e}]' for s, e in rec['blocks'])}")
    print(f"jumps: {_points_text(rec['jumps'])}")
    print(f"order (formula): {rec['order_formula']}")
    print(f"order (brute force): {rec['order_bruteforce']}")
    flag = "" if rec["order_printed"] == rec["order_bruteforce"] else "  [flagged: disagrees]"
    print(f"order (printed variant): {rec['order_printed']}{flag}")
    print(f"closure: {'pass' if rec['closure_ok'] else 'FAIL'}")
    print(f"members ({len(rec['members'])}):")
    for m in rec["members"]:
        print(m)
    if not rep.ok:
        for w in rep.failures:
            print(f"FAIL {w}", file=sys.stderr)
        return 1
    return 0


def cmd_tables(args: argparse.Namespace) -> int:
    points = _parse_points(args.fixed)
    family = enumerate_id_family(args.n, points)
    ct = cayley_tables(list(family.members))
    if args.format == "json":
        result = {
            "fixed": list(family.fixed_set),
            "members": [format_endo(m) for m in ct.members],
            "add": [[format_endo(e) for e in row] for row in ct.add_table],
            "mul": [[format_endo(e) for e in row] for row in ct.mul_table],
            "closed": ct.closed,
        }
        _emit_json("tables", args.n, {"fixed": args.fixed}, result)
        return 0
    if args.format == "csv":
        sys.stdout.write(ct.render_csv())
        return 0
    fixed_text = "{" + ",".join(str(p) for p in family.fixed_set) + "}"
    print(f"n = {args.n}, fixed set {fixed_text}")
    print(ct.render_text())
    if not ct.closed:
        print(f"note: {len(ct.escapes)} table entries fall outside the member set", file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.all == bool(args.theorem):
        print("error: choose exactly one of --all or --theorem ID", file=sys.stderr)
        return 2
    ids = list(CLAIMS) if args.all else [args.theorem]
    for claim_id in ids:
        if claim_id not in CLAIMS:
            print(
                f"error: unknown theorem id {claim_id!r}; known: {', '.join(CLAIMS)}",
                file=sys.stderr,
            )
            return 2
    reports = [run_claim(claim_id, args.n, cap=args.cap_override) for claim_id in ids]
    if args.format == "json":
        _emit_json(
            "verify",
            args.n,
            {"theorem": args.theorem, "all": args.all},
            [r.to_record() for r in reports],
        )
    else:
        for r in reports:
            print(r.render_text())
    for r in reports:
        if r.status == "pass-with-erratum":
            print(
                f"warning: {r.claim} passes with documented errata ({len(r.errata)} witnesses)",
                file=sys.stderr,
            )
    return 0 if all(r.ok for r in reports) else 1


def cmd_counterexample(args: argparse.Namespace) -> int:
    found = None
    for n in range(2, args.n + 1):
        triple = congruence_counterexample(n, cap=args.cap_override)
        if triple is not None:
            found = (n, triple)
            break
    if found is None:
        if args.format == "json":
            _emit_json("counterexample", args.n, {"property": args.property}, None)
        else:
            print("none")
        return 0
    n, (alpha, beta, gamma) = found
    valid, ag, bg = validate_noncongruence_triple(alpha, beta, gamma)
    if not valid:
        print("error: search produced a triple that fails re-validation", file=sys.stderr)
        return 1
    result = {
        "smallest_n": n,
        "alpha": format_endo(alpha),
        "beta": format_endo(beta),
        "gamma": format_endo(gamma),
        "alpha*gamma": format_endo(ag),
        "beta*gamma": format_endo(bg),
    }
    if args.format == "json":
        _emit_json("counterexample", args.n, {"property": args.property}, result)
    else:
        print(f"n = {n}")
        print(f"alpha = {result['alpha']}")
        print(f"beta = {result['beta']}")
        print(f"gamma = {result['gamma']}")
        print(f"alpha*gamma = {result['alpha*gamma']}")
        print(f"beta*gamma = {result['beta*gamma']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="endochain",
        description="Algebra and verification for monotone self-maps of a finite chain.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument(
            "--cap-override",
            type=int,
            default=DEFAULT_CAP,
            metavar="N",
            help=f"raise the enumeration cap (default {DEFAULT_CAP})",
        )

    p = sub.add_parser("analyze", help="fixed points, jumps, omega power, and type of one map")
    p.add_argument("endo", help="comma form like 2,2,2,5,5,5,5 (digit form allowed for n <= 10)")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="stream all maps of a chain, with filters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--idempotent", action="store_true")
    p.add_argument("--fixed", metavar="F", help="exact fixed set, e.g. 1,5")
    p.add_argument("--jumps", metavar="J", help="exact jump set, e.g. 3,4")
    p.add_argument("--no-jumps", action="store_true")
    p.add_argument("--count", action="store_true", help="print only the total")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("class", help="equivalence class of an idempotent (or of omega)")
    p.add_argument("endo")
    common(p)
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("tables", help="Cayley tables of a prescribed-fixed-set family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fixed", metavar="F", required=True)
    common(p, formats=("text", "csv", "json"))
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--n", type=int, default=7)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--theorem", metavar="ID", help=f"one of: {', '.join(CLAIMS)}")
    group.add_argument("--all", action="store_true")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", help="search ascending chain sizes for a witness")
    p.add_argument("--property", choices=["congruence"], required=True)
    p.add_argument("--n", type=int, default=7)
    common(p)
    p.set_defaults(func=cmd_counterexample)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EndoError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
