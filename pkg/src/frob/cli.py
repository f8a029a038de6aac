"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 domain or usage error,
3 internal inconsistency.  All numbers are written as decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time

from . import apery as ap
from . import arith
from . import oracle as orc
from . import sweep
from .errors import DomainError, InternalInconsistency
from .query import Query, compute, compute_all

PATHS = {"closed": "closed_form", "apery": "apery", "oracle": "oracle"}
KIND_OF = {"gp": "gp", "np": "np", "sp": "sp", "power": "power_sum", "weighted": "weighted_sum"}

EXIT_MISMATCH = 1
EXIT_DOMAIN = 2
EXIT_INTERNAL = 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _int_range(text: str) -> range:
    """``5`` or ``3..9`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}")


def _instance(args) -> orc.Instance:
    if args.triple is not None:
        if len(args.triple) != 2:
            raise DomainError("--triple takes exactly a,d")
        a, d = args.triple
        return arith.ArithTriple(a, d).instance
    if args.generators is None:
        raise DomainError("give generators with -A a1,a2,... or --triple a,d")
    return orc.Instance(tuple(args.generators))


class Emitter:
    def __init__(self, args, out=None):
        self.out = out = out or sys.stdout
        self.pretty = not args.json and out.isatty()

    def record(self, rec: dict) -> None:
        if self.pretty:
            q = rec["query"]
            head = f"{q['command']}({','.join(map(str, q['generators']))}; p={q.get('p')}"
            for key in ("mu", "lambda"):
                if key in q:
                    head += f", {key}={q[key]}"
            head += ")"
            line = f"{head} = {rec['value']}  [{rec['provenance']}, {rec['ms']:.1f} ms]"
            if "results" in rec:
                line += f"  agree={rec['agree']} " + json.dumps(rec["results"])
            print(line, file=self.out)
        else:
            print(json.dumps(rec), file=self.out)


def _query_echo(cmd: str, inst: orc.Instance, args) -> dict:
    q = {"command": cmd, "generators": list(inst.generators)}
    if getattr(args, "p", None) is not None:
        q["p"] = args.p
    if getattr(args, "mu", None) is not None:
        q["mu"] = args.mu
    if getattr(args, "lam", None) is not None:
        q["lambda"] = args.lam
    return q


def cmd_query(args, emit: Emitter) -> int:
    inst = _instance(args)
    kind = KIND_OF[args.command]
    mu = args.mu
    if kind == "sp" or kind == "gp" or kind == "np":
        mu = None
    if kind == "power_sum" and mu is None:
        raise DomainError("power needs --mu")
    if kind == "weighted_sum" and (mu is None or args.lam is None):
        raise DomainError("weighted needs --mu and --lambda")
    q = Query(kind, inst, args.p, mu, args.lam if kind == "weighted_sum" else None)
    t0 = time.perf_counter()
    rec = {"query": _query_echo(args.command, inst, args)}
    if args.check:
        results, agree = compute_all(q)
        rec["value"] = str(results[0].value)
        rec["provenance"] = results[0].provenance
        rec["results"] = {r.provenance: str(r.value) for r in results}
        rec["agree"] = agree
    else:
        r = compute(q, PATHS[args.path] if args.path else None)
        rec["value"] = str(r.value)
        rec["provenance"] = r.provenance
        rec["agree"] = None
    rec["ms"] = (time.perf_counter() - t0) * 1000
    emit.record(rec)
    return EXIT_MISMATCH if rec["agree"] is False else 0


def cmd_apery(args, emit: Emitter) -> int:
    inst = _instance(args)
    t0 = time.perf_counter()
    path = PATHS[args.path] if args.path else None
    T = arith.as_triple(inst.generators)
    if path is None:
        path = "closed_form" if T is not None and args.p <= T.p_max else "apery"
    if path == "closed_form":
        if T is None:
            raise DomainError(f"({inst}) is not an arithmetic triple with a >= 3")
        S = arith.apery_closed(T, args.p)
    elif path == "apery":
        S = ap.apery_set(inst, args.p)
    else:
        raise DomainError("apery sets come from the closed or apery path")
    rec = {
        "query": _query_echo("apery", inst, args),
        "value": [str(m) for m in S.elements],
        "provenance": path,
        "agree": None,
    }
    if S.coords is not None:
        rec["coords"] = [list(c) for c in S.coords]
    if args.check:
        other = ap.apery_set(inst, args.p)
        rec["agree"] = sorted(other.elements) == sorted(S.elements)
    rec["ms"] = (time.perf_counter() - t0) * 1000
    emit.record(rec)
    return EXIT_MISMATCH if rec["agree"] is False else 0


def cmd_gstar(args, emit: Emitter) -> int:
    inst = _instance(args)
    t0 = time.perf_counter()
    v = orc.g_star(inst, args.p)
    emit.record({
        "query": _query_echo("gstar", inst, args),
        "value": "none" if v is None else str(v),
        "provenance": "oracle",
        "agree": None,
        "ms": (time.perf_counter() - t0) * 1000,
    })
    return 0


def _nonrep_record(inst, p, cmd, args) -> dict:
    t0 = time.perf_counter()
    s = orc.nonrep_set_p(inst, p)
    return {
        "query": _query_echo(cmd, inst, args),
        "value": [str(n) for n in s],
        "provenance": "oracle",
        "agree": None,
        "ms": (time.perf_counter() - t0) * 1000,
    }


def cmd_nonrep(args, emit: Emitter) -> int:
    emit.record(_nonrep_record(_instance(args), args.p, "nonrep", args))
    return 0


def cmd_table(args, out=None) -> int:
    out = out or sys.stdout
    ps = None if args.p is None else [args.p]
    rows = sweep.table_rows(args.a, args.d, ps, args.mu, args.lam if args.mu else None)
    writer = None
    for row in rows:
        row = {k: ("" if v is None else str(v)) if k not in ("a", "d", "p") else v
               for k, v in row.items()}
        if args.csv:
            if writer is None:
                writer = csv.DictWriter(out, fieldnames=list(row), lineterminator="\n")
                writer.writeheader()
            writer.writerow(row)
        else:
            print(json.dumps(row), file=out)
    return 0


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    if args.nonrep:
        emit = Emitter(args, out)
        emit.record(_nonrep_record(_instance(args), args.p, "nonrep", args))
        return 0
    t0 = time.perf_counter()
    report = sweep.verify(
        range(args.a_min, args.a_max + 1),
        range(args.d_min, args.d_max + 1),
        weighted=args.weighted,
        weighted_a_max=args.weighted_a_max,
        weighted_d_max=args.weighted_d_max,
        workers=args.workers,
    )
    for m in report.mismatches:
        print(json.dumps({"mismatch": m.as_dict()}), file=out)
    secs = time.perf_counter() - t0
    print(f"{report.checks} checks, {len(report.mismatches)} mismatches ({secs:.1f} s)", file=out)
    return 0 if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frob",
        description="p-Frobenius numbers, p-genus, p-Sylvester sums and power sums.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_flags(p, p_required=True):
        p.add_argument("-A", "--generators", type=_int_list, help="a1,a2,...")
        p.add_argument("--triple", type=_int_list, help="a,d for (a, a+d, a+2d)")
        p.add_argument("-p", type=int, required=p_required, help="representation bound")
        p.add_argument("--json", action="store_true", help="JSON lines even on a terminal")

    for name in ("gp", "np", "sp", "power", "weighted"):
        p = sub.add_parser(name, help=f"compute {KIND_OF[name]}")
        instance_flags(p)
        p.add_argument("--mu", type=int)
        p.add_argument("--lambda", dest="lam", type=int)
        p.add_argument("--check", action="store_true", help="run every applicable path")
        p.add_argument("--path", choices=sorted(PATHS))
        p.set_defaults(func=cmd_query)

    p = sub.add_parser("apery", help="p-Apéry set")
    instance_flags(p)
    p.add_argument("--check", action="store_true")
    p.add_argument("--path", choices=sorted(PATHS))
    p.set_defaults(func=cmd_apery)

    p = sub.add_parser("gstar", help="largest n with exactly p representations")
    instance_flags(p)
    p.set_defaults(func=cmd_gstar)

    p = sub.add_parser("nonrep", help="all n with at most p representations")
    instance_flags(p)
    p.set_defaults(func=cmd_nonrep)

    p = sub.add_parser("table", help="closed-form sweep over arithmetic triples")
    p.add_argument("--a", type=_int_range, default=range(3, 10), help="N or LO..HI")
    p.add_argument("--d", type=_int_range, default=range(1, 5), help="N or LO..HI")
    p.add_argument("-p", type=int, help="single p (default: every validated p)")
    p.add_argument("--mu", type=int)
    p.add_argument("--lambda", dest="lam", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="three-way agreement sweep")
    p.add_argument("--a-min", type=int, default=3)
    p.add_argument("--a-max", type=int, default=25)
    p.add_argument("--d-min", type=int, default=1)
    p.add_argument("--d-max", type=int, default=15)
    p.add_argument("--weighted", action="store_true",
                   help="add power and weighted sums on the small sweep")
    p.add_argument("--weighted-a-max", type=int, default=12)
    p.add_argument("--weighted-d-max", type=int, default=7)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--nonrep", action="store_true", help="print the set for -A/-p instead")
    instance_flags(p, p_required=False)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.func in (cmd_table, cmd_verify):
            if args.func is cmd_verify and args.nonrep and args.p is None:
                raise DomainError("--nonrep needs -p")
            return args.func(args)
        return args.func(args, Emitter(args))
    except InternalInconsistency as e:
        print(f"InternalInconsistency: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except DomainError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
