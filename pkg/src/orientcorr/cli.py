"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 graph parse error, 4 enumeration
cap exceeded.  All exact values are printed as decimal-digit strings or
NUM/2^EXP rationals; floats appear only in display columns.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .dyadic import DyadicProb, SignedDyadic, TripleCorrelation, fraction_to_decimal
from .errors import GraphFormatError, OverCapError
from .graphs import Graph, Triple, parse_edge_list, parse_graph6
from .enumeration import DEFAULT_CAP, count_events
from . import closed_form, complete
from .classify import MINOR_MAX_VERTICES, classify, classify_stream, is_outerplanar
from .montecarlo import mc_estimate

SCHEMA_VERSION = "1"
THREADS_ENV = "ORIENTCORR_THREADS"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_OVER_CAP = 4


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        return 1
    return value if value >= 0 else 1


def _dyadic_json(p: DyadicProb) -> dict:
    return {"exact": str(p), "float": float(p)}

def _signed_json(p: SignedDyadic) -> dict:
    return {"sign": p.sign, "magnitude": str(p.magnitude), "float": float(p)}

def _correlation_json(cor: TripleCorrelation) -> dict:
    return {
        "p_c": _dyadic_json(cor.p_c),
        "p_d": _dyadic_json(cor.p_d),
        "p_cd": _dyadic_json(cor.p_cd),
        "cov": _signed_json(cor.cov),
    }


def _emit(args, record: dict, human: str) -> None:
    if args.json:
        print(json.dumps(record))
    else:
        print(human)


def _load_graph(args) -> Graph:
    if getattr(args, "graph6", None) is not None:
        return parse_graph6(args.graph6)
    path = args.edges
    text = sys.stdin.read() if path == "-" else open(path).read()
    return parse_edge_list(text)


def _correlation_lines(cor: TripleCorrelation) -> str:
    return (
        f"p_c   = {cor.p_c}  ({float(cor.p_c):.10g})\n"
        f"p_d   = {cor.p_d}  ({float(cor.p_d):.10g})\n"
        f"p_cd  = {cor.p_cd}  ({float(cor.p_cd):.10g})\n"
        f"cov   = {cor.cov}  ({float(cor.cov):.10g})"
    )


def cmd_kn(args) -> int:
    if args.n < 2:
        print(f"kn: need --n >= 2, got {args.n}", file=sys.stderr)
        return EXIT_USAGE
    row = complete.table_row(args.n)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "kn",
        "n": row.n,
        "p_single": _dyadic_json(row.p_single),
        "scaled_single": str(row.scaled_single),
        "p_joint": _dyadic_json(row.p_joint) if row.p_joint else None,
        "scaled_joint": str(row.scaled_joint) if row.scaled_joint is not None else None,
        "rel_cov": fraction_to_decimal(row.rel_cov, 6) if row.rel_cov is not None else None,
    }
    lines = [
        f"n             = {row.n}",
        f"p_single      = {row.p_single}  ({fraction_to_decimal(row.p_single.as_fraction(), 4)})",
        f"scaled_single = {row.scaled_single}",
    ]
    if row.p_joint is not None:
        lines += [
            f"p_joint       = {row.p_joint}  ({fraction_to_decimal(row.p_joint.as_fraction(), 7)})",
            f"scaled_joint  = {row.scaled_joint}",
            f"rel_cov       = {fraction_to_decimal(row.rel_cov, 6)}",
        ]
    _emit(args, record, "\n".join(lines))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.max_n < 2:
        print(f"table: need --max-n >= 2, got {args.max_n}", file=sys.stderr)
        return EXIT_USAGE
    rows = [complete.table_row(n) for n in range(2, args.max_n + 1)]
    if args.json:
        record = {
            "schema_version": SCHEMA_VERSION,
            "command": "table",
            "max_n": args.max_n,
            "rows": [
                {
                    "n": r.n,
                    "scaled_single": str(r.scaled_single),
                    "p_single": fraction_to_decimal(r.p_single.as_fraction(), 4),
                    "scaled_joint": str(r.scaled_joint) if r.scaled_joint is not None else None,
                    "p_joint": fraction_to_decimal(r.p_joint.as_fraction(), 7) if r.p_joint else None,
                    "rel_cov": fraction_to_decimal(r.rel_cov, 6) if r.rel_cov is not None else None,
                }
                for r in rows
            ],
        }
        print(json.dumps(record))
        return EXIT_OK
    widths = (3, max(len(str(r.scaled_single)) for r in rows), 7,
              max(len(str(r.scaled_joint or "")) for r in rows), 10, 10)
    header = ("n", "scaled_single", "p_single", "scaled_joint", "p_joint", "rel_cov")
    widths = tuple(max(w, len(h)) for w, h in zip(widths, header))
    print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for r in rows:
        cells = (
            str(r.n),
            str(r.scaled_single),
            fraction_to_decimal(r.p_single.as_fraction(), 4),
            str(r.scaled_joint) if r.scaled_joint is not None else "-",
            fraction_to_decimal(r.p_joint.as_fraction(), 7) if r.p_joint else "-",
            fraction_to_decimal(r.rel_cov, 6) if r.rel_cov is not None else "-",
        )
        print("  ".join(c.rjust(w) for c, w in zip(cells, widths)))
    return EXIT_OK


def cmd_exact(args) -> int:
    g = _load_graph(args)
    t = Triple(args.a, args.s, args.b)
    counts = count_events(g, t, cap=args.cap, threads=args.threads)
    cor = TripleCorrelation.from_scaled(counts.n_c, counts.n_d, counts.n_cd, counts.m)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "exact",
        "n": g.n,
        "m": g.m,
        "a": t.a, "s": t.s, "b": t.b,
        "n_c": counts.n_c, "n_d": counts.n_d, "n_cd": counts.n_cd,
        **_correlation_json(cor),
    }
    human = (
        f"n = {g.n}, m = {g.m}, triple (a={t.a}, s={t.s}, b={t.b})\n"
        f"counts over 2^{counts.m}: n_c={counts.n_c} n_d={counts.n_d} n_cd={counts.n_cd}\n"
        + _correlation_lines(cor)
    )
    _emit(args, record, human)
    return EXIT_OK


def cmd_cycle(args) -> int:
    by_arcs = args.c is not None or args.d is not None
    by_labels = args.a is not None or args.s is not None or args.b is not None
    if by_arcs == by_labels:
        print("cycle: give either --c/--d or --a/--s/--b", file=sys.stderr)
        return EXIT_USAGE
    try:
        if by_arcs:
            if args.c is None or args.d is None:
                print("cycle: both --c and --d are required", file=sys.stderr)
                return EXIT_USAGE
            triple = closed_form.CycleTriple(args.n, args.c, args.d)
        else:
            if None in (args.a, args.s, args.b):
                print("cycle: all of --a/--s/--b are required", file=sys.stderr)
                return EXIT_USAGE
            triple = closed_form.cycle_triple_from_labels(args.n, args.a, args.s, args.b)
    except ValueError as exc:
        print(f"cycle: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cor = closed_form.cycle_correlation(triple)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "cycle",
        "n": triple.n, "c": triple.c, "d": triple.d,
        **_correlation_json(cor),
    }
    human = (
        f"cycle n = {triple.n}, arcs c = {triple.c}, d = {triple.d}\n"
        + _correlation_lines(cor)
    )
    _emit(args, record, human)
    return EXIT_OK


def cmd_forest(args) -> int:
    g = _load_graph(args)
    t = Triple(args.a, args.s, args.b)
    verdict = closed_form.forest_correlation(g, t)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "forest",
        "n": g.n, "m": g.m,
        "a": t.a, "s": t.s, "b": t.b,
        "kind": verdict.kind,
        **_correlation_json(verdict.correlation()),
    }
    human = (
        f"n = {g.n}, m = {g.m}, triple (a={t.a}, s={t.s}, b={t.b})\n"
        f"kind  = {verdict.kind}\n"
        + _correlation_lines(verdict.correlation())
    )
    _emit(args, record, human)
    return EXIT_OK


def _classify_record_human(rec: dict) -> str:
    kind = rec["type"]
    if kind == "graph":
        flags = "".join(roman for roman, on in
                        (("I", rec["class_i"]), ("II", rec["class_ii"]), ("III", rec["class_iii"])) if on)
        extra = ""
        if "outerplanar" in rec:
            extra = f" outerplanar={rec['outerplanar']}"
        return (f"#{rec['index']} {rec['graph6']}: n={rec['n']} m={rec['m']} "
                f"neg={rec['neg_triples']} zero={rec['zero_triples']} pos={rec['pos_triples']} "
                f"classes={flags or '-'}{extra}")
    if kind == "skipped":
        return f"#{rec['index']} {rec['graph6']}: skipped ({rec['reason']})"
    if kind == "error":
        return f"#{rec['index']} {rec['graph6']}: error ({rec['error']})"
    return (f"summary: graphs={rec['graphs']} errors={rec['errors']} skipped={rec['skipped']} "
            f"class_i={rec['class_i']} class_ii={rec['class_ii']} class_iii={rec['class_iii']}")


def cmd_classify(args) -> int:
    if (args.graph6 is None) == (args.stream is None):
        print("classify: give exactly one of --graph6 or --stream", file=sys.stderr)
        return EXIT_USAGE
    if args.stream is not None:
        handle = sys.stdin if args.stream == "-" else open(args.stream)
        for rec in classify_stream(handle, cap=args.cap, threads=args.threads,
                                   outerplanar=args.outerplanar):
            rec_out = dict(rec)
            if rec["type"] != "summary":
                rec_out = {"schema_version": SCHEMA_VERSION, "command": "classify", **rec_out}
            if args.json:
                print(json.dumps(rec_out))
            else:
                print(_classify_record_human(rec))
        if handle is not sys.stdin:
            handle.close()
        return EXIT_OK
    g = parse_graph6(args.graph6)
    flags = classify(g, cap=args.cap, threads=args.threads,
                     allow_disconnected=args.allow_disconnected)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "classify",
        "graph6": args.graph6,
        "n": g.n, "m": g.m,
        "neg_triples": flags.neg_triples,
        "zero_triples": flags.zero_triples,
        "pos_triples": flags.pos_triples,
        "class_i": flags.class_i,
        "class_ii": flags.class_ii,
        "class_iii": flags.class_iii,
        "disconnected": flags.disconnected,
    }
    lines = [
        f"n = {g.n}, m = {g.m}",
        f"triples: neg={flags.neg_triples} zero={flags.zero_triples} pos={flags.pos_triples}",
        f"class I   : {flags.class_i}",
        f"class II  : {flags.class_ii}",
        f"class III : {flags.class_iii}",
    ]
    if flags.disconnected:
        lines.append("note: graph is disconnected; cross-component events have probability 0")
    if args.outerplanar:
        if g.n > MINOR_MAX_VERTICES:
            print(f"classify: outerplanarity probe is capped at {MINOR_MAX_VERTICES} vertices",
                  file=sys.stderr)
            return EXIT_OVER_CAP
        record["outerplanar"] = is_outerplanar(g)
        lines.append(f"outerplanar: {record['outerplanar']}")
    _emit(args, record, "\n".join(lines))
    return EXIT_OK


def cmd_mc(args) -> int:
    g = _load_graph(args)
    t = Triple(args.a, args.s, args.b)
    if args.samples < 1:
        print(f"mc: need --samples >= 1, got {args.samples}", file=sys.stderr)
        return EXIT_USAGE
    est = mc_estimate(g, t, args.samples, args.seed, threads=args.threads)
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": "mc",
        "n": g.n, "m": g.m,
        "a": t.a, "s": t.s, "b": t.b,
        "samples": est.samples,
        "seed": est.seed,
        "count_c": est.count_c,
        "count_d": est.count_d,
        "count_cd": est.count_cd,
        "count_neither": est.count_neither,
        "p_c_hat": est.p_c_hat,
        "p_d_hat": est.p_d_hat,
        "p_cd_hat": est.p_cd_hat,
        "cov_hat": est.cov_hat,
        "se_cov": est.se_cov,
    }
    human = (
        f"n = {g.n}, m = {g.m}, triple (a={t.a}, s={t.s}, b={t.b})\n"
        f"samples = {est.samples}, seed = {est.seed}\n"
        f"counts: c={est.count_c} d={est.count_d} cd={est.count_cd} neither={est.count_neither}\n"
        f"p_c_hat  = {est.p_c_hat:.6f}\n"
        f"p_d_hat  = {est.p_d_hat:.6f}\n"
        f"p_cd_hat = {est.p_cd_hat:.6f}\n"
        f"cov_hat  = {est.cov_hat:.6e}\n"
        f"se_cov   = {est.se_cov:.6e}"
    )
    _emit(args, record, human)
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.max_n < 3:
        print(f"bounds: need --max-n >= 3, got {args.max_n}", file=sys.stderr)
        return EXIT_USAGE
    rows = complete.bound_report(args.max_n)
    if args.json:
        record = {
            "schema_version": SCHEMA_VERSION,
            "command": "bounds",
            "max_n": args.max_n,
            "all_ok": all(r.all_ok() for r in rows),
            "rows": [
                {
                    "n": r.n,
                    "single_lower_ok": r.single_lower_ok,
                    "single_upper_ok": r.single_upper_ok,
                    "joint_lower_ok": r.joint_lower_ok,
                    "joint_upper_ok": r.joint_upper_ok,
                    "sum2_bound_a_ok": r.sum2_bound_a_ok,
                    "sum2_bound_b_ok": r.sum2_bound_b_ok,
                    "sum3_bound_ok": r.sum3_bound_ok,
                    "margin_below_5": r.margin_below_5,
                    "margin_decreased": r.margin_decreased,
                    "single_scaled_limit": r.single_scaled_limit,
                    "joint_scaled_limit": r.joint_scaled_limit,
                }
                for r in rows
            ],
        }
        print(json.dumps(record))
        return EXIT_OK
    def mark(flag):
        return "-" if flag is None else ("ok" if flag else "FAIL")
    print("  n  s_lo  s_hi  j_lo  j_hi  sum2a sum2b  sum3  mdec  m<5  2^(n-2)*p1    2^(2n-3)*p2")
    for r in rows:
        # margin_below_5 is informational (it first holds at n = 8), so it
        # renders yes/no rather than ok/FAIL.
        below = "-" if r.margin_below_5 is None else ("yes" if r.margin_below_5 else "no")
        print(f"{r.n:3d}  "
              + "  ".join(mark(f).ljust(4) for f in
                          (r.single_lower_ok, r.single_upper_ok, r.joint_lower_ok,
                           r.joint_upper_ok, r.sum2_bound_a_ok, r.sum2_bound_b_ok,
                           r.sum3_bound_ok, r.margin_decreased))
              + f"  {below.ljust(3)}"
              + f"  {r.single_scaled_limit:<12.8f}"
              + (f"  {r.joint_scaled_limit:<12.8f}" if r.joint_scaled_limit is not None else "  -"))
    if not all(r.all_ok() for r in rows):
        print("bounds: at least one check failed", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    # Global flags live on a parent parser so they are accepted both before
    # and after the subcommand name.  Defaults are SUPPRESS because the
    # subparser copies its whole namespace over the root one; main() fills
    # in unset values afterwards.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help=f"worker threads, 0 = all cores (default: ${THREADS_ENV} or 1)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON records")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help=f"max edges for exhaustive enumeration (default {DEFAULT_CAP})")
    parser = argparse.ArgumentParser(
        prog="orientcorr",
        description="Exact and Monte Carlo correlation of path events in randomly oriented graphs",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_parser(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[common])

    p = add_parser("kn", "exact no-path probabilities on a complete graph")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_kn)

    p = add_parser("table", "table of complete-graph rows, n = 2..max")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = add_parser("exact", "exhaustive correlation of one triple")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--edges", help="edge list file, '-' for stdin")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_exact)

    p = add_parser("cycle", "closed-form correlation on a cycle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=int, help="arc length a -> s")
    p.add_argument("--d", type=int, help="arc length s -> b")
    p.add_argument("--a", type=int, help="labeled vertex a on the standard cycle")
    p.add_argument("--s", type=int, help="labeled vertex s")
    p.add_argument("--b", type=int, help="labeled vertex b")
    p.set_defaults(func=cmd_cycle)

    p = add_parser("forest", "forest dichotomy for one triple")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--edges", help="edge list file, '-' for stdin")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(func=cmd_forest)

    p = add_parser("classify", "triple-sign census and class flags")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", help="graph6 string")
    src.add_argument("--stream", help="file of graph6 lines, '-' for stdin")
    p.add_argument("--outerplanar", action="store_true", help="add the outerplanarity probe")
    p.add_argument("--allow-disconnected", action="store_true",
                   help="census a disconnected graph instead of refusing")
    p.set_defaults(func=cmd_classify)

    p = add_parser("mc", "Monte Carlo estimate for one triple")
    p.add_argument("--edges", required=True, help="edge list file, '-' for stdin")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_mc)

    p = add_parser("bounds", "exact checks of the analytic bounds")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "threads"):
        args.threads = _default_threads()
    if not hasattr(args, "json"):
        args.json = False
    if not hasattr(args, "cap"):
        args.cap = DEFAULT_CAP
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OverCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVER_CAP
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
