"""Command-line surface: construct extremal graphs, verify closed-form
identities over parameter grids, and run the exhaustive small-n search.

Outputs are deterministic: JSON objects have sorted keys, CSV columns are
fixed, and no timestamps or machine identifiers are embedded, so identical
invocations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import constructions, oracle
from .covering import covering_number
from .formulas import (
    ParameterError,
    conjecture1_bound,
    triangle_params,
    turan_edge_count,
)
from .graphs import complete_graph, count_cliques, to_graph6

FORMAT_VERSION = 1


def _parse_range(text):
    """'5' -> [5]; '2..6' -> [2..6]; '12..60..3' -> [12, 15, ..., 60]."""
    parts = text.split("..")
    if len(parts) == 1:
        return [int(parts[0])]
    if len(parts) == 2:
        return list(range(int(parts[0]), int(parts[1]) + 1))
    if len(parts) == 3:
        return list(range(int(parts[0]), int(parts[1]) + 1, int(parts[2])))
    raise argparse.ArgumentTypeError(f"bad range {text!r}")


def _write(path, text):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_report(payload):
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _csv_table(rows, columns):
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow(row)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# construct

def _cmd_construct(args):
    params = {}
    for name in ("n", "k", "s", "t", "m", "parts"):
        val = getattr(args, name, None)
        if val is not None:
            params[name] = val
    if getattr(args, "sizes", None):
        params["sizes"] = [int(x) for x in args.sizes.split(",")]
    try:
        g = constructions.build(args.family, **params)
    except (constructions.InfeasibleConstructionError, ParameterError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    k = params.get("k", 3)
    report = {
        "format_version": FORMAT_VERSION,
        "command": "construct",
        "family": args.family,
        "params": params,
        "graph6": to_graph6(g),
        "edge_count": g.edge_count(),
        "clique_count": {str(k): count_cliques(g, k)},
    }
    if args.tau:
        report["covering_number"] = covering_number(g, complete_graph(k)).tau
    if args.format == "graph6":
        _write(args.out, to_graph6(g) + "\n")
    else:
        _write(args.out, _json_report(report))
    return 0


# ---------------------------------------------------------------------------
# verify

def _verify_fact(args):
    rows = []
    ok = True
    tau_sample = set(args.tau_sample or [])
    for n in args.n:
        for s in args.s:
            for t in range(1, s):
                p = triangle_params(n, s, t)
                expect_e = turan_edge_count(n, 2) + t
                expect_bm = s * p.n_minus - p.m_st
                expect_bs = expect_bm + (p.r3 - p.m_st)
                row = {"n": n, "s": s, "t": t}
                try:
                    bm = constructions.bm_graph(n, s, t)
                    bs = constructions.bs_graph(n, s, t)
                except constructions.InfeasibleConstructionError as exc:
                    row.update(status="infeasible", reason=str(exc))
                    rows.append(row)
                    continue
                row.update(
                    status="ok",
                    e_bm=bm.edge_count(), e_bs=bs.edge_count(), e_expected=expect_e,
                    n3_bm=count_cliques(bm, 3), n3_bm_expected=expect_bm,
                    n3_bs=count_cliques(bs, 3), n3_bs_expected=expect_bs,
                )
                passed = (row["e_bm"] == row["e_bs"] == expect_e
                          and row["n3_bm"] == expect_bm and row["n3_bs"] == expect_bs)
                if n in tau_sample:
                    k3 = complete_graph(3)
                    row["tau_bm"] = covering_number(bm, k3).tau
                    row["tau_bs"] = covering_number(bs, k3).tau
                    passed = passed and row["tau_bm"] == s and row["tau_bs"] == s
                row["pass"] = passed
                ok = ok and passed
                rows.append(row)
    cols = ["n", "s", "t", "status", "reason", "e_bm", "e_bs", "e_expected",
            "n3_bm", "n3_bm_expected", "n3_bs", "n3_bs_expected",
            "tau_bm", "tau_bs", "pass"]
    _write(args.out, _csv_table(rows, cols))
    return 0 if ok else 1


def _verify_fg(args):
    rows = oracle.verify_fg(args.smax)
    ok = all(r.holds for r in rows)
    payload = {
        "format_version": FORMAT_VERSION,
        "command": "verify fg",
        "smax": args.smax,
        "all_hold": ok,
        "exceptional_even": [[r.s, r.t] for r in rows if r.parity == "even" and r.exceptional],
        "exceptional_odd": [[r.s, r.t] for r in rows if r.parity == "odd" and r.exceptional],
        "rows": [r.to_dict() for r in rows],
    }
    _write(args.out, _json_report(payload))
    return 0 if ok else 1


def _verify_conjectures(args):
    n, s, t = args.n[0], args.s[0], args.t
    g = constructions.bm_graph(n, s, t)
    n3 = count_cliques(g, 3)
    bound = conjecture1_bound(n, s, t)
    payload = {
        "format_version": FORMAT_VERSION,
        "command": "verify conjectures",
        "n": n, "s": s, "t": t,
        "construction_n3": n3,
        "conjectured_bound": bound,
        "conjecture_violated": n3 < bound,
        "edge_count": g.edge_count(),
        "edge_expected": turan_edge_count(n, 2) + t,
    }
    if args.tau:
        payload["tau"] = covering_number(g, complete_graph(3)).tau
    _write(args.out, _json_report(payload))
    return 0


def _verify_theorem(args, which):
    grid = {"n": args.n, "s": args.s} if args.n and args.s else None
    rows = oracle.theorem_sweep(which, grid)
    ok = all(r.get("pass", True) for r in rows)
    cols = sorted({c for r in rows for c in r})
    _write(args.out, _csv_table(rows, cols))
    return 0 if ok else 1


def _verify_opt(args):
    rows = []
    ok = True
    for k in args.k:
        for n in args.n:
            for m in args.m:
                got = oracle.min_product(n, k, 2, 1, m)
                expected = (oracle.case_min_product(n, k) if m == 0
                            else oracle.balanced_product(n, k))
                row = {"k": k, "n": n, "m": m,
                       "minimum": got.value, "expected": expected,
                       "argmin": "-".join(map(str, got.argmin or ())),
                       "pass": got.feasible and got.value == expected}
                ok = ok and row["pass"]
                rows.append(row)
    _write(args.out, _csv_table(rows, ["k", "n", "m", "minimum", "expected", "argmin", "pass"]))
    return 0 if ok else 1


def _cmd_verify(args):
    target = args.target
    if target == "fact":
        return _verify_fact(args)
    if target == "fg":
        return _verify_fg(args)
    if target == "conjectures":
        return _verify_conjectures(args)
    if target in ("theorem1", "theorem2", "theorem3", "theorem4"):
        return _verify_theorem(args, "T" + target[-1])
    if target == "opt":
        return _verify_opt(args)
    print(f"error: unknown verify target {target!r}", file=sys.stderr)
    return 2


# ---------------------------------------------------------------------------
# search

def _cmd_search(args):
    try:
        report = oracle.brute_min_cliques(args.n, args.e, args.k, args.s,
                                          workers=args.workers)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = {
        "format_version": FORMAT_VERSION,
        "command": "search",
        "n": report.n, "e": report.e, "k": report.k, "s": report.s,
        "minimum": report.minimum,
        "witnesses": report.witnesses,
        "graphs_scanned": report.graphs_scanned,
        "pruned": report.pruned,
    }
    _write(args.out, _json_report(payload))
    return 0


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="cliquemin",
        description="extremal constructions, closed-form bounds, and "
                    "brute-force verification for minimum clique counts "
                    "under covering-number constraints",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an extremal graph")
    c.add_argument("family", choices=["bm", "bs", "km", "km-special", "t-box",
                                      "turan", "complete-multipartite"])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--parts", type=int)
    c.add_argument("--sizes", help="comma-separated part sizes")
    c.add_argument("--tau", action="store_true", help="also compute the covering number")
    c.add_argument("--format", choices=["json", "graph6"], default="json")
    c.add_argument("--out")
    c.set_defaults(func=_cmd_construct)

    v = sub.add_parser("verify", help="check identities over a parameter grid")
    v.add_argument("target", choices=["fact", "fg", "conjectures", "opt",
                                      "theorem1", "theorem2", "theorem3", "theorem4"])
    v.add_argument("--n", type=_parse_range)
    v.add_argument("--s", type=_parse_range)
    v.add_argument("--t", type=int, default=1)
    v.add_argument("--k", type=_parse_range, default=[4])
    v.add_argument("--m", type=_parse_range, default=[0, 1])
    v.add_argument("--smax", type=int, default=19)
    v.add_argument("--tau-sample", type=_parse_range,
                   help="n values at which covering numbers are also checked")
    v.add_argument("--tau", action="store_true")
    v.add_argument("--out")
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("search", help="exhaustive minimum over all graphs with "
                                      "fixed n, e, and covering number")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--e", type=int, required=True)
    s.add_argument("--k", type=int, default=3)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--workers", type=int)
    s.add_argument("--out")
    s.set_defaults(func=_cmd_search)

    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
