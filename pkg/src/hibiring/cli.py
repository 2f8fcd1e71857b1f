"""Command-line front end.

Subcommands: lattice, ideal, syzygy, betti, linearity, census.  A lattice is
given either as --grid M N or as --file PATH pointing to a JSON document with
"elements" (a list of names) and "covers" (pairs of indices into that list,
lower element first).  Exit codes: 0 success, 1 input
error, 2 mathematical mismatch (a formula/oracle disagreement or a failed
Groebner certificate).
"""

import argparse
import csv
import io
import json
import os
import sys

from . import lattice as lat
from .betti import (
    grid_betti,
    k_of,
    linearity_by_k,
    planar_betti,
    typed_minimal_histogram,
)
from .errors import (
    HibiError,
    NotGroebner,
    OracleMismatch,
    UnrecognizedShape,
)
from .ideal import (
    buchberger_check,
    hibi_ideal,
    to_json_dict,
    to_macaulay2,
    to_singular,
)
from .oracle import graded_betti_oracle, is_linear_first_syzygy
from .polynomials import QQ, PrimeField
from .syzygy import all_typed_generators, apply_phi

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MISMATCH = 2


def _parse_field(text, nvars):
    if text == "qq":
        return QQ
    if text.startswith("fp:"):
        p = int(text[3:])
        field = PrimeField(p)
        if p <= nvars:
            raise ValueError(
                f"prime {p} must exceed the number of variables ({nvars})")
        return field
    raise ValueError(f"unknown field {text!r}; use qq or fp:P")


def _default_max_degree():
    env = os.environ.get("HIBI_MAX_DEGREE")
    return int(env) if env else 6


def _load_lattice(args):
    if args.grid is not None:
        m, n = args.grid
        if m < 1 or n < 1:
            raise ValueError("grid dimensions must be positive")
        return lat.grid(m, n)
    if args.file is not None:
        with open(args.file) as fh:
            doc = json.load(fh)
        try:
            return lat.from_json_dict(doc)
        except (KeyError, TypeError) as exc:
            raise ValueError(
                f"malformed lattice JSON (expected 'elements' and 'covers' "
                f"keys): {exc}")
    raise ValueError("provide a lattice via --grid M N or --file PATH")


def _emit(args, report, text_lines):
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        rows = report.get("rows")
        if rows:
            fields = sorted({k for row in rows for k in row})
            writer.writerow(fields)
            for row in rows:
                writer.writerow([row.get(k, "") for k in fields])
        else:
            writer.writerow(sorted(report))
            writer.writerow([report[k] for k in sorted(report)])
        sys.stdout.write(buf.getvalue())
    else:
        for line in text_lines:
            print(line)


# -- subcommands ---------------------------------------------------------------


def cmd_lattice(args):
    L = _load_lattice(args)
    jm = sorted(L.jm_set())
    ncovers = len(L.covers)
    report = {
        "elements": L.n,
        "covers": ncovers,
        "incomparable_pairs": len(L.incomparable_pairs()),
        "distributive": True,
        "planar": L.is_planar(),
        "jm_elements": [L.labels[v] for v in jm],
        "k": k_of(L),
    }
    shape = "planar" if report["planar"] else "not planar"
    lines = [
        f"{L.n} elements, {report['incomparable_pairs']} incomparable pairs, "
        f"{shape}, k={report['k']}",
        f"covers: {ncovers}",
        f"JM elements: {', '.join(report['jm_elements']) or '(none)'}",
    ]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_ideal(args):
    L = _load_lattice(args)
    ideal = hibi_ideal(L, _parse_field(args.field, L.n))
    if args.export == "m2":
        sys.stdout.write(to_macaulay2(ideal))
        return EXIT_OK
    if args.export == "singular":
        sys.stdout.write(to_singular(ideal))
        return EXIT_OK
    if args.export == "json":
        print(json.dumps(to_json_dict(ideal), indent=2, sort_keys=True))
        return EXIT_OK
    report = {"generators": [
        {"pair": [L.labels[v] for v in r.pair], "text": ideal.render(r.poly)}
        for r in ideal.relations]}
    lines = [f"{len(ideal)} generators"]
    lines += [f"  g({g['pair'][0]},{g['pair'][1]}) = {g['text']}"
              for g in report["generators"]]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_syzygy(args):
    L = _load_lattice(args)
    ideal = hibi_ideal(L, _parse_field(args.field, L.n))
    gens = all_typed_generators(ideal)
    if args.verify:
        for t in gens:
            image = apply_phi(t.element, ideal)
            if not image.is_zero():
                print(f"typed generator {t.kind} at {t.witness} is not a "
                      f"syzygy", file=sys.stderr)
                return EXIT_MISMATCH
    hist = typed_minimal_histogram(ideal)
    listing = [{"kind": t.kind,
                "witness": [L.labels[v] for v in t.witness]} for t in gens]
    report = {"generators": listing, "minimal_histogram": hist,
              "total": sum(hist.values()), "verified": bool(args.verify)}
    lines = []
    if args.classify:
        lines += [f"  {g['kind']} witness ({', '.join(g['witness'])})"
                  for g in listing]
    lines.append("minimal histogram: "
                 + ", ".join(f"{k}={v}" for k, v in hist.items()))
    lines.append(f"total minimal generators: {report['total']}")
    if args.verify:
        lines.append(f"all {len(gens)} typed generators verified as syzygies")
    _emit(args, report, lines)
    return EXIT_OK


def cmd_betti(args):
    L = _load_lattice(args)
    report = {"mode": args.mode}
    lines = []
    formula_total = None
    oracle_total = None
    if args.mode in ("formula", "both"):
        if args.grid is not None:
            b = grid_betti(*args.grid)
            breakdown = {"strip": b.strip, "L": b.l, "box": b.box,
                         "diamond": 0}
            formula_total = b.total
        else:
            pb = planar_betti(L, check_oracle=False)
            breakdown = {"strip": pb.nS, "L": pb.nL, "box": pb.nB,
                         "diamond": pb.nD}
            formula_total = pb.total
        report["formula"] = {"breakdown": breakdown, "total": formula_total}
        lines.append("formula: "
                     + " + ".join(str(v) for v in breakdown.values())
                     + f" = {formula_total}")
    if args.mode in ("oracle", "both"):
        ideal = hibi_ideal(L, _parse_field(args.field, L.n))
        rows = graded_betti_oracle(ideal, args.max_degree)
        oracle_total = sum(r.minimal_generators for r in rows)
        report["oracle"] = {
            "total": oracle_total,
            "by_degree": {r.degree: r.minimal_generators for r in rows}}
        lines.append("oracle: " + ", ".join(
            f"degree {r.degree}: {r.minimal_generators}" for r in rows)
            + f" (total {oracle_total})")
    if args.mode == "both":
        if formula_total != oracle_total:
            report["agreement"] = False
            _emit(args, report, lines
                  + [f"MISMATCH: formula {formula_total} != oracle "
                     f"{oracle_total}"])
            return EXIT_MISMATCH
        report["agreement"] = True
        lines.append(f"{formula_total} = {oracle_total}")
    _emit(args, report, lines)
    return EXIT_OK


def cmd_linearity(args):
    L = _load_lattice(args)
    ideal = hibi_ideal(L, _parse_field(args.field, L.n))
    try:
        v = linearity_by_k(L)
        verdict, reason, k = v.verdict, v.reason, v.k
    except UnrecognizedShape as exc:
        k = k_of(L)
        verdict = ("linear" if is_linear_first_syzygy(ideal, args.max_degree)
                   else "nonlinear")
        reason = f"decided by the oracle ({exc})"
    report = {"k": k, "verdict": verdict, "reason": reason}
    lines = [f"k = {k}", f"verdict: {verdict}", f"reason: {reason}"]
    if args.verify:
        oracle = is_linear_first_syzygy(ideal, args.max_degree)
        report["oracle_agrees"] = (verdict == "linear") == oracle
        lines.append(f"oracle agrees: {report['oracle_agrees']}")
        if not report["oracle_agrees"]:
            _emit(args, report, lines)
            return EXIT_MISMATCH
    _emit(args, report, lines)
    return EXIT_OK


def cmd_census(args):
    checks = (["gb", "betti", "linearity"] if args.check == "all"
              else [args.check])
    rows = []
    failures = 0
    examined = 0
    for L in lat.enumerate_distributive(args.max_elements):
        if L.n == 1:
            continue  # the one-element lattice has no relations at all
        examined += 1
        ideal = hibi_ideal(L)
        row = {"elements": L.n, "planar": L.is_planar(), "k": k_of(L)}
        try:
            if "gb" in checks:
                buchberger_check(ideal)
                row["gb"] = "pass"
            if "betti" in checks:
                if L.is_planar():
                    row["betti"] = planar_betti(L).total
                else:
                    row["betti"] = "skipped (not planar)"
            if "linearity" in checks:
                if L.is_planar():
                    try:
                        v = linearity_by_k(L)
                        agree = ((v.verdict == "linear")
                                 == is_linear_first_syzygy(ideal))
                    except UnrecognizedShape:
                        agree = True  # the oracle alone decides
                    row["linearity"] = "pass" if agree else "FAIL"
                    failures += 0 if agree else 1
                else:
                    row["linearity"] = "skipped (not planar)"
        except (NotGroebner, OracleMismatch) as exc:
            row["error"] = str(exc)
            failures += 1
        rows.append(row)
    report = {"rows": rows, "examined": examined, "failures": failures}
    lines = [f"{examined} lattices examined, {failures} failures"]
    _emit(args, report, lines)
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


# -- parser ----------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hibi",
        description="First syzygies of Hibi rings of finite distributive "
                    "lattices")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, lattice_input=True):
        if lattice_input:
            p.add_argument("--grid", nargs=2, type=int, metavar=("M", "N"))
            p.add_argument("--file", metavar="PATH")
        p.add_argument("--field", default="qq", metavar="{qq|fp:P}")
        p.add_argument("--max-degree", type=int,
                       default=_default_max_degree())
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--format", choices=("text", "json", "csv"),
                       default="text")

    common(sub.add_parser("lattice", help="lattice report"))
    p = sub.add_parser("ideal", help="generator listing or export script")
    common(p)
    p.add_argument("--export", choices=("m2", "singular", "json"))
    p = sub.add_parser("syzygy", help="typed syzygy listing and histogram")
    common(p)
    p.add_argument("--classify", action="store_true")
    p.add_argument("--verify", action="store_true")
    p = sub.add_parser("betti", help="first Betti number by formula/oracle")
    common(p)
    p.add_argument("--mode", choices=("formula", "oracle", "both"),
                   default="both")
    p = sub.add_parser("linearity", help="linearity of the first syzygy")
    common(p)
    p.add_argument("--verify", action="store_true")
    p = sub.add_parser("census", help="property suites over all small "
                                      "distributive lattices")
    common(p, lattice_input=False)
    p.add_argument("--max-elements", type=int, required=True)
    p.add_argument("--check", choices=("gb", "betti", "linearity", "all"),
                   default="all")
    return parser


_COMMANDS = {
    "lattice": cmd_lattice,
    "ideal": cmd_ideal,
    "syzygy": cmd_syzygy,
    "betti": cmd_betti,
    "linearity": cmd_linearity,
    "census": cmd_census,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return _COMMANDS[args.command](args)
    except (NotGroebner, OracleMismatch) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (HibiError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
