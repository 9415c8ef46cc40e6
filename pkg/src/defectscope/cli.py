"""Command-line interface: ``defectscope <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .classify import analyze, build_table, dumps, resolve_method, scan
from .dade import dade_k, classify_cyclic_congruent, classify_cyclic_strong, valid_inertial_indices
from .errors import DefectScopeError, StageError
from .report import plot_kb_vs_kd, plot_verdict_counts, to_csv, write_bundle


def _table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _group_args(sp):
    sp.add_argument("--group", required=True, help="preset (sym(n), alt(n), dihedral(2n), "
                    "quaternion8, sl23, gl32, psl33), inline JSON or a generator file")
    sp.add_argument("--method", default="auto", choices=["auto", "dixon", "mn", "ingest"])
    sp.add_argument("--table", help="character table file for --method ingest")
    sp.add_argument("--json", action="store_true", help="emit JSON instead of a text table")


def cmd_chartab(args) -> int:
    method = resolve_method(args.group, args.method, args.table)
    _, T, _ = build_table(args.group, method, args.table)
    if args.json:
        sys.stdout.write(dumps(T.to_json()))
        return 0
    labels = T.class_labels or [f"{c.element_order}{chr(97 + i % 26)}" for i, c in enumerate(T.classes)]
    head = ["", *map(str, labels)]
    rows = [["size", *T.class_sizes()]]
    rows += [[f"X.{i + 1}", *row] for i, row in enumerate(T.values)]
    print(f"{args.group}: |G| = {T.order}, k(G) = {T.k}, method {T.method}")
    print(_table(head, rows))
    return 0


def cmd_blocks(args) -> int:
    method = resolve_method(args.group, args.method, args.table)
    built = build_table(args.group, method, args.table)
    rep = analyze(args.group, args.p, method, args.table, _built=built)
    if args.json:
        sys.stdout.write(dumps(rep.to_json()))
        return 0
    degs = built[1].degrees()
    print(f"{rep.group}, p = {rep.p}: |G| = {rep.order}, k(G) = {rep.k_G}, {len(rep.blocks)} blocks")
    rows = [[b["index"], b["d"], b["kB"], b["k0B"], " ".join(f"X.{c + 1}({degs[c]})" for c in b["characters"])]
            for b in rep.blocks]
    print(_table(["block", "d", "k(B)", "k0(B)", "characters"], rows))
    return 0


def cmd_classify(args) -> int:
    rep = analyze(args.group, args.p, args.method, args.table)
    data = rep.to_json()
    if args.json:
        sys.stdout.write(dumps(data))
    else:
        rows = [[b["index"], b["d"], b["defect_group"]["order"], b["kB"], b["defect_group"]["k_D"],
                 "" if b["e"] is None else b["e"], b["verdict"]] for b in rep.blocks]
        print(f"{rep.group}, p = {rep.p}: |G| = {rep.order}, "
              f"{'exotic' if rep.exotic else 'not exotic'}")
        print(_table(["block", "d", "|D|", "k(B)", "k(D)", "e", "verdict"], rows))
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(dumps(data))
        (out / "blocks.csv").write_text(to_csv([data]))
        plot_kb_vs_kd([data], out / "kb_vs_kd.png")
        plot_verdict_counts(data["counts"], out / "verdicts.png")
    return 0


def cmd_dade(args) -> int:
    p, d = args.p, args.d
    es = [args.e] if args.e is not None else valid_inertial_indices(p)
    rows = []
    for e in es:
        pred = dade_k(p, d, e)
        rows.append({"p": p, "d": d, "e": e, "predicted_k": pred.predicted_k, "k_D": p**d,
                     "strong": classify_cyclic_strong(p, d, e),
                     "congruent": classify_cyclic_congruent(p, d, e)})
    if args.json:
        sys.stdout.write(dumps(rows))
    else:
        print(_table(["p", "d", "e", "k(B)", "k(D)", "strong", "congruent"],
                     [[r["p"], r["d"], r["e"], r["predicted_k"], r["k_D"], r["strong"], r["congruent"]]
                      for r in rows]))
    return 0


def cmd_scan(args) -> int:
    result = scan(args.corpus, jobs=args.jobs, checkpoint=args.checkpoint)
    reports = [j["report"] for j in result["jobs"] if "report" in j]
    if args.out_dir:
        write_bundle(reports, result["counts"], args.out_dir, summary=result)
    if args.json:
        sys.stdout.write(dumps(result))
    else:
        rows = []
        for j in result["jobs"]:
            if "report" in j:
                c = j["report"]["counts"]
                rows.append([j["group"], j["p"], len(j["report"]["blocks"]), c["StronglyKD"], c["KD"],
                             c["Exotic"], "exotic" if j["report"]["exotic"] else ""])
            else:
                rows.append([j["group"], j["p"], "-", "-", "-", "-", f"error in {j['error']['stage']}"])
        if rows:
            print(_table(["group", "p", "blocks", "StronglyKD", "KD", "Exotic", ""], rows))
        c = result["counts"]
        gc = result["general_cases"]
        print(f"blocks: {c['StronglyKD']} StronglyKD, {c['KD']} KD, {c['Exotic']} Exotic; "
              f"{len(result['exotic_groups'])} exotic (G, p); {result['errors']} errors")
        print(f"general cases: {gc['bugs']} pipeline violations, {gc['findings']} findings")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="defectscope", description="p-blocks, defect groups and k(D) verdicts")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("chartab", help="print a character table")
    _group_args(sp)
    sp.set_defaults(func=cmd_chartab)

    sp = sub.add_parser("blocks", help="p-blocks with defects and heights")
    _group_args(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.set_defaults(func=cmd_blocks)

    sp = sub.add_parser("classify", help="k(B) against k(D) for every p-block")
    _group_args(sp)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--out-dir", help="also write report.json, blocks.csv and figures here")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("dade", help="predicted k(B) for cyclic defect p^d and inertial index e")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--e", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_dade)

    sp = sub.add_parser("scan", help="classify every (group, prime) of a corpus file")
    sp.add_argument("--corpus", required=True, help="JSON array of {group, primes}")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--checkpoint", help="JSONL results file; finished jobs are skipped on rerun")
    sp.add_argument("--out-dir", help="write report.json, blocks.csv and figures here")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except StageError as exc:
        print(f"defectscope: {exc.stage} stage failed: {type(exc.cause).__name__}: {exc.cause}",
              file=sys.stderr)
    except (DefectScopeError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"defectscope: {type(exc).__name__}: {exc}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
