"""Command-line front end.

Human-readable output mirrors the published run-log format (Success/Done
lines) so diffs against the literature are mechanical; --json emits one
structured document instead.  Exit codes: 0 success, 1 verification failed,
2 usage error, 3 I/O or parse error.
"""

import argparse
import json
import sys

from .admissibility import admissible_census, admissible_classes
from .enumeration import GrimmClass, census, count_squarefree, enumerate_grimm_class
from .errors import BrinkhuisError, EmptyFile, InvalidSymbol
from .hyperclique import CliqueInstance, exact_max_clique, rhcs
from .pipeline import run_pipeline
from .verify import (TripleCandidate, compute_bound, expand_with_reversals,
                     parse_word_file, scan_triples_checkpointed, verify_triple)


def _grimm(label):
    return GrimmClass.CLASS1 if label == "1" else GrimmClass.CLASS2


def _done_line(idx, c, b):
    return (f"a{idx}={c.a:3d}, a{idx}p={c.a_p:3d}, a{idx}n={c.a_n:3d};   "
            f"b{idx}={b.b:3d}, b{idx}p={b.b_p:3d}, b{idx}n={b.b_n:3d}")


def _success_lines(classes, start=1):
    lines = []
    for i, c in enumerate(classes, start=start):
        tail = " (palindromic)" if c.palindromic else ""
        lines.append(f"Success [{i:3d}]: {c.representative}{tail}")
    return lines


def cmd_count(args, out):
    n = count_squarefree(args.n, args.alphabet)
    if args.json:
        print(json.dumps({"n": args.n, "alphabet": args.alphabet, "count": n}),
              file=out)
    else:
        print(n, file=out)
    return 0


def cmd_enumerate(args, out):
    gc = _grimm(args.grimm_class)
    words = enumerate_grimm_class(gc, args.n)
    c = census(gc, args.n)
    if args.json:
        print(json.dumps({"n": args.n, "class": gc.index,
                          "words": list(map(str, words)),
                          "a": c.a, "ap": c.a_p, "an": c.a_n}), file=out)
        return 0
    for w in words:
        print(w, file=out)
    print(f"a={c.a} ap={c.a_p} an={c.a_n}", file=out)
    return 0


def cmd_census(args, out):
    gc = _grimm(args.grimm_class)
    c = census(gc, args.n)
    if args.json:
        print(json.dumps({"n": args.n, "class": gc.index,
                          "a": c.a, "ap": c.a_p, "an": c.a_n}), file=out)
    else:
        print(f"a={c.a} ap={c.a_p} an={c.a_n}", file=out)
    return 0


def cmd_admissible(args, out):
    gc = _grimm(args.grimm_class)
    classes = admissible_classes(gc, args.n)
    c = census(gc, args.n)
    b = admissible_census(gc, args.n)
    if args.json:
        print(json.dumps({
            "n": args.n, "class": gc.index,
            "representatives": [str(x.representative) for x in classes],
            "palindromic": [x.palindromic for x in classes],
            "a": c.a, "ap": c.a_p, "an": c.a_n,
            "b": b.b, "bp": b.b_p, "bn": b.b_n}), file=out)
        return 0
    for line in _success_lines(classes):
        print(line, file=out)
    print(f"Done:  {_done_line(gc.index, c, b)}", file=out)
    return 0


def cmd_edges(args, out):
    from .compatibility import build_hypergraph

    if not args.words and (args.n is None or args.grimm_class is None):
        raise ValueError("edges needs either --words or both --n and --class")
    if args.words:
        from .admissibility import ReversalClass
        seen = {}
        for w in parse_word_file(args.words):
            rc = ReversalClass.of(w)
            seen[rc.representative] = rc
        classes = [seen[r] for r in sorted(seen)]
    else:
        classes = admissible_classes(_grimm(args.grimm_class), args.n)
    hg = build_hypergraph(classes)
    lines = [f"vertices={len(hg.vertices)}"]
    lines += [f"{i} {j} {k}" for i, j, k in sorted(hg.triple_edges)]
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        out.write(text)
    return 0


def _read_edges_file(path):
    with open(path) as f:
        header = f.readline().strip()
        if not header.startswith("vertices="):
            raise InvalidSymbol(f"{path}: expected 'vertices=<count>' header")
        count = int(header.split("=", 1)[1])
        triples = []
        for line in f:
            if line.strip():
                i, j, k = (int(x) for x in line.split())
                triples.append((i, j, k))
    return CliqueInstance.from_triple_edges(count, triples)


def cmd_clique(args, out):
    inst = _read_edges_file(args.edges)
    if args.rhcs:
        result = rhcs(inst, seed=args.seed, restarts=args.restarts)
        mode = f"mode=heuristic seed={args.seed}"
    else:
        result = exact_max_clique(inst)
        mode = "mode=exact"
    if args.json:
        print(json.dumps({"size": result.size,
                          "vertices": list(result.vertices),
                          "certificate": result.certificate,
                          "seed": result.seed}), file=out)
        return 0
    print(f"size={result.size}", file=out)
    print(" ".join(map(str, result.vertices)), file=out)
    print(mode, file=out)
    return 0


def cmd_verify(args, out):
    words = parse_word_file(args.b0)
    if args.expand_reversals:
        words = expand_with_reversals(words)
    cand = TripleCandidate.from_words(words, n=args.n)
    if args.triple_range:
        if not args.checkpoint:
            raise ValueError("--triple-range requires --checkpoint")
        lo, hi = (int(x) for x in args.triple_range.split(":"))
        failure, checked = scan_triples_checkpointed(
            cand, lo, hi, args.checkpoint)
        if args.json:
            print(json.dumps({"range": [lo, hi], "checked": checked,
                              "failed": failure is not None}), file=out)
        else:
            verdict = "FAIL" if failure else "PASS"
            print(f"{verdict} range={lo}:{hi} checked={checked}", file=out)
        return 1 if failure else 0
    mode = "sampled" if args.sampled else "full"
    report = verify_triple(cand, mode=mode, seed=args.seed,
                           samples=args.samples)
    if args.json:
        print(report.to_json(), file=out)
    elif report.passed:
        print(f"PASS n={report.n} k={report.k} mode={report.mode} "
              f"checks={report.checks_performed} bound={report.bound:.7f}",
              file=out)
    else:
        print(f"FAIL n={report.n} k={report.k} mode={report.mode} "
              f"stage={report.stage_failed}", file=out)
    return 0 if report.passed else 1


def cmd_bound(args, out):
    b = compute_bound(args.n, args.k)
    if args.json:
        print(json.dumps({"n": args.n, "k": args.k, "bound": b}), file=out)
    else:
        print(f"{b:.7f}", file=out)
    return 0


def cmd_pipeline(args, out):
    grimm = "both" if args.grimm_class == "both" else _grimm(args.grimm_class)
    summary = run_pipeline(args.n, grimm=grimm, solver=args.solver,
                           seed=args.seed, restarts=args.restarts)
    if args.json:
        doc = {"n": summary.n, "classes": {}}
        for run in summary.runs:
            idx = run.grimm_class.index
            doc["classes"][str(idx)] = {
                "a": run.census.a, "ap": run.census.a_p, "an": run.census.a_n,
                "b": run.admissible.b, "bp": run.admissible.b_p,
                "bn": run.admissible.b_n,
                "triple_edges": len(run.hypergraph.triple_edges),
                "clique_size": run.clique.size,
            }
        doc["clique_words"] = list(map(str, summary.clique_words or []))
        doc["verified"] = (summary.report.passed if summary.report else None)
        doc["bound"] = (summary.report.bound if summary.report else None)
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
        return 0
    idx = 1
    for run in summary.runs:
        for line in _success_lines(run.classes, start=idx):
            print(line, file=out)
        idx += len(run.classes)
    for i, run in enumerate(summary.runs):
        prefix = "Done:  " if i == 0 else "       "
        print(prefix + _done_line(run.grimm_class.index, run.census,
                                  run.admissible), file=out)
    for run in summary.runs:
        print(f"{len(run.classes)} admissible words of length {summary.n} "
              "read in", file=out)
        print("admissible triples:", file=out)
        print(f"{len(run.hypergraph.triple_edges)} admissible triples found",
              file=out)
    if summary.chosen is None:
        print("no nonempty clique found", file=out)
        return 0
    clique = summary.chosen.clique
    print(f"clique: class={summary.chosen.grimm_class.index} "
          f"size={clique.size} certificate={clique.certificate}", file=out)
    print("vertices: " + " ".join(map(str, clique.vertices)), file=out)
    report = summary.report
    print(f"verified: passed={report.passed} n={report.n} "
          f"k={report.k} bound={report.bound:.7f}", file=out)
    return 0 if report.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="brinkhuis",
        description="Ternary squarefree words, Brinkhuis triples, and "
                    "growth-rate lower bounds")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true",
                       help="emit machine-readable JSON")
        return p

    p = add("count", cmd_count, help="count squarefree words")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alphabet", type=int, choices=(2, 3), default=3)

    for name, fn in (("enumerate", cmd_enumerate), ("census", cmd_census),
                     ("admissible", cmd_admissible)):
        p = add(name, fn, help=f"{name} for one Grimm class")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--class", dest="grimm_class", choices=("1", "2"),
                       required=True)

    p = add("edges", cmd_edges, help="write the triple-edge file")
    p.add_argument("--n", type=int)
    p.add_argument("--class", dest="grimm_class", choices=("1", "2"))
    p.add_argument("--words", help="word list file instead of --n/--class")
    p.add_argument("--out", help="output path (default stdout)")

    p = add("clique", cmd_clique, help="maximum hyperclique on an edges file")
    p.add_argument("--edges", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true", default=True)
    group.add_argument("--rhcs", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=100)

    p = add("verify", cmd_verify, help="verify a candidate triple file")
    p.add_argument("--b0", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expand-reversals", action="store_true")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--full", action="store_true", default=True)
    group.add_argument("--sampled", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10 ** 6)
    p.add_argument("--triple-range", metavar="T0:T1",
                   help="scan only this product index range")
    p.add_argument("--checkpoint", help="checkpoint file for --triple-range")

    p = add("bound", cmd_bound, help="growth-rate lower bound k^(1/(n-1))")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("pipeline", cmd_pipeline, help="full search pipeline")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="grimm_class",
                   choices=("1", "2", "both"), default="both")
    p.add_argument("--solver", choices=("exact", "rhcs"), default="exact")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=100)

    return parser


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, out)
    except (InvalidSymbol, EmptyFile, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (BrinkhuisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
