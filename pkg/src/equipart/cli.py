"""Command-line surface: partition, merge, verify, color, gen, bench.

Machine-readable JSON goes to stdout; human diagnostics go to stderr.
Exit codes: 0 success (verification passed), 1 usage or I/O error,
2 precondition violation (e.g. non-planar input), 3 a produced partition
failed verification (indicates a bug; the report is dumped).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import coloring as coloring_mod
from . import generators, oracle, partitioners, setmerge, verify
from .coloring import BUDGET_EXHAUSTED, Coloring
from .errors import EquipartError, MalformedInput
from .graph import Graph, parse_graph
from .partitioners import Partition

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_VERIFY_BUG = 3

PARTITION_ALGS = ("2x3deg", "3x2deg", "2x2deg-trifree", "2forests1graph",
                  "3bipartite", "linear-forests")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except MalformedInput as e:
        _diag(f"input error: {e}")
        return EXIT_USAGE
    except FileNotFoundError as e:
        _diag(f"file not found: {e}")
        return EXIT_USAGE
    except EquipartError as e:
        _emit({"error": type(e).__name__, "message": str(e)})
        return EXIT_PRECONDITION


def _diag(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit(obj: dict, path: Optional[str] = None) -> None:
    text = json.dumps(obj, sort_keys=True)
    print(text)
    if path:
        Path(path).write_text(text + "\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equipart",
        description="Equitable partitions of planar graphs into degenerate "
                    "parts and forests.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="partition a graph")
    p.add_argument("--alg", required=True, choices=PARTITION_ALGS)
    p.add_argument("-i", "--input", required=True,
                   help="graph file, or - for stdin")
    p.add_argument("--format", choices=("graph6", "edge_list"))
    p.add_argument("--coloring", help="coloring JSON file for preset algorithms")
    p.add_argument("--budget", type=int, help="coloring search node budget")
    p.add_argument("-o", "--output", help="also write the JSON result here")
    p.add_argument("--no-verify", action="store_true",
                   help="skip precondition and result verification")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("merge", help="merge disjoint classes into parts")
    p.add_argument("--classes", required=True,
                   help="JSON file of classes, or sizes:a,b,c for synthetic "
                        "elements")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--ell", type=int, help="target merged part count")
    group.add_argument("--equitable", action="store_true",
                       help="merge k classes into k-1 equitable parts")
    p.set_defaults(func=cmd_merge)

    p = sub.add_parser("verify", help="check a partition against a spec")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--format", choices=("graph6", "edge_list"))
    p.add_argument("--partition", required=True,
                   help='JSON file {"parts": [[...], ...]}')
    p.add_argument("--parts", type=int, required=True)
    p.add_argument("--constraint", default="unconstrained",
                   help="d-degenerate (e.g. 3-degenerate), forest, "
                        "linear_forest, independent, bipartite, unconstrained")
    p.add_argument("--not-equitable", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("color", help="exact proper/acyclic coloring search")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--format", choices=("graph6", "edge_list"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--acyclic", action="store_true")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("gen", help="generate a deterministic planar graph")
    p.add_argument("--kind", required=True, choices=generators.KINDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--flips", type=int, default=0)
    p.add_argument("--edges", type=int)
    p.add_argument("--format", choices=("graph6", "edge_list"),
                   default="graph6")
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a partitioner over a corpus dir")
    p.add_argument("--corpus", required=True)
    p.add_argument("--alg", required=True, choices=PARTITION_ALGS)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_bench)

    return parser


def _load_graph(path: str, fmt: Optional[str]) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text()
        if fmt is None:
            fmt = "edge_list" if Path(path).suffix in (".el", ".txt",
                                                       ".edgelist") else "graph6"
    return parse_graph(text, fmt or "graph6")


def _load_coloring(path: str) -> Coloring:
    data = json.loads(Path(path).read_text())
    if isinstance(data, list):
        data = {"classes": data}
    return Coloring.from_json(data)


def cmd_partition(args) -> int:
    g = _load_graph(args.input, args.format)
    check = not args.no_verify

    if check and args.alg in ("2x3deg", "3x2deg", "2forests1graph",
                              "3bipartite"):
        if not verify.is_planar(g):
            _emit({"error": "not planar"})
            return EXIT_PRECONDITION
    if args.alg == "2x2deg-trifree" and check:
        tri = verify.find_triangle(g)
        if tri is not None:
            _emit({"error": "not triangle-free",
                   "witness": tri.to_json()})
            return EXIT_PRECONDITION
        if not verify.is_planar(g):
            _emit({"error": "not planar"})
            return EXIT_PRECONDITION

    part, report = _run_partition(g, args)
    if part is None:
        return EXIT_PRECONDITION  # _run_partition already emitted the error

    out = {"algorithm": args.alg, "n": g.n, "m": g.m,
           "partition": part.to_json()}
    if check:
        out["verification"] = report.to_json()
        if not report.passed:
            _emit(out, args.output)
            _diag("BUG: produced partition failed verification")
            return EXIT_VERIFY_BUG
    _emit(out, args.output)
    return EXIT_OK


def _run_partition(g: Graph, args):
    """Returns (Partition, Report) or (None, None) after emitting an error."""
    alg = args.alg
    if alg == "2x3deg":
        part = partitioners.partition_2x3deg(g)
        spec = verify.PartitionSpec.degenerate(2, 3)
        return part, verify.check_partition(g, part, spec)
    if alg == "3x2deg":
        part = partitioners.partition_3x2deg(g)
        spec = verify.PartitionSpec.degenerate(3, 2)
        return part, verify.check_partition(g, part, spec)
    if alg == "2x2deg-trifree":
        part = partitioners.partition_2x2deg_trifree(g)
        spec = verify.PartitionSpec.degenerate(2, 2)
        return part, verify.check_partition(g, part, spec)
    if alg == "2forests1graph":
        if args.coloring:
            col = _load_coloring(args.coloring)
        else:
            col = coloring_mod.exact_acyclic_coloring(g, 5, args.budget)
            if col is BUDGET_EXHAUSTED:
                _emit({"error": "coloring budget exhausted"})
                return None, None
            if col is None:
                _emit({"error": "no acyclic 5-coloring found"})
                return None, None
        part = setmerge.partition_2forests_1graph(g, col)
        report = verify.check_mixed_partition(
            g, part, [("unconstrained", None), ("forest", None),
                      ("forest", None)])
        return part, report
    if alg == "3bipartite":
        col = coloring_mod.exact_proper_coloring(g, 4, args.budget)
        if col is BUDGET_EXHAUSTED:
            _emit({"error": "coloring budget exhausted"})
            return None, None
        if col is None:
            _emit({"error": "no proper 4-coloring found"})
            return None, None
        parts = setmerge.equitable_merge(col.classes)
        part = Partition(parts=tuple(tuple(sorted(p)) for p in parts))
        spec = verify.PartitionSpec(parts=3, constraint="bipartite")
        return part, verify.check_partition(g, part, spec)
    if alg == "linear-forests":
        if not args.coloring:
            _diag("linear-forests requires --coloring")
            raise MalformedInput("missing --coloring for linear-forests")
        col = _load_coloring(args.coloring)
        rep = coloring_mod.validate_coloring(g, col)
        if not rep.passed or not _pairs_are_linear_forests(g, col):
            _emit({"error": "coloring classes do not pairwise induce "
                            "linear forests"})
            return None, None
        parts = setmerge.equitable_merge(col.classes)
        part = Partition(parts=tuple(tuple(sorted(p)) for p in parts))
        spec = verify.PartitionSpec(parts=len(parts),
                                    constraint="linear_forest")
        return part, verify.check_partition(g, part, spec)
    raise AssertionError(alg)


def _pairs_are_linear_forests(g: Graph, col: Coloring) -> bool:
    for i in range(col.k):
        for j in range(i + 1, col.k):
            both = sorted((*col.classes[i], *col.classes[j]))
            spec = verify.PartitionSpec(parts=1, constraint="linear_forest",
                                        equitable=False)
            if verify._check_part(g, both, spec) is not None:
                return False
    return True


def _parse_classes(text: str) -> list[tuple[int, ...]]:
    if text.startswith("sizes:"):
        sizes = [int(s) for s in text[len("sizes:"):].split(",")]
        classes = []
        next_id = 0
        for s in sizes:
            classes.append(tuple(range(next_id, next_id + s)))
            next_id += s
        return classes
    data = json.loads(Path(text).read_text())
    if isinstance(data, dict):
        data = data["classes"]
    return [tuple(sorted(c)) for c in data]


def cmd_merge(args) -> int:
    classes = _parse_classes(args.classes)
    if args.equitable:
        parts = setmerge.equitable_merge(classes)
        _emit({"parts": [list(p) for p in parts]})
        return EXIT_OK
    res = setmerge.proposition_merge(setmerge.MergeInput.of(classes, args.ell))
    _emit(res.to_json())
    return EXIT_OK


def _parse_constraint(text: str) -> tuple[str, Optional[int]]:
    if text.endswith("-degenerate"):
        return "d_degenerate", int(text.split("-", 1)[0])
    return text, None


def cmd_verify(args) -> int:
    g = _load_graph(args.input, args.format)
    data = json.loads(Path(args.partition).read_text())
    parts = data["parts"] if isinstance(data, dict) else data
    constraint, d = _parse_constraint(args.constraint)
    spec = verify.PartitionSpec(parts=args.parts, constraint=constraint, d=d,
                                equitable=not args.not_equitable)
    report = verify.check_partition(g, parts, spec)
    _emit(report.to_json())
    return EXIT_OK if report.passed else EXIT_PRECONDITION


def cmd_color(args) -> int:
    g = _load_graph(args.input, args.format)
    fn = (coloring_mod.exact_acyclic_coloring if args.acyclic
          else coloring_mod.exact_proper_coloring)
    result = fn(g, args.k, args.budget)
    if result is BUDGET_EXHAUSTED:
        _emit({"result": "budget_exhausted"})
        return EXIT_PRECONDITION
    if result is None:
        _emit({"result": "none"})
        return EXIT_OK
    _emit({"result": "coloring", "coloring": result.to_json()})
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = generators.GenSpec(kind=args.kind, n=args.n, seed=args.seed,
                              flips=args.flips, edges=args.edges)
    g = generators.gen_planar(spec)
    text = g.to_graph6() + "\n" if args.format == "graph6" else g.to_edge_list()
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    corpus = Path(args.corpus)
    files = sorted(p for p in corpus.iterdir()
                   if p.suffix in (".g6", ".el", ".txt", ".edgelist"))
    per_file = []
    passes = fails = errors = repairs = 0
    t_total = time.perf_counter()
    for path in files:
        entry: dict = {"file": path.name}
        try:
            g = _load_graph(str(path), None)
            t0 = time.perf_counter()
            ns = argparse.Namespace(alg=args.alg, coloring=None,
                                    budget=args.budget)
            part, report = _run_partition(g, ns)
            entry["time_s"] = round(time.perf_counter() - t0, 6)
            if part is None:
                errors += 1
                entry["status"] = "error"
            elif report.passed:
                passes += 1
                entry["status"] = "pass"
                entry["repairs"] = len(part.trace)
                repairs += len(part.trace)
            else:
                fails += 1
                entry["status"] = "fail"
                entry["report"] = report.to_json()
        except EquipartError as e:
            errors += 1
            entry["status"] = "error"
            entry["error"] = f"{type(e).__name__}: {e}"
        per_file.append(entry)
    summary = {
        "algorithm": args.alg,
        "files": len(files),
        "pass": passes,
        "fail": fails,
        "errors": errors,
        "repairs": repairs,
        "total_time_s": round(time.perf_counter() - t_total, 6),
        "per_file": per_file,
    }
    _emit(summary)
    return EXIT_OK if fails == 0 and errors == 0 else EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
