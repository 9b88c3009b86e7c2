"""Command-line front end.

Commands: analyze, jacobi, isomorphic, sweep, cross-section.  Exit codes:
0 success, 2 input or parse error, 3 violated precondition (mode, caps,
center point, unsupported shapes).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cross_sections as cs
from .errors import (CapExceededError, DimensionMismatchError,
                     DuplicateTripleError, IndexOutOfRangeError, ModeError,
                     OrderViolationError, OutsideDomainError, StratumError,
                     UnsupportedShapeError, WNotQuadrupleDerivedError)
from .report import (build_analysis_report, build_cross_section_report,
                     build_isomorphism_report, render_text, SWEEP_SCHEMA)
from .sweep import sweep_counts, sweep_strata, workers_from_env
from .triples import (IndexSet, StructureVector, parse_index_set,
                      structure_vector, validate_index_set)

INPUT_ERRORS = (IndexOutOfRangeError, OrderViolationError,
                DuplicateTripleError, DimensionMismatchError,
                json.JSONDecodeError, ValueError, KeyError, OSError)
PRECONDITION_ERRORS = (ModeError, CapExceededError, OutsideDomainError,
                       UnsupportedShapeError, WNotQuadrupleDerivedError)

OBSTRUCTION_FILTERS = ("empty", "automatic", "nontrivial")
CLASSIFICATION_FILTERS = ("unobstructed", "finite-1q2", "finite-2q2-disjoint",
                          "onedim-2q2-shared", "onedim-1q3",
                          "onedim-1q3+1q2-shared", "unclassified")


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def load_input(path: str) -> tuple[IndexSet, dict[str, StructureVector]]:
    """Index set plus named structure vectors from a text or JSON file."""
    text = _read_source(path).strip()
    if text.startswith("{"):
        doc = json.loads(text)
        lam = validate_index_set([tuple(t) for t in doc["triples"]],
                                 int(doc["n"]), doc.get("mode", "theta"))
        vectors = {name: structure_vector(lam, vals)
                   for name, vals in doc.get("vectors", {}).items()}
        return lam, vectors
    vector_lines: dict[str, str] = {}
    set_lines = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if sep and head.strip().isidentifier() and not head.strip() == "mode":
            vector_lines[head.strip()] = tail.strip()
        else:
            set_lines.append(line)
    lam = parse_index_set(" ".join(set_lines))
    vectors = {}
    for name, body in vector_lines.items():
        vals = [v for chunk in body.split(",") for v in chunk.split()]
        vectors[name] = structure_vector(lam, vals)
    return lam, vectors


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "structured":
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(render_text(doc))


def _spec_from_args(lam: IndexSet, args) -> cs.CrossSectionSpec:
    a0 = None
    if args.center:
        a0 = [Fraction(x) for chunk in args.center.split(",")
              for x in chunk.split()]
    return cs.cross_section(lam, a0=a0, p=Fraction(args.exponent))


def cmd_analyze(args) -> int:
    lam, _ = load_input(args.input)
    doc = build_analysis_report(lam, with_cross_section=args.cross_section)
    _emit(doc, args.format)
    return 0


def cmd_jacobi(args) -> int:
    from .jacobi import format_system, jacobi_system, obstruction_status

    lam, _ = load_input(args.input)
    sys_ = jacobi_system(lam)
    doc = {
        "schema": "jacobi-report/1",
        "n": lam.n, "mode": lam.mode,
        "triples": [list(t) for t in lam.triples],
        "obstruction": obstruction_status(lam),
        "equations": format_system(sys_),
    }
    _emit(doc, args.format)
    return 0


def cmd_isomorphic(args) -> int:
    lam, vectors = load_input(args.input)
    if "a" not in vectors or "b" not in vectors:
        raise DimensionMismatchError(
            "isomorphic needs two labelled vectors 'a:' and 'b:'")
    doc = build_isomorphism_report(vectors["a"], vectors["b"])
    _emit(doc, args.format)
    return 0


def cmd_cross_section(args) -> int:
    lam, _ = load_input(args.input)
    spec = _spec_from_args(lam, args)
    doc = build_cross_section_report(spec, c=Fraction(args.c))
    _emit(doc, args.format)
    return 0


def cmd_sweep(args) -> int:
    obstruction = classification = None
    if args.filter:
        name = args.filter.lower()
        if name in OBSTRUCTION_FILTERS:
            obstruction = name
        elif name in CLASSIFICATION_FILTERS:
            classification = name
        else:
            raise ValueError(f"unknown filter {args.filter!r}")
    stream = sweep_strata(
        args.n, max_size=args.max_size, size=args.size, cap=args.cap,
        obstruction=obstruction, classification=classification,
        discard_obstructed=args.discard_obstructed, workers=args.workers)
    if args.format == "structured":
        entries = []
        collected = []
        for s in stream:
            collected.append(s)
            entries.append({
                "triples": [list(t) for t in s.triples],
                "size": s.size,
                "obstruction": s.obstruction,
                "classification": s.classification,
                "multiplicities": list(s.multiplicities),
            })
        counts = sweep_counts(collected)
        doc = {
            "schema": SWEEP_SCHEMA,
            "n": args.n, "size": args.size, "max_size": args.max_size,
            "filter": args.filter, "discard_obstructed": args.discard_obstructed,
            "strata": entries,
            "counts": {
                "total": counts["total"],
                "obstruction": dict(sorted(counts["obstruction"].items())),
                "classification": dict(sorted(counts["classification"].items())),
            },
        }
        print(json.dumps(doc, indent=2))
        return 0
    counts = {"total": 0, "obstruction": {}, "classification": {}}
    for s in stream:
        counts["total"] += 1
        counts["obstruction"][s.obstruction] = \
            counts["obstruction"].get(s.obstruction, 0) + 1
        if s.classification is not None:
            counts["classification"][s.classification] = \
                counts["classification"].get(s.classification, 0) + 1
        triples = " ".join(str(t) for t in s.triples) if s.triples else "(empty)"
        cls = s.classification if s.classification is not None else "-"
        print(f"size={s.size} {triples} obstruction={s.obstruction} "
              f"classification={cls}")
    print(f"# total: {counts['total']}")
    for key in sorted(counts["obstruction"]):
        print(f"# obstruction {key}: {counts['obstruction'][key]}")
    for key in sorted(counts["classification"]):
        print(f"# classification {key}: {counts['classification'][key]}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liestrata",
        description="Exact analysis of structure-constant strata")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "structured"),
                       default="text")

    p = sub.add_parser("analyze", help="full stratum report")
    p.add_argument("input", help="index-set file, or - for stdin")
    p.add_argument("--cross-section", action="store_true",
                   help="append a default cross-section section")
    add_format(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("jacobi", help="emit the Jacobi system")
    p.add_argument("input")
    add_format(p)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("isomorphic",
                       help="test two structure vectors for isomorphism")
    p.add_argument("input", help="file with the index set and vectors a:, b:")
    add_format(p)
    p.set_defaults(func=cmd_isomorphic)

    p = sub.add_parser("cross-section",
                       help="cross-section report with branch solutions")
    p.add_argument("input")
    p.add_argument("--center", default=None,
                   help="comma-separated positive rationals (default all ones)")
    p.add_argument("--exponent", default="1", help="display exponent p")
    p.add_argument("--c", default="1", help="scale constant for the map F");
    add_format(p)
    p.set_defaults(func=cmd_cross_section)

    p = sub.add_parser("sweep", help="enumerate strata of Theta_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--size", type=int, default=None, help="exact size")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--cap", type=int, default=8)
    p.add_argument("--filter", default=None,
                   help="obstruction status or classification label")
    p.add_argument("--discard-obstructed", action="store_true")
    p.add_argument("--workers", type=int, default=workers_from_env())
    add_format(p)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except StratumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
