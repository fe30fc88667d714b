"""Command line interface: ``qls gen|verify|card|decompose|search|fmt|show``.

Exit codes: 0 success (or valid), 1 verification failed, 2 usage or input
error, 3 search budget exhausted before any square was found.
"""
from __future__ import annotations

import argparse
import sys

from . import io
from .constructions import FIXTURES
from .errors import QLSError
from .search import SearchConfig, SearchStats, dictionary_from_pairs, enumerate_indices
from .square import cardinality, line_decomposition, verify

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

NOTES = {
    "phi13": "order-6 QLS of cardinality 13 (direct sum C^4 + C^2)",
    "phi15": "order-6 QLS of cardinality 15 (five coordinate-plane Hadamard pairs)",
    "phi17": "order-6 QLS of cardinality 17 (seven coordinate-plane Hadamard pairs)",
}


def _pairs(text: str) -> list[tuple[int, int]]:
    if not text.strip():
        return []
    out = []
    for tok in text.split(","):
        try:
            i, j = tok.strip().split("-")
            out.append((int(i), int(j)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad pair {tok!r}, expected I-J") from None
    return out


def _ints(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index list {text!r}") from None


def _range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected LO:HI") from None


def cmd_gen(args) -> int:
    q = FIXTURES[args.name]()
    text = io.dumps(q, name=args.name, note=NOTES[args.name])
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    rep = verify(io.load(args.file))
    print(rep.summary())
    return EXIT_OK if rep.valid else EXIT_INVALID


def cmd_card(args) -> int:
    q = io.load(args.file)
    rep = cardinality(q)
    print(f"cardinality {rep.cardinality}")
    names = io.pretty(q).split("\n")
    tokens = [row.split() for row in names]
    for k, cls in enumerate(rep.classes):
        i, j = cls.cells[0]
        cells = " ".join(f"({a},{b})" for a, b in cls.cells)
        print(f"class {k:>2} {tokens[i][j]:>8}  {len(cls.cells)} cells: {cells}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    q = io.load(args.file)
    for kind, label in (("row", "R"), ("col", "C")):
        print("row | coordinate decomposition" if kind == "row" else "column | coordinate decomposition")
        for k, idx, vs in q.lines():
            if k == kind:
                print(f"{label}{idx + 1} | {line_decomposition(vs)}")
    return EXIT_OK


def cmd_search(args) -> int:
    d = dictionary_from_pairs(args.order, args.pairs, args.singles)
    cfg = SearchConfig(card_range=args.card, max_nodes=args.max_nodes,
                       max_results=args.max_results, symmetry=args.symmetry)
    stats = SearchStats()
    for flat in enumerate_indices(d, cfg, stats):
        q = d.square(flat)
        print(io.dumps(q, name=f"search-{stats.found}", compact=True), flush=True)
    print(stats.line(), file=sys.stderr)
    if stats.exhausted and stats.found == 0:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_fmt(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        text = fh.read()
    q = io.loads(text)
    meta = io.load_meta(text)
    out = io.dumps(q, name=meta.get("name"), note=meta.get("note"))
    if out != text:
        with open(args.file, "w", encoding="utf-8") as fh:
            fh.write(out)
    return EXIT_OK


def cmd_show(args) -> int:
    print(io.pretty(io.load(args.file)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qls", description="Exact quantum Latin square toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gen", help="emit a fixture document")
    s.add_argument("name", choices=sorted(FIXTURES))
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", help="check every row and column")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("card", help="cardinality and class inventory")
    s.add_argument("file")
    s.set_defaults(func=cmd_card)

    s = sub.add_parser("decompose", help="coordinate decomposition of every line")
    s.add_argument("file")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("search", help="enumerate squares over a pair/basis dictionary")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--pairs", type=_pairs, default=[], help='e.g. "0-1,0-4,1-2"')
    s.add_argument("--singles", type=_ints, default=[], help='e.g. "0,1,3"')
    s.add_argument("--card", type=_range, default=None, metavar="LO:HI")
    s.add_argument("--max-nodes", type=int, default=None)
    s.add_argument("--max-results", type=int, default=None)
    s.add_argument("--symmetry", action="store_true",
                   help="only emit squares minimal under row/column permutations")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("fmt", help="canonicalize a document in place")
    s.add_argument("file")
    s.set_defaults(func=cmd_fmt)

    s = sub.add_parser("show", help="print the square with symbolic names")
    s.add_argument("file")
    s.set_defaults(func=cmd_show)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (QLSError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
