"""Explore squares over coordinate-pair dictionaries and tally their cardinalities.

    python scripts/search_pair_dictionaries.py --pairs 0-1,0-4,1-2,2-3,2-4 --singles 0,1,3,4,5 --max-nodes 2000000

Every emitted square is re-checked with the exact verifier. Counts are only over
the part of the tree visited within the node budget.
"""
import argparse
from collections import Counter

from qlsquares.cli import _ints, _pairs, _range
from qlsquares.search import SearchConfig, SearchStats, dictionary_from_pairs, enumerate_indices
from qlsquares.square import cardinality, verify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=6)
    ap.add_argument("--pairs", type=_pairs, default=_pairs("0-1,0-3,0-4,1-2,1-5,2-3,2-4"))
    ap.add_argument("--singles", type=_ints, default=_ints("3,4,5"))
    ap.add_argument("--card", type=_range, default=None)
    ap.add_argument("--max-nodes", type=int, default=2_000_000)
    ap.add_argument("--symmetry", action="store_true")
    args = ap.parse_args()

    d = dictionary_from_pairs(args.order, args.pairs, args.singles)
    cfg = SearchConfig(card_range=args.card, max_nodes=args.max_nodes, symmetry=args.symmetry)
    stats = SearchStats()
    tally = Counter()
    for flat in enumerate_indices(d, cfg, stats):
        q = d.square(flat)
        assert verify(q).valid
        tally[cardinality(q).cardinality] += 1
    print(f"dictionary: {', '.join(d.names)}")
    print(stats.line())
    for card in sorted(tally):
        print(f"cardinality {card:>3}: {tally[card]} squares")


if __name__ == "__main__":
    main()
