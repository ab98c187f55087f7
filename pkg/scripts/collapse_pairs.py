"""Enumerate D-type pairs of standard tableaux, raise both members with the
same operator, and count how often the shape-matched results are again
D-type pairs (up to the single-letter cocharge shift).

    python scripts/collapse_pairs.py --max-degree 6
"""
import argparse
from collections import Counter

from qtkostka.pairs import d_pair_types, d_pairs_of_degree, raised_d_pairs
from qtkostka.tableaux import cocharge


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-degree", type=int, default=6)
    args = parser.parse_args()

    for n in range(4, args.max_degree + 1):
        stats = Counter()
        for t1, t2, _, _ in d_pairs_of_degree(n):
            stats["pairs"] += 1
            stats["offset ok"] += cocharge(t1.word) == cocharge(t2.word) + 1
            for eps in (0, 1):
                for s1, s2 in raised_d_pairs(t1, t2, eps):
                    stats["raised"] += 1
                    stats["raised D-type"] += bool(d_pair_types(s1, s2))
        print(f"degree {n}: " + ", ".join(f"{k}={v}" for k, v in stats.items()))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
