"""Print q,t-Kostka tables for every two-part partition up to a degree and
run the cross-route checks on each.

    python scripts/kostka_sweep.py --max-degree 6
    python scripts/kostka_sweep.py --max-degree 8 --checks P,H --quiet
"""
import argparse
import time

from qtkostka.kostka import SuiteConfig, kostka_table, verify_suite
from qtkostka.partitions import format_partition, two_part_partitions


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-degree", type=int, default=6)
    parser.add_argument("--checks", default="P,C,H,R,S", help="comma separated subset of P,C,H,R,S")
    parser.add_argument("--quiet", action="store_true", help="skip the tables, print only the summary")
    args = parser.parse_args()

    config = SuiteConfig(max_degree=args.max_degree, checks=tuple(args.checks.split(",")))
    if not args.quiet:
        for d in range(args.max_degree + 1):
            for lam in two_part_partitions(d):
                print(f"lambda = {format_partition(lam) or '()'}")
                for mu, c in kostka_table(lam).items():
                    print(f"  {format_partition(mu) or '()':<16} {c}")

    start = time.perf_counter()
    report = verify_suite(args.max_degree, config)
    elapsed = time.perf_counter() - start
    for r in report.failures():
        print(r.line())
    ok = len(report.results) - len(report.failures())
    print(f"{ok}/{len(report.results)} checks passed in {elapsed:.2f}s")
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
