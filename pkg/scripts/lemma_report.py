"""Run the exhaustive word-pair checkers at several base letters and report
how many cases conform.

    python scripts/lemma_report.py --bases 2 3 5
"""
import argparse

from qtkostka.pairs import verify_lemma17, verify_lemma21


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bases", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--verbose", action="store_true")
    args = parser.parse_args()

    all_ok = True
    for base in args.bases:
        reports = [verify_lemma17(base), *verify_lemma21(base).values()]
        for report in reports:
            if args.verbose:
                print("\n".join(report.lines()))
            slots = f" ({report.slots_enumerated} slots)" if report.slots_enumerated != report.total else ""
            print(f"base {base}: {report.summary()}{slots}")
            all_ok &= report.passed
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
