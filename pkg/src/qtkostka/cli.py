"""Command-line front end.

Exit statuses: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence, TextIO

from .basis_change import xtq_to_xt
from .kostka import CONVENTIONS, KostkaTable, kostka_table, verify_suite
from .operators import lower0, lower1, raise0, raise1
from .pairs import verify_lemma17, verify_lemma21
from .partitions import format_partition, parse_partition
from .scalar_ring import format_qt
from .schur import hall_littlewood_h, macdonald_j
from .tableaux import Tableau, UndefinedAction, UnsupportedEvaluation, standardize

MAX_VERIFY_DEGREE = 10


class UsageError(Exception):
    pass


def _two_part(text: str):
    try:
        lam = parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if len(lam) > 2:
        raise argparse.ArgumentTypeError(f"{text!r} has more than two parts")
    return lam


def _tableau(text: str) -> Tableau:
    try:
        return Tableau.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad tableau {text!r}: {exc}") from None


def emit_json(table: KostkaTable) -> str:
    lam = list(table.lam) + [0] * (2 - len(table.lam))
    entries = [
        {"mu": list(mu), "poly": format_qt(c), "terms": [list(x) for x in c.sorted_terms()]}
        for mu, c in table.items()
    ]
    doc = {"lambda": lam, "convention": table.convention, "entries": entries}
    return json.dumps(doc, separators=(",", ":"))


def emit_text(table: KostkaTable) -> str:
    lines = [f"lambda={format_partition(table.lam)} convention={table.convention}"]
    lines += [f"mu={format_partition(mu)} poly={format_qt(c)}" for mu, c in table.items()]
    return "\n".join(lines)


def _cmd_kostka(args, out: TextIO) -> int:
    table = kostka_table(args.lam).relabel(args.convention)
    out.write((emit_json(table) if args.format == "json" else emit_text(table)) + "\n")
    return 0


def _cmd_jpoly(args, out: TextIO) -> int:
    if args.route == "tableaux":
        vec = kostka_table(args.lam).as_xt_vector()
        if args.basis == "xtq":
            from .basis_change import to_two_row

            vec = to_two_row(vec)
    else:
        vec = macdonald_j(args.lam)
        if args.basis == "xt":
            vec = xtq_to_xt(vec)
    out.write(vec.format(header=True) + "\n")
    return 0


def _cmd_hl(args, out: TextIO) -> int:
    out.write(hall_littlewood_h(args.lam).format(header=True) + "\n")
    return 0


def _cmd_trace(args, out: TextIO) -> int:
    t: Tableau = args.tableau
    lines = [str(t)]
    try:
        if args.op == "vs":
            states: list = []
            standardize(t, trace=states)
            lines += [str(s) for s in states]
        elif args.op in ("raise0", "raise1"):
            if args.op == "raise0":
                chains: list = []
                raise0(t, chains)
            else:
                chains = []
                raise1(t, chains)
                chains = [[s.transpose() for s in chain] for chain in chains]
            for k, chain in enumerate(chains, 1):
                lines.append(f"# term {k}")
                lines += [str(s) for s in chain]
        else:
            steps: list = []
            if args.op == "lower0":
                lower0(t, steps)
            else:
                lower1(t, steps, route=args.route)
            lines += [str(s) for s in steps]
    except (UndefinedAction, UnsupportedEvaluation, ValueError) as exc:
        raise UsageError(str(exc)) from None
    out.write("\n".join(lines) + "\n")
    return 0


def _cmd_verify(args, out: TextIO) -> int:
    if args.max_degree > MAX_VERIFY_DEGREE:
        raise UsageError(f"--max-degree is limited to {MAX_VERIFY_DEGREE}")
    report = verify_suite(args.max_degree)
    for line in report.lines():
        out.write(line + "\n")
    bad = len(report.failures())
    out.write(f"{len(report.results) - bad}/{len(report.results)} checks passed\n")
    return 0 if report.passed else 1


def _cmd_lemmas(args, out: TextIO) -> int:
    reports = [verify_lemma17(args.base)] + list(verify_lemma21(args.base).values())
    for report in reports:
        if args.verbose:
            for line in report.lines():
                out.write(line + "\n")
        out.write(f"{'PASS' if report.passed else 'FAIL'} {report.summary()}\n")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtkostka", description="q,t-Kostka polynomials for two-part partitions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kostka", help="print the q,t-Kostka table of a two-part partition")
    p.add_argument("--lambda", dest="lam", type=_two_part, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--convention", choices=CONVENTIONS, default="paper")
    p.set_defaults(func=_cmd_kostka)

    p = sub.add_parser("jpoly", help="print J_lambda in modified Schur coordinates")
    p.add_argument("--lambda", dest="lam", type=_two_part, required=True)
    p.add_argument("--basis", choices=("xt", "xtq"), required=True)
    p.add_argument("--route", choices=("tableaux", "operators"), default="tableaux")
    p.set_defaults(func=_cmd_jpoly)

    p = sub.add_parser("hl", help="print the Hall-Littlewood polynomial H_lambda")
    p.add_argument("--lambda", dest="lam", type=_two_part, required=True)
    p.set_defaults(func=_cmd_hl)

    p = sub.add_parser("trace", help="print every intermediate tableau of an operator")
    p.add_argument("--op", choices=("raise0", "raise1", "lower0", "lower1", "vs"), required=True)
    p.add_argument("--tableau", type=_tableau, required=True)
    p.add_argument("--route", choices=("transpose", "sigma_bar"), default="transpose",
                   help="lower1 only: conjugate lower0 by transposition or use sigma-bar directly")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("verify", help="run the positivity, counting, oracle, route and symmetry checks")
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lemmas", help="run the exhaustive word-pair checkers")
    p.add_argument("--base", type=int, default=2)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_lemmas)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"qtkostka {args.command}: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
