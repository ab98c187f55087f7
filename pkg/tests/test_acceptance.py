"""Acceptance criteria 1-8, one PASS/FAIL line each.

Every criterion runs on cold caches so that its timing budget is honest.
Run directly (``python tests/test_acceptance.py``) or under pytest; the
lines are also echoed in the pytest terminal summary.
"""
from __future__ import annotations

import subprocess
import sys
import time
from itertools import product
from pathlib import Path

import pytest

from qtkostka import basis_change, kostka, operators, partitions, schur, tableaux
from qtkostka.basis_change import to_two_row, varsigma
from qtkostka.kostka import check_symmetry, kostka_foulkes_oracle, kostka_table, stat
from qtkostka.operators import (
    TableauSum, domino_vector, lower0, lower1, raise0, raise1, raise_op, swap23, u_tableaux,
)
from qtkostka.pairs import (
    collapse_pair, decorate, family_pair, insert_pair, pair_omega, pair_sigma, pair_types,
    relabel_both, verify_lemma17, verify_lemma21, PairType,
)
from qtkostka.partitions import n_stat, syt_count, two_part_partitions
from qtkostka.scalar_ring import LaurentQT, Q
from qtkostka.schur import (
    b2_one, b2_zero, hall_littlewood_h, j_expansion, j_expansion_terms, macdonald_j, s, t_leading,
    u_alg,
)
from qtkostka.tableaux import (
    Tableau, add_two_strip, cocharge, relabel_pair, restrict, shift, sigma, standardize, syt_of_degree,
)

ROOT = Path(__file__).resolve().parent
GOLDEN = ROOT / "golden"
MAX_DEGREE = 8
RESULTS: dict[int, str] = {}


def clear_caches() -> None:
    for module in (partitions, tableaux, operators, schur, basis_change, kostka):
        for value in vars(module).values():
            if callable(getattr(value, "cache_clear", None)):
                value.cache_clear()


def w(text: str):
    return tuple(int(ch) for ch in text)


def golden(name: str) -> list[str]:
    return (GOLDEN / name).read_text().splitlines()


def expect(failures: list[str], label: str, ok: bool) -> None:
    if not ok:
        failures.append(label)


# ---------------------------------------------------------------------------


def golden_examples() -> list[str]:
    bad: list[str] = []
    expect(bad, "shift", shift(w("231567"), 2) == w("453789"))
    expect(bad, "sigma", sigma(w("215345"), 4) == w("215344"))
    expect(bad, "restrict", restrict(w("12334223"), {3, 4}) == w("3343"))
    expect(bad, "relabel", relabel_pair(w("121543"), (2, 3), (4, 6)) == w("141546"))
    expect(bad, "cocharge", cocharge(w("413265")) == 8)

    strips = [str(t) for t in add_two_strip(Tableau.parse("3/2/1,4"), 5)]
    expect(bad, "two-strip", strips == golden("strip_a55.txt"))

    chain: list = []
    start = Tableau.parse("4,5/2,3,5/1,2,4")
    standardize(start, trace=chain)
    expect(bad, "standardization chain", [str(start)] + [str(t) for t in chain] == golden("vs_chain.txt"))

    chains: list = []
    raise0(Tableau.parse("3/1,2,4"), chains)
    pairs = [tuple(line.split()) for line in golden("raise0_terms.txt")]
    expect(bad, "raise0 outputs", [(str(c[0]), str(c[-1])) for c in chains] == pairs)

    t = Tableau.parse("5/2,6/1,3,4")
    for route, name in (("transpose", "lower1_transpose.txt"), ("sigma_bar", "lower1_sigma_bar.txt")):
        steps: list = []
        lower1(t, steps, route=route)
        expect(bad, f"lower1 {route}", [str(t)] + [str(x) for x in steps] == golden(name))

    out = pair_sigma(insert_pair(family_pair("C", 3, 4), 2, 6), 4)
    expect(bad, "pair sigma", PairType("C", 5, 5, ((1, 4),)) in pair_types(out))

    a, b = collapse_pair(Tableau.parse("7/3,5/1,2,4,6,8"), Tableau.parse("7/2,5/1,3,4,6,8"))
    expect(bad, "collapse", a == b == Tableau.parse("2/1,3,4"))

    src = decorate(family_pair("D", 4, 5), [(4, 9), (2, 9)])
    out = pair_omega(src, 5)
    expect(bad, "omega source", src == (w("798965"), w("698975")))
    expect(bad, "omega image", out == (w("597865"), w("596875")))
    expect(bad, "relabel 55->45",
           relabel_both(out, (5, 5), (4, 5)) == decorate(family_pair("D", 4, 5), [(1, 4), (1, 9)]))
    expect(bad, "relabel 55->54",
           relabel_both(out, (5, 5), (5, 4)) == decorate(family_pair("D", 3, 5), [(6, 4), (2, 9)]))

    t = Tableau.parse("4,8/3,5,7/1,2,6")
    expect(bad, "domino vector", domino_vector(t) == (0, 1, 0, 1))
    expect(bad, "stat", stat(t, (6, 2)) == LaurentQT.monomial(1, 9, 1))
    return bad


def lemma_counts() -> list[str]:
    bad: list[str] = []
    r17 = verify_lemma17()
    expect(bad, r17.summary(), (r17.conformant, r17.total) == (30, 30))
    for report in verify_lemma21().values():
        expect(bad, report.summary(), (report.conformant, report.total) == (60, 60))
    return bad


def expansion_of_four_two() -> list[str]:
    bad: list[str] = []
    expected = {
        (0, 0, 0): (0, 2), (0, 0, 1): (0, 2), (0, 1, 0): (-3, 1), (0, 1, 1): (-3, 1),
        (1, 0, 0): (-5, 1), (1, 0, 1): (-5, 1), (1, 1, 0): (-8, 0), (1, 1, 1): (-8, 0),
    }
    terms = dict(j_expansion_terms(1, 2, 0))
    expect(bad, "eight terms", {v: LaurentQT.monomial(1, *e) for v, e in expected.items()} == terms)
    expect(bad, "equals recursion", j_expansion(1, 2, 0) == macdonald_j((4, 2)))
    return bad


def cross_routes() -> list[str]:
    bad: list[str] = []
    for d in range(MAX_DEGREE + 1):
        for lam in two_part_partitions(d):
            expect(bad, f"J{lam}", to_two_row(kostka_table(lam).as_xt_vector()) == macdonald_j(lam))
    for k in range(4):
        for v in product((0, 1), repeat=k):
            for eps in (0, 1):
                expect(bad, f"U{v},{eps}", to_two_row(varsigma(u_tableaux(v, eps))) == u_alg(v, eps))
    return bad


def positivity_and_counting() -> list[str]:
    bad: list[str] = []
    for d in range(MAX_DEGREE + 1):
        for lam in two_part_partitions(d):
            for mu, c in kostka_table(lam).items():
                expect(bad, f"positive K{mu},{lam}", c.is_polynomial() and c.has_nonnegative_coefficients())
                expect(bad, f"count K{mu},{lam}", c.substitute(q=1, t=1).constant() == syt_count(mu))
    return bad


def hall_littlewood_consistency() -> list[str]:
    bad: list[str] = []
    for d in range(MAX_DEGREE + 1):
        for lam in two_part_partitions(d):
            k = n_stat(lam)
            for mu, c in kostka_table(lam).items():
                expect(bad, f"oracle K{mu},{lam}", c.coeff_t(k) == kostka_foulkes_oracle(mu, lam))
            h = hall_littlewood_h(lam)
            expect(bad, f"sum H{lam}", h == hall_littlewood_h(lam, via="corollary"))
            expect(bad, f"leading H{lam}", h == t_leading(macdonald_j(lam), k))
    return bad


RESTRICTION_CLASSES = {
    (0, 0): {w("1234"), w("4123"), w("3412")},
    (0, 1): {w("4312"), w("3124")},
    (1, 0): {w("4213"), w("2134")},
    (1, 1): {w("4321"), w("3214"), w("2413")},
}


def operator_identities() -> list[str]:
    bad: list[str] = []
    for m in range(7):
        for n in range(m + 1):
            x = s(m, n)
            expect(bad, f"q-commutation S{m},{n}", b2_one(b2_zero(x)) == b2_zero(b2_one(x)).scale(Q))
    for n in range(MAX_DEGREE + 1):
        for t in syt_of_degree(n):
            for bit in (0, 1):
                lower = lower1 if bit else lower0
                expect(bad, f"round trip {t}", all(lower(u) == t for u in raise_op(bit)(t)))
            if n >= 2:
                bit = 0 if t.restrict((1, 2)) == (1, 2) else 1
                expect(bad, f"lower then raise {t}", t in raise_op(bit)((lower1 if bit else lower0)(t)))
                if bit:
                    expect(bad, f"lower1 routes {t}", lower1(t) == lower1(t, route="sigma_bar"))
    for n in range(7):
        for t in syt_of_degree(n):
            expect(bad, f"2-3 swap {t}", raise1(t).apply(raise0) == raise0(t).apply(raise1).map(swap23))
    for total in range(2, 5):
        for eps in (0, 1):
            for cut in range(total - 1):
                for head in product((0, 1), repeat=cut):
                    for tail in product((0, 1), repeat=total - cut - 2):
                        v10, v01 = head + (1, 0) + tail, head + (0, 1) + tail
                        expect(bad, f"q-shift {v10}",
                               varsigma(u_tableaux(v10, eps)) == varsigma(u_tableaux(v01, eps)).scale(Q))
    for n in range(4, MAX_DEGREE + 1):
        base = TableauSum(syt_of_degree(n - 4))
        produced = {bits: base.apply(raise_op(bits[1])).apply(raise_op(bits[0])) for bits in RESTRICTION_CLASSES}
        for t in syt_of_degree(n):
            word = t.restrict((1, 2, 3, 4))
            for bits, out in produced.items():
                expect(bad, f"classification {t}", (t in out) == (word in RESTRICTION_CLASSES[bits]))
    for d in range(MAX_DEGREE + 1):
        for lam in two_part_partitions(d):
            expect(bad, f"symmetry {lam}", not check_symmetry(kostka_table(lam)))
    return bad


CLI_COMMANDS = [
    ["kostka", "--lambda", "4,2"],
    ["kostka", "--lambda", "3,3", "--format", "json"],
    ["kostka", "--lambda", "5,1", "--convention", "conjugate"],
    ["jpoly", "--lambda", "3,2", "--basis", "xt"],
    ["jpoly", "--lambda", "3,2", "--basis", "xtq", "--route", "operators"],
    ["jpoly", "--lambda", "3,2", "--basis", "xt", "--route", "operators"],
    ["hl", "--lambda", "4,2"],
    ["trace", "--op", "vs", "--tableau", "4,5/2,3,5/1,2,4"],
    ["trace", "--op", "raise0", "--tableau", "3/1,2,4"],
    ["trace", "--op", "raise1", "--tableau", "3/1,2,4"],
    ["trace", "--op", "lower0", "--tableau", "3/1,2,4"],
    ["trace", "--op", "lower1", "--tableau", "5/2,6/1,3,4"],
    ["verify", "--max-degree", "4"],
    ["lemmas"],
]


def determinism() -> list[str]:
    bad: list[str] = []
    for argv in CLI_COMMANDS:
        runs = [subprocess.run([sys.executable, "-m", "qtkostka.cli", *argv], capture_output=True)
                for _ in range(2)]
        expect(bad, " ".join(argv), runs[0].stdout == runs[1].stdout and runs[0].returncode == 0
               and runs[0].stdout)
    return bad


CRITERIA = {
    1: ("golden examples", golden_examples, 1.0),
    2: ("exhaustive word-pair lemmas", lemma_counts, 1.0),
    3: ("eight-term expansion of J_(4,2)", expansion_of_four_two, 1.0),
    4: ("tableau route equals operator route", cross_routes, 60.0),
    5: ("positivity and counting", positivity_and_counting, 60.0),
    6: ("Hall-Littlewood consistency", hall_littlewood_consistency, 60.0),
    7: ("operator identity suites", operator_identities, 60.0),
    8: ("CLI determinism", determinism, 120.0),
}


def evaluate(number: int) -> tuple[bool, str]:
    name, fn, budget = CRITERIA[number]
    clear_caches()
    start = time.perf_counter()
    failures = fn()
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < budget
    detail = f"{elapsed:.2f}s (budget {budget:g}s)"
    if failures:
        detail += f"; {len(failures)} failing: " + ", ".join(failures[:5])
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {name} [{detail}]"
    RESULTS[number] = line
    print(line)
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, line = evaluate(number)
    assert ok, line


if __name__ == "__main__":
    outcomes = [evaluate(n)[0] for n in sorted(CRITERIA)]
    sys.exit(0 if all(outcomes) else 1)
