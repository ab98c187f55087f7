"""q,t-Kostka tables from the domino statistic on standard tableaux, the
Kostka-Foulkes cocharge oracle, and the cross-route verification suite.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .basis_change import ResidueError, to_two_row
from .operators import domino_vector
from .partitions import (
    Partition, conjugate, format_partition, make_partition, n_stat, partitions, syt_count,
    two_part_partitions,
)
from .scalar_ring import ZERO, LaurentQT
from .schur import SchurVector, macdonald_j, prefix_weight, shape_order
from .tableaux import Tableau, cocharge, enumerate_ssyt, standardize, syt_of_shape

CONVENTIONS = ("paper", "conjugate")


@dataclass(frozen=True)
class SuiteConfig:
    max_degree: int = 8
    bound: int = 10
    checks: tuple[str, ...] = ("P", "C", "H", "R", "S")


def _split(lam: Partition) -> tuple[int, int]:
    lam = make_partition(lam)
    if len(lam) > 2:
        raise ValueError(f"{lam} has more than two parts")
    return (lam[0] if lam else 0), (lam[1] if len(lam) > 1 else 0)


def stat(t: Tableau, lam: Partition) -> LaurentQT:
    """q^cocharge(T) q^{(1-d)|dv|_l + 2 n(dv)_l} t^{l - |dv|_l}, l = lam_2."""
    l1, l2 = _split(lam)
    d = l1 + l2
    if len(t) != d:
        raise ValueError(f"tableau of size {len(t)} does not match |lambda| = {d}")
    dv = domino_vector(t)
    size, weight = prefix_weight(dv, l2)
    return LaurentQT.monomial(1, cocharge(t.word) + (1 - d) * size + 2 * weight, l2 - size)


@dataclass(frozen=True)
class KostkaTable:
    lam: Partition
    entries: dict[Partition, LaurentQT]
    convention: str = "paper"

    def __getitem__(self, mu) -> LaurentQT:
        return self.entries.get(tuple(mu), ZERO)

    def shapes(self) -> list[Partition]:
        return sorted(self.entries, key=shape_order)

    def items(self) -> list[tuple[Partition, LaurentQT]]:
        return [(mu, self.entries[mu]) for mu in self.shapes()]

    def relabel(self, convention: str) -> "KostkaTable":
        """Report entries under mu -> mu' (a relabeling, not a recomputation)."""
        if convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {convention!r}")
        if convention == self.convention:
            return self
        return KostkaTable(self.lam, {conjugate(mu): c for mu, c in self.entries.items()}, convention)

    def as_xt_vector(self) -> SchurVector:
        if self.convention != "paper":
            raise ValueError("only tables in the native labelling assemble into J")
        return SchurVector(self.entries, "xt")


def kostka_table(lam: Partition) -> KostkaTable:
    lam = make_partition(lam)
    _split(lam)
    d = sum(lam)
    entries = {}
    for mu in partitions(d):
        acc = ZERO
        for t in syt_of_shape(mu):
            acc = acc + stat(t, lam)
        entries[mu] = acc
    return KostkaTable(lam, entries)


def kostka_foulkes_oracle(mu: Partition, lam: Partition) -> LaurentQT:
    """Sum of q^cocharge over SSYT of shape mu and evaluation lam'."""
    mu, lam = make_partition(mu), make_partition(lam)
    if sum(mu) != sum(lam):
        raise ValueError("mu and lambda must have the same size")
    acc = ZERO
    for t in enumerate_ssyt(conjugate(lam)):
        if t.shape == mu:
            acc = acc + LaurentQT.monomial(1, cocharge(standardize(t).word))
    return acc


def j_from_tableaux(lam: Partition) -> SchurVector:
    """J_lam in S[X^tq] coordinates, assembled from the Kostka table."""
    return to_two_row(kostka_table(lam).as_xt_vector())


# ---------------------------------------------------------------------------
# verification suite


@dataclass
class CheckResult:
    lam: Partition
    check: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f" {self.detail}" if self.detail else ""
        return f"{status} {self.check} lambda={format_partition(self.lam)}{tail}"


@dataclass
class SuiteReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.ok]

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]


def _fmt_mu(mu: Partition) -> str:
    return format_partition(mu)


def check_positivity(table: KostkaTable) -> list[str]:
    return [f"mu={_fmt_mu(mu)} entry={c}" for mu, c in table.items()
            if not (c.is_polynomial() and c.has_nonnegative_coefficients())]


def check_counting(table: KostkaTable) -> list[str]:
    bad = []
    for mu, c in table.items():
        value = c.substitute(q=1, t=1).constant()
        if value != syt_count(mu):
            bad.append(f"mu={_fmt_mu(mu)} value={value} expected={syt_count(mu)}")
    return bad


def check_hall_littlewood(table: KostkaTable) -> list[str]:
    k = n_stat(table.lam)
    bad = []
    for mu, c in table.items():
        got, want = c.coeff_t(k), kostka_foulkes_oracle(mu, table.lam)
        if got != want:
            bad.append(f"mu={_fmt_mu(mu)} got={got} oracle={want}")
    return bad


def check_routes(table: KostkaTable) -> list[str]:
    try:
        got = to_two_row(table.as_xt_vector())
    except ResidueError as exc:
        return [str(exc)]
    want = macdonald_j(table.lam)
    if got == want:
        return []
    keys = sorted(set(got.coords) | set(want.coords), key=shape_order)
    return [f"mu={_fmt_mu(mu)} tableaux={got[mu]} operators={want[mu]}" for mu in keys if got[mu] != want[mu]]


def check_symmetry(table: KostkaTable) -> list[str]:
    """K_mu(q,t) = q^{n(lam')} t^{n(lam)} K_{mu'}(1/q, 1/t)."""
    lam = table.lam
    a, b = n_stat(conjugate(lam)), n_stat(lam)
    bad = []
    for mu, c in table.items():
        mirror = table[conjugate(mu)].substitute(q="1/q", t="1/t").shift(a, b)
        if c != mirror:
            bad.append(f"mu={_fmt_mu(mu)} entry={c} mirrored={mirror}")
    return bad


CHECKS = {
    "P": check_positivity,
    "C": check_counting,
    "H": check_hall_littlewood,
    "R": check_routes,
    "S": check_symmetry,
}


def verify_suite(max_degree: int = 8, config: SuiteConfig | None = None) -> SuiteReport:
    config = config or SuiteConfig(max_degree=max_degree)
    if max_degree > config.bound:
        raise ValueError(f"max degree {max_degree} exceeds the configured bound {config.bound}")
    report = SuiteReport()
    for d in range(max_degree + 1):
        for lam in two_part_partitions(d):
            table = kostka_table(lam)
            for name in config.checks:
                problems = CHECKS[name](table)
                report.results.append(CheckResult(lam, name, not problems, "; ".join(problems)))
    return report

