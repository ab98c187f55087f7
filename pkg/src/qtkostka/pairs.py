"""Pairs of words: the C and D families, insertion, the pair operators
Sigma_i and Omega_i, and exhaustive checkers for the two computer-verified
statements about them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .operators import lower0, lower1, raise_op
from .tableaux import Tableau, Word, insert, relabel_pair, restrict, sigma, sigma_bar, swap_letters

WordPair = tuple[Word, Word]

# letters as offsets from the base letter a
C_FAMILY = {
    1: ((0, 0, 1, 1), (1, 0, 0, 1)),
    2: ((0, 1, 0, 1), (0, 1, 0, 1)),
    3: ((0, 1, 1, 0), (0, 0, 1, 1)),
    4: ((1, 0, 0, 1), (1, 1, 0, 0)),
    5: ((1, 0, 1, 0), (1, 0, 1, 0)),
    6: ((1, 1, 0, 0), (0, 1, 1, 0)),
}
D_FAMILY = {
    1: ((1, 0, 2, 3), (2, 0, 1, 3)),
    2: ((3, 1, 0, 2), (3, 2, 0, 1)),
    3: ((0, 2, 3, 1), (0, 1, 3, 2)),
    4: ((2, 3, 1, 0), (1, 3, 2, 0)),
}
FAMILIES = {"C": (C_FAMILY, 2), "D": (D_FAMILY, 4)}


def family_pair(family: str, j: int, a: int) -> WordPair:
    table, _ = FAMILIES[family]
    w1, w2 = table[j]
    return tuple(a + x for x in w1), tuple(a + x for x in w2)


def insert_pair(p: WordPair, k: int, a: int) -> WordPair:
    return insert(p[0], k, a), insert(p[1], k, a)


def decorate(p: WordPair, insertions) -> WordPair:
    """Apply I_{k_1}^{(a_1)} ... I_{k_r}^{(a_r)} to p, the last listed acting first."""
    for k, a in reversed(list(insertions)):
        p = insert_pair(p, k, a)
    return p


def pair_sigma(p: WordPair, i: int) -> WordPair:
    """Sigma_i: (sigmabar_i sigma_{i+1} w1, sigma_i sigmabar_{i+1} w2)."""
    w1, w2 = p
    return sigma_bar(sigma(w1, i + 1), i), sigma(sigma_bar(w2, i + 1), i)


def pair_omega(p: WordPair, i: int) -> WordPair:
    """Omega_i: sigma_i sigma_{i+1} sigma_{i+2} sigma_{i+3} on both words."""
    out = []
    for w in p:
        for j in (i + 3, i + 2, i + 1, i):
            w = sigma(w, j)
        out.append(w)
    return tuple(out)


def relabel_both(p: WordPair, source, target) -> WordPair:
    return relabel_pair(p[0], source, target), relabel_pair(p[1], source, target)


@dataclass(frozen=True)
class PairType:
    family: str
    j: int
    a: int
    insertions: tuple[tuple[int, int], ...]  # (final position, letter), positions ascending

    @property
    def inserted_letters(self) -> frozenset[int]:
        return frozenset(letter for _, letter in self.insertions)

    def __str__(self) -> str:
        deco = "".join(f"I_{k}^({a})" for k, a in reversed(self.insertions))
        return f"{deco}{self.family}_{self.j}({self.a})"


def pair_types(p: WordPair) -> list[PairType]:
    """Every way to read p as a family pair decorated by common insertions."""
    w1, w2 = p
    if len(w1) != len(w2):
        return []
    found = []
    for family, (table, width) in FAMILIES.items():
        for a in sorted(set(w1)):
            block = set(range(a, a + width))
            mask = [x in block for x in w1]
            if mask != [x in block for x in w2]:
                continue
            if any(not m and x != y for m, x, y in zip(mask, w1, w2)):
                continue
            r1 = tuple(x - a for x in restrict(w1, block))
            r2 = tuple(x - a for x in restrict(w2, block))
            for j, template in table.items():
                if (r1, r2) == template:
                    ins = tuple((pos + 1, x) for pos, (m, x) in enumerate(zip(mask, w1)) if not m)
                    found.append(PairType(family, j, a, ins))
    return found


def classify_pair(p: WordPair) -> PairType | None:
    types = pair_types(p)
    return types[0] if types else None


@dataclass
class LemmaCase:
    label: str
    source: WordPair
    result: WordPair | None
    matched: PairType | None
    ok: bool
    error: str | None = None


@dataclass
class LemmaReport:
    name: str
    cases: list[LemmaCase] = field(default_factory=list)
    slots_enumerated: int = 0

    @property
    def conformant(self) -> int:
        return sum(c.ok for c in self.cases)

    @property
    def total(self) -> int:
        return len(self.cases)

    @property
    def passed(self) -> bool:
        return self.conformant == self.total

    def lines(self) -> list[str]:
        out = []
        for c in self.cases:
            res = "".join(map(str, c.result[0])) + "," + "".join(map(str, c.result[1])) if c.result else "-"
            match = str(c.matched) if c.matched else (c.error or "no match")
            out.append(f"{'PASS' if c.ok else 'FAIL'} {self.name} {c.label} -> ({res}) = {match}")
        return out

    def summary(self) -> str:
        return f"{self.name}: {self.conformant}/{self.total} conformant"


def _word_str(w: Word) -> str:
    return "".join(map(str, w))


def verify_lemma17(i: int = 2) -> LemmaReport:
    """Sigma_i(I_k^(i+2) C_j(i)) must be I_k'^(i) C_j'(i+1), for k <= 5, j <= 6."""
    report = LemmaReport("sigma-insertion")
    for j, k in product(sorted(C_FAMILY), range(1, 6)):
        src = insert_pair(family_pair("C", j, i), k, i + 2)
        label = f"I_{k}^({i + 2})C_{j}({i})=({_word_str(src[0])},{_word_str(src[1])})"
        try:
            out = pair_sigma(src, i)
        except ValueError as exc:
            report.cases.append(LemmaCase(label, src, None, None, False, str(exc)))
            continue
        match = next((t for t in pair_types(out)
                      if t.family == "C" and t.a == i + 1 and t.inserted_letters == {i}
                      and len(t.insertions) == 1), None)
        report.cases.append(LemmaCase(label, src, out, match, match is not None))
    report.slots_enumerated = len(report.cases)
    return report


def verify_lemma21(i: int = 2) -> dict[str, LemmaReport]:
    """Omega_i on D_j(i) with two copies of i+4 inserted, followed by either
    relabeling of the doubled letter i, must land on a decorated D pair based
    at i+1 (extra letters i-1, i) or at i (extra letters i-1, i+4).

    All 4 * 6 * 5 slot choices are enumerated; coinciding double insertions
    collapse to 60 distinct pairs per relabeling.
    """
    relabelings = {
        f"r({i}{i}->{i},{i - 1})": ((i, i), (i, i - 1)),
        f"r({i}{i}->{i - 1},{i})": ((i, i), (i - 1, i)),
    }
    sources: dict[WordPair, str] = {}
    slots = 0
    for j, k2, k1 in product(sorted(D_FAMILY), range(1, 6), range(1, 7)):
        slots += 1
        src = insert_pair(insert_pair(family_pair("D", j, i), k2, i + 4), k1, i + 4)
        sources.setdefault(src, f"I_{k1}^({i + 4})I_{k2}^({i + 4})D_{j}({i})")
    targets = [(i + 1, {i - 1, i}), (i, {i - 1, i + 4})]
    reports = {}
    for name, (source, target) in relabelings.items():
        report = LemmaReport(f"omega-relabel {name}", slots_enumerated=slots)
        for src, label in sources.items():
            label = f"{label}=({_word_str(src[0])},{_word_str(src[1])})"
            try:
                out = relabel_both(pair_omega(src, i), source, target)
            except ValueError as exc:
                report.cases.append(LemmaCase(label, src, None, None, False, str(exc)))
                continue
            match = next((t for t in pair_types(out) if t.family == "D"
                          and any(t.a == a and t.inserted_letters == extra for a, extra in targets)
                          and len(t.insertions) == 2), None)
            report.cases.append(LemmaCase(label, src, out, match, match is not None))
        reports[name] = report
    return reports


# ---------------------------------------------------------------------------
# D-type pairs of tableaux


def d_pair_types(t1: Tableau, t2: Tableau) -> list[tuple[int, int]]:
    """(j, a) such that (t1, t2) is a D_j(a) pair: same shape, t1 = t2 with
    a+1, a+2 exchanged, and the restrictions to a..a+3 form D_j(a)."""
    if t1.shape != t2.shape:
        return []
    out = []
    for t in pair_types((t1.word, t2.word)):
        if t.family == "D" and t1.word == swap_letters(t2.word, t.a + 1, t.a + 2):
            out.append((t.j, t.a))
    return out


def d_pairs_of_degree(n: int):
    """All D-type pairs of standard tableaux of degree n."""
    from .tableaux import syt_of_degree

    for t1 in syt_of_degree(n):
        for a in range(1, n - 2):
            t2 = Tableau(t1.shape, swap_letters(t1.word, a + 1, a + 2))
            if not t2.is_standard():
                continue
            for j, b in d_pair_types(t1, t2):
                if b == a:
                    yield t1, t2, j, a


def raised_d_pairs(t1: Tableau, t2: Tableau, eps: int):
    """Outputs of the same raising operator on both tableaux, matched by shape."""
    op = raise_op(eps)
    by_shape = {}
    for s in op(t2):
        by_shape.setdefault(s.shape, []).append(s)
    for s in op(t1):
        for s2 in by_shape.get(s.shape, []):
            yield s, s2


def collapse_pair(t1: Tableau, t2: Tableau) -> tuple[Tableau, Tableau]:
    """(lower1 lower0 t1, lower0 lower1 t2)."""
    return lower1(lower0(t1)), lower0(lower1(t2))
