"""Words and tableaux: evaluation, restriction, shifts, relabelings,
symmetric-group actions, cocharge, transposition and standardization.

A word is a tuple of letters.  A tableau is a shape together with its
reading word, which lists rows from the top row down, each row left to
right.  Row 1 (the longest) is drawn at the bottom.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .partitions import Partition, make_partition, n_stat, partitions

Word = tuple[int, ...]


class UndefinedAction(ValueError):
    """A letter action was applied outside its domain."""


class UnsupportedEvaluation(ValueError):
    pass


# ---------------------------------------------------------------------------
# words


def evaluation(w: Sequence[int]) -> tuple[int, ...]:
    if not w:
        return ()
    top = max(w)
    counts = [0] * (top + 1)
    for a in w:
        counts[a] += 1
    return tuple(counts[1:])


def is_standard_word(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def restrict(w: Sequence[int], letters: Iterable[int]) -> Word:
    keep = set(letters)
    return tuple(a for a in w if a in keep)


def shift(w: Sequence[int], k: int) -> Word:
    out = tuple(a + k for a in w)
    if any(a < 0 for a in out):
        raise ValueError(f"shift by {k} produces a negative letter")
    return out


def relabel_pair(w: Sequence[int], source: tuple[int, int], target: tuple[int, int]) -> Word:
    """r_(ab -> cd): w restricted to {a, b} must be exactly ab; the first
    of those two letters becomes c and the second becomes d."""
    a, b = source
    positions = [i for i, x in enumerate(w) if x in (a, b)]
    if [w[i] for i in positions] != [a, b]:
        raise ValueError(f"restriction to {{{a},{b}}} is not {a}{b}")
    out = list(w)
    out[positions[0]], out[positions[1]] = target
    return tuple(out)


def remove_letter(w: Sequence[int], a: int) -> Word:
    return tuple(x for x in w if x != a)


def swap_letters(w: Sequence[int], a: int, b: int) -> Word:
    return tuple(b if x == a else a if x == b else x for x in w)


def insert(w, k: int, a: int):
    """I_k^(a): put a before position k (1-based); k = |w|+1 appends.

    A pair of words gets the same insertion in both entries.
    """
    if w and isinstance(w[0], tuple):
        return tuple(insert(x, k, a) for x in w)
    if not 1 <= k <= len(w) + 1:
        raise IndexError(f"insert position {k} out of range for length {len(w)}")
    return tuple(w[:k - 1]) + (a,) + tuple(w[k - 1:])


# patterns written with 0 for the letter i and 1 for i+1
_SIGMA = {(0, 0, 1): (0, 1, 1), (0, 1, 0): (1, 1, 0), (1, 0, 0): (1, 0, 1)}
_SIGMA.update({v: k for k, v in list(_SIGMA.items())})
_SIGMA_BAR = {(0, 0, 1): (1, 0, 1), (0, 1, 0): (0, 1, 1), (1, 0, 0): (1, 1, 0)}
_SIGMA_BAR.update({v: k for k, v in list(_SIGMA_BAR.items())})


def _pattern_action(w: Sequence[int], i: int, table) -> Word:
    positions = [p for p, x in enumerate(w) if x == i or x == i + 1]
    pattern = tuple(w[p] - i for p in positions)
    if pattern not in table:
        raise UndefinedAction(
            f"letters {i},{i + 1} form {''.join(str(i + x) for x in pattern)!r}; "
            "need evaluation (1,2) or (2,1)")
    out = list(w)
    for p, x in zip(positions, table[pattern]):
        out[p] = i + x
    return tuple(out)


def sigma(w: Sequence[int], i: int) -> Word:
    """Elementary transposition on letters i, i+1: aab<->abb, aba<->bba, baa<->bab."""
    return _pattern_action(w, i, _SIGMA)


def sigma_bar(w: Sequence[int], i: int) -> Word:
    """Reversed variant: aab<->bab, aba<->abb, baa<->bba."""
    return _pattern_action(w, i, _SIGMA_BAR)


def _cocharge_standard(w: Sequence[int]) -> int:
    pos = {a: p for p, a in enumerate(w)}
    c = total = 0
    for a in range(2, len(w) + 1):
        if pos[a] < pos[a - 1]:
            c += 1
        total += c
    return total


def cocharge(w: Sequence[int]) -> int:
    """Cocharge of a standard word; words whose evaluation has entries in
    {1, 2} are first standardized."""
    if is_standard_word(w):
        return _cocharge_standard(w)
    return _cocharge_standard(standardize_word(w))


def charge(w: Sequence[int]) -> int:
    ev = evaluation(w)
    return n_stat(tuple(sorted(ev, reverse=True))) - cocharge(w)


def _check_vs_domain(ev: Sequence[int], upto: int | None = None) -> None:
    head = ev if upto is None else ev[:upto]
    if any(e not in (1, 2) for e in head):
        raise UnsupportedEvaluation(f"standardization needs evaluation entries in {{1,2}}, got {tuple(ev)}")


def _prefix_letters(ev: Sequence[int], prefix: int) -> int:
    """Number of leading letters whose multiplicities sum to prefix."""
    total = 0
    for k, e in enumerate(ev):
        if total == prefix:
            return k
        total += e
    if total == prefix:
        return len(ev)
    raise UnsupportedEvaluation(f"prefix {prefix} does not end on a letter boundary of {tuple(ev)}")


def standardize_word(w: Sequence[int], prefix: int | None = None,
                     trace: list | None = None) -> Word:
    """VS (or VS^(prefix)): shape and cocharge preserving standardization.

    Each appended trace state is the word after one displayed step: the
    relabel-and-shift step, or one whole block sigma_1 ... sigma_{i-1}.
    """
    w = tuple(w)
    ev = evaluation(w)
    if prefix is None:
        if not w:
            return w
        _check_vs_domain(ev)
        letters = len(ev)
    else:
        letters = _prefix_letters(ev, prefix)
        _check_vs_domain(ev, letters)
    while True:
        ev = evaluation(w)
        if ev and ev[0] == 2:
            w = shift(relabel_pair(w, (1, 1), (0, 1)), 1)
            letters += 1
            if trace is not None:
                trace.append(w)
        ev = evaluation(w)
        head = ev[:letters]
        if all(e == 1 for e in head):
            return w
        i = head.index(2) + 1
        for j in range(i - 1, 0, -1):
            w = sigma(w, j)
        if trace is not None:
            trace.append(w)


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True, order=False)
class Tableau:
    shape: Partition
    word: Word

    def __post_init__(self):
        object.__setattr__(self, "shape", tuple(self.shape))
        object.__setattr__(self, "word", tuple(self.word))
        if sum(self.shape) != len(self.word):
            raise ValueError(f"shape {self.shape} does not match word of length {len(self.word)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Tableau":
        """Rows listed bottom row first."""
        rows = [tuple(r) for r in rows if len(r)]
        shape = make_partition(len(r) for r in rows)
        word = tuple(a for r in reversed(rows) for a in r)
        return cls(shape, word)

    @classmethod
    def parse(cls, text: str, shape: Partition | None = None) -> "Tableau":
        """Rows top to bottom separated by '/', letters separated by ','.

        Without any comma each character of a row is one letter, so
        ``4/355/123`` is accepted as shorthand.
        """
        text = text.strip()
        if text in ("", "()"):
            tab = cls((), ())
        else:
            rows_top_down = text.split("/")
            if "," in text:
                rows = [tuple(int(x) for x in r.split(",")) for r in rows_top_down]
            else:
                rows = [tuple(int(ch) for ch in r.strip()) for r in rows_top_down]
            tab = cls.from_rows(list(reversed(rows)))
        if shape is not None and tuple(shape) != tab.shape:
            raise ValueError(f"declared shape {tuple(shape)} does not match rows {tab.shape}")
        return tab

    @property
    def rows(self) -> tuple[Word, ...]:
        """Rows bottom row first."""
        out = []
        pos = len(self.word)
        for length in self.shape:
            out.append(self.word[pos - length:pos])
            pos -= length
        return tuple(out)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        if not self.word:
            return "()"
        return "/".join(",".join(map(str, r)) for r in reversed(self.rows))

    def compact(self) -> str:
        """Paper-style shorthand like ``48/357/126`` (single-digit letters)."""
        return "/".join("".join(map(str, r)) for r in reversed(self.rows))

    def sort_key(self):
        return (len(self.word), tuple(-x for x in self.shape), self.word)

    def __lt__(self, other: "Tableau") -> bool:
        return self.sort_key() < other.sort_key()

    def with_word(self, word: Sequence[int]) -> "Tableau":
        return Tableau(self.shape, tuple(word))

    def evaluation(self) -> tuple[int, ...]:
        return evaluation(self.word)

    def is_semistandard(self) -> bool:
        rows = self.rows
        for r in rows:
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                return False
        for i in range(1, len(rows)):
            if any(rows[i][j] <= rows[i - 1][j] for j in range(len(rows[i]))):
                return False
        return True

    def is_standard(self) -> bool:
        return is_standard_word(self.word) and self.is_semistandard()

    def transpose(self) -> "Tableau":
        rows = self.rows
        if not rows:
            return self
        cols = [tuple(rows[i][j] for i in range(len(rows)) if j < len(rows[i]))
                for j in range(len(rows[0]))]
        return Tableau.from_rows(cols)

    def restrict(self, letters: Iterable[int]) -> Word:
        return restrict(self.word, letters)

    def remove_letter(self, a: int) -> "Tableau":
        """R_a: delete the cells holding a; they must sit at row ends."""
        rows = []
        for r in self.rows:
            k = len(r)
            while k and r[k - 1] == a:
                k -= 1
            if a in r[:k]:
                raise ValueError(f"letter {a} is not at the end of row {r}")
            rows.append(r[:k])
        lengths = [len(r) for r in rows]
        while lengths and lengths[-1] == 0:
            lengths.pop()
            rows.pop()
        if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)) or 0 in lengths:
            raise ValueError(f"removing {a} from {self} does not leave a partition shape")
        return Tableau.from_rows(rows)


def sigma_tableau(t: Tableau, i: int) -> Tableau:
    return t.with_word(sigma(t.word, i))


def transpose_tableau(t: Tableau) -> Tableau:
    return t.transpose()


def swap_tableau(t: Tableau, a: int, b: int) -> Tableau:
    return t.with_word(swap_letters(t.word, a, b))


def _horizontal_strips(shape: Partition, size: int):
    """Shapes mu containing shape with mu/shape a horizontal strip of the given size,
    as lists of per-row additions (bottom row first, one extra new row allowed)."""
    lam = list(shape) + [0]
    bounds = [None] + list(shape)  # row i may grow up to lam_{i-1}

    def gen(i: int, rest: int):
        if i == len(lam):
            if rest == 0:
                yield []
            return
        cap = rest if bounds[i] is None else min(rest, bounds[i] - lam[i])
        for extra in range(cap, -1, -1):
            for tail in gen(i + 1, rest - extra):
                yield [extra] + tail

    yield from gen(0, size)


def add_two_strip(t: Tableau, a: int) -> list[Tableau]:
    """A_{a,a}: every way to add a horizontal 2-strip of letter a.

    Ordered so that placements whose highest added cell is higher come
    first, then by the row of the other added cell.
    """
    if t.word and max(t.word) >= a:
        raise ValueError("added letter must exceed every letter of the tableau")
    results = []
    rows = list(t.rows)
    for extra in _horizontal_strips(t.shape, 2):
        new_rows = [list(r) for r in rows] + [[]]
        added_rows = []
        for i, e in enumerate(extra):
            new_rows[i].extend([a] * e)
            added_rows.extend([i] * e)
        key = tuple(sorted(added_rows, reverse=True))
        results.append((key, Tableau.from_rows(new_rows)))
    results.sort(key=lambda kr: tuple(-x for x in kr[0]))
    return [tab for _, tab in results]


def standardize(t: Tableau, prefix: int | None = None, trace: list | None = None) -> Tableau:
    """VS on a tableau; the shape is untouched, only letters change."""
    states: list | None = [] if trace is not None else None
    word = standardize_word(t.word, prefix, states)
    if trace is not None:
        trace.extend(t.with_word(s) for s in states)
    return t.with_word(word)


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def syt_of_shape(shape: Partition) -> tuple[Tableau, ...]:
    shape = tuple(shape)
    n = sum(shape)
    if n == 0:
        return (Tableau((), ()),)
    found = []
    # remove the cell holding n from each outer corner
    for i, part in enumerate(shape):
        below = shape[i + 1] if i + 1 < len(shape) else 0
        if part > below:
            smaller = list(shape)
            smaller[i] -= 1
            smaller = make_partition(smaller)
            for sub in syt_of_shape(smaller):
                rows = [list(r) for r in sub.rows] + [[]]
                rows[i].append(n)
                found.append(Tableau.from_rows(rows))
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def syt_of_degree(d: int) -> tuple[Tableau, ...]:
    return tuple(t for shape in partitions(d) for t in syt_of_shape(shape))


def enumerate_syt(target) -> tuple[Tableau, ...]:
    if isinstance(target, int):
        return syt_of_degree(target)
    return syt_of_shape(tuple(target))


@lru_cache(maxsize=None)
def enumerate_ssyt(ev: tuple[int, ...]) -> tuple[Tableau, ...]:
    """All semistandard tableaux of the given evaluation, over all shapes."""
    current = [Tableau((), ())]
    for letter, count in enumerate(ev, start=1):
        nxt = []
        for tab in current:
            rows = list(tab.rows)
            for extra in _horizontal_strips(tab.shape, count):
                new_rows = [list(r) for r in rows] + [[]]
                for i, e in enumerate(extra):
                    new_rows[i].extend([letter] * e)
                nxt.append(Tableau.from_rows(new_rows))
        current = nxt
    return tuple(sorted(current))
