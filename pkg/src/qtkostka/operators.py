"""Raising and lowering operators on standard tableaux, the tableau sums
they generate, and domino vectors.

``raise0``/``raise1`` add a horizontal 2-strip and standardize (raise1 is
raise0 conjugated by transposition).  ``lower0``/``lower1`` undo them.
Composite operators accept an optional ``trace`` list that receives every
intermediate tableau.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .partitions import Partition, conjugate
from .tableaux import (
    Tableau,
    add_two_strip,
    enumerate_ssyt,
    relabel_pair,
    shift,
    sigma,
    sigma_bar,
    standardize,
    swap_tableau,
    syt_of_degree,
)


class TableauSum:
    """Formal sum of tableaux with nonzero integer multiplicities."""

    __slots__ = ("_terms",)

    def __init__(self, items: Iterable[Tableau] | dict[Tableau, int] = ()):
        terms: dict[Tableau, int] = {}
        pairs = items.items() if isinstance(items, dict) else ((t, 1) for t in items)
        for t, m in pairs:
            terms[t] = terms.get(t, 0) + m
        self._terms = {t: m for t, m in terms.items() if m}

    def __iter__(self) -> Iterator[Tableau]:
        return iter(sorted(self._terms))

    def items(self) -> list[tuple[Tableau, int]]:
        return [(t, self._terms[t]) for t in sorted(self._terms)]

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, t: Tableau) -> bool:
        return t in self._terms

    def multiplicity(self, t: Tableau) -> int:
        return self._terms.get(t, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TableauSum):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "TableauSum") -> "TableauSum":
        merged = dict(self._terms)
        for t, m in other._terms.items():
            merged[t] = merged.get(t, 0) + m
        return TableauSum(merged)

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for m in self._terms.values())

    def apply(self, op) -> "TableauSum":
        """Extend a tableau -> TableauSum operator linearly."""
        out: dict[Tableau, int] = {}
        for t, m in self._terms.items():
            for s, k in op(t)._terms.items():
                out[s] = out.get(s, 0) + m * k
        return TableauSum(out)

    def map(self, fn) -> "TableauSum":
        """Apply a tableau -> tableau map to every term."""
        out: dict[Tableau, int] = {}
        for t, m in self._terms.items():
            s = fn(t)
            out[s] = out.get(s, 0) + m
        return TableauSum(out)

    def __repr__(self) -> str:
        body = " + ".join(t.compact() if m == 1 else f"{m}*{t.compact()}" for t, m in self.items())
        return f"TableauSum({body or '0'})"


EMPTY = Tableau((), ())
SINGLE = Tableau((1,), (1,))


def _require_standard(t: Tableau) -> None:
    if not t.is_standard():
        raise ValueError(f"{t} is not a standard tableau")


def raise0(t: Tableau, trace: list | None = None) -> TableauSum:
    """VS(A_{n+1,n+1} t) = tau_1 r_(11->01) sigma_1 ... sigma_n A_{n+1,n+1} t."""
    _require_standard(t)
    out = []
    for strip in add_two_strip(t, len(t) + 1):
        steps: list | None = [strip] if trace is not None else None
        out.append(standardize(strip, trace=steps))
        if trace is not None:
            trace.append(steps)
    return TableauSum(out)


def raise1(t: Tableau, trace: list | None = None) -> TableauSum:
    _require_standard(t)
    return raise0(t.transpose(), trace).map(Tableau.transpose)


def _lower0_steps(t: Tableau, trace: list | None) -> Tableau:
    n = len(t)
    w = relabel_pair(shift(t.word, -1), (0, 1), (1, 1))
    cur = t.with_word(w)
    if trace is not None:
        trace.append(cur)
    for i in range(1, n - 1):
        cur = cur.with_word(sigma(cur.word, i))
        if trace is not None:
            trace.append(cur)
    cur = cur.remove_letter(n - 1)
    if trace is not None:
        trace.append(cur)
    return cur


def lower0(t: Tableau, trace: list | None = None) -> Tableau:
    """R_{n-1} sigma_{n-2} ... sigma_1 r_(01->11) tau_{-1}; left inverse of raise0."""
    _require_standard(t)
    if len(t) < 2 or t.restrict((1, 2)) != (1, 2):
        raise ValueError(f"lower0 needs degree >= 2 and restriction 12 to {{1,2}}: {t}")
    return _lower0_steps(t, trace)


def lower1(t: Tableau, trace: list | None = None, route: str = "transpose") -> Tableau:
    """Left inverse of raise1.

    ``route="transpose"`` conjugates lower0 by transposition;
    ``route="sigma_bar"`` runs R_{n-1} sigmabar_{n-2} ... sigmabar_1 r_(10->11) tau_{-1}
    directly.  Both give the same tableau.
    """
    _require_standard(t)
    if len(t) < 2 or t.restrict((1, 2)) != (2, 1):
        raise ValueError(f"lower1 needs degree >= 2 and restriction 21 to {{1,2}}: {t}")
    if route == "transpose":
        tt = t.transpose()
        if trace is not None:
            trace.append(tt)
        out = _lower0_steps(tt, trace).transpose()
        if trace is not None:
            trace.append(out)
        return out
    if route != "sigma_bar":
        raise ValueError(f"unknown route {route!r}")
    n = len(t)
    cur = t.with_word(relabel_pair(shift(t.word, -1), (1, 0), (1, 1)))
    if trace is not None:
        trace.append(cur)
    for i in range(1, n - 1):
        cur = cur.with_word(sigma_bar(cur.word, i))
        if trace is not None:
            trace.append(cur)
    cur = cur.remove_letter(n - 1)
    if trace is not None:
        trace.append(cur)
    return cur


def raise_op(bit: int):
    return raise1 if bit else raise0


def lower_op(bit: int):
    return lower1 if bit else lower0


def h_base(eps: int) -> TableauSum:
    return TableauSum([SINGLE if eps else EMPTY])


def h_tableaux(lam: Partition, via: str = "standardization") -> TableauSum:
    """Sum of VS(T) over semistandard T of evaluation lam'.

    ``via="raising"`` builds the same sum as raise0^{lam_2} applied to the
    sum of all standard tableaux of degree lam_1 - lam_2.
    """
    lam = tuple(lam)
    if len(lam) > 2:
        raise ValueError("only partitions with at most two parts")
    if via == "standardization":
        return TableauSum(standardize(t) for t in enumerate_ssyt(conjugate(lam)))
    if via != "raising":
        raise ValueError(f"unknown construction {via!r}")
    l1 = lam[0] if lam else 0
    l2 = lam[1] if len(lam) > 1 else 0
    acc = TableauSum(syt_of_degree(l1 - l2))
    for _ in range(l2):
        acc = acc.apply(raise0)
    return acc


def u_tableaux(v: Sequence[int], eps: int) -> TableauSum:
    """raise^(v_1) ... raise^(v_k) applied to the base sum for eps (v_k acts first)."""
    acc = h_base(eps)
    for bit in reversed(tuple(v)):
        acc = acc.apply(raise_op(bit))
    return acc


def domino_vector(t: Tableau, trace: list | None = None) -> tuple[int, ...]:
    """Peel 2-strips: 0 and lower0 when 1 precedes 2, 1 and lower1 otherwise."""
    _require_standard(t)
    bits = []
    while len(t) > 1:
        bit = 0 if t.restrict((1, 2)) == (1, 2) else 1
        bits.append(bit)
        t = lower_op(bit)(t)
        if trace is not None:
            trace.append(t)
    return tuple(bits)


def swap23(t: Tableau) -> Tableau:
    return swap_tableau(t, 2, 3)
