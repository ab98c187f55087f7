"""Partitions as weakly decreasing tuples of positive ints."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod

Partition = tuple[int, ...]


def make_partition(parts) -> Partition:
    """Validate and normalize, dropping trailing zeros."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {parts!r}")
    return p


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0"):
        return ()
    return make_partition(int(x) for x in text.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "0"


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def is_dominated(lam: Partition, mu: Partition) -> bool:
    """True iff lam <= mu in dominance order (all prefix sums of lam bounded by mu's)."""
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def n_stat(lam: Partition) -> int:
    """n(lam) = sum (i-1) lam_i, rows indexed from 1."""
    return sum(i * part for i, part in enumerate(lam))


def z_stat(lam: Partition) -> int:
    return prod(i ** m * factorial(m) for i, m in Counter(lam).items())


@lru_cache(maxsize=None)
def partitions(d: int, max_parts: int | None = None) -> tuple[Partition, ...]:
    """All partitions of d in decreasing lexicographic order."""
    if max_parts is None:
        max_parts = d

    def gen(rest: int, largest: int, slots: int):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first, slots - 1):
                yield (first,) + tail

    return tuple(gen(d, d, max_parts))


def two_part_partitions(d: int) -> tuple[Partition, ...]:
    return partitions(d, 2)


def hook_lengths(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def syt_count(lam: Partition) -> int:
    """Number of standard tableaux of shape lam (hook-length formula)."""
    return factorial(sum(lam)) // prod(hook_lengths(lam))


dominates = is_dominated
enumerate_partitions = partitions
