"""Transitions between the S[X^t] and S[X^tq] bases, and the morphism
sending tableau sums to S[X^t] vectors.

Power sums transform by p_k[X^t] = (1 - q^k) p_k[X^tq].  Schur functions
are moved through power sums with symmetric-group characters, computed by
the Murnaghan-Nakayama rule.  Intermediate arithmetic is over exact
rationals; the boundary asserts integrality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .operators import TableauSum
from .partitions import Partition, partitions, z_stat
from .scalar_ring import ONE, ZERO, LaurentQT, RationalQ, q_pochhammer
from .schur import SchurVector
from .tableaux import cocharge

MAX_CHARACTER_DEGREE = 12


class ResidueError(ArithmeticError):
    """A projection to two-row shapes left nonzero coordinates behind."""


def _beta_set(mu: Partition, length: int) -> list[int]:
    return [mu[i] + (length - 1 - i) if i < len(mu) else (length - 1 - i) for i in range(length)]


@lru_cache(maxsize=None)
def _mn(mu: Partition, rho: Partition) -> int:
    """chi^mu at class rho by removing rim hooks of size rho[0]."""
    if not rho:
        return 1 if not mu else 0
    k, rest = rho[0], rho[1:]
    length = len(mu)
    beta = _beta_set(mu, length)
    beads = set(beta)
    total = 0
    for b in beta:
        if b - k < 0 or (b - k) in beads:
            continue
        sign = (-1) ** sum(1 for c in beta if b - k < c < b)
        new = sorted((beads - {b}) | {b - k}, reverse=True)
        nu = tuple(x - (length - 1 - i) for i, x in enumerate(new))
        nu = tuple(x for x in nu if x > 0)
        total += sign * _mn(nu, rest)
    return total


@dataclass(frozen=True)
class CharacterTable:
    degree: int
    shapes: tuple[Partition, ...]
    values: dict[tuple[Partition, Partition], int]

    def __call__(self, shape: Partition, cls: Partition) -> int:
        return self.values[(tuple(shape), tuple(cls))]


@lru_cache(maxsize=None)
def characters(d: int, bound: int = MAX_CHARACTER_DEGREE) -> CharacterTable:
    if d > bound:
        raise ValueError(f"character tables are limited to degree {bound}, got {d}")
    shapes = partitions(d)
    values = {(mu, rho): _mn(mu, rho) for mu in shapes for rho in shapes}
    return CharacterTable(d, shapes, values)


def _power_factor(rho: Partition) -> RationalQ:
    out = RationalQ({0: 1})
    for part in rho:
        out = out * RationalQ({0: 1, part: -1})
    return out


@lru_cache(maxsize=None)
def xt_to_xtq_matrix(d: int) -> dict[Partition, dict[Partition, LaurentQT]]:
    """S_mu[X^t] = sum_nu M[mu][nu] S_nu[X^tq]."""
    table = characters(d)
    factors = {rho: _power_factor(rho) * Fraction(1, z_stat(rho)) for rho in table.shapes}
    out: dict[Partition, dict[Partition, LaurentQT]] = {}
    for mu in table.shapes:
        row = {}
        for nu in table.shapes:
            acc = RationalQ()
            for rho in table.shapes:
                weight = table(mu, rho) * table(nu, rho)
                if weight:
                    acc = acc + factors[rho] * weight
            if acc:
                row[nu] = acc.to_qt()
        out[mu] = row
    return out


@lru_cache(maxsize=None)
def _xtq_to_xt_numerators(d: int):
    """Numerators over the common denominator (q;q)_d of the inverse transition."""
    table = characters(d)
    denom = RationalQ.from_qt(q_pochhammer(d))
    factors = {rho: denom.divide_exact(_power_factor(rho)) * Fraction(1, z_stat(rho))
               for rho in table.shapes}
    out = {}
    for nu in table.shapes:
        row = {}
        for mu in table.shapes:
            acc = RationalQ()
            for rho in table.shapes:
                weight = table(nu, rho) * table(mu, rho)
                if weight:
                    acc = acc + factors[rho] * weight
            if acc:
                row[mu] = acc
        out[nu] = row
    return out, denom


def xt_to_xtq(x: SchurVector) -> SchurVector:
    if x.basis != "xt":
        raise ValueError("expected a vector in the S[X^t] basis")
    acc: dict[Partition, LaurentQT] = {}
    for mu, c in x.items():
        for nu, m in xt_to_xtq_matrix(sum(mu))[mu].items():
            acc[nu] = acc.get(nu, ZERO) + c * m
    return SchurVector(acc, "xtq")


def xtq_to_xt(x: SchurVector) -> SchurVector:
    """Inverse transition; coefficients must come out as Laurent polynomials."""
    if x.basis != "xtq":
        raise ValueError("expected a vector in the S[X^tq] basis")
    by_degree: dict[int, list] = {}
    for nu, c in x.items():
        by_degree.setdefault(sum(nu), []).append((nu, c))
    acc: dict[Partition, LaurentQT] = {}
    for d, entries in by_degree.items():
        numer, denom = _xtq_to_xt_numerators(d)
        t_exps = sorted({te for _, c in entries for (_, te) in c.terms})
        for te in t_exps:
            sums: dict[Partition, RationalQ] = {}
            for nu, c in entries:
                slice_q = RationalQ.from_qt(c.coeff_t(te))
                if not slice_q:
                    continue
                for mu, n in numer[nu].items():
                    sums[mu] = sums.get(mu, RationalQ()) + slice_q * n
            for mu, total in sums.items():
                if total:
                    acc[mu] = acc.get(mu, ZERO) + total.divide_exact(denom).to_qt().shift(0, te)
    return SchurVector(acc, "xt")


def varsigma_tableau(t) -> SchurVector:
    return SchurVector({t.shape: LaurentQT.monomial(1, cocharge(t.word))}, "xt")


def varsigma(s: TableauSum) -> SchurVector:
    """T -> q^cocharge(T) S_shape(T)[X^t], extended linearly."""
    acc: dict[Partition, LaurentQT] = {}
    for t, m in s.items():
        acc[t.shape] = acc.get(t.shape, ZERO) + LaurentQT.monomial(m, cocharge(t.word))
    return SchurVector(acc, "xt")


def to_two_row(x: SchurVector) -> SchurVector:
    """Move an S[X^t] vector to S[X^tq] and check it lies in the two-row span."""
    y = xt_to_xtq(x) if x.basis == "xt" else x
    residue = {mu: c for mu, c in y.items() if len(mu) > 2}
    if residue:
        detail = "; ".join(f"{mu}: {c}" for mu, c in residue.items())
        raise ResidueError(f"three-row coordinates do not cancel: {detail}")
    return y


def basis_vector_xt(mu: Partition) -> SchurVector:
    return SchurVector({tuple(mu): ONE}, "xt")
