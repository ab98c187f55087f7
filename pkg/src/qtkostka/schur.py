"""Schur-coordinate vectors and the creation-operator construction of
two-part Macdonald polynomials.

Vectors live in coordinates over S_mu[X^tq] (or S_mu[X^t], tracked by a
basis tag); no alphabet variables are ever expanded.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, format_partition, make_partition, n_stat
from .scalar_ring import ONE, ZERO, LaurentQT, q_pochhammer, q_pow

BASES = ("xtq", "xt")


def shape_order(mu: Partition):
    return (sum(mu), tuple(-x for x in mu))


class SchurVector:
    """Finite LaurentQT-linear combination of S_mu in one alphabet."""

    __slots__ = ("_coords", "basis")

    def __init__(self, coords: Mapping[Partition, LaurentQT] | Iterable = (), basis: str = "xtq"):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        items = coords.items() if isinstance(coords, Mapping) else coords
        out: dict[Partition, LaurentQT] = {}
        for mu, c in items:
            mu = tuple(mu)
            if isinstance(c, int):
                c = LaurentQT.const(c)
            out[mu] = out.get(mu, ZERO) + c
        self._coords = {mu: c for mu, c in out.items() if c}

    @classmethod
    def basis_vector(cls, mu: Partition, basis: str = "xtq", coeff: LaurentQT = ONE) -> "SchurVector":
        return cls({make_partition(mu): coeff}, basis)

    @property
    def coords(self) -> dict[Partition, LaurentQT]:
        return dict(self._coords)

    def keys(self) -> list[Partition]:
        return sorted(self._coords, key=shape_order)

    def items(self) -> list[tuple[Partition, LaurentQT]]:
        return [(mu, self._coords[mu]) for mu in self.keys()]

    def __getitem__(self, mu) -> LaurentQT:
        return self._coords.get(tuple(mu), ZERO)

    def __bool__(self) -> bool:
        return bool(self._coords)

    def _check(self, other: "SchurVector") -> None:
        if self.basis != other.basis:
            raise ValueError(f"cannot mix bases {self.basis} and {other.basis}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurVector):
            return NotImplemented
        self._check(other)
        return self._coords == other._coords

    def __add__(self, other: "SchurVector") -> "SchurVector":
        self._check(other)
        out = dict(self._coords)
        for mu, c in other._coords.items():
            out[mu] = out.get(mu, ZERO) + c
        return SchurVector(out, self.basis)

    def __neg__(self) -> "SchurVector":
        return SchurVector({mu: -c for mu, c in self._coords.items()}, self.basis)

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        return self + (-other)

    def scale(self, c: LaurentQT | int) -> "SchurVector":
        return SchurVector({mu: v * c for mu, v in self._coords.items()}, self.basis)

    __rmul__ = scale

    def map_coeffs(self, fn) -> "SchurVector":
        return SchurVector({mu: fn(v) for mu, v in self._coords.items()}, self.basis)

    def is_two_row(self) -> bool:
        return all(len(mu) <= 2 for mu in self._coords)

    def degrees(self) -> set[int]:
        return {sum(mu) for mu in self._coords}

    def apply(self, op) -> "SchurVector":
        """Extend a basis map Partition -> SchurVector linearly."""
        acc: dict[Partition, LaurentQT] = {}
        for mu, c in self._coords.items():
            for nu, d in op(mu)._coords.items():
                acc[nu] = acc.get(nu, ZERO) + c * d
        return SchurVector(acc, self.basis)

    def format(self, header: bool = False) -> str:
        lines = [f"basis={self.basis}"] if header else []
        lines += [f"mu={format_partition(mu)} coeff={c}" for mu, c in self.items()]
        return "\n".join(lines)

    def __repr__(self) -> str:
        body = ", ".join(f"{format_partition(mu)}: {c}" for mu, c in self.items())
        return f"SchurVector[{self.basis}]({{{body}}})"


def s(*parts: int) -> SchurVector:
    return SchurVector.basis_vector(make_partition(parts))


def S_EMPTY() -> SchurVector:
    return SchurVector.basis_vector(())


def pieri(m: int, n: int) -> SchurVector:
    """S_m * S_n = sum_{l=0}^{min} S_{(m+n-l, l)}."""
    if m < n:
        m, n = n, m
    return SchurVector({make_partition((m + n - l, l)): ONE for l in range(n + 1)})


def _two_row(mu: Partition) -> tuple[int, int]:
    if len(mu) > 2:
        raise ValueError(f"{mu} has more than two parts")
    m = mu[0] if mu else 0
    n = mu[1] if len(mu) > 1 else 0
    return m, n


def _one_minus(coeff: int, q_exp: int, t_exp: int = 0) -> LaurentQT:
    return ONE - LaurentQT.monomial(coeff, q_exp, t_exp)


@lru_cache(maxsize=None)
def _b2_basis(mu: Partition) -> SchurVector:
    m, n = _two_row(mu)
    return (pieri(m + 1, n + 1).scale(_one_minus(1, m + 1, 1) * _one_minus(1, n + 1))
            - pieri(m + 2, n).scale(_one_minus(1, m + 2) * _one_minus(1, n, 1)))


@lru_cache(maxsize=None)
def _b2_zero_basis(mu: Partition) -> SchurVector:
    m, n = _two_row(mu)
    return (pieri(m + 1, n + 1).scale(-q_pow(m + 1) * _one_minus(1, n + 1))
            + pieri(m + 2, n).scale(q_pow(n) * _one_minus(1, m + 2)))


@lru_cache(maxsize=None)
def _b2_one_basis(mu: Partition) -> SchurVector:
    m, n = _two_row(mu)
    det = pieri(m + 1, n + 1).scale(_one_minus(1, n + 1)) - pieri(m + 2, n).scale(_one_minus(1, m + 2))
    return det.scale(q_pow(m + n + 1))


def creation_b2(x: SchurVector) -> SchurVector:
    return x.apply(_b2_basis)


def b2_zero(x: SchurVector) -> SchurVector:
    return x.apply(_b2_zero_basis)


def b2_one(x: SchurVector) -> SchurVector:
    return x.apply(_b2_one_basis)


def b2_split(bit: int):
    return b2_one if bit else b2_zero


def degree_scale(x: SchurVector) -> SchurVector:
    """q^{-D-1}: multiply each degree-d coordinate by q^{-d-1}."""
    return SchurVector({mu: c.shift(-sum(mu) - 1) for mu, c in x.coords.items()}, x.basis)


def one_row_base(m: int) -> SchurVector:
    """J_m = H_m = (q;q)_m S_m[X^tq]."""
    return SchurVector.basis_vector((m,) if m else (), coeff=q_pochhammer(m))


def _split(lam: Partition) -> tuple[int, int]:
    lam = make_partition(lam)
    if len(lam) > 2:
        raise ValueError(f"{lam} has more than two parts")
    return _two_row(lam)


@lru_cache(maxsize=None)
def macdonald_j(lam: Partition) -> SchurVector:
    """J_lam by applying B_2 lam_2 times to J_{lam_1 - lam_2}."""
    l1, l2 = _split(lam)
    x = one_row_base(l1 - l2)
    for _ in range(l2):
        x = creation_b2(x)
    return x


def hall_littlewood_h(lam: Partition, via: str = "operators") -> SchurVector:
    """H_lam = (B_2^(0))^{lam_2} H_{lam_1 - lam_2}.

    ``via="corollary"`` instead sums U_{(0^l, v)} over all 0/1 vectors v of
    length m where lam = (2m + l + eps, l).
    """
    l1, l2 = _split(lam)
    if via == "operators":
        x = one_row_base(l1 - l2)
        for _ in range(l2):
            x = b2_zero(x)
        return x
    if via != "corollary":
        raise ValueError(f"unknown construction {via!r}")
    eps = (l1 - l2) % 2
    m = (l1 - l2) // 2
    acc = SchurVector()
    for tail in product((0, 1), repeat=m):
        acc = acc + u_alg((0,) * l2 + tail, eps)
    return acc


def h_base(eps: int) -> SchurVector:
    return one_row_base(1) if eps else S_EMPTY()


@lru_cache(maxsize=None)
def u_alg(v: Sequence[int], eps: int) -> SchurVector:
    """U_v^(eps) = B^(v_1) ... B^(v_k) H_eps, v_k acting first."""
    v = tuple(v)
    if not v:
        return h_base(eps)
    return b2_split(v[0])(u_alg(v[1:], eps))


def prefix_weight(v: Sequence[int], ell: int) -> tuple[int, int]:
    """(|v|_ell, n(v)_ell): sum and weighted sum of the first ell bits."""
    head = v[:ell]
    return sum(head), sum(i * b for i, b in enumerate(head))


def j_expansion_terms(m: int, ell: int, eps: int) -> list[tuple[tuple[int, ...], LaurentQT]]:
    """(v, q^{(1-d)|v|_ell + 2 n(v)_ell} t^{ell - |v|_ell}) for v in {0,1}^{m+ell}."""
    d = 2 * m + 2 * ell + eps
    out = []
    for v in product((0, 1), repeat=m + ell):
        size, weight = prefix_weight(v, ell)
        out.append((v, LaurentQT.monomial(1, (1 - d) * size + 2 * weight, ell - size)))
    return out


def j_expansion(m: int, ell: int, eps: int) -> SchurVector:
    acc = SchurVector()
    for v, coeff in j_expansion_terms(m, ell, eps):
        acc = acc + u_alg(v, eps).scale(coeff)
    return acc


def t_leading(x: SchurVector, k: int) -> SchurVector:
    """Coefficient of t^k in every coordinate."""
    return x.map_coeffs(lambda c: c.coeff_t(k))


def inversions(v: Sequence[int]) -> int:
    """Adjacent swaps 10 -> 01 needed to sort v to (0...0, 1...1)."""
    ones = inv = 0
    for b in v:
        if b:
            ones += 1
        else:
            inv += ones
    return inv


def dominant(v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(v))


def j_t_degree(lam: Partition) -> int:
    return n_stat(make_partition(lam))
