"""Exact Laurent polynomials in q and t with integer coefficients.

``LaurentQT`` is the scalar of the whole engine.  ``RationalQ`` is a
univariate Laurent polynomial in q with rational coefficients, used only
while changing Schur bases through power sums.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Exponent = tuple[int, int]  # (q_exp, t_exp)


class LaurentQT:
    """Immutable sparse map (q_exp, t_exp) -> nonzero int."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, int] = {}
        for (qe, te), c in items:
            if c:
                key = (int(qe), int(te))
                clean[key] = clean.get(key, 0) + int(c)
        self._terms = {k: c for k, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> "LaurentQT":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: int) -> "LaurentQT":
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, coeff: int = 1, q_exp: int = 0, t_exp: int = 0) -> "LaurentQT":
        return cls._raw({(q_exp, t_exp): coeff} if coeff else {})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self._terms.items())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentQT.const(other)
        if not isinstance(other, LaurentQT):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> "LaurentQT":
        if isinstance(other, LaurentQT):
            return other
        if isinstance(other, int):
            return LaurentQT.const(other)
        return NotImplemented

    def __add__(self, other) -> "LaurentQT":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentQT._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentQT":
        return LaurentQT._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentQT":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentQT":
        return (-self) + other

    def __mul__(self, other) -> "LaurentQT":
        if isinstance(other, int):
            if not other:
                return LaurentQT._raw({})
            return LaurentQT._raw({k: c * other for k, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for (a, b), c in self._terms.items():
            for (d, e), f in other._terms.items():
                k = (a + d, b + e)
                out[k] = out.get(k, 0) + c * f
        return LaurentQT._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentQT":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            ((qe, te), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            return LaurentQT._raw({(qe * n, te * n): c ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, q_exp: int = 0, t_exp: int = 0) -> "LaurentQT":
        """Multiply by the monomial q^q_exp t^t_exp."""
        return LaurentQT._raw({(a + q_exp, b + t_exp): c for (a, b), c in self._terms.items()})

    def coeff_t(self, k: int) -> "LaurentQT":
        """The polynomial in q multiplying t^k."""
        return LaurentQT._raw({(a, 0): c for (a, b), c in self._terms.items() if b == k})

    def t_degree(self) -> int | None:
        return max((b for _, b in self._terms), default=None)

    def is_polynomial(self) -> bool:
        return all(a >= 0 and b >= 0 for a, b in self._terms)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def constant(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get((0, 0), 0)

    def substitute(self, q: Union[str, int] = "q", t: Union[str, int] = "t") -> "LaurentQT":
        """Substitute each variable by itself, its inverse, or an integer.

        Accepted images: ``"q"``/``"1/q"`` (resp. ``"t"``/``"1/t"``) or an int.
        Integer images with negative exponents are only allowed when the
        result stays integral.
        """
        q_mode = _image_mode(q, "q")
        t_mode = _image_mode(t, "t")
        out: dict[Exponent, Fraction] = {}
        for (a, b), c in self._terms.items():
            coeff = Fraction(c)
            qe, te = a, b
            if q_mode == "inv":
                qe = -a
            elif q_mode != "id":
                coeff *= Fraction(q_mode) ** a
                qe = 0
            if t_mode == "inv":
                te = -b
            elif t_mode != "id":
                coeff *= Fraction(t_mode) ** b
                te = 0
            out[(qe, te)] = out.get((qe, te), Fraction(0)) + coeff
        for v in out.values():
            if v.denominator != 1:
                raise ValueError("substitution produced a non-integral coefficient")
        return LaurentQT({k: int(v) for k, v in out.items()})

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """Canonical (coeff, q_exp, t_exp) triples: t descending, then q descending."""
        return [(c, a, b) for (a, b), c in
                sorted(self._terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0]))]

    def __str__(self) -> str:
        return format_qt(self)

    def __repr__(self) -> str:
        return f"LaurentQT({format_qt(self)!r})"


def _image_mode(image, var: str):
    if isinstance(image, int):
        return image
    if image == var:
        return "id"
    if image in (f"1/{var}", f"{var}^-1"):
        return "inv"
    raise ValueError(f"unsupported image {image!r} for {var}")


ZERO = LaurentQT._raw({})
ONE = LaurentQT._raw({(0, 0): 1})
Q = LaurentQT._raw({(1, 0): 1})
T = LaurentQT._raw({(0, 1): 1})


def q_pow(k: int) -> LaurentQT:
    return LaurentQT._raw({(k, 0): 1})


def q_pochhammer(m: int) -> LaurentQT:
    """(q;q)_m = (1-q)(1-q^2)...(1-q^m)."""
    out = ONE
    for i in range(1, m + 1):
        out = out * (ONE - q_pow(i))
    return out


def _format_monomial(c: int, a: int, b: int) -> str:
    factors = []
    if a:
        factors.append("q" if a == 1 else f"q^{a}")
    if b:
        factors.append("t" if b == 1 else f"t^{b}")
    body = "*".join(factors)
    if not body:
        return str(abs(c))
    if abs(c) == 1:
        return body
    return f"{abs(c)}*{body}"


def format_qt(p: LaurentQT) -> str:
    terms = p.sorted_terms()
    if not terms:
        return "0"
    pieces = []
    for idx, (c, a, b) in enumerate(terms):
        mono = _format_monomial(c, a, b)
        if idx == 0:
            pieces.append(mono if c > 0 else f"-{mono}")
        else:
            pieces.append(f" + {mono}" if c > 0 else f" - {mono}")
    return "".join(pieces)


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_qt(text: str) -> LaurentQT:
    """Parse the polynomial grammar, e.g. ``"t^2 - q^-3*t + 1"``."""
    pos = 0
    n = len(text)
    terms: dict[Exponent, int] = {}

    def skip_ws(p: int) -> int:
        while p < n and text[p].isspace():
            p += 1
        return p

    def read_int(p: int) -> tuple[int, int]:
        p = skip_ws(p)
        sign = 1
        if p < n and text[p] == "-":
            sign = -1
            p += 1
        m = re.match(r"\d+", text[p:])
        if not m:
            raise ParseError("expected integer exponent", p)
        return sign * int(m.group()), p + m.end()

    pos = skip_ws(pos)
    if pos == n:
        raise ParseError("empty polynomial", pos)
    first = True
    while True:
        pos = skip_ws(pos)
        sign = 1
        if pos < n and text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ParseError("expected '+' or '-'", pos)
        first = False
        coeff, qe, te = 1, 0, 0
        expect_factor = True
        while expect_factor:
            pos = skip_ws(pos)
            if pos >= n:
                raise ParseError("expected factor", pos)
            ch = text[pos]
            if ch.isdigit():
                m = re.match(r"\d+", text[pos:])
                coeff *= int(m.group())
                pos += m.end()
            elif ch in "qt":
                pos += 1
                exp = 1
                p2 = skip_ws(pos)
                if p2 < n and text[p2] == "^":
                    exp, pos = read_int(p2 + 1)
                if ch == "q":
                    qe += exp
                else:
                    te += exp
            else:
                raise ParseError(f"unexpected character {ch!r}", pos)
            p2 = skip_ws(pos)
            if p2 < n and text[p2] == "*":
                pos = p2 + 1
            else:
                expect_factor = False
        key = (qe, te)
        terms[key] = terms.get(key, 0) + sign * coeff
        pos = skip_ws(pos)
        if pos == n:
            break
    return LaurentQT(terms)


LaurentQT.parse = staticmethod(parse_qt)


class RationalQ:
    """Laurent polynomial in q with Fraction coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Fraction | int] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self._terms = {int(k): Fraction(v) for k, v in items if v}

    @classmethod
    def from_qt(cls, p: LaurentQT) -> "RationalQ":
        if any(b for _, b in p.terms):
            raise ValueError("RationalQ cannot hold powers of t")
        return cls({a: c for (a, _), c in p.items()})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, RationalQ):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "RationalQ") -> "RationalQ":
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return RationalQ(out)

    def __neg__(self):
        return RationalQ({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "RationalQ":
        if isinstance(other, (int, Fraction)):
            return RationalQ({k: v * other for k, v in self._terms.items()})
        out: dict[int, Fraction] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                out[a + b] = out.get(a + b, 0) + c * d
        return RationalQ(out)

    __rmul__ = __mul__

    def divide_exact(self, divisor: "RationalQ") -> "RationalQ":
        """Exact polynomial division; raises if a remainder survives."""
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._terms)
        d_top = max(divisor._terms)
        d_lead = divisor._terms[d_top]
        lowest = min(rem, default=0) - min(divisor._terms)
        quotient: dict[int, Fraction] = {}
        while rem:
            top = max(rem)
            k = top - d_top
            if k < lowest:
                raise ArithmeticError("inexact division")
            c = rem[top] / d_lead
            quotient[k] = c
            for e, v in divisor._terms.items():
                nv = rem.get(e + k, 0) - c * v
                if nv:
                    rem[e + k] = nv
                else:
                    rem.pop(e + k, None)
        return RationalQ(quotient)

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self._terms.values())

    def to_qt(self) -> LaurentQT:
        if not self.is_integral():
            raise ArithmeticError(f"non-integral coefficients in {self._terms}")
        return LaurentQT({(k, 0): int(v) for k, v in self._terms.items()})

    def __repr__(self):
        return f"RationalQ({self._terms})"


def qt_arith(a: LaurentQT, b: LaurentQT, op: str) -> LaurentQT:
    if op == "add":
        return a + b
    if op == "subtract":
        return a - b
    if op == "multiply":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def qt_substitute(p: LaurentQT, q_image: Union[str, int] = "q", t_image: Union[str, int] = "t") -> LaurentQT:
    return p.substitute(q=q_image, t=t_image)


def qt_coeff_t(p: LaurentQT, k: int) -> LaurentQT:
    return p.coeff_t(k)


qt_format = format_qt
qt_parse = parse_qt
