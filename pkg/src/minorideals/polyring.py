"""Sparse exact polynomials in the entries x[i,j] of a generic matrix.

The fixed monomial order is lexicographic with variable priority
x[1,1] > x[1,2] > .. > x[1,n] > x[2,1] > .. > x[m,n].  Under it the leading
monomial of every minor with increasing row and column indices is the product
of its main diagonal, so it is a diagonal order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping

from .errors import ParseError, ZeroPolynomial
from .tableaux import Bitableau, Minor, compositions


class Monomial:
    """Product of variables x[i,j]; exponents stored sparsely as sorted ((i, j), e) pairs."""

    __slots__ = ("items", "_key", "_hash")

    def __init__(self, exponents: Mapping[tuple[int, int], int] | Iterable = ()):
        if isinstance(exponents, Mapping):
            exponents = exponents.items()
        acc: dict[tuple[int, int], int] = {}
        for (i, j), e in exponents:
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                acc[(i, j)] = acc.get((i, j), 0) + e
        self.items = tuple(sorted(acc.items()))
        # lex order with x[1,1] first: compare (-i, -j, e) tuples lexicographically
        self._key = tuple((-i, -j, e) for (i, j), e in self.items)
        self._hash = hash(self.items)

    @classmethod
    def var(cls, i: int, j: int, e: int = 1) -> "Monomial":
        return cls({(i, j): e})

    @classmethod
    def from_dense(cls, exps: Iterable[int], n: int) -> "Monomial":
        return cls(((k // n + 1, k % n + 1), e) for k, e in enumerate(exps) if e)

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        text = text.strip()
        if text in ("", "1"):
            return cls()
        acc = {}
        for factor in text.split("*"):
            mt = re.fullmatch(r"\s*x\[\s*(\d+)\s*,\s*(\d+)\s*\](?:\^(\d+))?\s*", factor)
            if not mt:
                raise ParseError(f"bad monomial factor {factor!r}")
            i, j = int(mt.group(1)), int(mt.group(2))
            acc[(i, j)] = acc.get((i, j), 0) + int(mt.group(3) or 1)
        return cls(acc)

    def dense(self, m: int, n: int) -> tuple[int, ...]:
        out = [0] * (m * n)
        for (i, j), e in self.items:
            out[(i - 1) * n + (j - 1)] = e
        return tuple(out)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.items)

    def exponent(self, i: int, j: int) -> int:
        return dict(self.items).get((i, j), 0)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.items)

    def bidegree(self, m: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        rows, cols = [0] * m, [0] * n
        for (i, j), e in self.items:
            rows[i - 1] += e
            cols[j - 1] += e
        return tuple(rows), tuple(cols)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if isinstance(other, Monomial):
            return Monomial(self.items + other.items)
        return NotImplemented

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(((v, e * k) for v, e in self.items))

    def divides(self, other: "Monomial") -> bool:
        od = dict(other.items)
        return all(od.get(v, 0) >= e for v, e in self.items)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        d = dict(self.items)
        for v, e in other.items:
            if d.get(v, 0) < e:
                raise ValueError(f"{other} does not divide {self}")
            d[v] -= e
        return Monomial(d)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = dict(self.items)
        for v, e in other.items:
            if e > d.get(v, 0):
                d[v] = e
        return Monomial(d)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.items == other.items

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __gt__(self, other):
        return self._key > other._key

    def __ge__(self, other):
        return self._key >= other._key

    def __str__(self):
        if not self.items:
            return "1"
        return "*".join(f"x[{i},{j}]" + (f"^{e}" if e > 1 else "") for (i, j), e in self.items)

    def __repr__(self):
        return f"Monomial({self})"


ONE = Monomial()


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Polynomial:
    """Finite map Monomial -> nonzero exact coefficient (int or Fraction)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int | Fraction] | None = None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self.terms[mono] = _normalize(c)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def monomial(cls, mono: Monomial, c=1) -> "Polynomial":
        return cls({mono: c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return Polynomial(out)

    def __neg__(self):
        return Polynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial({k: c * other for k, c in self.terms.items()})
        if isinstance(other, Monomial):
            return Polynomial({k * other: c for k, c in self.terms.items()})
        out: dict[Monomial, int | Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = m1 * m2
                out[mono] = out.get(mono, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def sorted_terms(self) -> list[tuple[Monomial, int | Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def coefficient(self, mono: Monomial):
        return self.terms.get(mono, 0)

    def is_homogeneous(self, m: int, n: int) -> bool:
        return len({mono.bidegree(m, n) for mono in self.terms}) <= 1

    def bidegree(self, m: int, n: int):
        degs = {mono.bidegree(m, n) for mono in self.terms}
        if len(degs) != 1:
            raise ValueError("polynomial is zero or not bihomogeneous")
        return degs.pop()

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (mono, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if mono == ONE:
                body = str(mag)
            elif mag == 1:
                body = str(mono)
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def _perm_sign(perm) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def expand_minor(minor: Minor) -> Polynomial:
    """Leibniz expansion of a single minor."""
    t = len(minor)
    if t == 0:
        return Polynomial.constant(1)
    terms = {}
    for perm in permutations(range(t)):
        mono = Monomial(((minor.rows[k], minor.cols[perm[k]]), 1) for k in range(t))
        terms[mono] = _perm_sign(perm)
    return Polynomial(terms)


def expand_bitableau(d: Bitableau) -> Polynomial:
    out = Polynomial.constant(1)
    for f in d:
        out = out * expand_minor(f)
    return out


def leading_monomial(p: Polynomial) -> Monomial:
    if not p:
        raise ZeroPolynomial("zero polynomial has no leading monomial")
    return max(p.terms)


def leading_coefficient(p: Polynomial):
    return p.terms[leading_monomial(p)]


def bidegree(mono: Monomial, m: int, n: int):
    return mono.bidegree(m, n)


def monomials_of_bidegree(rows, cols) -> list[Monomial]:
    """All monomials with the given row and column sums, in descending order."""
    n = len(cols)
    return [Monomial.from_dense(e, n) for e in dense_monomials_of_bidegree(rows, cols)]


def dense_monomials_of_bidegree(rows, cols) -> list[tuple[int, ...]]:
    """Exponent matrices (row-major tuples) with the given margins, descending lex.

    Descending lex on the row-major tuple is exactly the descending monomial order.
    """
    rows, cols = tuple(rows), tuple(cols)
    if sum(rows) != sum(cols):
        return []
    out: list[tuple[int, ...]] = []

    def rec(i, colrem, acc):
        if i == len(rows) - 1:
            if sum(colrem) == rows[i]:
                out.append(acc + tuple(colrem))
            return
        for row in _bounded_compositions(rows[i], colrem):
            rec(i + 1, [c - r for c, r in zip(colrem, row)], acc + row)

    if not rows:
        return [()] if not any(cols) else []
    rec(0, list(cols), ())
    return out


def _bounded_compositions(total, bounds):
    """Compositions of ``total`` with entry k <= bounds[k], lexicographically descending."""
    if not bounds:
        if total == 0:
            yield ()
        return
    rest_cap = sum(bounds[1:])
    for first in range(min(total, bounds[0]), max(0, total - rest_cap) - 1, -1):
        for rest in _bounded_compositions(total - first, bounds[1:]):
            yield (first,) + rest


def count_monomials(rows, cols) -> int:
    return len(dense_monomials_of_bidegree(rows, cols))


def monomials_of_degree(m: int, n: int, degree: int) -> list[Monomial]:
    return [Monomial.from_dense(e, n) for e in compositions(degree, m * n)]
