"""Multigraded Hilbert series and K-polynomials for the Z^m x Z^n grading.

The variable x[i,j] has degree e_i + f_j, recorded by the character u_i v_j.
K-polynomials of monomial quotients come from the Taylor resolution; the
subsets of generators are collapsed by their lcm while summing, so only the
distinct lcms are ever stored.

Schur polynomials follow the convention where a tableau of shape S has strictly
increasing rows and weakly increasing columns, so sigma_S is the classical
Schur polynomial of the transposed shape.  Everything here assumes m >= n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping

from .errors import (
    DegreeBoundExceeded,
    MinorIdealsError,
    NotSymmetric,
    ShapeTooWide,
    TooManyGenerators,
)
from .ideals import MonomialIdeal
from .polyring import count_monomials, dense_monomials_of_bidegree
from .report import Report, format_bidegree
from .tableaux import Shape, bidegrees

DEFAULT_GEN_CAP = 20


class WideMatrix(MinorIdealsError):
    """K-theoretic computations need m >= n."""


def _require_tall(m: int, n: int) -> None:
    if m < n:
        raise WideMatrix(f"K-polynomials assume m >= n, got m={m}, n={n}")


def _factor(name: str, i: int, e: int) -> str:
    return f"{name}[{i}]" + (f"^{e}" if e != 1 else "")


def _mono_str(u: tuple[int, ...], v: tuple[int, ...]) -> str:
    parts = [_factor("u", i, e) for i, e in enumerate(u, 1) if e]
    parts += [_factor("v", j, e) for j, e in enumerate(v, 1) if e]
    return "*".join(parts)


class LaurentPolynomial:
    """Finite Z-linear combination of u^a v^b with a in Z^m, b in Z^n."""

    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms: Mapping[tuple, int] | None = None):
        self.m, self.n = m, n
        self.terms: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        for (a, b), c in (terms or {}).items():
            a, b = tuple(a), tuple(b)
            if len(a) != m or len(b) != n:
                raise ValueError(f"exponent lengths {len(a)},{len(b)} do not match m={m}, n={n}")
            if c:
                self.terms[(a, b)] = self.terms.get((a, b), 0) + c
        self.terms = {k: c for k, c in self.terms.items() if c}

    @classmethod
    def one(cls, m: int, n: int) -> "LaurentPolynomial":
        return cls(m, n, {((0,) * m, (0,) * n): 1})

    @classmethod
    def term(cls, u, v, coeff: int = 1) -> "LaurentPolynomial":
        return cls(len(u), len(v), {(tuple(u), tuple(v)): coeff})

    def _same_ring(self, other: "LaurentPolynomial") -> None:
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("Laurent polynomials over different variable sets")

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        self._same_ring(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return LaurentPolynomial(self.m, self.n, acc)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.m, self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial(self.m, self.n, {k: c * other for k, c in self.terms.items()})
        self._same_ring(other)
        acc: dict = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (tuple(x + y for x, y in zip(a1, a2)), tuple(x + y for x, y in zip(b1, b2)))
                acc[k] = acc.get(k, 0) + c1 * c2
        return LaurentPolynomial(self.m, self.n, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, u, v) -> int:
        return self.terms.get((tuple(u), tuple(v)), 0)

    def sorted_terms(self):
        """Ascending total u-degree, lexicographically descending within a degree."""
        items = sorted(self.terms.items(), reverse=True)
        return sorted(items, key=lambda kv: sum(kv[0][0]))

    def is_symmetric_in_v(self) -> bool:
        """Invariance under permutations of v: adjacent transpositions suffice."""
        for j in range(self.n - 1):
            for (a, b), c in self.terms.items():
                sb = list(b)
                sb[j], sb[j + 1] = sb[j + 1], sb[j]
                if self.terms.get((a, tuple(sb)), 0) != c:
                    return False
        return True

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (a, b), c in self.sorted_terms():
            mono = _mono_str(a, b)
            mag = abs(c)
            body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"LaurentPolynomial({self})"


# ----------------------------------------------------------------- Schur


def _strict_row_fillings(shape: tuple[int, ...], n: int) -> Iterator[list[list[int]]]:
    """Fillings with entries in 1..n, rows strictly increasing, columns weakly increasing."""
    rows: list[list[int]] = []

    def fill_row(i: int):
        if i == len(shape):
            yield [list(r) for r in rows]
            return
        above = rows[i - 1] if i else None
        row: list[int] = []

        def place(j: int):
            if j == shape[i]:
                rows.append(list(row))
                yield from fill_row(i + 1)
                rows.pop()
                return
            lo = 1
            if row:
                lo = row[-1] + 1
            if above is not None:
                lo = max(lo, above[j])
            # leave room for the remaining boxes of this row
            for val in range(lo, n - (shape[i] - j - 1) + 1):
                row.append(val)
                yield from place(j + 1)
                row.pop()

        yield from place(0)

    yield from fill_row(0)


@lru_cache(maxsize=None)
def _schur_terms(parts: tuple[int, ...], n: int) -> tuple:
    acc: dict[tuple[int, ...], int] = {}
    for filling in _strict_row_fillings(parts, n):
        content = [0] * n
        for row in filling:
            for val in row:
                content[val - 1] += 1
        acc[tuple(content)] = acc.get(tuple(content), 0) + 1
    return tuple(sorted(acc.items()))


def schur_poly(s: Shape, n: int, m: int = 0) -> LaurentPolynomial:
    """sigma_S(v_1..v_n), embedded in the ring with m u-variables."""
    s = Shape(tuple(s))
    if s.parts and s.parts[0] > n:
        raise ShapeTooWide(f"part {s.parts[0]} exceeds the number of variables {n}")
    zero_u = (0,) * m
    return LaurentPolynomial(m, n, {(zero_u, v): c for v, c in _schur_terms(s.parts, n)})


def _format_shape(s: Shape) -> str:
    return str(s) if s.parts else "(empty)"


@dataclass
class SchurExpansion:
    """Map Shape -> u-only coefficient; the source is sum coeff_S(u) * sigma_S(v)."""

    m: int
    n: int
    coefficients: dict[Shape, LaurentPolynomial] = field(default_factory=dict)

    def shapes(self) -> list[Shape]:
        return sorted(self.coefficients, key=lambda s: s.parts)

    def reassemble(self) -> LaurentPolynomial:
        total = LaurentPolynomial(self.m, self.n)
        for s, coeff in self.coefficients.items():
            total = total + coeff * schur_poly(s, self.n, self.m)
        return total

    def __str__(self):
        lines = []
        for s in self.shapes():
            terms = []
            for (a, _), c in self.coefficients[s].sorted_terms():
                mono = _mono_str(a, ())
                mag = abs(c)
                body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else str(mag))
                terms.append(("-" if c < 0 else "+") + body)
            lines.append(f"shape {_format_shape(s)}: " + " ".join(terms))
        return "\n".join(lines)


def schur_expand(k: LaurentPolynomial) -> SchurExpansion:
    """Expand k in the basis sigma_S(v) over Laurent polynomials in u.

    For each u-exponent the v-part is symmetric; its lex-leading exponent
    alpha is a partition, and sigma_{alpha'} has leading monomial v^alpha with
    coefficient 1, so subtracting it strictly lowers the leading term.
    """
    if not k.is_symmetric_in_v():
        raise NotSymmetric("polynomial is not symmetric in the v-variables")
    m, n = k.m, k.n
    by_u: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for (a, b), c in k.terms.items():
        if any(e < 0 for e in b):
            raise NotSymmetric(f"negative v-exponent {b}; expand after clearing denominators")
        by_u.setdefault(a, {})[b] = c
    out: dict[Shape, LaurentPolynomial] = {}
    for a, vpart in by_u.items():
        rest = dict(vpart)
        while rest:
            alpha = max(rest)
            c = rest[alpha]
            shape = Shape(tuple(e for e in alpha if e)).transpose()
            for v, sc in _schur_terms(shape.parts, n):
                nv = rest.get(v, 0) - c * sc
                if nv:
                    rest[v] = nv
                else:
                    rest.pop(v, None)
            term = LaurentPolynomial(m, n, {(a, (0,) * n): c})
            out[shape] = out[shape] + term if shape in out else term
    out = {s: p for s, p in out.items() if p}
    return SchurExpansion(m, n, out)


# ------------------------------------------------------------ K-polynomials


def _bideg(e: tuple[int, ...], m: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rows = tuple(sum(e[i * n:(i + 1) * n]) for i in range(m))
    cols = tuple(sum(e[i * n + j] for i in range(m)) for j in range(n))
    return rows, cols


def taylor_lcms(ideal: MonomialIdeal, cap: int = DEFAULT_GEN_CAP) -> dict[tuple[int, ...], int]:
    """Map lcm -> sum of (-1)^|I| over generator subsets I with that lcm."""
    gens = ideal._dense
    if len(gens) > cap:
        raise TooManyGenerators(f"{len(gens)} generators exceed the cap {cap}")
    size = ideal.m * ideal.n
    acc: dict[tuple[int, ...], int] = {(0,) * size: 1}
    for g in gens:
        new = dict(acc)
        for lcm, c in acc.items():
            key = tuple(max(x, y) for x, y in zip(lcm, g))
            new[key] = new.get(key, 0) - c
        acc = {k: c for k, c in new.items() if c}
    return acc


def generator_lcm(ideal: MonomialIdeal) -> tuple[int, ...]:
    size = ideal.m * ideal.n
    out = [0] * size
    for g in ideal._dense:
        out = [max(x, y) for x, y in zip(out, g)]
    return tuple(out)


def k_polynomial(ideal: MonomialIdeal, cap: int = DEFAULT_GEN_CAP) -> LaurentPolynomial:
    """K(R/I; u, v) from the Taylor resolution."""
    m, n = ideal.m, ideal.n
    _require_tall(m, n)
    acc: dict = {}
    for lcm, c in taylor_lcms(ideal, cap).items():
        key = _bideg(lcm, m, n)
        acc[key] = acc.get(key, 0) + c
    return LaurentPolynomial(m, n, acc)


def k_polynomial_of_ideal(ideal: MonomialIdeal, cap: int = DEFAULT_GEN_CAP) -> LaurentPolynomial:
    """K(I; u, v) = 1 - K(R/I; u, v)."""
    return LaurentPolynomial.one(ideal.m, ideal.n) - k_polynomial(ideal, cap)


@lru_cache(maxsize=None)
def _count(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    if any(r < 0 for r in rows) or any(c < 0 for c in cols) or sum(rows) != sum(cols):
        return 0
    return count_monomials(rows, cols)


def check_hilbert(ideal: MonomialIdeal, bound: int, cap: int = DEFAULT_GEN_CAP,
                  monomial_cap: int = 10**6) -> Report:
    """Compare the series K(R/I)/prod(1 - u_i v_j) with direct counts of
    monomials outside I, bidegree by bidegree up to total degree ``bound``."""
    m, n = ideal.m, ideal.n
    k = k_polynomial(ideal, cap)
    rep = Report(f"hilbert-check m={m} n={n} bound={bound}")
    enumerated = 0
    for d in range(bound + 1):
        for b in bidegrees(m, n, d):
            rows, cols = b
            predicted = 0
            for (a, c), coeff in k.terms.items():
                predicted += coeff * _count(tuple(x - y for x, y in zip(rows, a)),
                                            tuple(x - y for x, y in zip(cols, c)))
            monos = dense_monomials_of_bidegree(rows, cols)
            enumerated += len(monos)
            if enumerated > monomial_cap:
                raise DegreeBoundExceeded(f"more than {monomial_cap} monomials enumerated")
            actual = sum(1 for e in monos if not ideal.contains_dense(e))
            rep.record(format_bidegree(b), predicted == actual, series=predicted, count=actual)
    return rep
