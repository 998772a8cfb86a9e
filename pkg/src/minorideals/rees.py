"""Toric presentation of the multi-Rees algebra of J_1, .., J_m.

The lattice A consists of the row-initial minors [a_1 .. a_s] = [1..s | a_1..a_s].
Each a in A gets a variable p[a]; Phi sends p[a] to diag([a]) * y_s and Psi sends
it to the minor itself times y_s.  The kernel of Phi is generated by the Hibi
relations of A and by relations of degree one in the p's.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from math import comb

from .errors import ComparablePair, DegreeBoundExceeded
from .ideals import straighten
from .krs import diag
from .polyring import Monomial, Polynomial, expand_bitableau, leading_monomial, monomials_of_degree
from .report import Report
from .tableaux import Bitableau, Minor, minor_leq


@dataclass(frozen=True)
class LatticeElement:
    cols: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(self.cols)
        object.__setattr__(self, "cols", cols)
        if not cols or any(cols[i] >= cols[i + 1] for i in range(len(cols) - 1)) or cols[0] < 1:
            raise ValueError(f"not a lattice element: {cols}")

    @property
    def size(self) -> int:
        return len(self.cols)

    @cached_property
    def minor(self) -> Minor:
        return Minor(tuple(range(1, self.size + 1)), self.cols)

    @property
    def key(self):
        # linear extension of the poset: larger size first, then colex
        return (-self.size, self.cols[::-1])

    def __le__(self, other: "LatticeElement") -> bool:
        return minor_leq(self.minor, other.minor)

    def __lt__(self, other: "LatticeElement") -> bool:
        return self != other and self <= other

    def comparable(self, other: "LatticeElement") -> bool:
        return self <= other or other <= self

    def __str__(self):
        return "p[" + ",".join(map(str, self.cols)) + "]"

    __repr__ = __str__


def lattice_elements(m: int, n: int) -> list[LatticeElement]:
    out = [LatticeElement(c) for s in range(1, min(m, n) + 1)
           for c in combinations(range(1, n + 1), s)]
    return sorted(out, key=lambda a: a.key)


def lattice_meet(a: LatticeElement, b: LatticeElement) -> LatticeElement:
    if b.size > a.size:
        a, b = b, a
    r = b.size
    cols = tuple(min(x, y) for x, y in zip(a.cols, b.cols)) + a.cols[r:]
    return LatticeElement(cols)


def lattice_join(a: LatticeElement, b: LatticeElement) -> LatticeElement:
    if b.size > a.size:
        a, b = b, a
    return LatticeElement(tuple(max(x, y) for x, y in zip(a.cols, b.cols)))


def _p_sort(ps):
    return tuple(sorted(ps, key=lambda a: (-a.size, a.cols)))


@dataclass(frozen=True)
class PMonomial:
    x_part: Monomial
    p_part: tuple[LatticeElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "p_part", _p_sort(self.p_part))

    def __mul__(self, other: "PMonomial") -> "PMonomial":
        return PMonomial(self.x_part * other.x_part, self.p_part + other.p_part)

    def divides(self, other: "PMonomial") -> bool:
        if not self.x_part.divides(other.x_part):
            return False
        have = Counter(other.p_part)
        return all(have[a] >= k for a, k in Counter(self.p_part).items())

    @property
    def p_degree(self) -> int:
        return len(self.p_part)

    def multidegree(self, m: int) -> tuple[int, ...]:
        """(x-degree, number of p's of size 1, .., of size m)."""
        counts = [0] * m
        for a in self.p_part:
            counts[a.size - 1] += 1
        return (self.x_part.degree, *counts)

    def __str__(self):
        parts = [] if self.x_part == Monomial() else [str(self.x_part)]
        parts += [str(a) for a in self.p_part]
        return "*".join(parts) if parts else "1"

    __repr__ = __str__


@dataclass(frozen=True)
class Binomial:
    """plus - minus; ``plus`` is the underlined (initial) term."""

    plus: PMonomial
    minus: PMonomial

    def __str__(self):
        return f"{self.plus} - {self.minus}"

    __repr__ = __str__

    @property
    def terms(self) -> frozenset:
        return frozenset((self.plus, self.minus))


def hibi_relations(m: int, n: int) -> list[Binomial]:
    out = []
    elems = lattice_elements(m, n)
    for a, b in combinations(elems, 2):
        if not a.comparable(b):
            out.append(Binomial(PMonomial(Monomial(), (a, b)),
                                PMonomial(Monomial(), (lattice_meet(a, b), lattice_join(a, b)))))
    return out


def degree_one_relations(m: int, n: int) -> list[Binomial]:
    out = []
    for a in lattice_elements(m, n):
        for i in range(1, a.size + 1):
            lo = a.cols[i - 2] if i > 1 else 0
            ai = a.cols[i - 1]
            for j in range(lo + 1, ai):
                b = LatticeElement(a.cols[:i - 1] + (j,) + a.cols[i:])
                out.append(Binomial(PMonomial(Monomial.var(i, j), (a,)),
                                    PMonomial(Monomial.var(i, ai), (b,))))
    return out


def kernel_generators(m: int, n: int) -> list[Binomial]:
    return degree_one_relations(m, n) + hibi_relations(m, n)


def phi_eval(pm: PMonomial, m: int) -> tuple[Monomial, tuple[int, ...]]:
    """Phi(pm) as (x-monomial, y exponents indexed by size 1..m)."""
    x = pm.x_part
    y = [0] * m
    for a in pm.p_part:
        x = x * diag(Bitableau((a.minor,)))
        y[a.size - 1] += 1
    return x, tuple(y)


def psi_eval(pm: PMonomial, m: int) -> tuple[Polynomial, tuple[int, ...]]:
    """Psi(pm) as (x-polynomial, y exponents)."""
    poly = Polynomial.monomial(pm.x_part) * expand_bitableau(Bitableau(tuple(a.minor for a in pm.p_part)))
    y = [0] * m
    for a in pm.p_part:
        y[a.size - 1] += 1
    return poly, tuple(y)


class PresentationOrder:
    """Graded reverse lexicographic order on P.

    Variables from largest to smallest: x[1,1] > .. > x[m,n], then the p[a] in
    descending order of the linear extension (size descending, then colex) of A.
    Every x is larger than every p.
    """

    def __init__(self, m: int, n: int):
        self.m, self.n = m, n
        self.elems = lattice_elements(m, n)
        self.p_pos = {a: i for i, a in enumerate(reversed(self.elems))}

    def exponent_vector(self, pm: PMonomial) -> list[int]:
        vec = list(pm.x_part.dense(self.m, self.n)) + [0] * len(self.elems)
        base = self.m * self.n
        for a in pm.p_part:
            vec[base + self.p_pos[a]] += 1
        return vec

    def greater(self, u: PMonomial, w: PMonomial) -> bool:
        eu, ew = self.exponent_vector(u), self.exponent_vector(w)
        if sum(eu) != sum(ew):
            return sum(eu) > sum(ew)
        for x, y in zip(reversed(eu), reversed(ew)):
            if x != y:
                return x < y
        return False


def normal_form_conditions(pm: PMonomial) -> bool:
    """p-part is a chain of A and every x[i,j] of the x-part avoids a_{k,i-1} < j < a_{k,i}."""
    ps = sorted(pm.p_part, key=lambda a: a.key)
    if any(not (ps[k] <= ps[k + 1]) for k in range(len(ps) - 1)):
        return False
    for (i, j), _ in pm.x_part.items:
        for a in ps:
            if i > a.size:
                continue
            lo = a.cols[i - 2] if i > 1 else 0
            if lo < j < a.cols[i - 1]:
                return False
    return True


def check_kernel(m: int, n: int, x_degree_bound: int = 3, p_degree_bound: int = 2,
                 cap: int = 2_000_000) -> Report:
    """Binomials lie in Ker Phi, and per multidegree the number of monomials
    outside the ideal of underlined terms equals the number of Phi-images.

    ``cap`` bounds the number of monomials of P enumerated in total.
    """
    n_elems = sum(comb(n, s) for s in range(1, min(m, n) + 1))
    total = comb(m * n + x_degree_bound, x_degree_bound) * comb(n_elems + p_degree_bound, p_degree_bound)
    if total > cap:
        raise DegreeBoundExceeded(f"kernel sweep would enumerate {total} monomials > cap {cap}")
    rep = Report(f"kernel-check m={m} n={n} x_degree<={x_degree_bound} p_degree<={p_degree_bound}",
                 unit="MULTIDEGREES")
    gens = kernel_generators(m, n)
    order = PresentationOrder(m, n)
    for g in gens:
        if phi_eval(g.plus, m) != phi_eval(g.minus, m):
            rep.record(f"relation {g}", False, reason="not_in_kernel")
        if not order.greater(g.plus, g.minus):
            rep.record(f"relation {g}", False, reason="underlined_term_not_initial")
    if any(g.plus.p_degree > 2 for g in gens):
        rep.note("relations of p-degree > 2 present")

    leads_by_p: dict[tuple, list[Monomial]] = {}
    for g in gens:
        leads_by_p.setdefault(tuple(sorted(g.plus.p_part, key=lambda a: a.key)), []).append(g.plus.x_part)

    def is_standard(u: Monomial, ps: tuple) -> bool:
        for r in range(len(ps) + 1):
            for sub in set(combinations(ps, r)):
                for x in leads_by_p.get(sub, ()):
                    if x.divides(u):
                        return False
        return True

    elems = lattice_elements(m, n)
    diag_dense = {a: diag(Bitableau((a.minor,))).dense(m, n) for a in elems}
    xmonos = {d: [(u, u.dense(m, n)) for u in monomials_of_degree(m, n, d)]
              for d in range(x_degree_bound + 1)}
    for e in range(p_degree_bound + 1):
        by_sizes: dict[tuple[int, ...], list[tuple]] = {}
        for ps in combinations_with_replacement(elems, e):
            sizes = [0] * m
            for a in ps:
                sizes[a.size - 1] += 1
            by_sizes.setdefault(tuple(sizes), []).append(ps)
        for sizes in sorted(by_sizes, reverse=True):
            for d in range(x_degree_bound + 1):
                standard = 0
                images = set()
                nf_ok = True
                for ps in by_sizes[sizes]:
                    pdense = [0] * (m * n)
                    for a in ps:
                        pdense = [x + y for x, y in zip(pdense, diag_dense[a])]
                    for u, ud in xmonos[d]:
                        images.add(tuple(x + y for x, y in zip(ud, pdense)))
                        if is_standard(u, ps):
                            standard += 1
                            if not normal_form_conditions(PMonomial(u, ps)):
                                nf_ok = False
                label = f"x={d} p=({','.join(map(str, sizes))})"
                rep.record(label, standard == len(images) and nf_ok,
                           standard=standard, images=len(images))
    return rep


def check_lift(a: LatticeElement, b: LatticeElement) -> Report:
    """Straighten [a][b]; the meet-join product must occur and every other
    summand must have a strictly smaller leading monomial."""
    if a.comparable(b):
        raise ComparablePair(f"{a} and {b} are comparable")
    prod = Bitableau((a.minor, b.minor))
    rep = Report(f"lift-check {a}*{b}", unit="SUMMANDS")
    rep_std = straighten(prod)
    lead = leading_monomial(expand_bitableau(prod))
    mj = Bitableau((lattice_meet(a, b).minor, lattice_join(a, b).minor))
    coeff = rep_std.get(mj, 0)
    rep.record(f"meet_join {mj}", coeff != 0, coefficient=coeff)
    if coeff not in (0, 1):
        rep.note(f"meet-join coefficient is {coeff}, not 1")
    for sig, c in rep_std.items():
        if sig == mj:
            continue
        sl = leading_monomial(expand_bitableau(sig))
        rep.record(f"summand {sig}", sl < lead, coefficient=c, lead=sl)
    rep.note("lifted relation: " + " ".join(
        f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}{sig}" for sig, c in rep_std.items()))
    return rep


def check_all_lifts(m: int, n: int) -> Report:
    rep = Report(f"lift-check m={m} n={n}", unit="PAIRS")
    for g in hibi_relations(m, n):
        a, b = g.plus.p_part
        sub = check_lift(a, b)
        coeff = sub.records[0]["coefficient"]
        rep.record(str(g), sub.passed, coefficient=coeff, summands=len(sub.records))
    return rep
