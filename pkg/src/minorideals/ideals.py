"""The ideals J_S, their graded pieces, initial ideals and desk-scale checks.

``J_t`` is generated by the t-minors of the first t rows and ``J_S`` is the
product ``J_{s_1} ... J_{s_v}``.  Every check works one bidegree at a time:
all ideals involved are homogeneous for the Z^m + Z^n grading, so a graded
piece is a small exact linear algebra problem.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from operator import add
from typing import Iterable, Sequence

from .errors import DegreeBoundExceeded, InvalidShape, MixedDegree
from .krs import diag, krs
from .linalg import Echelon, intersect
from .polyring import (
    Monomial,
    Polynomial,
    dense_monomials_of_bidegree,
    expand_minor,
)
from .report import Report, format_bidegree
from .tableaux import (
    Bitableau,
    Minor,
    Shape,
    bidegrees,
    contains_superstandard,
    enumerate_standard,
    is_standard,
    minor_leq,
)

DEFAULT_DIM_CAP = 200_000


# ---------------------------------------------------------------- monomial ideals

def _dense_bidegree(e: Sequence[int], m: int, n: int):
    rows = tuple(sum(e[i * n:(i + 1) * n]) for i in range(m))
    cols = tuple(sum(e[j::n]) for j in range(n))
    return rows, cols


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(gens: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for g in sorted(set(gens), key=sum):
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return out


class MonomialIdeal:
    """Monomial ideal in K[x_11..x_mn] kept as its minimal generating set."""

    def __init__(self, generators: Iterable[Monomial], m: int, n: int):
        self.m, self.n = m, n
        dense = _minimalize(g.dense(m, n) for g in generators)
        self._dense = tuple(sorted(dense, reverse=True))
        self.generators = tuple(Monomial.from_dense(g, n) for g in self._dense)

    @classmethod
    def _from_dense(cls, dense: Iterable[tuple[int, ...]], m: int, n: int) -> "MonomialIdeal":
        self = cls.__new__(cls)
        self.m, self.n = m, n
        self._dense = tuple(sorted(_minimalize(dense), reverse=True))
        self.generators = tuple(Monomial.from_dense(g, n) for g in self._dense)
        return self

    def __repr__(self):
        return "(" + ", ".join(map(str, self.generators)) + ")"

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and (self.m, self.n) == (other.m, other.n)
                and set(self._dense) == set(other._dense))

    def __hash__(self):
        return hash(frozenset(self._dense))

    def _check(self, other: "MonomialIdeal"):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("monomial ideals live in different rings")

    def contains(self, mono: Monomial) -> bool:
        e = mono.dense(self.m, self.n)
        return any(_divides(g, e) for g in self._dense)

    __contains__ = contains

    def contains_dense(self, e: Sequence[int]) -> bool:
        return any(_divides(g, e) for g in self._dense)

    def truncate(self, max_degree: int) -> "MonomialIdeal":
        return MonomialIdeal._from_dense((g for g in self._dense if sum(g) <= max_degree),
                                         self.m, self.n)

    def product(self, other: "MonomialIdeal", max_degree: int | None = None) -> "MonomialIdeal":
        self._check(other)
        gens = (tuple(map(add, a, b)) for a in self._dense for b in other._dense)
        if max_degree is not None:
            gens = (g for g in gens if sum(g) <= max_degree)
        return MonomialIdeal._from_dense(gens, self.m, self.n)

    def intersect(self, other: "MonomialIdeal", max_degree: int | None = None) -> "MonomialIdeal":
        self._check(other)
        gens = (tuple(map(max, a, b)) for a in self._dense for b in other._dense)
        if max_degree is not None:
            gens = (g for g in gens if sum(g) <= max_degree)
        return MonomialIdeal._from_dense(gens, self.m, self.n)

    def power(self, k: int, max_degree: int | None = None) -> "MonomialIdeal":
        out = MonomialIdeal._from_dense([(0,) * (self.m * self.n)], self.m, self.n)
        for _ in range(k):
            out = out.product(self, max_degree)
        return out

    def equal_up_to(self, other: "MonomialIdeal", degree: int) -> bool:
        """Equality of the two ideals in all degrees <= ``degree``."""
        self._check(other)
        return ({g for g in self._dense if sum(g) <= degree}
                == {g for g in other._dense if sum(g) <= degree})

    def degrees(self) -> set[int]:
        return {sum(g) for g in self._dense}

    def piece(self, bidegree) -> set[tuple[int, ...]]:
        """Dense exponents of all monomials of the ideal in one bidegree."""
        return _ideal_piece(self._dense, self.m, self.n, bidegree)


def _ideal_piece(gens_dense, m, n, bidegree) -> set[tuple[int, ...]]:
    rows, cols = bidegree
    out: set[tuple[int, ...]] = set()
    for g in gens_dense:
        gr, gc = _dense_bidegree(g, m, n)
        rr = tuple(a - b for a, b in zip(rows, gr))
        rc = tuple(a - b for a, b in zip(cols, gc))
        if min(rr + rc, default=0) < 0:
            continue
        for w in _monos(rr, rc):
            out.add(tuple(map(add, g, w)))
    return out


def monideal_ops(op: str, *args, **kwargs):
    """Dispatcher for monomial ideal arithmetic: product, intersect, power, member, equal_up_to."""
    if op == "product":
        a, b = args
        return a.product(b, **kwargs)
    if op == "intersect":
        a, b = args
        return a.intersect(b, **kwargs)
    if op == "power":
        a, k = args
        return a.power(k, **kwargs)
    if op == "member":
        mono, ideal = args
        return ideal.contains(mono)
    if op == "equal_up_to":
        a, b, d = args
        return a.equal_up_to(b, d)
    raise ValueError(f"unknown monomial ideal operation {op!r}")


# ---------------------------------------------------------------- J_S generators

def _check_shape(m: int, n: int, s: Shape) -> None:
    if s.parts and s.parts[0] > m:
        raise InvalidShape(f"part {s.parts[0]} exceeds the number of rows {m}")


def generators_JS(m: int, n: int, s: Shape) -> list[Bitableau]:
    """All row-superstandard products [1..s_1 | c^1] ... [1..s_v | c^v]."""
    s = Shape(tuple(s))
    _check_shape(m, n, s)
    if s.parts and s.parts[0] > n:
        return []
    choices = [[Minor(tuple(range(1, si + 1)), c) for c in combinations(range(1, n + 1), si)]
               for si in s]
    return [Bitableau(tuple(fs)) for fs in product(*choices)]


@lru_cache(maxsize=None)
def _minor_dense(minor: Minor, m: int, n: int) -> dict:
    return {mono.dense(m, n): c for mono, c in expand_minor(minor).terms.items()}


def _poly_mul_dense(p: dict, q: dict) -> dict:
    out: dict = {}
    for a, c in p.items():
        for b, d in q.items():
            k = tuple(map(add, a, b))
            v = out.get(k, 0) + c * d
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def _bitableau_dense(d: Bitableau, m: int, n: int) -> dict:
    out = {(0,) * (m * n): 1}
    for f in d:
        out = _poly_mul_dense(out, _minor_dense(f, m, n))
    return out


@lru_cache(maxsize=None)
def _js_gens(m: int, n: int, parts: tuple[int, ...]):
    """Dense expanded generators of J_S with their bidegrees."""
    gens = generators_JS(m, n, Shape(parts))
    out = []
    for g in gens:
        poly = _bitableau_dense(g, m, n)
        out.append((poly, g.bidegree(m, n)))
    return tuple(out)


@lru_cache(maxsize=4096)
def _monos(rows, cols) -> tuple[tuple[int, ...], ...]:
    return tuple(dense_monomials_of_bidegree(rows, cols))


def _fits(gb, b) -> bool:
    return all(x <= y for x, y in zip(gb[0], b[0])) and all(x <= y for x, y in zip(gb[1], b[1]))


def _span_piece(gens, b, cap):
    """Echelon basis of span{g*w} in bidegree b, columns indexed in descending monomial order."""
    b = (tuple(b[0]), tuple(b[1]))
    fitting = [(p, gb) for p, gb in gens if _fits(gb, b)]
    ech = Echelon()
    if not fitting:
        return (), {}, ech
    monos = _monos(*b)
    if len(monos) > cap:
        raise DegreeBoundExceeded(f"graded piece {format_bidegree(b)} has {len(monos)} monomials > cap {cap}")
    index = {e: i for i, e in enumerate(monos)}
    full = len(monos)
    for poly, gb in fitting:
        rr = tuple(x - y for x, y in zip(b[0], gb[0]))
        rc = tuple(x - y for x, y in zip(b[1], gb[1]))
        for w in _monos(rr, rc):
            ech.add({index[tuple(map(add, e, w))]: c for e, c in poly.items()})
            if len(ech) == full:
                return monos, index, ech
    return monos, index, ech


@lru_cache(maxsize=2048)
def _js_piece(m: int, n: int, parts: tuple[int, ...], b, cap: int = DEFAULT_DIM_CAP):
    return _span_piece(_js_gens(m, n, parts), b, cap)


@lru_cache(maxsize=None)
def _js_ini(m: int, n: int, parts: tuple[int, ...], b, cap: int = DEFAULT_DIM_CAP) -> frozenset:
    monos, _, ech = _js_piece(m, n, parts, b, cap)
    return frozenset(monos[p] for p in ech.pivots)


# ---------------------------------------------------------------- graded pieces

class GradedPiece:
    """Echelon basis (leading coefficients 1, distinct leading monomials) of one graded piece."""

    def __init__(self, bidegree, basis: list[Polynomial]):
        self.bidegree = bidegree
        self.basis = basis

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def leading_monomials(self) -> set[Monomial]:
        return {max(p.terms) for p in self.basis}

    def __repr__(self):
        return f"GradedPiece({format_bidegree(self.bidegree)}, dim={self.dim})"


def _dense_gens(gens: Sequence[Polynomial], m: int, n: int):
    out = []
    for g in gens:
        if not g:
            continue
        if not g.is_homogeneous(m, n):
            raise ValueError(f"generator {g} is not bihomogeneous")
        out.append(({mono.dense(m, n): c for mono, c in g.terms.items()}, g.bidegree(m, n)))
    return out


def graded_piece(gens: Sequence[Polynomial], bidegree, m: int, n: int,
                 cap: int = DEFAULT_DIM_CAP) -> GradedPiece:
    monos, _, ech = _span_piece(_dense_gens(gens, m, n), bidegree, cap)
    basis = [Polynomial({Monomial.from_dense(monos[k], n): c for k, c in row.items()})
             for row in ech.basis()]
    return GradedPiece(bidegree, basis)


def initial_space(gens: Sequence[Polynomial], bidegree, m: int, n: int,
                  cap: int = DEFAULT_DIM_CAP) -> set[Monomial]:
    monos, _, ech = _span_piece(_dense_gens(gens, m, n), bidegree, cap)
    return {Monomial.from_dense(monos[p], n) for p in ech.pivots}


def js_initial_space(m: int, n: int, s: Shape, bidegree, cap: int = DEFAULT_DIM_CAP) -> set[Monomial]:
    b = (tuple(bidegree[0]), tuple(bidegree[1]))
    return {Monomial.from_dense(e, n) for e in _js_ini(m, n, tuple(s), b, cap)}


def js_piece_dim(m: int, n: int, s: Shape, bidegree, cap: int = DEFAULT_DIM_CAP) -> int:
    b = (tuple(bidegree[0]), tuple(bidegree[1]))
    return len(_js_piece(m, n, tuple(s), b, cap)[2])


def js_contains(m: int, n: int, s: Shape, poly: Polynomial, cap: int = DEFAULT_DIM_CAP) -> bool:
    """Membership of a bihomogeneous polynomial in J_S."""
    if not poly:
        return True
    b = poly.bidegree(m, n)
    monos, index, ech = _js_piece(m, n, tuple(s), b, cap)
    if not index:
        return False
    return ech.contains({index[mono.dense(m, n)]: c for mono, c in poly.terms.items()})


def initial_ideal_JS(m: int, n: int, s: Shape, max_degree: int,
                     cap: int = DEFAULT_DIM_CAP) -> MonomialIdeal:
    """ini(J_S) truncated at ``max_degree``, computed from graded pieces."""
    gens: list[tuple[int, ...]] = []
    parts = tuple(s)
    for d in range(max_degree + 1):
        new = []
        for b in bidegrees(m, n, d):
            for e in _js_ini(m, n, parts, b, cap):
                if not any(_divides(g, e) for g in gens):
                    new.append(e)
        gens.extend(new)
    return MonomialIdeal._from_dense(gens, m, n)


def diag_ideal(m: int, n: int, s: Shape) -> MonomialIdeal:
    """Ideal generated by the diagonals of the row-superstandard generators of J_S."""
    gens = generators_JS(m, n, s)
    if not gens:
        return MonomialIdeal([], m, n)
    return MonomialIdeal([diag(g) for g in gens], m, n)


def _default_bound(s: Shape, degree_bound):
    return s.total + 2 if degree_bound is None else degree_bound


# ---------------------------------------------------------------- checks

def check_grobner_JS(m: int, n: int, s: Shape, degree_bound: int | None = None,
                     cap: int = DEFAULT_DIM_CAP) -> Report:
    """ini(J_S) against the diagonal ideal, the product of the ini(J_{s_i}) and
    both intersection forms, bidegree by bidegree up to the bound."""
    s = Shape(tuple(s))
    _check_shape(m, n, s)
    bound = _default_bound(s, degree_bound)
    parts = tuple(s)
    rep = Report(f"grobner-check m={m} n={n} shape={s} max_degree={bound}")

    diag_dense = diag_ideal(m, n, s)._dense
    factors = [initial_ideal_JS(m, n, Shape((t,)), bound - (s.total - t), cap) for t in parts]
    prod = MonomialIdeal._from_dense([(0,) * (m * n)], m, n)
    for f in factors:
        prod = prod.product(f, bound)
    comps = s.components()
    inter_pow = inter_rect = None
    for t, e in comps:
        ini_t = initial_ideal_JS(m, n, Shape((t,)), bound - (e - 1) * t, cap)
        pw = ini_t.power(e, bound)
        rect = initial_ideal_JS(m, n, Shape((t,) * e), bound, cap)
        inter_pow = pw if inter_pow is None else inter_pow.intersect(pw, bound)
        inter_rect = rect if inter_rect is None else inter_rect.intersect(rect, bound)
    if not comps:
        inter_pow = inter_rect = prod

    for d in range(bound + 1):
        for b in bidegrees(m, n, d):
            lhs = _js_ini(m, n, parts, b, cap)
            rhs = _ideal_piece(diag_dense, m, n, b)
            checks = {
                "diag": rhs,
                "product": prod.piece(b),
                "intersection": inter_pow.piece(b),
                "intersection_rect": inter_rect.piece(b),
            }
            bad = [name for name, val in checks.items() if val != lhs]
            if bad:
                rep.record(format_bidegree(b), False, dim_lhs=len(lhs), dim_rhs=len(rhs),
                           identity=",".join(bad))
            else:
                rep.record(format_bidegree(b), True)
    rep.note(f"range: all bidegrees of total degree 0..{bound}")
    return rep


def check_standard_basis(m: int, n: int, s: Shape, degree_bound: int | None = None,
                         cap: int = DEFAULT_DIM_CAP) -> Report:
    """Standard bitableaux lying in J_S versus those containing a superstandard tableau of shape S."""
    s = Shape(tuple(s))
    _check_shape(m, n, s)
    bound = _default_bound(s, degree_bound)
    parts = tuple(s)
    rep = Report(f"standard-basis-check m={m} n={n} shape={s} max_degree={bound}")
    for d in range(bound + 1):
        for b in bidegrees(m, n, d):
            monos, index, ech = _js_piece(m, n, parts, b, cap)
            stds = enumerate_standard(m, n, b)
            predicted = {sig for sig in stds if contains_superstandard(sig, s)}
            if not len(ech):
                member = set()
            else:
                member = set()
                for sig in stds:
                    vec = {index[e]: c for e, c in _bitableau_dense(sig, m, n).items()}
                    if ech.contains(vec):
                        member.add(sig)
            ok = member == predicted and len(predicted) == len(ech)
            if ok:
                rep.record(format_bidegree(b), True)
            else:
                rep.record(format_bidegree(b), False, dim_lhs=len(member), dim_rhs=len(predicted),
                           dim_piece=len(ech))
    rep.note(f"range: all bidegrees of total degree 0..{bound}")
    return rep


def _rect(t: int, e: int) -> tuple[int, ...]:
    return (t,) * e


def check_primary(m: int, n: int, s: Shape, degree_bound: int | None = None,
                  cap: int = DEFAULT_DIM_CAP) -> Report:
    """J_S against the intersection of the powers J_{t_i}^{e_i}, plus irredundancy witnesses."""
    s = Shape(tuple(s))
    _check_shape(m, n, s)
    bound = _default_bound(s, degree_bound)
    parts = tuple(s)
    comps = s.components()
    rep = Report(f"primary-check m={m} n={n} shape={s} max_degree={bound}")
    rep.note("components: " + " ".join(f"J_{t}^{e}" for t, e in comps))
    for d in range(bound + 1):
        for b in bidegrees(m, n, d):
            _, _, ech_s = _js_piece(m, n, parts, b, cap)
            pieces = [_js_piece(m, n, _rect(t, e), b, cap)[2] for t, e in comps]
            if not pieces:
                rep.record(format_bidegree(b), True)
                continue
            inter = pieces[0].basis()
            for ech in pieces[1:]:
                if not inter:
                    break
                inter = intersect(ech, inter)
            contained = all(ech.contains(row) for ech in pieces for row in ech_s.basis())
            ok = contained and len(inter) == len(ech_s)
            if ok:
                rep.record(format_bidegree(b), True)
            else:
                rep.record(format_bidegree(b), False, dim_lhs=len(ech_s), dim_rhs=len(inter),
                           contained=contained)
    if len(comps) > 1:
        for k, (t, e) in enumerate(comps):
            wit = _irredundancy_witness(m, n, comps, k, bound, cap)
            if wit is None:
                rep.note(f"irredundancy J_{t}^{e}: inconclusive up to degree {bound}")
            else:
                rep.note(f"irredundancy J_{t}^{e}: witness {wit}")
    return rep


def irredundancy_witness(m: int, n: int, s: Shape, k: int, degree_bound: int | None = None,
                         cap: int = DEFAULT_DIM_CAP) -> Bitableau | None:
    """Standard bitableau in every component J_{t_i}^{e_i} except the k-th (0-based)."""
    s = Shape(tuple(s))
    return _irredundancy_witness(m, n, s.components(), k, _default_bound(s, degree_bound), cap)


def _irredundancy_witness(m, n, comps, k, bound, cap):
    for d in range(bound + 1):
        for b in bidegrees(m, n, d):
            pieces = [_js_piece(m, n, _rect(t, e), b, cap) for t, e in comps]
            if not all(len(p[2]) for j, p in enumerate(pieces) if j != k):
                continue
            index = pieces[0][1] or next((p[1] for p in pieces if p[1]), None)
            for sig in enumerate_standard(m, n, b):
                dense = _bitableau_dense(sig, m, n)
                vecs = []
                for p in pieces:
                    vecs.append({p[1][e]: c for e, c in dense.items()} if p[1] else None)
                inside = [vecs[j] is not None and pieces[j][2].contains(vecs[j])
                          for j in range(len(pieces))]
                if not inside[k] and all(inside[j] for j in range(len(pieces)) if j != k):
                    return sig
    return None


# ---------------------------------------------------------------- straightening

@lru_cache(maxsize=256)
def _standard_echelon(m: int, n: int, b):
    stds = enumerate_standard(m, n, b)
    monos = _monos(*b)
    index = {e: i for i, e in enumerate(monos)}
    ech = Echelon(track=True)
    for k, sig in enumerate(stds):
        dep = ech.add({index[e]: c for e, c in _bitableau_dense(sig, m, n).items()}, tag=k)
        if dep is not None:
            raise AssertionError("standard bitableaux are linearly dependent")
    return stds, index, ech


def straighten(d: Bitableau, m: int | None = None, n: int | None = None) -> dict[Bitableau, object]:
    """Standard representation of a product of minors: {standard bitableau: coefficient}."""
    if not len(d):
        return {d: 1}
    m = m or max(max(f.rows) for f in d)
    n = n or max(max(f.cols) for f in d)
    if is_standard(d):
        return {d: 1}
    b = d.bidegree(m, n)
    stds, index, ech = _standard_echelon(m, n, b)
    coeffs = ech.express({index[e]: c for e, c in _bitableau_dense(d, m, n).items()})
    if coeffs is None:
        raise AssertionError("standard bitableaux do not span the graded piece")
    return {stds[k]: c for k, c in sorted(coeffs.items()) if c}


# ---------------------------------------------------------------- Betti numbers

def _lcm_lattice(gens: Sequence[tuple[int, ...]], bound: int) -> set[tuple[int, ...]]:
    seen = {g for g in gens if sum(g) <= bound}
    frontier = list(seen)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = tuple(map(max, a, g))
                if sum(c) <= bound and c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return seen


def _upper_koszul_homology(b: tuple[int, ...], gens: Sequence[tuple[int, ...]]) -> dict[int, int]:
    """dim H~_i of K^b(I) = {F squarefree, F subset supp(b): x^(b-F) in I}, by dimension i."""
    support = [k for k, e in enumerate(b) if e]
    faces_by_dim: dict[int, list[tuple[int, ...]]] = {}
    for r in range(len(support) + 1):
        for face in combinations(support, r):
            e = list(b)
            for k in face:
                e[k] -= 1
            if any(_divides(g, e) for g in gens):
                faces_by_dim.setdefault(r - 1, []).append(face)
    if not faces_by_dim:
        return {}
    index = {dim: {f: i for i, f in enumerate(fs)} for dim, fs in faces_by_dim.items()}
    ranks: dict[int, int] = {}
    for dim, fs in faces_by_dim.items():
        if dim < 0 or (dim - 1) not in index:
            ranks[dim] = 0
            continue
        lower = index[dim - 1]
        ech = Echelon()
        for f in fs:
            vec = {}
            for k in range(len(f)):
                vec[lower[f[:k] + f[k + 1:]]] = -1 if k % 2 else 1
            ech.add(vec)
        ranks[dim] = len(ech)
    out = {}
    for dim, fs in faces_by_dim.items():
        h = len(fs) - ranks.get(dim, 0) - ranks.get(dim + 1, 0)
        if h:
            out[dim] = h
    return out


def betti_numbers(ideal: MonomialIdeal, multidegree_bound: int) -> dict[tuple[int, tuple[int, ...]], int]:
    """Multigraded Betti numbers beta_{i,b} of the ideal, |b| <= bound.

    beta_{i,b} = dim H~_{i-1}(K^b); only lcms of generators can carry Betti numbers.
    """
    gens = ideal._dense
    out = {}
    for b in _lcm_lattice(gens, multidegree_bound):
        for dim, h in _upper_koszul_homology(b, gens).items():
            out[(dim + 1, b)] = h
    return out


def betti_linear_check(ideal: MonomialIdeal, multidegree_bound: int) -> Report:
    degs = ideal.degrees()
    if len(degs) != 1:
        raise MixedDegree(f"generators in degrees {sorted(degs)}")
    g = degs.pop()
    rep = Report(f"betti-check gens={len(ideal.generators)} degree={g} bound={multidegree_bound}",
                 unit="MULTIDEGREES")
    betti = betti_numbers(ideal, multidegree_bound)
    for (i, b), beta in sorted(betti.items(), key=lambda kv: (sum(kv[0][1]), kv[0][0], kv[0][1])):
        mono = Monomial.from_dense(b, ideal.n)
        rep.record(f"b={mono}", sum(b) == g + i, i=i, beta=beta, degree=sum(b))
    totals: dict[int, int] = {}
    for (i, _), beta in betti.items():
        totals[i] = totals.get(i, 0) + beta
    rep.note("total betti: " + " ".join(f"beta_{i}={v}" for i, v in sorted(totals.items())))
    return rep


# ---------------------------------------------------------------- KRS linkage

def krs_images_of_standard_basis(m: int, n: int, s: Shape, bidegree) -> set[Monomial]:
    """{krs(Sigma)} over standard bitableaux of the bidegree containing a superstandard tableau of shape s."""
    return {krs(sig) for sig in enumerate_standard(m, n, bidegree) if contains_superstandard(sig, s)}


def straightening_respects_order(d: Bitableau) -> bool:
    """For a non-standard product of two minors d1*d2, every summand e*h of its
    standard representation satisfies e < d1, d2 < h (h may be empty)."""
    if len(d) != 2 or is_standard(d):
        raise ValueError("expects a non-standard product of two minors")
    d1, d2 = d
    for sig in straighten(d):
        e = sig[0]
        h = sig[1] if len(sig) > 1 else None
        if not (minor_leq(e, d1) and minor_leq(e, d2) and e != d1 and e != d2):
            return False
        if h is not None and not (minor_leq(d1, h) and minor_leq(d2, h) and h != d1 and h != d2):
            return False
        if len(sig) > 2:
            return False
    return True
