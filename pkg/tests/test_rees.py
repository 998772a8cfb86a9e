import re
from itertools import product

import pytest

from minorideals.errors import ComparablePair, DegreeBoundExceeded
from minorideals.polyring import Monomial, Polynomial
from minorideals.rees import (
    LatticeElement,
    PMonomial,
    PresentationOrder,
    check_all_lifts,
    check_kernel,
    check_lift,
    degree_one_relations,
    hibi_relations,
    kernel_generators,
    lattice_elements,
    lattice_join,
    lattice_meet,
    phi_eval,
    psi_eval,
)

L = LatticeElement
x = Monomial.var

# Reference list of the 27 kernel generators for m = n = 4.
TABLE_4x4 = r"""
x_{1,3}p_{4}- x_{1,4}p_{3}      x_{1,2}p_{4}- x_{1,4}p_{2}      x_{1,1}p_{4}- x_{1,4}p_{1}
x_{1,2}p_{3}- x_{1,3}p_{2}      x_{1,1}p_{3}- x_{1,3}p_{1}      x_{1,1}p_{2}- x_{1,2}p_{1}
x_{2,3}p_{24}- x_{2,4}p_{23}    x_{2,3}p_{14}- x_{2,4}p_{13}    x_{2,2}p_{14}- x_{2,4}p_{12}
x_{1,2}p_{34}- x_{1,3}p_{24}    x_{1,1}p_{34}- x_{1,3}p_{14}    x_{1,1}p_{24}- x_{1,2}p_{14}
x_{2,2}p_{13}- x_{2,3}p_{12}    x_{1,1}p_{23}- x_{1,2}p_{13}    x_{3,3}p_{124}- x_{3,4}p_{123}
x_{2,2}p_{134}- x_{2,3}p_{124}  x_{1,1}p_{234}- x_{1,2}p_{134}  p_{34}p_{2}- p_{24}p_{3}
p_{34}p_{1}- p_{14}p_{3}        p_{24}p_{1}- p_{14}p_{2}        p_{23}p_{1}- p_{13}p_{2}
p_{14}p_{23}- p_{13}p_{24}      p_{234}p_{1}- p_{134}p_{2}      p_{234}p_{14}- p_{134}p_{24}
p_{234}p_{13}- p_{134}p_{23}    p_{234}p_{12}- p_{124}p_{23}    p_{134}p_{12}- p_{124}p_{13}
"""

_TERM = re.compile(r"(?:x_\{(\d),(\d)\})?((?:p_\{\d+\})+)")


def _parse_term(text):
    mt = _TERM.fullmatch(text.strip())
    xs = Monomial() if mt.group(1) is None else x(int(mt.group(1)), int(mt.group(2)))
    ps = [L(tuple(int(c) for c in digits)) for digits in re.findall(r"p_\{(\d+)\}", mt.group(3))]
    return PMonomial(xs, tuple(ps))


def table_binomials():
    out = []
    for chunk in re.findall(r"\S+- \S+", TABLE_4x4):
        plus, minus = chunk.split("- ")
        out.append(frozenset((_parse_term(plus), _parse_term(minus))))
    return out


class TestLattice:
    def test_meet_join_examples(self):
        assert lattice_meet(L((2, 3, 4)), L((1, 4))) == L((1, 3, 4))
        assert lattice_join(L((2, 3, 4)), L((1, 4))) == L((2, 4))
        assert lattice_meet(L((1, 4)), L((2, 3))) == L((1, 3))
        assert lattice_join(L((1, 4)), L((2, 3))) == L((2, 4))
        a = L((1, 3))
        assert lattice_meet(a, a) == lattice_join(a, a) == a

    @pytest.mark.parametrize("m, n", [(3, 5), (4, 4), (4, 5)])
    def test_distributive_lattice(self, m, n):
        elems = lattice_elements(m, n)
        for a, b in product(elems, repeat=2):
            meet, join = lattice_meet(a, b), lattice_join(a, b)
            assert meet <= a and meet <= b and a <= join and b <= join
            assert lattice_meet(b, a) == meet and lattice_join(b, a) == join
            assert lattice_meet(a, join) == a and lattice_join(a, meet) == a
        for a, b, c in product(elems, repeat=3):
            assert lattice_meet(a, lattice_join(b, c)) == lattice_join(lattice_meet(a, b), lattice_meet(a, c))
            assert lattice_join(a, lattice_meet(b, c)) == lattice_meet(lattice_join(a, b), lattice_join(a, c))

    def test_meet_is_greatest_lower_bound(self):
        elems = lattice_elements(4, 4)
        for a, b in product(elems, repeat=2):
            lower = [c for c in elems if c <= a and c <= b]
            assert all(c <= lattice_meet(a, b) for c in lower)


class TestRelations:
    def test_small_cases(self):
        assert hibi_relations(1, 1) == [] and hibi_relations(2, 2) == []
        (only,) = degree_one_relations(2, 2)
        assert str(only) == "x[1,1]*p[2] - x[1,2]*p[1]"
        assert degree_one_relations(3, 1) == []

    def test_four_by_four_matches_table(self):
        ours = [g.terms for g in kernel_generators(4, 4)]
        theirs = table_binomials()
        assert len(theirs) == 27
        assert len(set(ours)) == len(ours) == 27
        assert set(ours) == set(theirs)
        assert len(hibi_relations(4, 4)) == 10
        assert len(degree_one_relations(4, 4)) == 17

    def test_printing(self):
        texts = {str(g) for g in kernel_generators(4, 4)}
        assert "p[3,4]*p[2] - p[2,4]*p[3]" in texts
        assert "p[2,3,4]*p[1,2] - p[1,2,4]*p[2,3]" in texts
        assert "x[1,3]*p[4] - x[1,4]*p[3]" in texts
        assert "x[2,2]*p[1,3,4] - x[2,3]*p[1,2,4]" in texts

    @pytest.mark.parametrize("m, n", [(2, 3), (3, 3), (3, 4), (4, 4), (4, 3)])
    def test_in_kernel_and_quadratic(self, m, n):
        order = PresentationOrder(m, n)
        for g in kernel_generators(m, n):
            assert phi_eval(g.plus, m) == phi_eval(g.minus, m)
            assert g.plus.p_degree <= 2
            assert len(set(g.plus.p_part)) == g.plus.p_degree  # squarefree in p
            assert order.greater(g.plus, g.minus)


class TestMaps:
    def test_phi(self):
        lhs = PMonomial(Monomial(), (L((1, 4)), L((2, 3))))
        rhs = PMonomial(Monomial(), (L((1, 3)), L((2, 4))))
        expected = x(1, 1) * x(1, 2) * x(2, 3) * x(2, 4)
        assert phi_eval(lhs, 4) == (expected, (0, 2, 0, 0)) == phi_eval(rhs, 4)
        assert phi_eval(PMonomial(x(1, 1), (L((2,)),)), 2) == (x(1, 1) * x(1, 2), (1, 0))

    def test_psi(self):
        poly, y = psi_eval(PMonomial(Monomial(), (L((1,)),)), 2)
        assert poly == Polynomial.monomial(x(1, 1)) and y == (1, 0)
        poly, y = psi_eval(PMonomial(Monomial(), (L((1, 2)),)), 2)
        assert str(poly) == "x[1,1]*x[2,2] - x[1,2]*x[2,1]" and y == (0, 1)


class TestKernelCheck:
    def test_two_by_two(self):
        rep = check_kernel(2, 2, x_degree_bound=3, p_degree_bound=3)
        assert rep.passed and rep.checked > 0

    def test_trivial(self):
        assert check_kernel(1, 1).passed

    def test_cap(self):
        with pytest.raises(DegreeBoundExceeded):
            check_kernel(4, 4, 3, 2, cap=1000)

    def test_missing_relation_is_detected(self, monkeypatch):
        """Drop one Hibi relation: the count of standard monomials overshoots."""
        import minorideals.rees as rees

        full = rees.kernel_generators(3, 3)
        monkeypatch.setattr(rees, "kernel_generators", lambda m, n: full[:-1])
        assert not rees.check_kernel(3, 3, 1, 2).passed


class TestLift:
    def test_pluecker_pair(self):
        for a, b in [(L((2, 3)), L((1, 4))), (L((1, 4)), L((2, 3)))]:
            rep = check_lift(a, b)
            assert rep.passed
            assert rep.records[0]["coefficient"] == 1
            assert len(rep.records) == 2
            assert rep.records[1]["coefficient"] == -1

    def test_comparable(self):
        with pytest.raises(ComparablePair):
            check_lift(L((1, 2)), L((3,)))

    def test_all_pairs(self):
        rep = check_all_lifts(4, 4)
        assert rep.passed
        assert rep.checked == len(hibi_relations(4, 4))
