from itertools import combinations

import pytest

from minorideals.errors import InvalidShape, MixedDegree
from minorideals.ideals import (
    MonomialIdeal,
    betti_linear_check,
    betti_numbers,
    check_grobner_JS,
    check_primary,
    check_standard_basis,
    diag_ideal,
    generators_JS,
    graded_piece,
    initial_ideal_JS,
    initial_space,
    irredundancy_witness,
    js_contains,
    js_initial_space,
    js_piece_dim,
    krs_images_of_standard_basis,
    monideal_ops,
    straighten,
    straightening_respects_order,
)
from minorideals.krs import diag
from minorideals.polyring import Monomial, Polynomial, expand_bitableau, monomials_of_bidegree
from minorideals.tableaux import (
    Bitableau,
    Minor,
    Shape,
    bidegrees,
    contains_superstandard,
    enumerate_standard,
    is_standard,
    parse_bitableau,
)

x = Monomial.var


def B(text):
    return parse_bitableau(text)


def P(text):
    return expand_bitableau(B(text))


def minors_polys(texts):
    return [P(t) for t in texts]


J1_22 = minors_polys(["[1|1]", "[1|2]"])
J2_22 = minors_polys(["[1 2|1 2]"])


class TestMonomialIdeal:
    def test_minimalization(self):
        ideal = MonomialIdeal([x(1, 1), x(1, 1) * x(1, 2), x(2, 2, 2)], 2, 2)
        assert set(ideal.generators) == {x(1, 1), x(2, 2, 2)}

    def test_ops(self):
        a, b = MonomialIdeal([x(1, 1)], 2, 2), MonomialIdeal([x(1, 2)], 2, 2)
        assert monideal_ops("intersect", a, b) == MonomialIdeal([x(1, 1) * x(1, 2)], 2, 2)
        assert monideal_ops("member", x(1, 1, 2) * x(1, 2), MonomialIdeal([x(1, 1) * x(1, 2)], 2, 2))
        ini_j2 = MonomialIdeal([x(1, 1) * x(2, 2)], 2, 2)
        ini_j1 = MonomialIdeal([x(1, 1), x(1, 2)], 2, 2)
        prod = monideal_ops("product", ini_j2, ini_j1)
        assert prod == MonomialIdeal([x(1, 1, 2) * x(2, 2), x(1, 1) * x(1, 2) * x(2, 2)], 2, 2)
        assert monideal_ops("power", ini_j1, 2) == MonomialIdeal([x(1, 1, 2), x(1, 1) * x(1, 2), x(1, 2, 2)], 2, 2)
        assert monideal_ops("equal_up_to", prod, ini_j2, 2) is False
        with pytest.raises(ValueError):
            monideal_ops("frobnicate", a)


class TestGenerators:
    def test_counts(self):
        assert len(generators_JS(3, 3, Shape((2, 1)))) == 9
        assert generators_JS(2, 2, Shape((2,))) == [B("[1 2|1 2]")]
        assert generators_JS(2, 1, Shape((2,))) == []

    def test_generators_are_superstandard(self):
        for s in [(1,), (2, 1), (3, 2), (2, 2, 1)]:
            for g in generators_JS(3, 3, Shape(s)):
                assert contains_superstandard(g, Shape(s))

    def test_shape_too_tall(self):
        with pytest.raises(InvalidShape):
            generators_JS(2, 3, Shape((3,)))


class TestGradedPieces:
    def test_examples(self):
        gp = graded_piece(J1_22, ((1, 0), (0, 1)), 2, 2)
        assert [str(p) for p in gp.basis] == ["x[1,2]"]
        gp = graded_piece(J2_22, ((1, 1), (1, 1)), 2, 2)
        assert gp.basis == [P("[1 2|1 2]")]
        assert initial_space(J2_22, ((1, 1), (1, 1)), 2, 2) == {x(1, 1) * x(2, 2)}
        assert initial_space(J2_22, ((2, 0), (1, 1)), 2, 2) == set()

    def test_dimension_counts_standard_basis(self):
        s = Shape((2, 1))
        for b in bidegrees(3, 3, 3):
            expected = sum(1 for t in enumerate_standard(3, 3, b) if contains_superstandard(t, s))
            assert js_piece_dim(3, 3, s, b) == expected

    def test_initial_space_by_brute_force(self):
        s = Shape((2, 1))
        b = ((2, 1, 0), (1, 1, 1))
        diags = [diag(g) for g in generators_JS(3, 3, s)]
        expected = {w for w in monomials_of_bidegree(*b) if any(d.divides(w) for d in diags)}
        assert js_initial_space(3, 3, s, b) == expected
        gens = [expand_bitableau(g) for g in generators_JS(3, 3, s)]
        assert initial_space(gens, b, 3, 3) == expected

    def test_membership(self):
        s = Shape((2,))
        assert js_contains(3, 3, s, P("[1 2|1 2]") * Polynomial.monomial(x(3, 3)))
        assert not js_contains(3, 3, s, P("[2 3|1 2]"))

    def test_krs_linkage(self):
        s = Shape((2, 1))
        for b in bidegrees(3, 3, 4):
            assert krs_images_of_standard_basis(3, 3, s, b) == js_initial_space(3, 3, s, b)


class TestGrobner:
    def test_principal(self):
        rep = check_grobner_JS(2, 2, Shape((2,)), 4)
        assert rep.passed and rep.checked > 0
        assert initial_ideal_JS(2, 2, Shape((2,)), 4) == MonomialIdeal([x(1, 1) * x(2, 2)], 2, 2)

    def test_two_one(self):
        rep = check_grobner_JS(3, 3, Shape((2, 1)), 5)
        assert rep.passed, rep.failing()[:3]
        assert rep.summary().endswith("0 FAILURES")

    def test_three_two_product(self):
        rep = check_grobner_JS(3, 3, Shape((3, 2)), 6)
        assert rep.passed
        ini = initial_ideal_JS(3, 3, Shape((3, 2)), 6)
        prod = initial_ideal_JS(3, 3, Shape((3,)), 6).product(initial_ideal_JS(3, 3, Shape((2,)), 6), 6)
        assert ini == prod == diag_ideal(3, 3, Shape((3, 2)))

    def test_negative_control(self):
        """Two of the three 2-minors of a 2x3 matrix: their leading terms do not
        generate the initial ideal, and the same comparison must notice."""
        gens = [B("[1 2|1 2]"), B("[1 2|1 3]")]
        polys = [expand_bitableau(g) for g in gens]
        leads = MonomialIdeal([diag(g) for g in gens], 2, 3)
        b = ((1, 2), (1, 1, 1))
        ini = initial_space(polys, b, 2, 3)
        from_leads = {w for w in monomials_of_bidegree(*b) if w in leads}
        assert ini != from_leads
        assert x(1, 2) * x(2, 1) * x(2, 3) in ini - from_leads


class TestStandardBasis:
    def test_linear(self):
        assert check_standard_basis(2, 2, Shape((1,)), 1).passed
        s = Shape((1,))
        inside = {t for b in bidegrees(2, 2, 1)
                  for t in enumerate_standard(2, 2, b) if contains_superstandard(t, s)}
        assert inside == {B("[1|1]"), B("[1|2]")}

    def test_two_by_two_determinant(self):
        s = Shape((2,))
        assert js_contains(2, 2, s, P("[1 2|1 2]"))
        assert not js_contains(2, 2, s, P("[1|1]*[2|2]"))
        assert check_standard_basis(2, 2, s, 4).passed

    def test_two_one(self):
        assert check_standard_basis(3, 3, Shape((2, 1)), 4).passed


class TestPrimary:
    def test_two_one(self):
        rep = check_primary(3, 3, Shape((2, 1)), 4)
        assert rep.passed

    def test_single_component(self):
        assert Shape((2, 2)).components() == [(2, 2)]
        assert check_primary(3, 3, Shape((2, 2)), 5).passed

    def test_two_two_one(self):
        assert check_primary(3, 3, Shape((2, 2, 1)), 5).passed

    @pytest.mark.parametrize("shape", [(2, 1), (2, 2, 1)])
    def test_irredundancy_witnesses(self, shape):
        s = Shape(shape)
        for k in range(len(s.components())):
            w = irredundancy_witness(3, 3, s, k)
            assert w is not None


class TestStraighten:
    def test_standard_input(self):
        d = B("[1 2|1 2]*[1|1]")
        assert straighten(d) == {d: 1}

    def test_pluecker(self):
        assert straighten(B("[1,2|2,3]*[1,2|1,4]")) == {
            B("[1,2|1,3]*[1,2|2,4]"): 1,
            B("[1,2|1,2]*[1,2|3,4]"): -1,
        }

    def test_order_constraints(self):
        d = B("[1|2]*[2|1]")
        rep = straighten(d)
        total = Polynomial()
        for t, c in rep.items():
            total = total + expand_bitableau(t) * c
            assert isinstance(c, int)
        assert total == expand_bitableau(d)
        assert straightening_respects_order(d)

    def test_order_constraints_sweep(self):
        minors = [Minor(r, c) for t in (1, 2)
                  for r in combinations((1, 2, 3), t) for c in combinations((1, 2, 3), t)]
        for a in minors:
            for b in minors:
                d = Bitableau((a, b))
                if not is_standard(d):
                    assert straightening_respects_order(d), d


class TestBetti:
    def test_two_variables(self):
        ideal = MonomialIdeal([x(1, 1), x(1, 2)], 2, 2)
        betti = betti_numbers(ideal, 4)
        assert betti == {(0, x(1, 1).dense(2, 2)): 1, (0, x(1, 2).dense(2, 2)): 1,
                         (1, (x(1, 1) * x(1, 2)).dense(2, 2)): 1}
        assert betti_linear_check(ideal, 4).passed

    def test_mixed_degree(self):
        with pytest.raises(MixedDegree):
            betti_linear_check(MonomialIdeal([x(1, 1), x(2, 2, 2)], 2, 2), 4)

    def test_non_linear_detected(self):
        # (x11 x12, x21 x22): the syzygy sits in degree 4, off the linear strand
        ideal = MonomialIdeal([x(1, 1) * x(1, 2), x(2, 1) * x(2, 2)], 2, 2)
        assert not betti_linear_check(ideal, 4).passed

    def test_two_one_linear(self):
        ideal = initial_ideal_JS(3, 3, Shape((2, 1)), 3)
        rep = betti_linear_check(ideal, 8)
        assert rep.passed
