"""Exact computations with products of row-initial minor ideals of a generic matrix."""

from .errors import *  # noqa: F401,F403
from .ideals import (
    MonomialIdeal,
    betti_linear_check,
    betti_numbers,
    check_grobner_JS,
    check_primary,
    check_standard_basis,
    diag_ideal,
    generators_JS,
    initial_ideal_JS,
    irredundancy_witness,
    straighten,
)
from .krs import KrsArray, diag, extract_witness, krs, krs_array, krs_insert, krs_step
from .ktheory import (
    LaurentPolynomial,
    SchurExpansion,
    check_hilbert,
    k_polynomial,
    k_polynomial_of_ideal,
    schur_expand,
    schur_poly,
)
from .polyring import Monomial, Polynomial, expand_bitableau, expand_minor, leading_monomial
from .rees import (
    Binomial,
    LatticeElement,
    PMonomial,
    check_kernel,
    check_lift,
    degree_one_relations,
    hibi_relations,
    lattice_join,
    lattice_meet,
    phi_eval,
    psi_eval,
)
from .tableaux import Bitableau, Minor, Shape, enumerate_standard, is_standard, parse_bitableau

__version__ = "0.1.0"
