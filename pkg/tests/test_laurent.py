from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schubert_sl2 import (
    GradedPoly,
    LaurentPoly,
    NotDivisible,
    Weight,
    ZeroInput,
    exact_div,
    exp,
    lowest_graded_part,
)

A0 = Weight(1, 0)
A1 = Weight(0, 1)
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()


def lp(*terms):
    return LaurentPoly({Weight(a, b): c for a, b, c in terms})


# -- strategies ---------------------------------------------------------------

coeffs = st.integers(min_value=-50, max_value=50)
weights = st.tuples(st.integers(-5, 5), st.integers(-5, 5))
laurents = st.lists(st.tuples(weights, coeffs), max_size=20).map(LaurentPoly)
laurents_nonzero = laurents.filter(bool)


# -- addition -----------------------------------------------------------------

def test_add_additive_inverse():
    assert exp(A0) + LaurentPoly.monomial(-1, A0) == ZERO


def test_add_divisor_diagonal():
    # 1 - e^{q_1} with q_1 = alpha0
    assert ONE + LaurentPoly.monomial(-1, A0) == lp((0, 0, 1), (1, 0, -1))


def test_add_merges_like_terms():
    assert (exp(A1) - ONE) + (exp(A1) + ONE) == lp((0, 1, 2))


# -- multiplication -----------------------------------------------------------

def test_mul_base_two_two():
    left = exp(A1) - ONE
    right = exp(Weight(1, 2)) - ONE
    assert left * right == lp((1, 3, 1), (1, 2, -1), (0, 1, -1), (0, 0, 1))


def test_mul_identity():
    p = lp((2, -1, 3), (0, 0, -7))
    assert p * ONE == p


def test_mul_four_unit_terms():
    product = (exp(A0) - ONE) * (exp(Weight(3, 2)) - ONE)
    assert product == lp((4, 2, 1), (3, 2, -1), (1, 0, -1), (0, 0, 1))


# -- exact division -----------------------------------------------------------

def test_div_self():
    d = exp(Weight(1, 2)) - exp(A0)  # e^{q_2} - e^{q_1}
    assert exact_div(d, d) == ONE


def test_div_geometric():
    gamma = Weight(1, 2)
    assert exact_div(exp(2 * gamma) - ONE, exp(gamma) - ONE) == exp(gamma) + ONE


def test_div_not_divisible():
    with pytest.raises(NotDivisible):
        exact_div(exp(A0) - exp(A1), exp(A0) - ONE)


def test_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        exact_div(ONE, ZERO)


def test_div_monomial_and_general_divisors():
    p = lp((1, 1, 6), (0, -2, -4))
    assert exact_div(p, lp((1, 0, 2))) == lp((0, 1, 3), (-1, -2, -2))
    d = lp((0, 0, 1), (1, 0, 1), (0, 1, 1))  # three terms: general path
    assert exact_div(p * d, d) == p


# -- evaluation at 1 ----------------------------------------------------------

def test_eval_one_divisor_column():
    assert lp((1, 0, 1), (1, 1, 1)).eval_one() == 2


def test_eval_one_zero():
    assert ZERO.eval_one() == 0


def test_eval_one_diagonal():
    assert (ONE - exp(Weight(4, 2))).eval_one() == 0  # 1 - e^{q_3}


# -- lowest graded part -------------------------------------------------------

def test_lowest_graded_linear():
    got = lowest_graded_part(ONE - exp(Weight(1, 2)))
    assert got == GradedPoly({(1, 0): -1, (0, 1): -2})
    assert got.is_homogeneous_of_degree(1)


def test_lowest_graded_product_of_linears():
    p = (exp(A1) - ONE) * (exp(Weight(1, 2)) - ONE)
    assert lowest_graded_part(p) == GradedPoly({(1, 1): 1, (0, 2): 2})


def test_lowest_graded_constant():
    assert lowest_graded_part(exp(A0)) == GradedPoly.const(1)


def test_lowest_graded_zero_input():
    with pytest.raises(ZeroInput):
        lowest_graded_part(ZERO)


def test_lowest_graded_high_order_cancellation():
    # constant and linear moments cancel; first surviving degree is 2
    p = exp(Weight(1, 0)) + exp(Weight(-1, 0)) - 2 * ONE
    got = lowest_graded_part(p)
    assert got == GradedPoly({(2, 0): 1})


# -- canonical text form ------------------------------------------------------

def test_text_round_trip_golden():
    p = lp((1, 0, 1), (0, 0, 1), (-2, 3, -5))
    assert p.to_text() == "-5*E[-2,3] + 1*E[0,0] + 1*E[1,0]"
    assert LaurentPoly.from_text(p.to_text()) == p
    assert ZERO.to_text() == "0"
    assert LaurentPoly.from_text("0") == ZERO


@pytest.mark.parametrize(
    "text", ["1*E[0,0 ]", "0*E[1,2]", "1*E[1,2] + 2*E[1,2]", "E[1,2]", "1*A0^1*A1^0"]
)
def test_text_rejects_malformed(text):
    with pytest.raises(ValueError):
        LaurentPoly.from_text(text)


# -- randomized ring identities -----------------------------------------------

@given(p=laurents, q=laurents, r=laurents)
def test_ring_identities(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p + (-p) == ZERO


@given(p=laurents, q=laurents)
def test_eval_one_is_ring_homomorphism(p, q):
    assert (p * q).eval_one() == p.eval_one() * q.eval_one()
    assert (p + q).eval_one() == p.eval_one() + q.eval_one()


@given(p=laurents)
def test_serialize_parse_identity(p):
    assert LaurentPoly.from_text(p.to_text()) == p


@settings(max_examples=60)
@given(p=laurents, q=laurents_nonzero)
def test_exact_division_round_trip(p, q):
    assert exact_div(p * q, q) == p


@given(p=laurents_nonzero)
def test_lowest_graded_part_is_homogeneous(p):
    part = lowest_graded_part(p)
    assert part
    assert part.homogeneous_degree() is not None


# -- graded polynomial operations ---------------------------------------------

def test_gp_product_of_q_weights():
    q1 = GradedPoly({(1, 0): 1})
    q2 = GradedPoly({(1, 0): 1, (0, 1): 2})
    assert q1 * q2 == GradedPoly({(2, 0): 1, (1, 1): 2})


def test_gp_additive_identity():
    p = GradedPoly({(2, 1): Fraction(3, 4)})
    assert p + GradedPoly.zero() == p


def test_gp_scalar_cancellation():
    assert Fraction(1, 12) * GradedPoly({(1, 0): 12}) == GradedPoly.alpha(0)


def test_gp_homogeneity_predicate():
    p = GradedPoly({(2, 1): 1, (0, 3): -2})
    assert p.is_homogeneous_of_degree(3)
    assert not p.is_homogeneous_of_degree(2)
    assert GradedPoly.zero().is_homogeneous_of_degree(7)
    mixed = GradedPoly({(1, 0): 1, (0, 2): 1})
    assert mixed.homogeneous_degree() is None


def test_gp_degree_component_and_constant():
    p = GradedPoly({(0, 0): 5, (1, 1): 2})
    assert p.degree_component(0) == GradedPoly.const(5)
    assert p.degree_component(2) == GradedPoly({(1, 1): 2})
    assert p.degree_component(0).constant_value() == 5
    with pytest.raises(ValueError):
        p.constant_value()


def test_gp_text_round_trip():
    p = GradedPoly({(2, 0): Fraction(-3, 4), (0, 1): 6})
    assert p.to_text() == "6*A0^0*A1^1 + -3/4*A0^2*A1^0"
    assert GradedPoly.from_text(p.to_text()) == p


@given(
    st.lists(
        st.tuples(st.tuples(st.integers(0, 5), st.integers(0, 5)), coeffs), max_size=8
    ).map(GradedPoly)
)
def test_gp_serialize_parse_identity(g):
    assert GradedPoly.from_text(g.to_text()) == g
