from math import comb

import pytest

from schubert_sl2 import (
    BadRange,
    LaurentPoly,
    LSPath,
    Weight,
    chevalley_coefficient,
    d_divisor,
    enumerate_paths,
    exp,
    q_weight,
)

ONE = LaurentPoly.one()


def lp(*terms):
    return LaurentPoly({Weight(a, b): c for a, b, c in terms})


# -- enumeration --------------------------------------------------------------

def test_enumerate_single_chain():
    assert enumerate_paths(2, 1) == [LSPath(2, 1, (1,))]
    assert enumerate_paths(3, 1) == [LSPath(3, 1, (1, 1))]
    assert len(enumerate_paths(3, 1)) == comb(2, 0)


def test_enumerate_trivial_path():
    for m in (0, 1, 5):
        assert enumerate_paths(m, m) == [LSPath(m, m, ())]


def test_enumerate_order_contract():
    # chains listed lexicographically
    got = [p.steps for p in enumerate_paths(4, 2)]
    assert got == [(1, 1), (1, 2), (2, 2)]


def test_enumerate_empty_for_end_zero():
    assert enumerate_paths(3, 0) == []


def test_enumerate_bad_range():
    with pytest.raises(BadRange):
        enumerate_paths(1, 2)


def test_counts_match_binomials():
    for m in range(1, 17):
        for ell in range(m, 17):
            expected = 1 if ell == m else comb(ell - 1, m - 1)
            assert len(enumerate_paths(ell, m)) == expected


# -- chain weights ------------------------------------------------------------

def test_chi_weight_examples():
    assert LSPath(2, 1, (1,)).chi_weight() == Weight(0, 1)
    assert LSPath(3, 1, (1, 1)).chi_weight() == Weight(1, 1)
    assert LSPath(5, 5, ()).chi_weight() == Weight(0, 0)


# -- Chevalley coefficients ---------------------------------------------------

def test_chevalley_diagonal_is_q_monomial():
    for m in range(6):
        assert chevalley_coefficient(m, m) == exp(q_weight(m))


def test_chevalley_k2_m1():
    # -e^{a0}(e^{a1} + 1)
    assert chevalley_coefficient(2, 1) == lp((1, 1, -1), (1, 0, -1))


def test_chevalley_k3_m1():
    # +e^{a0}(e^{a0+a1} + e^{a1})
    assert chevalley_coefficient(3, 1) == lp((2, 1, 1), (1, 1, 1))


def test_chevalley_bad_range():
    with pytest.raises(BadRange):
        chevalley_coefficient(1, 2)


def test_divisor_from_chevalley_relation():
    # d^k_{1,m} = -a^k_m off the diagonal and 1 - a^m_m on it
    for m in range(5):
        assert d_divisor(m, m) == ONE - chevalley_coefficient(m, m)
        for k in range(m + 1, 8):
            assert d_divisor(k, m) == -chevalley_coefficient(k, m)


# -- divisor column -----------------------------------------------------------

def test_divisor_diagonal():
    assert d_divisor(1, 1) == lp((0, 0, 1), (1, 0, -1))
    for m in range(17):
        assert d_divisor(m, m) == ONE - exp(q_weight(m))


def test_divisor_k2_m1():
    assert d_divisor(2, 1) == lp((1, 0, 1), (1, 1, 1))


def test_divisor_k3_m1():
    got = d_divisor(3, 1)
    assert got == lp((2, 1, -1), (1, 1, -1))
    assert got.eval_one() == -2


def test_divisor_identity_column():
    # m = 0 degenerates to the indicator of k == 1
    assert d_divisor(1, 0) == ONE
    for k in (0, 2, 3, 7):
        assert d_divisor(k, 0) == LaurentPoly.zero()


def test_divisor_zero_below_diagonal():
    for m in range(1, 17):
        for k in range(m):
            assert d_divisor(k, m) == LaurentPoly.zero()


def test_divisor_eval_closed_form():
    for m in range(1, 17):
        for k in range(m + 1, 17):
            expected = comb(k - 1, m - 1) + comb(k - 2, m - 1)
            if (k + m) % 2 == 0:
                expected = -expected
            assert d_divisor(k, m).eval_one() == expected
