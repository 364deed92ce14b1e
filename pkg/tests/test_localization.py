import pytest

from schubert_sl2 import (
    BadRange,
    LaurentPoly,
    TooLarge,
    Weight,
    c_bottom,
    d_base,
    d_base_bruteforce,
    d_divisor,
    exp,
    lowest_graded_part,
    q_weight,
)

ONE = LaurentPoly.one()


def test_identity_class_row():
    for m in range(8):
        assert d_base(0, m) == ONE
        assert d_base_bruteforce(0, m) == ONE


def test_base_one_two():
    # single admissible subset {2} of the length-2 word
    assert d_base(1, 2) == ONE - exp(Weight(1, 2))
    assert d_base(1, 2) == d_divisor(2, 2)


def test_base_two_two():
    expected = (exp(Weight(0, 1)) - ONE) * (exp(Weight(1, 2)) - ONE)
    assert d_base(2, 2) == expected


def test_base_one_three_telescopes():
    # subsets {1}, {3}, {1,3} telescope to 1 - e^{q_3}
    assert d_base(1, 3) == ONE - exp(Weight(4, 2))


def test_bruteforce_agrees_on_examples():
    assert d_base_bruteforce(2, 2) == d_base(2, 2)
    assert d_base_bruteforce(1, 3) == d_base(1, 3)


def test_bad_range_and_cost_guard():
    with pytest.raises(BadRange):
        d_base(3, 2)
    with pytest.raises(BadRange):
        d_base_bruteforce(3, 2)
    with pytest.raises(TooLarge):
        d_base_bruteforce(1, 17)


def test_dp_matches_bruteforce():
    for m in range(9):
        for n in range(m + 1):
            assert d_base(n, m) == d_base_bruteforce(n, m)


def test_divisor_column_agreement():
    for m in range(1, 13):
        assert d_base(1, m) == ONE - exp(q_weight(m))


def test_eval_one_vanishes():
    for m in range(1, 13):
        for n in range(1, m + 1):
            assert d_base(n, m).eval_one() == 0


def test_lowest_graded_part_matches_cohomology_bottom():
    for m in range(1, 7):
        for n in range(1, m + 1):
            sign = 1 if n % 2 == 0 else -1
            assert sign * lowest_graded_part(d_base(n, m)) == c_bottom(n, m)
