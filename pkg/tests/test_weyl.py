import pytest
from hypothesis import given
from hypothesis import strategies as st

from schubert_sl2 import (
    OutOfRange,
    Weight,
    demazure_product,
    inversion_root,
    is_reduced,
    orbit_weight_offset,
    orbit_weight_step,
    q_weight,
    reduced_word,
)

letters = st.lists(st.integers(0, 1), max_size=25)


def test_reduced_word_golden():
    assert reduced_word(0) == ()
    assert reduced_word(3) == (0, 1, 0)
    assert reduced_word(2) == (1, 0)


def test_reduced_words_are_reduced_and_end_in_s0():
    for n in range(1, 51):
        word = reduced_word(n)
        assert len(word) == n
        assert is_reduced(word)
        assert word[-1] == 0


def test_demazure_idempotent_letter():
    assert demazure_product((0, 0)) == (0,)


def test_demazure_fixed_on_reduced():
    assert demazure_product((0, 1, 0)) == (0, 1, 0)
    for n in range(51):
        assert demazure_product(reduced_word(n)) == reduced_word(n)


def test_demazure_fold_golden():
    assert demazure_product((0, 0, 1, 1, 0)) == (0, 1, 0)


def test_demazure_rejects_bad_letter():
    with pytest.raises(OutOfRange):
        demazure_product((0, 2))


@given(u=letters, v=letters)
def test_demazure_fold_consistency(u, v):
    assert demazure_product(u + v) == demazure_product(list(demazure_product(u)) + v)


@given(word=letters)
def test_demazure_output_always_reduced(word):
    assert is_reduced(demazure_product(word))


def test_inversion_root_golden():
    assert inversion_root(3, 2) == Weight(2, 1)
    assert inversion_root(2, 1) == Weight(0, 1)
    assert inversion_root(3, 1) == Weight(1, 0)


def test_inversion_root_range():
    with pytest.raises(OutOfRange):
        inversion_root(3, 0)
    with pytest.raises(OutOfRange):
        inversion_root(3, 4)


def test_q_weight_golden():
    assert q_weight(0) == Weight(0, 0)
    assert q_weight(2) == Weight(1, 2)
    assert q_weight(3) == Weight(4, 2)


def test_q_weight_monotone_and_injective():
    values = [q_weight(m) for m in range(51)]
    for m in range(49):
        step = values[m + 2] - values[m]
        assert step.a0 > 0 and step.a1 > 0
    assert len(set(values)) == len(values)


def test_orbit_weight_offset_golden():
    assert orbit_weight_offset(0) == Weight(0, 0)
    assert orbit_weight_offset(1) == Weight(-1, 0)
    assert orbit_weight_offset(2) == Weight(-1, -2)


def test_orbit_weight_step_golden():
    assert orbit_weight_step(1) == Weight(1, 0)
    assert orbit_weight_step(2) == Weight(0, 2)
    assert orbit_weight_step(4) == Weight(0, 4)


def test_offset_step_consistency():
    for i in range(1, 51):
        assert orbit_weight_offset(i - 1) - orbit_weight_offset(i) == orbit_weight_step(i)


def test_offset_is_minus_q():
    # links the orbit offsets to the divisor eigenvalues
    for m in range(51):
        assert -1 * orbit_weight_offset(m) == q_weight(m)
