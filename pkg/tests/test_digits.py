import pytest
from hypothesis import given, strategies as st

from barybinom.digits import DigitVector, digit_sum, pair_length, to_digits


def test_positive_expansion():
    dv = to_digits(6, 4)
    assert dv.digits == (2, 1)
    assert dv.msf() == (1, 2)
    assert dv.base == 4 and dv.value == 6


def test_negative_digits_are_elementwise_negated():
    assert to_digits(-6, 4).digits == (-2, -1)
    assert to_digits(-1, 2).digits == (-1,)


def test_zero_has_one_digit():
    assert to_digits(0, 7).digits == (0,)
    assert len(to_digits(0, 2)) == 1


def test_min_len_pads_most_significant_side():
    assert to_digits(6, 4, 4).digits == (2, 1, 0, 0)
    assert to_digits(-6, 4, 3).digits == (-2, -1, 0)
    # never truncates
    assert to_digits(6, 4, 1).digits == (2, 1)


def test_pair_length():
    assert pair_length(-6, 7, 4) == 2
    assert pair_length(-1, -4, 4) == 2
    assert pair_length(0, 0, 2) == 1
    assert pair_length(100, 1, 2) == 7


def test_digit_sum_examples():
    assert digit_sum(6, 4) == 3
    assert digit_sum(-6, 4) == -3
    assert digit_sum(0, 5) == 0


@pytest.mark.parametrize("bad", [1, 0, -3])
def test_invalid_base_rejected(bad):
    with pytest.raises(ValueError):
        to_digits(5, bad)
    with pytest.raises(ValueError):
        digit_sum(5, bad)


def test_negative_min_len_rejected():
    with pytest.raises(ValueError):
        to_digits(5, 2, -1)


@given(st.integers(-10**9, 10**9), st.integers(2, 16), st.integers(0, 40))
def test_expansion_round_trips(n, b, pad):
    dv = to_digits(n, b, pad)
    assert sum(d * b**l for l, d in enumerate(dv.digits)) == n
    assert len(dv) >= pad


@given(st.integers(-10**6, 10**6), st.integers(2, 16))
def test_digits_share_the_sign_of_n(n, b):
    dv = to_digits(n, b)
    if n >= 0:
        assert all(0 <= d < b for d in dv)
    else:
        assert all(-b < d <= 0 for d in dv)
    assert dv.msf() == tuple(reversed(dv.digits))


@given(st.integers(-10**6, 10**6), st.integers(2, 16))
def test_digit_sum_is_odd_under_negation(n, b):
    assert digit_sum(-n, b) == -digit_sum(n, b)


def test_digit_vector_is_hashable_and_iterable():
    dv = to_digits(9, 2)
    assert list(dv) == [1, 0, 0, 1]
    assert hash(dv) == hash(DigitVector(base=2, digits=(1, 0, 0, 1), value=9))
