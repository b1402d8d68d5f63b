import pytest
from hypothesis import given, settings, strategies as st

from barybinom.bary import (
    BaryQuery,
    Method,
    bary_binom,
    bary_binom_partition,
    bary_binom_series,
    evaluate,
    partition_value_table,
)
from barybinom.classic import classic_binom
from barybinom.digits import to_digits
from barybinom.partitions import enumerate_partitions, enumerate_restricted

NEG_METHODS = (Method.AUTO, Method.SERIES, Method.PARTITION)


def partition_sum_literal(n, k, b):
    """The partition-sum definition written as an explicit tuple sum.

    Kept deliberately naive: enumerate every index tuple, multiply the
    classic binomials position by position, add up.  The fast table
    accumulation in bary_binom_partition must agree with this.
    """
    assert n < 0
    if k >= 0:
        dv = to_digits(n, b)
        total = 0
        for p in enumerate_partitions(k, b, len(dv)):
            prod = 1
            for d, j in zip(dv.msf(), p.parts):
                prod *= classic_binom(d, j)
            total += prod
        return total
    dv = to_digits(-n, b)
    total = 0
    for p in enumerate_restricted(-k, dv):
        prod = 1
        for d, j in zip(dv.msf(), p.parts):
            prod *= classic_binom(-d, -j)
        total += prod
    return total


def test_worked_values_agree_across_methods():
    for method in NEG_METHODS:
        assert bary_binom(-6, 7, 4, method) == -4
        assert bary_binom(-6, -8, 4, method) == 3


def test_row_of_negative_six_base_four():
    zero_side = [bary_binom(-6, k, 4) for k in range(8)]
    assert zero_side == [1, -2, 3, -4, 4, -4, 4, -4]
    assert bary_binom(-6, -6, 4) == 1
    assert bary_binom(-6, -7, 4) == -2
    assert bary_binom(-6, -8, 4) == 3


def test_rows_of_positive_arguments():
    assert [bary_binom(3, k, 2) for k in range(4)] == [1, 1, 1, 1]
    assert [bary_binom(6, k, 4) for k in range(7)] == [1, 2, 1, 0, 1, 2, 1]
    assert bary_binom(6, -3, 4) == 0
    assert bary_binom(6, 7, 4) == 0


def test_zero_upper_entry_is_a_kronecker_delta():
    for b in (2, 3, 5):
        for k in range(-4, 5):
            assert bary_binom(0, k, b) == (1 if k == 0 else 0)


def test_table_accumulation_matches_literal_tuple_sum():
    for b in (2, 3, 4):
        for n in range(-12, 0):
            for k in range(-30, 31):
                want = partition_sum_literal(n, k, b)
                assert bary_binom_partition(n, k, b) == want, (n, k, b)


def test_series_route_matches_partition_route():
    for b in (2, 3):
        for n in range(-10, 0):
            for k in range(-25, 26):
                assert bary_binom_series(n, k, b) == bary_binom_partition(n, k, b)


def test_value_tables_index_both_sides_of_the_support():
    zero_side = partition_value_table(-6, 4, False, 10)
    inf_side = partition_value_table(-6, 4, True, 10)
    assert len(zero_side) >= 11 and len(inf_side) >= 11
    for r in range(11):
        assert zero_side[r] == bary_binom_partition(-6, r, 4)
        assert inf_side[r] == bary_binom_partition(-6, -(6 + r), 4)


def test_dispatch_rejects_mismatched_methods():
    with pytest.raises(ValueError):
        bary_binom(5, 2, 4, Method.PARTITION)
    with pytest.raises(ValueError):
        bary_binom(-5, 2, 4, Method.DIGIT_PRODUCT)
    with pytest.raises(ValueError):
        bary_binom(5, 2, 1)
    with pytest.raises(ValueError):
        bary_binom_partition(-5, 2, 1)
    with pytest.raises(ValueError):
        bary_binom_series(-5, 2, 0)
    with pytest.raises(ValueError):
        partition_value_table(5, 4, False, 10)


def test_query_evaluation_is_plain_dispatch():
    q = BaryQuery(n=-6, k=7, base=4, method=Method.SERIES)
    assert evaluate(q) == -4
    assert evaluate(BaryQuery(-6, -8, 4)) == 3
    assert q == BaryQuery(-6, 7, 4, Method.SERIES)


def test_method_values_are_the_cli_spellings():
    assert Method("auto") is Method.AUTO
    assert Method("series") is Method.SERIES
    assert Method("partition") is Method.PARTITION
    assert Method("digit-product") is Method.DIGIT_PRODUCT


@given(st.integers(-15, 15), st.integers(-15, 15), st.integers(0, 4))
def test_one_digit_base_reduces_to_classic(n, k, extra):
    # every argument is a single digit, so the product has one factor
    b = max(2, abs(n) + 1, abs(k) + 1) + extra
    assert bary_binom(n, k, b) == classic_binom(n, k)


@given(st.integers(2, 6), st.integers(-40, -1), st.integers(-39, -1))
def test_band_between_n_and_zero_vanishes(b, n, k):
    if n < k < 0:
        for method in NEG_METHODS:
            assert bary_binom(n, k, b, method) == 0


@given(st.integers(2, 6), st.integers(-20, 20), st.integers(-40, 40))
@settings(max_examples=200)
def test_symmetry_in_the_lower_index(b, n, k):
    assert bary_binom(n, k, b) == bary_binom(n, n - k, b)
