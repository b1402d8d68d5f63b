"""The b-ary binomial coefficient binom(n, k)_b for all integer n, k.

Two independent algorithms back the negative-n case: coefficient
extraction from the truncated generating-function expansion (series
route) and the restricted-partition sum over closed-form classic
binomials (partition route).  They share nothing past the digit
expansion, which is what makes the cross-oracle sweeps meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb

from .classic import classic_binom
from .digits import pair_length, to_digits
from .series import ExpansionPoint, coefficient, gf_expand


class Method(Enum):
    AUTO = "auto"
    SERIES = "series"
    PARTITION = "partition"
    DIGIT_PRODUCT = "digit-product"


@dataclass(frozen=True)
class BaryQuery:
    n: int
    k: int
    base: int
    method: Method = Method.AUTO


def bary_binom(n: int, k: int, base: int, method: Method = Method.AUTO) -> int:
    """binom(n, k)_b.

    For n >= 0 this is the digit product over shared padding length N,
    which vanishes automatically outside 0 <= k <= n.  For n < 0 it is
    the coefficient of x^k in the expansion of f_{n,b} at zero (k >= 0)
    or at infinity (k < 0), with the band n < k < 0 identically zero.

    Auto dispatch uses the digit product for n >= 0 and the partition
    sum for n < 0; Series stays available as an independent cross-check.
    """
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")
    if method is Method.AUTO:
        method = Method.DIGIT_PRODUCT if n >= 0 else Method.PARTITION
    if method is Method.DIGIT_PRODUCT:
        if n < 0:
            raise ValueError("digit-product method applies to n >= 0 only")
        return _digit_product(n, k, base)
    if method is Method.PARTITION:
        return bary_binom_partition(n, k, base)
    return bary_binom_series(n, k, base)


def evaluate(q: BaryQuery) -> int:
    return bary_binom(q.n, q.k, q.base, q.method)


def _digit_product(n: int, k: int, b: int) -> int:
    # polynomial support: no negative powers, degree n
    if k < 0 or k > n:
        return 0
    N = pair_length(n, k, b)
    nd = to_digits(n, b, N).digits
    kd = to_digits(k, b, N).digits
    prod = 1
    for nl, kl in zip(nd, kd):
        prod *= comb(nl, kl) if kl <= nl else 0
        if not prod:
            return 0
    return prod


def _bucket(need: int) -> int:
    # round the table/order size up so nearby queries share one cache entry
    return max(64, -(-need // 64) * 64)


def partition_value_table(n: int, base: int, negative: bool, limit: int) -> tuple[int, ...]:
    """Partition-sum values of binom(n, .)_base for n < 0, in bulk.

    With negative=False, entry r is binom(n, r)_base for 0 <= r <= limit.
    With negative=True, entry r is binom(n, -(|n| + r))_base, i.e. the
    infinity-side value at distance r past the start of the support.
    The returned tuple covers at least limit + 1 entries; it is rounded
    up so nearby requests share one cached table.

    Identity sweeps read these tables directly; single queries go
    through bary_binom_partition.
    """
    if n >= 0:
        raise ValueError("partition tables are defined for n < 0 only")
    return _value_table(n, base, negative, _bucket(limit))


@lru_cache(maxsize=None)
def _value_table(n: int, base: int, negative: bool, limit: int) -> tuple[int, ...]:
    # The sum over partition tuples is accumulated level by level: after
    # processing digit position l, entry r holds the sum over all partial
    # tuples (j_l, ..., j_0) with weighted sum r of the products of
    # classic_binom factors.  Positions with digit 0 force j_l = 0 and
    # are skipped.
    dv = to_digits(n, base)
    cur = [0] * (limit + 1)
    cur[0] = 1
    for l, d in enumerate(dv.digits):
        if d == 0:
            continue
        step = base**l
        if step > limit:
            break
        if negative:
            # k < 0 branch: multiplicities j >= |d| shifted to i = j - |d|,
            # factor classic_binom(d, -(|d| + i)) = classic_binom(d, d - i)
            weights = [classic_binom(d, d - i) for i in range(limit // step + 1)]
        else:
            weights = [classic_binom(d, i) for i in range(limit // step + 1)]
        new = [0] * (limit + 1)
        for r, c in enumerate(cur):
            if not c:
                continue
            for j in range((limit - r) // step + 1):
                w = weights[j]
                if w:
                    new[r + j * step] += w * c
        cur = new
    return tuple(cur)


def bary_binom_partition(n: int, k: int, b: int) -> int:
    """binom(n, k)_b for n < 0 via the restricted-partition sum.

    For k >= 0 the sum runs over all tuples with weighted sum k; for
    k < 0 over tuples with j_l >= |n_l| and weighted sum |k|, which is
    empty (hence 0) whenever |k| < |n|.
    """
    if n >= 0:
        raise ValueError("partition method applies to n < 0 only")
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if k >= 0:
        return partition_value_table(n, b, False, k)[k]
    r = -k + n  # |k| - |n|
    if r < 0:
        return 0
    return partition_value_table(n, b, True, r)[r]


@lru_cache(maxsize=None)
def _gf_cached(n: int, b: int, point: ExpansionPoint, order: int):
    return gf_expand(n, b, point, order)


def bary_binom_series(n: int, k: int, b: int) -> int:
    """binom(n, k)_b by expanding f_{n,b} and reading one coefficient.

    The order |n| + |k| + 2 always covers the requested exponent at
    either expansion point; it is rounded up so that a sweep over k
    reuses a handful of cached expansions.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    order = _bucket(abs(n) + abs(k) + 2)
    point = ExpansionPoint.AT_ZERO if k >= 0 else ExpansionPoint.AT_INFINITY
    return coefficient(_gf_cached(n, b, point, order), k)
