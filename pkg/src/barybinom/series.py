"""Truncated formal Laurent series over exact big integers.

A series is expanded either at zero or at infinity.  In both cases the
coefficients are stored in one ascending direction, so a single
convolution kernel serves both points:

* AtZero: ``coeffs[i]`` is the coefficient of x^(lead_exponent + i);
* AtInfinity: ``coeffs[i]`` is the coefficient of x^-(lead_exponent + i),
  i.e. the series is read in ascending powers of u = 1/x.

``lead_exponent`` is a true support bound: every exponent before it is
exactly zero, every stored position is exact, and everything past the
retained window is unknown.  Asking for an unknown coefficient is an
error, never a silent zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .digits import to_digits


class ExpansionPoint(Enum):
    AT_ZERO = "zero"
    AT_INFINITY = "infinity"


class TruncationError(ValueError):
    """Requested coefficient lies past the retained truncation window."""


@dataclass(frozen=True)
class LaurentSeries:
    point: ExpansionPoint
    lead_exponent: int
    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        """Number of retained terms."""
        return len(self.coeffs)

    def terms(self):
        """Yield (exponent of x, coefficient) in stored order.

        AtZero yields ascending exponents, AtInfinity descending ones.
        """
        for i, c in enumerate(self.coeffs):
            if self.point is ExpansionPoint.AT_ZERO:
                yield self.lead_exponent + i, c
            else:
                yield -(self.lead_exponent + i), c


def one(point: ExpansionPoint, order: int) -> LaurentSeries:
    """The constant-one series at the given point and order."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return LaurentSeries(point, 0, (1,) + (0,) * (order - 1))


def _one_plus_power(c: int, point: ExpansionPoint, order: int) -> LaurentSeries:
    """The factor 1 + x^c (c >= 1) expanded at the given point.

    At infinity this is u^-c + 1 = u^-c * (1 + u^c), stored from lead -c.
    """
    coeffs = [0] * order
    coeffs[0] = 1
    if c < order:
        coeffs[c] = 1
    lead = 0 if point is ExpansionPoint.AT_ZERO else -c
    return LaurentSeries(point, lead, tuple(coeffs))


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Truncated product; lead exponents add, order = min of the orders."""
    if a.point is not b.point:
        raise ValueError("cannot multiply series at different expansion points")
    n = min(a.order, b.order)
    # iterate the sparser operand on the outside
    nz_a = [(i, v) for i, v in enumerate(a.coeffs[:n]) if v]
    nz_b = [(i, v) for i, v in enumerate(b.coeffs[:n]) if v]
    if len(nz_b) < len(nz_a):
        nz_a, dense = nz_b, a.coeffs
    else:
        dense = b.coeffs
    out = [0] * n
    for i, v in nz_a:
        lim = n - i
        for j in range(lim):
            w = dense[j]
            if w:
                out[i + j] += v * w
    return LaurentSeries(a.point, a.lead_exponent + b.lead_exponent, tuple(out))


def series_inverse(a: LaurentSeries) -> LaurentSeries:
    """Multiplicative inverse up to the same order; lead exponent negates.

    Requires a unit leading coefficient (+1 or -1): those are the only
    invertible leading terms over the integers.
    """
    if not a.coeffs or a.coeffs[0] not in (1, -1):
        raise ValueError("series inversion requires leading coefficient +1 or -1")
    c0 = a.coeffs[0]
    n = a.order
    nz = [(i, v) for i, v in enumerate(a.coeffs) if v and i > 0]
    inv = [0] * n
    inv[0] = c0  # 1/c0 = c0 for c0 = +-1
    for j in range(1, n):
        s = 0
        for i, v in nz:
            if i > j:
                break
            s += v * inv[j - i]
        if s:
            inv[j] = -c0 * s
    return LaurentSeries(a.point, -a.lead_exponent, tuple(inv))


def series_pow(a: LaurentSeries, e: int) -> LaurentSeries:
    """a**e by square-and-multiply; negative e inverts first a**|e|."""
    if e == 0:
        return one(a.point, a.order)
    if e < 0:
        return series_inverse(series_pow(a, -e))
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def gf_expand(n: int, b: int, point: ExpansionPoint, order: int) -> LaurentSeries:
    """Expand f(x) = prod over digit positions l of (1 + x^(b^l))^(n_l).

    n_l are the sign-consistent digits of n, so they all share n's sign.
    The positive-digit product is a plain polynomial; for n < 0 the whole
    product is inverted once at the end.  For n < 0 at infinity the
    expansion therefore starts at x^-|n| with coefficient +1.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    acc = one(point, order)
    for l, d in enumerate(to_digits(n, b).digits):
        if d == 0:
            continue
        factor = series_pow(_one_plus_power(b**l, point, order), abs(d))
        acc = series_mul(acc, factor)
    if n < 0:
        acc = series_inverse(acc)
    return acc


def coefficient(s: LaurentSeries, e: int) -> int:
    """The coefficient of x^e in s.

    Exponents on the zero side of the lead are exactly zero and are
    returned as such; exponents past the truncation window raise
    TruncationError so an insufficient order can never masquerade as 0.
    """
    if s.point is ExpansionPoint.AT_ZERO:
        idx = e - s.lead_exponent
    else:
        idx = -e - s.lead_exponent
    if idx < 0:
        return 0
    if idx >= s.order:
        raise TruncationError(
            f"coefficient of x^{e} lies outside the retained window "
            f"(point={s.point.value}, lead={s.lead_exponent}, order={s.order})"
        )
    return s.coeffs[idx]
