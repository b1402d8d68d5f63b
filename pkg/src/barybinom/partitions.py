"""Restricted partitions of k into parts 1, b, ..., b^(N-1).

These are the index sets of the partition-sum formula: N-tuples
(j_{N-1}, ..., j_0) of nonnegative integers with sum of j_l * b^l equal
to k, optionally with per-position lower bounds j_l >= n_l.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digits import DigitVector


@dataclass(frozen=True)
class PartitionTuple:
    """Multiplicities (j_{N-1}, ..., j_0), most-significant part first."""

    parts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.parts)

    def weighted_sum(self, b: int) -> int:
        N = len(self.parts)
        return sum(j * b ** (N - 1 - l) for l, j in enumerate(self.parts))


def enumerate_partitions(k: int, b: int, N: int) -> list[PartitionTuple]:
    """All N-tuples of nonnegative j_l with sum j_l * b^l = k.

    Output is in descending lexicographic order on (j_{N-1}, ..., j_0),
    i.e. largest most-significant part first; complete and duplicate-free.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return _descend(k, b, N, [0] * N)


def enumerate_restricted(k: int, n_digits: DigitVector) -> list[PartitionTuple]:
    """The subset of enumerate_partitions(k, b, N) with j_l >= n_l.

    ``n_digits`` must be the digit vector of a positive integer n; its
    base supplies b and its length supplies N.  Empty whenever k < n.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if n_digits.value <= 0 or any(d < 0 for d in n_digits.digits):
        raise ValueError("n_digits must expand a positive integer")
    b = n_digits.base
    N = len(n_digits)
    lows = n_digits.msf()
    return _descend(k, b, N, list(lows))


def _descend(k: int, b: int, N: int, lows: list[int]) -> list[PartitionTuple]:
    # recursive descent on l = N-1 .. 0, largest multiplicity first;
    # at l = 0 the remainder forces j_0, so no scan is needed there
    out: list[PartitionTuple] = []
    prefix: list[int] = []

    def rec(l: int, rem: int) -> None:
        low = lows[N - 1 - l]
        if l == 0:
            if rem >= low:
                out.append(PartitionTuple(tuple(prefix) + (rem,)))
            return
        w = b**l
        for j in range(rem // w, low - 1, -1):
            prefix.append(j)
            rec(l - 1, rem - j * w)
            prefix.pop()

    rec(N - 1, k)
    return out
