"""Generalized binomial coefficient for arbitrary integer entries.

``classic_binom(n, k)`` is the coefficient of x^k in (1+x)^n, where for
n < 0 the expansion at zero is used when k >= 0 and the expansion at
infinity when k < 0.  Both expansions reduce to closed forms in ordinary
binomial coefficients, so the function is total and exact.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def classic_binom(n: int, k: int) -> int:
    """Coefficient of x^k in (1+x)^n, all integer n and k.

    Closed forms by sign quadrant:

    * n >= 0: standard C(n, k) for 0 <= k <= n, else 0;
    * n < 0, k >= 0: (-1)^k * C(-n+k-1, k);
    * n < 0, k <= n: (-1)^(n-k) * C(-k-1, n-k);
    * n < 0, n < k < 0: 0 (no term in either expansion).
    """
    if n >= 0:
        if 0 <= k <= n:
            return comb(n, k)
        return 0
    if k >= 0:
        return (-1) ** (k & 1) * comb(-n + k - 1, k)
    if k <= n:
        return (-1) ** ((n - k) & 1) * comb(-k - 1, n - k)
    return 0
