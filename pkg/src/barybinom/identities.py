"""Sweep-based verification of the identities the coefficients satisfy.

Every check_* function sweeps an explicit finite domain, compares both
sides of one identity with exact integer arithmetic, and returns an
IdentityReport carrying any counterexample witnesses.  Sweep defaults
are sized so the whole registry runs in well under a minute.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, Sequence

from .altdefs import dstar_binom, star_binom
from .bary import bary_binom, bary_binom_series, partition_value_table
from .classic import classic_binom
from .digits import digit_sum, to_digits


@dataclass(frozen=True)
class Witness:
    """One failed instance: the swept inputs and both sides."""

    inputs: tuple
    lhs: int
    rhs: int


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    swept_domain: str
    checked_count: int
    failures: tuple[Witness, ...] = ()
    skipped_count: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures


def merge_reports(reports: Sequence[IdentityReport]) -> IdentityReport:
    """Combine per-slice reports of one identity (e.g. one per base)."""
    if not reports:
        raise ValueError("nothing to merge")
    ids = {r.identity_id for r in reports}
    if len(ids) > 1:
        raise ValueError(f"cannot merge distinct identities {sorted(ids)}")
    failures: list[Witness] = []
    for r in reports:
        failures.extend(r.failures)
    return IdentityReport(
        identity_id=reports[0].identity_id,
        swept_domain=_merge_domains([r.swept_domain for r in reports]),
        checked_count=sum(r.checked_count for r in reports),
        failures=tuple(failures),
        skipped_count=sum(r.skipped_count for r in reports),
    )


def _merge_domains(domains: list[str]) -> str:
    # slices of one sweep differ only in the leading "axis in values"
    # clause; collapse those back into one list so a fanned-out run
    # reads the same as a direct one
    parts = [d.split(", ", 1) for d in domains]
    heads = [p[0].rsplit(" in ", 1) for p in parts]
    rests = {p[1] for p in parts if len(p) == 2}
    if (
        len(rests) <= 1
        and all(len(h) == 2 for h in heads)
        and len({h[0] for h in heads}) == 1
    ):
        values = ",".join(h[1] for h in heads)
        rest = f", {rests.pop()}" if rests else ""
        return f"{heads[0][0]} in {values}{rest}"
    out = []
    for d in domains:
        if d not in out:
            out.append(d)
    return "; ".join(out)


@dataclass(frozen=True)
class DefectMatrix:
    """Values of a Pascal-style expression; nonzero entries mark where
    the recurrence fails.  Rows are n = 1..rows, columns k = 1..cols."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match declared shape")

    def entry(self, n: int, k: int) -> int:
        if not (1 <= n <= self.rows and 1 <= k <= self.cols):
            raise ValueError(f"entry ({n}, {k}) outside {self.rows}x{self.cols} matrix")
        return self.entries[n - 1][k - 1]


def carry_free(n: int, m: int, b: int) -> bool:
    """True when adding n and m in base b carries in no digit position."""
    if n <= 0 or m <= 0:
        raise ValueError("carry_free is defined for positive n and m")
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    nd = to_digits(n, b)
    md = to_digits(m, b)
    N = max(len(nd), len(md))
    return all(
        dn + dm <= b - 1
        for dn, dm in zip(to_digits(n, b, N).digits, to_digits(m, b, N).digits)
    )


def _fn(n: int, b: int, span: int) -> Callable[[int], int]:
    # point lookup binom(n, .)_b, table-backed for n < 0; span must
    # bound |k| over every call the caller will make
    if n >= 0:
        return lambda k, n=n, b=b: bary_binom(n, k, b)
    zero = partition_value_table(n, b, False, span)
    inf = partition_value_table(n, b, True, span)
    size = -n

    def val(k: int) -> int:
        if k >= 0:
            return zero[k]
        r = -k - size
        return inf[r] if r >= 0 else 0

    return val


def _star0(n: int, k: int, b: int) -> int:
    # star digit product extended to n = 0, where it degenerates to the
    # empty product: 1 at k = 0, else 0 (some digit of k exceeds 0)
    if n == 0:
        return 1 if k == 0 else 0
    return star_binom(n, k, b)


def _dstar0(n: int, k: int, b: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    return dstar_binom(n, k, b)


def check_symmetry(
    bases: Iterable[int] = (2, 3, 4, 5, 6), n_max: int = 60, k_max: int = 120
) -> IdentityReport:
    """binom(n, k)_b = binom(n, n - k)_b for every integer pair."""
    failures: list[Witness] = []
    checked = 0
    for b in bases:
        span = n_max + k_max
        for n in range(-n_max, n_max + 1):
            val = _fn(n, b, span)
            for k in range(-k_max, k_max + 1):
                lhs, rhs = val(k), val(n - k)
                checked += 1
                if lhs != rhs:
                    failures.append(Witness((b, n, k), lhs, rhs))
    return IdentityReport(
        "symmetry",
        f"b in {_fmt(bases)}, |n| <= {n_max}, |k| <= {k_max}",
        checked,
        tuple(failures),
    )


def check_pascal(
    bases: Iterable[int] = (2, 3, 4, 5, 6), n_max: int = 100, k_max: int = 200
) -> IdentityReport:
    """binom(-n,k)_b + binom(-n,k-1)_b = binom(-n+1,k)_b for b not
    dividing n.

    The single input (n, k) = (1, 0) is skipped: there the k-1 term is
    read from the expansion at infinity, whose support reaches -1 only
    when n = 1, while the right side degenerates to binom(0, .).  Each
    one-sided expansion satisfies the recurrence; splicing them double
    counts at exactly that point.
    """
    failures: list[Witness] = []
    checked = skipped = 0
    for b in bases:
        span = k_max + 1
        for n in range(1, n_max + 1):
            if n % b == 0:
                continue
            val_n = _fn(-n, b, span)
            val_up = _fn(-n + 1, b, span)
            for k in range(-k_max, k_max + 1):
                if n == 1 and k == 0:
                    skipped += 1
                    continue
                lhs = val_n(k) + val_n(k - 1)
                rhs = val_up(k)
                checked += 1
                if lhs != rhs:
                    failures.append(Witness((b, n, k), lhs, rhs))
    return IdentityReport(
        "pascal",
        f"b in {_fmt(bases)}, n in [1,{n_max}] with b∤n, |k| <= {k_max}",
        checked,
        tuple(failures),
        skipped,
    )


def check_pascal_power(
    bases: Iterable[int] = (2, 3, 4, 5), n_max: int = 80, k_max: int = 160
) -> IdentityReport:
    """binom(-n,k)_b + binom(-n,k-b^s)_b = binom(-n+b^s,k)_b whenever
    digit s of n is nonzero.

    Skips (n, k) = (b^s, 0) for the same branch-splice reason as the
    step-one recurrence: it is the s = 0 exception rescaled.
    """
    failures: list[Witness] = []
    checked = skipped = 0
    for b in bases:
        for n in range(1, n_max + 1):
            dv = to_digits(n, b)
            val_n = None
            for s, d in enumerate(dv.digits):
                if d == 0:
                    continue
                step = b**s
                span = k_max + step
                if val_n is None:
                    val_n = _fn(-n, b, span)
                val_up = _fn(-n + step, b, span)
                for k in range(-k_max, k_max + 1):
                    if n == step and k == 0:
                        skipped += 1
                        continue
                    lhs = val_n(k) + val_n(k - step)
                    rhs = val_up(k)
                    checked += 1
                    if lhs != rhs:
                        failures.append(Witness((b, n, s, k), lhs, rhs))
    return IdentityReport(
        "pascal-power",
        f"b in {_fmt(bases)}, n in [1,{n_max}], s over nonzero digits, |k| <= {k_max}",
        checked,
        tuple(failures),
        skipped,
    )


def check_prop33(
    bases: Iterable[int] = (2, 3, 4), n_max: int = 64, k_max: int = 64
) -> IdentityReport:
    """Pascal step across a block of trailing zero digits.

    For n whose digits below position s all vanish (n_s != 0), any
    m < s, and any k with k >= b^s or k <= -n + b^m:

        binom(-n+b^s, k) = sum_j binom(b^s-b^m, j) * binom(-n+b^m, k-j)

    with j running over the multiples of b^m in [0, b^s].  The j = 0
    term belongs to the sum: the weight series is the expansion of
    prod_{l=m}^{s-1} (1+x^{b^l})^{b-1}, whose constant term is 1.
    k_max is the width of the swept window past each branch point.
    """
    failures: list[Witness] = []
    checked = 0
    for b in bases:
        for n in range(b, n_max + 1, b):
            dv = to_digits(n, b)
            s = next(i for i, d in enumerate(dv.digits) if d)
            bs = b**s
            span = n + bs + k_max
            lhs_val = _fn(-n + bs, b, span)
            for m in range(s):
                bm = b**m
                weights = [
                    (j, bary_binom(bs - bm, j, b)) for j in range(0, bs + 1, bm)
                ]
                weights = [(j, w) for j, w in weights if w]
                rhs_val = _fn(-n + bm, b, span)
                k_window = list(range(bs, bs + k_max + 1)) + list(
                    range(-n + bm - k_max, -n + bm + 1)
                )
                for k in k_window:
                    rhs = sum(w * rhs_val(k - j) for j, w in weights)
                    lhs = lhs_val(k)
                    checked += 1
                    if lhs != rhs:
                        failures.append(Witness((b, n, s, m, k), lhs, rhs))
    return IdentityReport(
        "prop33",
        f"b in {_fmt(bases)}, n multiples of b up to {n_max}, all (s,m), "
        f"k windows of width {k_max}",
        checked,
        tuple(failures),
    )


def check_chu_negative(
    bases: Iterable[int] = (2, 3, 4, 5, 6), n_max: int = 60, k_max: int = 120
) -> IdentityReport:
    """Convolution of two negative upper entries, carry-free n + m.

    Zero side, k >= m:   binom(-n-m,k) = sum_{j=0}^{k} binom(-n,k-j) binom(-m,j)
    Infinity side, k >= n+m:
                         binom(-n-m,-k) = sum_{j=1}^{k-1} binom(-n,-k+j) binom(-m,-j)

    n_max bounds n + m.  Pairs are swept unordered (the identity is
    symmetric in n and m); pairs that carry are counted as skipped.
    The infinity-side sum only runs j in [m, k-n]: outside that window
    one factor sits below its support and the term vanishes.
    """
    failures: list[Witness] = []
    checked = skipped = 0
    for b in bases:
        for n in range(1, n_max // 2 + 1):
            for m in range(n, n_max - n + 1):
                if not carry_free(n, m, b):
                    skipped += 1
                    continue
                a0 = partition_value_table(-n, b, False, k_max)
                b0 = partition_value_table(-m, b, False, k_max)
                s0 = partition_value_table(-(n + m), b, False, k_max)
                for k in range(m, k_max + 1):
                    rhs = sum(a0[k - j] * b0[j] for j in range(k + 1))
                    checked += 1
                    if s0[k] != rhs:
                        failures.append(Witness((b, n, m, k, "zero"), s0[k], rhs))
                ai = partition_value_table(-n, b, True, k_max)
                bi = partition_value_table(-m, b, True, k_max)
                si = partition_value_table(-(n + m), b, True, k_max)
                for k in range(n + m, k_max + 1):
                    rhs = sum(ai[k - j - n] * bi[j - m] for j in range(m, k - n + 1))
                    lhs = si[k - n - m]
                    checked += 1
                    if lhs != rhs:
                        failures.append(Witness((b, n, m, -k, "infinity"), lhs, rhs))
    return IdentityReport(
        "chu-neg",
        f"b in {_fmt(bases)}, carry-free pairs with n+m <= {n_max}, k <= {k_max}",
        checked,
        tuple(failures),
        skipped,
    )


def check_chu_mixed(
    bases: Iterable[int] = (2, 3, 4, 5, 6), n_max: int = 60, k_max: int = 120
) -> IdentityReport:
    """Convolutions mixing one negative and one positive upper entry,
    for 0 < m < n with m + (n-m) carry-free.

    (1) 0 <= k <= n-m, both expansions of f_{-m}:
        binom(n-m,k) = sum_{j=0}^{k} binom(n,k-j) binom(-m,j)
                     = sum_{s=k+1}^{n} binom(n,s) binom(-m,k-s)
    (2) k >= 0:     binom(-n+m,k)  = sum_j binom(-n,k-j) binom(m,j)
    (3) k >= n-m:   binom(-n+m,-k) = sum_j binom(-n,-k-j) binom(m,j)

    In (2) and (3) the sum runs over the full support j in [0, m] of
    the polynomial f_m; truncating (3) at j = k would lose terms
    whenever k < m.  In the second form of (1), terms with s < k + m
    vanish (the factor falls in the band where every value is 0).
    """
    failures: list[Witness] = []
    checked = skipped = 0
    for b in bases:
        for n in range(2, n_max + 1):
            d_n = [bary_binom(n, i, b) for i in range(n + 1)]
            for m in range(1, n):
                if not carry_free(m, n - m, b):
                    skipped += 1
                    continue
                b0 = partition_value_table(-m, b, False, n)
                bi = partition_value_table(-m, b, True, n)
                d_m = [bary_binom(m, j, b) for j in range(m + 1)]
                for k in range(n - m + 1):
                    lhs = bary_binom(n - m, k, b)
                    j_form = sum(d_n[k - j] * b0[j] for j in range(k + 1))
                    s_form = sum(d_n[s] * bi[s - k - m] for s in range(k + m, n + 1))
                    checked += 2
                    if lhs != j_form:
                        failures.append(Witness((b, n, m, k, "pos-j"), lhs, j_form))
                    if lhs != s_form:
                        failures.append(Witness((b, n, m, k, "pos-s"), lhs, s_form))
                f0 = partition_value_table(-(n - m), b, False, k_max)
                a0 = partition_value_table(-n, b, False, k_max)
                for k in range(k_max + 1):
                    rhs = sum(a0[k - j] * d_m[j] for j in range(min(k, m) + 1))
                    checked += 1
                    if f0[k] != rhs:
                        failures.append(Witness((b, n, m, k, "neg-zero"), f0[k], rhs))
                fi = partition_value_table(-(n - m), b, True, k_max)
                ai = partition_value_table(-n, b, True, k_max)
                for k in range(n - m, n - m + k_max + 1):
                    lhs = fi[k - (n - m)]
                    rhs = sum(
                        ai[k + j - n] * d_m[j] for j in range(max(0, n - k), m + 1)
                    )
                    checked += 1
                    if lhs != rhs:
                        failures.append(Witness((b, n, m, -k, "neg-inf"), lhs, rhs))
    return IdentityReport(
        "chu-mixed",
        f"b in {_fmt(bases)}, carry-free splits of n <= {n_max}, k <= {k_max}",
        checked,
        tuple(failures),
        skipped,
    )


def check_lucas(
    primes: Iterable[int] = (2, 3, 5, 7), n_max: int = 60, k_max: int = 120
) -> IdentityReport:
    """classic_binom(n,k) = binom(n,k)_p (mod p) over all four sign
    quadrants; residues compare in [0, p)."""
    failures: list[Witness] = []
    checked = 0
    for p in primes:
        for n in range(-n_max, n_max + 1):
            val = _fn(n, p, k_max)
            for k in range(-k_max, k_max + 1):
                lhs = classic_binom(n, k) % p
                rhs = val(k) % p
                checked += 1
                if lhs != rhs:
                    failures.append(Witness((p, n, k), lhs, rhs))
    return IdentityReport(
        "lucas",
        f"p in {_fmt(primes)}, |n| <= {n_max}, |k| <= {k_max}",
        checked,
        tuple(failures),
    )


def check_digit_sum_aggregation(
    bases: Iterable[int] = (2, 3, 4, 5, 6), n_max: int = 200
) -> IdentityReport:
    """C(S_b(n), j) = sum of binom(n,k)_b over 0 <= k <= n with
    S_b(k) = j, for positive n.  A nonzero binom(n,k)_b forces k's
    digits below n's, so no digit sum outside [0, S_b(n)] contributes.
    """
    failures: list[Witness] = []
    checked = 0
    for b in bases:
        for n in range(1, n_max + 1):
            total = digit_sum(n, b)
            sums = [0] * (total + 1)
            for k in range(n + 1):
                v = bary_binom(n, k, b)
                if v:
                    sums[digit_sum(k, b)] += v
            for j in range(total + 1):
                checked += 1
                if sums[j] != comb(total, j):
                    failures.append(Witness((b, n, j), comb(total, j), sums[j]))
    return IdentityReport(
        "aggregation",
        f"b in {_fmt(bases)}, n in [1,{n_max}], all j",
        checked,
        tuple(failures),
    )


def check_star_pascal(
    bases: Iterable[int] = (2, 3, 4, 5, 6), n_max: int = 200, k_max: int = 200
) -> IdentityReport:
    """star(-n,k) + star(-n,k-1) = star(-n+1,k) for positive n, k with
    b∤n and b∤k."""
    return _alt_pascal(_star0, "star-pascal", bases, n_max, k_max)


def check_dstar_pascal(
    bases: Iterable[int] = (2, 3, 4, 5, 6), n_max: int = 200, k_max: int = 200
) -> IdentityReport:
    """Same recurrence for the digit-sum coefficient."""
    return _alt_pascal(_dstar0, "dstar-pascal", bases, n_max, k_max)


def _alt_pascal(fn, identity_id, bases, n_max, k_max) -> IdentityReport:
    failures: list[Witness] = []
    checked = 0
    for b in bases:
        for n in range(1, n_max + 1):
            if n % b == 0:
                continue
            for k in range(1, k_max + 1):
                if k % b == 0:
                    continue
                lhs = fn(-n, k, b) + fn(-n, k - 1, b)
                rhs = fn(-n + 1, k, b)
                checked += 1
                if lhs != rhs:
                    failures.append(Witness((b, n, k), lhs, rhs))
    return IdentityReport(
        identity_id,
        f"b in {_fmt(bases)}, n,k in [1,{n_max}]x[1,{k_max}] with b∤n, b∤k",
        checked,
        tuple(failures),
    )


def find_star_negative_defects(base: int = 4, n_max: int = 10, k_max: int = 19) -> list[Witness]:
    """Counterexamples to the star recurrence at negative k.

    Returns every (n, k) in [1,n_max]x[1,k_max] with b∤n, b∤k where
    star(-n,-k) + star(-n,-k-1) != star(-n+1,-k).  Nonempty: the
    recurrence genuinely fails off the positive-k quadrant.
    """
    out = []
    for n in range(1, n_max + 1):
        if n % base == 0:
            continue
        for k in range(1, k_max + 1):
            if k % base == 0:
                continue
            lhs = _star0(-n, -k, base) + _star0(-n, -k - 1, base)
            rhs = _star0(-n + 1, -k, base)
            if lhs != rhs:
                out.append(Witness((base, n, -k), lhs, rhs))
    return out


def check_cross_oracle(
    bases: Iterable[int] = (2, 3, 4, 5, 6), n_max: int = 60, k_max: int = 120
) -> IdentityReport:
    """Series coefficient extraction against the partition sum.

    The two methods share only the digit expansion, so agreement over
    the grid is a strong end-to-end check of both.
    """
    failures: list[Witness] = []
    checked = 0
    for b in bases:
        for n in range(-n_max, 0):
            val = _fn(n, b, k_max)
            for k in range(-k_max, k_max + 1):
                lhs = bary_binom_series(n, k, b)
                rhs = val(k)
                checked += 1
                if lhs != rhs:
                    failures.append(Witness((b, n, k), lhs, rhs))
    return IdentityReport(
        "cross-oracle",
        f"b in {_fmt(bases)}, n in [-{n_max},-1], |k| <= {k_max}",
        checked,
        tuple(failures),
    )


def pascal_defect_matrix(
    base: int, variant: str = "star", n_max: int = 10, k_max: int = 19
) -> DefectMatrix:
    """Matrix of v(-n,-k) + v(-n,-k-1) - v(-n+1,-k) over n, k >= 1,
    where v is the chosen coefficient (std, star, or dstar)."""
    fns = {"std": lambda n, k, b: bary_binom(n, k, b), "star": _star0, "dstar": _dstar0}
    if variant not in fns:
        raise ValueError(f"unknown variant {variant!r}")
    fn = fns[variant]
    rows = tuple(
        tuple(
            fn(-n, -k, base) + fn(-n, -k - 1, base) - fn(-n + 1, -k, base)
            for k in range(1, k_max + 1)
        )
        for n in range(1, n_max + 1)
    )
    return DefectMatrix(n_max, k_max, rows)


def table1_matrix() -> DefectMatrix:
    """The 10 x 19 base-4 star defect matrix.

    The third term uses index -k, the Pascal form that matches the
    step-one recurrence; see the defect-matrix docstring.
    """
    return pascal_defect_matrix(4, "star", 10, 19)


def _fmt(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)


@dataclass(frozen=True)
class SuiteSpec:
    """One registered sweep: the check plus its fan-out axis, so a
    driver can split work across processes by axis value."""

    func: Callable[..., IdentityReport]
    axis: str
    axis_values: tuple[int, ...]


SUITES: dict[str, SuiteSpec] = {
    "symmetry": SuiteSpec(check_symmetry, "bases", (2, 3, 4, 5, 6)),
    "pascal": SuiteSpec(check_pascal, "bases", (2, 3, 4, 5, 6)),
    "pascal-power": SuiteSpec(check_pascal_power, "bases", (2, 3, 4, 5)),
    "prop33": SuiteSpec(check_prop33, "bases", (2, 3, 4)),
    "chu-neg": SuiteSpec(check_chu_negative, "bases", (2, 3, 4, 5, 6)),
    "chu-mixed": SuiteSpec(check_chu_mixed, "bases", (2, 3, 4, 5, 6)),
    "lucas": SuiteSpec(check_lucas, "primes", (2, 3, 5, 7)),
    "aggregation": SuiteSpec(check_digit_sum_aggregation, "bases", (2, 3, 4, 5, 6)),
    "star-pascal": SuiteSpec(check_star_pascal, "bases", (2, 3, 4, 5, 6)),
    "dstar-pascal": SuiteSpec(check_dstar_pascal, "bases", (2, 3, 4, 5, 6)),
    "cross-oracle": SuiteSpec(check_cross_oracle, "bases", (2, 3, 4, 5, 6)),
}
