"""
Exact Combinatorics

Binomials, Stirling numbers of the second kind and the cardinalities of
T(X,Y,Z), of its regular elements and of its idempotents. Every value is a
Python int; nothing here rounds.
"""

import threading
from math import comb, factorial
from typing import List

from ..schemas import ErrorCode, SemigroupError, Universe

Count = int

_stirling_rows: List[List[int]] = [[1]]
_stirling_lock = threading.Lock()


def binomial(n: int, r: int) -> Count:
    """C(n, r), and 0 outside 0 ≤ r ≤ n."""
    if r < 0 or r > n:
        return 0
    return comb(n, r)


def stirling2(n: int, r: int) -> Count:
    """
    Stirling number of the second kind S(n, r).

    Rows are built with S(n,r) = r·S(n−1,r) + S(n−1,r−1) from S(0,0) = 1 and
    S(p,0) = 0 for p ≥ 1, and memoized. The table only grows and every row is
    complete before it is published.
    """
    if n < 0 or r < 0:
        raise ValueError("stirling2 takes nonnegative arguments")
    if r > n:
        return 0
    if n >= len(_stirling_rows):
        with _stirling_lock:
            while n >= len(_stirling_rows):
                previous = _stirling_rows[-1]
                p = len(_stirling_rows)
                row = [0] * (p + 1)
                for j in range(1, p + 1):
                    row[j] = (j * previous[j] if j < p else 0) + previous[j - 1]
                _stirling_rows.append(row)
    return _stirling_rows[n][r]


def stirling2_alternating(n: int, r: int) -> Count:
    """S(n, r) = (1/r!) Σ_{i=0}^{r} (−1)^i C(r,i) (r−i)^n, kept as a cross-check."""
    if n < 0 or r < 0:
        raise ValueError("stirling2_alternating takes nonnegative arguments")
    total = sum((-1) ** i * comb(r, i) * (r - i) ** n for i in range(r + 1))
    quotient, remainder = divmod(total, factorial(r))
    assert remainder == 0
    return quotient


def _check_stratum(u: Universe, r: int, upper: int, what: str) -> None:
    if not 1 <= r <= upper:
        raise SemigroupError.of(
            ErrorCode.STRATUM_OUT_OF_RANGE,
            f"{what} r = {r} is outside 1 ≤ r ≤ {upper} for universe {u}.",
        )


def order_stratum(u: Universe, r: int) -> Count:
    """|{α : |Yα| = r}| = C(k,r) · r! · S(m,r) · n^(n−m)."""
    _check_stratum(u, r, u.k, "Stratum")
    n, m, k = u.as_tuple()
    return binomial(k, r) * factorial(r) * stirling2(m, r) * n ** (n - m)


def order(u: Universe) -> Count:
    """|T(X,Y,Z)| = k^m · n^(n−m), checked against the sum over strata."""
    n, m, k = u.as_tuple()
    closed = k ** m * n ** (n - m)
    assert closed == sum(order_stratum(u, r) for r in range(1, k + 1))
    return closed


def regular_stratum_count(u: Universe, r: int) -> Count:
    """Regular elements with |Zα| = r: C(k,r) · r! · S(k,r) · r^(m−k) · (n−m+r)^(n−m)."""
    _check_stratum(u, r, u.k, "Stratum")
    n, m, k = u.as_tuple()
    return binomial(k, r) * factorial(r) * stirling2(k, r) * r ** (m - k) * (n - m + r) ** (n - m)


def regular_count(u: Universe) -> Count:
    return sum(regular_stratum_count(u, r) for r in range(1, u.k + 1))


def idempotent_rank_count(u: Universe, r: int) -> Count:
    """
    Idempotents with |Xα| = r.

    Σ_{i=max(1, m−n+r)}^{min(k, r)} C(k,i) · C(n−m, r−i) · i^(m−i) · r^(n−m−r+i);
    an empty index range contributes 0.
    """
    n, m, k = u.as_tuple()
    _check_stratum(u, r, n - m + k, "Rank")
    return sum(
        binomial(k, i) * binomial(n - m, r - i) * i ** (m - i) * r ** (n - m - r + i)
        for i in range(max(1, m - n + r), min(k, r) + 1)
    )


def idempotent_count(u: Universe) -> Count:
    n, m, k = u.as_tuple()
    return sum(idempotent_rank_count(u, r) for r in range(1, n - m + k + 1))


# =============================================================================
# Classical families
# =============================================================================

def order_invariant_set(n: int, m: int) -> Count:
    """|T̄(X,Y)| = m^m · n^(n−m)."""
    return m ** m * n ** (n - m)


def order_restricted_range(n: int, k: int) -> Count:
    """|T(X,Z)| = Σ C(k,r) r! S(n,r) = k^n."""
    return k ** n


def regular_invariant_set(n: int, m: int) -> Count:
    """|Reg(T̄(X,Y))| = Σ_{r=1}^{m} C(m,r) r! S(m,r) (n−m+r)^(n−m)."""
    return sum(
        binomial(m, r) * factorial(r) * stirling2(m, r) * (n - m + r) ** (n - m)
        for r in range(1, m + 1)
    )


def regular_restricted_range(n: int, k: int) -> Count:
    """|Reg(T(X,Z))| = Σ_{r=1}^{k} C(k,r) r! S(k,r) r^(n−k)."""
    return sum(
        binomial(k, r) * factorial(r) * stirling2(k, r) * r ** (n - k)
        for r in range(1, k + 1)
    )


def idempotent_invariant_set(n: int, m: int) -> Count:
    return sum(
        binomial(m, i) * binomial(n - m, r - i) * i ** (m - i) * r ** (n - m - r + i)
        for r in range(1, n + 1)
        for i in range(max(1, m - n + r), min(m, r) + 1)
    )


def idempotent_restricted_range(n: int, k: int) -> Count:
    """|E(T(X,Z))| = Σ_{r=1}^{k} C(k,r) r^(n−r)."""
    return sum(binomial(k, r) * r ** (n - r) for r in range(1, k + 1))


def idempotent_full(n: int) -> Count:
    """|E(T(X))| = Σ_{r=1}^{n} C(n,r) r^(n−r)."""
    return idempotent_restricted_range(n, n)
