"""Exact Catalan/binomial arithmetic and the closed forms built on it.

Counts are plain Python ints (arbitrary precision); averages are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.  Nothing here touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

Ratio = Fraction


class DomainError(ValueError):
    """A parameter lies outside the range where an operation is defined."""


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division {num}/{den}")
    return q


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    """C_n = binom(2n, n) / (n + 1), and 0 for negative n."""
    if n < 0:
        return 0
    return _exact_div(comb(2 * n, n), n + 1)


def binomial(n: int, k: int) -> int:
    """binom(n, k) for n >= 0; zero when k falls outside [0, n]."""
    _require(n >= 0, f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def f_closed(k: int, n: int) -> int:
    """Number of k-in-n dissections, binom(2n-k-1, n-1)."""
    _require(3 <= k <= n, f"f_closed needs 3 <= k <= n, got k={k}, n={n}")
    return binomial(2 * n - k - 1, n - 1)


def convolution_lhs(k: int, n: int) -> int:
    """Sum over compositions (i_1..i_k) of n of prod C_{i_r - 1}.

    Computed as the k-th convolution power of the shifted sequence
    a_m = C_{m-1} (a_0 = 0), read off at index n.
    """
    _require(1 <= k <= n, f"convolution_lhs needs 1 <= k <= n, got k={k}, n={n}")
    base = [catalan(m - 1) for m in range(n + 1)]
    power = base
    for _ in range(k - 1):
        power = [
            sum(power[j] * base[m - j] for j in range(m + 1)) for m in range(n + 1)
        ]
    return power[n]


def convolution_rhs(k: int, n: int) -> int:
    """k * binom(2n-k, n) / (2n-k), with the division checked exact."""
    _require(1 <= k <= n, f"convolution_rhs needs 1 <= k <= n, got k={k}, n={n}")
    return _exact_div(k * binomial(2 * n - k, n), 2 * n - k)


def segner_sum(n: int) -> int:
    """sum_{i=0}^{n} C_i C_{n-i}; equals C_{n+1}."""
    _require(n >= 0, f"segner_sum needs n >= 0, got n={n}")
    return sum(catalan(i) * catalan(n - i) for i in range(n + 1))


def weighted_catalan_sum(n: int) -> int:
    """sum_{i>=0} i C_i C_{n-i}; equals binom(2n+1, n-1)."""
    _require(n >= 1, f"weighted_catalan_sum needs n >= 1, got n={n}")
    return sum(i * catalan(i) * catalan(n - i) for i in range(n + 1))


def lemma_pq_sum(p: int, q: int) -> int:
    """sum_{i>=0} C_i binom(p-1-2i, q-1-i) for 1 <= q <= p <= 2q-1."""
    _require(
        1 <= q <= p <= 2 * q - 1,
        f"lemma_pq_sum needs 1 <= q <= p <= 2q-1, got p={p}, q={q}",
    )
    # a term is zero once either binomial index goes negative
    last = min(q - 1, (p - 1) // 2)
    return sum(catalan(i) * binomial(p - 1 - 2 * i, q - 1 - i) for i in range(last + 1))


def diagonal_recurrence_sides(k: int, n: int, f=f_closed, upper: int | None = None) -> tuple[int, int]:
    """Both sides of (n-k) f_k(n) = n * sum_{i=2}^{n-k+1} C_{i-1} f_k(n-i+1).

    ``f`` is the counting function plugged in; ``upper`` overrides the
    summation's upper limit (default n-k+1).
    """
    _require(3 <= k <= n, f"recurrence needs 3 <= k <= n, got k={k}, n={n}")
    top = n - k + 1 if upper is None else upper
    rhs = n * sum(catalan(i - 1) * f(k, n - i + 1) for i in range(2, top + 1))
    return (n - k) * f(k, n), rhs


def average_cycles_closed(k: int, n: int) -> Fraction:
    """Mean number of k-cycles over the triangulations of an n-gon."""
    _require(3 <= k < n, f"average_cycles_closed needs 3 <= k < n, got k={k}, n={n}")
    return Fraction(f_closed(k, n) * catalan(k - 2), catalan(n - 2))
