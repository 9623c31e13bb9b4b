"""Exact integer core: admissible indexes, word lengths, divisors, thresholds.

Fix integers alpha < beta.  Word lengths have the form (beta/alpha)**j * n!
where the pair (j, n) ranges over the admissible index set

    n >= 1,  n > alpha * floor_log_ratio(n),  0 <= j <= floor_log_ratio(n),

and floor_log_ratio(n) is the floor of the base-(beta/alpha) logarithm of n.
Every quantity here is computed with arbitrary-precision integers; no float
ever participates in a comparison that affects a result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class IntegrityError(RuntimeError):
    """An internal arithmetic guarantee failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class Params:
    """The generator pair (alpha, beta) with 1 <= alpha < beta."""

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 1:
            raise ValueError(f"alpha must be >= 1, got {self.alpha}")
        if self.beta <= self.alpha:
            raise ValueError(
                f"beta must exceed alpha, got alpha={self.alpha}, beta={self.beta}"
            )

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.beta, self.alpha)

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta}


def floor_log_ratio(p: Params, n: int) -> int:
    """Largest k >= 0 with beta**k <= n * alpha**k, i.e. floor(log_{beta/alpha} n).

    Binary search on k with exact integer powers; float logarithms would
    misround near exact powers of beta/alpha.
    """
    if n < 1:
        raise ValueError(f"floor_log_ratio undefined for n={n}")
    if p.beta > n * p.alpha:
        return 0
    hi = 1
    while p.beta ** hi <= n * p.alpha ** hi:
        hi *= 2
    lo = hi // 2
    # invariant: holds at lo, fails at hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if p.beta ** mid <= n * p.alpha ** mid:
            lo = mid
        else:
            hi = mid
    return lo


def level_admitted(p: Params, n: int) -> bool:
    """Whether level n contributes any indexes: n > alpha * floor_log_ratio(n)."""
    return n >= 1 and n > p.alpha * floor_log_ratio(p, n)


def in_index_set(p: Params, j: int, n: int) -> bool:
    """Whether (j, n) is an admissible index.  Total: False outside n >= 1, j >= 0."""
    if n < 1 or j < 0:
        return False
    depth = floor_log_ratio(p, n)
    return n > p.alpha * depth and j <= depth


def word_length(p: Params, j: int, n: int) -> int:
    """The word length (beta/alpha)**j * n! at index (j, n), exactly.

    Computes beta**j * n! and then divides by alpha**j; the division is
    remainderless for every admissible index because n! carries the factors
    alpha, 2*alpha, ..., depth*alpha with depth = floor_log_ratio(n) >= j.
    """
    if not in_index_set(p, j, n):
        raise ValueError(f"({j}, {n}) is not an admissible index for {p}")
    numerator = p.beta ** j * math.factorial(n)
    quotient, rem = divmod(numerator, p.alpha ** j)
    if rem:
        raise IntegrityError(
            f"alpha**j does not divide beta**j * n! at (j={j}, n={n}); "
            "divisibility guarantee violated"
        )
    return quotient


def level_divisor(p: Params, n: int) -> int:
    """n! / (alpha * floor_log_ratio(n) + 1)!: divides every word length at level n.

    Equals the product of alpha*depth + 2, ..., n (empty product 1 when the
    range is empty).
    """
    depth = floor_log_ratio(p, n)
    if n <= p.alpha * depth:
        raise ValueError(f"level {n} is not admitted for {p}")
    out = 1
    for m in range(p.alpha * depth + 2, n + 1):
        out *= m
    return out


def next_index(p: Params, j: int, n: int) -> tuple[int, int]:
    """The admissible index holding the next larger word length after (j, n).

    Within a level, (j+1, n).  At the top of a level, the first admitted
    level above n, found by upward scan: consecutive levels need not be
    admitted when alpha >= 2.
    """
    if not in_index_set(p, j, n):
        raise ValueError(f"({j}, {n}) is not an admissible index for {p}")
    if j < floor_log_ratio(p, n):
        return (j + 1, n)
    m = n + 1
    while not level_admitted(p, m):
        m += 1
    return (0, m)


def growth_cutoff(p: Params, c: Fraction) -> int:
    """Smallest n0 >= 1 with (n0+1)*beta / (n0*alpha) < c; requires c > beta/alpha.

    (n+1)/n decreases, so the inequality holds for every n >= n0.
    """
    c = Fraction(c)
    if c <= p.ratio:
        raise ValueError(f"need c > beta/alpha = {p.ratio}, got c = {c}")
    # (n+1)*beta*den < n*alpha*num  <=>  n > beta*den / (alpha*num - beta*den)
    slack = p.alpha * c.numerator - p.beta * c.denominator
    return p.beta * c.denominator // slack + 1


def _margin_threshold(p: Params, r: int) -> int:
    """Smallest n with n - alpha*(floor_log_ratio(n)+1) >= r past the turning guard.

    For every m >= n the exact margin m - alpha*floor_log_ratio(m) then
    strictly exceeds r:  m - alpha*g*ln(m) is increasing for m > alpha*g
    (g = 1/ln(beta/alpha)), alpha*g <= alpha*beta/(beta-alpha) via
    ln(x) >= 1 - 1/x, and the floor makes the integer margin strictly
    dominate the real one.
    """
    guard = -(-p.alpha * p.beta // (p.beta - p.alpha))  # ceil
    n = guard + 1
    while n - p.alpha * (floor_log_ratio(p, n) + 1) < r:
        n += 1
    return n


def stabilization_threshold(p: Params, r: int) -> int:
    """An N such that every level n >= N satisfies n - alpha*floor_log_ratio(n) > r.

    Past N the range alpha*floor_log_ratio(n) + 2, ..., n spans at least r
    consecutive integers, so r divides level_divisor(n) and hence every word
    length at level n.  N is sound, not minimal.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    return _margin_threshold(p, r)


def contiguous_levels_from(p: Params) -> int:
    """Smallest level M such that every level n >= M is admitted.

    For alpha >= 2 the admitted levels can have gaps near the bottom (for
    example alpha=2, beta=3 omits 2..10 and 12); past M there are none.
    """
    m = _margin_threshold(p, 0)
    while m > 1 and level_admitted(p, m - 1):
        m -= 1
    return m


def suggest_params(c: Fraction) -> Params:
    """A pair (N, N+1) with 1 < beta/alpha < c, for any rational c > 1."""
    c = Fraction(c)
    if c <= 1:
        raise ValueError(f"need c > 1, got {c}")
    n = c.denominator // (c.numerator - c.denominator) + 1
    return Params(n, n + 1)
