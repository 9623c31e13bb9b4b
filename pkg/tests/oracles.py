"""Brute-force reference implementations the tests check the library against.

Everything here is deliberately naive: linear scans, full enumeration plus
sorting, exact Fraction arithmetic, and step-by-step machine simulation.
None of it shares code with the library.
"""

from fractions import Fraction
from math import factorial


def brute_floor_log(alpha: int, beta: int, n: int) -> int:
    """Largest k with beta**k <= n * alpha**k, by linear scan from zero."""
    k = 0
    while beta ** (k + 1) <= n * alpha ** (k + 1):
        k += 1
    return k


def brute_level_admitted(alpha: int, beta: int, n: int) -> bool:
    return n >= 1 and n > alpha * brute_floor_log(alpha, beta, n)


def brute_index_set(alpha: int, beta: int, n_max: int) -> list[tuple[int, int]]:
    """All admissible (j, n) with n <= n_max, in (n, j) order."""
    out = []
    for n in range(1, n_max + 1):
        if not brute_level_admitted(alpha, beta, n):
            continue
        for j in range(brute_floor_log(alpha, beta, n) + 1):
            out.append((j, n))
    return out


def brute_length(alpha: int, beta: int, j: int, n: int) -> int:
    value = Fraction(beta, alpha) ** j * factorial(n)
    assert value.denominator == 1, (alpha, beta, j, n)
    return int(value)


def brute_sorted_lengths(alpha: int, beta: int, n_max: int) -> list[int]:
    """All lengths up to level n_max, sorted; asserts there are no duplicates."""
    lengths = [brute_length(alpha, beta, j, n) for (j, n) in brute_index_set(alpha, beta, n_max)]
    lengths.sort()
    assert len(set(lengths)) == len(lengths), "duplicate lengths in the index set"
    return lengths


def simulate_acceptance(transitions: list[int], start: int, accepting: set[int], max_len: int) -> list[bool]:
    """Acceptance of every word length 0..max_len by walking the table stepwise."""
    out = []
    state = start
    out.append(state in accepting)
    for _ in range(max_len):
        state = transitions[state]
        out.append(state in accepting)
    return out
