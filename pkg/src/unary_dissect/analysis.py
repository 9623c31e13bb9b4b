"""Growth, divisibility, and ratio checks plus the certified dissection verdict.

A regular language R dissects a language L when both L∩R and L∖R are
infinite.  For the scaled-factorial language the verdict is always that no
unary regular machine dissects it: past a computable threshold every word
length is divisible by the machine's cycle length, so the machine pins all
large words to a single residue and exactly one of the two sides stays
finite.  The verdict carries enough data (threshold, finite side, the finite
side's full member list) to be re-checked independently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import NamedTuple, Optional

from .automata import UnaryDfa, dfa_accept
from .construction import (
    Params,
    floor_log_ratio,
    level_admitted,
    next_index,
    stabilization_threshold,
    word_length,
)
from .lengthsets import LengthSet, ScaledFactorialSet


@dataclass(frozen=True)
class GrowthReport:
    mode: str  # "constant" | "geometric"
    c: Fraction
    checked_count: int
    ok: bool
    witness: Optional[tuple[int, int, int]] = None  # (index, length, successor)


@dataclass(frozen=True)
class DivisibilityReport:
    checked_count: int
    ok: bool
    witness: Optional[tuple[int, int, int, int]] = None  # (j, n, length, divisor)


@dataclass(frozen=True)
class GapSkip:
    """A successor step that jumped past level n+1 (admitted levels had a gap)."""

    from_index: tuple[int, int]
    to_index: tuple[int, int]


@dataclass(frozen=True)
class RatioReport:
    steps: int
    within_level: int
    cross_level: int
    equality_cases: int  # cross steps landing exactly on the (n+1)/n lower bound
    gap_skips: tuple[GapSkip, ...]
    ok: bool
    witness: Optional[tuple[tuple[int, int], tuple[int, int], str]] = None


class EmpiricalCounts(NamedTuple):
    in_count: int
    out_count: int
    last_in_index: Optional[int]
    last_out_index: Optional[int]


@dataclass(frozen=True)
class DissectionVerdict:
    r_cycle: int
    threshold_n0: int
    stable_residue: int  # always 0: large lengths are ≡ 0 mod r_cycle
    finite_side: str  # "intersection" | "difference"
    exceptional_lengths: tuple[int, ...]
    conclusion: str = "not_dissecting"


def check_growth(s: LengthSet, mode: str, c: Fraction, k: int) -> GrowthReport:
    """Check the first k lengths for the growth property, exactly.

    geometric: every length has a successor at most c times as long.
    constant: every length has a successor at most c letters longer.
    In a strictly increasing stream the immediate successor is the only
    candidate, so consecutive pairs decide the property.  Boundary equality
    passes in both modes.
    """
    c = Fraction(c)
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if mode == "geometric":
        if c <= 1:
            raise ValueError(f"geometric mode needs c > 1, got {c}")
    elif mode == "constant":
        if c < 1:
            raise ValueError(f"constant mode needs c >= 1, got {c}")
    else:
        raise ValueError(f"unknown growth mode {mode!r}")

    checked = 0
    prev: Optional[int] = None
    for i, length in enumerate(islice(iter(s), k)):
        if prev is not None:
            checked += 1
            if mode == "geometric":
                holds = length * c.denominator <= c.numerator * prev
            else:
                holds = (length - prev) * c.denominator <= c.numerator
            if not holds:
                return GrowthReport(mode, c, checked, False, (i - 1, prev, length))
        prev = length
    return GrowthReport(mode, c, checked, True)


def check_divisibility(p: Params, n_max: int) -> DivisibilityReport:
    """Every word length at level n <= n_max is a multiple of the level divisor."""
    if n_max < 1:
        raise ValueError(f"need n_max >= 1, got {n_max}")
    checked = 0
    for n in range(1, n_max + 1):
        if not level_admitted(p, n):
            continue
        divisor = _level_divisor_fast(p, n)
        for j in range(floor_log_ratio(p, n) + 1):
            length = word_length(p, j, n)
            checked += 1
            if length % divisor:
                return DivisibilityReport(checked, False, (j, n, length, divisor))
    return DivisibilityReport(checked, True)


def _level_divisor_fast(p: Params, n: int) -> int:
    # product of alpha*depth+2 .. n, same as construction.level_divisor
    depth = floor_log_ratio(p, n)
    out = 1
    for m in range(p.alpha * depth + 2, n + 1):
        out *= m
    return out


def check_ratio_bounds(p: Params, k: int) -> RatioReport:
    """Walk k successor steps from (0, 1) and bound each length ratio exactly.

    Within a level the ratio is beta/alpha on the nose.  Stepping to level
    n+1 the ratio must lie in [(n+1)/n, (n+1)*beta/(n*alpha)]; the lower end
    is attainable (levels where (beta/alpha)**depth equals n exactly), so it
    is asserted non-strictly and equality occurrences are counted.  Steps
    that skip past level n+1 entirely carry no bound; they are recorded as
    gap skips.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    j, n = 0, 1
    length = word_length(p, j, n)
    within = cross = equal = 0
    skips: list[GapSkip] = []
    for _ in range(k):
        j2, n2 = next_index(p, j, n)
        length2 = word_length(p, j2, n2)
        if length2 <= length:
            return RatioReport(
                within + cross,
                within,
                cross,
                equal,
                tuple(skips),
                False,
                ((j, n), (j2, n2), "not increasing"),
            )
        if n2 == n:
            within += 1
            if length2 * p.alpha != length * p.beta:
                return RatioReport(
                    within + cross,
                    within,
                    cross,
                    equal,
                    tuple(skips),
                    False,
                    ((j, n), (j2, n2), "within-level ratio is not beta/alpha"),
                )
        elif n2 == n + 1:
            cross += 1
            lower_ok = length2 * n >= length * (n + 1)
            upper_ok = length2 * n * p.alpha <= length * (n + 1) * p.beta
            if not (lower_ok and upper_ok):
                side = "below (n+1)/n" if not lower_ok else "above (n+1)b/(na)"
                return RatioReport(
                    within + cross,
                    within,
                    cross,
                    equal,
                    tuple(skips),
                    False,
                    ((j, n), (j2, n2), f"cross-level ratio {side}"),
                )
            if length2 * n == length * (n + 1):
                equal += 1
        else:
            skips.append(GapSkip((j, n), (j2, n2)))
        j, n, length = j2, n2, length2
    return RatioReport(k, within, cross, equal, tuple(skips), True)


def dissect_verdict(p: Params, d: UnaryDfa) -> DissectionVerdict:
    """Certify that the machine's language does not dissect the scaled factorials.

    Let r be the machine's cycle length and N the stabilization threshold.
    Every word length from level N up is ≡ 0 (mod r), so once lengths also
    clear the machine's tail they all land on one cycle position: the one at
    offset (-q_tail) mod r.  If that position accepts, the language minus
    the machine is finite; otherwise the intersection is finite.  The finite
    side's full membership is the filtered union of the level < N lengths
    and the lengths below the tail, both finite and enumerated exactly.
    """
    r = d.r_cycle
    threshold = stabilization_threshold(p, r)
    accepts_stable = d.cycle_accepting[(-d.q_tail) % r]
    finite_side = "difference" if accepts_stable else "intersection"

    candidates: set[int] = set()
    for n in range(1, threshold):
        if not level_admitted(p, n):
            continue
        for j in range(floor_log_ratio(p, n) + 1):
            candidates.add(word_length(p, j, n))
    for length in iter(ScaledFactorialSet(p)):
        if length >= d.q_tail:
            break
        candidates.add(length)

    # the intersection side keeps accepted lengths, the difference side rejected ones
    exceptional = sorted(
        length
        for length in candidates
        if dfa_accept(d, length) == (finite_side == "intersection")
    )
    return DissectionVerdict(
        r_cycle=r,
        threshold_n0=threshold,
        stable_residue=0,
        finite_side=finite_side,
        exceptional_lengths=tuple(exceptional),
    )


def empirical_counts(s: LengthSet, d: UnaryDfa, k: int) -> EmpiricalCounts:
    """Classify the first k lengths by machine acceptance.

    Under non-dissection one side must stop receiving elements; the returned
    last-seen indexes make the stall visible.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    in_count = out_count = 0
    last_in: Optional[int] = None
    last_out: Optional[int] = None
    for i, length in enumerate(islice(iter(s), k)):
        if dfa_accept(d, length):
            in_count += 1
            last_in = i
        else:
            out_count += 1
            last_out = i
    return EmpiricalCounts(in_count, out_count, last_in, last_out)


def cross_check(p: Params, d: UnaryDfa, k: int) -> bool:
    """Replay the verdict against a plain enumeration of the first k lengths.

    True iff the finite side receives exactly the verdict's exceptional
    lengths within the prefix.  The prefix must provably cover every
    possible exceptional element: its last element needs level >= threshold
    and length >= the machine's tail, else the check refuses to conclude.
    """
    verdict = dissect_verdict(p, d)
    rows = list(islice(ScaledFactorialSet(p).records(), k))
    if not rows:
        raise ValueError("k too small: empty prefix")
    last_n, _, last_length = rows[-1]
    if last_n < verdict.threshold_n0 or last_length < d.q_tail:
        raise ValueError(
            f"k too small: prefix ends at level {last_n}, needs level >= "
            f"{verdict.threshold_n0} and length >= {d.q_tail}"
        )
    want_accepted = verdict.finite_side == "intersection"
    observed = {
        length for (_, _, length) in rows if dfa_accept(d, length) == want_accepted
    }
    return observed == set(verdict.exceptional_lengths)


def certificate(
    p: Params,
    d: UnaryDfa,
    verdict: DissectionVerdict,
    cross_check_result: Optional[tuple[int, bool]] = None,
) -> dict:
    """Self-contained verdict record; field order is fixed for byte-stable output."""
    doc = {
        "params": p.to_json(),
        "dfa": d.to_json(),
        "r": verdict.r_cycle,
        "threshold_n0": verdict.threshold_n0,
        "finite_side": verdict.finite_side,
        "exceptional_lengths": [str(x) for x in verdict.exceptional_lengths],
        "conclusion": verdict.conclusion,
    }
    if cross_check_result is not None:
        k, ok = cross_check_result
        doc["cross_check"] = {"k": k, "ok": ok}
    return doc
