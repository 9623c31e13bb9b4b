"""Infinite unary languages as strictly increasing streams of word lengths.

A word over a one-letter alphabet is fully described by its length, so a
language is a set of non-negative integers.  Lengths here outgrow every
fixed-width type within a handful of elements (they are scaled factorials),
hence words are never materialized as strings.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from itertools import islice
from typing import Iterator, Optional

from .construction import (
    IntegrityError,
    Params,
    contiguous_levels_from,
    floor_log_ratio,
    growth_cutoff,
    level_admitted,
)


class LengthSet:
    """Strictly increasing stream of word lengths with a membership test.

    Instances are restartable: ``iter(s)`` starts a fresh enumeration, while
    ``s.next()`` advances a private iterator.  ``contains`` always enumerates
    a fresh stream, so it never disturbs consumer state.
    """

    descriptor: str = "abstract"

    def _generate(self) -> Iterator[int]:
        raise NotImplementedError

    def __iter__(self) -> Iterator[int]:
        return self._generate()

    def next(self) -> int:
        it = getattr(self, "_it", None)
        if it is None:
            it = self._generate()
            self._it = it
        return next(it)

    def contains(self, length: int) -> bool:
        for x in self._generate():
            if x == length:
                return True
            if x > length:
                return False
        return False

    def prefix(self, k: int) -> list[int]:
        """First k lengths (fewer if the set is finite)."""
        return list(islice(self._generate(), k))

    def records(self) -> Iterator[tuple[Optional[int], Optional[int], int]]:
        """(level, step, length) triples; level and step are None when unindexed."""
        for x in self._generate():
            yield (None, None, x)


class ScaledFactorialSet(LengthSet):
    """All lengths (beta/alpha)**j * n! over admissible (j, n) with n >= min_level.

    Enumeration follows (level, step) order, which coincides with numeric
    order.  State per level: the running factorial (one multiplication per
    level) and the level depth; each step within a level multiplies the
    current length by beta and divides by alpha exactly.
    """

    def __init__(self, params: Params, min_level: int = 1):
        if min_level < 1:
            raise ValueError(f"min_level must be >= 1, got {min_level}")
        self.params = params
        self.min_level = min_level
        self.descriptor = (
            f"scaled-factorials(alpha={params.alpha}, beta={params.beta}, "
            f"min_level={min_level})"
        )

    def records(self) -> Iterator[tuple[int, int, int]]:
        p = self.params
        n = self.min_level
        fact = math.factorial(n)
        last = None
        while True:
            if level_admitted(p, n):
                depth = floor_log_ratio(p, n)
                length = fact
                for j in range(depth + 1):
                    if j:
                        scaled = length * p.beta
                        if scaled % p.alpha:
                            raise IntegrityError(
                                f"non-integer length at (j={j}, n={n})"
                            )
                        length = scaled // p.alpha
                    if last is not None and length <= last:
                        raise IntegrityError(
                            f"stream not strictly increasing at (j={j}, n={n})"
                        )
                    last = length
                    yield (n, j, length)
            n += 1
            fact *= n

    def _generate(self) -> Iterator[int]:
        return (length for (_, _, length) in self.records())


class FactorialSet(LengthSet):
    """The lengths 1!, 2!, 3!, ..."""

    descriptor = "factorials"

    def _generate(self) -> Iterator[int]:
        fact = 1
        n = 1
        while True:
            yield fact
            n += 1
            fact *= n


class ApSet(LengthSet):
    """The arithmetic progression q + r, q + 2r, q + 3r, ...  (q itself excluded)."""

    def __init__(self, q: int, r: int):
        if q < 0:
            raise ValueError(f"q must be >= 0, got {q}")
        if r < 1:
            raise ValueError(f"r must be >= 1, got {r}")
        self.q = q
        self.r = r
        self.descriptor = f"progression(q={q}, r={r})"

    def _generate(self) -> Iterator[int]:
        x = self.q
        while True:
            x += self.r
            yield x

    def contains(self, length: int) -> bool:
        return length >= self.q + self.r and (length - self.q) % self.r == 0


class FileSet(LengthSet):
    """Lengths loaded from a text file: one decimal integer per line, strictly increasing."""

    def __init__(self, path: str):
        lengths: list[int] = []
        with open(path, "r", encoding="ascii") as fp:
            for lineno, line in enumerate(fp, start=1):
                text = line.strip()
                if not text:
                    raise ValueError(f"{path}: line {lineno}: blank line")
                try:
                    value = int(text)
                except ValueError:
                    raise ValueError(
                        f"{path}: line {lineno}: not a decimal integer: {text!r}"
                    ) from None
                if value < 0:
                    raise ValueError(f"{path}: line {lineno}: negative length")
                if lengths and value == lengths[-1]:
                    raise ValueError(f"{path}: line {lineno}: duplicate of previous line")
                if lengths and value < lengths[-1]:
                    raise ValueError(f"{path}: line {lineno}: not strictly increasing")
                lengths.append(value)
        self._lengths = tuple(lengths)
        self.descriptor = f"file({path})"

    def _generate(self) -> Iterator[int]:
        return iter(self._lengths)

    def contains(self, length: int) -> bool:
        import bisect

        i = bisect.bisect_left(self._lengths, length)
        return i < len(self._lengths) and self._lengths[i] == length


def make_scaled_factorials(params: Params) -> ScaledFactorialSet:
    """The full scaled-factorial language for (alpha, beta)."""
    return ScaledFactorialSet(params, min_level=1)


def core_min_level(params: Params, c: Fraction) -> int:
    """First level kept in the c-geometrically-growing core.

    Two requirements: the cross-level ratio bound (n+1)*beta/(n*alpha) < c
    must hold from here on (level above growth_cutoff), and the admitted
    levels must be contiguous from here on, so that every kept length really
    has a successor within factor c.  Level gaps (alpha >= 2) otherwise leave
    a kept element whose nearest successor overshoots c.
    """
    return max(growth_cutoff(params, c) + 1, contiguous_levels_from(params))


def make_geometric_core(params: Params, c: Fraction) -> ScaledFactorialSet:
    """The cofinite subset that is c-geometrically growing; requires c > beta/alpha."""
    return ScaledFactorialSet(params, min_level=core_min_level(params, c))


def dropped_prefix(params: Params, c: Fraction) -> list[int]:
    """The finitely many lengths removed from the full language by the core cut."""
    cut = core_min_level(params, c)
    out = []
    for n, _, length in ScaledFactorialSet(params).records():
        if n >= cut:
            break
        out.append(length)
    return out


def make_factorial() -> FactorialSet:
    return FactorialSet()


def make_ap(q: int, r: int) -> ApSet:
    return ApSet(q, r)


def make_file_set(path: str) -> FileSet:
    return FileSet(path)


def jsonl_line(n: Optional[int], j: Optional[int], length: int) -> str:
    """One stream-export record; lengths travel as decimal strings."""
    return json.dumps({"n": n, "j": j, "length": str(length)})
