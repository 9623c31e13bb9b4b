"""Deterministic automata over a one-letter alphabet in tail+cycle form.

With a single input letter, every DFA walked from its start state is a
lasso: a tail of q states followed by a cycle of r states.  Acceptance of a
word therefore depends only on its length, through at most one big-integer
modulus, and the whole machine reduces to two flag vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .lengthsets import ApSet, make_ap


@dataclass(frozen=True)
class UnaryDfa:
    """Normal form: acceptance flags for tail positions then cycle positions.

    A word of length L is accepted iff tail_accepting[L] (L < q_tail) or
    cycle_accepting[(L - q_tail) % r_cycle] (L >= q_tail).  Two machines with
    equal flag vectors are equal; state identities are gone by construction.
    """

    tail_accepting: tuple[bool, ...]
    cycle_accepting: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.cycle_accepting) < 1:
            raise ValueError("cycle must have at least one state")

    @property
    def q_tail(self) -> int:
        return len(self.tail_accepting)

    @property
    def r_cycle(self) -> int:
        return len(self.cycle_accepting)

    def to_json(self) -> dict:
        return {
            "tail": [bool(b) for b in self.tail_accepting],
            "cycle": [bool(b) for b in self.cycle_accepting],
        }


@dataclass(frozen=True)
class ApComponent:
    """One accepting cycle position as the progression {q + i*r : i >= 1}."""

    q: int
    r: int

    def __post_init__(self) -> None:
        if self.q < 0 or self.r < 1:
            raise ValueError(f"need q >= 0 and r >= 1, got q={self.q}, r={self.r}")


def dfa_from_table(
    transitions: Sequence[int] | Mapping[int, int],
    start: int,
    accepting: set[int] | Sequence[int],
) -> UnaryDfa:
    """Normalize a one-letter transition table by walking it from the start state.

    The walk repeats a state after at most m steps; positions before the
    first repeat become the tail, the loop becomes the cycle.  States not on
    the walk are unreachable and dropped.
    """
    if isinstance(transitions, Mapping):
        m = len(transitions)
        if set(transitions.keys()) != set(range(m)):
            raise ValueError("transition map must cover states 0..m-1 exactly")
        table = [transitions[s] for s in range(m)]
    else:
        table = list(transitions)
        m = len(table)
    if m == 0:
        raise ValueError("empty transition table")
    if not 0 <= start < m:
        raise ValueError(f"start state {start} out of range 0..{m - 1}")
    for s, t in enumerate(table):
        if not isinstance(t, int) or not 0 <= t < m:
            raise ValueError(f"state {s}: missing or invalid transition target {t!r}")
    accepting = set(accepting)
    if not accepting <= set(range(m)):
        raise ValueError("accepting set contains unknown states")

    walk: list[int] = []
    position: dict[int, int] = {}
    state = start
    while state not in position:
        position[state] = len(walk)
        walk.append(state)
        state = table[state]
    loop_start = position[state]
    tail = tuple(s in accepting for s in walk[:loop_start])
    cycle = tuple(s in accepting for s in walk[loop_start:])
    return UnaryDfa(tail, cycle)


def dfa_accept(d: UnaryDfa, length: int) -> bool:
    """Acceptance of the word of the given length; cost is one modulus on big ints."""
    if length < 0:
        raise ValueError(f"word length must be >= 0, got {length}")
    if length < d.q_tail:
        return d.tail_accepting[length]
    return d.cycle_accepting[(length - d.q_tail) % d.r_cycle]


def decompose(d: UnaryDfa) -> tuple[list[ApComponent], list[int]]:
    """Split the language into progression components plus a finite exceptional set.

    Each accepting cycle position at offset o accepts exactly the lengths
    q_tail + o, q_tail + o + r, ...  With the convention that a component
    {q + i*r : i >= 1} excludes q itself, the component gets
    q = q_tail + o - r when that is >= 0; otherwise q = q_tail + o and the
    first accepted length moves to the exceptional set.  Accepting tail
    positions are exceptional outright.  A machine with no accepting cycle
    position has a finite language: no components at all.
    """
    components: list[ApComponent] = []
    exceptional: list[int] = []
    for length, flag in enumerate(d.tail_accepting):
        if flag:
            exceptional.append(length)
    for offset, flag in enumerate(d.cycle_accepting):
        if not flag:
            continue
        smallest = d.q_tail + offset
        if smallest >= d.r_cycle:
            components.append(ApComponent(smallest - d.r_cycle, d.r_cycle))
        else:
            exceptional.append(smallest)
            components.append(ApComponent(smallest, d.r_cycle))
    components.sort(key=lambda comp: comp.q)
    exceptional.sort()
    return components, exceptional


def component_language(comp: ApComponent) -> ApSet:
    return make_ap(comp.q, comp.r)


def ap_machine(q: int, r: int) -> UnaryDfa:
    """The canonical acceptor of {q + i*r : i >= 1}: tail of q+1 rejecting states."""
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    cycle = [False] * r
    cycle[r - 1] = True
    return UnaryDfa(tuple([False] * (q + 1)), tuple(cycle))


def dfa_from_json(obj: object) -> UnaryDfa:
    """Accept either normal form {"tail", "cycle"} or table form
    {"transitions", "start", "accepting"}."""
    if not isinstance(obj, dict):
        raise ValueError("DFA JSON must be an object")
    if "tail" in obj or "cycle" in obj:
        tail = obj.get("tail", [])
        cycle = obj.get("cycle")
        if cycle is None:
            raise ValueError('normal-form DFA needs a "cycle" array')
        if not all(isinstance(b, bool) for b in tail) or not all(
            isinstance(b, bool) for b in cycle
        ):
            raise ValueError("tail and cycle must be arrays of booleans")
        return UnaryDfa(tuple(tail), tuple(cycle))
    if "transitions" in obj:
        try:
            return dfa_from_table(
                obj["transitions"], obj.get("start", 0), obj.get("accepting", [])
            )
        except (TypeError, KeyError) as exc:
            raise ValueError(f"malformed table-form DFA: {exc}") from exc
    raise ValueError('DFA JSON needs either "tail"/"cycle" or "transitions"')
