"""Complete deterministic finite automata and reset-word computations.

States are the integers 0..n-1 and letters the integers 0..k-1.  Published
diagrams for the classical families usually number states from 1; the mapping
is simply i -> i-1.  State sets are kept as fixed-width bitmasks so that
subset-BFS visited checks are a single integer comparison.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import permutations

from .errors import InputError, ResourceCapError

# A word is a sequence of letter indices; () is the empty word.
Word = tuple[int, ...]

# Subset BFS is exponential in the state count; beyond this it is refused
# unless the caller raises the cap explicitly.
DEFAULT_STATE_CAP = 26


@dataclass(frozen=True)
class Dfa:
    """A complete DFA: ``delta[q][a]`` is the successor of state q on letter a."""

    n: int
    k: int
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"state count must be a positive integer, got {self.n!r}")
        if not isinstance(self.k, int) or self.k < 1:
            raise InputError(f"alphabet size must be a positive integer, got {self.k!r}")
        rows = tuple(tuple(int(t) for t in row) for row in self.delta)
        object.__setattr__(self, "delta", rows)
        if len(rows) != self.n:
            raise InputError(f"transition table has {len(rows)} rows, expected {self.n}")
        for q, row in enumerate(rows):
            if len(row) != self.k:
                raise InputError(f"state {q} has {len(row)} transitions, expected {self.k}")
            for a, t in enumerate(row):
                if not 0 <= t < self.n:
                    raise InputError(f"delta[{q}][{a}] = {t} is not a state")

    def step(self, q: int, a: int) -> int:
        return self.delta[q][a]

    def letter_rows(self) -> list[list[int]]:
        """Per-letter bit rows: ``rows[a][q]`` has the bit of delta[q][a] set."""
        return [[1 << self.delta[q][a] for q in range(self.n)] for a in range(self.k)]


@dataclass(frozen=True)
class StateSet:
    """A subset of the states of an n-state automaton, stored as a bitmask."""

    n: int
    bits: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"state count must be a positive integer, got {self.n!r}")
        if not 0 <= self.bits < (1 << self.n):
            raise InputError(f"bitmask {self.bits:#x} out of range for {self.n} states")

    @classmethod
    def full(cls, n: int) -> StateSet:
        return cls(n, (1 << n) - 1)

    @classmethod
    def of(cls, n: int, states: Iterable[int]) -> StateSet:
        bits = 0
        for q in states:
            if not 0 <= q < n:
                raise InputError(f"state {q} out of range for {n} states")
            bits |= 1 << q
        return cls(n, bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self):
        m = self.bits
        while m:
            lb = m & -m
            yield lb.bit_length() - 1
            m ^= lb

    def __contains__(self, q: int) -> bool:
        return 0 <= q < self.n and self.bits >> q & 1 == 1

    def is_singleton(self) -> bool:
        return self.bits != 0 and self.bits & (self.bits - 1) == 0

    def the_state(self) -> int:
        if not self.is_singleton():
            raise InputError("state set is not a singleton")
        return self.bits.bit_length() - 1


def _image_bits(bits: int, row: Sequence[int]) -> int:
    img = 0
    m = bits
    while m:
        lb = m & -m
        img |= row[lb.bit_length() - 1]
        m ^= lb
    return img


def apply(dfa: Dfa, s: StateSet, w: Sequence[int]) -> StateSet:
    """Image of the state set ``s`` under the action of the word ``w``."""
    if s.n != dfa.n:
        raise InputError(f"state set is over {s.n} states, automaton has {dfa.n}")
    for a in w:
        if not 0 <= a < dfa.k:
            raise InputError(f"letter {a!r} out of range for alphabet of size {dfa.k}")
    rows = dfa.letter_rows()
    bits = s.bits
    for a in w:
        bits = _image_bits(bits, rows[a])
    return StateSet(dfa.n, bits)


def is_reset_word(dfa: Dfa, w: Sequence[int]) -> bool:
    """True iff ``w`` maps every state to one single state."""
    return apply(dfa, StateSet.full(dfa.n), w).is_singleton()


def _pair_merge_dist(dfa: Dfa) -> list[list[int]]:
    """Length of a shortest merging word for every unordered state pair.

    Backward BFS over the pair automaton, seeded with the pairs that some
    letter merges in one step; ``-1`` marks pairs that can never merge.
    """
    n, k, delta = dfa.n, dfa.k, dfa.delta
    preim: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(k)]
    for q in range(n):
        for a in range(k):
            preim[a][delta[q][a]].append(q)
    dist = [[-1] * n for _ in range(n)]
    queue: deque[tuple[int, int]] = deque()
    for a in range(k):
        for lst in preim[a]:
            for i, p in enumerate(lst):
                for q in lst[i + 1:]:
                    if dist[p][q] < 0:
                        dist[p][q] = dist[q][p] = 1
                        queue.append((p, q))
    while queue:
        u, v = queue.popleft()
        d1 = dist[u][v] + 1
        for a in range(k):
            for p in preim[a][u]:
                for q in preim[a][v]:
                    if p != q and dist[p][q] < 0:
                        dist[p][q] = dist[q][p] = d1
                        queue.append((p, q))
    return dist


def is_synchronizing(dfa: Dfa) -> bool:
    """Polynomial synchronizability test on the pair automaton.

    A complete DFA admits a reset word iff every pair of states can be merged,
    which the backward reachability above decides in O(k n^2).
    """
    if dfa.n == 1:
        return True
    dist = _pair_merge_dist(dfa)
    return all(dist[p][q] >= 0 for p in range(dfa.n) for q in range(p + 1, dfa.n))


def shortest_reset_length(
    dfa: Dfa, *, state_cap: int = DEFAULT_STATE_CAP
) -> tuple[int, Word] | None:
    """Exact reset length with a shortest witness, or None if not synchronizing.

    Breadth-first search over the distinct images of the full state set, one
    word letter per level, with letters explored in ascending order so the
    returned witness is deterministic.  Only images actually reached are
    stored; the search space is still exponential, hence the state cap.
    """
    n = dfa.n
    if n > state_cap:
        raise ResourceCapError(
            f"subset search over {n} states exceeds the cap of {state_cap}; "
            "raise state_cap to override"
        )
    if n == 1:
        return 0, ()
    rows = dfa.letter_rows()
    k = dfa.k
    full = (1 << n) - 1
    parent: dict[int, tuple[int, int] | None] = {full: None}
    frontier = [full]
    while frontier:
        nxt = []
        for mask in frontier:
            for a in range(k):
                img = _image_bits(mask, rows[a])
                if img not in parent:
                    parent[img] = (mask, a)
                    if img & (img - 1) == 0:
                        letters = []
                        cur = img
                        while parent[cur] is not None:
                            cur, letter = parent[cur]  # type: ignore[misc]
                            letters.append(letter)
                        letters.reverse()
                        return len(letters), tuple(letters)
                    nxt.append(img)
        frontier = nxt
    return None


def greedy_reset_word(dfa: Dfa) -> Word | None:
    """A valid (not necessarily shortest) reset word, or None if none exists.

    Repeatedly merges the closest pair of the current image: pick the pair
    with the smallest exact merging distance and walk it down to a merge,
    applying every chosen letter to the whole image.  Cheap enough to serve
    as a pre-filter upper bound; never shorter than the exact optimum.
    """
    n, k, delta = dfa.n, dfa.k, dfa.delta
    if n == 1:
        return ()
    dist = _pair_merge_dist(dfa)
    if any(dist[p][q] < 0 for p in range(n) for q in range(p + 1, n)):
        return None
    rows = dfa.letter_rows()
    bits = (1 << n) - 1
    word: list[int] = []
    while bits & (bits - 1):
        states = list(StateSet(n, bits))
        best: tuple[int, int, int] | None = None
        for i, p in enumerate(states):
            for q in states[i + 1:]:
                if best is None or dist[p][q] < best[0]:
                    best = (dist[p][q], p, q)
        d, p, q = best  # type: ignore[misc]
        while p != q:
            for a in range(k):
                u, v = delta[p][a], delta[q][a]
                if (u == v and d == 1) or (u != v and dist[u][v] == d - 1):
                    word.append(a)
                    bits = _image_bits(bits, rows[a])
                    p, q, d = u, v, d - 1
                    break
            else:  # pragma: no cover - dist invariants guarantee progress
                raise AssertionError("no letter decreases the merge distance")
    return tuple(word)


def _discovery_relabel(dfa: Dfa, start: int) -> tuple[int, ...] | None:
    """Flat table of ``dfa`` with states renumbered in discovery order from
    ``start``; None when not every state is reachable from there."""
    n, k, delta = dfa.n, dfa.k, dfa.delta
    mapping = [-1] * n
    mapping[start] = 0
    order = [start]
    flat = []
    for newq in range(n):
        if newq >= len(order):
            return None
        row = delta[order[newq]]
        for a in range(k):
            t = row[a]
            if mapping[t] < 0:
                mapping[t] = len(order)
                order.append(t)
            flat.append(mapping[t])
    return tuple(flat)


def dfa_canonical_form(dfa: Dfa, *, include_letters: bool = True, perm_cap: int = 8) -> tuple[int, ...]:
    """Canonical flat transition table under state (and optionally letter)
    renaming; two automata are isomorphic iff their forms are equal.

    States are renumbered by discovery order from every possible start state
    and the lexicographically least table wins.  Automata with no state that
    reaches all others fall back to minimising over all state permutations,
    which is gated to small n.
    """
    n, k = dfa.n, dfa.k
    letter_orders = list(permutations(range(k))) if include_letters else [tuple(range(k))]
    best: tuple[int, ...] | None = None
    for lp in letter_orders:
        if lp == tuple(range(k)):
            cand_dfa = dfa
        else:
            cand_dfa = Dfa(n, k, tuple(tuple(row[a] for a in lp) for row in dfa.delta))
        for start in range(n):
            flat = _discovery_relabel(cand_dfa, start)
            if flat is not None and (best is None or flat < best):
                best = flat
    if best is not None:
        return best
    # No initially-connecting state: brute-force over state permutations.
    if n > perm_cap:
        raise ResourceCapError(
            f"canonical form of a non-connected {n}-state automaton needs a "
            f"permutation search (cap {perm_cap})"
        )
    for lp in letter_orders:
        for sp in permutations(range(n)):
            flat = []
            inv = [0] * n
            for q in range(n):
                inv[sp[q]] = q
            for newq in range(n):
                row = dfa.delta[inv[newq]]
                for a in lp:
                    flat.append(sp[row[a]])
            tflat = tuple(flat)
            if best is None or tflat < best:
                best = tflat
    assert best is not None
    return best


def dfa_isomorphic(x: Dfa, y: Dfa, *, include_letters: bool = True) -> bool:
    """True iff the automata coincide up to state (and letter) renaming."""
    if x.n != y.n or x.k != y.k:
        return False
    return dfa_canonical_form(x, include_letters=include_letters) == dfa_canonical_form(
        y, include_letters=include_letters
    )
