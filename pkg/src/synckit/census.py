"""Exhaustive censuses: reset lengths of ICDFAs and exponents of digraphs.

The reset-length census enumerates one canonical representative per
isomorphism class of initially-connected DFAs (initial state 0), splits the
space into prefix-defined slices for parallel workers, and accumulates
mergeable histograms with checkpoint/resume support.

The exponent census sweeps every digraph (out-degree >= 1) on up to five
vertices with vectorised boolean matrix powers and derives isomorphism-class
counts per exponent by orbit counting over the vertex-permutation group.
"""

from __future__ import annotations

import hashlib
import multiprocessing
import os
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

import numpy as np

from .automata import Dfa
from .errors import (
    InputError,
    IntegrityError,
    InternalConsistencyError,
    ResourceCapError,
)

DEFAULT_CENSUS_CAP = 7  # largest n accepted for k = 2 without force

# Canonical-table counts for k = 2.  Entries up to n = 6 are recomputed by the
# test suite from the enumerator below; the larger ones agree with the
# published enumerations of initially-connected DFAs and are used only to
# size refusal messages.
CANONICAL_TABLE_COUNTS_K2 = {
    1: 1,
    2: 12,
    3: 216,
    4: 5248,
    5: 160675,
    6: 5931540,
    7: 256182290,
    8: 12665445248,
    9: 705068085303,
}


# ---------------------------------------------------------------------------
# canonical enumeration
# ---------------------------------------------------------------------------

def _prefix_max_state(n: int, k: int, prefix: tuple[int, ...]) -> int:
    """Highest state discovered after reading a canonical prefix.

    Raises InputError when the prefix can never start a canonical table:
    an entry above max-so-far + 1, a row of an undiscovered state, or too few
    remaining entries to discover the missing states.
    """
    if len(prefix) > n * k:
        raise InputError("prefix longer than the transition table")
    m = 0
    for pos, t in enumerate(prefix):
        q, r = divmod(pos, k)
        if r == 0 and q > m:
            raise InputError(f"prefix reads row {q} before state {q} is discovered")
        if not 0 <= t <= min(m + 1, n - 1):
            raise InputError(f"prefix entry {t} at position {pos} breaks canonical order")
        if t == m + 1:
            m = t
    if (n - 1 - m) > (n * k - len(prefix)):
        raise InputError("prefix leaves too few entries to discover every state")
    return m


def _iter_tables(n: int, k: int, prefix: tuple[int, ...] = ()):
    """Yield every canonical flat table extending ``prefix``.

    A flat table t[q*k + a] = delta(q, a) is canonical when, scanning entries
    in order, each value is at most one above the largest state seen so far,
    row q is only reached after state q has appeared, and all n states occur.
    Exactly one table per isomorphism class of initially-connected DFAs with
    initial state 0 satisfies this.
    """
    nk = n * k
    m0 = _prefix_max_state(n, k, prefix)
    table = list(prefix) + [0] * (nk - len(prefix))

    def rec(pos: int, m: int):
        if pos == nk:
            if m == n - 1:
                yield tuple(table)
            return
        if pos % k == 0 and pos // k > m:
            return
        if (n - 1 - m) > (nk - pos):
            return
        hi = m + 1 if m + 1 < n else n - 1
        for t in range(hi + 1):
            table[pos] = t
            yield from rec(pos + 1, m if t <= m else m + 1)

    if len(prefix) == nk:
        if m0 == n - 1:
            yield tuple(table)
        return
    yield from rec(len(prefix), m0)


def _iter_prefixes(n: int, k: int, depth: int):
    """All canonical-consistent prefixes of the given length, in order."""
    nk = n * k
    prefix = [0] * depth

    def rec(pos: int, m: int):
        if pos == depth:
            if (n - 1 - m) <= (nk - depth):
                yield tuple(prefix)
            return
        if pos % k == 0 and pos // k > m:
            return
        if (n - 1 - m) > (nk - pos):
            return
        hi = m + 1 if m + 1 < n else n - 1
        for t in range(hi + 1):
            prefix[pos] = t
            yield from rec(pos + 1, m if t <= m else m + 1)

    if depth == 0:
        yield ()
    else:
        yield from rec(0, 0)


def enumerate_icdfa(n: int, k: int):
    """Stream one DFA per isomorphism class of initially-connected DFAs.

    Classes are taken under state renamings that keep state 0 initial; every
    yielded automaton is reachable from state 0 in full.
    """
    if not isinstance(n, int) or n < 1:
        raise InputError(f"state count must be a positive integer, got {n!r}")
    if not isinstance(k, int) or k < 1:
        raise InputError(f"alphabet size must be a positive integer, got {k!r}")
    for flat in _iter_tables(n, k):
        yield Dfa(n, k, tuple(tuple(flat[q * k:(q + 1) * k]) for q in range(n)))


@dataclass(frozen=True)
class IcdfaSlice:
    """A prefix-defined contiguous portion of the canonical enumeration."""

    n: int
    k: int
    prefix: tuple[int, ...]

    @property
    def depth(self) -> int:
        return len(self.prefix)

    def tables(self):
        return _iter_tables(self.n, self.k, self.prefix)

    def automata(self):
        for flat in self.tables():
            yield Dfa(self.n, self.k, tuple(tuple(flat[q * self.k:(q + 1) * self.k])
                                            for q in range(self.n)))


def slices(n: int, k: int, depth: int) -> list[IcdfaSlice]:
    """Disjoint slices covering the canonical enumeration at a prefix depth."""
    if not isinstance(depth, int) or depth < 0:
        raise InputError(f"depth must be a non-negative integer, got {depth!r}")
    if depth > n * k:
        raise InputError(f"depth {depth} exceeds the table size {n * k}")
    return [IcdfaSlice(n, k, p) for p in _iter_prefixes(n, k, depth)]


# ---------------------------------------------------------------------------
# histograms
# ---------------------------------------------------------------------------

@dataclass
class Histogram:
    """Counts per reset length (or exponent), mergeable across slices.

    ``nonsync`` counts automata with no reset word (or digraphs that are not
    primitive); lengths below ``floor`` are pooled into ``below`` so that a
    census can bound its memory when only the top of the range matters.
    """

    counts: dict[int, int] = field(default_factory=dict)
    nonsync: int = 0
    total: int = 0
    floor: int = 0
    below: int = 0

    def record(self, length: int | None):
        self.total += 1
        if length is None:
            self.nonsync += 1
        elif length < self.floor:
            self.below += 1
        else:
            self.counts[length] = self.counts.get(length, 0) + 1

    def merge(self, other: Histogram) -> Histogram:
        if self.floor != other.floor:
            raise InputError("cannot merge histograms with different floors")
        for length, c in other.counts.items():
            self.counts[length] = self.counts.get(length, 0) + c
        self.nonsync += other.nonsync
        self.total += other.total
        self.below += other.below
        return self

    def max_length(self) -> int | None:
        return max(self.counts) if self.counts else None

    def items_descending(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items(), reverse=True)

    def check(self):
        if self.total != self.nonsync + self.below + sum(self.counts.values()):
            raise InternalConsistencyError("histogram totals do not add up")
        values = [self.nonsync, self.total, self.below, *self.counts.values()]
        if any(v < 0 for v in values):
            raise InternalConsistencyError("histogram has a negative count")


@dataclass
class CensusResult:
    """Reset-length census output.

    ``histogram`` counts canonical tables (isomorphism classes with a
    designated initial state); ``letter_classes`` additionally quotients by
    renaming the letters, since published class counts do not always say
    which convention they use.
    """

    n: int
    k: int
    histogram: Histogram
    letter_classes: Histogram


# ---------------------------------------------------------------------------
# per-slice work
# ---------------------------------------------------------------------------

def _relabel_canonical(flat, n: int, k: int) -> tuple[int, ...]:
    """Renumber states of an initially-connected flat table in discovery order."""
    mapping = [-1] * n
    mapping[0] = 0
    order = [0]
    out = [0] * (n * k)
    pos = 0
    for newq in range(n):
        if newq >= len(order):
            raise InternalConsistencyError("table is not initially connected")
        base = order[newq] * k
        for a in range(k):
            t = flat[base + a]
            if mapping[t] < 0:
                mapping[t] = len(order)
                order.append(t)
            out[pos] = mapping[t]
            pos += 1
    return tuple(out)


def _letter_permuted(flat, n: int, k: int, perm) -> tuple[int, ...]:
    return tuple(flat[(i // k) * k + perm[i % k]] for i in range(n * k))


def _count_slice(args) -> dict:
    """Census one slice; returns plain dicts so results cross process
    boundaries cheaply and merge by integer addition only."""
    n, k, prefix, floor = args
    counts: dict[int, int] = {}
    lq_counts: dict[int, int] = {}
    below = lq_below = 0
    nonsync = lq_nonsync = 0
    total = lq_total = 0

    pairbit = [[0] * n for _ in range(n)]
    pid = 0
    for p in range(n):
        for q in range(p + 1, n):
            pairbit[p][q] = pairbit[q][p] = 1 << pid
            pid += 1
    allpairs = (1 << pid) - 1
    full = (1 << n) - 1
    sz = 1 << n
    rng = range(n)
    identity = tuple(range(k))
    letter_perms = [p for p in permutations(range(k)) if p != identity]

    for table in _iter_tables(n, k, prefix):
        total += 1
        # Letter-renaming class representative: smallest canonical table over
        # all letter permutations.
        is_rep = True
        for perm in letter_perms:
            if _relabel_canonical(_letter_permuted(table, n, k, perm), n, k) < table:
                is_rep = False
                break
        if is_rep:
            lq_total += 1

        # Pair-automaton pre-filter: forward fixpoint marking mergeable pairs.
        if n == 1:
            merged_all = True
        else:
            good = 0
            changed = True
            while changed and good != allpairs:
                changed = False
                for p in rng:
                    base_p = p * k
                    pbp = pairbit[p]
                    for q in range(p + 1, n):
                        b = pbp[q]
                        if good & b:
                            continue
                        base_q = q * k
                        for a in range(k):
                            u = table[base_p + a]
                            v = table[base_q + a]
                            if u == v or (pairbit[u][v] & good):
                                good |= b
                                changed = True
                                break
            merged_all = good == allpairs
        if not merged_all:
            nonsync += 1
            if is_rep:
                lq_nonsync += 1
            continue

        # Exact reset length: BFS over images of the full state set.
        if n == 1:
            length = 0
        else:
            rows = [[1 << table[q * k + a] for q in rng] for a in range(k)]
            imgs = [[0] * sz for _ in range(k)]
            for a in range(k):
                img_a = imgs[a]
                row_a = rows[a]
                for m in range(1, sz):
                    lb = m & -m
                    img_a[m] = img_a[m ^ lb] | row_a[lb.bit_length() - 1]
            seen = bytearray(sz)
            seen[full] = 1
            frontier = [full]
            depth = 0
            length = None
            while frontier and length is None:
                depth += 1
                nxt = []
                for mask in frontier:
                    for img_a in imgs:
                        im = img_a[mask]
                        if not seen[im]:
                            if im & (im - 1) == 0:
                                length = depth
                                break
                            seen[im] = 1
                            nxt.append(im)
                    if length is not None:
                        break
                frontier = nxt
            if length is None:
                raise InternalConsistencyError(
                    "pair filter says synchronizing but subset search found no reset word"
                )
        if length < floor:
            below += 1
            if is_rep:
                lq_below += 1
        else:
            counts[length] = counts.get(length, 0) + 1
            if is_rep:
                lq_counts[length] = lq_counts.get(length, 0) + 1

    return {
        "prefix": prefix,
        "counts": counts,
        "below": below,
        "nonsync": nonsync,
        "total": total,
        "lq_counts": lq_counts,
        "lq_below": lq_below,
        "lq_nonsync": lq_nonsync,
        "lq_total": lq_total,
    }


# ---------------------------------------------------------------------------
# checkpointing
# ---------------------------------------------------------------------------

_CHECKPOINT_MAGIC = "synckit-census"
_CHECKPOINT_VERSION = 1


def _checkpoint_lines(state: dict) -> list[str]:
    lines = [f"{_CHECKPOINT_MAGIC} v{_CHECKPOINT_VERSION}"]
    for key in ("n", "k", "floor", "depth", "slices"):
        lines.append(f"{key} {state[key]}")
    done = 0
    for i in state["done"]:
        done |= 1 << i
    lines.append(f"done {done:x}")
    for tag in ("raw", "lq"):
        hist: Histogram = state[tag]
        for length, c in sorted(hist.counts.items()):
            lines.append(f"{tag} {length} {c}")
        lines.append(f"{tag}-below {hist.below}")
        lines.append(f"{tag}-nonsync {hist.nonsync}")
        lines.append(f"{tag}-total {hist.total}")
    return lines


def _payload_checksum(lines: list[str]) -> str:
    return hashlib.sha256(("\n".join(lines) + "\n").encode()).hexdigest()


def save_checkpoint(path, state: dict):
    """Atomically persist a census state (header, slice bitmap, histograms,
    trailing checksum)."""
    lines = _checkpoint_lines(state)
    lines.append(f"checksum {_payload_checksum(lines)}")
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, path)


def load_checkpoint(path) -> dict:
    """Read a checkpoint written by :func:`save_checkpoint`.

    Any structural problem or checksum mismatch raises IntegrityError.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            raw_lines = [line.rstrip("\n") for line in fh]
    except OSError as exc:
        raise IntegrityError(f"cannot read checkpoint {path}: {exc}") from exc
    lines = [line for line in raw_lines if line]
    if not lines or not lines[0].startswith(_CHECKPOINT_MAGIC):
        raise IntegrityError(f"{path} is not a census checkpoint")
    if lines[0] != f"{_CHECKPOINT_MAGIC} v{_CHECKPOINT_VERSION}":
        raise IntegrityError(f"unsupported checkpoint version: {lines[0]!r}")
    if not lines[-1].startswith("checksum "):
        raise IntegrityError("checkpoint is truncated: no checksum line")
    payload, stated = lines[:-1], lines[-1].split()[-1]
    if _payload_checksum(payload) != stated:
        raise IntegrityError("checkpoint checksum mismatch")

    state: dict = {"raw": Histogram(), "lq": Histogram()}
    seen_keys = set()
    try:
        for line in payload[1:]:
            parts = line.split()
            key = parts[0]
            seen_keys.add(key)
            if key in ("n", "k", "floor", "depth", "slices"):
                state[key] = int(parts[1])
            elif key == "done":
                bits = int(parts[1], 16)
                state["done"] = {i for i in range(bits.bit_length()) if bits >> i & 1}
            elif key in ("raw", "lq"):
                state[key].counts[int(parts[1])] = int(parts[2])
            elif key in ("raw-below", "lq-below"):
                state[key[:-6]].below = int(parts[1])
            elif key in ("raw-nonsync", "lq-nonsync"):
                state[key[:-8]].nonsync = int(parts[1])
            elif key in ("raw-total", "lq-total"):
                state[key[:-6]].total = int(parts[1])
            else:
                raise IntegrityError(f"unknown checkpoint field {key!r}")
    except (IndexError, ValueError) as exc:
        raise IntegrityError(f"malformed checkpoint line: {line!r}") from exc
    for key in ("n", "k", "floor", "depth", "slices", "done"):
        if key not in seen_keys:
            raise IntegrityError(f"checkpoint is missing the {key!r} field")
    state["raw"].floor = state["lq"].floor = state["floor"]
    return state


# ---------------------------------------------------------------------------
# the reset-length census
# ---------------------------------------------------------------------------

def estimated_table_count(n: int, k: int) -> int:
    """Canonical-table count when known exactly, else a crude upper bound."""
    if k == 2 and n in CANONICAL_TABLE_COUNTS_K2:
        return CANONICAL_TABLE_COUNTS_K2[n]
    return n ** (n * k) // factorial(n - 1) if n > 1 else 1


def _default_depth(n: int, k: int) -> int:
    return min(3 * k, n * k)


def reset_length_census(
    n: int,
    k: int,
    min_length_of_interest: int = 0,
    worker_count: int = 1,
    *,
    checkpoint_path=None,
    force: bool = False,
    cap: int = DEFAULT_CENSUS_CAP,
    progress=None,
) -> CensusResult:
    """Exact reset-length histogram over every canonical ICDFA of size (n, k).

    Each automaton is tested for synchronizability on the pair automaton
    first; synchronizing ones get an exact subset-BFS reset length.  Lengths
    below ``min_length_of_interest`` are pooled.  Work is split into
    prefix-defined slices processed by ``worker_count`` processes; results
    are identical for any worker count.  With ``checkpoint_path``, completed
    slices are persisted and skipped on resume.

    ``progress``, when given, is called as progress(done_slices, all_slices)
    after every merged slice.
    """
    if not isinstance(n, int) or n < 1:
        raise InputError(f"state count must be a positive integer, got {n!r}")
    if not isinstance(k, int) or k < 1:
        raise InputError(f"alphabet size must be a positive integer, got {k!r}")
    if min_length_of_interest < 0:
        raise InputError("min_length_of_interest must be non-negative")
    if worker_count < 1:
        raise InputError("worker_count must be at least 1")
    if not force:
        estimate = estimated_table_count(n, k)
        over = (k == 2 and n > cap) or (k != 2 and estimate > 2 * 10 ** 9)
        if over:
            raise ResourceCapError(
                f"census at n={n}, k={k} spans about {estimate:.1e} canonical "
                f"tables ({estimate:,}); the default cap is n <= {cap} at k=2. "
                "Use force to run it anyway."
            )

    floor = min_length_of_interest
    depth = _default_depth(n, k)
    all_slices = slices(n, k, depth)
    nslices = len(all_slices)

    done: set[int] = set()
    raw = Histogram(floor=floor)
    lq = Histogram(floor=floor)
    if checkpoint_path is not None and os.path.exists(checkpoint_path):
        state = load_checkpoint(checkpoint_path)
        if (state["n"], state["k"], state["floor"], state["depth"], state["slices"]) != (
            n, k, floor, depth, nslices,
        ):
            raise IntegrityError(
                f"checkpoint {checkpoint_path} belongs to a different census "
                f"(n={state['n']}, k={state['k']}, floor={state['floor']})"
            )
        done = state["done"]
        raw, lq = state["raw"], state["lq"]

    pending = [(i, s) for i, s in enumerate(all_slices) if i not in done]

    def merge(index: int, result: dict):
        raw.merge(Histogram(counts=result["counts"], nonsync=result["nonsync"],
                            total=result["total"], floor=floor, below=result["below"]))
        lq.merge(Histogram(counts=result["lq_counts"], nonsync=result["lq_nonsync"],
                           total=result["lq_total"], floor=floor, below=result["lq_below"]))
        done.add(index)
        if checkpoint_path is not None:
            save_checkpoint(checkpoint_path, {
                "n": n, "k": k, "floor": floor, "depth": depth,
                "slices": nslices, "done": done, "raw": raw, "lq": lq,
            })
        if progress is not None:
            progress(len(done), nslices)

    if pending:
        if worker_count == 1:
            for index, sl in pending:
                merge(index, _count_slice((n, k, sl.prefix, floor)))
        else:
            args = [(index, (n, k, sl.prefix, floor)) for index, sl in pending]
            with multiprocessing.Pool(processes=worker_count) as pool:
                for index, result in pool.imap_unordered(_count_slice_indexed, args):
                    merge(index, result)

    raw.check()
    lq.check()
    return CensusResult(n=n, k=k, histogram=raw, letter_classes=lq)


def _count_slice_indexed(item):
    index, args = item
    return index, _count_slice(args)


# ---------------------------------------------------------------------------
# gap report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GapReport:
    """Empty-length analysis of the top of a reset-length distribution.

    The range runs from n^2 - 4n + 6 up to the ceiling (n-1)^2; ``islands``
    are maximal attained runs, ``interior_gaps`` the empty runs strictly
    between islands, both as (high, low) pairs descending.  ``upper_gap`` is
    the empty run directly below the highest attained length, when one exists.
    """

    n: int
    lo: int
    hi: int
    counts: tuple[tuple[int, int], ...]
    empty_lengths: tuple[int, ...]
    islands: tuple[tuple[int, int], ...]
    interior_gaps: tuple[tuple[int, int], ...]
    max_attained: int | None
    upper_gap: tuple[int, int] | None

    @property
    def matches_gap_structure(self) -> bool:
        """True when the top range shows at least one interior gap, the
        pattern the exponent classification predicts for digraphs."""
        return bool(self.interior_gaps)

    def format_text(self) -> str:
        lines = [f"reset-length gap report for n = {self.n}",
                 f"top range: {self.lo} .. {self.hi}"]
        if self.hi < self.lo:
            lines.append("(range is empty for this n)")
            return "\n".join(lines) + "\n"
        width = len(str(self.hi))
        for length, count in self.counts:
            mark = "  <- gap" if count == 0 else ""
            lines.append(f"  N = {length:>{width}}: {count}{mark}")
        fmt = lambda run: f"{run[0]}" if run[0] == run[1] else f"{run[0]}..{run[1]}"
        lines.append("islands: " + (", ".join(fmt(r) for r in self.islands) or "none"))
        lines.append("interior gaps: " + (", ".join(fmt(r) for r in self.interior_gaps) or "none"))
        lines.append(f"theorem-style gap structure: {'yes' if self.matches_gap_structure else 'no'}")
        return "\n".join(lines) + "\n"


def gap_report(hist: Histogram, n: int) -> GapReport:
    """Analyse the histogram's top range [n^2-4n+6, (n-1)^2] for gaps."""
    lo = n * n - 4 * n + 6
    hi = (n - 1) ** 2
    if hi >= lo and hist.floor > lo:
        raise InputError(
            f"histogram pools lengths below {hist.floor}; the gap range needs "
            f"exact counts from {lo}"
        )
    if hi < lo:
        return GapReport(n, lo, hi, (), (), (), (), hist.max_length(), None)
    counts = tuple((length, hist.counts.get(length, 0)) for length in range(hi, lo - 1, -1))
    empty = tuple(length for length, c in counts if c == 0)
    islands: list[tuple[int, int]] = []
    gaps: list[tuple[int, int]] = []
    run_start = None
    run_kind = None
    for length, c in counts:
        kind = "island" if c else "gap"
        if kind != run_kind:
            if run_kind is not None:
                (islands if run_kind == "island" else gaps).append((run_start, prev))
            run_start, run_kind = length, kind
        prev = length
    if run_kind is not None:
        (islands if run_kind == "island" else gaps).append((run_start, prev))
    interior = tuple(
        g for g in gaps
        if any(i[0] > g[0] for i in islands) and any(i[1] < g[1] for i in islands)
    )
    max_attained = islands[0][0] if islands else None
    upper_gap = None
    if interior and islands and interior[0][0] == islands[0][1] - 1:
        upper_gap = interior[0]
    return GapReport(
        n=n, lo=lo, hi=hi, counts=counts, empty_lengths=empty,
        islands=tuple(islands), interior_gaps=interior,
        max_attained=max_attained, upper_gap=upper_gap,
    )


# ---------------------------------------------------------------------------
# exponent census (digraphs on <= 5 vertices)
# ---------------------------------------------------------------------------

@dataclass
class ExponentCensus:
    """Exponent distribution over all digraphs with out-degree >= 1.

    ``labeled`` counts digraphs on the labeled vertex set; ``classes`` counts
    isomorphism classes.  In both, ``nonsync`` holds the non-primitive count.
    """

    n: int
    labeled: Histogram
    classes: Histogram


def _batch_exponents(mats: np.ndarray) -> np.ndarray:
    """Exponent per digraph for a (B, n, n) 0/1 batch; 0 marks non-primitive.

    Iterated boolean matrix powers with early removal of completed digraphs;
    a digraph still incomplete past Wielandt's ceiling cannot be primitive.
    """
    count, n, _ = mats.shape
    ceiling = (n - 1) ** 2 + 1
    out = np.zeros(count, dtype=np.int32)
    alive = np.arange(count)
    p = mats.copy()
    m = mats.copy()
    t = 1
    while alive.size:
        complete = p.reshape(alive.size, -1).all(axis=1)
        if complete.any():
            out[alive[complete]] = t
            keep = ~complete
            alive, p, m = alive[keep], p[keep], m[keep]
            if not alive.size:
                break
        t += 1
        if t > ceiling:
            break
        p = (np.matmul(p, m) > 0).astype(np.uint8)
    return out


def _row_bit_table(n: int) -> np.ndarray:
    return np.array(
        [[(r >> j) & 1 for j in range(n)] for r in range(1 << n)], dtype=np.uint8
    )


def _labeled_exponent_counts(n: int) -> np.ndarray:
    """Exponent histogram (index 0 = non-primitive) over all (2^n - 1)^n
    digraphs, chunked over the first row to bound memory."""
    rb = _row_bit_table(n)
    vals = np.arange(1, 1 << n)
    hist = np.zeros((n - 1) ** 2 + 2, dtype=np.int64)
    if n == 1:
        return np.array([0, 1], dtype=np.int64)
    rest = np.stack(
        np.meshgrid(*([vals] * (n - 1)), indexing="ij"), axis=-1
    ).reshape(-1, n - 1)
    rest_mats = rb[rest]  # (R, n-1, n)
    count = rest.shape[0]
    mats = np.empty((count, n, n), dtype=np.uint8)
    mats[:, 1:, :] = rest_mats
    for first in vals:
        mats[:, 0, :] = rb[first]
        ex = _batch_exponents(mats)
        hist += np.bincount(ex, minlength=hist.size)
    return hist


def _cell_orbits(n: int, perm: tuple[int, ...]) -> list[list[tuple[int, int]]]:
    seen = [[False] * n for _ in range(n)]
    orbits = []
    for i in range(n):
        for j in range(n):
            if seen[i][j]:
                continue
            orbit = []
            u, v = i, j
            while not seen[u][v]:
                seen[u][v] = True
                orbit.append((u, v))
                u, v = perm[u], perm[v]
            orbits.append(orbit)
    return orbits


def _fixed_exponent_counts(n: int, perm: tuple[int, ...]) -> np.ndarray:
    """Exponent histogram over the digraphs left fixed by a vertex
    permutation (edge sets that are unions of its cell orbits)."""
    orbits = _cell_orbits(n, perm)
    hist_size = (n - 1) ** 2 + 2
    mats = []
    for bits in range(1 << len(orbits)):
        mat = np.zeros((n, n), dtype=np.uint8)
        for oi, orbit in enumerate(orbits):
            if bits >> oi & 1:
                for (u, v) in orbit:
                    mat[u, v] = 1
        if mat.any(axis=1).all():
            mats.append(mat)
    if not mats:
        return np.zeros(hist_size, dtype=np.int64)
    ex = _batch_exponents(np.array(mats, dtype=np.uint8))
    return np.bincount(ex, minlength=hist_size).astype(np.int64)


def _class_exponent_counts(n: int, labeled: np.ndarray) -> np.ndarray:
    """Isomorphism-class counts per exponent via orbit counting: average the
    fixed-digraph counts over the whole vertex-permutation group."""
    total = labeled.astype(np.int64).copy()
    identity = tuple(range(n))
    for perm in permutations(range(n)):
        if perm == identity:
            continue
        total += _fixed_exponent_counts(n, perm)
    order = factorial(n)
    if (total % order).any():
        raise InternalConsistencyError(
            "orbit counting did not divide evenly; exponent computation is inconsistent"
        )
    return total // order


def exponent_census(n: int, *, cap: int = 5) -> ExponentCensus:
    """Distribution of exponents over every digraph on n vertices with all
    out-degrees >= 1, labeled and up to isomorphism.

    The labeled sweep covers (2^n - 1)^n digraphs, which is why the census is
    gated to n <= 5 (about 2.9e7 digraphs).
    """
    if not isinstance(n, int) or n < 1:
        raise InputError(f"vertex count must be a positive integer, got {n!r}")
    if n > cap:
        space = (2 ** n - 1) ** n
        raise ResourceCapError(
            f"exponent census at n={n} would sweep {space:.1e} digraphs "
            f"(cap n <= {cap})"
        )
    labeled_arr = _labeled_exponent_counts(n)
    class_arr = _class_exponent_counts(n, labeled_arr)

    def to_hist(arr: np.ndarray) -> Histogram:
        h = Histogram(
            counts={e: int(c) for e, c in enumerate(arr) if e > 0 and c},
            nonsync=int(arr[0]),
            total=int(arr.sum()),
        )
        h.check()
        return h

    return ExponentCensus(n=n, labeled=to_hist(labeled_arr), classes=to_hist(class_arr))


# ---------------------------------------------------------------------------
# predicted class counts for the top exponent range
# ---------------------------------------------------------------------------

def theorem3_census(n: int) -> Histogram:
    """Predicted isomorphism-class counts for every exponent in the top range
    [n^2-4n+6, (n-1)^2+1], per the classical classification of primitive
    digraphs with large exponent (Wielandt; Dulmage and Mendelsohn).

    One class at (n-1)^2+1 and one at (n-1)^2; for odd n one class each at
    n^2-3n+4 and n^2-3n+3 and two at n^2-3n+2; zeros across the proved gaps;
    and 3 or 4 classes at n^2-4n+6 according as n is or is not a multiple
    of 3 -- except that the known 9-vertex census tabulates 4 there, so for
    n = 9 this function reproduces the tabulated 4 (the conflict between the
    divisibility rule and the tabulated value is documented in the README).
    """
    if not isinstance(n, int) or n < 5:
        raise InputError(f"top-range predictions need n >= 5, got {n!r}")
    lo = n * n - 4 * n + 6
    hi = (n - 1) ** 2 + 1
    counts = {length: 0 for length in range(lo, hi + 1)}
    counts[hi] = 1
    counts[hi - 1] = 1
    if n % 2 == 1:
        counts[n * n - 3 * n + 4] = 1
        counts[n * n - 3 * n + 3] = 1
        counts[n * n - 3 * n + 2] = 2
    bottom = 3 if n % 3 == 0 else 4
    if n == 9:
        bottom = 4
    counts[lo] = bottom
    hist = Histogram(counts=counts, nonsync=0, total=sum(counts.values()))
    hist.check()
    return hist
