"""Digraphs, boolean matrix powers, primitivity, exponents, and colorings.

Every digraph here has at least one outgoing edge per vertex (so it is the
underlying digraph of some complete DFA); loops are allowed, multiple edges
are not.  Row bitmasks double as the 0/1 adjacency matrix, so taking powers
is boolean matrix multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from math import gcd

from .automata import Dfa, shortest_reset_length
from .errors import InputError, InternalConsistencyError, ResourceCapError

ZeroOneMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Digraph:
    """Vertices 0..n-1 plus a set of directed edges (u, v)."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"vertex count must be a positive integer, got {self.n!r}")
        edges = frozenset((int(u), int(v)) for (u, v) in self.edges)
        object.__setattr__(self, "edges", edges)
        out_seen = [False] * self.n
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u}, {v}) out of range for {self.n} vertices")
            out_seen[u] = True
        for u, has_out in enumerate(out_seen):
            if not has_out:
                raise InputError(f"vertex {u} has no outgoing edge")

    @classmethod
    def from_edges(cls, n: int, edges) -> Digraph:
        return cls(n, frozenset(tuple(e) for e in edges))

    def row_bits(self) -> tuple[int, ...]:
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
        return tuple(rows)

    def out_neighbors(self, u: int) -> list[int]:
        return sorted(v for (x, v) in self.edges if x == u)


def _digraph_from_rows(n: int, rows) -> Digraph:
    edges = set()
    for u in range(n):
        m = rows[u]
        while m:
            lb = m & -m
            edges.add((u, lb.bit_length() - 1))
            m ^= lb
    return Digraph(n, frozenset(edges))


def from_matrix(matrix) -> Digraph:
    """Digraph of a square non-negative matrix: edge (i, j) iff entry > 0."""
    rows = [tuple(row) for row in matrix]
    n = len(rows)
    if n == 0:
        raise InputError("matrix is empty")
    bits = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InputError(f"row {i} has {len(row)} entries, expected {n}")
        b = 0
        for j, x in enumerate(row):
            if x < 0:
                raise InputError(f"matrix entry ({i}, {j}) is negative")
            if x > 0:
                b |= 1 << j
        if b == 0:
            raise InputError(f"row {i} is all zero: vertex {i} would have no outgoing edge")
        bits.append(b)
    return _digraph_from_rows(n, bits)


def to_matrix(d: Digraph) -> ZeroOneMatrix:
    """0/1 incidence matrix of the edge relation."""
    return tuple(
        tuple(1 if (u, v) in d.edges else 0 for v in range(d.n)) for u in range(d.n)
    )


def underlying_digraph(dfa: Dfa) -> Digraph:
    """Digraph with an edge (q, q') whenever some letter takes q to q'."""
    edges = {(q, dfa.delta[q][a]) for q in range(dfa.n) for a in range(dfa.k)}
    return Digraph(dfa.n, frozenset(edges))


def _bool_product(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for row in a:
        acc = 0
        m = row
        while m:
            lb = m & -m
            acc |= b[lb.bit_length() - 1]
            m ^= lb
        out.append(acc)
    return tuple(out)


def power(d: Digraph, t: int) -> Digraph:
    """Digraph whose edges are the pairs joined by a walk of length exactly t."""
    if not isinstance(t, int) or t < 1:
        raise InputError(f"power exponent must be a positive integer, got {t!r}")
    base = d.row_bits()
    result: tuple[int, ...] | None = None
    while t:
        if t & 1:
            result = base if result is None else _bool_product(result, base)
        t >>= 1
        if t:
            base = _bool_product(base, base)
    assert result is not None
    return _digraph_from_rows(d.n, result)


def _reachable_all(n: int, adj: list[list[int]]) -> bool:
    seen = 1
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen >> v & 1:
                seen |= 1 << v
                stack.append(v)
    return seen == (1 << n) - 1


def is_strongly_connected(d: Digraph) -> bool:
    n = d.n
    adj: list[list[int]] = [[] for _ in range(n)]
    radj: list[list[int]] = [[] for _ in range(n)]
    for u, v in d.edges:
        adj[u].append(v)
        radj[v].append(u)
    return _reachable_all(n, adj) and _reachable_all(n, radj)


def _period(d: Digraph) -> int:
    """Gcd of all cycle lengths of a strongly connected digraph.

    Computed as the gcd of level(u) + 1 - level(v) over all edges (u, v) of a
    breadth-first levelling, which agrees with the cycle gcd when the digraph
    is strongly connected.
    """
    n = d.n
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in d.edges:
        adj[u].append(v)
    level = [-1] * n
    level[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if level[v] < 0:
                    level[v] = level[u] + 1
                    nxt.append(v)
        frontier = nxt
    g = 0
    for u, v in d.edges:
        g = gcd(g, level[u] + 1 - level[v])
    return abs(g)


def is_primitive(d: Digraph) -> bool:
    """Strongly connected with cycle-length gcd 1."""
    return is_strongly_connected(d) and _period(d) == 1


def exponent_ceiling(n: int) -> int:
    """Wielandt's bound: no primitive digraph on n vertices needs more."""
    return (n - 1) ** 2 + 1


def exponent(d: Digraph) -> int | None:
    """Least t such that every vertex pair is joined by a walk of length
    exactly t; None when the digraph is not primitive.

    Iterated boolean multiplication with early exit.  A primitive digraph
    must become complete by Wielandt's bound, so running past the ceiling is
    an internal bug, not an input condition.
    """
    if not is_primitive(d):
        return None
    n = d.n
    full = (1 << n) - 1
    base = d.row_bits()
    ceiling = exponent_ceiling(n)
    p = base
    for t in range(1, ceiling + 1):
        if all(r == full for r in p):
            return t
        p = _bool_product(p, base)
    raise InternalConsistencyError(
        f"primitive digraph on {n} vertices not complete at the exponent "
        f"ceiling {ceiling}"
    )


def _surjections(k: int, d: int) -> list[tuple[int, ...]]:
    """All maps from k letters onto d edge slots, lexicographic order."""
    return [f for f in product(range(d), repeat=k) if len(set(f)) == d]


def colorings(d: Digraph, k: int):
    """All DFAs over k letters whose underlying digraph is exactly ``d``.

    Per vertex, every assignment of the k letters onto its outgoing edges
    (sorted by target) with every edge receiving at least one letter; the
    stream runs through vertices in ascending order, assignments in
    lexicographic order of the letter-to-edge map.  Empty when some vertex
    has more outgoing edges than there are letters.
    """
    if not isinstance(k, int) or k < 1:
        raise InputError(f"alphabet size must be a positive integer, got {k!r}")
    n = d.n
    outs = [d.out_neighbors(u) for u in range(n)]
    if max(len(o) for o in outs) > k:
        return
    sur_cache: dict[int, list[tuple[int, ...]]] = {}
    per_vertex = []
    for o in outs:
        deg = len(o)
        if deg not in sur_cache:
            sur_cache[deg] = _surjections(k, deg)
        per_vertex.append([tuple(o[f[a]] for a in range(k)) for f in sur_cache[deg]])
    for rows in product(*per_vertex):
        yield Dfa(n, k, rows)


def coloring_count(d: Digraph, k: int) -> int:
    """Number of DFAs the coloring stream will yield."""
    if not isinstance(k, int) or k < 1:
        raise InputError(f"alphabet size must be a positive integer, got {k!r}")
    count = 1
    sur_cache: dict[int, int] = {}
    for u in range(d.n):
        deg = len(d.out_neighbors(u))
        if deg > k:
            return 0
        if deg not in sur_cache:
            sur_cache[deg] = len(_surjections(k, deg))
        count *= sur_cache[deg]
    return count


def min_coloring_reset_length(
    d: Digraph,
    k: int,
    *,
    coloring_cap: int = 1_000_000,
    state_cap: int = 26,
) -> int | None:
    """Smallest exact reset length over all synchronizing k-letter colorings
    of ``d``; None when no coloring synchronizes.

    Short-circuits at the theoretical floor (1, or 0 for a single vertex).
    """
    total = coloring_count(d, k)
    if total > coloring_cap:
        raise ResourceCapError(
            f"digraph admits {total} colorings, above the cap of {coloring_cap}"
        )
    floor = 0 if d.n == 1 else 1
    best: int | None = None
    for dfa in colorings(d, k):
        res = shortest_reset_length(dfa, state_cap=state_cap)
        if res is None:
            continue
        length = res[0]
        if best is None or length < best:
            best = length
            if best <= floor:
                break
    return best


def simple_cycle_lengths(d: Digraph, *, max_n: int = 12) -> tuple[int, ...]:
    """Sorted lengths of all distinct simple cycles (exhaustive DFS).

    Each cycle is found once, anchored at its smallest vertex.  Intended for
    confirming structural claims on the named families, hence the small gate.
    """
    if d.n > max_n:
        raise ResourceCapError(f"simple-cycle enumeration is gated to n <= {max_n}")
    n = d.n
    adj = [d.out_neighbors(u) for u in range(n)]
    lengths: list[int] = []

    def dfs(u: int, anchor: int, depth: int, onpath: set[int]):
        for v in adj[u]:
            if v == anchor:
                lengths.append(depth + 1)
            elif v > anchor and v not in onpath:
                onpath.add(v)
                dfs(v, anchor, depth + 1, onpath)
                onpath.remove(v)

    for anchor in range(n):
        dfs(anchor, anchor, 0, set())
    return tuple(sorted(lengths))


def digraph_canonical_form(d: Digraph, *, perm_cap: int = 8) -> tuple[int, ...]:
    """Least row-bitmask tuple over all vertex permutations.

    Brute force over n! permutations; fine for the small n where isomorphism
    classes are ever compared here.
    """
    n = d.n
    if n > perm_cap:
        raise ResourceCapError(f"canonical form by permutation search is gated to n <= {perm_cap}")
    rows = d.row_bits()
    best: tuple[int, ...] | None = None
    for p in permutations(range(n)):
        cand = tuple(
            sum(((rows[p[i]] >> p[j]) & 1) << j for j in range(n)) for i in range(n)
        )
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def digraph_isomorphic(x: Digraph, y: Digraph) -> bool:
    if x.n != y.n or len(x.edges) != len(y.edges):
        return False
    return digraph_canonical_form(x) == digraph_canonical_form(y)


def primitive_digraphs(n: int, max_out_degree: int):
    """All labeled primitive digraphs on n vertices with out-degrees in
    [1, max_out_degree], in lexicographic row-bitmask order."""
    if not isinstance(n, int) or n < 1:
        raise InputError(f"vertex count must be a positive integer, got {n!r}")
    if max_out_degree < 1:
        raise InputError("max out-degree must be at least 1")
    choices = [m for m in range(1, 1 << n) if m.bit_count() <= max_out_degree]
    for rows in product(choices, repeat=n):
        d = _digraph_from_rows(n, rows)
        if is_primitive(d):
            yield d


@dataclass(frozen=True)
class ConjectureFinding:
    """A primitive digraph whose best coloring misses the conjectured bound."""

    digraph: Digraph
    value: int | None  # None: no synchronizing coloring at all


@dataclass
class ConjectureReport:
    """Outcome of sweeping every primitive digraph class on n vertices."""

    n: int
    k: int
    bound: int
    classes: int = 0
    no_sync_coloring: int = 0
    max_value: int | None = None
    value_counts: dict[int, int] = field(default_factory=dict)
    violations: tuple[ConjectureFinding, ...] = ()


def conjecture_sweep(
    n: int,
    k: int = 2,
    *,
    vertex_cap: int = 5,
    coloring_cap: int = 1_000_000,
) -> ConjectureReport:
    """Check, over every primitive digraph on exactly n vertices with
    out-degree at most k, that some k-letter coloring resets within
    n^2 - 3n + 3 letters.

    Digraphs are deduplicated up to isomorphism; a class whose minimum exceeds
    the bound (or that has no synchronizing coloring) is reported as a
    finding, not an error.
    """
    if n > vertex_cap:
        raise ResourceCapError(f"conjecture sweep is gated to n <= {vertex_cap}")
    bound = n * n - 3 * n + 3
    report = ConjectureReport(n=n, k=k, bound=bound)
    seen: set[tuple[int, ...]] = set()
    violations: list[ConjectureFinding] = []
    for d in primitive_digraphs(n, k):
        form = digraph_canonical_form(d)
        if form in seen:
            continue
        seen.add(form)
        report.classes += 1
        value = min_coloring_reset_length(d, k, coloring_cap=coloring_cap)
        if value is None:
            report.no_sync_coloring += 1
            violations.append(ConjectureFinding(d, None))
            continue
        report.value_counts[value] = report.value_counts.get(value, 0) + 1
        if report.max_value is None or value > report.max_value:
            report.max_value = value
        if value > bound:
            violations.append(ConjectureFinding(d, value))
    report.violations = tuple(violations)
    return report
