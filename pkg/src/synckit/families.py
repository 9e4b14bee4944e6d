"""Named automaton and digraph families with certified reset lengths/exponents.

All constructors use 0-indexed states; published diagrams number states from
1, so state i in a diagram is state i-1 here.  Letter conventions for the two
colorings of the augmented cycle digraph (the ``dprime``/``ddprime`` pair)
are fixed below in the constructors, since prose descriptions of these
automata usually leave them to a picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .automata import Dfa, StateSet, Word, apply
from .digraphs import Digraph
from .errors import InputError


class Family(Enum):
    """Stable identifiers, shared with the command-line interface."""

    CERNY = "cerny"
    WIELANDT_AUTOMATON = "wielandt"
    D_PRIME = "dprime"
    D_DOUBLE_PRIME = "ddprime"
    B_AUTOMATON = "bn"
    WIELANDT_DIGRAPH = "thm3:W"
    DULMAGE_DIGRAPH = "thm3:D"
    ODD_O1 = "thm3:O1"
    ODD_O2 = "thm3:O2"
    ODD_O3 = "thm3:O3"
    ODD_O4 = "thm3:O4"


AUTOMATON_FAMILIES = frozenset(
    {Family.CERNY, Family.WIELANDT_AUTOMATON, Family.D_PRIME, Family.D_DOUBLE_PRIME, Family.B_AUTOMATON}
)
DIGRAPH_FAMILIES = frozenset(set(Family) - AUTOMATON_FAMILIES)


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its size parameter."""

    family: Family
    n: int

    def __post_init__(self):
        validate_family_size(self.family, self.n)


def _check_n(family: Family, n: int, minimum: int, *, odd: bool = False):
    if not isinstance(n, int):
        raise InputError(f"{family.value}: size must be an integer, got {n!r}")
    if n < minimum:
        raise InputError(f"{family.value}: size must be at least {minimum}, got {n}")
    if odd and n % 2 == 0:
        raise InputError(f"{family.value}: size must be odd, got {n}")


def validate_family_size(family: Family, n: int):
    if family is Family.CERNY:
        _check_n(family, n, 2)
    elif family in (Family.WIELANDT_AUTOMATON, Family.WIELANDT_DIGRAPH):
        _check_n(family, n, 3)
    elif family is Family.DULMAGE_DIGRAPH:
        # The matrix pattern (and its exponent (n-1)^2) is valid from n = 3;
        # the two colorings below need n >= 4.
        _check_n(family, n, 3)
    elif family in (Family.D_PRIME, Family.D_DOUBLE_PRIME):
        _check_n(family, n, 4)
    else:
        # b_automaton and the four odd-island matrices
        _check_n(family, n, 5, odd=True)


def cerny(n: int) -> Dfa:
    """The classical n-state automaton with reset length (n-1)^2.

    Letter a fixes every state except n-1, which it sends to 0; letter b is
    the full cycle.
    """
    _check_n(Family.CERNY, n, 2)
    rows = []
    for q in range(n):
        a = q if q < n - 1 else 0
        b = (q + 1) % n
        rows.append((a, b))
    return Dfa(n, 2, tuple(rows))


def wielandt_digraph(n: int) -> Digraph:
    """Wielandt's digraph: the n-cycle plus the chord from the last vertex to
    vertex 1; the unique primitive digraph attaining exponent (n-1)^2 + 1."""
    _check_n(Family.WIELANDT_DIGRAPH, n, 3)
    edges = [(q, q + 1) for q in range(n - 1)] + [(n - 1, 0), (n - 1, 1)]
    return Digraph.from_edges(n, edges)


def wielandt_automaton(n: int) -> Dfa:
    """The essentially unique 2-letter coloring of Wielandt's digraph.

    Both letters advance states 0..n-2 by one; at state n-1 letter a goes to
    1 and letter b goes to 0.  Reset length n^2 - 3n + 3.
    """
    _check_n(Family.WIELANDT_AUTOMATON, n, 3)
    rows = []
    for q in range(n - 1):
        rows.append((q + 1, q + 1))
    rows.append((1, 0))
    return Dfa(n, 2, tuple(rows))


def dulmage_digraph(n: int) -> Digraph:
    """Wielandt's digraph plus the edge (n-2, 0); the unique primitive digraph
    with exponent (n-1)^2."""
    _check_n(Family.DULMAGE_DIGRAPH, n, 4)
    edges = [(q, q + 1) for q in range(n - 1)] + [(n - 1, 0), (n - 1, 1), (n - 2, 0)]
    return Digraph.from_edges(n, edges)


def d_prime(n: int) -> Dfa:
    """First coloring of the augmented digraph, reset length n^2 - 3n + 4.

    Letter conventions (0-indexed): states 0..n-3 advance by one under both
    letters; at n-2: a -> 0, b -> n-1; at n-1: a -> 1, b -> 0.
    """
    _check_n(Family.D_PRIME, n, 4)
    rows = [(q + 1, q + 1) for q in range(n - 2)]
    rows.append((0, n - 1))
    rows.append((1, 0))
    return Dfa(n, 2, tuple(rows))


def d_double_prime(n: int) -> Dfa:
    """Second coloring of the augmented digraph, reset length n^2 - 3n + 2;
    notable because neither letter acts as a permutation.

    Letter conventions (0-indexed): states 0..n-3 advance by one under both
    letters; at n-2: a -> 0, b -> n-1; at n-1: a -> 0, b -> 1.
    """
    _check_n(Family.D_DOUBLE_PRIME, n, 4)
    rows = [(q + 1, q + 1) for q in range(n - 2)]
    rows.append((0, n - 1))
    rows.append((0, 1))
    return Dfa(n, 2, tuple(rows))


def b_automaton(n: int) -> Dfa:
    """The odd-n series with reset length n^2 - 3n + 2.

    Letter a fixes states 0..n-3 and sends n-2 -> 0, n-1 -> 1; letter b is
    the full cycle.  Defined for odd n >= 5.
    """
    _check_n(Family.B_AUTOMATON, n, 5, odd=True)
    rows = []
    for q in range(n):
        if q < n - 2:
            a = q
        elif q == n - 2:
            a = 0
        else:
            a = 1
        rows.append((a, (q + 1) % n))
    return Dfa(n, 2, tuple(rows))


_MATRIX_INDEX = {"W": Family.WIELANDT_DIGRAPH, "D": Family.DULMAGE_DIGRAPH,
                 "O1": Family.ODD_O1, "O2": Family.ODD_O2, "O3": Family.ODD_O3,
                 "O4": Family.ODD_O4}


def theorem3_matrix(index: str, n: int) -> Digraph:
    """Digraph of one of the six extremal 0/1 matrices, by index.

    ``W`` and ``D`` are the two cycle-plus-chord digraphs topping the exponent
    scale; ``O1``..``O4`` are the four digraphs (odd n only) filling the island
    of exponents n^2-3n+4, n^2-3n+3, n^2-3n+2, n^2-3n+2, in that order.  All
    are built row-by-row: a shifted superdiagonal of ones plus the few extra
    entries in the last rows.
    """
    if index not in _MATRIX_INDEX:
        raise InputError(f"unknown matrix index {index!r}; expected one of "
                         + ", ".join(sorted(_MATRIX_INDEX)))
    family = _MATRIX_INDEX[index]
    validate_family_size(family, n)
    if family is Family.WIELANDT_DIGRAPH:
        return wielandt_digraph(n)
    if family is Family.DULMAGE_DIGRAPH:
        # Built inline: the named constructor is reserved for n >= 4, while
        # the matrix pattern itself already makes sense at n = 3.
        edges = [(q, q + 1) for q in range(n - 1)] + [(n - 1, 0), (n - 1, 1), (n - 2, 0)]
        return Digraph.from_edges(n, edges)
    # Odd-island variants: full cycle plus (n-1, 2), then the extra chords.
    edges = [(q, q + 1) for q in range(n - 1)] + [(n - 1, 0), (n - 1, 2)]
    if family in (Family.ODD_O2, Family.ODD_O3):
        edges.append((n - 2, 1))
    if family in (Family.ODD_O3, Family.ODD_O4):
        edges.append((n - 3, 0))
    return Digraph.from_edges(n, edges)


def build_family(spec: FamilySpec) -> Dfa | Digraph:
    """Construct the automaton or digraph a family spec denotes."""
    fam, n = spec.family, spec.n
    if fam is Family.CERNY:
        return cerny(n)
    if fam is Family.WIELANDT_AUTOMATON:
        return wielandt_automaton(n)
    if fam is Family.D_PRIME:
        return d_prime(n)
    if fam is Family.D_DOUBLE_PRIME:
        return d_double_prime(n)
    if fam is Family.B_AUTOMATON:
        return b_automaton(n)
    if fam is Family.WIELANDT_DIGRAPH:
        return wielandt_digraph(n)
    index = {Family.DULMAGE_DIGRAPH: "D", Family.ODD_O1: "O1", Family.ODD_O2: "O2",
             Family.ODD_O3: "O3", Family.ODD_O4: "O4"}[fam]
    return theorem3_matrix(index, n)


def family_from_name(name: str, n: int) -> FamilySpec:
    """Resolve a stable CLI identifier (``cerny``, ``thm3:O2``, ...)."""
    for fam in Family:
        if fam.value == name:
            return FamilySpec(fam, n)
    raise InputError(f"unknown family {name!r}; expected one of "
                     + ", ".join(f.value for f in Family))


def known_reset_length(spec: FamilySpec) -> int:
    """The certified exact reset length of an automaton family member.

    Refuses sizes outside each family's proven range rather than
    extrapolating, and refuses digraph families outright.
    """
    fam, n = spec.family, spec.n
    if fam is Family.CERNY:
        return (n - 1) ** 2
    if fam is Family.WIELANDT_AUTOMATON:
        return n * n - 3 * n + 3
    if fam is Family.D_PRIME:
        return n * n - 3 * n + 4
    if fam is Family.D_DOUBLE_PRIME:
        return n * n - 3 * n + 2
    if fam is Family.B_AUTOMATON:
        return n * n - 3 * n + 2
    raise InputError(f"{fam.value} is a digraph family; it has an exponent, "
                     "not a reset length")


def known_exponent(spec: FamilySpec) -> int:
    """The certified exponent of a digraph family member."""
    fam, n = spec.family, spec.n
    if fam is Family.WIELANDT_DIGRAPH:
        return (n - 1) ** 2 + 1
    if fam is Family.DULMAGE_DIGRAPH:
        return (n - 1) ** 2
    if fam is Family.ODD_O1:
        return n * n - 3 * n + 4
    if fam is Family.ODD_O2:
        return n * n - 3 * n + 3
    if fam in (Family.ODD_O3, Family.ODD_O4):
        return n * n - 3 * n + 2
    raise InputError(f"{fam.value} is an automaton family; it has a reset "
                     "length, not an exponent")


def induce(dfa: Dfa, substitutions: list[Word] | tuple[Word, ...]) -> Dfa:
    """Automaton induced by letting each substitution word act as one letter.

    The new automaton keeps the state set; new letter x acts as the word
    ``substitutions[x]`` does on single states.  Substituting the identity
    words [ (0,), (1,), ... ] returns an equal automaton.
    """
    subs = [tuple(w) for w in substitutions]
    if not subs:
        raise InputError("need at least one substitution word")
    for w in subs:
        if len(w) == 0:
            raise InputError("substitution words must be nonempty")
    rows = []
    for q in range(dfa.n):
        row = []
        for w in subs:
            row.append(apply(dfa, StateSet.of(dfa.n, [q]), w).the_state())
        rows.append(tuple(row))
    return Dfa(dfa.n, len(subs), tuple(rows))


def compose_substitutions(outer: list[Word], inner: list[Word]) -> list[Word]:
    """Substitute ``inner`` words into each letter of the ``outer`` words, so
    induce(induce(A, inner), outer) == induce(A, compose(outer, inner))."""
    out = []
    for w in outer:
        flat: list[int] = []
        for a in w:
            flat.extend(inner[a])
        out.append(tuple(flat))
    return out
