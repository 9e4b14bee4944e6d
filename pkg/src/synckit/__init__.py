"""Synchronizing automata, reset words, and primitive digraph exponents.

A library plus CLI for building the classical slowly-synchronizing families,
computing exact reset lengths and digraph exponents, and running exhaustive
censuses over initially-connected DFAs and small digraphs.
"""

from .automata import (
    DEFAULT_STATE_CAP,
    Dfa,
    StateSet,
    Word,
    apply,
    dfa_canonical_form,
    dfa_isomorphic,
    greedy_reset_word,
    is_reset_word,
    is_synchronizing,
    shortest_reset_length,
)
from .census import (
    CensusResult,
    ExponentCensus,
    GapReport,
    Histogram,
    IcdfaSlice,
    enumerate_icdfa,
    exponent_census,
    gap_report,
    load_checkpoint,
    reset_length_census,
    save_checkpoint,
    slices,
    theorem3_census,
)
from .digraphs import (
    ConjectureFinding,
    ConjectureReport,
    Digraph,
    colorings,
    coloring_count,
    conjecture_sweep,
    digraph_canonical_form,
    digraph_isomorphic,
    exponent,
    exponent_ceiling,
    from_matrix,
    is_primitive,
    is_strongly_connected,
    min_coloring_reset_length,
    power,
    primitive_digraphs,
    simple_cycle_lengths,
    to_matrix,
    underlying_digraph,
)
from .errors import (
    InputError,
    IntegrityError,
    InternalConsistencyError,
    ParseError,
    ResourceCapError,
    SynckitError,
)
from .families import (
    AUTOMATON_FAMILIES,
    DIGRAPH_FAMILIES,
    Family,
    FamilySpec,
    b_automaton,
    build_family,
    cerny,
    compose_substitutions,
    d_double_prime,
    d_prime,
    dulmage_digraph,
    family_from_name,
    induce,
    known_exponent,
    known_reset_length,
    theorem3_matrix,
    wielandt_automaton,
    wielandt_digraph,
)
from .numtheory import frobenius_two, is_representable, threshold_all_representable

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_STATE_CAP",
    "AUTOMATON_FAMILIES",
    "DIGRAPH_FAMILIES",
    "CensusResult",
    "ConjectureFinding",
    "ConjectureReport",
    "Dfa",
    "Digraph",
    "ExponentCensus",
    "Family",
    "FamilySpec",
    "GapReport",
    "Histogram",
    "IcdfaSlice",
    "InputError",
    "IntegrityError",
    "InternalConsistencyError",
    "ParseError",
    "ResourceCapError",
    "StateSet",
    "SynckitError",
    "Word",
    "apply",
    "b_automaton",
    "build_family",
    "cerny",
    "coloring_count",
    "colorings",
    "compose_substitutions",
    "conjecture_sweep",
    "d_double_prime",
    "d_prime",
    "dfa_canonical_form",
    "dfa_isomorphic",
    "digraph_canonical_form",
    "digraph_isomorphic",
    "dulmage_digraph",
    "enumerate_icdfa",
    "exponent",
    "exponent_ceiling",
    "exponent_census",
    "family_from_name",
    "frobenius_two",
    "from_matrix",
    "gap_report",
    "greedy_reset_word",
    "induce",
    "is_primitive",
    "is_representable",
    "is_reset_word",
    "is_strongly_connected",
    "is_synchronizing",
    "known_exponent",
    "known_reset_length",
    "load_checkpoint",
    "min_coloring_reset_length",
    "power",
    "primitive_digraphs",
    "reset_length_census",
    "save_checkpoint",
    "shortest_reset_length",
    "simple_cycle_lengths",
    "slices",
    "theorem3_census",
    "theorem3_matrix",
    "threshold_all_representable",
    "to_matrix",
    "underlying_digraph",
    "wielandt_automaton",
    "wielandt_digraph",
]
