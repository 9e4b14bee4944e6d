"""Family constructors, induced automata, and the certified value oracles."""

from __future__ import annotations

import random

import pytest

from synckit import (
    Family,
    FamilySpec,
    InputError,
    b_automaton,
    build_family,
    cerny,
    compose_substitutions,
    d_double_prime,
    d_prime,
    dfa_canonical_form,
    dfa_isomorphic,
    dulmage_digraph,
    exponent,
    family_from_name,
    induce,
    is_reset_word,
    is_strongly_connected,
    is_synchronizing,
    known_exponent,
    known_reset_length,
    shortest_reset_length,
    theorem3_matrix,
    underlying_digraph,
    wielandt_automaton,
    wielandt_digraph,
)

A, B = (0,), (1,)


class TestConstructors:
    def test_cerny_structure(self):
        assert cerny(4).delta == ((0, 1), (1, 2), (2, 3), (0, 0))

    def test_cerny_minimum_size(self):
        assert shortest_reset_length(cerny(2))[0] == 1
        with pytest.raises(InputError):
            cerny(1)

    def test_wielandt_digraph_edges(self):
        d = wielandt_digraph(5)
        assert len(d.edges) == 6
        assert d.edges == frozenset([(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 1)])
        assert exponent(d) == 17

    def test_wielandt_automaton_round_trip(self):
        for n in (3, 5, 7):
            assert underlying_digraph(wielandt_automaton(n)) == wielandt_digraph(n)

    def test_dulmage_edges_and_exponents(self):
        for n in range(4, 9):
            d = dulmage_digraph(n)
            assert len(d.edges) == n + 2
            assert is_strongly_connected(d)
            assert exponent(d) == (n - 1) ** 2

    def test_dulmage_minimum(self):
        with pytest.raises(InputError):
            dulmage_digraph(3)

    def test_colorings_share_the_augmented_digraph(self):
        for n in (4, 6, 9):
            assert underlying_digraph(d_prime(n)) == dulmage_digraph(n)
            assert underlying_digraph(d_double_prime(n)) == dulmage_digraph(n)

    def test_no_letter_of_ddprime_is_a_permutation(self):
        for n in (4, 5, 8):
            dfa = d_double_prime(n)
            for a in range(2):
                column = [dfa.delta[q][a] for q in range(n)]
                assert len(set(column)) < n

    def test_b_automaton_validation(self):
        for bad in (3, 4, 6):
            with pytest.raises(InputError):
                b_automaton(bad)
        dfa = b_automaton(5)
        assert is_synchronizing(dfa)
        assert is_strongly_connected(underlying_digraph(dfa))


class TestTheorem3Matrices:
    def test_w_and_d_match_named_digraphs(self):
        for n in (3, 5, 8):
            assert theorem3_matrix("W", n) == wielandt_digraph(n)
        for n in (4, 7):
            assert theorem3_matrix("D", n) == dulmage_digraph(n)

    def test_d_matrix_extends_to_n3(self):
        d = theorem3_matrix("D", 3)
        assert exponent(d) == 4

    def test_odd_island_exponents_at_nine(self):
        values = [exponent(theorem3_matrix(i, 9)) for i in ("W", "D", "O1", "O2", "O3", "O4")]
        assert values == [65, 64, 58, 57, 56, 56]

    def test_o2_primitive_at_five(self):
        from synckit import is_primitive

        assert is_primitive(theorem3_matrix("O2", 5))

    def test_invalid_index_and_size(self):
        with pytest.raises(InputError):
            theorem3_matrix("O5", 7)
        with pytest.raises(InputError):
            theorem3_matrix("O1", 6)  # even
        with pytest.raises(InputError):
            theorem3_matrix("O1", 3)


class TestKnownValues:
    @pytest.mark.parametrize("family,n,expected", [
        (Family.CERNY, 5, 16),
        (Family.WIELANDT_AUTOMATON, 5, 13),
        (Family.D_PRIME, 6, 22),
        (Family.D_DOUBLE_PRIME, 6, 20),
        (Family.B_AUTOMATON, 7, 30),
    ])
    def test_reset_lengths(self, family, n, expected):
        assert known_reset_length(FamilySpec(family, n)) == expected

    def test_rejects_digraph_families(self):
        with pytest.raises(InputError):
            known_reset_length(FamilySpec(Family.WIELANDT_DIGRAPH, 5))

    def test_rejects_out_of_hypothesis_sizes(self):
        with pytest.raises(InputError):
            FamilySpec(Family.B_AUTOMATON, 6)
        with pytest.raises(InputError):
            FamilySpec(Family.CERNY, 1)

    @pytest.mark.parametrize("name,n,expected", [
        ("thm3:W", 6, 26),
        ("thm3:D", 6, 25),
        ("thm3:O1", 7, 32),
        ("thm3:O2", 7, 31),
        ("thm3:O3", 7, 30),
        ("thm3:O4", 7, 30),
    ])
    def test_exponent_oracle(self, name, n, expected):
        spec = family_from_name(name, n)
        assert known_exponent(spec) == expected
        assert exponent(build_family(spec)) == expected

    def test_exponent_oracle_rejects_automata(self):
        with pytest.raises(InputError):
            known_exponent(FamilySpec(Family.CERNY, 4))

    def test_family_from_name_unknown(self):
        with pytest.raises(InputError):
            family_from_name("zerny", 4)


class TestOracleAgainstSearch:
    """Certified values versus the exact BFS, across every family."""

    @pytest.mark.parametrize("n", range(2, 8))
    def test_cerny(self, n):
        assert shortest_reset_length(cerny(n))[0] == known_reset_length(
            FamilySpec(Family.CERNY, n)
        )

    @pytest.mark.parametrize("n", range(3, 8))
    def test_wielandt(self, n):
        assert shortest_reset_length(wielandt_automaton(n))[0] == n * n - 3 * n + 3

    @pytest.mark.parametrize("n", range(4, 8))
    def test_augmented_colorings(self, n):
        assert shortest_reset_length(d_prime(n))[0] == n * n - 3 * n + 4
        assert shortest_reset_length(d_double_prime(n))[0] == n * n - 3 * n + 2

    @pytest.mark.parametrize("n", [5, 7])
    def test_b_series(self, n):
        assert shortest_reset_length(b_automaton(n))[0] == n * n - 3 * n + 2


class TestWitnessWords:
    @pytest.mark.parametrize("n", range(4, 13))
    def test_published_witnesses(self, n):
        cases = [
            (cerny(n), (A + B * (n - 1)) * (n - 2) + A, (n - 1) ** 2),
            (wielandt_automaton(n), (A + B * (n - 2)) * (n - 2) + A, n * n - 3 * n + 3),
            (d_prime(n), (A + B * (n - 2)) * (n - 2) + B + A, n * n - 3 * n + 4),
            (d_double_prime(n), (B + A * (n - 1)) * (n - 3) + B + A, n * n - 3 * n + 2),
        ]
        for dfa, word, length in cases:
            assert len(word) == length
            assert is_reset_word(dfa, word)


class TestInduce:
    def test_identity_substitution(self):
        dfa = cerny(5)
        assert induce(dfa, [A, B]) == dfa

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_cerny_induces_wielandt(self, n):
        induced = induce(cerny(n), [B, A + B])
        assert dfa_isomorphic(induced, wielandt_automaton(n))
        assert dfa_canonical_form(induced) == dfa_canonical_form(wielandt_automaton(n))

    @pytest.mark.parametrize("n", [5, 7])
    def test_b_series_induces_coloring_of_second_island_digraph(self, n):
        induced = induce(b_automaton(n), [B, A + B])
        assert underlying_digraph(induced) == theorem3_matrix("O2", n)

    def test_rejects_empty_substitution(self):
        with pytest.raises(InputError):
            induce(cerny(4), [A, ()])
        with pytest.raises(InputError):
            induce(cerny(4), [])

    def test_preserves_states_and_composes(self):
        rng = random.Random(23)
        dfa = cerny(5)
        for _ in range(20):
            inner = [tuple(rng.randrange(2) for _ in range(rng.randrange(1, 4)))
                     for _ in range(2)]
            outer = [tuple(rng.randrange(2) for _ in range(rng.randrange(1, 4)))
                     for _ in range(3)]
            two_step = induce(induce(dfa, inner), outer)
            one_step = induce(dfa, compose_substitutions(outer, inner))
            assert two_step == one_step
            assert two_step.n == dfa.n
