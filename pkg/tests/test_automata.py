"""Core DFA operations: word actions, synchronizability, exact reset lengths."""

from __future__ import annotations

import random
from itertools import product

import pytest

from synckit import (
    Dfa,
    InputError,
    ResourceCapError,
    StateSet,
    apply,
    b_automaton,
    cerny,
    d_prime,
    dfa_canonical_form,
    dfa_isomorphic,
    greedy_reset_word,
    is_reset_word,
    is_synchronizing,
    shortest_reset_length,
    wielandt_automaton,
)

from oracles import apply_word_sets, brute_reset_length

A, B = (0,), (1,)


def random_dfa(rng, n, k):
    return Dfa(n, k, tuple(tuple(rng.randrange(n) for _ in range(k)) for _ in range(n)))


def cycle_dfa(n):
    """One letter acting as the full cycle; never synchronizing for n > 1."""
    return Dfa(n, 1, tuple(((q + 1) % n,) for q in range(n)))


class TestDfaConstruction:
    def test_rejects_bad_sizes(self):
        with pytest.raises(InputError):
            Dfa(0, 1, ())
        with pytest.raises(InputError):
            Dfa(1, 0, ((),))

    def test_rejects_out_of_range_target(self):
        with pytest.raises(InputError):
            Dfa(2, 1, ((0,), (2,)))

    def test_rejects_wrong_row_count(self):
        with pytest.raises(InputError):
            Dfa(3, 1, ((0,), (1,)))

    def test_normalizes_rows_to_tuples(self):
        dfa = Dfa(2, 2, [[0, 1], [1, 0]])
        assert dfa.delta == ((0, 1), (1, 0))


class TestStateSet:
    def test_bit_semantics(self):
        s = StateSet.of(5, [0, 3])
        assert s.bits == 0b01001
        assert len(s) == 2
        assert list(s) == [0, 3]
        assert 3 in s and 1 not in s

    def test_full_and_singleton(self):
        assert StateSet.full(3).bits == 0b111
        single = StateSet.of(4, [2])
        assert single.is_singleton() and single.the_state() == 2
        assert not StateSet.full(2).is_singleton()

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            StateSet.of(3, [3])
        with pytest.raises(InputError):
            StateSet(3, 8)


class TestApply:
    def test_empty_word_is_identity(self):
        dfa = cerny(4)
        full = StateSet.full(4)
        assert apply(dfa, full, ()) == full

    def test_cerny_witness_word_singleton(self):
        # (a b^{n-1})^{n-2} a at n = 4
        n = 4
        word = (A + B * (n - 1)) * (n - 2) + A
        image = apply(cerny(n), StateSet.full(n), word)
        assert image.is_singleton()

    def test_wielandt_witness_word_singleton(self):
        # (a b^{n-2})^{n-2} a at n = 5
        n = 5
        word = (A + B * (n - 2)) * (n - 2) + A
        image = apply(wielandt_automaton(n), StateSet.full(n), word)
        assert image.is_singleton()

    def test_rejects_bad_letter_and_state(self):
        dfa = cerny(3)
        with pytest.raises(InputError):
            apply(dfa, StateSet.full(3), (2,))
        with pytest.raises(InputError):
            apply(dfa, StateSet.full(4), (0,))

    def test_matches_set_oracle_and_composes(self):
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randrange(1, 6)
            k = rng.randrange(1, 4)
            dfa = random_dfa(rng, n, k)
            states = [q for q in range(n) if rng.random() < 0.6]
            u = tuple(rng.randrange(k) for _ in range(rng.randrange(5)))
            v = tuple(rng.randrange(k) for _ in range(rng.randrange(5)))
            s = StateSet.of(n, states)
            image = apply(dfa, s, u + v)
            assert set(image) == apply_word_sets(dfa.delta, states, u + v)
            # action composes and never grows the image
            assert image == apply(dfa, apply(dfa, s, u), v)
            assert len(image) <= len(s) or not states
            if states:
                assert len(apply(dfa, s, u)) >= 1


class TestIsResetWord:
    def test_cerny_known_word(self):
        n = 4
        assert is_reset_word(cerny(n), (A + B * (n - 1)) * (n - 2) + A)

    def test_empty_word_only_for_single_state(self):
        assert not is_reset_word(cerny(4), ())
        assert is_reset_word(Dfa(1, 1, ((0,),)), ())

    def test_d_prime_known_word(self):
        n = 5
        word = (A + B * (n - 2)) * (n - 2) + B + A
        assert is_reset_word(d_prime(n), word)


class TestIsSynchronizing:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_cerny_synchronizes(self, n):
        assert is_synchronizing(cerny(n))

    @pytest.mark.parametrize("n", range(3, 9))
    def test_wielandt_synchronizes(self, n):
        assert is_synchronizing(wielandt_automaton(n))

    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_cyclic_permutation_does_not(self, n):
        assert not is_synchronizing(cycle_dfa(n))

    def test_single_state(self):
        assert is_synchronizing(Dfa(1, 2, ((0, 0),)))

    def test_agrees_with_reset_search_exhaustively(self):
        # every complete DFA with n <= 3, k <= 2, plus all of n = 4, k = 2
        spaces = [(n, k) for n in (1, 2, 3) for k in (1, 2)] + [(4, 2)]
        for n, k in spaces:
            for flat in product(range(n), repeat=n * k):
                dfa = Dfa(n, k, tuple(tuple(flat[q * k:(q + 1) * k]) for q in range(n)))
                assert is_synchronizing(dfa) == (shortest_reset_length(dfa) is not None)


class TestShortestResetLength:
    def test_cerny_4(self):
        length, witness = shortest_reset_length(cerny(4))
        assert length == 9
        assert len(witness) == 9
        assert is_reset_word(cerny(4), witness)

    def test_single_state(self):
        assert shortest_reset_length(Dfa(1, 1, ((0,),))) == (0, ())

    @pytest.mark.parametrize("n", range(4, 11))
    def test_wielandt_series(self, n):
        length, witness = shortest_reset_length(wielandt_automaton(n))
        assert length == n * n - 3 * n + 3
        assert is_reset_word(wielandt_automaton(n), witness)

    def test_not_synchronizing_returns_none(self):
        assert shortest_reset_length(cycle_dfa(4)) is None

    def test_deterministic_witness(self):
        assert shortest_reset_length(cerny(4)) == shortest_reset_length(cerny(4))

    def test_matches_brute_oracle_on_random_dfas(self):
        rng = random.Random(11)
        for _ in range(120):
            n = rng.randrange(1, 6)
            k = rng.randrange(1, 4)
            dfa = random_dfa(rng, n, k)
            expected = brute_reset_length(dfa.delta, n, k)
            got = shortest_reset_length(dfa)
            if expected is None:
                assert got is None
            else:
                assert got is not None and got[0] == expected

    def test_no_shorter_word_exists(self):
        # exhaustive check below each optimum; small enough cases only
        cases = [cerny(4), wielandt_automaton(4), d_prime(4), b_automaton(5)]
        for dfa in cases:
            length, _ = shortest_reset_length(dfa)
            assert 1 <= length <= 12
            for word in product(range(dfa.k), repeat=length - 1):
                assert not is_reset_word(dfa, word)

    def test_state_cap(self):
        n = 27
        sink = Dfa(n, 1, tuple((0,) for _ in range(n)))
        with pytest.raises(ResourceCapError):
            shortest_reset_length(sink)
        assert shortest_reset_length(sink, state_cap=27) == (1, (0,))


class TestGreedyResetWord:
    def test_cerny_valid_and_at_least_optimal(self):
        word = greedy_reset_word(cerny(4))
        assert word is not None
        assert is_reset_word(cerny(4), word)
        assert len(word) >= 9

    def test_none_for_permutation_automaton(self):
        assert greedy_reset_word(cycle_dfa(5)) is None

    def test_wielandt_6(self):
        dfa = wielandt_automaton(6)
        word = greedy_reset_word(dfa)
        assert word is not None and is_reset_word(dfa, word)

    def test_random_dfas_bounded_below_by_optimum(self):
        rng = random.Random(13)
        for _ in range(100):
            n = rng.randrange(1, 6)
            k = rng.randrange(1, 4)
            dfa = random_dfa(rng, n, k)
            word = greedy_reset_word(dfa)
            exact = shortest_reset_length(dfa)
            assert (word is None) == (exact is None)
            if word is not None:
                assert is_reset_word(dfa, word)
                assert len(word) >= exact[0]


class TestDfaCanonicalForm:
    def test_invariant_under_state_relabeling(self):
        dfa = cerny(5)
        perm = (2, 0, 4, 1, 3)
        relabeled = Dfa(5, 2, tuple(
            tuple(perm[dfa.delta[q][a]] for a in range(2))
            for q in sorted(range(5), key=lambda x: perm[x])
        ))
        assert dfa_isomorphic(dfa, relabeled)

    def test_letter_swap_quotient(self):
        dfa = cerny(4)
        swapped = Dfa(4, 2, tuple((row[1], row[0]) for row in dfa.delta))
        assert dfa_isomorphic(dfa, swapped)
        assert not dfa_isomorphic(dfa, swapped, include_letters=False)

    def test_distinguishes_different_automata(self):
        assert not dfa_isomorphic(cerny(4), wielandt_automaton(4))

    def test_form_is_a_flat_table(self):
        form = dfa_canonical_form(cerny(4))
        assert len(form) == 8 and all(0 <= t < 4 for t in form)
