"""Representability and Frobenius-number facts."""

from __future__ import annotations

from math import gcd

import pytest

from synckit import (
    InputError,
    frobenius_two,
    is_representable,
    threshold_all_representable,
)


class TestIsRepresentable:
    def test_basic_examples(self):
        assert is_representable(7, [3, 4])
        assert not is_representable(5, [3, 4])
        assert is_representable(0, [7])
        assert is_representable(12, [3, 4])

    def test_negative_target(self):
        assert not is_representable(-1, [2, 3])

    def test_generator_validation(self):
        with pytest.raises(InputError):
            is_representable(5, [])
        with pytest.raises(InputError):
            is_representable(5, [0, 3])
        with pytest.raises(InputError):
            is_representable(5, [-2])

    def test_multiset_generators_allowed(self):
        assert is_representable(6, [3, 3])


class TestFrobeniusTwo:
    def test_examples(self):
        assert frobenius_two(3, 4) == 5
        assert frobenius_two(2, 3) == 1
        assert frobenius_two(5, 4) == 11  # n(n-1) - n - (n-1) at n = 5

    def test_validation(self):
        with pytest.raises(InputError):
            frobenius_two(4, 6)  # not coprime
        with pytest.raises(InputError):
            frobenius_two(1, 5)  # degenerate

    def test_sylvester_formula_against_dp(self):
        # the formula value is never representable, and everything in the
        # window above it is
        for k1 in range(2, 31):
            for k2 in range(2, 31):
                if gcd(k1, k2) != 1:
                    continue
                f = frobenius_two(k1, k2)
                assert not is_representable(f, [k1, k2])
                for x in range(f + 1, f + k1 * k2 + 1):
                    assert is_representable(x, [k1, k2])

    @pytest.mark.parametrize("n", range(4, 51))
    def test_consecutive_pair_lower_bound_fact(self, n):
        # the value n^2 - 3n + 1 over {n, n-1} underpins the reset-length
        # lower bounds for the cycle-plus-chord families
        f = frobenius_two(n, n - 1)
        assert f == n * n - 3 * n + 1
        assert not is_representable(f, [n, n - 1])


class TestThreshold:
    def test_examples(self):
        assert threshold_all_representable([3, 4]) == 5
        assert threshold_all_representable([1]) == 0
        assert threshold_all_representable([4, 6]) is None

    def test_matches_frobenius_for_coprime_pairs(self):
        for k1 in range(2, 31):
            for k2 in range(k1 + 1, 31):
                if gcd(k1, k2) != 1:
                    continue
                assert threshold_all_representable([k1, k2]) == frobenius_two(k1, k2)

    def test_three_generators(self):
        threshold = threshold_all_representable([6, 10, 15])
        assert threshold == 29
        assert not is_representable(29, [6, 10, 15])
        for x in range(30, 90):
            assert is_representable(x, [6, 10, 15])

    def test_gcd_two_has_no_threshold(self):
        assert threshold_all_representable([6, 10]) is None

    def test_singleton_generator(self):
        assert threshold_all_representable([7]) is None
        assert threshold_all_representable([1, 9]) == 0
