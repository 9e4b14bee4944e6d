"""Representability by non-negative integer combinations and Frobenius numbers.

Only the small cases needed by the reset-length lower-bound arguments are
required, so everything is plain dynamic programming; the general Frobenius
problem is far harder and out of scope.
"""

from __future__ import annotations

from collections.abc import Iterable
from math import gcd

from .errors import InputError


def _normalize_generators(generators: Iterable[int]) -> tuple[int, ...]:
    gens = tuple(int(g) for g in generators)
    if not gens:
        raise InputError("generator set must be nonempty")
    for g in gens:
        if g < 1:
            raise InputError(f"generators must be positive integers, got {g}")
    return gens


def _reachable(limit: int, gens: tuple[int, ...]) -> bytearray:
    """reach[x] == 1 iff x is a non-negative integer combination, x <= limit."""
    reach = bytearray(limit + 1)
    reach[0] = 1
    for g in gens:
        for x in range(g, limit + 1):
            if reach[x - g]:
                reach[x] = 1
    return reach


def is_representable(target: int, generators: Iterable[int]) -> bool:
    """True iff ``target`` is a sum of generators with repetition (0 counts:
    the empty combination)."""
    gens = _normalize_generators(generators)
    target = int(target)
    if target < 0:
        return False
    return bool(_reachable(target, gens)[target])


def frobenius_two(k1: int, k2: int) -> int:
    """Largest integer not representable over two coprime generators:
    k1*k2 - k1 - k2 (Sylvester's formula)."""
    k1, k2 = int(k1), int(k2)
    if k1 < 2 or k2 < 2:
        raise InputError("both generators must be at least 2")
    if gcd(k1, k2) != 1:
        raise InputError(f"generators {k1} and {k2} are not coprime")
    return k1 * k2 - k1 - k2


def threshold_all_representable(generators: Iterable[int]) -> int | None:
    """Least N >= 0 such that every integer above N is representable, or None
    when gcd of the generators exceeds 1 (then no such N exists).

    Scans a DP table and doubles the window until the largest gap is followed
    by min(generators) consecutive representable values, which pins it down
    regardless of any a priori Frobenius bound.
    """
    gens = _normalize_generators(generators)
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        return None
    smallest = min(gens)
    if smallest == 1:
        return 0
    limit = max(a * b for a in gens for b in gens) + smallest
    while True:
        reach = _reachable(limit, gens)
        largest_gap = -1
        for x in range(limit, -1, -1):
            if not reach[x]:
                largest_gap = x
                break
        if largest_gap + smallest <= limit and all(
            reach[x] for x in range(largest_gap + 1, largest_gap + smallest + 1)
        ):
            return max(largest_gap, 0)
        limit *= 2
