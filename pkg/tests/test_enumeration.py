"""Enumeration: structural stream vs. brute-force filter, counts, order."""

import pytest

from sepstats.enumeration import (
    FILTER_CAP,
    HARD_CAP,
    count_irreducible,
    count_separable,
    enumerate_filter,
    enumerate_structural,
    iter_separable_bytes,
)
from sepstats.permutations import is_irreducible, is_separable

SEPARABLE = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718]
IRREDUCIBLE = [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859]


def test_counts_match_frozen_values():
    for n, want in enumerate(SEPARABLE, start=1):
        assert count_separable(n) == want
    for n, want in enumerate(IRREDUCIBLE, start=1):
        assert count_irreducible(n) == want


def test_counts_halving_relation():
    for n in range(2, 13):
        assert count_separable(n) == 2 * count_irreducible(n)


def test_structural_stream_is_strictly_lex_ordered_and_complete():
    for n in range(1, 8):
        seen = list(iter_separable_bytes(n, "all"))
        # strict order implies no duplicates
        assert all(a < b for a, b in zip(seen, seen[1:]))
        assert len(seen) == count_separable(n)


def test_class_streams_partition_the_separables():
    for n in range(2, 8):
        all_set = set(iter_separable_bytes(n, "all"))
        irr = set(iter_separable_bytes(n, "irr"))
        red = set(iter_separable_bytes(n, "red"))
        assert irr | red == all_set
        assert not (irr & red)
        assert len(irr) == count_irreducible(n)


def test_irreducible_stream_agrees_with_predicate():
    from sepstats.permutations import Permutation

    for n in range(1, 7):
        irr_stream = set(iter_separable_bytes(n, "irr"))
        for word in iter_separable_bytes(n, "all"):
            pi = Permutation(tuple(word))
            assert (bytes(word) in irr_stream) == is_irreducible(pi)


def test_filter_equals_structural():
    for n in range(1, 8):
        assert list(enumerate_filter(n)) == list(enumerate_structural(n))


def test_filter_yields_only_separables():
    for pi in enumerate_filter(5):
        assert is_separable(pi)


def test_caps_enforced():
    with pytest.raises(ValueError):
        list(enumerate_structural(HARD_CAP + 1))
    with pytest.raises(ValueError):
        list(enumerate_filter(FILTER_CAP + 1))
    with pytest.raises(ValueError):
        list(enumerate_structural(0))
    with pytest.raises(ValueError):
        iter_separable_bytes(3, "bogus")


def test_reducible_stream_empty_at_n1():
    assert list(iter_separable_bytes(1, "red")) == []
