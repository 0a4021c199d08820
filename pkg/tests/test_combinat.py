from __future__ import annotations

import math
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from semisimp.combinat import (binomial, breve_cad_plus_entry, cad_entry, cad_plus_entry,
                               count_set_partitions, enumerate_strict_chains, iter_set_partitions,
                               iter_strict_chains, stirling2)


def test_binomial_conventions():
    assert binomial(4, 2) == 6
    assert binomial(2, 3) == 0
    assert binomial(-1, 0) == 0
    assert binomial(3, -1) == 0
    assert binomial(0, 0) == 1


@given(st.integers(1, 60), st.integers(0, 60))
def test_binomial_pascal_rule(p, q):
    assert binomial(p, q) == binomial(p - 1, q) + binomial(p - 1, q - 1)


def test_binomial_counts_subsets():
    for p in range(7):
        for q in range(8):
            assert binomial(p, q) == sum(1 for _ in combinations(range(p), q))


def test_stirling_small_values():
    assert stirling2(0, 0) == 1
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25
    assert stirling2(3, 0) == 0
    assert stirling2(2, 5) == 0
    assert stirling2(-1, -1) == 0


@pytest.mark.parametrize("p", range(0, 9))
def test_stirling_matches_partition_enumeration(p):
    for q in range(0, p + 2):
        assert stirling2(p, q) == count_set_partitions(p, q)


def test_set_partitions_are_bell_many():
    bell = [1, 1, 2, 5, 15, 52, 203]
    assert [sum(1 for _ in iter_set_partitions(p)) for p in range(7)] == bell


@given(st.integers(1, 40), st.integers(1, 40))
def test_stirling_recurrence(p, q):
    assert stirling2(p, q) == q * stirling2(p - 1, q) + stirling2(p - 1, q - 1)


def test_breve_cad_plus_known_rows():
    assert [breve_cad_plus_entry(4, p) for p in range(-1, 5)] == [0, 1, 30, 150, 240, 120]
    assert breve_cad_plus_entry(-1, -1) == 1
    assert breve_cad_plus_entry(3, -1) == 0


def test_strict_chains_explicit_vs_lattice_count():
    for n in range(-1, 5):
        for p in range(-1, n + 2):
            for anchored in (False, True):
                explicit = list(iter_strict_chains(n, p, anchored))
                assert len(explicit) == enumerate_strict_chains(n, p, anchored)
                for chain in explicit:
                    assert all(a < b for a, b in zip(chain, chain[1:]))
                    assert all(chain_member for chain_member in chain)


@pytest.mark.parametrize("n", range(-1, 9))
def test_chain_counts_match_closed_forms(n):
    for p in range(-1, n + 1):
        assert enumerate_strict_chains(n, p, anchored=True) == math.factorial(p + 1) * stirling2(n + 1, p + 1)
        assert enumerate_strict_chains(n, p) == cad_plus_entry(n, p)


def test_cad_adds_optional_empty_bottom():
    # cad[n]_p counts chains whose first member may be empty
    for n in range(-1, 5):
        for p in range(-1, n + 2):
            assert cad_entry(n, p) == enumerate_strict_chains(n, p) + enumerate_strict_chains(n, p - 1)
    assert [cad_entry(4, p) for p in range(-1, 6)] == [1, 32, 211, 570, 750, 480, 120]
