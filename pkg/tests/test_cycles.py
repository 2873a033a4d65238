"""Girth and fixed-length cycle enumeration against a permutation oracle."""

from __future__ import annotations

import pytest
from hypothesis import given

from arcconn import AcyclicDigraph, Digraph, cycles_of_length, girth, girth_cycles, is_cycle

from .conftest import digraphs, oracle_cycles_of_length, oracle_girth


def test_girth_known_instances(l8, four_cycle):
    assert girth(four_cycle) == 4
    assert girth(l8) == 4
    assert girth(Digraph(3, [(0, 1), (1, 2), (2, 0)])) == 3
    assert girth(Digraph(3, [(0, 1), (1, 2)])) is None


def test_girth_cycles_l8(l8):
    cycles = girth_cycles(l8)
    assert cycles == [(0, 1, 2, 3), (4, 5, 6, 7)]


def test_girth_cycles_requires_a_cycle():
    with pytest.raises(AcyclicDigraph):
        girth_cycles(Digraph(3, [(0, 1), (1, 2)]))


def test_cycles_are_canonical_rotations(four_cycle):
    assert cycles_of_length(four_cycle, 4) == [(0, 1, 2, 3)]


@given(digraphs(min_n=2, max_n=6))
def test_girth_matches_oracle(D):
    assert girth(D) == oracle_girth(D)


@given(digraphs(min_n=2, max_n=6))
def test_cycle_enumeration_matches_oracle(D):
    for length in range(2, D.n + 1):
        ours = cycles_of_length(D, length)
        assert sorted(ours) == ours  # deterministic order
        assert set(ours) == oracle_cycles_of_length(D, length)


@given(digraphs(min_n=2, max_n=6))
def test_girth_cycles_are_cycles_of_girth_length(D):
    g = girth(D)
    if g is None:
        return
    cycles = girth_cycles(D)
    assert cycles == cycles_of_length(D, g)
    for C in cycles:
        assert is_cycle(D, C)
        assert len(C) == g


def test_is_cycle_rejects_nonsense(four_cycle):
    assert not is_cycle(four_cycle, (0, 2, 1, 3))
    assert not is_cycle(four_cycle, (0, 1))
    assert not is_cycle(four_cycle, (0, 1, 2))
    assert is_cycle(four_cycle, (0, 1, 2, 3))
