#!/usr/bin/env python
# -*- coding: utf-8 -*-

from schroederbij import (Permutation, StatRecord, parse_permutation, is_separable, iar, comp,
                          comp_by_factorisation, descent_set, stat_record, enumerate_separable,
                          iar_triangle, comp_vs_iar, comp_vs_paths, descent_sets_vs_trees,
                          RiordanTriangle, PermutationError, VerificationFailure)
from schroederbij.structures.permutations import (enumerate_permutations, check_iar_triangle,
                                                  separable_by_blocks,
                                                  contains_separability_pattern)
from schroederbij.verifications.suites import IAR_COMP_EXAMPLES
from hypothesis import given, strategies as st
from itertools import permutations
import pytest

ALL_6 = list(permutations(range(1, 7)))


def test_permutation():
    pi = Permutation([2, 4, 1, 3])
    assert str(pi) == '2413'
    assert len(pi) == 4
    assert pi[1] == 4
    assert pi == parse_permutation('2413')
    long = parse_permutation('1,10,2,3,4,5,6,7,8,9')
    assert len(long) == 10
    assert str(long) == '1,10,2,3,4,5,6,7,8,9'


def test_permutation_errors():
    with pytest.raises(PermutationError):
        Permutation([])
    with pytest.raises(PermutationError):
        Permutation([1, 1])
    with pytest.raises(PermutationError):
        Permutation([0, 1])
    with pytest.raises(TypeError):
        Permutation(['a'])
    with pytest.raises(PermutationError):
        parse_permutation('12x')
    with pytest.raises(TypeError):
        parse_permutation(123)


def test_separability():
    assert not is_separable('2413')
    assert not is_separable('3142')
    assert not is_separable('25314')
    assert is_separable('1')
    assert is_separable('1324')
    assert is_separable('4321')
    assert contains_separability_pattern('52413')
    assert not separable_by_blocks('52413')
    with pytest.raises(ValueError):
        is_separable('12', method='graphs')


def test_statistics_examples():
    for text, (i, c) in IAR_COMP_EXAMPLES.items():
        assert iar(text) == i
        assert comp(text) == c
    assert descent_set('2413') == frozenset([2])
    assert descent_set('4321') == frozenset([1, 2, 3])
    assert stat_record('132') == StatRecord(2, 2, {2}, True)
    assert stat_record('2413') == StatRecord(2, 1, {2}, False)
    assert 'iar' in str(stat_record('1'))


def test_comp_by_factorisation():
    for values in permutations(range(1, 6)):
        assert comp_by_factorisation(values) == comp(values)


def test_enumerate_separable():
    assert [sum(1 for _ in enumerate_separable(n)) for n in range(1, 7)] \
        == [1, 2, 6, 22, 90, 394]
    filtered = [Permutation(v) for v in ALL_6 if is_separable(v, method='patterns')]
    assert list(enumerate_separable(6)) == filtered
    with pytest.raises(PermutationError):
        enumerate_separable(0)
    with pytest.raises(PermutationError):
        list(enumerate_permutations(0))


def test_iar_triangle():
    tri = iar_triangle(5)
    assert tri.n_rows == 5
    assert tri.rows[1] == (1, 1)
    assert tri.rows[4] == (45, 28, 12, 4, 1)
    assert check_iar_triangle(iar_triangle(7, check=False)).ok
    with pytest.raises(PermutationError):
        iar_triangle(0)


def test_iar_triangle_mismatch():
    bad = RiordanTriangle([[1], [1, 1], [3, 2, 2]])
    assert not check_iar_triangle(bad, raise_on_failure=False).ok
    with pytest.raises(VerificationFailure):
        check_iar_triangle(bad)


def test_comp_vs_iar():
    for n in range(1, 7):
        assert comp_vs_iar(n).ok
    control = comp_vs_iar(4, separable_only=False, raise_on_failure=False)
    assert not control.ok
    assert 'bin 1' in control.checks[0]['detail']
    with pytest.raises(VerificationFailure):
        comp_vs_iar(4, separable_only=False)


def test_comp_vs_paths():
    for n in range(6):
        assert comp_vs_paths(n).ok


def test_descent_sets_vs_trees():
    for n in range(1, 7):
        assert descent_sets_vs_trees(n).ok


@given(st.sampled_from(ALL_6))
def test_stat_record_consistent(values):
    record = stat_record(values)
    assert record.iar == (min(record.des_set) if record.des_set else 6)
    assert record.separable == separable_by_blocks(values)
    assert 1 <= record.comp <= 6


@given(st.integers(min_value=9, max_value=10).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))))
def test_separability_tests_agree(values):
    assert is_separable(values, method='patterns') == is_separable(values, method='blocks')
