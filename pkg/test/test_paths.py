#!/usr/bin/env python
# -*- coding: utf-8 -*-

from schroederbij import (SchroderPath, stats, find_features, enumerate_words, enumerate_paths,
                          hill_triangle, decompose_at_hills, schroder_sequence,
                          check_three_term, swap_h0_hills, little_to_hill_free,
                          hill_free_to_little, parse_path, render_path, IllegalCharacter,
                          NegativeHeight, NonzeroEnd, NotHillFree, NotLittle)
from schroederbij.structures.paths import hill_positions, step_heights, check_swap_map
from hypothesis import given, strategies as st
import pytest
import re

WORDS_6 = list(enumerate_words(6))


def test_path():
    p = SchroderPath('UUDHD')
    assert p.word == 'UUDHD'
    assert str(p) == 'UUDHD'
    assert p.semi_length == 3
    assert len(p) == 5
    assert p.heights() == [1, 2, 1, 1, 0]
    assert p == parse_path(' UUDHD ')
    assert render_path(p) == 'UUDHD'
    assert SchroderPath('').semi_length == 0
    assert SchroderPath('UD') + SchroderPath('H') == SchroderPath('UDH')
    assert sorted([SchroderPath('H'), SchroderPath('UD')]) == [SchroderPath('UD'),
                                                               SchroderPath('H')]


def test_path_errors():
    with pytest.raises(IllegalCharacter):
        SchroderPath('UXD')
    with pytest.raises(NegativeHeight):
        SchroderPath('DU')
    with pytest.raises(NonzeroEnd):
        SchroderPath('UU')
    with pytest.raises(TypeError):
        parse_path(3)
    # all path errors are ValueErrors
    with pytest.raises(ValueError):
        SchroderPath('UDD')


def test_stats():
    s = stats('UDHUHD')
    assert (s.hills, s.h0, s.h, s.peaks, s.semi_length) == (1, 1, 1, 1, 4)
    assert not s.is_little
    assert SchroderPath('UUDD').is_little
    assert SchroderPath('UUDD').is_hill_free
    assert not SchroderPath('UDUUDD').is_hill_free
    assert SchroderPath('UDUUDD').hills == 1
    assert s.to_dict()['h0'] == 1
    assert 'hills' in str(s)


def test_hill_positions():
    assert hill_positions('UDUUDDUD') == [0, 6]
    assert hill_positions('UUDD') == []
    assert hill_positions('UUDD', base=1) == [1]
    assert step_heights('DU') == [-1, 0]


def test_find_features():
    f = find_features('UHDUD')
    assert f.hills == [3]
    assert f.horizontals == [(1, 1)]
    assert f.closures == [2, 4]
    assert f.basins == [(2, 0, 0)]
    assert f.valleys == [2]
    g = find_features('UUDHHUDD')
    assert g.basins_at(1) == [(2, 2, 1)]
    assert g.horizontals_at(1) == [3, 4]
    assert g.valleys == []


def _height_after(word, i):
    prefix = word[:i + 1]
    return prefix.count('U') - prefix.count('D')


def test_find_features_exhaustive():
    for n in range(7):
        for word in enumerate_words(n):
            f = find_features(word)
            basins = [(m.start(), len(m.group(1)), _height_after(word, m.start()))
                      for m in re.finditer(r'(?=D(H*)U)', word)]
            assert f.basins == basins, word
            for height in range(n + 1):
                assert f.basins_at(height) == [b for b in basins if b[2] == height]
            assert f.valleys == [m.start() for m in re.finditer(r'(?=DU)', word)]
            assert f.hills == [m.start() for m in re.finditer(r'(?=UD)', word)
                               if _height_after(word, m.start()) == 1]
            assert f.closures == [i for i, c in enumerate(word)
                                  if c == 'D' and _height_after(word, i) == 0]
            assert f.horizontals == [(i, _height_after(word, i))
                                     for i, c in enumerate(word) if c == 'H']


def test_enumeration_counts():
    assert [len(list(enumerate_words(n))) for n in range(6)] == [1, 2, 6, 22, 90, 394]
    assert [len(list(enumerate_words(n, 'little'))) for n in range(6)] == [1, 1, 3, 11, 45,
                                                                          197]
    assert [len(list(enumerate_words(n, 'hill_free'))) for n in range(6)] == [1, 1, 3, 11, 45,
                                                                             197]
    assert list(enumerate_words(1)) == ['UD', 'H']
    assert list(enumerate_words(2, 'little')) == ['UUDD', 'UDUD', 'UHD']
    assert all(isinstance(p, SchroderPath) for p in enumerate_paths(3))
    with pytest.raises(ValueError):
        list(enumerate_words(2, 'tall'))


def test_enumeration_order():
    words = list(enumerate_words(4))
    paths = [SchroderPath(w) for w in words]
    assert paths == sorted(paths)
    assert len(set(words)) == len(words)


def test_hill_triangle():
    r = hill_triangle(4)
    assert r.rows == ((1,), (1, 1), (3, 2, 1), (11, 7, 3, 1), (45, 28, 12, 4, 1))
    s = hill_triangle(4, 'little')
    assert s.rows == ((1,), (0, 1), (2, 0, 1), (6, 4, 0, 1), (26, 12, 6, 0, 1))
    assert r.kind == 'hills'
    assert s.kind == 'littlehills'
    assert hill_triangle(6, method='enumerate') == hill_triangle(6)
    assert hill_triangle(6, 'little', method='enumerate') == hill_triangle(6, 'little')
    with pytest.raises(ValueError):
        hill_triangle(3, 'hill_free')
    with pytest.raises(ValueError):
        hill_triangle(3, method='guess')


def test_schroder_sequence():
    assert schroder_sequence(7) == [1, 2, 6, 22, 90, 394, 1806, 8558]
    assert schroder_sequence(5, 'little') == [1, 1, 3, 11, 45, 197]


def test_three_term_recurrence():
    report = check_three_term(20)
    assert report.ok
    assert report.checks[0]['instances'] == 19
    with pytest.raises(ValueError):
        check_three_term(0)


def test_decompose_at_hills():
    parts = decompose_at_hills('HUDUUDDUD')
    assert [p.word for p in parts] == ['H', 'UUDD', '']
    assert [p.word for p in decompose_at_hills('UUDD')] == ['UUDD']


def test_swap_map():
    assert swap_h0_hills('HUD').word == 'UDH'
    assert swap_h0_hills('UUDD').word == 'UUDD'
    assert little_to_hill_free('UDUHD').word == 'HUHD'
    assert hill_free_to_little('HUHD').word == 'UDUHD'
    with pytest.raises(NotLittle):
        little_to_hill_free('H')
    with pytest.raises(NotHillFree):
        hill_free_to_little('UD')
    for n in range(6):
        assert check_swap_map(n).ok


def test_ascii_diagram():
    assert SchroderPath('UD').ascii_diagram() == '/\\'
    assert SchroderPath('UUDD').ascii_diagram() == ' /\\\n/  \\'
    assert SchroderPath('UHD').ascii_diagram() == ' __\n/  \\'
    assert SchroderPath('').ascii_diagram() == ''


@given(st.sampled_from(WORDS_6))
def test_swap_is_involution(word):
    p = SchroderPath(word)
    q = swap_h0_hills(p)
    assert swap_h0_hills(q) == p
    assert q.stats.hills == p.stats.h0
    assert q.stats.h0 == p.stats.hills


@given(st.sampled_from(WORDS_6))
def test_stats_agree_with_features(word):
    s = stats(word)
    f = find_features(word)
    assert s.hills == len(f.hills) == len(hill_positions(word))
    assert s.h0 == len(f.horizontals_at(0))
    assert s.h0 + s.h == word.count('H')
    assert s.semi_length == 6
