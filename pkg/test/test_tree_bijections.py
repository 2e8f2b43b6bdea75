#!/usr/bin/env python
# -*- coding: utf-8 -*-

from schroederbij import (DiSkTree, SchroderPath, parse_tree, rho, rho_inv, path_to_tree,
                          tree_to_path, first_minus_index, enumerate_words, embed_star,
                          is_star, DomainMismatch, StarMember, EmptyTree)
from schroederbij.bijections.trees import strip_star, check_rho, check_path_tree
from schroederbij.structures.paths import hill_positions
from hypothesis import given, strategies as st
import pytest

# first - at index 6, mapped with k = 2
SOURCE = parse_tree('(- (+ . (- (+ . (- (+ (+ (+ . .) .) .) (+ . (- (+ . .) (+ . .))))) .)) '
                    '(+ . .))')
IMAGES = {
    (0, 0, 0, 0): '(- (+ . (- (+ (- . .) (- (+ (+ (+ . .) .) .) (+ . (- (+ . .) (+ . .))))) .)) '
                  '(+ . .))',
    (0, 0, 0, 1): '(- (+ . (- (- . (+ . (- (+ (+ (+ . .) .) .) (+ . (- (+ . .) (+ . .)))))) .)) '
                  '(+ . .))',
    (0, 0, 1, 0): '(- (+ . (- (- . (+ (+ . (- (+ (+ . .) .) (+ . (- (+ . .) (+ . .))))) .)) .)) '
                  '(+ . .))',
    (0, 0, 1, 1): '(- (+ . (- (- . (+ (- . (+ (+ (+ . .) .) (- . (+ (+ . .) (- . .))))) .)) .)) '
                  '(+ . .))',
    (0, 1, 0, 0): '(- (+ . (- (- . (+ (+ (+ . (- (+ . .) (+ . (- (+ . .) (+ . .))))) .) .)) .)) '
                  '(+ . .))',
    (0, 1, 0, 1): '(- (+ . (- (- . (+ (- (+ . (- (+ . .) (+ . (- (+ . .) (+ . .))))) .) .)) .)) '
                  '(+ . .))',
    (0, 1, 1, 0): '(- (+ . (- (- . (+ (+ (- . (+ (+ . .) (- . (+ (+ . .) (- . .))))) .) .)) .)) '
                  '(+ . .))',
    (0, 1, 1, 1): '(- (+ . (- (- . (+ (- (- . (+ (+ . .) (- . (+ (+ . .) (- . .))))) .) .)) .)) '
                  '(+ . .))',
    (1, 0, 0, 0): '(- (+ . (- (- . (+ (+ (+ (+ . (- . (+ . (- (+ . .) (+ . .))))) .) .) .)) .)) '
                  '(+ . .))',
    (1, 0, 0, 1): '(- (+ . (- (- . (+ (- (+ (+ . (- . (+ . (- (+ . .) (+ . .))))) .) .) .)) .)) '
                  '(+ . .))',
    (1, 0, 1, 0): '(- (+ . (- (- . (+ (+ (- (+ . (- . (+ . (- (+ . .) (+ . .))))) .) .) .)) .)) '
                  '(+ . .))',
    (1, 0, 1, 1): '(- (+ . (- (- . (+ (- (- (+ . (- . (+ . (- (+ . .) (+ . .))))) .) .) .)) .)) '
                  '(+ . .))',
    (1, 1, 0, 0): '(- (+ . (- (- . (+ (+ (+ (- . (+ . (- . (+ (+ . .) (- . .))))) .) .) .)) .)) '
                  '(+ . .))',
    (1, 1, 0, 1): '(- (+ . (- (- . (+ (- (+ (- . (+ . (- . (+ (+ . .) (- . .))))) .) .) .)) .)) '
                  '(+ . .))',
    (1, 1, 1, 0): '(- (+ . (- (- . (+ (+ (- (- . (+ . (- . (+ (+ . .) (- . .))))) .) .) .)) .)) '
                  '(+ . .))',
    (1, 1, 1, 1): '(- (+ . (- (- . (+ (- (- (- . (+ . (- . (+ (+ . .) (- . .))))) .) .) .)) .)) '
                  '(+ . .))',
}

# first - at index 5, preimage with three bits
IMAGE_K5 = parse_tree('(- (+ . (- (+ (+ (+ . .) .) .) (+ (+ (- . (+ . .)) .) (- . (+ . .))))) '
                      '(+ . .))')
PREIMAGE_K5 = parse_tree('(- (+ (+ (+ (+ (+ . .) .) .) .) (- (+ (+ . .) (- . (+ . .))) .)) '
                         '(+ . .))')

WORDS_5 = list(enumerate_words(5))


def test_rho_examples():
    assert first_minus_index(SOURCE) == 6
    assert len(IMAGES) == 16
    for b, text in IMAGES.items():
        s = rho(SOURCE, b, 2)
        assert str(s) == text
        assert first_minus_index(s) == 2
        assert not is_star(s)
        assert rho_inv(s) == (SOURCE, b)


def test_rho_inv_example():
    assert first_minus_index(IMAGE_K5) == 5
    t, b = rho_inv(IMAGE_K5)
    assert t == PREIMAGE_K5
    assert b == (1, 1, 0)
    assert first_minus_index(t) == 8
    assert rho(PREIMAGE_K5, '110', 5) == IMAGE_K5


def test_rho_small():
    assert str(rho(DiSkTree(), (), 1)) == '(- . .)'
    assert str(rho('(+ . .)', (), 2)) == '(+ . (- . .))'
    assert str(rho('(+ . .)', (0,), 1)) == '(+ (- . .) .)'
    assert rho_inv('(+ (- . .) .)') == (parse_tree('(+ . .)'), (0,))
    assert rho_inv('(- . .)') == (DiSkTree(), ())


def test_rho_errors():
    with pytest.raises(DomainMismatch):
        rho('(+ . .)', (), 1)
    with pytest.raises(DomainMismatch):
        rho('(- . .)', (), 2)
    with pytest.raises(DomainMismatch):
        rho(DiSkTree(), (), 0)
    with pytest.raises(StarMember):
        rho_inv('(- (+ . .) .)')
    with pytest.raises(EmptyTree):
        rho_inv(DiSkTree())


def test_strip_star():
    assert str(strip_star('(- (+ . .) .)')) == '(- . .)'
    assert strip_star('(+ . .)') == DiSkTree()
    with pytest.raises(DomainMismatch):
        strip_star('(- . .)')


def test_exhaustive_rho():
    for n in range(2, 7):
        report = check_rho(n)
        assert report.ok
        assert len(report.checks) == 4 * n


def test_path_to_tree_small():
    assert path_to_tree('') == DiSkTree()
    assert str(path_to_tree('UD')) == '(+ . .)'
    assert str(path_to_tree('H')) == '(- . .)'
    assert tree_to_path('(- . .)') == SchroderPath('H')
    assert tree_to_path(DiSkTree()) == SchroderPath('')


def test_exhaustive_path_tree():
    for n in range(6):
        assert check_path_tree(n).ok


@given(st.sampled_from(WORDS_5))
def test_path_to_tree_hills(word):
    t = path_to_tree(word)
    assert len(t) == 5
    assert first_minus_index(t) == len(hill_positions(word)) + 1
    assert tree_to_path(t).word == word


@given(st.sampled_from(WORDS_5))
def test_star_matches_leading_hill(word):
    t = path_to_tree(word)
    assert is_star(t) == word.startswith('UD')
    if is_star(t):
        assert embed_star(strip_star(t)) == t
