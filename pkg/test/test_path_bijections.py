#!/usr/bin/env python
# -*- coding: utf-8 -*-

from schroederbij import (SchroderPath, phi, phi_inv, big_phi, big_phi_inv, psi, psi_inv,
                          big_psi, big_psi_inv, enumerate_words, LengthMismatch,
                          DomainMismatch, NotHillFree, NotLittle, ZeroHills,
                          VerificationFailure)
from schroederbij.bijections.paths import (has_h1_before_first_closure, check_phi,
                                           check_big_phi, check_psi, check_big_psi,
                                           check_hill_recurrences, check_little_recurrences)
from schroederbij.structures.paths import hill_positions
from hypothesis import given, strategies as st
import pytest

WORDS_5 = list(enumerate_words(5))
LITTLE_5 = list(enumerate_words(5, 'little'))
HILL_FREE_6 = [w for w in enumerate_words(6, 'hill_free')]


def test_phi_inv_example():
    p, b = phi_inv('HHUHUHDUDDUHDHHUUDD')
    assert p == SchroderPath('HHUDUHDUDUDHUDUDUDUD')
    assert b == (1, 0, 1, 1, 1, 1, 0)
    assert phi(p, b) == SchroderPath('HHUHUHDUDDUHDHHUUDD')
    assert phi('HHUDUHDUDUDHUDUDUDUD', '1011110').word == 'HHUHUHDUDDUHDHHUUDD'


def test_phi_small():
    assert phi('', ()).word == 'H'
    assert phi('UD', (0,)).word == 'UUDD'
    assert phi('UD', (1,)).word == 'UHD'
    assert phi_inv('H') == (SchroderPath(''), ())
    assert phi_inv('UHD') == (SchroderPath('UD'), (1,))


def test_phi_errors():
    with pytest.raises(LengthMismatch):
        phi('UD', ())
    with pytest.raises(NotHillFree):
        phi_inv('UD')
    with pytest.raises(DomainMismatch):
        phi_inv('')
    with pytest.raises(ValueError):
        phi('UD', '2')
    with pytest.raises(TypeError):
        phi('UD', 1)


def test_big_phi():
    assert big_phi('', (), 1).word == 'UD'
    assert big_phi('UDUD', (0,), 1).word == 'UUDDUD'
    assert big_phi_inv('UUDDUD') == (SchroderPath('UDUD'), (0,))
    assert big_phi_inv('UDH') == (SchroderPath('H'), ())
    with pytest.raises(DomainMismatch):
        big_phi('UDUD', (), 1)
    with pytest.raises(DomainMismatch):
        big_phi('UD', '0', 3)
    with pytest.raises(DomainMismatch):
        big_phi('UD', (), -1)


def test_psi_inv_examples():
    p, t = psi_inv('UUHUUDDUDDUDUHDDUUDHUDD')
    assert p == SchroderPath('UDUUDDUDUDUDUDUDUUDHUDD')
    assert t == (1, 0, 2, 2, 1, 0)
    assert psi(p, t).word == 'UUHUUDDUDDUDUHDDUUDHUDD'
    p, t = psi_inv('UUUDUUDDDHUDHUHDUDDUUDD')
    assert p == SchroderPath('UDUDUHDUDUDUDUUDDUDUUDD')
    assert t == (0, 1, 0, 2, 0, 1)
    assert psi(p, '010201').word == 'UUUDUUDDDHUDHUHDUDDUUDD'


def test_psi_branches():
    assert not has_h1_before_first_closure('UUHUUDDUDDUDUHDDUUDHUDD')
    assert has_h1_before_first_closure('UUUDUUDDDHUDHUHDUDDUUDD')
    assert not has_h1_before_first_closure('')
    assert psi('UD', (0,)).word == 'UUDD'
    assert psi('UD', (1,)).word == 'UHD'


def test_psi_errors():
    with pytest.raises(NotLittle):
        psi('HUD', (0,))
    with pytest.raises(ZeroHills):
        psi('UUDD', ())
    with pytest.raises(LengthMismatch):
        psi('UDUD', (0,))
    with pytest.raises(DomainMismatch):
        psi('UD', (2,))
    with pytest.raises(NotHillFree):
        psi_inv('UDUUDD')
    with pytest.raises(NotLittle):
        big_psi_inv('H')


def test_big_psi():
    assert big_psi('', (), 1).word == 'UD'
    assert big_psi_inv('UDUUDD') == (SchroderPath('UUDD'), ())
    assert big_psi('UD', (0,), 0).word == 'UUDD'
    with pytest.raises(DomainMismatch):
        big_psi('UDUD', (0,), 2)


def test_exhaustive_phi():
    for n in range(1, 6):
        assert check_phi(n).ok
        assert check_big_phi(n).ok


def test_exhaustive_psi():
    for n in range(2, 6):
        assert check_psi(n).ok
        assert check_big_psi(n).ok


def test_recurrences():
    assert check_hill_recurrences(12).ok
    assert check_little_recurrences(12).ok


def test_check_raises():
    report = check_phi(3)
    report.check('forced failure', 1, False, 'counterexample')
    with pytest.raises(VerificationFailure) as excinfo:
        report.raise_for_failure()
    assert 'counterexample' in str(excinfo.value)


@given(st.sampled_from(WORDS_5), st.data())
def test_phi_inverse_after_map(word, data):
    k = len(hill_positions(word))
    b = tuple(data.draw(st.lists(st.integers(0, 1), min_size=k, max_size=k)))
    q = phi(word, b)
    assert q.is_hill_free
    assert q.semi_length == 6
    assert phi_inv(q) == (SchroderPath(word), b)


@given(st.sampled_from(HILL_FREE_6))
def test_phi_map_after_inverse(word):
    assert phi(*phi_inv(word)).word == word


@given(st.sampled_from(LITTLE_5), st.data())
def test_big_psi_inverse_after_map(word, data):
    j = len(hill_positions(word))
    k = data.draw(st.integers(0, j + 1))
    if k == j + 1:
        t = ()
    elif k < j:
        t = tuple(data.draw(st.lists(st.integers(0, 2), min_size=j - k, max_size=j - k)))
        if t[-1] == 2:
            t = t[:-1] + (1,)
    else:
        return
    q = big_psi(word, t, k)
    assert q.is_little
    assert q.hills == k
    assert big_psi_inv(q) == (SchroderPath(word), t)
