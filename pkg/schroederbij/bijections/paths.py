#!/usr/bin/env python
# -*- coding: utf-8 -*-

# The MIT License (MIT)
# Copyright (c) 2026 The schroederbij developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
# EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF
# MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.
# IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM,
# DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR
# OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE
# OR OTHER DEALINGS IN THE SOFTWARE.

__all__ = ['phi', 'phi_inv', 'big_phi', 'big_phi_inv', 'psi', 'psi_inv', 'big_psi',
           'big_psi_inv', 'has_h1_before_first_closure', 'check_phi', 'check_big_phi',
           'check_psi', 'check_big_psi', 'check_hill_recurrences',
           'check_little_recurrences']

__docformat__ = 'restructuredtext'

from ..structures.paths import (SchroderPath, as_path, step_heights, hill_positions,
                                enumerate_words, hill_triangle)
from ..errors import (LengthMismatch, DomainMismatch, NotHillFree, NotLittle, ZeroHills,
                      VerificationFailure)
from ..helpers import parse_bits, parse_trits, format_digits
from ..report import Report
from itertools import product


def _digits(seq, alphabet, name):
    if isinstance(seq, str):
        return parse_trits(seq) if alphabet == (0, 1, 2) else parse_bits(seq)
    try:
        digits = tuple(int(d) for d in seq)
    except TypeError:
        raise TypeError('{:s} must be a string or a sequence of int!'.format(name))
    if any(d not in alphabet for d in digits):
        raise ValueError('{:s} must only contain {}!'.format(name, alphabet))
    return digits


def _bits(b):
    return _digits(b, (0, 1), 'bit sequence')


def _trits(t):
    return _digits(t, (0, 1, 2), 'trit sequence')


def _collapse_low_hills(word):
    """Replace every hill by a horizontal."""
    hills = set(hill_positions(word))
    out = []
    i = 0
    while i < len(word):
        if i in hills:
            out.append('H')
            i += 2
        else:
            out.append(word[i])
            i += 1
    return ''.join(out)


def phi(p, b):
    """phi

    Map a path of semi-length ``n-1`` with ``k`` hills and a bit sequence of
    length ``k`` to a hill-free path of semi-length ``n``.

    Args:
        p (SchroderPath, str): path with ``k`` hills.
        b (tuple[int], str): bit sequence of length ``k``.

    Returns:
        q (SchroderPath): hill-free path.

    """
    word = as_path(p).word
    b = _bits(b)
    hills = hill_positions(word)
    k = len(hills)
    if len(b) != k:
        raise LengthMismatch('bit sequence must have length {:d} (hills of {:s}), '
                             'got {:d}!'.format(k, word, len(b)))
    if 'U' not in word:
        return SchroderPath(word + 'H', check=False)
    first = word.index('U')
    last = word.rindex('D')
    core = list(word[first:last+1])
    for j, pos in enumerate(hills, 1):
        if b[j-1] == 0:
            continue
        i = pos - first
        if (j == 1 and i == 0) or (j == k and i + 2 == len(core)):
            core[i] = 'H'
            core[i+1] = ''
        else:
            core[i] = 'D'
            core[i+1] = 'U'
    lifted = word[:first] + 'U' + ''.join(core) + 'D' + word[last+1:]
    return SchroderPath(_collapse_low_hills(lifted), check=False)


def phi_inv(q):
    """phi_inv

    Inverse of :func:`phi`.

    Args:
        q (SchroderPath, str): non-empty hill-free path.

    Returns:
        (p, b) (tuple): path and bit sequence.

    """
    word = as_path(q).word
    if hill_positions(word):
        raise NotHillFree('path {:s} must not have a hill!'.format(word))
    if word == '':
        raise DomainMismatch('path must not be empty!')
    if 'U' not in word:
        return SchroderPath(word[:-1], check=False), ()
    first = word.index('U')
    last = word.rindex('D')
    inner = word[first+1:last]
    heights = step_heights(inner)
    length = len(inner)
    out = []
    bits = []
    i = 0
    while i < length:
        c = inner[i]
        if c == 'H' and heights[i] == 0 and (i == 0 or i == length - 1):
            out.append('UD')
            bits.append(1)
            i += 1
        elif c == 'U' and heights[i] == 1 and i + 1 < length and inner[i+1] == 'D':
            out.append('UD')
            bits.append(0)
            i += 2
        elif c == 'D' and heights[i] == -1:
            j = i + 1
            while inner[j] == 'H':
                j += 1
            m = j - i - 1
            out.append('UD' * (m + 1))
            bits.extend([1] * (m + 1))
            i = j + 1
        else:
            out.append(c)
            i += 1
    p = SchroderPath(word[:first] + ''.join(out) + word[last+1:])
    return p, tuple(bits)


def big_phi(p, b, k):
    """big_phi

    Map a path with ``j`` hills and a bit sequence of length ``j-k`` to a
    path with ``k`` hills. ``j = k-1`` with an empty sequence prepends a
    hill; ``j >= k`` applies :func:`phi` in front of the ``k``-th hill from
    the right. ``k = 0`` is :func:`phi`.

    Args:
        p (SchroderPath, str): path with ``j`` hills.
        b (tuple[int], str): bit sequence.
        k (int): hills of the image.

    Returns:
        q (SchroderPath): path with ``k`` hills.

    """
    word = as_path(p).word
    b = _bits(b)
    if k < 0:
        raise DomainMismatch('k must be >= 0!')
    if k == 0:
        return phi(word, b)
    hills = hill_positions(word)
    j = len(hills)
    if j == k - 1 and len(b) == 0:
        return SchroderPath('UD' + word, check=False)
    if j >= k and len(b) == j - k:
        pos = hills[j-k]
        return phi(word[:pos], b) + SchroderPath('UD' + word[pos+2:], check=False)
    raise DomainMismatch('path with {:d} hills and {:d} bits cannot be mapped to {:d} '
                         'hills!'.format(j, len(b), k))


def big_phi_inv(q):
    """big_phi_inv

    Inverse of :func:`big_phi` with ``k`` the number of hills of ``q``.

    """
    word = as_path(q).word
    if word.startswith('UD'):
        return SchroderPath(word[2:], check=False), ()
    hills = hill_positions(word)
    if not hills:
        return phi_inv(word)
    pos = hills[0]
    p1, b = phi_inv(word[:pos])
    return p1 + SchroderPath(word[pos:], check=False), b


def _little_check(word):
    heights = step_heights(word)
    if any(c == 'H' and y == 0 for c, y in zip(word, heights)):
        raise NotLittle('path {:s} must not have a horizontal at height 0!'.format(word))
    return heights


def _first_closure(word, heights):
    for i, c in enumerate(word):
        if c == 'D' and heights[i] == 0:
            return i
    return None


def has_h1_before_first_closure(q):
    """has_h1_before_first_closure

    True if a horizontal at height 1 precedes the first closure.

    """
    word = as_path(q).word
    heights = step_heights(word)
    c = _first_closure(word, heights)
    if c is None:
        return False
    return any(word[i] == 'H' and heights[i] == 1 for i in range(c))


def psi(p, t):
    """psi

    Map a little path of semi-length ``n-1`` with ``k >= 1`` hills and a
    trit sequence of length ``k`` ending in 0 or 1 to a little hill-free
    path of semi-length ``n``.

    Args:
        p (SchroderPath, str): little path with ``k`` hills.
        t (tuple[int], str): trit sequence of length ``k``.

    Returns:
        q (SchroderPath): little hill-free path.

    """
    word = as_path(p).word
    t = _trits(t)
    _little_check(word)
    hills = hill_positions(word)
    k = len(hills)
    if k == 0:
        raise ZeroHills('path {:s} must have at least one hill!'.format(word))
    if len(t) != k:
        raise LengthMismatch('trit sequence must have length {:d} (hills of {:s}), '
                             'got {:d}!'.format(k, word, len(t)))
    if t[-1] == 2:
        raise DomainMismatch('last trit must be 0 or 1!')
    pos = hills[-1]
    head = list(word[:pos])
    tail = word[pos+2:]
    for j, hill in enumerate(hills[:-1]):
        if t[j] == 1:
            head[hill] = 'H'
            head[hill+1] = ''
        elif t[j] == 2:
            head[hill] = 'D'
            head[hill+1] = 'U'
    head = ''.join(head)
    if t[-1] == 0:
        return SchroderPath('UU' + head + 'DD' + tail, check=False)
    lifted = 'UH' + head + 'D'
    if 2 in t:
        heights = step_heights(lifted)
        c = _first_closure(lifted, heights)
        q1 = lifted[2:c]
        q2 = lifted[c+2:-1]
        lifted = 'UU' + q2 + 'DH' + q1 + 'D'
    return SchroderPath(lifted + tail, check=False)


def _label_segment(segment):
    """Undo the hill modifications of a segment standing on height 0."""
    heights = step_heights(segment)
    length = len(segment)
    out = []
    trits = []
    i = 0
    while i < length:
        c = segment[i]
        if c == 'U' and heights[i] == 1 and i + 1 < length and segment[i+1] == 'D':
            out.append('UD')
            trits.append(0)
            i += 2
        elif c == 'H' and heights[i] == 0:
            out.append('UD')
            trits.append(1)
            i += 1
        elif c == 'D' and heights[i] == -1:
            out.append('UD')
            trits.append(2)
            i += 2
        else:
            out.append(c)
            i += 1
    return ''.join(out), trits


def psi_inv(q):
    """psi_inv

    Inverse of :func:`psi`. Without a horizontal at height 1 before the
    first closure the path reads ``UU p_1 DD p_2``; otherwise it is cut at
    the first such horizontal and at the first closure.

    Args:
        q (SchroderPath, str): little hill-free path of semi-length >= 2.

    Returns:
        (p, t) (tuple): little path and trit sequence.

    """
    word = as_path(q).word
    heights = _little_check(word)
    if hill_positions(word):
        raise NotHillFree('path {:s} must not have a hill!'.format(word))
    if word == '':
        raise DomainMismatch('path must not be empty!')
    c = _first_closure(word, heights)
    h1 = next((i for i in range(c) if word[i] == 'H' and heights[i] == 1), None)
    tail = word[c+1:]
    if h1 is None:
        if not word.startswith('UU') or word[c-1] != 'D':
            raise DomainMismatch('path {:s} must start with UU'.format(word))
        head, trits = _label_segment(word[2:c-1])
        trits.append(0)
    else:
        p1 = word[1:h1]
        q1 = word[h1+1:c]
        if p1 == '':
            segment = q1
        else:
            segment = q1 + 'DU' + p1[1:-1]
        head, trits = _label_segment(segment)
        trits.append(1)
    return SchroderPath(head + 'UD' + tail), tuple(trits)


def big_psi(p, t, k):
    """big_psi

    Map a little path with ``j`` hills and a trit sequence of length
    ``j-k`` to a little path with ``k`` hills, for ``j = k-1`` or ``j > k``.
    ``k = 0`` is :func:`psi`.

    """
    word = as_path(p).word
    t = _trits(t)
    if k < 0:
        raise DomainMismatch('k must be >= 0!')
    if k == 0:
        return psi(word, t)
    _little_check(word)
    hills = hill_positions(word)
    j = len(hills)
    if j == k - 1 and len(t) == 0:
        return SchroderPath('UD' + word, check=False)
    if j > k and len(t) == j - k:
        pos = hills[j-k]
        return psi(word[:pos], t) + SchroderPath('UD' + word[pos+2:], check=False)
    raise DomainMismatch('little path with {:d} hills and {:d} trits cannot be mapped to '
                         '{:d} hills!'.format(j, len(t), k))


def big_psi_inv(q):
    """big_psi_inv

    Inverse of :func:`big_psi` with ``k`` the number of hills of ``q``.

    """
    word = as_path(q).word
    _little_check(word)
    if word.startswith('UD'):
        return SchroderPath(word[2:], check=False), ()
    hills = hill_positions(word)
    if not hills:
        return psi_inv(word)
    pos = hills[0]
    p1, t = psi_inv(word[:pos])
    return p1 + SchroderPath(word[pos:], check=False), t


def _by_hills(n, cls='all'):
    groups = {}
    for word in enumerate_words(n, cls):
        groups.setdefault(len(hill_positions(word)), []).append(word)
    return groups


def _trit_sequences(length):
    if length == 0:
        return [()]
    return [head + (last,) for head in product((0, 1, 2), repeat=length - 1)
            for last in (0, 1)]


def _check_images(report, name, pairs, forward, inverse, target, pbar=None):
    images = set()
    for p, digits in pairs:
        q = forward(p, digits)
        if pbar is not None:
            pbar.update(1)
        if q.word not in target:
            report.check(name + ' lands in the target class', len(images) + 1, False,
                         '({:s}, {:s}) -> {:s}'.format(p, format_digits(digits) or '-',
                                                       q.word))
            return False
        back = inverse(q)
        if back[0].word != p or back[1] != digits:
            report.check(name + ' inverse after map', len(images) + 1, False,
                         '({:s}, {:s}) -> {:s} -> ({:s}, {:s})'.format(
                             p, format_digits(digits) or '-', q.word, back[0].word,
                             format_digits(back[1]) or '-'))
            return False
        if q.word in images:
            report.check(name + ' injective', len(images) + 1, False,
                         'image {:s} hit twice'.format(q.word))
            return False
        images.add(q.word)
    report.check(name + ' injective with inverse', len(images), True)
    report.check(name + ' surjective', len(target), images == target,
                 '{:d} images for {:d} targets'.format(len(images), len(target)))
    return images == target


def _finish(report, raise_on_failure):
    report.stop()
    if raise_on_failure and not report.ok:
        raise VerificationFailure(report)
    return report


def check_phi(n, raise_on_failure=True, pbar=None):
    """check_phi

    Exhaustively check that :func:`phi` is a bijection onto the hill-free
    paths of semi-length ``n`` with inverse :func:`phi_inv`.

    """
    report = Report('phi n={:d}'.format(n))
    source = _by_hills(n - 1)
    pairs = [(w, b) for j, words in sorted(source.items()) for w in words
             for b in product((0, 1), repeat=j)]
    target = set(enumerate_words(n, 'hill_free'))
    _check_images(report, 'phi', pairs, phi, phi_inv, target, pbar)
    return _finish(report, raise_on_failure)


def check_big_phi(n, raise_on_failure=True, pbar=None):
    """check_big_phi

    Exhaustively check :func:`big_phi` onto the paths of semi-length ``n``
    with ``k`` hills for every ``k``.

    """
    report = Report('Phi n={:d}'.format(n))
    source = _by_hills(n - 1)
    target = _by_hills(n)
    for k in range(0, n + 1):
        pairs = []
        for j, words in sorted(source.items()):
            if j == k - 1:
                pairs += [(w, ()) for w in words]
            elif j >= k:
                pairs += [(w, b) for w in words for b in product((0, 1), repeat=j - k)]
        ok = _check_images(report, 'Phi k={:d}'.format(k), pairs,
                           lambda p, b, k=k: big_phi(p, b, k), big_phi_inv,
                           set(target.get(k, [])), pbar)
        case_one = all(big_phi(w, (), k).word.startswith('UD')
                       for w in source.get(k - 1, [])) if k >= 1 else True
        report.check('Phi k={:d} prepends a hill for j = k-1'.format(k),
                     len(source.get(k - 1, [])) if k >= 1 else 0, case_one)
        if not ok:
            break
    return _finish(report, raise_on_failure)


def check_psi(n, raise_on_failure=True, pbar=None):
    """check_psi

    Exhaustively check that :func:`psi` is a bijection onto the little
    hill-free paths of semi-length ``n`` and that the image has a
    horizontal at height 1 before its first closure exactly if the last
    trit is 1.

    """
    report = Report('psi n={:d}'.format(n))
    source = _by_hills(n - 1, 'little')
    pairs = [(w, t) for j, words in sorted(source.items()) if j >= 1 for w in words
             for t in _trit_sequences(j)]
    target = set(enumerate_words(n, 'little_hill_free'))
    _check_images(report, 'psi', pairs, psi, psi_inv, target, pbar)
    branch = [(w, t) for w, t in pairs
              if has_h1_before_first_closure(psi(w, t)) != (t[-1] == 1)]
    report.check('psi branch key', len(pairs), not branch,
                 '' if not branch else '({:s}, {:s})'.format(branch[0][0],
                                                             format_digits(branch[0][1])))
    return _finish(report, raise_on_failure)


def check_big_psi(n, raise_on_failure=True, pbar=None):
    """check_big_psi

    Exhaustively check :func:`big_psi` onto the little paths of semi-length
    ``n`` with ``k`` hills for every ``k``.

    """
    report = Report('Psi n={:d}'.format(n))
    source = _by_hills(n - 1, 'little')
    target = _by_hills(n, 'little')
    for k in range(0, n + 1):
        pairs = []
        for j, words in sorted(source.items()):
            if j == k - 1:
                pairs += [(w, ()) for w in words]
            elif j > k:
                pairs += [(w, t) for w in words for t in _trit_sequences(j - k)]
        ok = _check_images(report, 'Psi k={:d}'.format(k), pairs,
                           lambda p, t, k=k: big_psi(p, t, k), big_psi_inv,
                           set(target.get(k, [])), pbar)
        if not ok:
            break
    return _finish(report, raise_on_failure)


def check_hill_recurrences(n_max, raise_on_failure=True):
    """check_hill_recurrences

    Check ``r(n,0) = sum_j 2^j r(n-1,j)`` and
    ``r(n,k) = r(n-1,k-1) + sum_{j>=k} 2^(j-k) r(n-1,j)`` on the hill
    triangle up to ``n_max``.

    """
    r = hill_triangle(n_max)
    report = Report('hill recurrences')
    bad = None
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            if k == 0:
                value = sum(2**j * r[n-1, j] for j in range(n))
            else:
                value = r[n-1, k-1] + sum(2**(j-k) * r[n-1, j] for j in range(k, n))
            if value != r[n, k] and bad is None:
                bad = 'r({:d},{:d}) = {:d}, recurrence gives {:d}'.format(n, k, r[n, k], value)
    report.check('hill recurrences', (n_max + 1)*(n_max + 2)//2 - 1, bad is None, bad or '')
    return _finish(report, raise_on_failure)


def check_little_recurrences(n_max, raise_on_failure=True):
    """check_little_recurrences

    Check ``s(n,0) = sum_{j>=1} 2 3^(j-1) s(n-1,j)`` and
    ``s(n,k) = s(n-1,k-1) + sum_{j>=k+1} 2 3^(j-k-1) s(n-1,j)``.

    """
    s = hill_triangle(n_max, 'little')
    report = Report('little hill recurrences')
    bad = None
    for n in range(1, n_max + 1):
        for k in range(n + 1):
            if k == 0:
                value = sum(2 * 3**(j-1) * s[n-1, j] for j in range(1, n))
            else:
                value = s[n-1, k-1] + sum(2 * 3**(j-k-1) * s[n-1, j]
                                          for j in range(k + 1, n))
            if value != s[n, k] and bad is None:
                bad = 's({:d},{:d}) = {:d}, recurrence gives {:d}'.format(n, k, s[n, k], value)
    report.check('little hill recurrences', (n_max + 1)*(n_max + 2)//2 - 1, bad is None,
                 bad or '')
    return _finish(report, raise_on_failure)
