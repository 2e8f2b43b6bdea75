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

__all__ = ['SchroderPath', 'PathStats', 'FeatureList', 'PATH_CLASSES',
           'parse_path', 'render_path', 'as_path', 'step_heights', 'hill_positions',
           'stats', 'find_features', 'enumerate_words', 'enumerate_paths',
           'hill_triangle', 'decompose_at_hills', 'schroder_sequence',
           'check_three_term', 'swap_h0_hills', 'little_to_hill_free',
           'hill_free_to_little', 'check_swap_map']

__docformat__ = 'restructuredtext'

from .triangles import RiordanTriangle
from ..errors import (IllegalCharacter, NegativeHeight, NonzeroEnd, NotHillFree,
                      NotLittle, VerificationFailure)
from ..report import Report
from tabulate import tabulate

PATH_CLASSES = ('all', 'little', 'hill_free', 'little_hill_free')

_STEP_ORDER = {'U': 0, 'D': 1, 'H': 2}
_STEP_WIDTH = {'U': 1, 'D': 1, 'H': 2}


def step_heights(word):
    """step_heights

    Height of every step, measured at the step's end point. The word is not
    validated, so a standalone sub-word may dip below zero.

    Args:
        word (str): word over U, D and H.

    Returns:
        heights (list[int]): end height of every step.

    """
    heights = []
    y = 0
    for c in word:
        if c == 'U':
            y += 1
        elif c == 'D':
            y -= 1
        heights.append(y)
    return heights


def hill_positions(word, base=0):
    """hill_positions

    Indices of the U of every peak ``UD`` whose U ends at height
    ``base + 1``.

    Args:
        word (str): word over U, D and H.
        base (int, optional): height the hills stand on.

    Returns:
        positions (list[int]): indices of the hill U steps.

    """
    heights = step_heights(word)
    return [i for i in range(len(word) - 1)
            if word[i] == 'U' and word[i+1] == 'D' and heights[i] == base + 1]


def _validate(word):
    y = 0
    for i, c in enumerate(word):
        if c == 'U':
            y += 1
        elif c == 'D':
            y -= 1
        elif c != 'H':
            raise IllegalCharacter('path word must only contain U, D and H, '
                                   'found {!r} at step {:d}!'.format(c, i))
        if y < 0:
            raise NegativeHeight('path must not go below the x-axis, '
                                 'height {:d} at step {:d}!'.format(y, i))
    if y != 0:
        raise NonzeroEnd('path must end at height 0, ends at {:d}!'.format(y))


class SchroderPath:
    """SchroderPath

    Immutable Schröder path given as a word over ``U`` (up), ``D`` (down)
    and ``H`` (horizontal of width two). The path never goes below the
    x-axis and ends on it.

    Args:
        steps (str): word of the path, the empty word is the empty path.

    Keyword Args:
        check (boolean): validate the word, defaults to True.

    Attributes:
        word (str): word of the path.
        semi_length (int): half of the path length.

    """

    __slots__ = ('_word', '_stats')

    def __init__(self, steps='', **kwargs):
        if not isinstance(steps, str):
            try:
                steps = ''.join(steps)
            except TypeError:
                raise TypeError('steps must be a string or a sequence of step letters!')
        if kwargs.get('check', True):
            _validate(steps)
        self._word = steps
        self._stats = None

    def __str__(self):
        return self._word

    def __repr__(self):
        return 'SchroderPath({!r})'.format(self._word)

    def __eq__(self, other):
        if isinstance(other, SchroderPath):
            return self._word == other._word
        return NotImplemented

    def __lt__(self, other):
        if not isinstance(other, SchroderPath):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self._word)

    def __len__(self):
        return len(self._word)

    def __add__(self, other):
        if not isinstance(other, SchroderPath):
            return NotImplemented
        return SchroderPath(self._word + other._word, check=False)

    def sort_key(self):
        return tuple(_STEP_ORDER[c] for c in self._word)

    @property
    def word(self):
        return self._word

    @property
    def semi_length(self):
        return sum(_STEP_WIDTH[c] for c in self._word) // 2

    @property
    def stats(self):
        if self._stats is None:
            self._stats = stats(self)
        return self._stats

    @property
    def hills(self):
        return self.stats.hills

    @property
    def is_little(self):
        return self.stats.is_little

    @property
    def is_hill_free(self):
        return self.stats.hills == 0

    def heights(self):
        return step_heights(self._word)

    def ascii_diagram(self):
        """ascii_diagram

        Draw the path with ``/``, ``\\`` and ``_`` characters, highest row
        first. A horizontal step takes two columns.

        Returns:
            diagram (str): multi-line drawing of the path.

        """
        heights = self.heights()
        n_rows = max([0] + heights) + 1
        width = sum(_STEP_WIDTH[c] for c in self._word)
        grid = [[' '] * width for _ in range(n_rows)]
        x = 0
        y = 0
        for c, h in zip(self._word, heights):
            if c == 'U':
                grid[y][x] = '/'
            elif c == 'D':
                grid[h][x] = '\\'
            else:
                grid[y][x] = '_'
                grid[y][x+1] = '_'
            x += _STEP_WIDTH[c]
            y = h
        lines = [''.join(row).rstrip() for row in reversed(grid)]
        while len(lines) > 1 and lines[0] == '':
            lines.pop(0)
        return '\n'.join(lines)


class PathStats:
    """PathStats

    Statistics of a single Schröder path.

    Attributes:
        hills (int): number of peaks at height 1.
        h0 (int): number of horizontals at height 0.
        h (int): number of horizontals at positive height.
        peaks (int): number of peaks ``UD``.
        semi_length (int): half of the path length.
        is_little (boolean): True if there is no horizontal at height 0.

    """

    __slots__ = ('hills', 'h0', 'h', 'peaks', 'semi_length')

    def __init__(self, hills, h0, h, peaks, semi_length):
        self.hills = hills
        self.h0 = h0
        self.h = h
        self.peaks = peaks
        self.semi_length = semi_length

    def __str__(self):
        """String representation of this class"""
        output = [['hills', self.hills],
                  ['h0', self.h0],
                  ['h', self.h],
                  ['peaks', self.peaks],
                  ['semi length', self.semi_length],
                  ['little', self.is_little]]
        return tabulate(output, headers=['statistic', 'value'], tablefmt='rst')

    def __repr__(self):
        return 'PathStats(hills={:d}, h0={:d}, h={:d}, peaks={:d}, semi_length={:d})'.format(
            self.hills, self.h0, self.h, self.peaks, self.semi_length)

    def __eq__(self, other):
        if not isinstance(other, PathStats):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    @property
    def is_little(self):
        return self.h0 == 0

    def to_dict(self):
        return {'hills': self.hills, 'h0': self.h0, 'h': self.h, 'peaks': self.peaks,
                'semi_length': self.semi_length, 'is_little': self.is_little}


class FeatureList:
    """FeatureList

    Location of the features of a path word by step index.

    Attributes:
        hills (list[int]): index of the U of every hill.
        basins (list[tuple]): ``(start, m, height)`` of every maximal
            m-basin ``D H^m U``; ``start`` is the index of the D and
            ``height`` the height of its horizontals.
        valleys (list[int]): start of every 0-basin ``DU``.
        closures (list[int]): index of every D ending at height 0.
        horizontals (list[tuple]): ``(index, height)`` of every H.

    """

    def __init__(self, hills, basins, valleys, closures, horizontals):
        self.hills = hills
        self.basins = basins
        self.valleys = valleys
        self.closures = closures
        self.horizontals = horizontals

    def __str__(self):
        """String representation of this class"""
        output = [['hills', self.hills],
                  ['basins', self.basins],
                  ['valleys', self.valleys],
                  ['closures', self.closures],
                  ['horizontals', self.horizontals]]
        return tabulate(output, headers=['feature', 'positions'], tablefmt='rst')

    def basins_at(self, height):
        return [b for b in self.basins if b[2] == height]

    def horizontals_at(self, height):
        return [i for i, y in self.horizontals if y == height]


def _word_features(word, base=0):
    heights = step_heights(word)
    hills = []
    basins = []
    valleys = []
    closures = []
    horizontals = []
    length = len(word)
    for i, c in enumerate(word):
        y = heights[i]
        if c == 'U':
            if y == base + 1 and i + 1 < length and word[i+1] == 'D':
                hills.append(i)
        elif c == 'H':
            horizontals.append((i, y))
        else:
            if y == base:
                closures.append(i)
            j = i + 1
            while j < length and word[j] == 'H':
                j += 1
            if j < length and word[j] == 'U':
                basins.append((i, j - i - 1, y))
                if j == i + 1:
                    valleys.append(i)
    return FeatureList(hills, basins, valleys, closures, horizontals)


def as_path(p):
    """as_path

    Accept a :class:`SchroderPath` or a word.

    Args:
        p (SchroderPath, str): path or path word.

    Returns:
        path (SchroderPath): the path.

    """
    if isinstance(p, SchroderPath):
        return p
    if isinstance(p, str):
        return SchroderPath(p)
    raise TypeError('path must be a SchroderPath or a str!')


def parse_path(word):
    if not isinstance(word, str):
        raise TypeError('path word must be a str!')
    return SchroderPath(word.strip())


def render_path(p):
    return as_path(p).word


def stats(p):
    """stats

    Count hills, horizontals at height 0 and above and peaks.

    Args:
        p (SchroderPath, str): path.

    Returns:
        stats (PathStats): statistics of the path.

    """
    word = p.word if isinstance(p, SchroderPath) else as_path(p).word
    heights = step_heights(word)
    hills = h0 = h = peaks = 0
    for i, c in enumerate(word):
        if c == 'H':
            if heights[i] == 0:
                h0 += 1
            else:
                h += 1
        elif c == 'U' and i + 1 < len(word) and word[i+1] == 'D':
            peaks += 1
            if heights[i] == 1:
                hills += 1
    semi_length = sum(_STEP_WIDTH[c] for c in word) // 2
    return PathStats(hills, h0, h, peaks, semi_length)


def find_features(p):
    """find_features

    Locate hills, maximal basins, valleys, closures and horizontals.

    Args:
        p (SchroderPath, str): path.

    Returns:
        features (FeatureList): located features.

    """
    return _word_features(as_path(p).word)


def _class_flags(cls, allowed=PATH_CLASSES):
    if cls not in allowed:
        raise ValueError('path class must be one of {:s}!'.format(', '.join(allowed)))
    return cls in ('little', 'little_hill_free'), cls in ('hill_free', 'little_hill_free')


def enumerate_words(n, cls='all'):
    """enumerate_words

    Generate the words of all paths of semi-length ``n`` in a class,
    lexicographically with ``U < D < H``.

    Args:
        n (int): semi-length.
        cls (str, optional): one of ``all``, ``little``, ``hill_free`` and
            ``little_hill_free``.

    Returns:
        words (generator[str]): path words.

    """
    if n < 0:
        raise ValueError('semi-length must be >= 0!')
    little, hill_free = _class_flags(cls)
    total = 2*n
    buf = []

    def extend(x, y, after_first_up):
        if x == total:
            yield ''.join(buf)
            return
        rest = total - x
        if y + 1 <= rest - 1:
            buf.append('U')
            yield from extend(x + 1, y + 1, y == 0)
            buf.pop()
        if y >= 1 and not (hill_free and after_first_up):
            buf.append('D')
            yield from extend(x + 1, y - 1, False)
            buf.pop()
        if y <= rest - 2 and not (little and y == 0):
            buf.append('H')
            yield from extend(x + 2, y, False)
            buf.pop()

    return extend(0, 0, False)


def enumerate_paths(n, cls='all'):
    """enumerate_paths

    Generate all paths of semi-length ``n`` in a class, each exactly once,
    lexicographically with ``U < D < H``.

    Args:
        n (int): semi-length.
        cls (str, optional): one of ``all``, ``little``, ``hill_free`` and
            ``little_hill_free``.

    Returns:
        paths (generator[SchroderPath]): paths.

    """
    for word in enumerate_words(n, cls):
        yield SchroderPath(word, check=False)


def _add_counts(target, key, counts, shift):
    bucket = target.setdefault(key, {})
    for k, c in counts.items():
        bucket[k + shift] = bucket.get(k + shift, 0) + c


def _hill_triangle_dp(n_max, little):
    size = 2*n_max
    # state: (height, last step was U from 0 to 1) -> {hills: count}
    layers = [dict() for _ in range(size + 1)]
    layers[0][(0, False)] = {0: 1}
    rows = [[1]]
    for x in range(size + 1):
        if x > 0 and x % 2 == 0:
            row = [0]*(x//2 + 1)
            for k, c in layers[x].get((0, False), {}).items():
                row[k] += c
            rows.append(row)
        rest = size - x
        for (y, after_first_up), counts in layers[x].items():
            if y + 1 <= rest - 1:
                _add_counts(layers[x+1], (y + 1, y == 0), counts, 0)
            if y >= 1:
                _add_counts(layers[x+1], (y - 1, False), counts, 1 if after_first_up else 0)
            if y <= rest - 2 and not (little and y == 0):
                _add_counts(layers[x+2], (y, False), counts, 0)
        layers[x] = None
    return rows


def hill_triangle(n_max, cls='all', **kwargs):
    """hill_triangle

    Number of paths of semi-length ``n`` with ``k`` hills for all
    ``0 <= k <= n <= n_max``.

    Args:
        n_max (int): last row.
        cls (str, optional): ``all`` or ``little``.

    Keyword Args:
        method (str): ``dp`` walks the height profile once for all rows,
            ``enumerate`` counts the enumerated paths.

    Returns:
        triangle (RiordanTriangle): integer triangle.

    """
    if n_max < 0:
        raise ValueError('n_max must be >= 0!')
    little, _ = _class_flags(cls, ('all', 'little'))
    kind = 'littlehills' if little else 'hills'
    method = kwargs.get('method', 'dp')
    if method == 'dp':
        return RiordanTriangle(_hill_triangle_dp(n_max, little), kind=kind)
    elif method == 'enumerate':
        rows = []
        for n in range(n_max + 1):
            row = [0]*(n + 1)
            for p in enumerate_paths(n, cls):
                row[p.hills] += 1
            rows.append(row)
        return RiordanTriangle(rows, kind=kind)
    raise ValueError('method must be either dp or enumerate!')


def decompose_at_hills(p):
    """decompose_at_hills

    Split ``p = p_1 UD p_2 ... p_k UD p_{k+1}`` at its ``k`` hills.

    Args:
        p (SchroderPath, str): path.

    Returns:
        components (list[SchroderPath]): the ``k+1`` hill-free components.

    """
    word = as_path(p).word
    components = []
    start = 0
    for i in hill_positions(word):
        components.append(SchroderPath(word[start:i], check=False))
        start = i + 2
    components.append(SchroderPath(word[start:], check=False))
    return components


def schroder_sequence(n_max, cls='all'):
    """schroder_sequence

    Large (``all``) or little (``little``) Schröder numbers up to ``n_max``
    as row sums of the hill triangle.

    """
    return hill_triangle(n_max, cls).row_sums()


def check_three_term(n_max, raise_on_failure=True):
    """check_three_term

    Check ``3(2n+1) r(n) = (n+2) r(n+1) + (n-1) r(n-1)`` for
    ``1 <= n <= n_max - 1``.

    Args:
        n_max (int): last index of the Schröder numbers used.
        raise_on_failure (boolean, optional): raise
            :class:`VerificationFailure` on the first offending ``n``.

    Returns:
        report (Report): verification report.

    """
    if n_max < 1:
        raise ValueError('n_max must be >= 1!')
    r = schroder_sequence(n_max)
    report = Report('three-term recurrence')
    for n in range(1, n_max):
        left = 3*(2*n + 1)*r[n]
        right = (n + 2)*r[n+1] + (n - 1)*r[n-1]
        if left != right:
            report.check('three-term recurrence', n, False,
                         'n = {:d}: {:d} != {:d}'.format(n, left, right))
            break
    else:
        report.check('three-term recurrence', max(n_max - 1, 0), True)
    report.stop()
    if raise_on_failure and not report.ok:
        raise VerificationFailure(report)
    return report


def swap_h0_hills(p):
    """swap_h0_hills

    Replace every horizontal at height 0 by a hill ``UD`` and every hill by
    a horizontal. The map is an involution exchanging ``h0`` and ``hills``.

    Args:
        p (SchroderPath, str): path.

    Returns:
        q (SchroderPath): swapped path.

    """
    word = as_path(p).word
    out = []
    y = 0
    i = 0
    while i < len(word):
        c = word[i]
        if y == 0 and c == 'H':
            out.append('UD')
            i += 1
        elif y == 0 and c == 'U' and i + 1 < len(word) and word[i+1] == 'D':
            out.append('H')
            i += 2
        else:
            out.append(c)
            y += 1 if c == 'U' else -1 if c == 'D' else 0
            i += 1
    return SchroderPath(''.join(out), check=False)


def little_to_hill_free(p):
    p = as_path(p)
    if not p.is_little:
        raise NotLittle('path {:s} must not have a horizontal at height 0!'.format(p.word))
    return swap_h0_hills(p)


def hill_free_to_little(p):
    p = as_path(p)
    if not p.is_hill_free:
        raise NotHillFree('path {:s} must not have a hill!'.format(p.word))
    return swap_h0_hills(p)


def check_swap_map(n, raise_on_failure=True):
    """check_swap_map

    Check that :func:`little_to_hill_free` maps the little paths of
    semi-length ``n`` bijectively onto the hill-free ones, with
    :func:`hill_free_to_little` as inverse.

    """
    report = Report('swap map n={:d}'.format(n))
    little = list(enumerate_words(n, 'little'))
    target = set(enumerate_words(n, 'hill_free'))
    images = set()
    failure = None
    for word in little:
        q = little_to_hill_free(word)
        if failure is None and q.word not in target:
            failure = '{:s} -> {:s} has a hill'.format(word, q.word)
        if failure is None and hill_free_to_little(q).word != word:
            failure = '{:s} -> {:s} -> {:s}'.format(word, q.word, hill_free_to_little(q).word)
        images.add(q.word)
    report.check('swap map inverse after map', len(little), failure is None, failure or '')
    report.check('swap map bijective', len(target), images == target,
                 '{:d} little, {:d} hill-free'.format(len(little), len(target)))
    report.stop()
    if raise_on_failure and not report.ok:
        raise VerificationFailure(report)
    return report
