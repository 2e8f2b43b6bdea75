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

__all__ = ['Permutation', 'StatRecord', 'parse_permutation', 'contains_separability_pattern',
           'separable_by_blocks', 'is_separable', 'iar', 'comp', 'comp_by_factorisation',
           'descent_set', 'stat_record', 'enumerate_permutations', 'enumerate_separable',
           'iar_triangle', 'check_iar_triangle', 'comp_vs_iar', 'comp_vs_paths',
           'descent_sets_vs_trees']

__docformat__ = 'restructuredtext'

from .paths import enumerate_words, stats, hill_triangle
from .triangles import RiordanTriangle
from .trees import enumerate_trees, minus_positions
from ..errors import PermutationError, VerificationFailure
from ..helpers import histogram, format_histogram, compare_histograms
from ..report import Report
from collections import Counter
from itertools import combinations, permutations
from tabulate import tabulate


class Permutation:
    """Permutation

    Permutation of ``1..n`` in one-line notation, ``n >= 1``.

    Args:
        values (list[int]): one-line notation.

    Attributes:
        values (tuple[int]): one-line notation.

    """

    __slots__ = ('_values',)

    def __init__(self, values):
        try:
            values = tuple(int(v) for v in values)
        except (TypeError, ValueError):
            raise TypeError('permutation values must be integers!')
        if len(values) == 0:
            raise PermutationError('permutation must have at least one element!')
        if sorted(values) != list(range(1, len(values) + 1)):
            raise PermutationError('permutation must contain each of 1..{:d} exactly '
                                   'once!'.format(len(values)))
        self._values = values

    def __str__(self):
        if len(self._values) <= 9:
            return ''.join(str(v) for v in self._values)
        return ','.join(str(v) for v in self._values)

    def __repr__(self):
        return 'Permutation({:s})'.format(str(self))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._values == other._values

    def __hash__(self):
        return hash(self._values)

    def __len__(self):
        return len(self._values)

    def __iter__(self):
        return iter(self._values)

    def __getitem__(self, i):
        return self._values[i]

    @property
    def values(self):
        return self._values


class StatRecord:
    """StatRecord

    Statistics of a permutation.

    Attributes:
        iar (int): length of the longest increasing prefix.
        comp (int): number of components.
        des_set (frozenset[int]): descent positions.
        separable (boolean): True if 2413 and 3142 are avoided.

    """

    def __init__(self, iar, comp, des_set, separable):
        self.iar = iar
        self.comp = comp
        self.des_set = frozenset(des_set)
        self.separable = separable

    def __str__(self):
        """String representation of this class"""
        output = [['iar', self.iar],
                  ['comp', self.comp],
                  ['DES', sorted(self.des_set)],
                  ['separable', self.separable]]
        return tabulate(output, headers=['statistic', 'value'], tablefmt='rst')

    def __eq__(self, other):
        if not isinstance(other, StatRecord):
            return NotImplemented
        return (self.iar, self.comp, self.des_set, self.separable) == \
            (other.iar, other.comp, other.des_set, other.separable)


def _as_permutation(pi):
    if isinstance(pi, Permutation):
        return pi
    if isinstance(pi, str):
        return parse_permutation(pi)
    return Permutation(pi)


def parse_permutation(text):
    """parse_permutation

    Parse ``2413`` (digits, ``n <= 9``) or ``1,10,2,...`` (comma separated).

    """
    if not isinstance(text, str):
        raise TypeError('permutation text must be a str!')
    text = text.strip()
    if ',' in text:
        parts = text.split(',')
    else:
        parts = list(text)
    if not all(p.strip().isdigit() for p in parts):
        raise PermutationError('permutation text must only contain digits and commas!')
    return Permutation(int(p) for p in parts)


def _is_bad_quadruple(a, b, c, d):
    return (c < a < d < b) or (b < d < a < c)


def contains_separability_pattern(pi):
    """contains_separability_pattern

    Scan all quadruples for the patterns 2413 and 3142.

    """
    values = _as_permutation(pi).values
    return any(_is_bad_quadruple(*values_q) for values_q in combinations(values, 4))


def _blocks(values):
    n = len(values)
    if n <= 1:
        return True
    for i in range(1, n):
        head, tail = values[:i], values[i:]
        if max(head) < min(tail) or min(head) > max(tail):
            return _blocks(head) and _blocks(tail)
    return False


def separable_by_blocks(pi):
    """separable_by_blocks

    A permutation is separable if it has one element or splits as a direct
    or skew sum of two separable blocks.

    """
    return _blocks(_as_permutation(pi).values)


def is_separable(pi, method='both'):
    """is_separable

    Args:
        pi (Permutation, str, list[int]): permutation.
        method (str, optional): ``patterns``, ``blocks`` or ``both``; the
            latter runs both tests and requires them to agree.

    Returns:
        separable (boolean): True if 2413 and 3142 are avoided.

    """
    if method == 'patterns':
        return not contains_separability_pattern(pi)
    elif method == 'blocks':
        return separable_by_blocks(pi)
    elif method == 'both':
        by_patterns = not contains_separability_pattern(pi)
        if by_patterns != separable_by_blocks(pi):
            raise RuntimeError('separability tests disagree on {:s}!'.format(
                str(_as_permutation(pi))))
        return by_patterns
    raise ValueError('method must be patterns, blocks or both!')


def descent_set(pi):
    values = _as_permutation(pi).values
    return frozenset(i for i in range(1, len(values)) if values[i-1] > values[i])


def iar(pi):
    """iar

    Length of the longest increasing prefix.

    """
    values = _as_permutation(pi).values
    i = 1
    while i < len(values) and values[i-1] < values[i]:
        i += 1
    return i


def comp(pi):
    """comp

    Number of prefixes ``pi_1..pi_i`` whose values are ``1..i``.

    """
    count = 0
    high = 0
    for i, v in enumerate(_as_permutation(pi).values, 1):
        high = max(high, v)
        if high == i:
            count += 1
    return count


def comp_by_factorisation(pi):
    """comp_by_factorisation

    Number of ways to write ``pi`` as a non-empty prefix followed by a
    possibly empty suffix with every prefix letter smaller than every
    suffix letter.

    """
    values = _as_permutation(pi).values
    n = len(values)
    return sum(1 for i in range(1, n + 1)
               if i == n or max(values[:i]) < min(values[i:]))


def stat_record(pi):
    """stat_record

    Collect iar, comp, the descent set and separability. iar is computed
    from the increasing prefix and from the smallest descent, which must
    agree.

    """
    pi = _as_permutation(pi)
    des = descent_set(pi)
    value = iar(pi)
    if value != (min(des) if des else len(pi)):
        raise RuntimeError('iar computations disagree on {:s}!'.format(str(pi)))
    return StatRecord(value, comp(pi), des, is_separable(pi))


def enumerate_permutations(n):
    if n < 1:
        raise PermutationError('permutation size must be >= 1!')
    for values in permutations(range(1, n + 1)):
        yield Permutation(values)


def enumerate_separable(n):
    """enumerate_separable

    All separable permutations of size ``n`` in lexicographic order. A
    prefix is dropped as soon as it contains 2413 or 3142.

    """
    if n < 1:
        raise PermutationError('permutation size must be >= 1!')
    prefix = []

    def extend(remaining):
        if not remaining:
            yield Permutation(prefix)
            return
        for v in sorted(remaining):
            if any(_is_bad_quadruple(a, b, c, v) for a, b, c in combinations(prefix, 3)):
                continue
            prefix.append(v)
            yield from extend(remaining - {v})
            prefix.pop()

    return extend(frozenset(range(1, n + 1)))


def check_iar_triangle(tri, raise_on_failure=True):
    """check_iar_triangle

    Check the iar recurrences and ``p(n,k) = r(n-1,k-1)``. Entry
    ``(n-1, k-1)`` of ``tri`` holds ``p(n,k)``.

    """
    n_max = tri.n_rows
    r = hill_triangle(max(n_max - 1, 0))
    report = Report('iar triangle')

    def p(n, k):
        return tri[n-1, k-1]

    bad = None
    for n in range(2, n_max + 1):
        for k in range(1, n + 1):
            if k == 1:
                value = sum(2**(j-1) * p(n-1, j) for j in range(1, n))
            else:
                value = p(n-1, k-1) + sum(2**(j-k) * p(n-1, j) for j in range(k, n))
            if value != p(n, k) and bad is None:
                bad = 'p({:d},{:d}) = {:d}, recurrence gives {:d}'.format(n, k, p(n, k), value)
    report.check('iar recurrences', n_max*(n_max + 1)//2, bad is None, bad or '')
    bad = None
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            if p(n, k) != r[n-1, k-1] and bad is None:
                bad = 'p({:d},{:d}) = {:d}, r({:d},{:d}) = {:d}'.format(
                    n, k, p(n, k), n - 1, k - 1, r[n-1, k-1])
    report.check('p(n,k) = r(n-1,k-1)', n_max*(n_max + 1)//2, bad is None, bad or '')
    report.stop()
    if raise_on_failure and not report.ok:
        raise VerificationFailure(report)
    return report


def iar_triangle(n_max, **kwargs):
    """iar_triangle

    Number ``p(n,k)`` of separable permutations of size ``n`` with
    ``iar = k``, stored at entry ``(n-1, k-1)``.

    Args:
        n_max (int): largest permutation size, >= 1.

    Keyword Args:
        check (boolean): verify the recurrences and the identity with the
            hill triangle, raising :class:`VerificationFailure`; defaults
            to True.

    Returns:
        triangle (RiordanTriangle): rows ``n = 1..n_max``.

    """
    if n_max < 1:
        raise PermutationError('n_max must be >= 1!')
    rows = []
    for n in range(1, n_max + 1):
        row = [0]*n
        for pi in enumerate_separable(n):
            row[iar(pi) - 1] += 1
        rows.append(row)
    tri = RiordanTriangle(rows, kind='iar')
    if kwargs.get('check', True):
        check_iar_triangle(tri)
    return tri


def comp_vs_iar(n, separable_only=True, raise_on_failure=True):
    """comp_vs_iar

    Compare the distributions of comp and iar over the separable (or all)
    permutations of size ``n``.

    """
    source = enumerate_separable(n) if separable_only else enumerate_permutations(n)
    by_iar = Counter()
    by_comp = Counter()
    count = 0
    for pi in source:
        by_iar[iar(pi)] += 1
        by_comp[comp(pi)] += 1
        count += 1
    report = Report('comp vs iar n={:d}{:s}'.format(n, '' if separable_only else ' (all)'))
    hist_iar = histogram(by_iar.elements())
    hist_comp = histogram(by_comp.elements())
    diff = compare_histograms(hist_comp, hist_iar)
    detail = 'comp {:s}, iar {:s}'.format(format_histogram(hist_comp), format_histogram(hist_iar))
    if diff is not None:
        detail = 'bin {:d}: comp {:d}, iar {:d}; '.format(*diff) + detail
    report.check('comp and iar equidistributed', count, diff is None, detail)
    report.stop()
    if raise_on_failure and not report.ok:
        raise VerificationFailure(report)
    return report


def comp_vs_paths(n, raise_on_failure=True):
    """comp_vs_paths

    Compare comp over separable permutations of size ``n+1`` with
    ``1 + h0`` over all Schröder paths of semi-length ``n``.

    """
    hist_comp = histogram(comp(pi) for pi in enumerate_separable(n + 1))
    hist_paths = histogram(1 + stats(w).h0 for w in enumerate_words(n))
    diff = compare_histograms(hist_comp, hist_paths)
    report = Report('comp vs 1 + h0 n={:d}'.format(n))
    detail = 'comp {:s}, 1 + h0 {:s}'.format(format_histogram(hist_comp),
                                             format_histogram(hist_paths))
    if diff is not None:
        detail = 'bin {:d}: comp {:d}, 1 + h0 {:d}; '.format(*diff) + detail
    report.check('comp and 1 + h0 equidistributed', sum(hist_comp.values()), diff is None,
                 detail)
    report.stop()
    if raise_on_failure and not report.ok:
        raise VerificationFailure(report)
    return report


def descent_sets_vs_trees(n, raise_on_failure=True):
    """descent_sets_vs_trees

    Compare the multiset of descent sets of separable permutations of size
    ``n`` with the multiset of ``-`` position sets of trees with ``n - 1``
    nodes.

    """
    perms = Counter(descent_set(pi) for pi in enumerate_separable(n))
    trees = Counter(minus_positions(t) for t in enumerate_trees(n))
    report = Report('descent sets n={:d}'.format(n))
    diff = None
    for key in sorted(set(perms) | set(trees), key=lambda s: (len(s), sorted(s))):
        if perms[key] != trees[key]:
            diff = 'set {}: {:d} permutations, {:d} trees'.format(sorted(key), perms[key],
                                                                  trees[key])
            break
    report.check('descent sets and - positions', sum(perms.values()), diff is None,
                 diff or '{:d} distinct sets'.format(len(perms)))
    report.stop()
    if raise_on_failure and not report.ok:
        raise VerificationFailure(report)
    return report
