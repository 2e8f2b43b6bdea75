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

__all__ = ['AZSequences', 'az_from_uv', 'az_hills', 'az_little_hills', 'triangle_from_az',
           'uv_triangle', 'weighted_oracle', 'weighted_oracle_triangle', 'specialize',
           'row_sums', 'specialization_suite', 'check_pascal']

__docformat__ = 'restructuredtext'

from .paths import enumerate_words, stats
from .polynomials import BivarPoly
from .triangles import RiordanTriangle
from ..errors import InsufficientSequenceLength, VerificationFailure
from ..helpers import load_specializations
from ..report import Report
from collections import Counter
from scipy.special import comb
from tabulate import tabulate


class AZSequences:
    """AZSequences

    Truncated A- and Z-sequences of a Riordan array of Bell type. ``z``
    feeds column 0 and ``a`` feeds the columns ``k >= 1``.

    Args:
        z (list): Z-sequence ``(Z_0, Z_1, ...)``.
        a (list): A-sequence ``(A_0, A_1, ...)``.

    Keyword Args:
        name (str): name of the sequences.

    Attributes:
        z (tuple): Z-sequence.
        a (tuple): A-sequence.
        name (str): name of the sequences.

    """

    def __init__(self, z, a, **kwargs):
        self.z = tuple(z)
        self.a = tuple(a)
        self.name = kwargs.get('name', '')

    def __str__(self):
        """String representation of this class"""
        output = [[j, str(self.z[j]) if j < len(self.z) else '',
                   str(self.a[j]) if j < len(self.a) else '']
                  for j in range(max(len(self.z), len(self.a)))]
        return 'A/Z-sequences {:s}:\n\n'.format(self.name) \
            + tabulate(output, headers=['j', 'Z_j', 'A_j'], tablefmt='rst')

    def __eq__(self, other):
        if not isinstance(other, AZSequences):
            return NotImplemented
        return self.z == other.z and self.a == other.a

    @property
    def length(self):
        return min(len(self.z), len(self.a))

    def specialize(self, u0, v0):
        """specialize

        Evaluate polynomial entries at ``(u0, v0)``.

        """
        def ev(e):
            return e.eval(u0, v0) if isinstance(e, BivarPoly) else int(e)
        return AZSequences([ev(e) for e in self.z], [ev(e) for e in self.a],
                           name='{:s}({:d},{:d})'.format(self.name, u0, v0))


def _check_length(length, minimum=2):
    if length < minimum:
        raise ValueError('sequence length must be >= {:d}!'.format(minimum))


def az_from_uv(length):
    """az_from_uv

    A- and Z-sequences of the (u,v)-weighted hill triangle:
    ``A = (1, u, (1+v), (1+v)(2-u+v), ...)`` and
    ``Z = (u, (1+v), (1+v)(2-u+v), ...)``.

    Args:
        length (int): number of terms of each sequence, >= 2.

    Returns:
        az (AZSequences): polynomial sequences.

    """
    _check_length(length)
    u = BivarPoly.u()
    v = BivarPoly.v()
    base = 1 + v
    ratio = 2 - u + v
    tail = [base * ratio**j for j in range(length)]
    a = [BivarPoly.one(), u] + tail[:length - 2]
    z = [u] + tail[:length - 1]
    return AZSequences(z, a, name='uv')


def az_hills(length):
    """az_hills

    Integer sequences of the hill triangle of all Schröder paths,
    ``z_j = 2^j`` and ``a = (1, 1, 2, 4, ...)``.

    """
    _check_length(length, 1)
    z = [2**j for j in range(length)]
    a = [1] + [2**(j - 1) for j in range(1, length)]
    return AZSequences(z, a, name='hills')


def az_little_hills(length):
    """az_little_hills

    Integer sequences of the hill triangle of little Schröder paths,
    ``z = (0, 2, 6, 18, ...)`` and ``a = (1, 0, 2, 6, 18, ...)``.

    """
    _check_length(length, 1)
    z = [0] + [2 * 3**(j - 1) for j in range(1, length)]
    a = [1, 0] + [2 * 3**(j - 2) for j in range(2, length)]
    return AZSequences(z, a[:length], name='littlehills')


def triangle_from_az(az, n_max, **kwargs):
    """triangle_from_az

    Build ``d(0,0) = 1``, ``d(n,0) = sum_j z_j d(n-1,j)`` and
    ``d(n,k) = sum_{j>=0} a_j d(n-1,k-1+j)`` for ``k >= 1``.

    Args:
        az (AZSequences): sequences with at least ``n_max`` terms each.
        n_max (int): last row.

    Keyword Args:
        one: multiplicative identity of the ring, defaults to ``1``.
        kind (str): name of the triangle.

    Returns:
        triangle (RiordanTriangle): triangle with ``n_max + 1`` rows.

    """
    if n_max < 0:
        raise ValueError('n_max must be >= 0!')
    if n_max > 0 and az.length < n_max:
        raise InsufficientSequenceLength(
            'A/Z-sequences must have at least {:d} terms, got {:d}!'.format(n_max, az.length))
    one = kwargs.get('one', 1)
    zero = one - one
    rows = [[one]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = []
        total = zero
        for j, d in enumerate(prev):
            total = total + az.z[j] * d
        row.append(total)
        for k in range(1, n + 1):
            total = zero
            for j in range(n - k + 1):
                total = total + az.a[j] * prev[k - 1 + j]
            row.append(total)
        rows.append(row)
    return RiordanTriangle(rows, kind=kwargs.get('kind', az.name or 'triangle'))


def uv_triangle(n_max):
    """uv_triangle

    The (u,v)-weighted hill triangle with polynomial entries
    ``r_{u,v}(n,k)``.

    """
    return triangle_from_az(az_from_uv(max(n_max, 2)), n_max, one=BivarPoly.one(), kind='uv')


def _weights(n):
    """Count (hills, h0, h) over all paths of semi-length n."""
    counts = Counter()
    for word in enumerate_words(n):
        s = stats(word)
        counts[(s.hills, s.h0, s.h)] += 1
    return counts


def weighted_oracle(n, k):
    """weighted_oracle

    Sum of ``u^h0(p) v^h(p)`` over all paths ``p`` of semi-length ``n``
    with ``k`` hills, by enumeration.

    Args:
        n (int): semi-length.
        k (int): number of hills.

    Returns:
        poly (BivarPoly): weighted count.

    """
    if not 0 <= k <= n:
        raise ValueError('hill count must be between 0 and n!')
    counts = _weights(n)
    return BivarPoly({(h0, h): c for (hills, h0, h), c in counts.items() if hills == k})


def weighted_oracle_triangle(n_max):
    """weighted_oracle_triangle

    :func:`weighted_oracle` for all entries up to row ``n_max`` with one
    enumeration per row.

    """
    rows = []
    for n in range(n_max + 1):
        counts = _weights(n)
        terms = [dict() for _ in range(n + 1)]
        for (hills, h0, h), c in counts.items():
            terms[hills][(h0, h)] = c
        rows.append([BivarPoly(t) for t in terms])
    return RiordanTriangle(rows, kind='uv-oracle')


def specialize(tri, u0, v0):
    """specialize

    Evaluate every polynomial entry at ``(u0, v0)``.

    Args:
        tri (RiordanTriangle): polynomial triangle.
        u0 (int): value of ``u``.
        v0 (int): value of ``v``.

    Returns:
        triangle (RiordanTriangle): integer triangle.

    """
    if not isinstance(u0, int) or not isinstance(v0, int):
        raise TypeError('specialization values must be int!')
    return tri.map(lambda e: e.eval(u0, v0) if isinstance(e, BivarPoly) else int(e),
                   kind='{:s}({:d},{:d})'.format(tri.kind, u0, v0))


def row_sums(tri):
    """row_sums

    Row sums of a triangle, e.g. of a specialization of :func:`uv_triangle`.

    Args:
        tri (RiordanTriangle): triangle with integer or polynomial entries.

    Returns:
        sums (list): one sum per row, starting with row 0.

    """
    return tri.row_sums()


def specialization_suite(n_max=4, raise_on_failure=False, filename=''):
    """specialization_suite

    Compare the row sums of every catalogued specialization of the
    (u,v)-weighted triangle with the shipped expected prefixes.

    Args:
        n_max (int, optional): last row that is built; the comparison
            covers the shipped prefix only.
        raise_on_failure (boolean, optional): raise
            :class:`VerificationFailure` on the first mismatch.
        filename (str, optional): alternative data file.

    Returns:
        report (Report): one check per (u, v) pair.

    """
    table = load_specializations(filename)
    depth = max([n_max] + [len(entry['row_sums']) - 1 for entry in table])
    tri = uv_triangle(depth)
    report = Report('specializations')
    for entry in table:
        u0, v0 = entry['u'], entry['v']
        expected = list(entry['row_sums'])
        sums = specialize(tri, u0, v0).row_sums()[:len(expected)]
        ids = '{:s}/{:s}'.format(entry['row_sums_id'] or '-', entry['triangle_id'] or '-')
        ok = sums == expected
        if ok:
            detail = ids
        else:
            row = next(i for i, (x, y) in enumerate(zip(sums, expected)) if x != y)
            detail = '{:s}: row {:d} is {:d}, expected {:d}'.format(ids, row, sums[row],
                                                                     expected[row])
        report.check('(u, v) = ({:d}, {:d})'.format(u0, v0), len(expected), ok, detail)
    report.stop()
    if raise_on_failure and not report.ok:
        raise VerificationFailure(report)
    return report


def check_pascal(n_max, raise_on_failure=True):
    """check_pascal

    Check that the specialization ``(u, v) = (1, -1)`` is Pascal's
    triangle.

    """
    tri = specialize(uv_triangle(n_max), 1, -1)
    report = Report('pascal')
    for n, row in enumerate(tri.rows):
        expected = [int(comb(n, k, exact=True)) for k in range(n + 1)]
        if row != tuple(expected):
            report.check('binomial entries', n + 1, False,
                         'row {:d}: {} != {}'.format(n, list(row), expected))
            break
    else:
        report.check('binomial entries', tri.n_rows, True)
    report.stop()
    if raise_on_failure and not report.ok:
        raise VerificationFailure(report)
    return report
