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

__all__ = ['make_hash_md5', 'make_hashable', 'parse_bits', 'parse_trits',
           'format_digits', 'histogram', 'format_histogram', 'compare_histograms',
           'load_specializations', 'read_bfile', 'compare_with_bfile']

__docformat__ = 'restructuredtext'

from .report import Report
from collections import Counter
import hashlib
import numpy as np
import os
import warnings


def make_hash_md5(obj):
    """make_hash_md5


    Args:
        obj (any): anything that can be hashed.

    Returns:
        hash (str): hash from object.

    """
    hasher = hashlib.md5()
    hasher.update(repr(make_hashable(obj)).encode())
    return hasher.hexdigest()


def make_hashable(obj):
    """make_hashable

    Recursive calls to elements of tuples, lists, dicts, set, and frozensets.

    Args:
        obj (any): anything that can be hashed..

    Returns:
        obj (tuple): hashable object.

    """
    if isinstance(obj, (tuple, list)):
        return tuple((make_hashable(e) for e in obj))

    if isinstance(obj, dict):
        return tuple(sorted((k, make_hashable(v)) for k, v in obj.items()))

    if isinstance(obj, (set, frozenset)):
        return tuple(sorted(make_hashable(e) for e in obj))

    return obj


def _parse_digits(text, alphabet, name):
    if not isinstance(text, str):
        raise TypeError('{:s} must be given as a string!'.format(name))
    text = text.strip()
    if text in ('', '-'):
        return ()
    if any(c not in alphabet for c in text):
        raise ValueError('{:s} must only contain the digits {:s}!'.format(name, alphabet))
    return tuple(int(c) for c in text)


def parse_bits(text):
    """parse_bits

    Parse a bit string such as ``1011110`` into a tuple of integers, with
    ``b_1`` as the leftmost digit. The empty string (or ``-``) is the empty
    sequence.

    Args:
        text (str): bit string.

    Returns:
        bits (tuple[int]): parsed bit sequence.

    """
    return _parse_digits(text, '01', 'bit string')


def parse_trits(text):
    """parse_trits

    Parse a trit string such as ``102210`` into a tuple of integers.

    Args:
        text (str): trit string.

    Returns:
        trits (tuple[int]): parsed trit sequence.

    """
    return _parse_digits(text, '012', 'trit string')


def format_digits(seq):
    return ''.join(str(int(d)) for d in seq)


def histogram(values):
    """histogram

    Count the occurrence of every value.

    Args:
        values (iterable[int]): values to count.

    Returns:
        hist (dict[int, int]): counts sorted by value.

    """
    counts = Counter(values)
    return {k: counts[k] for k in sorted(counts)}


def format_histogram(hist):
    return '{' + ', '.join('{}: {}'.format(k, v) for k, v in sorted(hist.items())) + '}'


def compare_histograms(left, right):
    """compare_histograms

    Find the first bin in which two histograms differ.

    Args:
        left (dict[int, int]): first histogram.
        right (dict[int, int]): second histogram.

    Returns:
        diff (tuple): ``(bin, left count, right count)`` of the first
        differing bin or ``None`` if both agree.

    """
    for k in sorted(set(left) | set(right)):
        if left.get(k, 0) != right.get(k, 0):
            return (k, left.get(k, 0), right.get(k, 0))
    return None


def load_specializations(filename=''):
    """load_specializations

    Load the table of (u, v) specializations with their expected row-sum
    prefixes and catalogue numbers from the shipped data file.

    Args:
        filename (str, optional): alternative data file.

    Returns:
        table (list[dict]): one entry per (u, v) pair with keys ``u``, ``v``,
        ``row_sums`` (tuple of int), ``row_sums_id`` and ``triangle_id``
        (str or None).

    """
    if filename == '':
        filename = os.path.join(os.path.dirname(__file__),
                                'parameters/specializations.dat')
    # read as text so prefixes of arbitrary size stay exact
    data = np.atleast_2d(np.genfromtxt(filename, dtype='U64', comments='#'))
    table = []
    for row in data:
        table.append({'u': int(row[0]),
                      'v': int(row[1]),
                      'row_sums': tuple(int(x) for x in row[2].split(',')),
                      'row_sums_id': None if row[3] == '-' else str(row[3]),
                      'triangle_id': None if row[4] == '-' else str(row[4])})
    return table


def read_bfile(filename):
    """read_bfile

    Read an OEIS b-file. Each non-empty line holds ``index value``; lines
    starting with ``#`` are comments.

    Args:
        filename (str): path to the b-file.

    Returns:
        terms (dict[int, int]): sequence terms by index.

    """
    terms = {}
    with open(filename, 'r') as f:
        for line_no, line in enumerate(f, 1):
            line = line.strip()
            if line == '' or line.startswith('#'):
                continue
            parts = line.split()
            if len(parts) < 2:
                raise ValueError('b-file line {:d} must hold an index and a '
                                 'value!'.format(line_no))
            terms[int(parts[0])] = int(parts[1])
    return terms


def compare_with_bfile(sequence, filename, offset=0):
    """compare_with_bfile

    Compare a computed sequence against a local b-file.

    Args:
        sequence (list[int]): computed terms, ``sequence[i]`` has index
            ``offset + i``.
        filename (str): path to the b-file.
        offset (int, optional): index of the first computed term.

    Returns:
        report (Report): comparison report.

    """
    terms = read_bfile(filename)
    report = Report('b-file {:s}'.format(os.path.basename(filename)))
    compared = 0
    for i, value in enumerate(sequence):
        index = offset + i
        if index not in terms:
            continue
        compared += 1
        if terms[index] != value:
            report.check('terms agree', compared, False,
                         'index {:d}: computed {:d}, b-file {:d}'.format(index, value,
                                                                         terms[index]))
            return report.stop()
    if compared < len(sequence):
        warnings.warn('b-file covers only {:d} of {:d} computed terms'.format(
            compared, len(sequence)))
    report.check('terms agree', compared, True)
    return report.stop()
