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

__all__ = ['RiordanTriangle']

__docformat__ = 'restructuredtext'

from tabulate import tabulate
import json


def _entry_to_text(entry):
    if hasattr(entry, 'to_terms'):
        return str(entry)
    return str(int(entry))


def _entry_to_json(entry):
    if hasattr(entry, 'to_terms'):
        return entry.to_terms()
    return str(int(entry))


class RiordanTriangle:
    """RiordanTriangle

    Lower-triangular array of ring elements indexed by ``(n, k)`` with
    ``n >= k >= 0``. Entries are Python integers or :class:`BivarPoly`.
    Row ``n`` holds exactly ``n+1`` entries.

    Args:
        rows (list[list]): rows of the triangle.

    Keyword Args:
        kind (str): name used when serializing.

    Attributes:
        rows (tuple[tuple]): rows of the triangle.
        kind (str): name used when serializing.

    """

    def __init__(self, rows, **kwargs):
        rows = tuple(tuple(row) for row in rows)
        for n, row in enumerate(rows):
            if len(row) != n+1:
                raise ValueError('Row {:d} of a triangle must have {:d} entries!'.format(n, n+1))
        self._rows = rows
        self.kind = kwargs.get('kind', 'triangle')

    def __str__(self):
        """String representation of this class"""
        output = [[n] + [_entry_to_text(e) for e in row] for n, row in enumerate(self.rows)]
        headers = ['n'] + ['k={:d}'.format(k) for k in range(self.n_rows)]
        return 'Triangle {:s}:\n\n'.format(self.kind) \
            + tabulate(output, headers=headers, tablefmt='rst')

    def __repr__(self):
        return 'RiordanTriangle(kind={!r}, n_rows={:d})'.format(self.kind, self.n_rows)

    def __eq__(self, other):
        if not isinstance(other, RiordanTriangle):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __getitem__(self, index):
        n, k = index
        if not 0 <= k <= n < self.n_rows:
            raise IndexError('Triangle index ({:d}, {:d}) out of range!'.format(n, k))
        return self._rows[n][k]

    def __len__(self):
        return len(self._rows)

    @property
    def rows(self):
        return self._rows

    @property
    def n_rows(self):
        return len(self._rows)

    def row(self, n):
        return list(self._rows[n])

    def row_sums(self):
        """row_sums

        Returns:
            sums (list): sum of every row, exact.

        """
        sums = []
        for row in self._rows:
            total = row[0]
            for e in row[1:]:
                total = total + e
            sums.append(total)
        return sums

    def map(self, func, **kwargs):
        """map

        Apply a function to every entry.

        Args:
            func (callable): entry-wise function.

        Keyword Args:
            kind (str): name of the new triangle.

        Returns:
            triangle (RiordanTriangle): new triangle.

        """
        return RiordanTriangle([[func(e) for e in row] for row in self._rows],
                               kind=kwargs.get('kind', self.kind))

    def truncate(self, n_rows):
        return RiordanTriangle(self._rows[:n_rows], kind=self.kind)

    def to_dict(self):
        return {'kind': self.kind,
                'rows': [[_entry_to_json(e) for e in row] for row in self._rows]}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(', ', ': '))

    def to_csv(self):
        return '\n'.join(','.join(_entry_to_text(e) for e in row) for row in self._rows)

    def to_markdown(self):
        output = [[n] + [_entry_to_text(e) for e in row] + [''] * (self.n_rows - n - 1)
                  for n, row in enumerate(self._rows)]
        headers = ['n'] + ['k={:d}'.format(k) for k in range(self.n_rows)]
        return tabulate(output, headers=headers, tablefmt='github')
