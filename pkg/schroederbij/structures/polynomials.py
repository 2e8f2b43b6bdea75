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

__all__ = ['BivarPoly']

__docformat__ = 'restructuredtext'

from sympy import Poly, symbols

U, V = symbols('u v')


def _to_poly(value):
    if isinstance(value, BivarPoly):
        return value._poly
    if isinstance(value, Poly):
        return Poly(value.as_expr(), U, V, domain='ZZ')
    if isinstance(value, int):
        return Poly(value, U, V, domain='ZZ')
    raise TypeError('polynomial operand must be a BivarPoly or an int!')


class BivarPoly:
    """BivarPoly

    Polynomial in the commuting indeterminates ``u`` and ``v`` with exact
    integer coefficients, backed by a :class:`sympy.Poly` over ``ZZ``.

    Args:
        terms (dict, int, optional): map ``(a, b) -> c`` of the coefficient
            ``c`` of ``u^a v^b``, or an integer constant.

    Attributes:
        poly (sympy.Poly): underlying sympy polynomial.

    """

    __slots__ = ('_poly',)

    def __init__(self, terms=0):
        if isinstance(terms, dict):
            data = {(int(a), int(b)): int(c) for (a, b), c in terms.items() if c != 0}
            if any(a < 0 or b < 0 for a, b in data):
                raise ValueError('exponents must be >= 0!')
            if data:
                self._poly = Poly.from_dict(data, U, V, domain='ZZ')
            else:
                self._poly = Poly(0, U, V, domain='ZZ')
        else:
            self._poly = _to_poly(terms)

    @classmethod
    def u(cls):
        return cls({(1, 0): 1})

    @classmethod
    def v(cls):
        return cls({(0, 1): 1})

    @classmethod
    def one(cls):
        return cls(1)

    @classmethod
    def from_terms(cls, terms):
        """from_terms

        Inverse of :meth:`to_terms`.

        Args:
            terms (list[dict]): terms ``{'u': a, 'v': b, 'c': '<decimal>'}``.

        Returns:
            poly (BivarPoly): polynomial.

        """
        return cls({(int(t['u']), int(t['v'])): int(t['c']) for t in terms})

    def __str__(self):
        return str(self._poly.as_expr())

    def __repr__(self):
        return 'BivarPoly({:s})'.format(str(self))

    def __eq__(self, other):
        try:
            return self._poly == _to_poly(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self.is_constant:
            return hash(self.constant)
        return hash(tuple(self.terms()))

    def __add__(self, other):
        try:
            return BivarPoly(self._poly + _to_poly(other))
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return BivarPoly(self._poly - _to_poly(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        try:
            return BivarPoly(_to_poly(other) - self._poly)
        except TypeError:
            return NotImplemented

    def __neg__(self):
        return BivarPoly(-self._poly)

    def __mul__(self, other):
        try:
            return BivarPoly(self._poly * _to_poly(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError('exponent must be an integer >= 0!')
        return BivarPoly(self._poly ** exponent)

    @property
    def poly(self):
        return self._poly

    @property
    def is_zero(self):
        return self._poly.is_zero

    @property
    def is_constant(self):
        return all(m == (0, 0) for m, _ in self.terms())

    @property
    def constant(self):
        return int(self._poly.as_dict().get((0, 0), 0))

    def terms(self):
        """terms

        Non-zero terms in graded lexicographic order, highest first.

        Returns:
            terms (list[tuple]): ``((a, b), c)`` pairs with ``int`` ``c``.

        """
        return [((int(a), int(b)), int(c))
                for (a, b), c in self._poly.terms(order='grlex') if c != 0]

    def to_terms(self):
        return [{'u': a, 'v': b, 'c': str(c)} for (a, b), c in self.terms()]

    def eval(self, u0, v0):
        """eval

        Exact evaluation at integers ``u = u0``, ``v = v0``.

        Args:
            u0 (int): value of ``u``.
            v0 (int): value of ``v``.

        Returns:
            value (int): value of the polynomial.

        """
        return sum(c * u0**a * v0**b for (a, b), c in self.terms())
