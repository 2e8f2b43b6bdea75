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

__all__ = ['Report']

__docformat__ = 'restructuredtext'

from .errors import VerificationFailure
from tabulate import tabulate
from time import time


class Report:
    """Report

    Collects the outcome of verified properties. Each check records the
    property name, the number of instances it was checked on, a pass flag
    and a detail string (the first counterexample on failure).

    Args:
        name (str): name of the report.

    Attributes:
        name (str): name of the report.
        checks (list[dict]): recorded checks in insertion order.
        elapsed (float): wall time since creation or last ``stop`` [s].

    """

    def __init__(self, name):
        self.name = name
        self.checks = []
        self.elapsed = 0.0
        self._t0 = time()

    def __str__(self):
        """String representation of this class"""
        output = [[c['property'], c['instances'], 'OK' if c['ok'] else 'FAIL',
                   c['detail']] for c in self.checks]
        class_str = 'Report {:s} ({:.3f} s):\n\n'.format(self.name, self.elapsed)
        class_str += tabulate(output, headers=['property', 'instances', 'status',
                                               'detail'], tablefmt='rst')
        return class_str

    def check(self, prop, instances, ok, detail=''):
        """check

        Record a single verified property.

        Args:
            prop (str): property name.
            instances (int): number of checked instances.
            ok (boolean): True if the property holds.
            detail (str, optional): counterexample or remark.

        Returns:
            ok (boolean): the given flag, for chaining.

        """
        self.checks.append({'property': prop, 'instances': int(instances),
                            'ok': bool(ok), 'detail': str(detail)})
        return ok

    def extend(self, other, prefix=''):
        """extend

        Append all checks of another report, optionally prefixing their
        property names.

        Args:
            other (Report): report to merge.
            prefix (str, optional): prefix for property names.

        """
        for c in other.checks:
            entry = dict(c)
            entry['property'] = prefix + c['property']
            self.checks.append(entry)

    def stop(self):
        self.elapsed = time() - self._t0
        return self

    @property
    def ok(self):
        return all(c['ok'] for c in self.checks)

    def first_failure(self):
        for c in self.checks:
            if not c['ok']:
                return c
        return None

    def failure_message(self):
        c = self.first_failure()
        if c is None:
            return '{:s}: all properties hold'.format(self.name)
        return '{:s}: property "{:s}" failed: {:s}'.format(self.name, c['property'],
                                                           c['detail'])

    def raise_for_failure(self):
        """raise_for_failure

        Raise :class:`VerificationFailure` if any recorded check failed.

        Returns:
            report (Report): self if everything holds.

        """
        if not self.ok:
            raise VerificationFailure(self)
        return self

    def to_dict(self):
        return {'name': self.name,
                'ok': self.ok,
                'elapsed': '{:.6f}'.format(self.elapsed),
                'checks': [dict(c) for c in self.checks]}

    @classmethod
    def from_dict(cls, data):
        report = cls(data['name'])
        report.elapsed = float(data.get('elapsed', 0))
        for c in data['checks']:
            report.check(c['property'], c['instances'], c['ok'], c['detail'])
        return report
