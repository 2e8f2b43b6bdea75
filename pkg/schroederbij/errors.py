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

"""Exception hierarchy of the toolbox.

All domain errors are ``ValueError`` subclasses so that plain
``except ValueError`` keeps working for callers.
"""

__all__ = ['SchroederError',
           'PathError', 'IllegalCharacter', 'NegativeHeight', 'NonzeroEnd',
           'BijectionError', 'LengthMismatch', 'DomainMismatch', 'NotHillFree',
           'NotLittle', 'ZeroHills', 'StarMember',
           'TreeError', 'TreeSyntaxError', 'RightChainViolation',
           'LeftChildOccupied', 'RightChildOccupied', 'LabelClash',
           'IndexOutOfRange', 'NotRightBranching', 'EmptyTree',
           'PermutationError', 'InsufficientSequenceLength',
           'VerificationFailure']

__docformat__ = 'restructuredtext'


class SchroederError(ValueError):
    """Base class of all domain errors."""


class PathError(SchroederError):
    pass


class IllegalCharacter(PathError):
    pass


class NegativeHeight(PathError):
    pass


class NonzeroEnd(PathError):
    pass


class BijectionError(SchroederError):
    pass


class LengthMismatch(BijectionError):
    pass


class DomainMismatch(BijectionError):
    pass


class NotHillFree(BijectionError):
    pass


class NotLittle(BijectionError):
    pass


class ZeroHills(BijectionError):
    pass


class StarMember(BijectionError):
    pass


class TreeError(SchroederError):
    pass


class TreeSyntaxError(TreeError):
    pass


class RightChainViolation(TreeError):
    pass


class LeftChildOccupied(TreeError):
    pass


class RightChildOccupied(TreeError):
    pass


class LabelClash(TreeError):
    pass


class IndexOutOfRange(TreeError):
    pass


class NotRightBranching(TreeError):
    pass


class EmptyTree(TreeError):
    pass


class PermutationError(SchroederError):
    pass


class InsufficientSequenceLength(SchroederError):
    pass


class VerificationFailure(Exception):
    """VerificationFailure

    Raised when a verified property does not hold.

    Args:
        report (Report): report holding the failing check.

    Attributes:
        report (Report): report holding the failing check.

    """

    def __init__(self, report):
        self.report = report
        super().__init__(report.failure_message())
