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

__all__ = ['HillFreeRecurrence', 'LittleRecurrence', 'IarRecurrence', 'UVWeighted',
           'UVSpecializations', 'Triangles', 'ThreeTerm', 'CompIar', 'CompHorizontals',
           'DescentSets', 'PathTree', 'Roundtrips', 'SUITES', 'SUITE_ALIASES', 'get_suite',
           'IAR_COMP_EXAMPLES', 'HILL_ROWS', 'LITTLE_HILL_ROWS', 'check_display_rows',
           'check_triangle_methods', 'check_class_counts', 'check_iar', 'check_uv_oracle',
           'check_iar_comp_examples', 'check_full_symmetric_control', 'check_statistics',
           'check_roundtrips']

__docformat__ = 'restructuredtext'

from .verification import Verification, Task
from ..bijections.paths import (check_phi, check_big_phi, check_psi, check_big_psi,
                                check_hill_recurrences, check_little_recurrences)
from ..bijections.trees import check_rho, check_path_tree
from ..structures.paths import (enumerate_words, hill_triangle, parse_path, render_path,
                                decompose_at_hills, check_three_term, check_swap_map)
from ..structures.permutations import (enumerate_permutations, enumerate_separable,
                                       comp_by_factorisation, stat_record, iar_triangle,
                                       iar, comp, descent_set,
                                       check_iar_triangle, comp_vs_iar, comp_vs_paths,
                                       descent_sets_vs_trees)
from ..structures.riordan import (az_hills, az_little_hills, triangle_from_az, uv_triangle,
                                  weighted_oracle_triangle, specialize, specialization_suite,
                                  check_pascal)
from ..structures.trees import (DiSkTree, PLUS, MINUS, enumerate_trees, class_counts,
                                parse_tree, render_tree, tau, attach_left, attach_right,
                                label_sequence)
from ..errors import VerificationFailure, LabelClash, LeftChildOccupied, RightChildOccupied
from ..report import Report

HILL_ROWS = ((1,), (1, 1), (3, 2, 1), (11, 7, 3, 1), (45, 28, 12, 4, 1))
LITTLE_HILL_ROWS = ((1,), (0, 1), (2, 0, 1), (6, 4, 0, 1), (26, 12, 6, 0, 1))

# permutation: (iar, comp)
IAR_COMP_EXAMPLES = {'123': (3, 3), '132': (2, 2), '213': (1, 2), '231': (2, 1),
                     '312': (1, 1), '321': (1, 1), '2413': (2, 1), '3142': (1, 1)}

# recurrences are cheap, so they always run at least this far
RECURRENCE_ROWS = 12


def _finish(report, raise_on_failure):
    report.stop()
    if raise_on_failure and not report.ok:
        raise VerificationFailure(report)
    return report


def check_display_rows(raise_on_failure=True):
    """check_display_rows

    Compare the first five rows of both hill triangles with their known
    values.

    """
    report = Report('display rows')
    for cls, rows in (('all', HILL_ROWS), ('little', LITTLE_HILL_ROWS)):
        tri = hill_triangle(len(rows) - 1, cls)
        report.check('{:s} rows 0-4'.format(tri.kind), len(rows), tri.rows == rows,
                     '{} != {}'.format([list(r) for r in tri.rows], [list(r) for r in rows]))
    return _finish(report, raise_on_failure)


def check_triangle_methods(n, raise_on_failure=True):
    """check_triangle_methods

    Build both hill triangles by the height dynamic programme, by path
    enumeration and from their integer A/Z-sequences, and compare.
    Also check ``r(n,0) = s(n)``.

    """
    report = Report('triangle methods n={:d}'.format(n))
    cases = (('all', az_hills), ('little', az_little_hills))
    for cls, az in cases:
        dp = hill_triangle(n, cls)
        report.check('{:s} dp = enumeration'.format(dp.kind), n + 1,
                     dp == hill_triangle(n, cls, method='enumerate'))
        report.check('{:s} dp = A/Z-sequences'.format(dp.kind), n + 1,
                     dp == triangle_from_az(az(max(n, 1)), n))
    r = hill_triangle(n)
    s = hill_triangle(n, 'little').row_sums()
    column = [r[m, 0] for m in range(n + 1)]
    report.check('r(n,0) = s(n)', n + 1, column == s, '{} != {}'.format(column, s))
    return _finish(report, raise_on_failure)


def check_class_counts(n, raise_on_failure=True):
    """check_class_counts

    Compare the number of trees with ``m - 1`` nodes and first ``-`` index
    ``k`` with ``r(m-1,k-1)``, and the number of separable permutations of
    size ``m`` with ``r(m-1)``, for ``1 <= m <= n``.

    """
    r = hill_triangle(n - 1)
    sums = r.row_sums()
    report = Report('class counts n={:d}'.format(n))
    bad = None
    for m in range(1, n + 1):
        counts = class_counts(m)
        expected = {k: r[m-1, k-1] for k in range(1, m + 1)}
        if counts != expected and bad is None:
            bad = 'm = {:d}: {} != {}'.format(m, counts, expected)
    report.check('trees per first - index', n, bad is None, bad or '')
    bad = None
    for m in range(1, n + 1):
        count = sum(1 for _ in enumerate_separable(m))
        if count != sums[m-1] and bad is None:
            bad = 'm = {:d}: {:d} separable, r = {:d}'.format(m, count, sums[m-1])
    report.check('separable permutations', n, bad is None, bad or '')
    return _finish(report, raise_on_failure)


def check_iar(n, raise_on_failure=True):
    """check_iar

    Tabulate iar over the separable permutations up to size ``n`` and check
    its recurrences and the identity with the hill triangle.

    """
    return check_iar_triangle(iar_triangle(n, check=False), raise_on_failure=raise_on_failure)


def check_uv_oracle(n, raise_on_failure=True):
    """check_uv_oracle

    Compare the (u,v)-weighted triangle with the enumeration oracle and its
    specializations at ``(1,1)`` and ``(0,1)`` with the integer triangles.

    """
    tri = uv_triangle(n)
    oracle = weighted_oracle_triangle(n)
    report = Report('uv oracle n={:d}'.format(n))
    bad = None
    for m in range(n + 1):
        for k in range(m + 1):
            if tri[m, k] != oracle[m, k] and bad is None:
                bad = '({:d},{:d}): {:s} != {:s}'.format(m, k, str(tri[m, k]),
                                                         str(oracle[m, k]))
    report.check('A/Z triangle = weighted enumeration', (n + 1)*(n + 2)//2, bad is None,
                 bad or '')
    report.check('(u,v) = (1,1) gives the hill triangle', n + 1,
                 specialize(tri, 1, 1) == hill_triangle(n))
    report.check('(u,v) = (0,1) gives the little hill triangle', n + 1,
                 specialize(tri, 0, 1) == hill_triangle(n, 'little'))
    return _finish(report, raise_on_failure)


def check_iar_comp_examples(raise_on_failure=True):
    report = Report('iar and comp examples')
    for text, expected in IAR_COMP_EXAMPLES.items():
        record = stat_record(text)
        report.check(text, 1, (record.iar, record.comp) == expected,
                     'got ({:d}, {:d}), expected ({:d}, {:d})'.format(
                         record.iar, record.comp, *expected))
    return _finish(report, raise_on_failure)


def check_full_symmetric_control(raise_on_failure=True):
    """check_full_symmetric_control

    On all permutations of size 4 the distributions of iar and comp must
    differ.

    """
    control = comp_vs_iar(4, separable_only=False, raise_on_failure=False)
    report = Report('all permutations n=4')
    report.check('comp and iar differ', 24, not control.ok, control.checks[0]['detail'])
    return _finish(report, raise_on_failure)


def check_statistics(n, separable_n=8, raise_on_failure=True):
    """check_statistics

    Over all permutations of size up to ``n`` compute iar from the
    increasing prefix and from the smallest descent, and compare comp with
    the factorisation count. Up to size ``separable_n`` :func:`stat_record`
    also cross-checks both separability tests.

    Args:
        n (int): largest permutation size.
        separable_n (int, optional): largest size with the separability
            cross-check, defaults to 8.
        raise_on_failure (bool, optional): raise
            :class:`VerificationFailure` on a mismatch, defaults to True.

    Returns:
        report (Report): the report named after both sizes actually run.

    """
    separable_n = min(n, separable_n)
    report = Report('statistics n={:d}, separability n={:d}'.format(n, separable_n))
    count = 0
    failure = None
    for m in range(1, n + 1):
        for pi in enumerate_permutations(m):
            count += 1
            if failure is not None:
                continue
            try:
                if m <= separable_n:
                    value = stat_record(pi).comp
                else:
                    des = descent_set(pi)
                    if iar(pi) != (min(des) if des else m):
                        raise RuntimeError('iar computations disagree on {:s}!'.format(str(pi)))
                    value = comp(pi)
            except RuntimeError as e:
                failure = str(e)
                continue
            if value != comp_by_factorisation(pi):
                failure = 'comp({:s}) = {:d}, factorisation count {:d}'.format(
                    str(pi), value, comp_by_factorisation(pi))
    report.check('comp, iar and separability cross-checks', count, failure is None,
                 failure or '')
    return _finish(report, raise_on_failure)


def check_roundtrips(n, raise_on_failure=True):
    """check_roundtrips

    Serialization roundtrips of paths and trees up to size ``n``, the tau
    involution, splicing with :func:`attach_left` / :func:`attach_right`
    and :func:`decompose_at_hills`.

    """
    report = Report('roundtrips n={:d}'.format(n))
    count = 0
    failure = None
    for m in range(n + 1):
        for word in enumerate_words(m):
            count += 1
            p = parse_path(word)
            if failure is None and render_path(p) != word:
                failure = 'path {:s} renders as {:s}'.format(word, render_path(p))
            parts = decompose_at_hills(p)
            joined = 'UD'.join(q.word for q in parts)
            if failure is None and (joined != word or any(q.hills for q in parts)):
                failure = 'path {:s} decomposes into {}'.format(word, [q.word for q in parts])
    report.check('paths', count, failure is None, failure or '')
    count = 0
    failure = None
    leaves = {label: DiSkTree.leaf(label) for label in (PLUS, MINUS)}
    for t in enumerate_trees(n + 1):
        count += 1
        text = render_tree(t)
        if failure is None and parse_tree(text) != t:
            failure = 'tree {:s} parses as {:s}'.format(text, str(parse_tree(text)))
        if t.is_empty:
            continue
        if failure is None and tau(tau(t)) != t:
            failure = 'tau is not an involution on {:s}'.format(text)
        labels = label_sequence(t)
        for i in range(1, len(t) + 1):
            for label, leaf in leaves.items():
                for attach in ('left', 'right'):
                    try:
                        if attach == 'left':
                            s = attach_left(leaf, t, i)
                        else:
                            s = attach_right(t, i, leaf)
                    except (LeftChildOccupied, RightChildOccupied, LabelClash):
                        continue
                    expected = labels[:i] + (label,) + labels[i:] if attach == 'right' \
                        else labels[:i-1] + (label,) + labels[i-1:]
                    if failure is None and label_sequence(s) != expected:
                        failure = 'attaching {:s} {:s} of node {:d} in {:s} gives {:s}'.format(
                            label, attach, i, text, str(s))
    report.check('trees', count, failure is None, failure or '')
    return _finish(report, raise_on_failure)


class HillFreeRecurrence(Verification):
    """HillFreeRecurrence

    phi and Phi are bijections onto the hill-free paths, and the hill
    triangle satisfies its recurrences.

    """

    name = 'hill-free-recurrence'
    default_n = 9

    def tasks(self, n):
        tasks = []
        for m in range(1, n + 1):
            tasks += [Task(check_phi, (m,), True), Task(check_big_phi, (m,), True)]
        return tasks + [Task(check_hill_recurrences, (max(n, RECURRENCE_ROWS),))]


class LittleRecurrence(Verification):
    """LittleRecurrence

    psi and Psi are bijections onto the hill-free little paths, and the
    little hill triangle satisfies its recurrences.

    """

    name = 'little-recurrence'
    default_n = 9

    def tasks(self, n):
        tasks = []
        for m in range(1, n + 1):
            tasks += [Task(check_psi, (m,), True), Task(check_big_psi, (m,), True)]
        return tasks + [Task(check_little_recurrences, (max(n, RECURRENCE_ROWS),))]


class IarRecurrence(Verification):
    """IarRecurrence

    rho and rho_inv split every tree class, the classes are counted by the
    hill triangle, and iar on separable permutations follows it too.

    """

    name = 'iar-recurrence'
    default_n = 8

    def tasks(self, n):
        return [Task(check_rho, (m,), True) for m in range(2, n + 1)] + \
            [Task(check_class_counts, (n,)), Task(check_iar, (n,))]


class UVWeighted(Verification):
    name = 'uv-weighted'
    default_n = 8
    min_n = 0

    def tasks(self, n):
        return [Task(check_uv_oracle, (n,))]


class UVSpecializations(Verification):
    name = 'uv-specializations'
    default_n = 6
    min_n = 0

    def tasks(self, n):
        return [Task(specialization_suite, (n,)), Task(check_pascal, (max(n, RECURRENCE_ROWS),))]


class Triangles(Verification):
    name = 'triangles'
    default_n = 9
    min_n = 0

    def tasks(self, n):
        return [Task(check_display_rows), Task(check_triangle_methods, (n,))] + \
            [Task(check_swap_map, (m,)) for m in range(n + 1)]


class ThreeTerm(Verification):
    name = 'three-term'
    default_n = 20

    def tasks(self, n):
        return [Task(check_three_term, (n,))]


class CompIar(Verification):
    """CompIar

    comp and iar are equidistributed on separable permutations but not on
    all permutations.

    """

    name = 'comp-iar'
    default_n = 9

    def tasks(self, n):
        return [Task(comp_vs_iar, (m,)) for m in range(1, n + 1)] + \
            [Task(check_iar_comp_examples), Task(check_full_symmetric_control),
             Task(check_statistics, (n,))]


class CompHorizontals(Verification):
    name = 'comp-horizontals'
    default_n = 7
    min_n = 0

    def tasks(self, n):
        return [Task(comp_vs_paths, (m,)) for m in range(n + 1)]


class DescentSets(Verification):
    name = 'descent-sets'
    default_n = 8

    def tasks(self, n):
        return [Task(descent_sets_vs_trees, (m,)) for m in range(1, n + 1)]


class PathTree(Verification):
    name = 'path-tree'
    default_n = 8
    min_n = 0

    def tasks(self, n):
        return [Task(check_path_tree, (m,), True) for m in range(n + 1)]


class Roundtrips(Verification):
    name = 'roundtrips'
    default_n = 6
    min_n = 0

    def tasks(self, n):
        return [Task(check_roundtrips, (n,))]


SUITES = {cls.name: cls for cls in (HillFreeRecurrence, LittleRecurrence, IarRecurrence,
                                    UVWeighted, UVSpecializations, Triangles, ThreeTerm,
                                    CompIar, CompHorizontals, DescentSets, PathTree,
                                    Roundtrips)}

# short ids accepted besides the suite names
SUITE_ALIASES = {'thm11': 'hill-free-recurrence', 'thm12': 'little-recurrence',
                 'thm32': 'iar-recurrence', 'thm41': 'uv-weighted',
                 'table1': 'uv-specializations', 'fz-sulanke': 'three-term',
                 'cor43': 'comp-iar', 'thm42': 'comp-horizontals',
                 'cor37-descents': 'descent-sets'}


def get_suite(name, **kwargs):
    """get_suite

    Instantiate a verification suite by its id.

    Args:
        name (str): suite id, one of :data:`SUITES` or :data:`SUITE_ALIASES`.
        **kwargs: passed to :class:`Verification`.

    Returns:
        suite (Verification): suite instance.

    """
    try:
        cls = SUITES[SUITE_ALIASES.get(name, name)]
    except KeyError:
        raise ValueError('suite must be one of {:s}!'.format(
            ', '.join(list(SUITES) + list(SUITE_ALIASES))))
    return cls(kwargs.pop('force_recalc', False), **kwargs)
