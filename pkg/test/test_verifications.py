#!/usr/bin/env python
# -*- coding: utf-8 -*-

from schroederbij import SUITES, SUITE_ALIASES, get_suite, Verification, RiordanTriangle
from schroederbij.verifications.verification import Task
from schroederbij.structures.permutations import check_iar_triangle
from schroederbij.report import Report
from schroederbij.verifications.suites import check_statistics
from time import sleep
import logging
import os
import pytest

SMALL_N = {'hill-free-recurrence': 4, 'little-recurrence': 4, 'iar-recurrence': 5,
           'uv-weighted': 4, 'uv-specializations': 4, 'triangles': 5, 'three-term': 10,
           'comp-iar': 5, 'comp-horizontals': 4, 'descent-sets': 5, 'path-tree': 4,
           'roundtrips': 3}


class Broken(Verification):
    name = 'broken'

    def tasks(self, n):
        return [Task(check_iar_triangle, (RiordanTriangle([[1], [1, 1], [3, 2, 2]]),))]


def slow_check(seconds, raise_on_failure=True):
    report = Report('slow')
    sleep(seconds)
    report.check('slept', 1, True)
    return report.stop()


class Slow(Verification):
    name = 'slow'

    def tasks(self, n):
        return [Task(slow_check, (0.05,)) for _ in range(n)]


def test_suite_ids():
    assert set(SUITES) == set(SMALL_N)
    assert get_suite('three-term').default_n == 20
    assert get_suite('comp-iar').default_n == 9
    assert get_suite('cor43').name == 'comp-iar'
    assert get_suite('table1').name == 'uv-specializations'
    assert set(SUITE_ALIASES.values()) <= set(SUITES)
    with pytest.raises(ValueError):
        get_suite('nope')


@pytest.mark.parametrize('name', sorted(SMALL_N))
def test_suites_hold(name):
    suite = get_suite(name, progress_bar=False, disp_messages=False)
    report = suite.calc_report(SMALL_N[name])
    assert report.ok, report.failure_message()
    assert len(report.checks) > 0


def test_progress_bar():
    suite = get_suite('path-tree', disp_messages=False)
    assert suite.calc_report(3).ok


def test_failing_suite():
    report = Broken(progress_bar=False, disp_messages=False).calc_report(1)
    assert not report.ok
    assert report.checks[0]['property'] == 'iar triangle: iar recurrences'


def test_check_n():
    suite = get_suite('three-term')
    assert suite.check_n(None) == 20
    assert suite.check_n(3) == 3
    with pytest.raises(ValueError):
        suite.check_n(0)
    with pytest.raises(TypeError):
        suite.check_n('3')
    with pytest.raises(TypeError):
        suite.check_n(True)
    assert get_suite('roundtrips').check_n(0) == 0


def test_cache(tmp_path, caplog):
    caplog.set_level(logging.INFO, logger='schroederbij')
    suite = get_suite('three-term', cache_dir=str(tmp_path), save_data=True,
                      progress_bar=False)
    first = suite.get_report(8)
    files = os.listdir(str(tmp_path))
    assert files == ['three-term_{:s}.json'.format(suite.get_hash(8))]
    assert 'loaded from file' not in caplog.text
    second = suite.get_report(8)
    assert 'loaded from file' in caplog.text
    assert second.to_dict() == first.to_dict()
    suite.force_recalc = True
    caplog.clear()
    suite.get_report(8)
    assert 'Elapsed time for _three-term_' in caplog.text


def test_cache_dir():
    with pytest.raises(ValueError):
        get_suite('three-term', cache_dir='/does/not/exist')
    assert 'three-term' in str(get_suite('three-term'))


def test_parallel_reports():
    distributed = pytest.importorskip('dask.distributed')
    client = distributed.Client(processes=False, n_workers=1)
    try:
        suite = get_suite('comp-horizontals', dask_client=client, disp_messages=False)
        assert suite.calc_report(3).to_dict()['checks'] == \
            get_suite('comp-horizontals', progress_bar=False).calc_report(3).to_dict()['checks']
    finally:
        client.close()


def test_report_elapsed():
    report = Slow(progress_bar=False, disp_messages=False).calc_report(3)
    assert report.ok
    assert report.elapsed >= 0.15
    assert report.checks[0]['property'] == 'slow: slept'


def test_statistics_sizes():
    report = check_statistics(6, separable_n=4)
    assert report.ok
    assert report.name == 'statistics n=6, separability n=4'
    assert report.checks[0]['instances'] == 1 + 2 + 6 + 24 + 120 + 720
    assert check_statistics(3).name == 'statistics n=3, separability n=3'
    task = get_suite('comp-iar').tasks(9)[-1]
    assert task.func is check_statistics
    assert task.args == (9,)
