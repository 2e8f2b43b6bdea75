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

__all__ = ['Verification', 'Task']

__docformat__ = 'restructuredtext'

from .. import __version__
from ..helpers import make_hash_md5
from ..report import Report
from collections import namedtuple
from tabulate import tabulate
from time import time
from tqdm import tqdm
from os import path
import json
import logging

log = logging.getLogger('schroederbij')

# func(*args, raise_on_failure=False) returns a Report; progress marks a pbar keyword
Task = namedtuple('Task', ['func', 'args', 'progress'], defaults=((), False))


class Verification:
    """Verification

    Base class for all verification suites.

    Handles the caching of reports, some displaying options and the
    optional parallel execution of the independent checks of a suite.

    Args:
        force_recalc (boolean, optional): force recalculation of results.

    Keyword Args:
        save_data (boolean): true to save reports as JSON.
        cache_dir (str): path to cached data.
        disp_messages (boolean): true to log messages from within the
            suites.
        progress_bar (boolean): enable tqdm progress bar.
        dask_client (Dask.Client): run the checks of a suite as dask tasks.

    Attributes:
        force_recalc (boolean): force recalculation of results.
        save_data (boolean): true to save reports as JSON.
        cache_dir (str): path to cached data.
        disp_messages (boolean): true to log messages from within the
            suites.
        progress_bar (boolean): enable tqdm progress bar.
        dask_client (Dask.Client): dask client or None.

    """

    name = 'verification'
    default_n = 1
    min_n = 1

    def __init__(self, force_recalc=False, **kwargs):
        self.force_recalc = force_recalc
        self.save_data = kwargs.get('save_data', False)
        self.cache_dir = kwargs.get('cache_dir', './')
        self.disp_messages = kwargs.get('disp_messages', True)
        self.progress_bar = kwargs.get('progress_bar', True)
        self.dask_client = kwargs.get('dask_client', None)

    def __str__(self, output=[]):
        """String representation of this class"""
        output = [['suite', self.name],
                  ['default n', self.default_n],
                  ['force recalc', self.force_recalc],
                  ['cache directory', self.cache_dir],
                  ['display messages', self.disp_messages],
                  ['save data', self.save_data],
                  ['progress bar', self.progress_bar],
                  ['parallel', self.dask_client is not None]] + output

        class_str = 'Verification suite:\n\n'
        class_str += tabulate(output, headers=['parameter', 'value'], tablefmt='rst',
                              colalign=('right',))
        return class_str

    def disp_message(self, message):
        """disp_message

        Wrapper to log messages for that class.

        Args:
            message (str): message to log.

        """
        if self.disp_messages:
            log.info(message)

    def save(self, full_filename, report):
        """save

        Save a report as JSON if ``save_data`` is set.

        Args:
            full_filename (str): full file name to data file.
            report (Report): report to save.

        """
        if self.save_data:
            with open(full_filename, 'w') as f:
                json.dump(report.to_dict(), f, indent=1, sort_keys=True)
            self.disp_message('_{:s}_ saved to file:\n\t {:s}'.format(
                self.name, path.basename(full_filename)))

    def get_hash(self, n):
        """get_hash

        Calculates an unique hash given by the suite, its bound and the
        package version.

        Args:
            n (int): bound of the suite.

        Returns:
            hash (str): unique hash.

        """
        return make_hash_md5([self.name, n, __version__])

    def check_n(self, n):
        if n is None:
            return self.default_n
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError('n must be an int!')
        if n < self.min_n:
            raise ValueError('n must be >= {:d} for suite {:s}!'.format(self.min_n, self.name))
        return n

    def get_report(self, n=None):
        """get_report

        Returns the report of the suite for the bound ``n``. A cached report
        is loaded from ``cache_dir`` unless ``force_recalc`` is set.

        Args:
            n (int, optional): bound, defaults to ``default_n``.

        Returns:
            report (Report): verification report.

        """
        n = self.check_n(n)
        filename = '{:s}_{:s}.json'.format(self.name, self.get_hash(n))
        full_filename = path.abspath(path.join(self.cache_dir, filename))
        if path.exists(full_filename) and not self.force_recalc:
            with open(full_filename, 'r') as f:
                report = Report.from_dict(json.load(f))
            self.disp_message('_{:s}_ loaded from file:\n\t{:s}'.format(self.name, filename))
        else:
            t1 = time()
            self.disp_message('Calculating _{:s}_ for n = {:d} ...'.format(self.name, n))
            report = self.calc_report(n)
            self.disp_message('Elapsed time for _{:s}_: {:f} s'.format(self.name, time()-t1))
            self.save(full_filename, report)
        return report

    def tasks(self, n):
        """tasks

        Independent checks of the suite for the bound ``n``.

        Args:
            n (int): bound.

        Returns:
            tasks (list[Task]): checks in report order.

        """
        raise NotImplementedError('suites must define their tasks!')

    def calc_report(self, n):
        """calc_report

        Run all tasks sequentially or, if a ``dask_client`` is set, as dask
        tasks, and merge their reports in task order.

        Args:
            n (int): bound.

        Returns:
            report (Report): merged report.

        """
        report = Report('{:s} n={:d}'.format(self.name, n))
        tasks = self.tasks(n)
        if self.dask_client is not None:
            reports = self.parallel_reports(tasks)
        else:
            reports = self.sequential_reports(tasks)
        for r in reports:
            report.extend(r, prefix='{:s}: '.format(r.name))
        return report.stop()

    def sequential_reports(self, tasks):
        if self.progress_bar:  # with tqdm progressbar
            pbar = tqdm(desc=self.name, unit='checks')
        else:
            pbar = None
        reports = []
        for task in tasks:
            if pbar is not None:
                pbar.set_description('{:s} | {:s}'.format(self.name, task.func.__name__))
            if task.progress:
                reports.append(task.func(*task.args, raise_on_failure=False, pbar=pbar))
            else:
                reports.append(task.func(*task.args, raise_on_failure=False))
                if pbar is not None:
                    pbar.update(1)
        if pbar is not None:  # close tqdm progressbar if used
            pbar.close()
        return reports

    def parallel_reports(self, tasks):
        from dask import delayed  # to allow parallel computation

        res = [delayed(task.func)(*task.args, raise_on_failure=False) for task in tasks]
        return self.dask_client.compute(res, sync=True)

    @property
    def cache_dir(self):
        return self._cache_dir

    @cache_dir.setter
    def cache_dir(self, cache_dir):
        if path.isdir(cache_dir):
            self._cache_dir = cache_dir
        else:
            raise ValueError('cache_dir must be an existing directory, '
                             'please create the path first!')
