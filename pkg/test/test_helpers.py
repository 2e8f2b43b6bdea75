#!/usr/bin/env python
# -*- coding: utf-8 -*-

from schroederbij import Report, VerificationFailure
from schroederbij.helpers import (make_hash_md5, parse_bits, parse_trits, format_digits,
                                  histogram, format_histogram, compare_histograms,
                                  load_specializations, read_bfile, compare_with_bfile)
import pytest


def test_make_hash_md5():
    assert make_hash_md5([1, 2, 3]) == make_hash_md5((1, 2, 3))
    assert make_hash_md5({'a': 1, 'b': {2, 1}}) == make_hash_md5({'b': {1, 2}, 'a': 1})
    assert make_hash_md5(['rho', 5]) != make_hash_md5(['rho', 6])


def test_digits():
    assert parse_bits('1011110') == (1, 0, 1, 1, 1, 1, 0)
    assert parse_bits('') == ()
    assert parse_bits('-') == ()
    assert parse_trits(' 102210 ') == (1, 0, 2, 2, 1, 0)
    assert format_digits((0, 2, 1)) == '021'
    with pytest.raises(ValueError):
        parse_bits('102')
    with pytest.raises(TypeError):
        parse_trits(12)


def test_histograms():
    hist = histogram([3, 1, 3, 2, 3])
    assert hist == {1: 1, 2: 1, 3: 3}
    assert list(hist) == [1, 2, 3]
    assert format_histogram(hist) == '{1: 1, 2: 1, 3: 3}'
    assert compare_histograms(hist, {1: 1, 2: 1, 3: 3}) is None
    assert compare_histograms(hist, {1: 1, 3: 3, 4: 2}) == (2, 1, 0)


def test_load_specializations():
    table = load_specializations()
    assert len(table) == 16
    assert table[0] == {'u': 1, 'v': 1, 'row_sums': (1, 2, 6, 22, 90),
                        'row_sums_id': 'A006318', 'triangle_id': 'A104219'}
    assert table[2]['triangle_id'] is None
    assert sum(1 for entry in table if entry['row_sums_id'] is None) == 1


def test_bfile(tmp_path):
    bfile = tmp_path / 'b006318.txt'
    bfile.write_text('# large Schroeder numbers\n0 1\n1 2\n\n2 6\n3 22\n4 90\n5 394\n')
    assert read_bfile(str(bfile)) == {0: 1, 1: 2, 2: 6, 3: 22, 4: 90, 5: 394}
    assert compare_with_bfile([1, 2, 6, 22], str(bfile)).ok
    assert compare_with_bfile([2, 6, 22], str(bfile), offset=1).ok
    report = compare_with_bfile([1, 2, 6, 23], str(bfile))
    assert not report.ok
    assert 'index 3: computed 23, b-file 22' in report.checks[0]['detail']
    with pytest.warns(UserWarning):
        report = compare_with_bfile([1, 2, 6, 22, 90, 394, 1806], str(bfile))
    assert report.ok
    assert report.checks[0]['instances'] == 6


def test_bfile_malformed(tmp_path):
    bfile = tmp_path / 'broken.txt'
    bfile.write_text('0 1\n1\n')
    with pytest.raises(ValueError):
        read_bfile(str(bfile))


def test_report():
    report = Report('demo')
    assert report.check('first', 3, True)
    assert not report.check('second', 2, False, 'counterexample UD')
    report.stop()
    assert not report.ok
    assert report.first_failure()['property'] == 'second'
    assert report.failure_message() == 'demo: property "second" failed: counterexample UD'
    assert 'FAIL' in str(report)
    with pytest.raises(VerificationFailure) as info:
        report.raise_for_failure()
    assert info.value.report is report
    copy = Report.from_dict(report.to_dict())
    assert copy.to_dict() == report.to_dict()


def test_report_extend():
    inner = Report('inner')
    inner.check('holds', 1, True)
    outer = Report('outer')
    outer.extend(inner, prefix='inner: ')
    assert outer.checks[0]['property'] == 'inner: holds'
    assert outer.ok
    assert outer.raise_for_failure() is outer
    assert outer.failure_message() == 'outer: all properties hold'
