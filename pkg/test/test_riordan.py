#!/usr/bin/env python
# -*- coding: utf-8 -*-

from schroederbij import (RiordanTriangle, BivarPoly, az_from_uv, az_hills, az_little_hills,
                          triangle_from_az, uv_triangle, weighted_oracle,
                          weighted_oracle_triangle, specialize, row_sums, specialization_suite,
                          check_pascal, hill_triangle, InsufficientSequenceLength,
                          VerificationFailure)
import json
import pytest

u = BivarPoly.u()
v = BivarPoly.v()


def test_triangle_container():
    tri = RiordanTriangle([[1], [1, 1], [3, 2, 1]], kind='hills')
    assert tri[2, 1] == 2
    assert tri.n_rows == len(tri) == 3
    assert tri.row(2) == [3, 2, 1]
    assert tri.row_sums() == [1, 2, 6]
    assert tri.truncate(2) == RiordanTriangle([[1], [1, 1]])
    assert tri.map(lambda e: 2*e)[2, 0] == 6
    assert tri.to_csv() == '1\n1,1\n3,2,1'
    assert json.loads(tri.to_json()) == {'kind': 'hills', 'rows': [['1'], ['1', '1'],
                                                                    ['3', '2', '1']]}
    assert tri.to_markdown().splitlines()[0].startswith('|')
    assert 'Triangle hills' in str(tri)
    with pytest.raises(IndexError):
        tri[1, 2]
    with pytest.raises(ValueError):
        RiordanTriangle([[1], [1]])


def test_uv_entries():
    tri = uv_triangle(3)
    assert tri[0, 0] == 1
    assert tri[1, 0] == u
    assert tri[1, 1] == 1
    assert tri[2, 0] == u**2 + v + 1
    assert tri[2, 1] == 2*u
    assert json.loads(tri.to_json())['rows'][1][0] == [{'u': 1, 'v': 0, 'c': '1'}]


def test_uv_against_enumeration():
    assert uv_triangle(6) == weighted_oracle_triangle(6)
    assert weighted_oracle(2, 0) == u**2 + v + 1
    assert weighted_oracle(3, 3) == 1
    with pytest.raises(ValueError):
        weighted_oracle(2, 3)


def test_specializations():
    tri = uv_triangle(6)
    assert specialize(tri, 1, 1) == hill_triangle(6)
    assert specialize(tri, 0, 1) == hill_triangle(6, 'little')
    assert row_sums(specialize(tri, 1, 2))[:5] == [1, 2, 7, 32, 166]
    assert row_sums(specialize(tri, 2, 2))[:5] == [1, 3, 12, 57, 300]
    assert row_sums(specialize(tri, 1, 0)) == [1, 2, 5, 14, 42, 132, 429]
    with pytest.raises(TypeError):
        specialize(tri, 1.0, 1)


def test_pascal():
    assert check_pascal(12).ok
    assert specialize(uv_triangle(4), 1, -1).rows[4] == (1, 4, 6, 4, 1)


def test_az_sequences():
    assert az_from_uv(4).specialize(1, 1) == az_hills(4)
    assert az_from_uv(4).specialize(0, 1) == az_little_hills(4)
    assert az_hills(4).a == (1, 1, 2, 4)
    assert az_little_hills(4).z == (0, 2, 6, 18)
    assert 'Z_j' in str(az_hills(3))
    with pytest.raises(ValueError):
        az_from_uv(1)


def test_triangle_from_az():
    assert triangle_from_az(az_hills(8), 8) == hill_triangle(8)
    assert triangle_from_az(az_little_hills(8), 8) == hill_triangle(8, 'little')
    assert triangle_from_az(az_hills(1), 0).rows == ((1,),)
    with pytest.raises(InsufficientSequenceLength):
        triangle_from_az(az_hills(2), 5)
    with pytest.raises(ValueError):
        triangle_from_az(az_hills(2), -1)


def test_specialization_suite():
    report = specialization_suite()
    assert report.ok
    assert len(report.checks) == 16
    assert report.checks[0]['detail'] == 'A006318/A104219'


def test_specialization_suite_mismatch(tmp_path):
    data = tmp_path / 'specializations.dat'
    data.write_text('# u v sums ids\n'
                    '1 1 1,2,6,22,90 A006318 A104219\n'
                    '2 2 1,3,12,57,301 A047891 -\n')
    report = specialization_suite(filename=str(data))
    assert not report.ok
    assert report.checks[0]['ok']
    assert 'row 4 is 300, expected 301' in report.checks[1]['detail']
    with pytest.raises(VerificationFailure):
        specialization_suite(filename=str(data), raise_on_failure=True)
