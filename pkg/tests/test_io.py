# Copyright 2024 Baidu, Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file
# except in compliance with the License. You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software distributed under the
# License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND,
# either express or implied. See the License for the specific language governing permissions
# and limitations under the License.

"""
Tests of the potential, r-matrix and report files.
"""
from fractions import Fraction

import orjson
import pytest

from conftest import SIGMAS
from pygivental.action import RMatrix
from pygivental.cohft import reconstruct_descendants
from pygivental.exception import ParseError, SymmetryError
from pygivental.io.json_codec import dumps
from pygivental.io.potential_file import load_potential, parse_potential, save_potential
from pygivental.io.report import format_correlator, render, sigma_tildes
from pygivental.io.rmatrix_file import load_rmatrix, parse_rmatrix, save_rmatrix
from pygivental.model.enum import ReportFormat
from pygivental.utils import parse_rational


def _write(path, doc):
    path.write_bytes(orjson.dumps(doc))
    return str(path)


def test_sigma_short_hand(tmp_path):
    path = _write(tmp_path / 'sigma.pot.json', {'dimension': 2, 'sigma': {'3': '2/3', '4': '-5/7'}, 'degree_cap': 5})
    source = load_potential(path)
    assert source.table is None
    assert source.potential.degree_cap == 5
    assert source.potential.primary_correlator([2, 2, 2]) == Fraction(2, 3)
    assert source.potential.primary_correlator([2] * 4) == Fraction(-5, 7)


def test_potential_file_reads_back(tmp_path, sigma_potential):
    table = reconstruct_descendants(sigma_potential, 4, 1)
    path = str(tmp_path / 'f.pot.json')
    save_potential(path, sigma_potential, table)
    source = load_potential(path)
    assert source.potential == sigma_potential
    assert source.table == table
    assert source.potential.point == (0, 1)


def test_potential_file_is_validated():
    with pytest.raises(ParseError):
        parse_potential({'dimension': 3, 'sigma': {'3': '1'}})
    with pytest.raises(ParseError):
        parse_potential({'dimension': 2, 'sigma': {'2': '1'}})
    with pytest.raises(ParseError):
        parse_potential({'dimension': 2, 'potential': [{'monomial': [[3, 3]], 'coeff': '1'}]})
    # the unit axis must carry exactly the cubic 1/2 (t^1)^2 t^2
    with pytest.raises(ParseError):
        parse_potential({'dimension': 2, 'potential': [{'monomial': [[1, 3]], 'coeff': '1'}]})
    with pytest.raises(ParseError):
        parse_potential({'dimension': 2, 'sigma': {'3': '0.5'}})


def test_invalid_json_reports_line(tmp_path):
    path = tmp_path / 'bad.pot.json'
    path.write_bytes(b'{\n  "dimension": 2,\n  "sigma": {\n}}}\n')
    with pytest.raises(ParseError) as info:
        load_potential(str(path))
    assert info.value.line is not None
    with pytest.raises(ParseError):
        load_potential(str(tmp_path / 'missing.pot.json'))


def test_rmatrix_file_reads_back(tmp_path):
    r = RMatrix(2, {1: [[0, 3], [0, 0]], 2: [[Fraction(1, 2), 0], [0, Fraction(-1, 2)]]})
    path = str(tmp_path / 'r.rmat.json')
    save_rmatrix(path, r)
    assert load_rmatrix(path) == r
    assert parse_rmatrix({'dimension': 3, 'inversion': True}) == RMatrix.inversion(3)


def test_rmatrix_symmetry_violation_is_located(tmp_path):
    path = _write(tmp_path / 'bad.rmat.json',
                  {'dimension': 2, 'levels': [{'level': 1, 'matrix': [['1', '0'], ['0', '0']]}]})
    with pytest.raises(SymmetryError) as info:
        load_rmatrix(path)
    assert (info.value.level, info.value.mu, info.value.nu) == (1, 1, 2)
    assert path in str(info.value)


def test_rmatrix_file_is_validated():
    with pytest.raises(ParseError):
        parse_rmatrix({'dimension': 2, 'levels': [{'level': 0, 'matrix': [['0', '0'], ['0', '0']]}]})
    with pytest.raises(ParseError):
        parse_rmatrix({'dimension': 2, 'levels': [{'level': 1, 'matrix': [['0', '0']]}]})


def test_rationals_are_exact():
    assert parse_rational('-3/4') == Fraction(-3, 4)
    assert parse_rational(5) == 5
    for bad in ('0.75', '1e3', '1/0', True, 'x'):
        with pytest.raises(ParseError):
            parse_rational(bad)


def test_reports(sigma_potential):
    table = reconstruct_descendants(sigma_potential, 5, 1)
    assert sigma_tildes(table) == dict((k, SIGMAS[k]) for k in (3, 4, 5))
    assert format_correlator(0, [(0, 2)] * 5 + [(1, 1)]) == '<tau_0(2)^5 tau_1(1)>_0'
    doc = {'kind': 'graphs', 'status': 'ok', 'shapes': [],
           'caps': {'max_leaves': 3, 'max_vertices': 1, 'max_edges': 0, 'max_genus': 0, 'max_z_power': 0}}
    assert render(doc, ReportFormat.STRUCTURED) == dumps(doc)
    assert render(doc).decode('utf-8').startswith('graphs leaves<=3 vertices<=1')
