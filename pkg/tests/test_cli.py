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
Tests of the givental command line tool.
"""
import os

import orjson
import pytest

from conftest import SIGMAS
from pygivental.cli.main import main
from pygivental.cohft import reconstruct_descendants
from pygivental.io.potential_file import save_potential
from pygivental.model.enum import ExitCode
from pygivental.utils import format_rational

GOLDEN = os.path.join(os.path.dirname(__file__), 'golden')


def _write(path, doc):
    path.write_bytes(orjson.dumps(doc))
    return str(path)


@pytest.fixture
def sigma_file(tmp_path):
    sigmas = dict(('%d' % k, format_rational(v)) for k, v in SIGMAS.items())
    return _write(tmp_path / 'sigma.pot.json', {'dimension': 2, 'sigma': sigmas, 'degree_cap': 7})


@pytest.fixture
def inversion_file(tmp_path):
    return _write(tmp_path / 'inv.rmat.json', {'dimension': 2, 'inversion': True})


def _transform(sigma_file, inversion_file, output, *extra):
    return main(['transform', '--input', sigma_file, '--rmatrix', inversion_file, '--cap', '5',
                 '--output', output] + list(extra))


def test_transform_reports_inverted_sigma(tmp_path, sigma_file, inversion_file):
    output = str(tmp_path / 'out.txt')
    assert _transform(sigma_file, inversion_file, output, '--route', 'graph') == ExitCode.OK.value
    with open(output) as fp:
        lines = fp.read().splitlines()
    expected = SIGMAS[5] + 10 * SIGMAS[4] + 20 * SIGMAS[3]
    assert lines[0].endswith(': ok')
    assert 'sigma~_5 = %s' % format_rational(expected) in lines
    assert '<tau_0(2)^5>_0 = %s' % format_rational(expected) in lines


def test_transform_routes_agree(tmp_path, sigma_file, inversion_file):
    output = str(tmp_path / 'both.json')
    assert _transform(sigma_file, inversion_file, output, '--route', 'both', '--report', 'structured') \
        == ExitCode.OK.value
    with open(output, 'rb') as fp:
        doc = orjson.loads(fp.read())
    assert doc['status'] == 'ok'
    assert doc['mismatches'] == []


def test_transform_is_deterministic(tmp_path, sigma_file, inversion_file, monkeypatch):
    outputs = []
    for threads in ('1', '4'):
        monkeypatch.setenv('GIVENTAL_THREADS', threads)
        output = str(tmp_path / ('run%s.json' % threads))
        assert _transform(sigma_file, inversion_file, output, '--route', 'graph', '--report', 'structured',
                          '--emit-graphs') == ExitCode.OK.value
        with open(output, 'rb') as fp:
            outputs.append(fp.read())
    assert outputs[0] == outputs[1]
    assert orjson.loads(outputs[0])['decorated']


def test_symmetry_violation_exit_code(tmp_path, sigma_file):
    bad = _write(tmp_path / 'bad.rmat.json',
                 {'dimension': 2, 'levels': [{'level': 1, 'matrix': [['1', '0'], ['0', '0']]}]})
    output = str(tmp_path / 'out.txt')
    assert _transform(sigma_file, bad, output) == ExitCode.PARSE.value


_SIGMA_DOC = {'dimension': 2, 'sigma': {'3': '1'}, 'degree_cap': 4}


@pytest.mark.parametrize('doc', [
    {'dimension': 2, 'potential': [{'monomial': 5, 'coeff': '1'}]},
    dict(_SIGMA_DOC, correlators=5),
    dict(_SIGMA_DOC, correlators=[{'insertions': 7, 'value': '1'}]),
])
def test_malformed_potential_exit_code(tmp_path, doc):
    bad = _write(tmp_path / 'bad.pot.json', doc)
    output = str(tmp_path / 'out.txt')
    assert main(['invert', '--input', bad, '--cap', '4', '--output', output]) == ExitCode.PARSE.value


def test_malformed_levels_exit_code(tmp_path, sigma_file):
    bad = _write(tmp_path / 'bad.rmat.json', {'dimension': 2, 'levels': 5})
    output = str(tmp_path / 'out.txt')
    assert _transform(sigma_file, bad, output) == ExitCode.PARSE.value


def test_usage_errors(tmp_path, sigma_file):
    assert main(['transform']) == ExitCode.PARSE.value
    assert main(['frobnicate']) == ExitCode.PARSE.value
    assert main(['invert', '--input', str(tmp_path / 'missing.pot.json')]) == ExitCode.PARSE.value
    assert main(['transform', '--input', sigma_file, '--cap', '-1']) == ExitCode.PARSE.value


def test_cap_too_small(tmp_path, sigma_file, inversion_file):
    output = str(tmp_path / 'out.txt')
    assert main(['transform', '--input', sigma_file, '--rmatrix', inversion_file, '--cap', '2',
                 '--output', output]) == ExitCode.CAP.value
    assert main(['invert', '--input', sigma_file, '--cap', '9', '--output', output]) == ExitCode.CAP.value


def test_invert(tmp_path, sigma_file):
    output = str(tmp_path / 'invert.txt')
    assert main(['invert', '--input', sigma_file, '--cap', '5', '--output', output]) == ExitCode.OK.value
    with open(output) as fp:
        head = fp.readline()
    assert head.startswith('invert n=2 degree_cap=5 route=both: ok')


def test_invert_detects_perturbed_correlators(tmp_path, sigma_potential):
    table = reconstruct_descendants(sigma_potential, 5, 2)
    key = (0, ((0, 2),) * 5)
    path = str(tmp_path / 'perturbed.pot.json')
    save_potential(path, sigma_potential, table.with_entries({key: table.correlator(*key) + 1}))
    output = str(tmp_path / 'invert.json')
    assert main(['invert', '--input', path, '--cap', '5', '--route', 'graph', '--report', 'structured',
                 '--output', output]) == ExitCode.MISMATCH.value
    with open(output, 'rb') as fp:
        doc = orjson.loads(fp.read())
    assert doc['status'] == 'mismatch'
    assert [row['monomial'] for row in doc['rows'] if not row['equal']] == ['t[0,2]^5']


def test_hierarchy(tmp_path, sigma_file):
    output = str(tmp_path / 'hierarchy.txt')
    assert main(['hierarchy', '--input', sigma_file, '--cap', '4', '--pmax', '1', '--output', output]) \
        == ExitCode.OK.value
    with open(output) as fp:
        text = fp.read()
    assert 'level 0: spans equal, change of basis 1 0 ; 1 -1' in text


def test_graphs(tmp_path):
    output = str(tmp_path / 'graphs.txt')
    assert main(['graphs', '--cap', '5', '--genus-cap', '0', '--output', output]) == ExitCode.OK.value
    with open(output) as fp:
        assert fp.readline().startswith('graphs leaves<=5 vertices<=3 edges<=2 genus<=0 z_power<=2')


@pytest.mark.parametrize('report, golden', [('text', 'graphs_cap3_genus0.txt'),
                                            ('structured', 'graphs_cap3_genus0.json')])
def test_graphs_matches_golden(tmp_path, report, golden):
    output = str(tmp_path / golden)
    assert main(['graphs', '--cap', '3', '--genus-cap', '0', '--report', report, '--output', output]) \
        == ExitCode.OK.value
    with open(output, 'rb') as fp, open(os.path.join(GOLDEN, golden), 'rb') as expected:
        assert fp.read() == expected.read()
