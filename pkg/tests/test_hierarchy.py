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
Tests of the Hamiltonian densities and the span comparison.
"""
from fractions import Fraction

import pytest

from conftest import random_three_dimensional
from pygivental.exception import CapError, DimensionMismatchError
from pygivental.hierarchy import (
    PrincipalHierarchy,
    compare_level,
    compare_spans,
    exp_u,
    infinitesimal_deformation,
    theta,
    u_operator,
)
from pygivental.series import ONE, Monomial, TruncatedSeries, Variable

V1 = Monomial([((0, 1), 1)])
V2 = Monomial([((0, 2), 1)])


def _series(terms, n=2, cap=4):
    return TruncatedSeries(n, cap, 1, terms)


def test_u_operator_on_coordinates():
    assert u_operator(_series({V1: 1})).terms == {V1 * V2: -1}
    assert u_operator(_series({V2: 1})).is_zero()
    assert u_operator(_series({ONE: 1})).terms == {V2: -1}


def test_exp_u_of_constant():
    assert exp_u(_series({ONE: 1})).terms == {ONE: 1, V2: -1}


def test_primary_densities(sigma_potential):
    assert theta(sigma_potential, 1, 0, 4).value.terms == {V2: 1}
    assert theta(sigma_potential, 2, 0, 4).value.terms == {V1: 1}


def test_densities_need_levels(sigma_potential):
    hierarchy = PrincipalHierarchy(sigma_potential, 4, 0)
    with pytest.raises(CapError):
        hierarchy.theta(1, 2)
    with pytest.raises(ValueError):
        hierarchy.theta(3, 0)


def test_hierarchy_needs_jet(sigma_potential):
    with pytest.raises(CapError):
        PrincipalHierarchy(sigma_potential, 6, 1)


@pytest.mark.parametrize('p', [0, 1, 2])
def test_two_dimensional_spans_agree(sigma_potential, p):
    hierarchy = PrincipalHierarchy(sigma_potential, 5, 2)
    result = compare_level(hierarchy, p)
    assert result.equal
    assert result.change_of_basis == [[1, 0], [1, -1]]
    assert result.to_dict()['changeOfBasis'] == [['1', '0'], ['1', '-1']]


def test_three_dimensional_middle_densities_coincide(rng):
    hierarchy = PrincipalHierarchy(random_three_dimensional(rng, 7), 5, 2)
    for p in (0, 1, 2):
        result = compare_level(hierarchy, p)
        assert result.equal
        assert result.coincident == {2: True}
        assert result.change_of_basis == [[1, 0, 0], [0, 1, 0], [0, 1, -1]]


@pytest.mark.parametrize('alpha, p', [(1, 0), (2, 0), (1, 1), (2, 1)])
def test_infinitesimal_deformation(sigma_potential, alpha, p):
    found, expected = infinitesimal_deformation(sigma_potential, alpha, p, 5)
    assert found.value.sub(expected.value).is_zero()


def test_span_comparison_change_of_basis():
    a = [_series({V1: 1}), _series({V2: 1})]
    b = [_series({V1: 1, V2: 1}), _series({V1: 1, V2: -1})]
    result = compare_spans(a, b)
    assert result.equal
    assert result.change_of_basis == [[1, 1], [1, -1]]


def test_span_comparison_certificate():
    a = [_series({V1: 1}), _series({V1 * V1: 1})]
    b = [_series({V1: 1}), _series({V1 * V2: 2})]
    result = compare_spans(a, b, level=3)
    assert not result.equal
    certificate = result.certificate
    assert (certificate.family, certificate.index) == ('B', 1)
    for member in a:
        assert sum(c * member.coefficient(m) for m, c in certificate.functional) == 0
    assert sum(c * b[1].coefficient(m) for m, c in certificate.functional) == certificate.pairing
    assert certificate.pairing != 0
    assert result.to_dict()['level'] == 3


def test_span_comparison_modulo_constants():
    a = [_series({V1: 1, ONE: 1})]
    b = [_series({V1: 1})]
    assert not compare_spans(a, b).equal
    assert compare_spans(a, b, modulo_constants=True).equal


def test_span_comparison_rejects_mixed_dimensions():
    with pytest.raises(DimensionMismatchError):
        compare_spans([_series({V1: 1})], [_series({V1: 1}, n=3)])
