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
Tests of the inversion symmetry and its Givental form.
"""
import itertools
from fractions import Fraction

import pytest

from conftest import SIGMAS
from pygivental.action import RMatrix
from pygivental.cohft import reconstruct_descendants
from pygivental.exception import CapError, SingularPointError
from pygivental.inversion import (
    InversionData,
    aut2_order,
    compose_coordinates,
    givental_potential,
    h_correlator,
    invert_coordinate_series,
    invert_coordinates,
    invert_potential,
    inverse_coordinate_series,
    inverse_coordinates,
    inverted_correlator,
    verify_inversion_theorem,
)
from pygivental.inversion.coordinates import is_identity
from pygivental.model.enum import Route
from pygivental.series import Monomial


def test_inversion_of_points():
    image = invert_coordinates((1, 2, 3))
    assert image == (Fraction(5, 3), Fraction(2, 3), Fraction(-1, 3))
    assert inverse_coordinates(image) == (1, 2, 3)


def test_inversion_is_singular_on_the_last_axis():
    with pytest.raises(SingularPointError):
        invert_coordinates((1, 2, 0))
    with pytest.raises(SingularPointError):
        inverse_coordinates((0, 0))


@pytest.mark.parametrize('n', [2, 3, 4])
def test_coordinate_series_are_inverse(n):
    images = compose_coordinates(invert_coordinate_series(n, 5), inverse_coordinate_series(n, 5))
    assert is_identity(images, 5)


def test_aut2_order():
    assert aut2_order(2, 3, 6) == 1
    assert aut2_order(2, 2, 6) == 2
    assert aut2_order(2, 3, 5) == 2
    assert aut2_order(3, 3, 5) == 8
    with pytest.raises(ValueError):
        aut2_order(1, 2, 5)


def test_inverted_sigma_5(sigma_potential):
    expected = SIGMAS[5] + 10 * SIGMAS[4] + 20 * SIGMAS[3]
    assert h_correlator(sigma_potential, [], 5) == expected
    assert inverted_correlator(sigma_potential, [2] * 5) == expected
    assert invert_potential(sigma_potential, 5).primary_correlator([2] * 5) == expected


def test_sector_correlators_match_closed_form(three_dimensional_potential):
    inverted = invert_potential(three_dimensional_potential, 5)
    for k in range(3, 6):
        for mus in itertools.combinations_with_replacement(range(1, 4), k):
            assert inverted_correlator(three_dimensional_potential, mus) == inverted.primary_correlator(mus)


def test_inverted_potential_needs_jet(sigma_potential):
    with pytest.raises(CapError):
        invert_potential(sigma_potential, 8)


def test_inversion_data():
    data = InversionData(3)
    assert data.r_matrix == RMatrix.inversion(3)
    assert data.source_point == (0, 0, 1)
    assert data.target_point == (0, 0, -1)


def test_givental_form_has_two_routes(sigma_potential):
    with pytest.raises(ValueError):
        givental_potential(sigma_potential, 5, Route.COORD)


@pytest.mark.parametrize('route', [Route.COORD, Route.GRAPH, Route.OPERATOR])
def test_two_dimensional_theorem(sigma_potential, route):
    report = verify_inversion_theorem(sigma_potential, 5 if route == Route.OPERATOR else 6, route)
    assert report.ok
    assert len(report.rows) > 0


def test_three_dimensional_theorem(three_dimensional_potential):
    report = verify_inversion_theorem(three_dimensional_potential, 6, Route.BOTH)
    assert report.ok
    assert all(row.givental is not None and row.definition is not None for row in report.rows)


def test_perturbed_correlator_is_detected(sigma_potential):
    table = reconstruct_descendants(sigma_potential, 5, 2)
    key = (0, ((0, 2),) * 5)
    broken = table.with_entries({key: table.correlator(*key) + 1})
    report = verify_inversion_theorem(sigma_potential, 5, Route.GRAPH, table=broken)
    assert not report.ok
    assert [row.monomial for row in report.mismatches()] == [Monomial([((0, 2), 5)])]
