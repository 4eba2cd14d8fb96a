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
Tests of correlator tables, Frobenius potentials and genus zero reconstruction.
"""
from fractions import Fraction

import pytest

from conftest import SIGMAS, random_genus_zero_table
from pygivental.cohft import (
    CorrelatorTable,
    DescendantReconstructor,
    FrobeniusPotential,
    TableCaps,
    dilaton_defects,
    dilaton_reduce,
    log_partition_function,
    partition_function_to_table,
    reconstruct_descendants,
    series_to_table,
    table_to_partition_function,
    trr_defects,
    trr_value,
    wdvv_defect,
)
from pygivental.exception import CapError
from pygivental.series import Monomial


def test_table_is_symmetric_and_drops_unstable_entries():
    table = CorrelatorTable(2, {
        (0, ((0, 2), (0, 1), (0, 1))): 1,
        (0, ((0, 1), (0, 2))): 5,
        (1, ((0, 1),)): 0,
    })
    assert len(table) == 1
    assert table.correlator(0, [(0, 1), (0, 2), (0, 1)]) == 1
    assert table.correlator(0, [(0, 2), (0, 2), (0, 2)]) == 0


def test_table_rejects_wild_entries():
    with pytest.raises(ValueError):
        CorrelatorTable(2, {(0, ((1, 1), (0, 1), (0, 2))): 1})


def test_correlator_outside_caps():
    table = CorrelatorTable(2, {(0, ((0, 1), (0, 1), (0, 2))): 1}, TableCaps(0, 4, 1))
    assert table.correlator(0, [(1, 2), (0, 1), (0, 1), (0, 2)]) == 0
    with pytest.raises(CapError):
        table.correlator(0, [(0, 1)] * 5)
    with pytest.raises(CapError):
        table.correlator(1, [(0, 1)])


def test_genus_zero_primary_coefficient():
    table = CorrelatorTable(2, {(0, ((0, 1), (0, 1), (0, 2))): 1})
    log_z = log_partition_function(table)
    assert log_z.coefficient(Monomial([((0, 1), 2), ((0, 2), 1)], -1)) == Fraction(1, 2)


def test_partition_function_reads_back(rng):
    table = random_genus_zero_table(rng, 2, 5, 2, density=Fraction(1, 3))
    assert len(table) > 0
    assert series_to_table(log_partition_function(table)) == table
    assert partition_function_to_table(table_to_partition_function(table)) == table


def test_dilaton_reduce():
    factor, reduced = dilaton_reduce(1, [(0, 2), (1, 1)])
    assert factor == 1
    assert reduced == ((0, 2),)
    with pytest.raises(ValueError):
        dilaton_reduce(0, [(0, 1), (0, 1), (0, 2)])


def test_primary_correlators_of_two_dimensional_potential(sigma_potential):
    assert sigma_potential.primary_correlator([1, 1, 2]) == 1
    assert sigma_potential.primary_correlator([2] * 5) == SIGMAS[5]
    assert sigma_potential.primary_correlator([1, 2, 2, 2]) == 0
    with pytest.raises(CapError):
        sigma_potential.primary_correlator([2] * 8)


def test_normal_form_is_enforced():
    with pytest.raises(ValueError):
        FrobeniusPotential.two_dimensional({2: 1}, 5)
    with pytest.raises(ValueError):
        FrobeniusPotential.normal_form(2, {Monomial([((0, 1), 1), ((0, 2), 3)]): 1}, degree_cap=5)


def test_wdvv_holds_for_constructed_potentials(sigma_potential, three_dimensional_potential):
    assert wdvv_defect(sigma_potential) == {}
    assert wdvv_defect(three_dimensional_potential) == {}


def test_wdvv_defect_found():
    broken = FrobeniusPotential.normal_form(3, {Monomial([((0, 3), 4)]): 1}, degree_cap=5)
    assert wdvv_defect(broken)


def test_reconstruction_needs_long_enough_jet(sigma_potential):
    with pytest.raises(CapError):
        reconstruct_descendants(sigma_potential, 8)


def test_reconstructed_table_satisfies_dilaton_and_trr(sigma_potential, three_dimensional_potential):
    for potential, cap in ((sigma_potential, 7), (three_dimensional_potential, 6)):
        table = reconstruct_descendants(potential, cap, 3)
        assert table.correlator(0, [(1, 1), (0, 2), (0, 2), (0, 2)]) == table.correlator(0, [(0, 2)] * 3)
        assert dilaton_defects(table) == []
        assert trr_defects(table) == []


def test_perturbed_table_breaks_trr(sigma_potential):
    table = reconstruct_descendants(sigma_potential, 5, 2)
    key = (0, ((1, 2), (0, 2), (0, 2), (0, 2)))
    broken = table.with_entries({key: table.correlator(*key) + 1})
    assert trr_defects(broken)


def test_table_trr_matches_reconstructor(sigma_potential):
    reconstructor = DescendantReconstructor(sigma_potential, 6, 3)
    table = reconstructor.table()
    key = [(1, 1), (1, 2), (0, 2), (0, 2), (0, 2), (0, 2)]
    expected = reconstructor.correlator(key)
    assert reconstructor.trr_rhs(key, 1, 2, 3) == expected
    assert trr_value(table, key, 1, 2, 3) == expected
    with pytest.raises(ValueError):
        trr_value(table, key, 2, 3, 4)
