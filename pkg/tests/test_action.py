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
Tests of r-matrices, the quantized action and its factorized form.
"""
import random
from fractions import Fraction

import pytest
import sympy

from conftest import random_genus_zero_table, random_rmatrix
from pygivental.action import (
    Region,
    RMatrix,
    action_input_caps,
    apply_factorized,
    divide_by_z_plus_w,
    edge_kernel,
    exponentiate_action,
    factorize,
    product_series,
    quantize,
)
from pygivental.cohft import table_to_partition_function
from pygivental.exception import CapError, DivisionRemainderError, SymmetryError
from pygivental.series import Variable


def _partition_function(table, region, genus_cap=0):
    need = action_input_caps(region.degree, region.vdim)
    return table_to_partition_function(table, degree_cap=need.degree, genus_cap=genus_cap, vdim_cap=need.vdim)


def test_symmetry_violation_is_located():
    with pytest.raises(SymmetryError) as info:
        RMatrix(2, {1: [[1, 0], [0, 0]]})
    assert (info.value.level, info.value.mu, info.value.nu) == (1, 1, 2)
    with pytest.raises(SymmetryError) as info:
        RMatrix(2, {2: [[1, 0], [0, 1]]})
    assert info.value.level == 2
    # skew at even level
    RMatrix(2, {2: [[1, 0], [0, -1]]})


def test_inversion_matrix():
    r = RMatrix.inversion(3)
    assert r.levels == [1]
    assert r.entry(1, 1, 3) == 1
    assert r.raised(1, 1, 1) == 1
    assert r.entry(1, 3, 1) == 0


def test_quantized_operator_of_one_level():
    op = quantize(RMatrix(1, {1: [[3]]}), 1)
    assert op.shifts == [(-3, Variable(2, 1))]
    assert op.linear == [(3, 1, 1, 1)]
    assert op.quadratic == [(Fraction(-3, 2), Variable(0, 1), Variable(0, 1))]


def test_z_plus_w_divides_every_admissible_numerator(rng):
    for _ in range(100):
        n = rng.randint(1, 4)
        r = random_rmatrix(rng, n, rng.randint(1, 3))
        quotient = edge_kernel(r, 5)
        numerator = product_series(r, 5)
        for (a, b), value in numerator.items():
            if a + b == 0:
                continue
            rebuilt = sympy.zeros(n, n)
            if a:
                rebuilt += quotient[(a - 1, b)]
            if b:
                rebuilt += quotient[(a, b - 1)]
            assert rebuilt == value


def test_division_remainder_is_reported():
    numerator = {(1, 0): sympy.eye(2), (0, 1): sympy.zeros(2, 2)}
    with pytest.raises(DivisionRemainderError) as info:
        divide_by_z_plus_w(numerator, 1, 2)
    assert info.value.degree == 1


def test_zero_r_is_identity(rng):
    table = random_genus_zero_table(rng, 2, 7, 4)
    region = Region(5, 2)
    z = _partition_function(table, region)
    r = RMatrix.zero(2)
    assert exponentiate_action(r, z, region).difference_within(z, 5, 2) == {}
    assert apply_factorized(r, z, region).difference_within(z, 5, 2) == {}


def test_action_needs_headroom(rng):
    table = random_genus_zero_table(rng, 2, 5, 2)
    z = table_to_partition_function(table, degree_cap=5, genus_cap=0, vdim_cap=2)
    with pytest.raises(CapError):
        exponentiate_action(RMatrix.inversion(2), z, Region(5, 2))


@pytest.mark.parametrize('dimension, region, seed', [
    (2, Region(5, 2), 1),
    (2, Region(5, 2), 2),
    (2, Region(4, 2), 3),
    (3, Region(4, 1), 4),
])
def test_factorized_action_matches_exponential(dimension, region, seed):
    rng = random.Random(seed)
    need = action_input_caps(region.degree, region.vdim)
    table = random_genus_zero_table(rng, dimension, min(need.degree, need.vdim + 3), need.vdim)
    z = _partition_function(table, region)
    r = random_rmatrix(rng, dimension, 3)
    expected = exponentiate_action(r, z, region)
    found = apply_factorized(r, z, region)
    assert found.difference_within(expected, region.degree, region.vdim) == {}


def test_factorized_coefficients_of_one_level():
    factorized = factorize(RMatrix(1, {1: [[3]]}), 3)
    assert factorized.v_coefficient(0, 0) == sympy.Matrix([[Fraction(-3, 2)]])
    assert factorized.v_coefficient(1, 0) == sympy.Matrix([[Fraction(-9, 4)]])
    assert factorized.w_coefficient(1) == sympy.zeros(1, 1)
    assert factorized.w_coefficient(2) == sympy.Matrix([[-3]])
    assert factorized.w_coefficient(3) == sympy.Matrix([[Fraction(-9, 2)]])
    with pytest.raises(CapError):
        factorized.w_coefficient(5)
