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
Shared fixtures of the pygivental test suite.
"""
import itertools
import random
from fractions import Fraction

import pytest
import sympy

from pygivental.action.rmatrix import RMatrix
from pygivental.cohft.correlator_table import CorrelatorTable, Insertion, TableCaps
from pygivental.cohft.potential import FrobeniusPotential
from pygivental.utils import dual_index

SIGMAS = {3: Fraction(2, 3), 4: Fraction(-5, 7), 5: Fraction(3, 11), 6: Fraction(1, 4), 7: Fraction(-2, 5)}


def random_rational(rng, size=5):
    """a small non-zero rational"""
    numerator = 0
    while not numerator:
        numerator = rng.randint(-size, size)
    return Fraction(numerator, rng.randint(1, size))


def random_sigma_potential(rng, degree_cap=6):
    """F = 1/2 (t^1)^2 t^2 + sum_k sigma_k (t^2)^k / k! with random sigma_k"""
    sigmas = dict((k, random_rational(rng)) for k in range(3, degree_cap + 1))
    return FrobeniusPotential.two_dimensional(sigmas, degree_cap)


def random_three_dimensional(rng, degree_cap=6):
    """WDVV solution in dimension 3 from random free coefficients"""
    free = {}
    for order in range(3, degree_cap + 1):
        for b in range(min(order, 2) + 1):
            free[(order - b, b)] = random_rational(rng)
    return FrobeniusPotential.three_dimensional(free, degree_cap)


def random_rmatrix(rng, dimension, max_level=3):
    """
    r_l for l = 1..max_level whose raised bivector is symmetric for odd l and
    skew-symmetric for even l.
    """
    levels = {}
    for level in range(1, max_level + 1):
        sign = 1 if level % 2 else -1
        bivector = [[Fraction(0)] * dimension for _ in range(dimension)]
        for mu in range(dimension):
            for nu in range(mu, dimension):
                if mu == nu and sign < 0:
                    continue
                value = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
                bivector[mu][nu] = value
                bivector[nu][mu] = sign * value
        # (r_l)^mu_rho = (r_l)^{mu, n+1-rho}
        matrix = [[bivector[mu][dual_index(dimension, rho + 1) - 1] for rho in range(dimension)]
                  for mu in range(dimension)]
        levels[level] = sympy.Matrix(matrix)
    return RMatrix(dimension, levels)


def random_genus_zero_table(rng, dimension, max_insertions, max_level, density=Fraction(1, 6)):
    """sparse tame genus zero table, complete on its caps"""
    alphabet = [Insertion(d, mu) for d in range(max_level + 1) for mu in range(1, dimension + 1)]
    entries = {}
    for k in range(3, max_insertions + 1):
        budget = min(k - 3, max_level)
        letters = [ins for ins in alphabet if ins.d <= budget]
        for key in itertools.combinations_with_replacement(letters, k):
            if sum(ins.d for ins in key) > budget:
                continue
            if rng.random() < density:
                entries[(0, key)] = random_rational(rng, 3)
    return CorrelatorTable(dimension, entries, TableCaps(0, max_insertions, max_level))


@pytest.fixture
def rng():
    return random.Random(20240517)


@pytest.fixture
def sigma_potential():
    """the two dimensional normal form with fixed sigma_3..sigma_7"""
    return FrobeniusPotential.two_dimensional(SIGMAS, 7)


@pytest.fixture
def three_dimensional_potential(rng):
    return random_three_dimensional(rng, 6)
