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
This module provide consistency checks of genus zero correlator tables against
the dilaton equation and the topological recursion relation.

A defect is reported as a namedtuple carrying the correlator, the two values
that should agree and, for the TRR, the pivot and companion insertions used.
"""
import itertools
import logging
from collections import namedtuple
from fractions import Fraction

from pygivental.cohft.correlator_table import Insertion, UNIT_DILATON, dilaton_reduce
from pygivental.cohft.reconstruction import trr_sum

_logger = logging.getLogger(__name__)

DilatonDefect = namedtuple('DilatonDefect', ['insertions', 'value', 'expected'])
TrrDefect = namedtuple('TrrDefect', ['insertions', 'pivot', 'companions', 'value', 'expected'])


def genus_zero_keys(table):
    """Every sorted genus zero insertion multiset the table caps cover."""
    caps = table.caps
    alphabet = [Insertion(d, mu) for d in range(caps.max_level + 1)
                for mu in range(1, table.dimension + 1)]
    for k in range(3, caps.max_insertions + 1):
        for key in itertools.combinations_with_replacement(alphabet, k):
            if sum(ins.d for ins in key) <= caps.max_level:
                yield key


def trr_value(table, insertions, pivot, first, second):
    """
    Right-hand side of the TRR read from the table, for a descendant pivot and
    two companions given as positions in the insertion list.

    :raise ValueError: the pivot has no descendant or the positions collide
    :raise CapError: a factor lies outside the table caps
    """
    return trr_sum(table.dimension, lambda factor: table.correlator(0, factor),
                   insertions, pivot, first, second)


def dilaton_defects(table):
    """
    Genus zero correlators containing tau_1(1) whose value differs from
    (k - 2) times the correlator with tau_1(1) removed.

    :return: list of DilatonDefect, empty when the dilaton equation holds
    """
    defects = []
    checked = 0
    for key in genus_zero_keys(table):
        if UNIT_DILATON not in key:
            continue
        factor, reduced = dilaton_reduce(0, key)
        expected = factor * table.correlator(0, reduced) if len(reduced) >= 3 else Fraction(0)
        value = table.correlator(0, key)
        checked += 1
        if value != expected:
            defects.append(DilatonDefect(key, value, expected))
    _logger.debug('dilaton equation checked on %d correlators, %d defects', checked, len(defects))
    return defects


def trr_choices(key):
    """
    Distinct (pivot, first, second) position triples of a sorted key; positions
    holding equal insertions give the same relation and are visited once.
    """
    seen = set()
    for pivot, ins in enumerate(key):
        if ins.d < 1:
            continue
        others = [i for i in range(len(key)) if i != pivot]
        for first, second in itertools.combinations(others, 2):
            label = (ins, key[first], key[second])
            if label in seen:
                continue
            seen.add(label)
            yield pivot, first, second


def trr_defects(table):
    """
    Genus zero descendant correlators for which some choice of pivot and
    companions breaks the topological recursion relation.

    :return: list of TrrDefect, empty when every choice agrees with the table
    """
    defects = []
    checked = 0
    for key in genus_zero_keys(table):
        value = table.correlator(0, key)
        for pivot, first, second in trr_choices(key):
            expected = trr_value(table, key, pivot, first, second)
            checked += 1
            if value != expected:
                defects.append(TrrDefect(key, key[pivot], (key[first], key[second]), value, expected))
    _logger.debug('TRR checked on %d choices, %d defects', checked, len(defects))
    return defects
