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
This module provide the genus zero descendant correlators of a Frobenius
potential, reconstructed with the topological recursion relation

    <tau_{d1}(a1) tau_{d2}(a2) tau_{d3}(a3) D>_0
        = sum <tau_{d1-1}(a1) tau_0(l) D'>_0 eta^{ls} <tau_0(s) tau_{d2}(a2) tau_{d3}(a3) D''>_0

summed over the splittings D = D' + D'' of the labelled remaining insertions.
"""
import itertools
import logging
from fractions import Fraction

from builtins import str

from pygivental.cohft.correlator_table import CorrelatorTable, Insertion, TableCaps
from pygivental.exception import CapError
from pygivental.utils import dual_index

_logger = logging.getLogger(__name__)


def trr_sum(n, correlator, insertions, pivot, first, second):
    """
    Right-hand side of the TRR for a descendant pivot and two companions given
    as positions in the insertion list.

    Args:
        n (int): number of primary fields
        correlator (callable): genus zero correlator of a list of Insertion

    :raise ValueError: the pivot has no descendant or the positions collide
    """
    insertions = [Insertion(d, mu) for d, mu in insertions]
    if len(set((pivot, first, second))) != 3:
        raise ValueError('pivot and companions must be distinct positions.')
    top = insertions[pivot]
    if top.d < 1:
        raise ValueError('TRR pivot must carry a descendant.')
    lowered = Insertion(top.d - 1, top.mu)
    pair = [insertions[first], insertions[second]]
    rest = [ins for i, ins in enumerate(insertions) if i not in (pivot, first, second)]
    total = Fraction(0)
    for mask in range(1 << len(rest)):
        left = [rest[i] for i in range(len(rest)) if mask >> i & 1]
        right = [rest[i] for i in range(len(rest)) if not mask >> i & 1]
        for lam in range(1, n + 1):
            lv = correlator([lowered, Insertion(0, lam)] + left)
            if not lv:
                continue
            rv = correlator([Insertion(0, dual_index(n, lam))] + pair + right)
            if rv:
                total += lv * rv
    return total


class DescendantReconstructor(object):
    """
    Memoized evaluation of genus zero descendant correlators.

    Each TRR step lowers the total descendant level by one, so the recursion
    ends on primary correlators, which are Taylor coefficients of F.
    """

    def __init__(self, potential, max_insertions, max_level=None):
        """
        Args:
            potential (FrobeniusPotential): the genus zero primary data
            max_insertions (int): largest correlator size requested
            max_level (int): largest total descendant level, defaults to max_insertions - 3

        :raise CapError: the jet of F is too short to close the recursion
        """
        if potential.degree_cap < max_insertions:
            raise CapError('reconstruction up to %d insertions needs F to order %d, have %d'
                           % (max_insertions, max_insertions, potential.degree_cap),
                           cap=potential.degree_cap, required=max_insertions)
        self._potential = potential
        self._n = potential.dimension
        self._max_insertions = max_insertions
        self._max_level = max(max_insertions - 3, 0) if max_level is None else max_level
        self._cache = {}

    @property
    def dimension(self):
        """number of primary fields"""
        return self._n

    @property
    def caps(self):
        """TableCaps covered by this reconstructor"""
        return TableCaps(0, self._max_insertions, self._max_level)

    def correlator(self, insertions):
        """
        <tau_{d1}(mu1) ... >_0 for a list of (d, mu).

        :raise CapError: more insertions than the reconstruction caps allow
        """
        key = tuple(sorted(Insertion(d, mu) for d, mu in insertions))
        if key in self._cache:
            return self._cache[key]
        if len(key) > self._max_insertions:
            raise CapError('correlator of %d insertions exceeds the reconstruction cap %d'
                           % (len(key), self._max_insertions),
                           cap=self._max_insertions, required=len(key))
        value = self._evaluate(key)
        self._cache[key] = value
        return value

    def _evaluate(self, key):
        k = len(key)
        if k < 3:
            return Fraction(0)
        level = sum(ins.d for ins in key)
        if level > k - 3:
            return Fraction(0)
        if level == 0:
            return self._potential.primary_correlator([ins.mu for ins in key])
        pivot = next(i for i, ins in enumerate(key) if ins.d > 0)
        first, second = [i for i in range(k) if i != pivot][:2]
        return self.trr_rhs(key, pivot, first, second)

    def trr_rhs(self, insertions, pivot, first, second):
        """
        Right-hand side of the TRR for a chosen descendant insertion and two
        companion insertions (positions in the list).

        :raise ValueError: the pivot has no descendant or the positions collide
        """
        return trr_sum(self._n, self.correlator, insertions, pivot, first, second)

    def table(self):
        """Every non-zero correlator within the caps, as a CorrelatorTable."""
        alphabet = [Insertion(d, mu) for d in range(self._max_level + 1) for mu in range(1, self._n + 1)]
        entries = {}
        for k in range(3, self._max_insertions + 1):
            budget = min(self._max_level, k - 3)
            letters = [ins for ins in alphabet if ins.d <= budget]
            for key in itertools.combinations_with_replacement(letters, k):
                if sum(ins.d for ins in key) > budget:
                    continue
                value = self.correlator(key)
                if value:
                    entries[(0, key)] = value
        _logger.debug('reconstructed %d genus zero correlators (cache %d)', len(entries), len(self._cache))
        return CorrelatorTable(self._n, entries, self.caps)


def reconstruct_descendants(potential, max_insertions, max_level=None):
    """
    Genus zero descendant table of a Frobenius potential.

    :raise CapError: the jet of F is too short to close the recursion
    """
    return DescendantReconstructor(potential, max_insertions, max_level).table()
