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
This module provide correlator tables <tau_{d1}(mu1) ... tau_{dk}(muk)>_g and the
partition functions they define.
"""
import logging
from collections import namedtuple, defaultdict
from fractions import Fraction

from builtins import str
from future.utils import iteritems

from pygivental.exception import CapError, DimensionMismatchError
from pygivental.series.monomial import Monomial
from pygivental.series.truncated_series import TruncatedSeries
from pygivental.utils import multiset_aut

_logger = logging.getLogger(__name__)


class Insertion(namedtuple('Insertion', ['d', 'mu'])):
    """tau_d(e_mu)"""
    __slots__ = ()


UNIT_DILATON = Insertion(1, 1)

TableCaps = namedtuple('TableCaps', ['max_genus', 'max_insertions', 'max_level'])


def is_stable(genus, count):
    """2g - 2 + k > 0"""
    return 2 * genus - 2 + count > 0


def canonical_key(genus, insertions):
    """(genus, sorted tuple of Insertion)"""
    return genus, tuple(sorted(Insertion(int(d), int(mu)) for d, mu in insertions))


class CorrelatorTable(object):
    """
    Immutable map (genus, multiset of insertions) -> rational.

    Keys are stored with sorted insertions, so symmetry under permutations
    is structural. Unstable and zero entries are never stored; entries that are
    absent but inside the caps are zero.
    """

    def __init__(self, dimension, entries=None, caps=None):
        """
        Args:
            dimension (int): number n of primary fields
            entries (dict): (genus, iterable of (d, mu)) -> rational
            caps (TableCaps): completeness region; derived from the entries when omitted

        :raise ValueError: an entry violates tameness
        """
        if dimension < 1:
            raise ValueError('dimension should be a positive integer.')
        self._n = dimension
        clean = {}
        for (genus, insertions), value in iteritems(entries or {}):
            key = canonical_key(genus, insertions)
            value = Fraction(value)
            for ins in key[1]:
                if not 1 <= ins.mu <= dimension or ins.d < 0:
                    raise DimensionMismatchError('insertion %r outside dimension %d' % (ins, dimension),
                                                 left=ins.mu, right=dimension)
            if not value or not is_stable(genus, len(key[1])):
                continue
            level = sum(ins.d for ins in key[1])
            if level > 3 * genus - 3 + len(key[1]):
                raise ValueError('correlator %r at genus %d is not tame' % (key[1], genus))
            clean[key] = clean.get(key, 0) + value
        self._entries = dict((k, v) for k, v in iteritems(clean) if v)
        if caps is None:
            caps = TableCaps(
                max([g for g, _ in self._entries] or [0]),
                max([len(ins) for _, ins in self._entries] or [0]),
                max([sum(i.d for i in ins) for _, ins in self._entries] or [0]))
        self._caps = caps
        self._index = None

    @property
    def dimension(self):
        """number of primary fields"""
        return self._n

    @property
    def caps(self):
        """TableCaps of the completeness region"""
        return self._caps

    @property
    def entries(self):
        """copy of the (genus, insertions) -> Fraction map"""
        return dict(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, CorrelatorTable):
            return NotImplemented
        return self._n == other._n and self._entries == other._entries

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def items(self):
        """entries in canonical order"""
        return sorted(self._entries.items())

    def genera(self):
        """genera with at least one stored entry"""
        return sorted(set(g for g, _ in self._entries))

    def within_caps(self, genus, insertions):
        """True when the table knows the value of this correlator"""
        return (genus <= self._caps.max_genus
                and len(insertions) <= self._caps.max_insertions
                and sum(d for d, _ in insertions) <= self._caps.max_level)

    def correlator(self, genus, insertions):
        """
        <tau_{d1}(mu1) ... >_g

        :raise CapError: the correlator lies outside the table caps
        """
        insertions = list(insertions)
        if not self.within_caps(genus, insertions):
            raise CapError('correlator %r at genus %d is outside table caps %r'
                           % (insertions, genus, tuple(self._caps)),
                           cap=self._caps, required=(genus, len(insertions)))
        return self._entries.get(canonical_key(genus, insertions), Fraction(0))

    def entries_of(self, genus, count):
        """stored (insertions, value) pairs of a given genus and size"""
        if self._index is None:
            index = defaultdict(list)
            for (g, ins), value in sorted(iteritems(self._entries)):
                index[(g, len(ins))].append((ins, value))
            self._index = dict(index)
        return self._index.get((genus, count), [])

    def with_entries(self, entries, caps=None):
        """A new table with some entries replaced."""
        merged = dict(self._entries)
        for (genus, insertions), value in iteritems(entries):
            merged[canonical_key(genus, insertions)] = Fraction(value)
        return CorrelatorTable(self._n, merged, caps or self._caps)

    def vertex_tensor(self, inputs, genus=None):
        """
        Evaluate the vertex tensor on e_{mu1} z^{d1} (x) ... .

        Args:
            inputs: list of (mu, d) pairs
            genus (int): a single genus, or None for every genus in the caps

        :return: the value at the requested genus, or a map genus -> value of
            the non-zero values
        :raise CapError: the request lies outside the table caps
        """
        insertions = [(d, mu) for mu, d in inputs]
        if genus is not None:
            return self.correlator(genus, insertions)
        out = {}
        for g in range(self._caps.max_genus + 1):
            value = self.correlator(g, insertions)
            if value:
                out[g] = value
        return out

    def __repr__(self):
        return 'CorrelatorTable(n=%d, caps=%r, %d entries)' % (self._n, tuple(self._caps), len(self._entries))


def vertex_tensor(table, inputs, genus=None):
    """See CorrelatorTable.vertex_tensor."""
    return table.vertex_tensor(inputs, genus)


def dilaton_reduce(genus, insertions):
    """
    Remove one tau_1(1) using <tau_1(1) X>_g = (2g - 2 + k) <X>_g.

    :return: (factor, reduced insertions) with k = len(reduced insertions)
    :raise ValueError: no tau_1(1) among the insertions
    """
    insertions = [Insertion(d, mu) for d, mu in insertions]
    if UNIT_DILATON not in insertions:
        raise ValueError('dilaton reduction needs a tau_1(1) insertion.')
    reduced = list(insertions)
    reduced.remove(UNIT_DILATON)
    return Fraction(2 * genus - 2 + len(reduced)), tuple(sorted(reduced))


def log_partition_function(table, degree_cap=None, genus_cap=None, vdim_cap=None):
    """
    sum_g hbar^{g-1} F_g with F_g = sum <...>_g / |Aut| prod t^{d_i,mu_i}.
    """
    degree_cap = table.caps.max_insertions if degree_cap is None else degree_cap
    genus_cap = table.caps.max_genus if genus_cap is None else genus_cap
    terms = {}
    for (genus, insertions), value in iteritems(table.entries):
        mono = Monomial.from_insertions(insertions, genus - 1)
        terms[mono] = value / multiset_aut(insertions)
    return TruncatedSeries(table.dimension, degree_cap, genus_cap, terms, vdim_cap=vdim_cap)


def table_to_partition_function(table, degree_cap=None, genus_cap=None, vdim_cap=None):
    """
    Z = exp(sum_g hbar^{g-1} F_g).
    """
    log_z = log_partition_function(table, degree_cap, genus_cap, vdim_cap)
    _logger.debug('assembling Z from %d correlators, caps %r', len(table), log_z.caps)
    return log_z.exp()


def series_to_table(log_z, caps=None):
    """
    Read correlators off a log partition function.

    :raise ValueError: a monomial has an hbar power below -1
    """
    entries = {}
    for mono, coeff in log_z.items():
        genus = mono.hbar_power + 1
        if genus < 0:
            raise ValueError('monomial %s has hbar power below -1' % mono)
        insertions = mono.insertions()
        entries[(genus, insertions)] = coeff * multiset_aut(insertions)
    if caps is None:
        levels = [sum(d for d, _ in ins) for (_, ins) in entries] or [0]
        caps = TableCaps(log_z.genus_cap, log_z.degree_cap, max(levels))
    return CorrelatorTable(log_z.dimension, entries, caps)


def partition_function_to_table(z, caps=None):
    """Inverse of table_to_partition_function: correlators of log Z."""
    return series_to_table(z.log(), caps)
