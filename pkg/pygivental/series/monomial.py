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
This module provide the variables and monomials series are built from.
"""
from collections import namedtuple


class Variable(namedtuple('Variable', ['d', 'mu'])):
    """
    Formal variable t^{d,mu}; the pair (0, 0) is reserved for hbar.
    """
    __slots__ = ()

    @property
    def weight(self):
        """descendant level, 0 for hbar"""
        return self.d

    @property
    def is_hbar(self):
        """True for the hbar variable"""
        return self.mu == 0

    def __str__(self):
        if self.is_hbar:
            return 'hbar'
        return 't[%d,%d]' % (self.d, self.mu)


HBAR = Variable(0, 0)


def t(d, mu):
    """
    Shorthand for the variable t^{d,mu}.

    :raise ValueError: negative level or non-positive index
    """
    if d < 0:
        raise ValueError('descendant level should be a non-negative integer.')
    if mu < 1:
        raise ValueError('primary index should be a positive integer.')
    return Variable(d, mu)


def _canonical(pairs):
    collected = {}
    for (d, mu), power in pairs:
        if power < 0:
            raise ValueError('power of t[%d,%d] should be a non-negative integer.' % (d, mu))
        if power:
            collected[(d, mu)] = collected.get((d, mu), 0) + power
    return tuple((d, mu, p) for (d, mu), p in sorted(collected.items()))


class Monomial(object):
    """
    hbar^e times a product of t-variables.

    Factors are kept as a sorted tuple of (d, mu, power) triples so equal
    monomials hash and compare equal.
    """
    __slots__ = ('_factors', '_hbar', '_hash', '_degree', '_weighted')

    def __init__(self, factors=(), hbar_power=0):
        """
        Args:
            factors: iterable of ((d, mu), power) pairs or a mapping (d, mu) -> power
            hbar_power (int): exponent of hbar, may be negative
        """
        if isinstance(factors, dict):
            factors = factors.items()
        self._set(_canonical(factors), hbar_power)

    def _set(self, triples, hbar_power):
        self._factors = triples
        self._hbar = hbar_power
        self._hash = hash((triples, hbar_power))
        self._degree = sum(p for _, _, p in triples)
        self._weighted = sum(d * p for d, _, p in triples)

    @classmethod
    def _from_triples(cls, triples, hbar_power):
        obj = cls.__new__(cls)
        obj._set(triples, hbar_power)
        return obj

    @classmethod
    def from_insertions(cls, insertions, hbar_power=0):
        """
        Monomial prod t^{d_i,mu_i} of a list of (d, mu) insertions.
        """
        return cls([((d, mu), 1) for d, mu in insertions], hbar_power)

    @property
    def factors(self):
        """sorted tuple of ((d, mu), power)"""
        return tuple(((d, mu), p) for d, mu, p in self._factors)

    @property
    def triples(self):
        """sorted tuple of (d, mu, power)"""
        return self._factors

    @property
    def hbar_power(self):
        """exponent e of hbar"""
        return self._hbar

    @property
    def degree(self):
        """total power of the t-variables"""
        return self._degree

    @property
    def weighted_degree(self):
        """sum of d times power"""
        return self._weighted

    @property
    def vdim(self):
        """3e + degree, the quantity the genus cap bounds"""
        return 3 * self._hbar + self._degree

    @property
    def genus(self):
        """g in the hbar^{g-1} grading"""
        return self._hbar + 1

    def is_tame(self):
        """weighted degree <= 3g - 3 + k"""
        return self._weighted <= self.vdim

    def power_of(self, variable):
        """Exponent of a variable in this monomial."""
        if variable.is_hbar:
            return self._hbar
        for d, mu, p in self._factors:
            if d == variable.d and mu == variable.mu:
                return p
        return 0

    def insertions(self):
        """The (d, mu) insertions with multiplicity, in sorted order."""
        out = []
        for d, mu, p in self._factors:
            out.extend([(d, mu)] * p)
        return tuple(out)

    def max_index(self):
        """largest primary index appearing, 0 for a pure hbar power"""
        return max([mu for _, mu, _ in self._factors] or [0])

    def max_level(self):
        """largest descendant level appearing"""
        return max([d for d, _, _ in self._factors] or [0])

    def without(self, variable):
        """
        Lower the power of a t-variable by one.

        :return: (old power, monomial) or (0, None) when it does not divide
        """
        out = []
        found = 0
        for d, mu, p in self._factors:
            if d == variable.d and mu == variable.mu:
                found = p
                if p > 1:
                    out.append((d, mu, p - 1))
            else:
                out.append((d, mu, p))
        if not found:
            return 0, None
        return found, Monomial._from_triples(tuple(out), self._hbar)

    def times_hbar(self, k):
        """multiply by hbar^k"""
        return Monomial._from_triples(self._factors, self._hbar + k)

    def __mul__(self, other):
        a, b = self._factors, other._factors
        if not a:
            return Monomial._from_triples(b, self._hbar + other._hbar)
        if not b:
            return Monomial._from_triples(a, self._hbar + other._hbar)
        out = []
        i = j = 0
        while i < len(a) and j < len(b):
            ka, kb = a[i][:2], b[j][:2]
            if ka == kb:
                out.append((ka[0], ka[1], a[i][2] + b[j][2]))
                i += 1
                j += 1
            elif ka < kb:
                out.append(a[i])
                i += 1
            else:
                out.append(b[j])
                j += 1
        out.extend(a[i:])
        out.extend(b[j:])
        return Monomial._from_triples(tuple(out), self._hbar + other._hbar)

    def sort_key(self):
        """canonical order: by degree, then hbar power, then factors"""
        return (self._degree, self._hbar, self._factors)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._hbar == other._hbar and self._factors == other._factors

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return self._hash

    def __str__(self):
        parts = []
        if self._hbar:
            parts.append('hbar^%d' % self._hbar)
        for d, mu, p in self._factors:
            parts.append('t[%d,%d]^%d' % (d, mu, p) if p != 1 else 't[%d,%d]' % (d, mu))
        return ' * '.join(parts) if parts else '1'

    def __repr__(self):
        return 'Monomial(%s)' % self


ONE = Monomial()
