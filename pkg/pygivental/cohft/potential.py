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
This module provide Frobenius potentials in flat coordinates with the
anti-diagonal metric eta_{ab} = delta_{a+b,n+1} and unit e_1.

A potential is stored as the jet of F at its expansion point, in local
coordinates, with every term of order <= 2 removed. In normal form

    F = 1/2 (t^1)^2 t^n + 1/2 t^1 sum_{a=2}^{n-1} t^a t^{n+1-a} + H(t^2, ..., t^n).
"""
import logging
from fractions import Fraction
from math import comb, factorial

from builtins import str
from future.utils import iteritems

from pygivental.exception import CapError
from pygivental.series.monomial import Monomial, Variable
from pygivental.series.truncated_series import TruncatedSeries
from pygivental.utils import multiset_aut, dual_index

_logger = logging.getLogger(__name__)


def primary(mu):
    """the variable t^{0,mu}, identified with t^mu"""
    return Variable(0, mu)


def unit_cubic(dimension, degree_cap):
    """1/2 (t^1)^2 t^n + 1/2 t^1 sum_{a=2}^{n-1} t^a t^{n+1-a}"""
    n = dimension
    terms = {Monomial([((0, 1), 2), ((0, n), 1)]): Fraction(1, 2)}
    for a in range(2, n):
        mono = Monomial([((0, 1), 1), ((0, a), 1), ((0, dual_index(n, a)), 1)])
        terms[mono] = terms.get(mono, 0) + Fraction(1, 2)
    return TruncatedSeries(n, degree_cap, 1, terms)


class FrobeniusPotential(object):
    """
    Genus zero, descendant-free potential F(t^1, ..., t^n).
    """

    def __init__(self, dimension, series, point=None, check_unit=True):
        """
        Args:
            dimension (int): n >= 2
            series (TruncatedSeries): hbar-free series in the t^{0,mu}
            point (tuple): label of the expansion point, defaults to (0, ..., 0, 1)
            check_unit (bool): require the t^1-dependence of the normal form

        :raise ValueError: descendant variables, hbar powers or a wrong unit axis
        """
        if dimension < 2:
            raise ValueError('dimension should be at least 2.')
        if series.dimension != dimension:
            raise ValueError('series dimension %d does not match %d' % (series.dimension, dimension))
        for mono in series.monomials():
            if mono.hbar_power or mono.weighted_degree:
                raise ValueError('potential term %s is not a primary monomial' % mono)
        self._n = dimension
        self._series = series.filter(lambda m: m.degree >= 3).truncate(genus_cap=1)
        self._point = tuple(point) if point is not None else tuple([0] * (dimension - 1) + [1])
        if check_unit:
            self.check_unit_axis()

    @classmethod
    def normal_form(cls, dimension, h, degree_cap=None, point=None):
        """
        Potential with the unit cubic plus H.

        Args:
            h: TruncatedSeries in t^{0,2..n}, or a dict Monomial -> rational
        """
        if not isinstance(h, TruncatedSeries):
            if degree_cap is None:
                raise ValueError('degree_cap is required when h is a dict.')
            h = TruncatedSeries(dimension, degree_cap, 1, h)
        degree_cap = h.degree_cap if degree_cap is None else degree_cap
        for mono in h.monomials():
            if mono.power_of(primary(1)):
                raise ValueError('H must not depend on t^1, found %s' % mono)
        series = unit_cubic(dimension, degree_cap).add(h.truncate(degree_cap))
        return cls(dimension, series, point)

    @classmethod
    def two_dimensional(cls, sigmas, degree_cap):
        """
        F = 1/2 (t^1)^2 t^2 + sum_k sigma_k (t^2)^k / k!.

        Args:
            sigmas (dict): k -> sigma_k for k >= 3
        """
        h = {}
        for k, sigma in iteritems(sigmas):
            if k < 3:
                raise ValueError('sigma_%d is an order <= 2 term.' % k)
            h[Monomial([((0, 2), k)])] = Fraction(sigma) / factorial(k)
        return cls.normal_form(2, TruncatedSeries(2, degree_cap, 1, h))

    @classmethod
    def three_dimensional(cls, free, degree_cap):
        """
        F = 1/2 (t^1)^2 t^3 + 1/2 t^1 (t^2)^2 + H(t^2, t^3) with H the solution
        of WDVV determined by its free Taylor coefficients, see solve_wdvv_three.
        """
        return cls.normal_form(3, solve_wdvv_three(free, degree_cap))

    @property
    def dimension(self):
        """number of primary fields"""
        return self._n

    @property
    def degree_cap(self):
        """order up to which the jet is known"""
        return self._series.degree_cap

    @property
    def series(self):
        """order >= 3 part of the jet"""
        return self._series

    @property
    def point(self):
        """expansion point label"""
        return self._point

    def h_part(self):
        """the terms independent of t^1"""
        return self._series.filter(lambda m: not m.power_of(primary(1)))

    def check_unit_axis(self):
        """
        The t^1-terms must be exactly those of the unit cubic.

        :raise ValueError: the normal form is violated
        """
        cubic = unit_cubic(self._n, self.degree_cap)
        with_unit = self._series.filter(lambda m: m.power_of(primary(1)) > 0)
        diff = with_unit.sub(cubic)
        if not diff.is_zero():
            raise ValueError('potential is not in normal form along t^1: %s' % diff.monomials()[0])

    def primary_correlator(self, mus):
        """
        <tau_0(mu1) ... tau_0(muk)>_0, the k-th Taylor coefficient of F.

        :raise CapError: k exceeds the jet order
        """
        mus = list(mus)
        if len(mus) < 3:
            return Fraction(0)
        if len(mus) > self.degree_cap:
            raise CapError('primary correlator of %d points needs a jet of order %d, have %d'
                           % (len(mus), len(mus), self.degree_cap),
                           cap=self.degree_cap, required=len(mus))
        mono = Monomial([((0, mu), 1) for mu in mus])
        return self._series.coefficient(mono) * multiset_aut(mus)

    def derivative(self, *mus):
        """partial derivatives of F in the listed primary directions"""
        out = self._series
        for mu in mus:
            out = out.partial(primary(mu))
        return out

    def __eq__(self, other):
        if not isinstance(other, FrobeniusPotential):
            return NotImplemented
        return self._n == other._n and self._series.terms == other._series.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'FrobeniusPotential(n=%d, order=%d, %d terms)' % (self._n, self.degree_cap, len(self._series))


def solve_wdvv_three(free, degree_cap):
    """
    H(x, y), x = t^2 and y = t^3, solving H_yyy = H_xxy^2 - H_xxx H_xyy,
    the only WDVV equation left in dimension 3.

    Args:
        free (dict): (a, b) -> d^a/dx^a d^b/dy^b H(0) for b <= 2 and
            3 <= a + b <= degree_cap; missing entries are zero
        degree_cap (int): order of the jet

    The coefficients with b >= 3 follow order by order: on the right hand
    side every coefficient of the same order has a smaller y-power.

    :return: TruncatedSeries
    """
    c = {}
    for (a, b), value in iteritems(free):
        if b > 2 or a < 0 or not 3 <= a + b <= degree_cap:
            raise ValueError('(%d, %d) is not a free coefficient up to order %d' % (a, b, degree_cap))
        c[(a, b)] = Fraction(value)

    def get(a, b):
        return c.get((a, b), Fraction(0))

    def product(g, h, a, b):
        # Taylor coefficient (a, b) of the product of two shifted derivatives of H
        total = Fraction(0)
        for i in range(a + 1):
            for j in range(b + 1):
                total += comb(a, i) * comb(b, j) * get(i + g[0], j + g[1]) * get(a - i + h[0], b - j + h[1])
        return total

    for order in range(3, degree_cap + 1):
        for b in range(3, order + 1):
            a = order - b
            c[(a, b)] = product((2, 1), (2, 1), a, b - 3) - product((3, 0), (1, 2), a, b - 3)
    terms = {}
    for (a, b), value in iteritems(c):
        if value:
            terms[Monomial([((0, 2), a), ((0, 3), b)])] = value / (factorial(a) * factorial(b))
    return TruncatedSeries(3, degree_cap, 1, terms)


def wdvv_defect(potential):
    """
    Non-zero coefficients of
    sum_l F_{abl} eta^{l s} F_{scd} - F_{acl} eta^{l s} F_{sbd}
    below the watermark, keyed by (a, b, c, d, monomial).
    """
    n = potential.dimension
    third = {}
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            for c in range(b, n + 1):
                third[(a, b, c)] = potential.derivative(a, b, c)

    def f3(a, b, c):
        return third[tuple(sorted((a, b, c)))]

    defects = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                for d in range(1, n + 1):
                    if not b < c:
                        continue
                    lhs = None
                    for lam in range(1, n + 1):
                        sig = dual_index(n, lam)
                        term = f3(a, b, lam).mul(f3(sig, c, d)).sub(f3(a, c, lam).mul(f3(sig, b, d)))
                        lhs = term if lhs is None else lhs.add(term)
                    for mono, coeff in lhs.reliable_part().items():
                        defects[(a, b, c, d, mono)] = coeff
    if defects:
        _logger.debug('potential has %d WDVV defects', len(defects))
    return defects
