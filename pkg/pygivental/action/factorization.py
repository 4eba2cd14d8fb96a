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
This module provide the factorized form of R^ = exp(sum_l (r_l z^l)^):

    R^ Z = exp(X) exp(T) exp(V) Z

with
    V = hbar sum (V_{k,l})^{mu nu} d/dt^{k,mu} d/dt^{l,nu},
        sum V_{k,l} z^k w^l = -1/2 (exp(-r(-z)) exp(r(w)) - 1) / (z + w)
    T = sum (W_l)^mu_1 d/dt^{l,mu},   sum W_l z^l = -z (exp(r(z)) - 1)
    X = sum_l sum_d t^{d,nu} (r_l)^mu_nu d/dt^{d+l,mu}

exp(T) translates t by the dilaton shift W and exp(X) substitutes t -> R(z) t.
"""
import logging
from fractions import Fraction

import sympy
from future.utils import iteritems

from pygivental.action.quantization import DifferentialOperator, check_region, Region
from pygivental.action.rmatrix import raise_index, to_fraction, zero_matrix
from pygivental.exception import CapError, DimensionMismatchError, DivisionRemainderError
from pygivental.series.monomial import Variable

_logger = logging.getLogger(__name__)


def product_series(r_matrix, cap):
    """
    Coefficients N_{a,b} of exp(-r(-z)) exp(r(w)) - 1 for a + b <= cap.

    :return: dict (a, b) -> matrix
    """
    left = r_matrix.scaled(-1).exp_series(cap, sign=-1)
    right = r_matrix.exp_series(cap)
    n = r_matrix.dimension
    out = {}
    for a in range(cap + 1):
        for b in range(cap + 1 - a):
            m = left[a] * right[b]
            if a == 0 and b == 0:
                m = m - sympy.eye(n)
            out[(a, b)] = m
    return out


def divide_by_z_plus_w(numerator, cap, dimension):
    """
    Exact quotient Q(z, w) = N(z, w) / (z + w) by long division in z.

    Args:
        numerator (dict): (a, b) -> matrix, complete for a + b <= cap
        cap (int): total degree of the numerator that is known
        dimension (int): n

    :return: dict (k, l) -> matrix for k + l <= cap - 1
    :raise DivisionRemainderError: the division leaves a remainder
    """
    def coeff(a, b):
        return numerator.get((a, b), zero_matrix(dimension))

    if not coeff(0, 0).is_zero_matrix:
        raise DivisionRemainderError('numerator has a constant term, (z + w) cannot divide it', degree=0)
    quotient = {}
    for s in range(1, cap + 1):
        quotient[(s - 1, 0)] = coeff(s, 0)
        for b in range(1, s):
            quotient[(s - b - 1, b)] = coeff(s - b, b) - quotient[(s - b, b - 1)]
        if coeff(0, s) != quotient[(0, s - 1)]:
            raise DivisionRemainderError('division by (z + w) leaves a remainder in degree %d' % s, degree=s)
    return quotient


def edge_kernel(r_matrix, cap):
    """
    Q_{k,l} with sum Q_{k,l} z^k w^l = (exp(-r(-z)) exp(r(w)) - 1) / (z + w)
    for k + l <= cap - 1.

    :raise DivisionRemainderError: r does not satisfy the symplectic condition
    """
    return divide_by_z_plus_w(product_series(r_matrix, cap), cap, r_matrix.dimension)


class FactorizedAction(object):
    """
    The data V, W and X of an R-matrix, known up to a z-power cap.
    """

    def __init__(self, r_matrix, cap):
        """
        Args:
            r_matrix (RMatrix): the group element
            cap (int): R_j is kept for j <= cap, which certifies outputs of vdim <= cap

        :raise DivisionRemainderError: the quotient by (z + w) is not exact
        """
        if cap < 0:
            raise ValueError('cap should be a non-negative integer.')
        self._r = r_matrix
        self._n = r_matrix.dimension
        self._cap = cap
        self._r_series = r_matrix.exp_series(cap)
        self._quotient = edge_kernel(r_matrix, cap + 1) if cap > 0 else {}
        self._dilaton = {}
        for l in range(2, cap + 2):
            w = -self._r_series[l - 1]
            if not w.is_zero_matrix:
                self._dilaton[l] = w
        _logger.debug('factorized R of dimension %d to z-power %d', self._n, cap)

    @property
    def dimension(self):
        """n"""
        return self._n

    @property
    def cap(self):
        """largest z-power of R that is known"""
        return self._cap

    @property
    def r_matrix(self):
        """the generator r"""
        return self._r

    def r_series(self, j):
        """R_j, the z^j coefficient of exp(r(z))"""
        if j > self._cap:
            raise CapError('R_%d requested, factorization known to z^%d' % (j, self._cap),
                           cap=self._cap, required=j)
        if j < 0:
            return zero_matrix(self._n)
        return self._r_series[j]

    def r_entry(self, j, mu, nu):
        """(R_j)^mu_nu"""
        return to_fraction(self.r_series(j)[mu - 1, nu - 1])

    def quotient(self, k, l):
        """Q_{k,l}, zero outside the known range"""
        if k + l > self._cap - 1:
            raise CapError('Q_{%d,%d} requested, factorization known to total degree %d'
                           % (k, l, self._cap - 1), cap=self._cap - 1, required=k + l)
        return self._quotient.get((k, l), zero_matrix(self._n))

    def raised_quotient(self, k, l, mu, nu):
        """(Q_{k,l})^{mu nu}"""
        return to_fraction(raise_index(self.quotient(k, l), self._n)[mu - 1, nu - 1])

    def v_coefficient(self, k, l):
        """V_{k,l} = -1/2 Q_{k,l}"""
        return self.quotient(k, l) * sympy.Rational(-1, 2)

    def w_coefficient(self, l):
        """W_l, the z^l coefficient of -z (exp(r(z)) - 1)"""
        if l > self._cap + 1:
            raise CapError('W_%d requested, factorization known to z^%d' % (l, self._cap + 1),
                           cap=self._cap + 1, required=l)
        return self._dilaton.get(l, zero_matrix(self._n))

    def quadratic_operator(self):
        """V as a DifferentialOperator"""
        terms = []
        for (k, l), q in sorted(iteritems(self._quotient)):
            if q.is_zero_matrix:
                continue
            raised = raise_index(q, self._n)
            for mu in range(1, self._n + 1):
                for nu in range(1, self._n + 1):
                    c = to_fraction(raised[mu - 1, nu - 1])
                    if c:
                        terms.append((-c / 2, Variable(k, mu), Variable(l, nu)))
        return DifferentialOperator(self._n, quadratic=terms)

    def dilaton_operator(self):
        """T as a DifferentialOperator"""
        shifts = []
        for l, w in sorted(iteritems(self._dilaton)):
            for mu in range(1, self._n + 1):
                shifts.append((to_fraction(w[mu - 1, 0]), Variable(l, mu)))
        return DifferentialOperator(self._n, shifts=shifts)

    def linear_operator(self):
        """X as a DifferentialOperator"""
        linear = []
        for l in self._r.levels:
            m = self._r.matrix(l)
            for mu in range(1, self._n + 1):
                for nu in range(1, self._n + 1):
                    linear.append((to_fraction(m[mu - 1, nu - 1]), l, mu, nu))
        return DifferentialOperator(self._n, linear=linear)

    def apply(self, z, region=None):
        """
        exp(X) exp(T) exp(V) Z.

        :raise CapError: z lacks headroom, or the factorization is too short for the region
        """
        if z.dimension != self._n:
            raise DimensionMismatchError('factorized action of dimension %d applied to a series of dimension %d'
                                         % (self._n, z.dimension), left=self._n, right=z.dimension)
        region = check_region(z, region)
        if region.vdim > self._cap:
            raise CapError('output vdim %d needs R to z^%d, factorization known to z^%d'
                           % (region.vdim, region.vdim, self._cap), cap=self._cap, required=region.vdim)
        out = self.quadratic_operator().exponential_sum(z)
        out = self.dilaton_operator().exponential_sum(out)
        out = self.linear_operator().exponential_sum(out)
        return out.with_exact_region(region)


def factorize(r_matrix, cap):
    """
    The factorized data of R = exp(r) up to z^cap.

    :raise DivisionRemainderError: the quotient by (z + w) is not exact
    """
    return FactorizedAction(r_matrix, cap)


def apply_factorized(factorized, z, region=None):
    """
    R^ Z computed as exp(X) exp(T) exp(V) Z.

    Args:
        factorized: FactorizedAction, or an RMatrix to factorize on the fly
        z (TruncatedSeries): tame partition function
        region (Region): output region to certify

    :raise CapError: z lacks headroom for the region
    """
    if not isinstance(factorized, FactorizedAction):
        region = check_region(z, region)
        factorized = FactorizedAction(factorized, max(region.vdim, 1))
    return factorized.apply(z, region)
