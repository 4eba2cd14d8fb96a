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
This module provide the group element r(z) = sum_l r_l z^l and the matrix power
series built from it.

Matrices follow the convention matrix[nu - 1][mu - 1] = (r_l)^nu_mu, so r_l maps
e_mu to sum_nu (r_l)^nu_mu e_nu. Raising the lower index with the metric gives
the bivector (r_l)^{mu nu} = (r_l)^mu_rho eta^{rho nu}.
"""
import logging
from fractions import Fraction

import sympy
from builtins import str
from future.utils import iteritems

from pygivental.exception import SymmetryError, DimensionMismatchError
from pygivental.utils import dual_index

_logger = logging.getLogger(__name__)


def to_fraction(value):
    """sympy or python rational -> Fraction"""
    if isinstance(value, Fraction):
        return value
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def to_rational(value):
    """Fraction, int or "p/q" -> sympy.Rational"""
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.Rational(value)


def zero_matrix(n):
    """n x n zero matrix"""
    return sympy.zeros(n, n)


def raise_index(matrix, n):
    """(m)^{mu nu} = m^mu_rho eta^{rho nu}, returned as a matrix indexed [mu][nu]"""
    return sympy.Matrix(n, n, lambda i, j: matrix[i, dual_index(n, j + 1) - 1])


def series_exp(coefficients, cap):
    """
    exp of a matrix power series without constant term.

    Args:
        coefficients (dict): power l >= 1 -> matrix
        cap (int): highest power kept

    :return: list of matrices E_0 .. E_cap
    """
    n = next(iter(coefficients.values())).shape[0] if coefficients else None
    if n is None:
        raise ValueError('series_exp needs at least one coefficient to fix the size.')
    result = [sympy.eye(n)] + [zero_matrix(n) for _ in range(cap)]
    term = [sympy.eye(n)] + [zero_matrix(n) for _ in range(cap)]
    k = 0
    while True:
        k += 1
        nxt = [zero_matrix(n) for _ in range(cap + 1)]
        for a in range(cap + 1):
            if term[a].is_zero_matrix:
                continue
            for l, m in iteritems(coefficients):
                if a + l <= cap:
                    nxt[a + l] += term[a] * m
        term = [x / k for x in nxt]
        if all(x.is_zero_matrix for x in term):
            break
        result = [result[i] + term[i] for i in range(cap + 1)]
    return result


class RMatrix(object):
    """
    Finite sequence r_1, r_2, ... of n x n rational matrices.

    The raised bivector of r_l must be symmetric for odd l and skew-symmetric
    for even l.
    """

    def __init__(self, dimension, levels=None, check=True):
        """
        Args:
            dimension (int): n
            levels (dict): l -> n x n matrix (sympy Matrix or nested lists of rationals)
            check (bool): enforce the (skew-)symmetry constraint

        :raise SymmetryError: the constraint fails at some (l, mu, nu)
        """
        if dimension < 1:
            raise ValueError('dimension should be a positive integer.')
        self._n = dimension
        self._levels = {}
        for level, matrix in iteritems(levels or {}):
            if level < 1:
                raise ValueError('r-matrix levels start at 1, got %d' % level)
            m = sympy.ImmutableMatrix(sympy.Matrix(matrix).applyfunc(to_rational))
            if m.shape != (dimension, dimension):
                raise DimensionMismatchError('level %d matrix has shape %r, expected %d x %d'
                                             % (level, m.shape, dimension, dimension),
                                             left=m.shape[0], right=dimension)
            if not m.is_zero_matrix:
                self._levels[level] = m
        if check:
            self.check_symmetry()

    @classmethod
    def zero(cls, dimension):
        """r = 0"""
        return cls(dimension)

    @classmethod
    def inversion(cls, dimension):
        """r_1 with the single entry (r_1)^1_n = 1"""
        m = sympy.zeros(dimension, dimension)
        m[0, dimension - 1] = 1
        return cls(dimension, {1: m})

    @property
    def dimension(self):
        """n"""
        return self._n

    @property
    def levels(self):
        """sorted levels l with r_l != 0"""
        return sorted(self._levels)

    @property
    def max_level(self):
        """largest l with r_l != 0, 0 for r = 0"""
        return max(self._levels) if self._levels else 0

    def is_zero(self):
        """True for r = 0"""
        return not self._levels

    def matrix(self, level):
        """r_l as a sympy matrix (zero when absent)"""
        return self._levels.get(level, sympy.ImmutableMatrix(zero_matrix(self._n)))

    def entry(self, level, nu, mu):
        """(r_l)^nu_mu, 1-based"""
        return to_fraction(self.matrix(level)[nu - 1, mu - 1])

    def raised(self, level, mu, nu):
        """(r_l)^{mu nu} = (r_l)^mu_{n+1-nu}"""
        return self.entry(level, mu, dual_index(self._n, nu))

    def check_symmetry(self):
        """
        :raise SymmetryError: the raised bivector has the wrong parity somewhere
        """
        for level, m in sorted(self._levels.items()):
            sign = 1 if level % 2 else -1
            bivector = raise_index(m, self._n)
            for mu in range(self._n):
                for nu in range(mu, self._n):
                    if bivector[mu, nu] != sign * bivector[nu, mu]:
                        raise SymmetryError(
                            'r_%d is not %s: (r_%d)^{%d %d} = %s but (r_%d)^{%d %d} = %s'
                            % (level, 'symmetric' if sign > 0 else 'skew-symmetric',
                               level, mu + 1, nu + 1, bivector[mu, nu],
                               level, nu + 1, mu + 1, bivector[nu, mu]),
                            level=level, mu=mu + 1, nu=nu + 1)

    def coefficients(self, sign=1):
        """power -> matrix of r(sign * z)"""
        return dict((l, m * (sign ** l)) for l, m in iteritems(self._levels))

    def exp_series(self, cap, sign=1):
        """exp(r(sign * z)) as matrices E_0 .. E_cap"""
        if not self._levels:
            return [sympy.eye(self._n)] + [zero_matrix(self._n) for _ in range(cap)]
        return series_exp(self.coefficients(sign), cap)

    def scaled(self, factor):
        """r multiplied by a rational"""
        factor = to_rational(factor)
        return RMatrix(self._n, dict((l, m * factor) for l, m in iteritems(self._levels)), check=False)

    def __add__(self, other):
        if self._n != other._n:
            raise DimensionMismatchError('cannot add r-matrices of dimension %d and %d' % (self._n, other._n),
                                         left=self._n, right=other._n)
        levels = dict(self._levels)
        for l, m in iteritems(other._levels):
            levels[l] = levels[l] + m if l in levels else m
        return RMatrix(self._n, levels, check=False)

    def __eq__(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self._n == other._n and self._levels == other._levels

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'RMatrix(n=%d, levels=%r)' % (self._n, self.levels)
