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
This module provide the Hamiltonian densities of the principal hierarchy,

    theta_{a,p}(v) = d^2 F_0 / dt^{a,p} dt^{1,0}  restricted to t^{d,mu} = 0 for d > 0,

with v^mu = t^{0,mu} the local coordinates at (0, ..., 0, 1), and their
transformation under the inversion r-matrix:

    U f = -v^n f - 1/2 sum_g v^g v^{n+1-g} df/dv^1 + v^n sum_g v^g df/dv^g
    theta'_{a,p} = exp(U) theta_{a,p} + delta_{a,n} exp(U) theta_{1,p+1}.

The comparison densities follow the inverse inversion map and divide by the
global coordinate v^n = 1 / (1 - eps):

    theta''_{1,0} = -(1 - eps),  theta''_{1,p} = -(1 - eps) theta_{n,p-1}(v(v')),
    theta''_{a,p} = (1 - eps) theta_{a,p}(v(v')),  theta''_{n,p} = (1 - eps) theta_{1,p+1}(v(v')).
"""
import logging
from fractions import Fraction

from pygivental.action.quantization import quantize
from pygivental.action.rmatrix import RMatrix
from pygivental.cohft.correlator_table import log_partition_function
from pygivental.cohft.reconstruction import reconstruct_descendants
from pygivental.exception import CapError
from pygivental.inversion.coordinates import inverse_coordinate_series
from pygivental.series.monomial import Monomial, Variable
from pygivental.series.truncated_series import TruncatedSeries
from pygivental.utils import dual_index

_logger = logging.getLogger(__name__)

THETA = 'theta'
TRANSFORMED = 'transformed'
LXZ = 'lxz'
DEFORMATION = 'deformation'


class HamiltonianDensity(object):
    """
    A density theta_{alpha,p} as a series in v^mu = t^{0,mu}.
    """

    def __init__(self, alpha, p, value, kind=THETA):
        """
        Args:
            alpha (int): primary index
            p (int): level
            value (TruncatedSeries): the density
            kind (str): THETA, TRANSFORMED, LXZ or DEFORMATION
        """
        self.alpha = alpha
        self.p = p
        self.value = value
        self.kind = kind

    def __eq__(self, other):
        if not isinstance(other, HamiltonianDensity):
            return NotImplemented
        return (self.alpha, self.p, self.kind) == (other.alpha, other.p, other.kind) \
            and self.value == other.value

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'HamiltonianDensity(%s, alpha=%d, p=%d, %d terms)' % (self.kind, self.alpha, self.p, len(self.value))


def u_operator(f):
    """
    U f on a series in the v^mu = t^{0,mu}; -v^n acts by multiplication.
    """
    n = f.dimension
    total = f.mul_monomial(Monomial([((0, n), 1)]), -1)
    d1 = f.partial(Variable(0, 1))
    for g in range(1, n + 1):
        pair = Monomial([((0, g), 1), ((0, dual_index(n, g)), 1)])
        total = total.add(d1.mul_monomial(pair, Fraction(-1, 2)))
        euler = Monomial([((0, g), 1), ((0, n), 1)])
        total = total.add(f.partial(Variable(0, g)).mul_monomial(euler))
    return total


def exp_u(f):
    """
    exp(U) f. Every term of U f has degree above the lowest degree of f, so
    the partial sums become constant below the degree cap.

    :raise CapError: a power of U fails to raise the degree, or the sum does
        not stabilise below the cap
    """
    total = f
    term = f
    low = min([m.degree for m in f.monomials()] or [0])
    k = 0
    while not term.is_zero():
        k += 1
        if k > f.degree_cap + 1:
            raise CapError('exp(U) did not stabilise within %d terms' % (f.degree_cap + 1),
                           cap=f.degree_cap + 1, required=k)
        term = u_operator(term).scale(Fraction(1, k))
        degrees = [m.degree for m in term.monomials()]
        if degrees and min(degrees) <= low:
            raise CapError('U did not raise the degree at step %d' % k, cap=low, required=min(degrees))
        low = min(degrees or [low + 1])
        total = total.add(term)
    _logger.debug('exp(U) stabilised after %d terms', k)
    return total


class PrincipalHierarchy(object):
    """
    Densities of one Frobenius potential up to a level and a degree cap.

    The genus zero descendant potential is reconstructed once, to degree
    cap + 2 and descendant level pmax + 1.
    """

    def __init__(self, potential, cap, pmax):
        """
        Args:
            potential (FrobeniusPotential): F at (0, ..., 0, 1), known to order cap + 2
            cap (int): degree up to which densities are exact
            pmax (int): highest level p of the compared families; theta is
                known to level pmax + 1

        :raise CapError: the jet of F is too short
        """
        if cap < 1:
            raise ValueError('cap should be a positive integer.')
        if pmax < 0:
            raise ValueError('pmax should be a non-negative integer.')
        self._potential = potential
        self._n = potential.dimension
        self._cap = cap
        self._pmax = pmax
        table = reconstruct_descendants(potential, cap + 2, pmax + 1)
        self._f0 = log_partition_function(table, degree_cap=cap + 2, genus_cap=0).hbar_part(-1)
        self._theta = {}
        self._images = None
        self._deformation_f0 = None
        _logger.debug('principal hierarchy of dimension %d: F_0 has %d terms', self._n, len(self._f0))

    @property
    def dimension(self):
        """n"""
        return self._n

    @property
    def cap(self):
        """degree cap of the densities"""
        return self._cap

    @property
    def pmax(self):
        """highest level of the compared families"""
        return self._pmax

    def _check(self, alpha, p, top):
        if not 1 <= alpha <= self._n:
            raise ValueError('alpha should lie in 1..%d, got %d' % (self._n, alpha))
        if p < 0:
            raise ValueError('level should be a non-negative integer.')
        if p > top:
            raise CapError('level %d requested, densities known to level %d' % (p, top), cap=top, required=p)

    def _restrict(self, series):
        return series.filter(lambda m: m.max_level() == 0).truncate(self._cap)

    def theta(self, alpha, p):
        """theta_{alpha,p}"""
        self._check(alpha, p, self._pmax + 1)
        key = (alpha, p)
        if key not in self._theta:
            second = self._f0.partial(Variable(p, alpha)).partial(Variable(0, 1))
            self._theta[key] = HamiltonianDensity(alpha, p, self._restrict(second))
        return self._theta[key]

    def transformed(self, alpha, p):
        """exp(U) theta_{alpha,p} + delta_{alpha,n} exp(U) theta_{1,p+1}"""
        self._check(alpha, p, self._pmax + 1)
        value = exp_u(self.theta(alpha, p).value)
        if alpha == self._n:
            value = value.add(exp_u(self.theta(1, p + 1).value))
        return HamiltonianDensity(alpha, p, value, TRANSFORMED)

    def _one_minus_eps(self):
        n = self._n
        return TruncatedSeries.constant(n, self._cap).sub(TruncatedSeries.variable(n, self._cap, 1, Variable(0, n)))

    def _inverse_images(self):
        if self._images is None:
            self._images = inverse_coordinate_series(self._n, self._cap)
        return self._images

    def lxz(self, alpha, p):
        """the comparison density theta''_{alpha,p} in the target coordinates"""
        self._check(alpha, p, self._pmax + 1)
        factor = self._one_minus_eps()
        if alpha == 1:
            if p == 0:
                return HamiltonianDensity(1, 0, factor.scale(-1), LXZ)
            source, sign = self.theta(self._n, p - 1), -1
        elif alpha == self._n:
            source, sign = self.theta(1, p + 1), 1
        else:
            source, sign = self.theta(alpha, p), 1
        value = source.value.substitute(self._inverse_images()).mul(factor).scale(sign)
        return HamiltonianDensity(alpha, p, value.truncate(self._cap), LXZ)

    def _deformation_potential(self):
        # the shift terms of (r_1 z)^ reach two levels above theta_{alpha,p}
        if self._deformation_f0 is None:
            table = reconstruct_descendants(self._potential, self._cap + 2, self._pmax + 2)
            self._deformation_f0 = log_partition_function(table, degree_cap=self._cap + 2,
                                                          genus_cap=0).hbar_part(-1)
        return self._deformation_f0

    def infinitesimal(self, alpha, p):
        """
        First order change of theta_{alpha,p} under (r_1 z)^ for the inversion
        r-matrix, computed from the genus zero part of the quantized operator.

        The shift terms lower the degree mark by one, so the result is exact
        to degree cap - 1.
        """
        self._check(alpha, p, self._pmax)
        op = quantize(RMatrix.inversion(self._n), 1)
        delta = op.apply_classical(self._deformation_potential())
        second = delta.partial(Variable(p, alpha)).partial(Variable(0, 1))
        value = second.filter(lambda m: m.max_level() == 0).truncate(self._cap - 1)
        return HamiltonianDensity(alpha, p, value, DEFORMATION)

    def expected_infinitesimal(self, alpha, p):
        """U theta_{alpha,p} + delta_{alpha,n} theta_{1,p+1}, exact to degree cap - 1"""
        self._check(alpha, p, self._pmax)
        value = u_operator(self.theta(alpha, p).value)
        if alpha == self._n:
            value = value.add(self.theta(1, p + 1).value)
        return HamiltonianDensity(alpha, p, value.truncate(self._cap - 1), DEFORMATION)



def theta(potential, alpha, p, cap):
    """theta_{alpha,p} of F, exact to degree cap"""
    return PrincipalHierarchy(potential, cap, max(p - 1, 0)).theta(alpha, p)


def transform_hamiltonians(potential, alpha, p, cap):
    """the exp(U)-transformed density of F, exact to degree cap"""
    return PrincipalHierarchy(potential, cap, p).transformed(alpha, p)


def lxz_hamiltonians(potential, alpha, p, cap):
    """the comparison density of F in the target coordinates, exact to degree cap"""
    return PrincipalHierarchy(potential, cap, p).lxz(alpha, p)


def infinitesimal_deformation(potential, alpha, p, cap):
    """
    (first order change from the operator, U theta + delta_{alpha,n} theta_{1,p+1})
    as a pair of HamiltonianDensity.
    """
    hierarchy = PrincipalHierarchy(potential, cap, p)
    return hierarchy.infinitesimal(alpha, p), hierarchy.expected_infinitesimal(alpha, p)
