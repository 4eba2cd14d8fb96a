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
This module provide the quantized operators (r_l z^l)^ and their exponential.

    (r_l z^l)^ = - (r_l)^mu_1 d/dt^{l+1,mu}
                 + sum_d t^{d,nu} (r_l)^mu_nu d/dt^{d+l,mu}
                 + hbar/2 sum_{i=0}^{l-1} (-1)^{i+1} (r_l)^{mu nu} d/dt^{i,mu} d/dt^{l-1-i,nu}

Exactness. Write ex = vdim - weighted degree; tame series have ex >= 0 and
every operator above raises ex by at least one, lowers the degree by at most
two and raises the vdim needed from its input by at most one. A composite of
exponentials is therefore exact on the output region (K, P) whenever its input
is exact on (K + 2P, 2P).
"""
import logging
from collections import namedtuple
from fractions import Fraction

from pygivental.exception import CapError, DimensionMismatchError
from pygivental.series.monomial import Monomial, Variable, ONE

_logger = logging.getLogger(__name__)

HBAR_MONOMIAL = ONE.times_hbar(1)

Region = namedtuple('Region', ['degree', 'vdim'])


def action_input_caps(out_degree, out_vdim):
    """
    Watermark the input series needs so that the action is exact on the
    output region degree <= out_degree, vdim <= out_vdim.
    """
    return Region(out_degree + 2 * out_vdim, 2 * out_vdim)


def exact_output_region(watermark):
    """Largest output region (with maximal vdim) an input watermark supports."""
    vdim = max(min(watermark[1] // 2, watermark[0] // 2), 0)
    return Region(watermark[0] - 2 * vdim, vdim)


class DifferentialOperator(object):
    """
    A second order operator on series in t^{d,mu}:

        sum c d/dt^{a}                               (shift terms)
      + sum c sum_d t^{d,nu} d/dt^{d+l,mu}           (linear terms)
      + hbar sum c d/dt^{a} d/dt^{b}                  (quadratic terms)
    """

    def __init__(self, dimension, shifts=None, linear=None, quadratic=None):
        """
        Args:
            dimension (int): n
            shifts (list): (coefficient, Variable)
            linear (list): (coefficient, l, mu, nu)
            quadratic (list): (coefficient, Variable, Variable)
        """
        self._n = dimension
        self._shifts = [(Fraction(c), v) for c, v in (shifts or []) if c]
        self._linear = [(Fraction(c), l, mu, nu) for c, l, mu, nu in (linear or []) if c]
        self._quadratic = [(Fraction(c), a, b) for c, a, b in (quadratic or []) if c]

    @property
    def dimension(self):
        """n"""
        return self._n

    @property
    def shifts(self):
        """(coefficient, Variable) of the first order constant terms"""
        return list(self._shifts)

    @property
    def linear(self):
        """(coefficient, l, mu, nu) of the linear vector field terms"""
        return list(self._linear)

    @property
    def quadratic(self):
        """(coefficient, Variable, Variable) of the hbar-weighted second order terms"""
        return list(self._quadratic)

    def is_zero(self):
        """True when every term vanishes"""
        return not (self._shifts or self._linear or self._quadratic)

    def __add__(self, other):
        return DifferentialOperator(self._n, self._shifts + other._shifts,
                                    self._linear + other._linear,
                                    self._quadratic + other._quadratic)

    def _linear_part(self, z, d):
        """sum c t^{d-l,nu} dz/dt^{d,mu} over the variables present in z"""
        total = z.scale(0)
        if not self._linear:
            return total
        present = set()
        for mono in z.monomials():
            for dd, mu, _ in mono.triples:
                present.add((dd, mu))
        for c, l, mu, nu in self._linear:
            for dd, m in sorted(present):
                if m != mu or dd < l:
                    continue
                source = Monomial([((dd - l, nu), 1)])
                total = total.add(d(Variable(dd, mu)).mul_monomial(source, c))
        return total

    def apply(self, z, check=True):
        """
        The operator applied to a series.

        Args:
            z (TruncatedSeries): the argument
            check (bool): refuse results without reliable coefficients

        :raise CapError: the watermark of the result falls below zero
        """
        if z.dimension != self._n:
            raise DimensionMismatchError('operator of dimension %d applied to a series of dimension %d'
                                         % (self._n, z.dimension), left=self._n, right=z.dimension)
        total = z.scale(0)
        first = {}

        def d(variable):
            if variable not in first:
                first[variable] = z.partial(variable)
            return first[variable]

        for c, variable in self._shifts:
            total = total.add(d(variable).scale(c))
        total = total.add(self._linear_part(z, d))
        for c, a, b in self._quadratic:
            total = total.add(d(a).partial(b).mul_monomial(HBAR_MONOMIAL, c))
        if check and total.watermark[0] < 0:
            raise CapError('operator application leaves no reliable coefficients (watermark %r)'
                           % (total.watermark,), cap=z.watermark)
        return total

    def apply_classical(self, f):
        """
        Genus zero part of the operator: the first order change of an
        hbar-free F under Z -> Z + op Z with Z = exp(F / hbar),

            sum c dF/dt^a + sum c t^{d,nu} dF/dt^{d+l,mu} + sum c dF/dt^a dF/dt^b.

        For F without terms of degree < 3 the result is exact to the degree
        mark of F, one less when shift terms are present.
        """
        if f.dimension != self._n:
            raise DimensionMismatchError('operator of dimension %d applied to a series of dimension %d'
                                         % (self._n, f.dimension), left=self._n, right=f.dimension)
        total = f.scale(0)
        first = {}

        def d(variable):
            if variable not in first:
                first[variable] = f.partial(variable)
            return first[variable]

        for c, variable in self._shifts:
            total = total.add(d(variable).scale(c))
        total = total.add(self._linear_part(f, d))
        for c, a, b in self._quadratic:
            total = total.add(d(a).mul(d(b)).scale(c))
        if all(mono.degree >= 3 for mono in f.monomials()):
            mark = f.watermark[0] - (1 if self._shifts else 0)
            total = total.with_exact_region((mark, min(mark, f.watermark[1])))
        return total

    def exponentiate(self, z, region=None):
        """
        exp(operator) applied to z, summed until the terms vanish.

        Args:
            z (TruncatedSeries): tame input
            region (Region): output region to certify; derived from the
                watermark of z when omitted

        :raise CapError: the sum does not terminate or z lacks headroom
        """
        region = check_region(z, region)
        return self.exponential_sum(z).with_exact_region(region)

    def exponential_sum(self, z):
        """
        sum_k op^k z / k! without any region bookkeeping; the caller certifies
        the result.

        :raise CapError: the sum does not terminate
        """
        bound = z.degree_cap + max(z.vdim_cap, 0) + 3 * z.genus_cap + 2
        total = z
        term = z
        k = 0
        while not self.is_zero():
            k += 1
            if k > bound:
                raise CapError('operator exponential did not terminate within %d terms' % bound, cap=bound)
            term = self.apply(term, check=False).scale(Fraction(1, k))
            if term.is_zero():
                break
            total = total.add(term)
        _logger.debug('operator exponential stabilised after %d terms', k)
        return total


def check_region(z, region):
    """
    Resolve the output region of an exponentiated action and make sure z
    carries enough headroom for it.

    :raise ValueError: z is not tame
    :raise CapError: the watermark of z is too low for the region
    """
    if not z.is_tame():
        raise ValueError('the action is only exact on tame series.')
    if region is None:
        region = exact_output_region(z.watermark)
    region = Region(*region)
    need = action_input_caps(region.degree, region.vdim)
    if need.degree > z.watermark[0] or need.vdim > z.watermark[1]:
        raise CapError('output region %r needs an input exact to %r, have %r'
                       % (tuple(region), tuple(need), z.watermark),
                       cap=z.watermark, required=tuple(need))
    return region


def quantize(r_matrix, level, matrix=None):
    """
    The operator (r_l z^l)^ of one level.

    Args:
        r_matrix (RMatrix): supplies r_l (and the dimension)
        level (int): l >= 1
        matrix: optional explicit r_l overriding the one in r_matrix
    """
    if level < 1:
        raise ValueError('level should be a positive integer.')
    n = r_matrix.dimension
    if matrix is None:
        entry = lambda nu, mu: r_matrix.entry(level, nu, mu)
    else:
        from pygivental.action.rmatrix import to_fraction
        entry = lambda nu, mu: to_fraction(matrix[nu - 1, mu - 1])
    raised = lambda mu, nu: entry(mu, n + 1 - nu)
    shifts = [(-entry(mu, 1), Variable(level + 1, mu)) for mu in range(1, n + 1)]
    linear = [(entry(mu, nu), level, mu, nu) for mu in range(1, n + 1) for nu in range(1, n + 1)]
    quadratic = []
    for i in range(level):
        sign = -1 if i % 2 == 0 else 1
        for mu in range(1, n + 1):
            for nu in range(1, n + 1):
                quadratic.append((Fraction(sign, 2) * raised(mu, nu),
                                  Variable(i, mu), Variable(level - 1 - i, nu)))
    return DifferentialOperator(n, shifts, linear, quadratic)


def quantize_all(r_matrix):
    """A = sum_l (r_l z^l)^"""
    op = DifferentialOperator(r_matrix.dimension)
    for level in r_matrix.levels:
        op = op + quantize(r_matrix, level)
    return op


def apply_infinitesimal(r_matrix, z, level=None):
    """
    (r_l z^l)^ Z for one level, or sum_l (r_l z^l)^ Z when level is None.

    :raise CapError: the shifted indices leave no reliable coefficients
    """
    if r_matrix.dimension != z.dimension:
        raise DimensionMismatchError('r-matrix of dimension %d applied to a series of dimension %d'
                                     % (r_matrix.dimension, z.dimension),
                                     left=r_matrix.dimension, right=z.dimension)
    op = quantize_all(r_matrix) if level is None else quantize(r_matrix, level)
    return op.apply(z)


def exponentiate_action(r_matrix, z, region=None):
    """
    R^ Z = sum_k A^k Z / k! with A = sum_l (r_l z^l)^.

    Args:
        r_matrix (RMatrix): the group element
        z (TruncatedSeries): tame partition function
        region (Region): output region to certify, see action_input_caps

    :raise CapError: the input lacks headroom or the sum does not terminate
    """
    if r_matrix.dimension != z.dimension:
        raise DimensionMismatchError('r-matrix of dimension %d applied to a series of dimension %d'
                                     % (r_matrix.dimension, z.dimension),
                                     left=r_matrix.dimension, right=z.dimension)
    return quantize_all(r_matrix).exponentiate(z, region)
