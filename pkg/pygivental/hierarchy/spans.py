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
This module provide exact comparison of the linear spans of two families of
densities, level by level.
"""
import logging
from collections import namedtuple
from fractions import Fraction

import sympy

from pygivental.action.rmatrix import to_fraction, to_rational
from pygivental.exception import DimensionMismatchError
from pygivental.series.monomial import ONE
from pygivental.utils import format_rational

_logger = logging.getLogger(__name__)

# a linear functional on coefficients that kills every member of one family
# and pairs non-trivially with member `index` of the other
SpanCertificate = namedtuple('SpanCertificate', ['family', 'index', 'functional', 'pairing'])


def _value(member):
    return getattr(member, 'value', member)


class SpanComparison(object):
    """
    Outcome of comparing span(A) with span(B).

    change_of_basis[j][k] is the coefficient of A_k in B_j when every B_j
    lies in span(A); the certificate names a member outside the other span.
    """

    def __init__(self, level, families, change_of_basis=None, certificate=None, coincident=None):
        self.level = level
        self.families = families
        self.change_of_basis = change_of_basis
        self.certificate = certificate
        self.coincident = coincident or {}

    @property
    def equal(self):
        """True when the two spans agree"""
        return self.certificate is None

    def to_dict(self):
        """to dict"""
        res = {
            'level': self.level,
            'equal': self.equal,
            'sizes': [len(f) for f in self.families],
        }
        if self.change_of_basis is not None:
            res['changeOfBasis'] = [[format_rational(c) for c in row] for row in self.change_of_basis]
        if self.certificate is not None:
            res['certificate'] = {
                'family': self.certificate.family,
                'index': self.certificate.index,
                'pairing': format_rational(self.certificate.pairing),
                'functional': [{'monomial': str(m), 'coeff': format_rational(c)}
                               for m, c in self.certificate.functional],
            }
        if self.coincident:
            res['coincident'] = dict(('%d' % alpha, same) for alpha, same in sorted(self.coincident.items()))
        return res

    def __repr__(self):
        return 'SpanComparison(level=%r, equal=%r)' % (self.level, self.equal)


def _coefficient_matrix(series, monomials):
    return sympy.Matrix(len(monomials), len(series),
                        lambda i, k: to_rational(series[k].coefficient(monomials[i])))


def _solve(a_matrix, column):
    """x with a_matrix x = column, free parameters set to zero; None when inconsistent"""
    if a_matrix.cols == 0:
        return [] if column.is_zero_matrix else None
    if a_matrix.rows == 0:
        return [Fraction(0)] * a_matrix.cols
    try:
        solution, params = a_matrix.gauss_jordan_solve(column)
    except ValueError:
        return None
    solution = solution.subs(dict((p, 0) for p in params))
    return [to_fraction(x) for x in solution]


def _certificate(family, index, a_matrix, column, monomials):
    """y with y^T A = 0 and y . column != 0"""
    if a_matrix.cols == 0:
        basis = [sympy.Matrix.eye(len(monomials)).col(i) for i in range(len(monomials))]
    else:
        basis = a_matrix.T.nullspace()
    for y in basis:
        pairing = (y.T * column)[0, 0]
        if pairing != 0:
            functional = [(monomials[i], to_fraction(y[i])) for i in range(len(monomials)) if y[i] != 0]
            return SpanCertificate(family, index, functional, to_fraction(pairing))
    raise AssertionError('inconsistent system without a separating functional')


def _express(family, left, right, monomials):
    """rows expressing every member of right through left, or a certificate"""
    a_matrix = _coefficient_matrix(left, monomials)
    rows = []
    for j, member in enumerate(right):
        column = _coefficient_matrix([member], monomials)
        x = _solve(a_matrix, column)
        if x is None:
            return None, _certificate(family, j, a_matrix, column, monomials)
        rows.append(x)
    _logger.debug('span of %d members has rank %d', len(left), a_matrix.rank() if left else 0)
    return rows, None


def compare_spans(family_a, family_b, level=None, modulo_constants=False):
    """
    Decide span(A) == span(B) over the rationals.

    Args:
        family_a (list): HamiltonianDensity or TruncatedSeries
        family_b (list): HamiltonianDensity or TruncatedSeries
        level (int): recorded in the result
        modulo_constants (bool): ignore the constant coefficients

    :return: SpanComparison; its certificate is None exactly when the spans agree
    """
    a = [_value(m) for m in family_a]
    b = [_value(m) for m in family_b]
    dims = set(s.dimension for s in a + b)
    if len(dims) > 1:
        dims = sorted(dims)
        raise DimensionMismatchError('families mix dimensions %r' % (dims,), left=dims[0], right=dims[-1])
    monomials = set()
    for s in a + b:
        monomials.update(s.monomials())
    if modulo_constants:
        monomials.discard(ONE)
    monomials = sorted(monomials)
    change, certificate = _express('B', a, b, monomials)
    if certificate is None:
        _, certificate = _express('A', b, a, monomials)
    if certificate is not None:
        _logger.debug('spans differ at level %r: member %d of family %s lies outside',
                      level, certificate.index, certificate.family)
        change = None
    return SpanComparison(level, (list(family_a), list(family_b)), change, certificate)


def level_families(hierarchy, p):
    """
    The transformed and the comparison family of level p:

        A_p = [theta'_{a,p} for 2 <= a <= n-1] + [theta'_{1,p+1}, theta'_{n,p}]
        B_p = [theta''_{a,p} for 2 <= a <= n-1] + [theta''_{n,p}, theta''_{1,p+1}]

    theta'_{1,p+1} = theta''_{n,p} and theta'_{n,p} = theta''_{n,p} - theta''_{1,p+1},
    so the change of basis is the identity on the middle range and
    [[1, 0], [1, -1]] on the last two members. The constants theta'_{1,0} and
    theta''_{1,0} stay outside every level.
    """
    n = hierarchy.dimension
    middle = range(2, n)
    family_a = [hierarchy.transformed(alpha, p) for alpha in middle]
    family_a += [hierarchy.transformed(1, p + 1), hierarchy.transformed(n, p)]
    family_b = [hierarchy.lxz(alpha, p) for alpha in middle]
    family_b += [hierarchy.lxz(n, p), hierarchy.lxz(1, p + 1)]
    return family_a, family_b


def compare_level(hierarchy, p, modulo_constants=False):
    """
    compare_spans on level_families, also recording for every middle index
    whether the two densities coincide exactly.
    """
    family_a, family_b = level_families(hierarchy, p)
    result = compare_spans(family_a, family_b, p, modulo_constants)
    for k, alpha in enumerate(range(2, hierarchy.dimension)):
        result.coincident[alpha] = family_a[k].value.sub(family_b[k].value).is_zero()
    return result
