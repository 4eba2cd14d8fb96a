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
This module provide the inversion of a Frobenius potential F in normal form

    F = 1/2 (t^1)^2 t^n + 1/2 t^1 sum_mid + H(t^2, ..., t^n),

expanded at (0, ..., 0, 1), into F' expanded at (0, ..., 0, -1). With
t^n' = -1 + eps the closed form reads

    F' = 1/2 (t^1')^2 eps + 1/2 t^1' sum_mid'
         - 1/8 (sum_mid')^2 / (1 - eps)
         + (1 - eps)^2 H(t^a' / (1 - eps), s = eps / (1 - eps))

up to terms of order <= 2. The definition route composes the jet of F with
the inverse coordinate map, F' = (t^n')^2 F(t(t')) + 1/2 t^1' t_s' t^s'.
"""
import logging
from fractions import Fraction
from math import comb, factorial

from pygivental.cohft.potential import FrobeniusPotential, unit_cubic, primary
from pygivental.exception import CapError
from pygivental.inversion.coordinates import (
    geometric_factor,
    inverse_coordinate_series,
    middle_pairing_series,
)
from pygivental.series.monomial import Variable
from pygivental.series.truncated_series import TruncatedSeries
from pygivental.utils import dual_index, multiset_aut

_logger = logging.getLogger(__name__)


def target_point(dimension):
    """(0, ..., 0, -1)"""
    return tuple([0] * (dimension - 1) + [-1])


def _resolve_cap(potential, cap):
    cap = potential.degree_cap if cap is None else cap
    if cap < 3:
        raise ValueError('cap should be at least 3.')
    if cap > potential.degree_cap:
        raise CapError('inversion to order %d needs the jet of F to order %d, have %d'
                       % (cap, cap, potential.degree_cap), cap=potential.degree_cap, required=cap)
    return cap


def _variable(n, cap, mu):
    return TruncatedSeries.variable(n, cap, 1, Variable(0, mu))


def inversion_q_part(dimension, cap):
    """-1/8 (sum_mid')^2 / (1 - eps)"""
    mid = middle_pairing_series(dimension, cap)
    return mid.mul(mid).mul(geometric_factor(dimension, cap)).scale(Fraction(-1, 8))


def inversion_h_part(potential, cap=None):
    """(1 - eps)^2 H(t^a' / (1 - eps), eps / (1 - eps))"""
    cap = _resolve_cap(potential, cap)
    n = potential.dimension
    u = geometric_factor(n, cap)
    images = dict((Variable(0, a), _variable(n, cap, a).mul(u)) for a in range(2, n + 1))
    h = potential.h_part().truncate(cap)
    one_minus = TruncatedSeries.constant(n, cap).sub(_variable(n, cap, n))
    return h.substitute(images).mul(one_minus).mul(one_minus)


def invert_potential(potential, cap=None):
    """
    The inverted potential at (0, ..., 0, -1) from its closed form, in the
    local coordinates (t^1', ..., t^{n-1}', eps).

    :raise CapError: the jet of F is shorter than cap
    """
    cap = _resolve_cap(potential, cap)
    n = potential.dimension
    series = unit_cubic(n, cap).add(inversion_q_part(n, cap)).add(inversion_h_part(potential, cap))
    _logger.debug('inverted potential of dimension %d to order %d has %d terms', n, cap, len(series))
    return FrobeniusPotential(n, series, point=target_point(n))


def invert_potential_by_definition(potential, cap=None):
    """
    The inverted potential computed as (t^n')^2 F(t(t')) + 1/2 t^1' t_s' t^s'
    on jets.

    :raise CapError: the jet of F is shorter than cap
    """
    cap = _resolve_cap(potential, cap)
    n = potential.dimension
    images = inverse_coordinate_series(n, cap)
    t1 = images[primary(1)]
    # F in local coordinates lacks its order two term 1/2 (t^1)^2
    global_f = potential.series.truncate(cap).substitute(images).add(t1.mul(t1).scale(Fraction(1, 2)))
    one_minus = TruncatedSeries.constant(n, cap).sub(_variable(n, cap, n))
    hat1 = _variable(n, cap, 1)
    tail = hat1.mul(hat1).mul(one_minus).scale(-1) \
        .add(hat1.mul(middle_pairing_series(n, cap)).scale(Fraction(1, 2)))
    series = global_f.mul(one_minus).mul(one_minus).add(tail).filter(lambda m: m.degree >= 3)
    return FrobeniusPotential(n, series, point=target_point(n))


def aut2_order(alpha, beta, n):
    """
    Symmetry factor of the quartic term t^a t^a' t^b t^b' of the inverted
    potential, a' = n + 1 - a: 1 when the four indices are pairwise distinct,
    8 when they all coincide and 2 otherwise.

    :raise ValueError: an index lies outside 2..n-1
    """
    for index in (alpha, beta):
        if not 2 <= index <= n - 1:
            raise ValueError('index %d outside the middle range 2..%d' % (index, n - 1))
    distinct = len(set((alpha, beta, dual_index(n, alpha), dual_index(n, beta))))
    if distinct == 4:
        return 1
    if distinct == 1:
        return 8
    return 2


def h_correlator(potential, alphas, q):
    """
    <tau_0(a_1) ... tau_0(a_N) tau_0(n)^q> of the H-part of the inverted potential:

        sum_{p+k=q} q!/p! C(N+k+p-3, k) H_{a_1 ... a_N n^p}

    :raise ValueError: an index lies outside 2..n-1
    """
    n = potential.dimension
    alphas = list(alphas)
    for a in alphas:
        if not 2 <= a <= n - 1:
            raise ValueError('index %d outside the middle range 2..%d' % (a, n - 1))
    total = Fraction(0)
    big_n = len(alphas)
    for p in range(q + 1):
        k = q - p
        if big_n + p < 3:
            continue
        derivative = potential.primary_correlator(alphas + [n] * p)
        if derivative:
            total += Fraction(factorial(q), factorial(p)) * comb(big_n + k + p - 3, k) * derivative
    return total


def q_correlator(alpha, beta, k, n):
    """
    <tau_0(a) tau_0(a') tau_0(b) tau_0(b') tau_0(n)^k> of the quartic part:
    -k! |Aut((a, b, a', b'))| / |Aut2(a, b)|.
    """
    quad = (alpha, beta, dual_index(n, alpha), dual_index(n, beta))
    return Fraction(-factorial(k) * multiset_aut(quad), aut2_order(alpha, beta, n))


def _dual_pairs(n, middle):
    """(a, b) when the multiset is {a, a', b, b'}, else None"""
    if len(middle) != 4:
        return None
    rest = sorted(middle)
    alpha = rest.pop(0)
    if dual_index(n, alpha) not in rest:
        return None
    rest.remove(dual_index(n, alpha))
    if rest[0] != dual_index(n, rest[1]):
        return None
    return alpha, min(rest)


def inverted_correlator(potential, mus):
    """
    <tau_0(mu_1) ... tau_0(mu_k)> of the inverted potential assembled from its
    cubic, quartic and H sectors.
    """
    n = potential.dimension
    mus = sorted(mus)
    if len(mus) < 3:
        return Fraction(0)
    if 1 in mus:
        if len(mus) != 3:
            return Fraction(0)
        return Fraction(1) if mus[1] == dual_index(n, mus[2]) else Fraction(0)
    q = mus.count(n)
    middle = [mu for mu in mus if mu != n]
    value = h_correlator(potential, middle, q)
    pairs = _dual_pairs(n, middle)
    if pairs is not None:
        value += q_correlator(pairs[0], pairs[1], q, n)
    return value
