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
This module provide the inversion change of flat coordinates

    t^1' = 1/2 t_s t^s / t^n,   t^a' = t^a / t^n (a != 1, n),   t^n' = -1 / t^n

and its inverse, both on rational points and on jets at the expansion points
(0, ..., 0, 1) and (0, ..., 0, -1).

Jets are written in local coordinates: at the source point the last
coordinate is s = t^n - 1, at the target point it is eps = t^n' + 1. Both are
stored as the variable t^{0,n}.
"""
import logging
from fractions import Fraction

from pygivental.exception import SingularPointError
from pygivental.series.monomial import Monomial, Variable
from pygivental.series.truncated_series import TruncatedSeries
from pygivental.utils import dual_index

_logger = logging.getLogger(__name__)


def _check_point(point):
    point = [Fraction(x) for x in point]
    if len(point) < 2:
        raise ValueError('the inversion needs at least two coordinates.')
    if point[-1] == 0:
        raise SingularPointError('the inversion is singular on t^n = 0, got %r' % (tuple(point),))
    return point


def _pairing(point):
    """t_s t^s = sum_s t^s t^{n+1-s}"""
    n = len(point)
    return sum(point[s - 1] * point[dual_index(n, s) - 1] for s in range(1, n + 1))


def invert_coordinates(point):
    """
    Image of a point under the inversion.

    :param point: sequence of n rationals (t^1, ..., t^n)
    :return: tuple of Fraction
    :raise SingularPointError: t^n = 0
    """
    t = _check_point(point)
    n = len(t)
    last = t[-1]
    out = [_pairing(t) / (2 * last)]
    out.extend(t[a - 1] / last for a in range(2, n))
    out.append(-1 / last)
    return tuple(out)


def inverse_coordinates(point):
    """
    Preimage of a point under the inversion.

    :param point: sequence of n rationals (t^1', ..., t^n')
    :return: tuple of Fraction
    :raise SingularPointError: t^n' = 0
    """
    t = _check_point(point)
    n = len(t)
    last = t[-1]
    out = [_pairing(t) / (2 * last)]
    out.extend(-t[a - 1] / last for a in range(2, n))
    out.append(-1 / last)
    return tuple(out)


def _coordinate(n, cap, mu):
    return TruncatedSeries.variable(n, cap, 1, Variable(0, mu))


def geometric_factor(n, cap, sign=1):
    """1 / (1 - sign * t^{0,n}) as a series"""
    base = TruncatedSeries.constant(n, cap).sub(_coordinate(n, cap, n).scale(sign))
    return base.reciprocal()


def middle_pairing_series(n, cap):
    """sum_{a=2}^{n-1} t^a t^{n+1-a} in the local coordinates"""
    total = TruncatedSeries.zero(n, cap)
    for a in range(2, n):
        total = total.add(_coordinate(n, cap, a).mul(_coordinate(n, cap, dual_index(n, a))))
    return total


def inverse_coordinate_series(n, cap):
    """
    Source local coordinates as series in the target local coordinates:

        t^1 = t^1' - 1/2 sum_mid / (1 - eps)
        t^a = t^a' / (1 - eps)
        s   = eps / (1 - eps)

    :return: dict Variable -> TruncatedSeries
    """
    if n < 2:
        raise ValueError('the inversion needs dimension at least 2.')
    u = geometric_factor(n, cap, 1)
    images = {Variable(0, 1): _coordinate(n, cap, 1).sub(middle_pairing_series(n, cap).mul(u).scale(Fraction(1, 2)))}
    for a in range(2, n):
        images[Variable(0, a)] = _coordinate(n, cap, a).mul(u)
    images[Variable(0, n)] = _coordinate(n, cap, n).mul(u)
    return images


def invert_coordinate_series(n, cap):
    """
    Target local coordinates as series in the source local coordinates:

        t^1' = t^1 + 1/2 sum_mid / (1 + s)
        t^a' = t^a / (1 + s)
        eps  = s / (1 + s)

    :return: dict Variable -> TruncatedSeries
    """
    if n < 2:
        raise ValueError('the inversion needs dimension at least 2.')
    w = geometric_factor(n, cap, -1)
    images = {Variable(0, 1): _coordinate(n, cap, 1).add(middle_pairing_series(n, cap).mul(w).scale(Fraction(1, 2)))}
    for a in range(2, n):
        images[Variable(0, a)] = _coordinate(n, cap, a).mul(w)
    images[Variable(0, n)] = _coordinate(n, cap, n).mul(w)
    return images


def compose_coordinates(outer, inner):
    """outer(inner(x)): substitute inner into every image of outer"""
    return dict((v, image.substitute(inner)) for v, image in outer.items())


def is_identity(images, cap):
    """True when every image is its own variable up to the cap"""
    for v, image in images.items():
        expected = TruncatedSeries(image.dimension, cap, 1, {Monomial([((v.d, v.mu), 1)]): 1})
        if not image.truncate(cap).sub(expected).is_zero():
            return False
    return True
