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
This module provide the half-edge decorations of the graph sum.

    leaf      L  = exp(r(z)) sum_{d,mu} e_mu t^{d,mu} z^d
    dilaton   L0 = -z (exp(r(z)) - 1) e_1
    edge      E  = -hbar (exp(-r(-z)) exp(r(w)) - 1) / (z + w) eta^{-1}

Vector-valued series are returned as dicts keyed by (mu, z-power). The hbar of
an edge is accounted for by the contraction, so edge_bivector returns the
rational coefficients only.
"""
import logging
from fractions import Fraction

from pygivental.action.factorization import FactorizedAction
from pygivental.series.monomial import Monomial
from pygivental.series.truncated_series import TruncatedSeries

_logger = logging.getLogger(__name__)


def as_factorized(r_or_factorized, max_power):
    """Reuse a FactorizedAction or factorize an RMatrix to the given z-power."""
    if isinstance(r_or_factorized, FactorizedAction):
        return r_or_factorized
    return FactorizedAction(r_or_factorized, max_power)


def leaf_coefficient(factorized, mu, m, degree_cap, primary_only=False):
    """
    The e_mu z^m coefficient of L as a linear series in t:
    sum_j sum_nu (R_j)^mu_nu t^{m-j,nu}, with j <= factorized.cap.
    """
    n = factorized.dimension
    terms = {}
    low = m if primary_only else 0
    for j in range(low, min(m, factorized.cap) + 1):
        for nu in range(1, n + 1):
            c = factorized.r_entry(j, mu, nu)
            if c:
                mono = Monomial([((m - j, nu), 1)])
                terms[mono] = terms.get(mono, 0) + c
    return TruncatedSeries(n, degree_cap, 1, terms)


def leaf_vector(r_matrix, max_power, degree_cap=1, max_level=None, primary_only=False):
    """
    L truncated to z^m with m <= max_power (and t^{d,mu} with d <= max_level).

    :return: dict (mu, m) -> TruncatedSeries of the non-zero coefficients
    """
    f = as_factorized(r_matrix, max_power)
    max_level = max_power if max_level is None else max_level
    out = {}
    for m in range(max_power + 1):
        for mu in range(1, f.dimension + 1):
            series = leaf_coefficient(f, mu, m, degree_cap, primary_only)
            series = series.filter(lambda mono: mono.max_level() <= max_level)
            if not series.is_zero():
                out[(mu, m)] = series
    return out


def dilaton_coefficient(factorized, mu, m):
    """(L0)^mu_m = -(R_{m-1})^mu_1 for m >= 2, zero otherwise"""
    if m < 2:
        return Fraction(0)
    return -factorized.r_entry(m - 1, mu, 1)


def dilaton_leaf_vector(r_matrix, max_power):
    """
    L0 truncated to z^m with m <= max_power.

    :return: dict (mu, m) -> Fraction of the non-zero coefficients
    """
    f = as_factorized(r_matrix, max(max_power - 1, 0))
    out = {}
    for m in range(2, max_power + 1):
        for mu in range(1, f.dimension + 1):
            c = dilaton_coefficient(f, mu, m)
            if c:
                out[(mu, m)] = c
    return out


def edge_coefficient(factorized, a, mu, b, nu):
    """E^{mu nu}_{a,b} = -(Q_{a,b})^{mu nu}, without its hbar"""
    return -factorized.raised_quotient(a, b, mu, nu)


def edge_bivector(r_matrix, max_power):
    """
    E truncated to a + b <= max_power.

    :return: dict (a, mu, b, nu) -> Fraction of the non-zero coefficients
    :raise DivisionRemainderError: the quotient by (z + w) is not exact
    """
    f = as_factorized(r_matrix, max_power + 1)
    n = f.dimension
    out = {}
    for total in range(max_power + 1):
        for a in range(total + 1):
            b = total - a
            for mu in range(1, n + 1):
                for nu in range(1, n + 1):
                    c = edge_coefficient(f, a, mu, b, nu)
                    if c:
                        out[(a, mu, b, nu)] = c
    return out
