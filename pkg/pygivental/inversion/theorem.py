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
This module provide the coefficientwise comparison of the inverted potential
with the genus zero, descendant-free part of the Givental transform by the
single-entry r-matrix (r_1)^1_n = 1.

The CohFT is the genus zero descendant table of F expanded at (0, ..., 0, 1);
its variable t^{0,n} measures the shift from that point and is compared with
eps = t^n' + 1. Terms of order <= 2 are ignored on every route.
"""
import itertools
import logging
from collections import namedtuple

from pygivental.action.quantization import Region, action_input_caps, exponentiate_action
from pygivental.action.rmatrix import RMatrix
from pygivental.cohft.correlator_table import table_to_partition_function
from pygivental.cohft.reconstruction import reconstruct_descendants
from pygivental.graphs.contraction import graph_sum
from pygivental.graphs.graph import GraphCaps
from pygivental.inversion.potential import (
    invert_potential,
    invert_potential_by_definition,
    target_point,
)
from pygivental.model.enum import Route
from pygivental.series.monomial import Monomial

_logger = logging.getLogger(__name__)


class InversionData(object):
    """
    The Givental data of the inversion in dimension n.
    """

    def __init__(self, dimension):
        if dimension < 2:
            raise ValueError('the inversion needs dimension at least 2.')
        self._n = dimension
        self._r = RMatrix.inversion(dimension)

    @property
    def dimension(self):
        """n"""
        return self._n

    @property
    def r_matrix(self):
        """r_1 with (r_1)^1_n = 1 and r_l = 0 for l > 1"""
        return self._r

    @property
    def source_point(self):
        """(0, ..., 0, 1)"""
        return tuple([0] * (self._n - 1) + [1])

    @property
    def target_point(self):
        """(0, ..., 0, -1)"""
        return target_point(self._n)


CoefficientRow = namedtuple('CoefficientRow', ['monomial', 'coordinate', 'givental', 'definition', 'equal'])


class CoefficientReport(object):
    """
    Coefficients of every primary monomial of degree 3..cap on each route
    that was run; a route that was not run reports None.
    """

    def __init__(self, dimension, cap, route, rows):
        self.dimension = dimension
        self.cap = cap
        self.route = route
        self.rows = list(rows)

    @property
    def ok(self):
        """True when every row agrees"""
        return all(row.equal for row in self.rows)

    def mismatches(self):
        """rows where the routes disagree"""
        return [row for row in self.rows if not row.equal]

    def __repr__(self):
        return 'CoefficientReport(n=%d, cap=%d, route=%s, %d rows, %d mismatches)' \
            % (self.dimension, self.cap, self.route, len(self.rows), len(self.mismatches()))


def primary_monomials(dimension, low, high):
    """every monomial in t^{0,1..n} of degree low..high, in canonical order"""
    out = []
    for degree in range(low, high + 1):
        for mus in itertools.combinations_with_replacement(range(1, dimension + 1), degree):
            out.append(Monomial([((0, mu), 1) for mu in mus]))
    return sorted(out)


def _genus_zero_primary(series, cap):
    part = series.hbar_part(-1).filter(lambda m: m.max_level() == 0 and m.degree >= 3)
    return part.truncate(cap)


def givental_potential(potential, cap=None, route=Route.GRAPH, table=None, config=None):
    """
    Genus zero, descendant-free part of the inversion Givental transform of
    the CohFT of F, as an hbar-free series.

    Args:
        potential (FrobeniusPotential): F at (0, ..., 0, 1)
        cap (int): largest degree compared
        route (Route): GRAPH sums over graphs, OPERATOR exponentiates the
            quantized operator
        table (CorrelatorTable): genus zero table to use instead of the
            reconstruction from F
        config (Configuration): worker count for the graph sum

    :raise CapError: the jet of F or the table is too short
    """
    n = potential.dimension
    cap = potential.degree_cap if cap is None else cap
    if cap < 3:
        raise ValueError('cap should be at least 3.')
    data = InversionData(n)
    vdim = cap - 3
    if route == Route.OPERATOR:
        need = action_input_caps(cap, vdim)
        if table is None:
            table = reconstruct_descendants(potential, min(need.degree, need.vdim + 3), need.vdim)
        z = table_to_partition_function(table, degree_cap=need.degree, genus_cap=0, vdim_cap=need.vdim)
        transformed = exponentiate_action(data.r_matrix, z, Region(cap, vdim)).log()
        return _genus_zero_primary(transformed, cap)
    if route != Route.GRAPH:
        raise ValueError('route should be GRAPH or OPERATOR, got %s' % route)
    if table is None:
        table = reconstruct_descendants(potential, cap, vdim)
    caps = GraphCaps.for_region(cap, vdim, max_genus=0)
    total = graph_sum(table, data.r_matrix, caps, primary_only=True, config=config)
    return _genus_zero_primary(total, cap)


def verify_inversion_theorem(potential, cap=None, route=Route.BOTH, table=None, config=None):
    """
    Compare the inverted potential with its Givental form coefficient by
    coefficient.

    Args:
        potential (FrobeniusPotential): F at (0, ..., 0, 1)
        cap (int): largest degree compared
        route (Route): COORD compares the closed form with the definition
            route; GIVENTAL or GRAPH compare it with the graph sum; OPERATOR
            with the operator exponential; BOTH runs all but the operator
        table (CorrelatorTable): genus zero table replacing the reconstruction
        config (Configuration): worker count for the graph sum

    :return: CoefficientReport
    """
    cap = potential.degree_cap if cap is None else cap
    n = potential.dimension
    closed = invert_potential(potential, cap).series
    definition = None
    givental = None
    if route in (Route.COORD, Route.BOTH):
        definition = invert_potential_by_definition(potential, cap).series
    if route in (Route.GIVENTAL, Route.GRAPH, Route.BOTH):
        givental = givental_potential(potential, cap, Route.GRAPH, table, config)
    elif route == Route.OPERATOR:
        givental = givental_potential(potential, cap, Route.OPERATOR, table, config)
    rows = []
    for mono in primary_monomials(n, 3, cap):
        coordinate = closed.coefficient(mono)
        values = [coordinate]
        g = d = None
        if givental is not None:
            g = givental.coefficient(mono)
            values.append(g)
        if definition is not None:
            d = definition.coefficient(mono)
            values.append(d)
        rows.append(CoefficientRow(mono, coordinate, g, d, len(set(values)) == 1))
    report = CoefficientReport(n, cap, route, rows)
    for row in report.mismatches():
        _logger.warning('inversion mismatch at %s: coordinate %s, givental %s, definition %s',
                        row.monomial, row.coordinate, row.givental, row.definition)
    return report
