# Copyright 2023 Baidu, Inc.
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
Examples for pygivental
"""

import logging
from fractions import Fraction

from pygivental.action import Region, RMatrix, exponentiate_action, apply_factorized, action_input_caps
from pygivental.cohft import FrobeniusPotential, reconstruct_descendants, table_to_partition_function
from pygivental.configuration import Configuration
from pygivental.exception import CapError
from pygivental.graphs import GraphCaps, graph_sum, decorated_contributions
from pygivental.hierarchy import PrincipalHierarchy, compare_level
from pygivental.inversion import verify_inversion_theorem
from pygivental.model.enum import Route
from pygivental.series import Monomial

logging.basicConfig(filename='example.log', level=logging.DEBUG,
                format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

class GiventalExample:
    def __init__(self, sigmas, config):
        """
        two dimensional potential from its sigma_k
        """
        self._potential = FrobeniusPotential.two_dimensional(sigmas, 7)
        self._config = config
        self._r = RMatrix.inversion(2)

    def transform(self):
        """inversion r-matrix through both routes"""
        region = Region(5, 2)
        need = action_input_caps(region.degree, region.vdim)
        table = reconstruct_descendants(self._potential, min(need.degree, need.vdim + 3), need.vdim)
        by_graphs = graph_sum(table, self._r, GraphCaps.for_region(region.degree, region.vdim),
                              config=self._config)
        z = table_to_partition_function(table, degree_cap=need.degree, genus_cap=0, vdim_cap=need.vdim)
        by_operator = exponentiate_action(self._r, z, region).log()
        factorized = apply_factorized(self._r, z, region).log()
        logger.debug("graph sum has {} terms".format(len(by_graphs)))
        logger.debug("routes differ at {}".format(by_graphs.difference_within(by_operator, 5, 2)))
        logger.debug("factorized differs at {}".format(factorized.difference_within(by_operator, 5, 2)))
        sigma_5 = by_graphs.coefficient(Monomial([((0, 2), 5)], -1)) * 120
        logger.debug("sigma~_5 = {}".format(sigma_5))

    def show_graphs(self):
        """decorated graphs behind the (t^2)^5 coefficient"""
        table = reconstruct_descendants(self._potential, 5, 2)
        caps = GraphCaps.for_region(5, 2, max_genus=0)
        for graph, aut, value in decorated_contributions(table, self._r, caps,
                                                         monomial=Monomial([((0, 2), 5)]), primary_only=True):
            logger.debug("1/{} {} -> {}".format(aut, graph.describe(), value.items()))

    def invert(self):
        """inversion symmetry, coefficient by coefficient"""
        report = verify_inversion_theorem(self._potential, 6, Route.BOTH, config=self._config)
        logger.debug("report: {}".format(report))
        for row in report.mismatches():
            logger.debug("mismatch: {}".format(row))

    def hierarchy(self):
        """transformed Hamiltonians against the comparison densities"""
        hierarchy = PrincipalHierarchy(self._potential, 5, 1)
        for p in range(2):
            result = compare_level(hierarchy, p)
            logger.debug("level {}: {}".format(p, result.to_dict()))

    def too_short(self):
        try:
            verify_inversion_theorem(self._potential, 9)
        except CapError as e:
            logger.debug("cap error {}, needs {}".format(e, e.required))


if __name__ == "__main__":
    sigmas = {3: Fraction(2, 3), 4: Fraction(-5, 7), 5: Fraction(3, 11), 6: Fraction(1, 4), 7: Fraction(-2, 5)}
    example = GiventalExample(sigmas, Configuration(threads=2))
    example.transform()
    example.show_graphs()
    example.invert()
    example.hierarchy()
    example.too_short()
