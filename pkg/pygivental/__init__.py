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
This module defines the public entry points of pygivental.
"""
from builtins import str
from builtins import bytes
from pygivental.series import TruncatedSeries, Monomial, Variable
from pygivental.cohft import CorrelatorTable, FrobeniusPotential, reconstruct_descendants
from pygivental.action import RMatrix, exponentiate_action, apply_factorized
from pygivental.graphs import graph_sum, enumerate_graphs, automorphism_order
from pygivental.inversion import invert_potential, verify_inversion_theorem
from pygivental.hierarchy import PrincipalHierarchy, compare_spans

SDK_VERSION = b'1.0.0'
DEFAULT_ENCODING = 'UTF-8'

__all__ = [
    "TruncatedSeries", "Monomial", "Variable",
    "CorrelatorTable", "FrobeniusPotential", "reconstruct_descendants",
    "RMatrix", "exponentiate_action", "apply_factorized",
    "graph_sum", "enumerate_graphs", "automorphism_order",
    "invert_potential", "verify_inversion_theorem",
    "PrincipalHierarchy", "compare_spans",
]
