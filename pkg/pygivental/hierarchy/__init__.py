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
Hamiltonian densities of the principal hierarchy and their transformation
under the inversion r-matrix.
"""
from pygivental.hierarchy.hamiltonians import (
    HamiltonianDensity,
    PrincipalHierarchy,
    u_operator,
    exp_u,
    theta,
    transform_hamiltonians,
    lxz_hamiltonians,
    infinitesimal_deformation,
)
from pygivental.hierarchy.spans import (
    SpanCertificate,
    SpanComparison,
    compare_spans,
    compare_level,
    level_families,
)

__all__ = [
    "HamiltonianDensity", "PrincipalHierarchy", "u_operator", "exp_u", "theta",
    "transform_hamiltonians", "lxz_hamiltonians", "infinitesimal_deformation",
    "SpanCertificate", "SpanComparison", "compare_spans", "compare_level", "level_families",
]
