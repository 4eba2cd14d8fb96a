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
The inversion symmetry of Frobenius potentials and its Givental form.
"""
from pygivental.inversion.coordinates import (
    invert_coordinates,
    inverse_coordinates,
    invert_coordinate_series,
    inverse_coordinate_series,
    compose_coordinates,
)
from pygivental.inversion.potential import (
    invert_potential,
    invert_potential_by_definition,
    inversion_h_part,
    inversion_q_part,
    aut2_order,
    h_correlator,
    q_correlator,
    inverted_correlator,
)
from pygivental.inversion.theorem import (
    InversionData,
    CoefficientRow,
    CoefficientReport,
    givental_potential,
    verify_inversion_theorem,
    primary_monomials,
)

__all__ = [
    "invert_coordinates", "inverse_coordinates", "invert_coordinate_series",
    "inverse_coordinate_series", "compose_coordinates",
    "invert_potential", "invert_potential_by_definition", "inversion_h_part", "inversion_q_part",
    "aut2_order", "h_correlator", "q_correlator", "inverted_correlator",
    "InversionData", "CoefficientRow", "CoefficientReport", "givental_potential",
    "verify_inversion_theorem", "primary_monomials",
]
