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
The operator form of the group action and its factorization.
"""
from pygivental.action.rmatrix import RMatrix, raise_index, series_exp, to_fraction, to_rational
from pygivental.action.quantization import (
    Region,
    DifferentialOperator,
    action_input_caps,
    exact_output_region,
    check_region,
    quantize,
    quantize_all,
    apply_infinitesimal,
    exponentiate_action,
)
from pygivental.action.factorization import (
    FactorizedAction,
    product_series,
    divide_by_z_plus_w,
    edge_kernel,
    factorize,
    apply_factorized,
)

__all__ = [
    "RMatrix", "raise_index", "series_exp", "to_fraction", "to_rational",
    "Region", "DifferentialOperator", "action_input_caps", "exact_output_region", "check_region",
    "quantize", "quantize_all", "apply_infinitesimal", "exponentiate_action",
    "FactorizedAction", "product_series", "divide_by_z_plus_w", "edge_kernel", "factorize",
    "apply_factorized",
]
