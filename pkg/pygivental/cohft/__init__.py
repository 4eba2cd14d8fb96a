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
Correlator tables, Frobenius potentials and genus zero reconstruction.
"""
from pygivental.cohft.correlator_table import (
    Insertion,
    TableCaps,
    CorrelatorTable,
    vertex_tensor,
    dilaton_reduce,
    is_stable,
    log_partition_function,
    table_to_partition_function,
    partition_function_to_table,
    series_to_table,
)
from pygivental.cohft.potential import FrobeniusPotential, unit_cubic, wdvv_defect, primary, solve_wdvv_three
from pygivental.cohft.reconstruction import DescendantReconstructor, reconstruct_descendants
from pygivental.cohft.relations import dilaton_defects, trr_defects, trr_value

__all__ = [
    "Insertion", "TableCaps", "CorrelatorTable", "vertex_tensor", "dilaton_reduce", "is_stable",
    "log_partition_function", "table_to_partition_function", "partition_function_to_table",
    "series_to_table", "FrobeniusPotential", "unit_cubic", "wdvv_defect", "primary", "solve_wdvv_three",
    "DescendantReconstructor", "reconstruct_descendants", "dilaton_defects", "trr_defects", "trr_value",
]
