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
Potential files, r-matrix files and reports.
"""
from pygivental.io.json_codec import dumps, loads, read_json, write_json
from pygivental.io.potential_file import (
    PotentialFile,
    parse_potential,
    load_potential,
    potential_to_dict,
    save_potential,
)
from pygivental.io.rmatrix_file import parse_rmatrix, load_rmatrix, rmatrix_to_dict, save_rmatrix
from pygivental.io.report import (
    format_correlator,
    transform_report,
    inversion_report,
    hierarchy_report,
    graphs_report,
    render,
)

__all__ = [
    "dumps", "loads", "read_json", "write_json",
    "PotentialFile", "parse_potential", "load_potential", "potential_to_dict", "save_potential",
    "parse_rmatrix", "load_rmatrix", "rmatrix_to_dict", "save_rmatrix",
    "format_correlator", "transform_report", "inversion_report", "hierarchy_report",
    "graphs_report", "render",
]
