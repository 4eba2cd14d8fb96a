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
Truncated power series in t^{d,mu} and hbar.
"""
from pygivental.series.monomial import Variable, Monomial, HBAR, ONE, t
from pygivental.series.truncated_series import (
    TruncatedSeries,
    vdim_cap_for,
    add,
    mul,
    exp,
    log,
    partial,
    coefficient,
    is_tame,
)
from pygivental.series.codec import format_series, parse_series, format_term, parse_term

__all__ = [
    "Variable", "Monomial", "HBAR", "ONE", "t",
    "TruncatedSeries", "vdim_cap_for",
    "add", "mul", "exp", "log", "partial", "coefficient", "is_tame",
    "format_series", "parse_series", "format_term", "parse_term",
]
