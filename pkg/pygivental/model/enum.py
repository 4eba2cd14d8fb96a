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
This module provide enum.
"""
from enum import Enum, unique


@unique
class Route(Enum):
    """
    Which independent computation a command runs.
    """
    COORD = "coord"
    GIVENTAL = "givental"
    OPERATOR = "operator"
    GRAPH = "graph"
    BOTH = "both"

    def __str__(self):
        return str(self.value)


@unique
class ReportFormat(Enum):
    """report format"""
    TEXT = "text"
    STRUCTURED = "structured"

    def __str__(self):
        return str(self.value)


@unique
class LeafKind(Enum):
    """
    Leaf decoration type.

    ORDINARY: carries the leaf vector exp(r(z)) applied to the coordinate vector.
    DILATON: carries the dilaton-shift vector -z(exp(r(z)) - 1)e_1.
    """
    ORDINARY = "ordinary"
    DILATON = "dilaton"


@unique
class ExitCode(Enum):
    """
    Process exit status of the command line tool
    """
    OK = 0
    MISMATCH = 1
    PARSE = 2
    CAP = 3
