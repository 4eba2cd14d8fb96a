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
The givental command line tool.
"""
from pygivental.cli.commands import RunConfig, cmd_transform, cmd_invert, cmd_hierarchy, cmd_graphs
from pygivental.cli.main import main, build_parser

__all__ = ["RunConfig", "cmd_transform", "cmd_invert", "cmd_hierarchy", "cmd_graphs", "main", "build_parser"]
