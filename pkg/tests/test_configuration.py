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
Tests of the run configuration.
"""
import copy

import pytest

from pygivental.configuration import DEFAULT_CONFIG, Configuration
from pygivental.model.enum import Route


def test_merge_keeps_defaults_for_missing_values():
    merged = copy.deepcopy(DEFAULT_CONFIG)
    merged.merge_non_none_values(Configuration(degree_cap=9, route=Route.GRAPH))
    assert merged.degree_cap == 9
    assert merged.route == Route.GRAPH
    assert merged.genus_cap == DEFAULT_CONFIG.genus_cap
    assert DEFAULT_CONFIG.degree_cap != 9


def test_threads_from_environment():
    assert Configuration.from_environ({'GIVENTAL_THREADS': '3'}).threads == 3
    assert Configuration.from_environ({}).threads is None
    assert Configuration.from_environ({'GIVENTAL_THREADS': 'many'}).threads is None
    assert Configuration.from_environ({'GIVENTAL_THREADS': '-2'}).threads is None


def test_worker_count():
    assert Configuration(threads=2).worker_count() == 2
    assert Configuration(threads=0).worker_count() >= 1


def test_rejects_negative_caps():
    with pytest.raises(ValueError):
        Configuration(degree_cap=-1)
    with pytest.raises(ValueError):
        Configuration(threads=-1)
