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
The graph form of the group action.
"""
from pygivental.graphs.graph import (
    Graph,
    DecoratedGraph,
    GraphCaps,
    LeafDecoration,
    EdgeDecoration,
    automorphism_order,
    enumerate_graphs,
    unique_graphs,
)
from pygivental.graphs.decorations import leaf_vector, dilaton_leaf_vector, edge_bivector
from pygivental.graphs.contraction import (
    GraphContractor,
    contract_graph,
    contract_decorated,
    expand_decorations,
    graph_sum,
    decorated_contributions,
)

__all__ = [
    "Graph", "DecoratedGraph", "GraphCaps", "LeafDecoration", "EdgeDecoration",
    "automorphism_order", "enumerate_graphs", "unique_graphs",
    "leaf_vector", "dilaton_leaf_vector", "edge_bivector",
    "GraphContractor", "contract_graph", "contract_decorated", "expand_decorations",
    "graph_sum", "decorated_contributions",
]
