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
Tests of graph enumeration, automorphism orders and the graph sum.
"""
import itertools
import random
from collections import Counter
from fractions import Fraction
from math import factorial

import pytest

from conftest import SIGMAS, random_genus_zero_table, random_rmatrix
from pygivental.action import Region, RMatrix, exponentiate_action
from pygivental.cohft import log_partition_function, reconstruct_descendants, table_to_partition_function
from pygivental.graphs import (
    DecoratedGraph,
    EdgeDecoration,
    Graph,
    GraphCaps,
    LeafDecoration,
    automorphism_order,
    contract_decorated,
    decorated_contributions,
    enumerate_graphs,
    expand_decorations,
    graph_sum,
)
from pygivental.graphs.graph import flip, is_connected
from pygivental.model.enum import LeafKind
from pygivental.series import Monomial, Variable

SIGMA_5 = Monomial([((0, 2), 5)], -1)


def _transformed_sigma_5():
    return SIGMAS[5] + 10 * SIGMAS[4] + 20 * SIGMAS[3]


def _vertex_survives(decorated, table):
    """a vertex without psi-powers needs a non-zero correlator, one with d psi-powers needs valence d + 3"""
    for vertex, genus in enumerate(decorated.genera):
        ends = []
        for (u, v), term in zip(decorated.edges, decorated.edge_terms):
            if u == vertex:
                ends.append((term.a, term.mu))
            if v == vertex:
                ends.append((term.b, term.nu))
        leaves = decorated.leaf_terms[vertex]
        power = sum(leaf.z_power for leaf in leaves) + sum(a for a, _ in ends)
        if power == 0:
            insertions = [(0, mu) for _, mu in ends] + [(0, leaf.variable.mu) for leaf in leaves]
            if not table.correlator(genus, insertions):
                return False
        elif len(ends) + len(leaves) < power + 3:
            return False
    return True


def test_automorphism_orders_of_small_shapes():
    assert automorphism_order(Graph([0], [], [(5, 0)])) == 120
    assert automorphism_order(Graph([0], [(0, 0)], [(1, 0)])) == 2
    assert automorphism_order(Graph([0, 0], [(0, 1), (0, 1)], [(1, 0), (1, 0)])) == 4
    assert automorphism_order(Graph([0, 1], [(0, 1)], [(2, 0), (0, 0)])) == 2


def test_graph_rejects_disconnected_shapes():
    with pytest.raises(ValueError):
        Graph([0, 0], [], [(3, 0), (3, 0)])


def test_enumeration_of_genus_zero_trees():
    shapes = enumerate_graphs(GraphCaps.for_region(5, 2, max_genus=0), max_vertex_genus=0, dilaton=False)
    assert sorted((g.vertex_count, tuple(sorted(a for a, _ in g.leaves))) for g in shapes
                  if g.ordinary_count == 5) == [
        (1, (5,)), (2, (2, 3)), (3, (1, 2, 2))]
    assert enumerate_graphs(GraphCaps.for_region(3, 0, max_genus=0)) == [Graph([0], [], [(3, 0)])]


def test_decorated_graphs_of_inverted_sigma_5(sigma_potential):
    table = reconstruct_descendants(sigma_potential, 5, 2)
    r = RMatrix.inversion(2)
    caps = GraphCaps.for_region(5, 2, max_genus=0)
    mono = Monomial([((0, 2), 5)])
    found = []
    for shape in enumerate_graphs(caps, max_vertex_genus=0, dilaton=False):
        for decorated in expand_decorations(shape, table, r, caps, monomial=mono, primary_only=True,
                                            keep_vanishing_edges=True):
            if _vertex_survives(decorated, table):
                found.append(decorated)
    orders = [automorphism_order(g) for g in found]
    assert Counter(orders) == Counter([120, 24, 12, 12, 4, 4, 8, 8])
    total = Fraction(0)
    for decorated, order in zip(found, orders):
        value = contract_decorated(decorated, table, r, caps).coefficient(SIGMA_5)
        if decorated.vertex_count > 1:
            assert value == 0
        total += value / order
    assert total == _transformed_sigma_5() / 120

    contributions = decorated_contributions(table, r, caps, monomial=mono, primary_only=True)
    assert sorted(order for _, order, _ in contributions) == [12, 24, 120]


def test_inverted_sigma_5_through_both_routes(sigma_potential):
    table = reconstruct_descendants(sigma_potential, 7, 4)
    r = RMatrix.inversion(2)
    by_graphs = graph_sum(table, r, GraphCaps.for_region(5, 2))
    z = table_to_partition_function(table, degree_cap=9, genus_cap=0, vdim_cap=4)
    by_operator = exponentiate_action(r, z, Region(5, 2)).log()
    assert by_graphs.coefficient(SIGMA_5) == _transformed_sigma_5() / 120
    assert by_graphs.difference_within(by_operator, 5, 2) == {}


def test_zero_r_graph_sum_is_log_partition_function(rng):
    table = random_genus_zero_table(rng, 2, 7, 4)
    found = graph_sum(table, RMatrix.zero(2), GraphCaps.for_region(5, 2))
    assert found.difference_within(log_partition_function(table), 5, 2) == {}


@pytest.mark.parametrize('seed', range(10))
def test_graph_sum_matches_operator_action(seed):
    rng = random.Random(1000 + seed)
    table = random_genus_zero_table(rng, 2, 7, 4)
    r = random_rmatrix(rng, 2, 3)
    z = table_to_partition_function(table, degree_cap=9, genus_cap=0, vdim_cap=4)
    expected = exponentiate_action(r, z, Region(5, 2)).log()
    found = graph_sum(table, r, GraphCaps.for_region(5, 2))
    assert found.difference_within(expected, 5, 2) == {}


def _labelled_tree_count(leaves, vertices):
    """stable trees on labelled vertices with labelled leaves, by brute force"""
    pairs = list(itertools.combinations(range(vertices), 2))
    count = 0
    for edges in itertools.combinations(pairs, vertices - 1):
        if not is_connected(vertices, edges):
            continue
        degree = [sum(v in e for e in edges) for v in range(vertices)]
        for owner in itertools.product(range(vertices), repeat=leaves):
            if all(degree[v] + owner.count(v) >= 3 for v in range(vertices)):
                count += 1
    return count


@pytest.mark.parametrize('leaves', [4, 5, 6])
def test_tree_enumeration_matches_labelled_count(leaves):
    caps = GraphCaps.for_region(leaves, leaves - 3, max_genus=0)
    shapes = [g for g in enumerate_graphs(caps, max_vertex_genus=0, dilaton=False) if g.ordinary_count == leaves]
    by_classes = sum(Fraction(1, automorphism_order(g)) for g in shapes)
    by_labels = sum(Fraction(_labelled_tree_count(leaves, v), factorial(leaves) * factorial(v))
                    for v in range(1, leaves - 1))
    assert by_classes == by_labels


def _leaf(d, mu):
    return LeafDecoration(LeafKind.ORDINARY, 0, Variable(d, mu))


def _edge_terms(max_total):
    return [EdgeDecoration(a, mu, total - a, nu) for total in range(max_total + 1) for a in range(total + 1)
            for mu in (1, 2) for nu in (1, 2)]


def test_contraction_ignores_edge_orientation(sigma_potential, rng):
    table = reconstruct_descendants(sigma_potential, 7, 4)
    r = random_rmatrix(rng, 2, 3)
    caps = GraphCaps.for_region(7, 4)
    first = [_leaf(0, 2)] * 3
    second = [_leaf(0, 2)] * 2
    nonzero = 0
    for term in _edge_terms(2):
        forward = DecoratedGraph([0, 0], [(0, 1)], [first, second], [term])
        backward = DecoratedGraph([0, 0], [(0, 1)], [second, first], [flip(term)])
        assert DecoratedGraph([0, 0], [(1, 0)], [first, second], [flip(term)]) == forward
        value = contract_decorated(forward, table, r, caps)
        assert value == contract_decorated(backward, table, r, caps)
        nonzero += not value.is_zero()
    assert nonzero


def test_dilaton_leaf_removal_factor(sigma_potential, rng):
    table = reconstruct_descendants(sigma_potential, 7, 4)
    r = random_rmatrix(rng, 2, 3)
    caps = GraphCaps.for_region(7, 4)
    base = [_leaf(0, 2)] * 3
    other = [_leaf(0, 2)] * 3
    nonzero = 0
    for term in _edge_terms(2):
        without = contract_decorated(DecoratedGraph([0, 0], [(0, 1)], [base, other], [term]), table, r, caps)
        with_leaf = contract_decorated(DecoratedGraph([0, 0], [(0, 1)], [base + [_leaf(1, 1)], other], [term]),
                                       table, r, caps)
        # genus 0 vertex with one edge end and three leaves: 2g - 2 + k = 2
        assert sum(with_leaf.terms.values()) == 2 * sum(without.terms.values())
        nonzero += not without.is_zero()
    assert nonzero
