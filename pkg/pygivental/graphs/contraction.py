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
This module provide the tensor contraction of graphs and the graph sum

    log(R^ Z) = sum_gamma C(gamma) / |Aut(gamma)|

Each vertex of genus g contracts hbar^{g-1} <...>_g with its half-edge
decorations and each internal edge carries one hbar, so a graph of genus
b_1 + sum g_v contributes at hbar^{g-1}.

A graph shape is contracted in one pass: the sum over its labelled
decorations equals the sum over decorated graphs weighted by
|Aut(shape)| / |Aut(decorated)|. Vertex polynomials are memoized by
(genus, leaf counts, edge-end insertions).
"""
import copy
import itertools
import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from pygivental.action.factorization import FactorizedAction
from pygivental.action.quantization import Region
from pygivental.cohft.correlator_table import Insertion
from pygivental.configuration import DEFAULT_CONFIG
from pygivental.exception import CapError, DimensionMismatchError
from pygivental.graphs.decorations import (
    leaf_coefficient,
    dilaton_coefficient,
    edge_coefficient,
)
from pygivental.graphs.graph import (
    DecoratedGraph,
    EdgeDecoration,
    GraphCaps,
    LeafDecoration,
    automorphism_order,
    enumerate_graphs,
    unique_graphs,
)
from pygivental.model.enum import LeafKind
from pygivental.series.monomial import ONE, Variable
from pygivental.series.truncated_series import TruncatedSeries
from pygivental.utils import multinomial_orderings

_logger = logging.getLogger(__name__)


def _remove(insertions, ends):
    """multiset difference insertions - ends, None when ends is not contained"""
    rest = Counter(insertions)
    rest.subtract(ends)
    if any(c < 0 for c in rest.values()):
        return None
    return tuple(sorted(rest.elements()))


def _sub_multisets(items, size):
    return sorted(set(itertools.combinations(items, size)))


class GraphContractor(object):
    """
    Contraction of graphs against a correlator table for one R-matrix and
    one output region.
    """

    def __init__(self, table, r_matrix, caps, primary_only=False):
        """
        Args:
            table (CorrelatorTable): vertex tensors
            r_matrix: RMatrix or FactorizedAction
            caps (GraphCaps): output region, degree <= max_leaves and vdim <= max_z_power
            primary_only (bool): keep only leaf variables t^{0,mu}

        :raise DimensionMismatchError: table and r-matrix dimensions differ
        """
        self._region = Region(caps.max_leaves, caps.max_z_power)
        if isinstance(r_matrix, FactorizedAction):
            if r_matrix.cap < self._region.vdim:
                raise CapError('factorization known to z^%d, region needs z^%d'
                               % (r_matrix.cap, self._region.vdim),
                               cap=r_matrix.cap, required=self._region.vdim)
            self._f = r_matrix
        else:
            self._f = FactorizedAction(r_matrix, max(self._region.vdim, 1))
        if table.dimension != self._f.dimension:
            raise DimensionMismatchError('table of dimension %d contracted with an r-matrix of dimension %d'
                                         % (table.dimension, self._f.dimension),
                                         left=table.dimension, right=self._f.dimension)
        self._table = table
        self._n = table.dimension
        self._caps = caps
        self._primary_only = primary_only
        budget = self._region.vdim
        self._dilaton = {}
        for m in range(2, budget + 2):
            for mu in range(1, self._n + 1):
                c = dilaton_coefficient(self._f, mu, m)
                if c:
                    self._dilaton[Insertion(m, mu)] = c
        self._edge_terms = []
        for total in range(budget):
            for a in range(total + 1):
                for mu in range(1, self._n + 1):
                    for nu in range(1, self._n + 1):
                        c = edge_coefficient(self._f, a, mu, total - a, nu)
                        if c:
                            self._edge_terms.append((EdgeDecoration(a, mu, total - a, nu), c))
        self._leaf_cache = {}
        self._product_cache = {}
        self._vertex_cache = {}

    @property
    def factorized(self):
        return self._f

    @property
    def region(self):
        return self._region

    def has_dilaton(self):
        """False when the dilaton leaf vanishes identically"""
        return bool(self._dilaton)

    def has_edges(self):
        """False when the edge bivector vanishes identically"""
        return bool(self._edge_terms)

    def _hbar_free(self, terms=None):
        return TruncatedSeries(self._n, self._region.degree, 1, terms)

    def leaf_form(self, insertion):
        """coefficient of e_mu z^m in L for an insertion tau_m(mu)"""
        if insertion not in self._leaf_cache:
            self._leaf_cache[insertion] = leaf_coefficient(
                self._f, insertion.mu, insertion.d, self._region.degree, self._primary_only)
        return self._leaf_cache[insertion]

    def _leaf_product(self, ordinary):
        if ordinary in self._product_cache:
            return self._product_cache[ordinary]
        if not ordinary:
            value = self._hbar_free({ONE: 1})
        else:
            value = self._leaf_product(ordinary[:-1]).mul(self.leaf_form(ordinary[-1]))
        self._product_cache[ordinary] = value
        return value

    def _check_vertex(self, genus, size, level_budget):
        table_caps = self._table.caps
        if genus > table_caps.max_genus:
            return False
        if size > table_caps.max_insertions:
            raise CapError('a genus %d vertex of valence %d exceeds the table caps %r'
                           % (genus, size, tuple(table_caps)),
                           cap=table_caps.max_insertions, required=size)
        need = min(3 * genus - 3 + size, level_budget)
        if need > table_caps.max_level:
            raise CapError('a genus %d vertex of valence %d needs descendant level %d, table has %d'
                           % (genus, size, need, table_caps.max_level),
                           cap=table_caps.max_level, required=need)
        return True

    def vertex_polynomial(self, genus, ordinary, dilaton, ends, level_budget=None):
        """
        Sum over the leaf decorations of one vertex: the t-polynomial
        sum <ends, leaves>_g * (orderings) * prod L * prod L0.

        Args:
            genus (int): g_v
            ordinary (int): number of ordinary leaves
            dilaton (int): number of dilaton leaves
            ends (tuple): sorted Insertion of the edge ends at the vertex
        """
        key = (genus, ordinary, dilaton, ends)
        if key in self._vertex_cache:
            return self._vertex_cache[key]
        size = len(ends) + ordinary + dilaton
        if level_budget is None:
            level_budget = 3 * genus - 3 + size
        total = self._hbar_free()
        if self._check_vertex(genus, size, level_budget):
            for insertions, value in self._table.entries_of(genus, size):
                rest = _remove(insertions, ends)
                if rest is None:
                    continue
                for shifts in _sub_multisets(rest, dilaton):
                    weight = value * multinomial_orderings(shifts)
                    for ins in shifts:
                        weight *= self._dilaton.get(ins, 0)
                    if not weight:
                        continue
                    leaves = _remove(rest, shifts)
                    weight *= multinomial_orderings(leaves)
                    total = total.add(self._leaf_product(leaves).scale(weight))
        self._vertex_cache[key] = total
        return total

    def _edge_assignments(self, count, budget):
        if count == 0:
            yield (), Fraction(1)
            return
        for term, weight in self._edge_terms:
            cost = 1 + term.a + term.b
            if cost > budget:
                continue
            for rest, rest_weight in self._edge_assignments(count - 1, budget - cost):
                yield (term,) + rest, weight * rest_weight

    def _output(self, terms, genus):
        shifted = dict((mono.times_hbar(genus - 1), c) for mono, c in terms.items())
        return TruncatedSeries(self._n, self._region.degree, self._caps.max_genus, shifted,
                               vdim_cap=self._region.vdim)

    def contract_graph(self, graph):
        """
        C(gamma) summed over every labelled decoration of the shape (not
        divided by the automorphism order).

        :raise CapError: a vertex lies outside the table caps
        """
        budget = self._region.vdim - graph.dilaton_count
        level_budget = (0 if self._primary_only else self._region.vdim) + self._region.vdim \
            + graph.dilaton_count
        total = self._hbar_free()
        for assignment, weight in self._edge_assignments(graph.edge_count, budget):
            ends = [[] for _ in range(graph.vertex_count)]
            for (u, v), term in zip(graph.edges, assignment):
                ends[u].append(Insertion(term.a, term.mu))
                ends[v].append(Insertion(term.b, term.nu))
            product = self._hbar_free({ONE: weight})
            for vertex, genus in enumerate(graph.genera):
                ordinary, dilaton = graph.leaves[vertex]
                poly = self.vertex_polynomial(genus, ordinary, dilaton, tuple(sorted(ends[vertex])),
                                              level_budget)
                if poly.is_zero():
                    product = None
                    break
                product = product.mul(poly)
            if product is not None:
                total = total.add(product)
        return self._output(total.terms, graph.genus)

    def _leaf_choices(self, term):
        """(Insertion, coefficient) pairs of the vector carried by a leaf term"""
        out = []
        for mu in range(1, self._n + 1):
            if term.kind == LeafKind.DILATON:
                c = dilaton_coefficient(self._f, mu, term.power)
            else:
                c = self._f.r_entry(term.power, mu, term.variable.mu)
            if c:
                out.append((Insertion(term.z_power, mu), c))
        return out

    def contract_decorated(self, graph):
        """
        C of one concretely decorated graph.

        :raise CapError: a correlator lies outside the table caps
        """
        weight = Fraction(1)
        ends = [[] for _ in range(graph.vertex_count)]
        for (u, v), term in zip(graph.edges, graph.edge_terms):
            weight *= edge_coefficient(self._f, term.a, term.mu, term.b, term.nu)
            ends[u].append(Insertion(term.a, term.mu))
            ends[v].append(Insertion(term.b, term.nu))
        for vertex, genus in enumerate(graph.genera):
            if not weight:
                break
            choices = [self._leaf_choices(term) for term in graph.leaf_terms[vertex]]
            value = Fraction(0)
            for picked in itertools.product(*choices):
                c = Fraction(1)
                for _, x in picked:
                    c *= x
                value += c * self._table.correlator(genus, ends[vertex] + [ins for ins, _ in picked])
            weight *= value
        terms = {graph.monomial().times_hbar(1 - graph.genus): weight} if weight else {}
        return self._output(terms, graph.genus)

    def contribution(self, graph):
        """C(gamma) / |Aut(gamma)|"""
        order = automorphism_order(graph)
        if isinstance(graph, DecoratedGraph):
            return self.contract_decorated(graph).scale(Fraction(1, order))
        return self.contract_graph(graph).scale(Fraction(1, order))

    def graphs(self):
        """every graph shape that can contribute to the region"""
        return enumerate_graphs(self._caps, max_vertex_genus=self._table.caps.max_genus,
                                dilaton=self.has_dilaton())

    def graph_sum(self, graphs=None, threads=1):
        """
        sum C(gamma) / |Aut(gamma)| over the given graphs (all contributing
        shapes by default), certified on the output region.
        """
        graphs = self.graphs() if graphs is None else list(graphs)
        if not self.has_edges():
            graphs = [g for g in graphs if not g.edge_count]
        if threads > 1 and len(graphs) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                parts = list(pool.map(self.contribution, graphs))
        else:
            parts = [self.contribution(g) for g in graphs]
        total = TruncatedSeries(self._n, self._region.degree, self._caps.max_genus,
                                vdim_cap=self._region.vdim)
        for graph, part in zip(graphs, parts):
            if not part.is_zero():
                _logger.debug('%r contributes %d terms', graph, len(part))
            total = total.add(part)
        _logger.debug('graph sum over %d graphs has %d terms', len(graphs), len(total))
        return total.with_exact_region(self._region)

    def expand_decorations(self, graph, monomial=None, keep_vanishing_edges=False):
        """
        The concretely decorated graphs over a shape, one per isomorphism
        class, that fit the excess budget.

        Args:
            graph (Graph): the shape
            monomial (Monomial): keep only decorations whose leaf variables
                multiply to this monomial (hbar ignored)
            keep_vanishing_edges (bool): list every (mu, nu) for each non-zero
                edge kernel Q_{a,b}, even where the coefficient vanishes
        """
        budget = self._region.vdim
        vdim = 3 * (graph.genus - 1) + graph.ordinary_count
        if vdim > budget:
            return []
        wanted = None
        if monomial is not None:
            wanted = Counter(monomial.insertions())
            if sum(wanted.values()) != graph.ordinary_count:
                return []
        levels = [0] if self._primary_only else range(budget + 1)
        ordinary_options = []
        for d in levels:
            for nu in range(1, self._n + 1):
                variable = Variable(d, nu)
                if wanted is not None and (d, nu) not in wanted:
                    continue
                for j in range(min(budget, self._f.cap) + 1):
                    if any(self._f.r_entry(j, mu, nu) for mu in range(1, self._n + 1)):
                        ordinary_options.append(LeafDecoration(LeafKind.ORDINARY, j, variable))
        dilaton_options = sorted(set(LeafDecoration(LeafKind.DILATON, ins.d, None) for ins in self._dilaton))
        edge_options = []
        for total in range(budget):
            for a in range(total + 1):
                b = total - a
                nonzero = not self._f.quotient(a, b).is_zero_matrix
                for mu in range(1, self._n + 1):
                    for nu in range(1, self._n + 1):
                        c = edge_coefficient(self._f, a, mu, b, nu)
                        if c or (keep_vanishing_edges and nonzero):
                            edge_options.append(EdgeDecoration(a, mu, b, nu))
        per_vertex = []
        for ordinary, dilaton in graph.leaves:
            options = []
            for leaves in itertools.combinations_with_replacement(ordinary_options, ordinary):
                for shifts in itertools.combinations_with_replacement(dilaton_options, dilaton):
                    options.append(list(leaves) + list(shifts))
            per_vertex.append(options)
        found = []
        for edge_terms in itertools.product(edge_options, repeat=graph.edge_count):
            for leaf_terms in itertools.product(*per_vertex):
                decorated = DecoratedGraph(graph.genera, graph.edges, leaf_terms, edge_terms)
                level = decorated.monomial().weighted_degree
                if decorated.excess() + level > vdim:
                    continue
                if wanted is not None and Counter(decorated.monomial().insertions()) != wanted:
                    continue
                found.append(decorated)
        graphs = unique_graphs(found)
        graphs.sort(key=DecoratedGraph.sort_key)
        return graphs


def _contractor(table, r_matrix, caps, primary_only=False):
    if not isinstance(caps, GraphCaps):
        caps = GraphCaps.for_region(*caps)
    return GraphContractor(table, r_matrix, caps, primary_only)


def contract_graph(graph, table, r_matrix, caps, primary_only=False):
    """See GraphContractor.contract_graph."""
    return _contractor(table, r_matrix, caps, primary_only).contract_graph(graph)


def contract_decorated(graph, table, r_matrix, caps):
    """See GraphContractor.contract_decorated."""
    return _contractor(table, r_matrix, caps).contract_decorated(graph)


def expand_decorations(graph, table, r_matrix, caps, monomial=None, primary_only=False,
                       keep_vanishing_edges=False):
    """See GraphContractor.expand_decorations."""
    return _contractor(table, r_matrix, caps, primary_only).expand_decorations(
        graph, monomial, keep_vanishing_edges)


def graph_sum(table, r_matrix, caps, primary_only=False, config=None):
    """
    log(R^ Z) as a sum over graphs, certified on the region degree <=
    caps.max_leaves and vdim <= caps.max_z_power.

    Args:
        table (CorrelatorTable): the partition function as correlators
        r_matrix: RMatrix or FactorizedAction
        caps: GraphCaps, or a (degree, vdim) region
        primary_only (bool): keep only the t^{0,mu} part of the leaves
        config (Configuration): worker count for the contraction

    :raise CapError: a contributing vertex lies outside the table caps
    """
    merged = copy.deepcopy(DEFAULT_CONFIG)
    if config is not None:
        merged.merge_non_none_values(config)
    contractor = _contractor(table, r_matrix, caps, primary_only)
    return contractor.graph_sum(threads=merged.worker_count())


def decorated_contributions(table, r_matrix, caps, monomial=None, primary_only=False):
    """
    The non-zero decorated graphs of the sum with their automorphism orders
    and contributions, in deterministic order.

    :return: list of (DecoratedGraph, order, TruncatedSeries)
    """
    contractor = _contractor(table, r_matrix, caps, primary_only)
    out = []
    for shape in contractor.graphs():
        if shape.edge_count and not contractor.has_edges():
            continue
        for decorated in contractor.expand_decorations(shape, monomial):
            value = contractor.contract_decorated(decorated)
            if not value.is_zero():
                out.append((decorated, automorphism_order(decorated), value))
    return out
