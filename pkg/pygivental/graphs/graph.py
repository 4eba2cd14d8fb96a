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
This module provide the stable graphs of the graph sum, their decorated
versions, enumeration up to isomorphism and automorphism counting.

Isomorphism questions are answered on an auxiliary simple graph: one node per
vertex, two adjacent nodes per internal edge (its half-edges) each joined to
its end vertex. Leaves are folded into the vertex label and contribute a
factorial per group of identical leaves to the automorphism order.
"""
import itertools
import logging
from collections import namedtuple, Counter
from math import factorial

import networkx as nx
from networkx.algorithms import isomorphism

from pygivental.model.enum import LeafKind
from pygivental.series.monomial import Monomial

_logger = logging.getLogger(__name__)

_node_match = isomorphism.categorical_node_match('label', None)


class GraphCaps(namedtuple('GraphCaps', ['max_leaves', 'max_vertices', 'max_edges',
                                         'max_genus', 'max_z_power'])):
    """
    Finite enumeration region.

    max_leaves counts ordinary leaves, i.e. the t-degree of the output.
    max_z_power is the excess budget: the output vdim bound, which every
    internal edge, dilaton leaf and leaf or edge psi-power consumes.
    """
    __slots__ = ()

    @classmethod
    def for_region(cls, degree, vdim, max_genus=None):
        """Caps covering every graph that contributes to degree <= K, vdim <= P."""
        if degree < 0 or vdim < 0:
            raise ValueError('region bounds should be non-negative integers.')
        if max_genus is None:
            max_genus = vdim // 3 + 1
        return cls(degree, vdim + 1, vdim, max_genus, vdim)


class Graph(object):
    """
    A connected graph shape: vertex genera, internal edges (loops and
    multi-edges allowed) and per vertex the numbers of ordinary and dilaton
    leaves.
    """
    __slots__ = ('_genera', '_edges', '_leaves')

    def __init__(self, genera, edges, leaves):
        """
        Args:
            genera (list): g_v per vertex
            edges (list): (u, v) vertex pairs
            leaves (list): (ordinary, dilaton) counts per vertex

        :raise ValueError: inconsistent sizes or a disconnected graph
        """
        self._genera = tuple(int(g) for g in genera)
        self._edges = tuple(sorted(tuple(sorted(e)) for e in edges))
        self._leaves = tuple((int(a), int(b)) for a, b in leaves)
        if len(self._leaves) != len(self._genera) or not self._genera:
            raise ValueError('a graph needs leaf counts for each of its vertices.')
        for u, v in self._edges:
            if not (0 <= u < len(self._genera) and 0 <= v < len(self._genera)):
                raise ValueError('edge (%d, %d) refers to a missing vertex' % (u, v))
        if not is_connected(len(self._genera), self._edges):
            raise ValueError('graph is not connected.')

    @property
    def genera(self):
        """vertex genera"""
        return self._genera

    @property
    def edges(self):
        """sorted internal edges"""
        return self._edges

    @property
    def leaves(self):
        """(ordinary, dilaton) per vertex"""
        return self._leaves

    @property
    def vertex_count(self):
        return len(self._genera)

    @property
    def edge_count(self):
        return len(self._edges)

    @property
    def betti(self):
        """first Betti number"""
        return len(self._edges) - len(self._genera) + 1

    @property
    def genus(self):
        """b_1 + sum g_v"""
        return self.betti + sum(self._genera)

    @property
    def ordinary_count(self):
        return sum(a for a, _ in self._leaves)

    @property
    def dilaton_count(self):
        return sum(b for _, b in self._leaves)

    def valence(self, vertex):
        """number of half-edges at a vertex"""
        ends = sum((u == vertex) + (v == vertex) for u, v in self._edges)
        return ends + sum(self._leaves[vertex])

    def is_stable(self):
        """2 g_v - 2 + n_v > 0 at every vertex"""
        return all(2 * g - 2 + self.valence(i) > 0 for i, g in enumerate(self._genera))

    def vertex_label(self, vertex):
        return ('v', self._genera[vertex], self._leaves[vertex])

    def half_edge_label(self, edge, side):
        return ('h',)

    def leaf_symmetry(self):
        """prod over vertices of ordinary! * dilaton!"""
        out = 1
        for a, b in self._leaves:
            out *= factorial(a) * factorial(b)
        return out

    def skeleton(self):
        """The auxiliary labelled simple graph used for isomorphism tests."""
        return _skeleton(self)

    def sort_key(self):
        return (self.vertex_count, self.edge_count, self._genera, self._edges, self._leaves)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.sort_key() == other.sort_key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.sort_key())

    def __repr__(self):
        return 'Graph(genera=%r, edges=%r, leaves=%r)' % (self._genera, self._edges, self._leaves)


class LeafDecoration(namedtuple('LeafDecoration', ['kind', 'power', 'variable'])):
    """
    One term of a leaf decoration.

    ORDINARY: R_power e_mu z^{d + power} t^{d,mu} for variable = t^{d,mu}.
    DILATON:  -R_{power-1} e_1 z^power, variable is None.
    """
    __slots__ = ()

    @property
    def z_power(self):
        """psi-power at the leaf"""
        if self.kind == LeafKind.DILATON:
            return self.power
        return self.variable.d + self.power

    def sort_key(self):
        return (self.kind.value, self.power, tuple(self.variable) if self.variable else ())

    def __str__(self):
        if self.kind == LeafKind.DILATON:
            return 'L0[z^%d]' % self.power
        return 'R_%d %s' % (self.power, self.variable)


EdgeDecoration = namedtuple('EdgeDecoration', ['a', 'mu', 'b', 'nu'])
EdgeDecoration.__doc__ = 'e_mu z^a (x) e_nu w^b, read from the first to the second end of the edge'


def flip(decoration):
    """the same edge decoration read in the opposite direction"""
    return EdgeDecoration(decoration.b, decoration.nu, decoration.a, decoration.mu)


class DecoratedGraph(Graph):
    """
    A graph whose leaves and edge ends carry concrete decoration terms.
    """
    __slots__ = ('_leaf_terms', '_edge_terms')

    def __init__(self, genera, edges, leaf_terms, edge_terms):
        """
        Args:
            genera (list): g_v per vertex
            edges (list): (u, v) pairs in the orientation of edge_terms
            leaf_terms (list): per vertex a list of LeafDecoration
            edge_terms (list): one EdgeDecoration per edge, a at u and b at v
        """
        if len(edges) != len(edge_terms):
            raise ValueError('every edge needs exactly one decoration.')
        pairs = []
        for (u, v), term in zip(edges, edge_terms):
            term = EdgeDecoration(*term)
            if u > v:
                u, v, term = v, u, flip(term)
            elif u == v:
                term = min(term, flip(term))
            pairs.append(((u, v), term))
        pairs.sort()
        leaf_terms = [tuple(sorted(terms, key=LeafDecoration.sort_key)) for terms in leaf_terms]
        counts = [(sum(1 for x in terms if x.kind == LeafKind.ORDINARY),
                   sum(1 for x in terms if x.kind == LeafKind.DILATON)) for terms in leaf_terms]
        Graph.__init__(self, genera, [e for e, _ in pairs], counts)
        self._leaf_terms = tuple(leaf_terms)
        self._edge_terms = tuple(t for _, t in pairs)

    @property
    def leaf_terms(self):
        """per vertex, sorted tuple of LeafDecoration"""
        return self._leaf_terms

    @property
    def edge_terms(self):
        """EdgeDecoration per edge, aligned with edges"""
        return self._edge_terms

    def shape(self):
        """the undecorated Graph"""
        return Graph(self.genera, self.edges, self.leaves)

    def monomial(self):
        """hbar^{g-1} times the product of the leaf variables"""
        factors = Counter()
        for terms in self._leaf_terms:
            for term in terms:
                if term.kind == LeafKind.ORDINARY:
                    factors[(term.variable.d, term.variable.mu)] += 1
        return Monomial(factors, self.genus - 1)

    def excess(self):
        """
        Budget consumed by the decoration: edges, edge psi-powers, leaf R-powers
        and dilaton leaves (each counted by its z-power minus one).
        """
        total = len(self._edge_terms) + sum(t.a + t.b for t in self._edge_terms)
        for terms in self._leaf_terms:
            for term in terms:
                total += term.power - 1 if term.kind == LeafKind.DILATON else term.power
        return total

    def vertex_label(self, vertex):
        return ('v', self.genera[vertex], tuple(t.sort_key() for t in self._leaf_terms[vertex]))

    def half_edge_label(self, edge, side):
        term = self._edge_terms[edge]
        return ('h', term.a, term.mu) if side == 0 else ('h', term.b, term.nu)

    def leaf_symmetry(self):
        out = 1
        for terms in self._leaf_terms:
            for count in Counter(terms).values():
                out *= factorial(count)
        return out

    def sort_key(self):
        return (self.vertex_count, self.edge_count, self.genera, self.edges,
                tuple(tuple(t.sort_key() for t in terms) for terms in self._leaf_terms),
                self._edge_terms)

    def __repr__(self):
        return 'DecoratedGraph(genera=%r, edges=%r, leaves=%r, edge_terms=%r)' % (
            self.genera, self.edges, [[str(t) for t in terms] for terms in self._leaf_terms],
            [tuple(t) for t in self._edge_terms])

    def describe(self):
        """one-line deterministic text form"""
        vertices = []
        for i, g in enumerate(self.genera):
            leaves = ', '.join(str(t) for t in self._leaf_terms[i])
            vertices.append('v%d(g=%d)[%s]' % (i, g, leaves))
        edges = ['v%d-v%d(z^%d e%d, w^%d e%d)' % (u, v, t.a, t.mu, t.b, t.nu)
                 for (u, v), t in zip(self.edges, self._edge_terms)]
        return ' '.join(vertices + edges)


def is_connected(vertex_count, edges):
    """union-find connectivity of a multigraph"""
    parent = list(range(vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len(set(find(x) for x in range(vertex_count))) == 1


def _skeleton(graph):
    g = nx.Graph()
    for i in range(graph.vertex_count):
        g.add_node(('v', i), label=graph.vertex_label(i))
    for k, (u, v) in enumerate(graph.edges):
        first, second = ('h', k, 0), ('h', k, 1)
        g.add_node(first, label=graph.half_edge_label(k, 0))
        g.add_node(second, label=graph.half_edge_label(k, 1))
        g.add_edge(first, second)
        g.add_edge(first, ('v', u))
        g.add_edge(second, ('v', v))
    return g


def automorphism_order(graph):
    """
    Order of the decoration-preserving automorphism group: permutations of
    vertices and half-edges (edge swaps and loop flips included) found by
    exhaustive matching, times the permutations of identical leaves.
    """
    skeleton = graph.skeleton()
    matcher = isomorphism.GraphMatcher(skeleton, skeleton, node_match=_node_match)
    count = sum(1 for _ in matcher.isomorphisms_iter())
    return count * graph.leaf_symmetry()


def _invariant(graph):
    skeleton = graph.skeleton()
    for node in skeleton.nodes:
        skeleton.nodes[node]['text'] = repr(skeleton.nodes[node]['label'])
    return (graph.vertex_count, graph.edge_count,
            tuple(sorted(repr(graph.vertex_label(i)) for i in range(graph.vertex_count))),
            nx.weisfeiler_lehman_graph_hash(skeleton, node_attr='text'))


def unique_graphs(graphs):
    """
    One representative per isomorphism class, first occurrence kept.
    """
    buckets = {}
    out = []
    for graph in graphs:
        key = _invariant(graph)
        bucket = buckets.setdefault(key, [])
        skeleton = graph.skeleton()
        if any(nx.is_isomorphic(skeleton, other, node_match=_node_match) for other in bucket):
            continue
        bucket.append(skeleton)
        out.append(graph)
    return out


def compositions(total, parts):
    """ordered tuples of non-negative integers of the given length and sum"""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _skeletons(vertex_count, edge_count):
    pairs = [(u, v) for u in range(vertex_count) for v in range(u, vertex_count)]
    found = []
    for edges in itertools.combinations_with_replacement(pairs, edge_count):
        if is_connected(vertex_count, edges):
            found.append(Graph([0] * vertex_count, edges, [(0, 0)] * vertex_count))
    return unique_graphs(found)


def enumerate_graphs(caps, max_vertex_genus=None, dilaton=True):
    """
    Stable connected graphs, one per isomorphism class, within the caps.

    Only graphs that can contribute are listed: with output genus g, K
    ordinary leaves, E edges and D dilaton leaves they satisfy
    E + D <= 3(g - 1) + K <= max_z_power.

    Args:
        caps (GraphCaps): enumeration region
        max_vertex_genus (int): largest g_v, defaults to caps.max_genus
        dilaton (bool): allow dilaton leaves

    :return: list of Graph in deterministic order
    """
    budget = caps.max_z_power
    max_vertex_genus = caps.max_genus if max_vertex_genus is None else max_vertex_genus
    candidates = []
    for edge_count in range(min(caps.max_edges, budget) + 1):
        for vertex_count in range(1, min(edge_count + 1, caps.max_vertices) + 1):
            betti = edge_count - vertex_count + 1
            if betti > caps.max_genus:
                continue
            for skeleton in _skeletons(vertex_count, edge_count):
                top = min(max_vertex_genus, caps.max_genus - betti)
                for genera in itertools.product(range(top + 1), repeat=vertex_count):
                    genus = betti + sum(genera)
                    if genus > caps.max_genus:
                        continue
                    max_dilaton = budget - edge_count if dilaton else 0
                    for dilaton_count in range(max_dilaton + 1):
                        for ordinary in range(caps.max_leaves + 1):
                            vdim = 3 * (genus - 1) + ordinary
                            if vdim > budget or edge_count + dilaton_count > vdim:
                                continue
                            for ords in compositions(ordinary, vertex_count):
                                for dils in compositions(dilaton_count, vertex_count):
                                    graph = Graph(genera, skeleton.edges, list(zip(ords, dils)))
                                    if graph.is_stable():
                                        candidates.append(graph)
    graphs = unique_graphs(candidates)
    graphs.sort(key=Graph.sort_key)
    _logger.debug('enumerated %d graph classes from %d labelled candidates', len(graphs), len(candidates))
    return graphs
