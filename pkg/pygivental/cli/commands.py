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
This module provide the subcommands of the givental tool. Every command
returns the bytes of its report; a failed verification raises
VerificationError carrying those bytes after they have been written.
"""
import copy
import logging
import sys
from concurrent.futures import ThreadPoolExecutor

from pygivental.action.quantization import Region, action_input_caps, exponentiate_action
from pygivental.action.rmatrix import RMatrix
from pygivental.cohft.correlator_table import series_to_table, table_to_partition_function
from pygivental.cohft.reconstruction import reconstruct_descendants
from pygivental.configuration import DEFAULT_CONFIG, Configuration
from pygivental.exception import CapError, DimensionMismatchError, VerificationError
from pygivental.graphs.contraction import decorated_contributions, graph_sum
from pygivental.graphs.graph import GraphCaps, automorphism_order, enumerate_graphs
from pygivental.hierarchy.hamiltonians import PrincipalHierarchy
from pygivental.hierarchy.spans import compare_level
from pygivental.inversion.theorem import verify_inversion_theorem
from pygivental.io.potential_file import load_potential
from pygivental.io.report import (
    OK,
    graphs_report,
    hierarchy_report,
    inversion_report,
    render,
    transform_report,
)
from pygivental.io.rmatrix_file import load_rmatrix
from pygivental.model.enum import Route
from pygivental.series.truncated_series import vdim_cap_for
from pygivental.utils import atomic_write, required

_logger = logging.getLogger(__name__)


class RunConfig(object):
    """
    One invocation of the tool.
    """

    def __init__(self, subcommand, input=None, rmatrix=None, output=None, config=None, compare=None):
        """
        Args:
            subcommand (str): transform, invert, hierarchy or graphs
            input (str): potential file
            rmatrix (str): r-matrix file
            output (str): report path, stdout when None
            config (Configuration): the values given on the command line
            compare (str): hierarchy comparison target
        """
        self.subcommand = subcommand
        self.input = input
        self.rmatrix = rmatrix
        self.output = output
        self.config = config if config is not None else Configuration()
        self.compare = compare

    def merged(self):
        """DEFAULT_CONFIG overridden by the environment and then by the command line"""
        merged = copy.deepcopy(DEFAULT_CONFIG)
        merged.merge_non_none_values(Configuration.from_environ())
        merged.merge_non_none_values(self.config)
        return merged


def _emit(run, config, doc):
    data = render(doc, config.report_format)
    if run.output:
        atomic_write(run.output, data)
    else:
        out = getattr(sys.stdout, 'buffer', None)
        if out is not None:
            out.write(data)
            out.flush()
        else:
            sys.stdout.write(data.decode('utf-8'))
    if doc['status'] != OK:
        raise VerificationError('%s: %s' % (doc['kind'], doc['status']), report=data)
    return data


def _load_inputs(run):
    source = load_potential(run.input)
    if run.rmatrix:
        r_matrix = load_rmatrix(run.rmatrix)
    else:
        r_matrix = RMatrix.zero(source.potential.dimension)
    if r_matrix.dimension != source.potential.dimension:
        raise DimensionMismatchError('potential of dimension %d with an r-matrix of dimension %d'
                                     % (source.potential.dimension, r_matrix.dimension),
                                     left=source.potential.dimension, right=r_matrix.dimension)
    _logger.info('loaded %s (order %d) and r-matrix with levels %r',
                 run.input, source.potential.degree_cap, r_matrix.levels)
    return source, r_matrix


def _transform_region(config, source, path):
    genus_cap = config.genus_cap
    if source.table is None and genus_cap > 0:
        _logger.info('%s has no correlators, the input is genus zero', path)
        genus_cap = 0
    vdim = vdim_cap_for(config.degree_cap, genus_cap)
    if vdim < 0:
        raise CapError('degree cap %d leaves no stable genus %d correlators' % (config.degree_cap, genus_cap),
                       cap=config.degree_cap, required=3)
    return genus_cap, Region(config.degree_cap, vdim)


def _input_table(source, region):
    """the correlators of the input, reconstructed from F when the file has none"""
    if source.table is not None:
        return source.table
    need = action_input_caps(region.degree, region.vdim)
    return reconstruct_descendants(source.potential, min(need.degree, need.vdim + 3), need.vdim)


@required(run=RunConfig)
def cmd_transform(run):
    """
    R^ applied to the correlators of the input, through the graph sum, the
    operator exponential, or both with a coefficientwise cross-check.

    :raise CapError: caps too small for the requested region
    :raise VerificationError: the two routes disagree
    """
    config = run.merged()
    source, r_matrix = _load_inputs(run)
    route = Route.GRAPH if config.route == Route.GIVENTAL else config.route
    if route not in (Route.GRAPH, Route.OPERATOR, Route.BOTH):
        raise ValueError('transform supports the graph, operator and both routes, got %s' % route)
    genus_cap, region = _transform_region(config, source, run.input)
    need = action_input_caps(region.degree, region.vdim)
    table = _input_table(source, region)
    # loops on genus zero vertices still reach higher genus outputs
    caps = GraphCaps.for_region(region.degree, region.vdim)
    graph = operator = None
    if route in (Route.GRAPH, Route.BOTH):
        graph = graph_sum(table, r_matrix, caps, config=config)
        _logger.info('graph route finished with %d terms', len(graph))
    if route in (Route.OPERATOR, Route.BOTH):
        z = table_to_partition_function(table, degree_cap=need.degree, genus_cap=genus_cap, vdim_cap=need.vdim)
        operator = exponentiate_action(r_matrix, z, region).log()
        operator = operator.truncate(region.degree, genus_cap, region.vdim)
        _logger.info('operator route finished with %d terms', len(operator))
    mismatches = {}
    if graph is not None and operator is not None:
        mismatches = graph.difference_within(operator, region.degree, region.vdim)
        for mono, (a, b) in sorted(mismatches.items()):
            _logger.warning('transform mismatch at %s: graph %s, operator %s', mono, a, b)
    result = graph if graph is not None else operator
    decorated = None
    if config.emit_graphs:
        decorated = decorated_contributions(table, r_matrix, caps)
    doc = transform_report(source.potential.dimension, region.degree, genus_cap, route,
                           series_to_table(result.reliable_part()), mismatches, decorated)
    return _emit(run, config, doc)


@required(run=RunConfig)
def cmd_invert(run):
    """
    Coefficientwise check that the inverted potential agrees with the
    Givental form of the inversion.

    :raise VerificationError: some coefficient differs between the routes
    """
    config = run.merged()
    source = load_potential(run.input)
    cap = run.config.degree_cap or source.potential.degree_cap
    report = verify_inversion_theorem(source.potential, cap, config.route, table=source.table, config=config)
    _logger.info('inversion check of %d coefficients finished, %d mismatches',
                 len(report.rows), len(report.mismatches()))
    return _emit(run, config, inversion_report(report))


@required(run=RunConfig)
def cmd_hierarchy(run):
    """
    Level by level comparison of the transformed Hamiltonian densities with
    the comparison densities, plus the first order check.

    :raise VerificationError: some level or first order check fails
    """
    config = run.merged()
    source = load_potential(run.input)
    if run.compare not in (None, 'lxz'):
        raise ValueError('unknown comparison %r' % run.compare)
    potential = source.potential
    cap = run.config.degree_cap or potential.degree_cap - 2
    pmax = config.pmax
    hierarchy = PrincipalHierarchy(potential, cap, pmax)
    levels = list(range(pmax + 1))
    with ThreadPoolExecutor(max_workers=config.worker_count()) as pool:
        comparisons = list(pool.map(lambda p: compare_level(hierarchy, p), levels))
    deformations = []
    for p in levels:
        for alpha in range(1, potential.dimension + 1):
            found = hierarchy.infinitesimal(alpha, p).value
            expected = hierarchy.expected_infinitesimal(alpha, p).value
            deformations.append((alpha, p, found.sub(expected).is_zero()))
    _logger.info('hierarchy comparison of %d levels finished', len(levels))
    doc = hierarchy_report(potential.dimension, cap, pmax, comparisons, deformations)
    return _emit(run, config, doc)


@required(run=RunConfig)
def cmd_graphs(run):
    """
    The enumerated graph shapes of a region with their automorphism orders;
    with emit_graphs and an input, also the non-vanishing decorated graphs.
    """
    config = run.merged()
    genus_cap = config.genus_cap
    decorated = None
    if config.emit_graphs and run.input:
        source, r_matrix = _load_inputs(run)
        genus_cap, region = _transform_region(config, source, run.input)
        table = _input_table(source, region)
    else:
        region = Region(config.degree_cap, vdim_cap_for(config.degree_cap, genus_cap))
    caps = GraphCaps.for_region(region.degree, max(region.vdim, 0), max_genus=genus_cap)
    shapes = [(g, automorphism_order(g)) for g in enumerate_graphs(caps)]
    if config.emit_graphs and run.input:
        decorated = decorated_contributions(table, r_matrix, caps)
    _logger.info('enumerated %d graph shapes', len(shapes))
    return _emit(run, config, graphs_report(caps, shapes, decorated))


COMMANDS = {
    'transform': cmd_transform,
    'invert': cmd_invert,
    'hierarchy': cmd_hierarchy,
    'graphs': cmd_graphs,
}
