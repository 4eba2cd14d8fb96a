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
This module provide reading and writing of potential files (*.pot.json):

    {"dimension": n, "degree_cap": N, "point": ["0", ..., "1"],
     "potential": [{"monomial": [[mu, power], ...], "coeff": "p/q"}, ...],
     "correlators": [{"genus": g, "insertions": [[d, mu], ...], "value": "p/q"}, ...]}

The "potential" terms are the full F including the unit cubic. The short
hand {"dimension": 2, "sigma": {"3": "p/q", ...}} builds the two dimensional
normal form F = 1/2 (t^1)^2 t^2 + sum_k sigma_k (t^2)^k / k!.
"""
import logging
from builtins import str
from collections import namedtuple

from future.utils import iteritems

from pygivental.cohft.correlator_table import CorrelatorTable
from pygivental.cohft.potential import FrobeniusPotential
from pygivental.exception import DimensionMismatchError, ParseError
from pygivental.io.json_codec import expect, read_json, write_json
from pygivental.series.monomial import Monomial
from pygivental.series.truncated_series import TruncatedSeries
from pygivental.utils import format_rational, parse_rational, required

_logger = logging.getLogger(__name__)

PotentialFile = namedtuple('PotentialFile', ['potential', 'table'])


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_sigmas(doc, path):
    sigmas = doc['sigma']
    expect(doc['dimension'] == 2, 'the sigma short hand is only defined for dimension 2', path)
    expect(isinstance(sigmas, dict) and sigmas, '"sigma" should be a non-empty object', path)
    parsed = {}
    for key, value in iteritems(sigmas):
        try:
            k = int(key)
        except ValueError:
            raise ParseError('%s: sigma index %r is not an integer' % (path, key), path=path)
        expect(k >= 3, 'sigma_%d is an order <= 2 term' % k, path)
        parsed[k] = parse_rational(value, path=path)
    degree_cap = doc.get('degree_cap', max(parsed))
    expect(_is_int(degree_cap) and degree_cap >= 3, '"degree_cap" should be an integer >= 3', path)
    return FrobeniusPotential.two_dimensional(parsed, degree_cap)


def _parse_terms(doc, n, path):
    terms = {}
    expect(isinstance(doc['potential'], list), '"potential" should be a list of terms', path)
    for term in doc['potential']:
        expect(isinstance(term, dict) and 'monomial' in term and 'coeff' in term,
               'every potential term needs "monomial" and "coeff"', path)
        expect(isinstance(term['monomial'], list), '"monomial" should be a list of [mu, power]', path)
        factors = []
        for factor in term['monomial']:
            expect(isinstance(factor, list) and len(factor) == 2 and all(_is_int(x) for x in factor),
                   'monomial factor %r should be [mu, power]' % (factor,), path)
            mu, power = factor
            expect(1 <= mu <= n, 'index %d outside 1..%d' % (mu, n), path)
            expect(power >= 1, 'power %d should be positive' % power, path)
            factors.append(((0, mu), power))
        mono = Monomial(factors)
        terms[mono] = terms.get(mono, 0) + parse_rational(term['coeff'], path=path)
    default_cap = max([m.degree for m in terms] + [3])
    degree_cap = doc.get('degree_cap', default_cap)
    expect(_is_int(degree_cap) and degree_cap >= 3, '"degree_cap" should be an integer >= 3', path)
    return TruncatedSeries(n, degree_cap, 1, terms)


def _parse_point(doc, n, path):
    if 'point' not in doc:
        return None
    point = doc['point']
    expect(isinstance(point, list) and len(point) == n, '"point" should list %d rationals' % n, path)
    return tuple(parse_rational(x, path=path) for x in point)


def _parse_table(doc, n, path):
    if 'correlators' not in doc:
        return None
    entries = {}
    expect(isinstance(doc['correlators'], list), '"correlators" should be a list of entries', path)
    for entry in doc['correlators']:
        expect(isinstance(entry, dict) and 'insertions' in entry and 'value' in entry,
               'every correlator needs "insertions" and "value"', path)
        genus = entry.get('genus', 0)
        expect(_is_int(genus) and genus >= 0, 'genus %r should be a non-negative integer' % (genus,), path)
        expect(isinstance(entry['insertions'], list), '"insertions" should be a list of [d, mu]', path)
        insertions = []
        for ins in entry['insertions']:
            expect(isinstance(ins, list) and len(ins) == 2 and all(_is_int(x) for x in ins),
                   'insertion %r should be [d, mu]' % (ins,), path)
            insertions.append(tuple(ins))
        key = (genus, tuple(sorted(insertions)))
        entries[key] = entries.get(key, 0) + parse_rational(entry['value'], path=path)
    try:
        return CorrelatorTable(n, entries)
    except (ValueError, DimensionMismatchError) as e:
        raise ParseError('%s: %s' % (path, e), path=path)


def parse_potential(doc, path=None):
    """
    Build the potential (and the optional correlator table) of a decoded file.

    :return: PotentialFile
    :raise ParseError: the document does not follow the schema
    """
    path = path or '<input>'
    expect(isinstance(doc, dict), 'top level should be an object', path)
    expect(_is_int(doc.get('dimension')) and doc['dimension'] >= 2,
           '"dimension" should be an integer >= 2', path)
    n = doc['dimension']
    try:
        if 'sigma' in doc:
            potential = _parse_sigmas(doc, path)
        else:
            expect('potential' in doc, 'either "potential" or "sigma" is required', path)
            series = _parse_terms(doc, n, path)
            potential = FrobeniusPotential(n, series, _parse_point(doc, n, path))
    except (ValueError, DimensionMismatchError) as e:
        raise ParseError('%s: %s' % (path, e), path=path)
    table = _parse_table(doc, n, path)
    _logger.debug('read potential of dimension %d to order %d from %s', n, potential.degree_cap, path)
    return PotentialFile(potential, table)


@required(path=str)
def load_potential(path):
    """
    :return: PotentialFile
    :raise ParseError: the file is missing, not json, or off schema
    """
    return parse_potential(read_json(path), path)


def potential_to_dict(potential, table=None):
    """the json document of a potential and an optional table"""
    doc = {
        'dimension': potential.dimension,
        'degree_cap': potential.degree_cap,
        'point': [format_rational(x) for x in potential.point],
        'potential': [{'monomial': [[mu, p] for _, mu, p in mono.triples], 'coeff': format_rational(c)}
                      for mono, c in potential.series.items()],
    }
    if table is not None:
        doc['correlators'] = [{'genus': g, 'insertions': [[ins.d, ins.mu] for ins in insertions],
                               'value': format_rational(v)}
                              for (g, insertions), v in table.items()]
    return doc


def save_potential(path, potential, table=None):
    """Write a potential file atomically."""
    write_json(path, potential_to_dict(potential, table))
