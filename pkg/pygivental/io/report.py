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
This module provide the reports of the command line tool, as json documents
(structured) and as line oriented text. Rationals are always "p/q" strings
and every list is in a canonical order, so reports are byte-identical across
runs and thread counts.
"""
from collections import Counter

from future.utils import iteritems

from pygivental.io.json_codec import dumps
from pygivental.model.enum import ReportFormat
from pygivental.utils import format_rational

OK = 'ok'
MISMATCH = 'mismatch'


def _rational(value):
    return None if value is None else format_rational(value)


def format_correlator(genus, insertions):
    """<tau_0(2)^5 tau_1(1)>_0"""
    counts = sorted(Counter((ins[0], ins[1]) for ins in insertions).items())
    parts = []
    for (d, mu), k in counts:
        parts.append('tau_%d(%d)' % (d, mu) + ('^%d' % k if k > 1 else ''))
    return '<%s>_%d' % (' '.join(parts), genus)


def correlator_rows(table):
    """json rows of a CorrelatorTable"""
    return [{'genus': g, 'insertions': [[ins.d, ins.mu] for ins in insertions], 'value': format_rational(v)}
            for (g, insertions), v in table.items()]


def sigma_tildes(table):
    """k -> <tau_0(2)^k>_0 of a two dimensional table"""
    out = {}
    for (g, insertions), v in table.items():
        if g == 0 and all(ins.d == 0 and ins.mu == 2 for ins in insertions):
            out[len(insertions)] = v
    return out


def decorated_rows(decorated):
    """json rows of (DecoratedGraph, automorphism order, contribution) triples"""
    return [{'graph': g.describe(), 'aut': aut,
             'contribution': [{'monomial': str(m), 'coeff': format_rational(c)} for m, c in value.items()]}
            for g, aut, value in decorated]


def transform_report(dimension, degree_cap, genus_cap, route, table, mismatches=None, decorated=None):
    """
    Args:
        table (CorrelatorTable): the transformed correlators
        mismatches (dict): Monomial -> (graph value, operator value)
        decorated (list): (DecoratedGraph, automorphism order, contribution)
    """
    mismatches = mismatches or {}
    doc = {
        'kind': 'transform',
        'dimension': dimension,
        'degreeCap': degree_cap,
        'genusCap': genus_cap,
        'route': str(route),
        'status': MISMATCH if mismatches else OK,
        'correlators': correlator_rows(table),
        'mismatches': [{'monomial': str(m), 'graph': _rational(a), 'operator': _rational(b)}
                       for m, (a, b) in sorted(iteritems(mismatches))],
    }
    if decorated is not None:
        doc['decorated'] = decorated_rows(decorated)
    if dimension == 2:
        doc['sigma'] = dict(('%d' % k, format_rational(v)) for k, v in iteritems(sigma_tildes(table)))
    return doc


def inversion_report(report):
    """json document of a CoefficientReport"""
    return {
        'kind': 'invert',
        'dimension': report.dimension,
        'degreeCap': report.cap,
        'route': str(report.route),
        'status': OK if report.ok else MISMATCH,
        'rows': [{'monomial': str(row.monomial), 'coordinate': _rational(row.coordinate),
                  'givental': _rational(row.givental), 'definition': _rational(row.definition),
                  'equal': row.equal} for row in report.rows],
    }


def hierarchy_report(dimension, degree_cap, pmax, comparisons, deformations):
    """
    Args:
        comparisons (list): SpanComparison per level
        deformations (list): (alpha, p, equal) of the first order check
    """
    ok = all(c.equal and all(c.coincident.values()) for c in comparisons) \
        and all(equal for _, _, equal in deformations)
    return {
        'kind': 'hierarchy',
        'dimension': dimension,
        'degreeCap': degree_cap,
        'pmax': pmax,
        'status': OK if ok else MISMATCH,
        'levels': [c.to_dict() for c in comparisons],
        'deformation': [{'alpha': a, 'p': p, 'equal': equal} for a, p, equal in deformations],
    }


def graphs_report(caps, shapes, decorated=None):
    """
    Args:
        caps (GraphCaps): enumeration region
        shapes (list): (Graph, automorphism order)
        decorated (list): (DecoratedGraph, automorphism order, contribution)
    """
    doc = {
        'kind': 'graphs',
        'caps': dict(caps._asdict()),
        'status': OK,
        'shapes': [{'genera': list(g.genera), 'edges': [list(e) for e in g.edges],
                    'leaves': [list(l) for l in g.leaves], 'aut': aut} for g, aut in shapes],
    }
    if decorated is not None:
        doc['decorated'] = decorated_rows(decorated)
    return doc


def _decorated_text(doc):
    lines = []
    for row in doc.get('decorated', []):
        terms = ' + '.join('%s*%s' % (t['coeff'], t['monomial']) for t in row['contribution'])
        lines.append('1/%d %s -> %s' % (row['aut'], row['graph'], terms))
    return lines


def _transform_text(doc):
    lines = ['transform n=%d degree_cap=%d genus_cap=%d route=%s: %s'
             % (doc['dimension'], doc['degreeCap'], doc['genusCap'], doc['route'], doc['status'])]
    for k, v in sorted((int(k), v) for k, v in iteritems(doc.get('sigma', {}))):
        lines.append('sigma~_%d = %s' % (k, v))
    for row in doc['correlators']:
        lines.append('%s = %s' % (format_correlator(row['genus'], row['insertions']), row['value']))
    for row in doc['mismatches']:
        lines.append('MISMATCH %s: graph %s, operator %s' % (row['monomial'], row['graph'], row['operator']))
    lines.extend(_decorated_text(doc))
    return lines


def _invert_text(doc):
    bad = [row for row in doc['rows'] if not row['equal']]
    lines = ['invert n=%d degree_cap=%d route=%s: %s, %d coefficients, %d mismatches'
             % (doc['dimension'], doc['degreeCap'], doc['route'], doc['status'], len(doc['rows']), len(bad))]
    for row in doc['rows']:
        values = ['coordinate=%s' % row['coordinate']]
        for key in ('givental', 'definition'):
            if row[key] is not None:
                values.append('%s=%s' % (key, row[key]))
        lines.append('%s %s %s' % ('ok' if row['equal'] else 'MISMATCH', row['monomial'], ' '.join(values)))
    return lines


def _hierarchy_text(doc):
    lines = ['hierarchy n=%d degree_cap=%d pmax=%d: %s'
             % (doc['dimension'], doc['degreeCap'], doc['pmax'], doc['status'])]
    for level in doc['levels']:
        head = 'level %d: spans %s' % (level['level'], 'equal' if level['equal'] else 'differ')
        if 'changeOfBasis' in level:
            head += ', change of basis %s' % ' ; '.join(' '.join(row) for row in level['changeOfBasis'])
        lines.append(head)
        for alpha, same in sorted((int(a), s) for a, s in iteritems(level.get('coincident', {}))):
            lines.append('  alpha=%d %s' % (alpha, 'coincident' if same else 'DIFFERENT'))
        if 'certificate' in level:
            cert = level['certificate']
            lines.append('  member %d of family %s lies outside, pairing %s'
                         % (cert['index'], cert['family'], cert['pairing']))
    for row in doc['deformation']:
        lines.append('first order alpha=%d p=%d: %s' % (row['alpha'], row['p'], 'ok' if row['equal'] else 'MISMATCH'))
    return lines


def _graphs_text(doc):
    caps = doc['caps']
    lines = ['graphs leaves<=%d vertices<=%d edges<=%d genus<=%d z_power<=%d: %d shapes'
             % (caps['max_leaves'], caps['max_vertices'], caps['max_edges'], caps['max_genus'],
                caps['max_z_power'], len(doc['shapes']))]
    for shape in doc['shapes']:
        lines.append('aut=%d genera=%s edges=%s leaves=%s'
                     % (shape['aut'], shape['genera'], shape['edges'], shape['leaves']))
    lines.extend(_decorated_text(doc))
    return lines


_TEXT = {
    'transform': _transform_text,
    'invert': _invert_text,
    'hierarchy': _hierarchy_text,
    'graphs': _graphs_text,
}


def render(doc, report_format=ReportFormat.TEXT):
    """
    The bytes of a report document.

    :type report_format: ReportFormat
    :rtype: bytes
    """
    if report_format == ReportFormat.STRUCTURED:
        return dumps(doc)
    return ('\n'.join(_TEXT[doc['kind']](doc)) + '\n').encode('utf-8')
