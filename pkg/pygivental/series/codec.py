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
This module provide the line oriented text form of a series.

    # series n=2 degree_cap=5 genus_cap=1
    1/2 * t[0,1]^2 * t[0,2]
    -3 * hbar^-1 * t[0,2]^3
"""
import re

from builtins import str

from pygivental.exception import ParseError
from pygivental.series.monomial import Monomial
from pygivental.series.truncated_series import TruncatedSeries
from pygivental.utils import format_rational, parse_rational

_HEADER = re.compile(r'^#\s*series\s+n=(\d+)\s+degree_cap=(\d+)\s+genus_cap=(\d+)(?:\s+vdim_cap=(-?\d+))?\s*$')
_HBAR = re.compile(r'^hbar(?:\^(-?\d+))?$')
_TVAR = re.compile(r'^t\[(\d+),(\d+)\](?:\^(\d+))?$')


def format_term(monomial, coeff):
    """One line `coeff * hbar^e * t[d,mu]^p * ...`."""
    parts = [format_rational(coeff)]
    if monomial.hbar_power:
        parts.append('hbar^%d' % monomial.hbar_power)
    for d, mu, p in monomial.triples:
        parts.append('t[%d,%d]^%d' % (d, mu, p) if p != 1 else 't[%d,%d]' % (d, mu))
    return ' * '.join(parts)


def format_series(series, header=True):
    """
    Render a series, one term per line in canonical monomial order.

    :rtype: str
    """
    lines = []
    if header:
        lines.append('# series n=%d degree_cap=%d genus_cap=%d vdim_cap=%d'
                     % (series.dimension, series.degree_cap, series.genus_cap, series.vdim_cap))
    for mono, coeff in series.items():
        lines.append(format_term(mono, coeff))
    return '\n'.join(lines) + '\n'


def parse_term(line, path=None, lineno=None):
    """
    Parse one term line.

    :return: (Monomial, Fraction)
    :raise ParseError: malformed line
    """
    tokens = [token.strip() for token in line.split('*')]
    if not tokens or not tokens[0]:
        raise ParseError('empty term', path=path, line=lineno)
    coeff = parse_rational(tokens[0], path=path, line=lineno)
    hbar = 0
    factors = []
    for token in tokens[1:]:
        match = _HBAR.match(token)
        if match:
            hbar += int(match.group(1) or 1)
            continue
        match = _TVAR.match(token)
        if match:
            d, mu = int(match.group(1)), int(match.group(2))
            if mu < 1:
                raise ParseError('primary index must be positive in %r' % token, path=path, line=lineno)
            factors.append(((d, mu), int(match.group(3) or 1)))
            continue
        raise ParseError('unrecognised factor %r' % token, path=path, line=lineno)
    return Monomial(factors, hbar), coeff


def parse_series(text, dimension=None, degree_cap=None, genus_cap=None, path=None, vdim_cap=None):
    """
    Parse the text form back into a series.

    The header line supplies the caps unless they are given explicitly.

    :raise ParseError: malformed input or missing caps
    """
    terms = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            match = _HEADER.match(line)
            if match:
                dimension = dimension or int(match.group(1))
                degree_cap = int(match.group(2)) if degree_cap is None else degree_cap
                genus_cap = int(match.group(3)) if genus_cap is None else genus_cap
                if match.group(4) is not None and vdim_cap is None:
                    vdim_cap = int(match.group(4))
            continue
        mono, coeff = parse_term(line, path=path, lineno=lineno)
        terms[mono] = terms.get(mono, 0) + coeff
    if dimension is None or degree_cap is None or genus_cap is None:
        raise ParseError('series text needs a header or explicit caps', path=path)
    return TruncatedSeries(dimension, degree_cap, genus_cap, terms, vdim_cap=vdim_cap)
