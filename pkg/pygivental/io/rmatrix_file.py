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
This module provide reading and writing of r-matrix files (*.rmat.json):

    {"dimension": n, "levels": [{"level": l, "matrix": [["p/q", ...], ...]}, ...]}

matrix[nu - 1][mu - 1] is (r_l)^nu_mu. The short hand {"dimension": n,
"inversion": true} gives the inversion r-matrix.
"""
import logging
from builtins import str

from pygivental.action.rmatrix import RMatrix
from pygivental.exception import DimensionMismatchError, ParseError, SymmetryError
from pygivental.io.json_codec import expect, read_json, write_json
from pygivental.utils import format_rational, parse_rational, required

_logger = logging.getLogger(__name__)


def parse_rmatrix(doc, path=None):
    """
    :return: RMatrix
    :raise ParseError: the document does not follow the schema
    :raise SymmetryError: some r_l has the wrong parity, with its (l, mu, nu)
    """
    path = path or '<input>'
    expect(isinstance(doc, dict), 'top level should be an object', path)
    n = doc.get('dimension')
    expect(isinstance(n, int) and not isinstance(n, bool) and n >= 1,
           '"dimension" should be a positive integer', path)
    if doc.get('inversion'):
        return RMatrix.inversion(n)
    levels = {}
    expect(isinstance(doc.get('levels', []), list), '"levels" should be a list', path)
    for entry in doc.get('levels', []):
        expect(isinstance(entry, dict) and 'level' in entry and 'matrix' in entry,
               'every level needs "level" and "matrix"', path)
        level = entry['level']
        expect(isinstance(level, int) and not isinstance(level, bool) and level >= 1,
               'level %r should be a positive integer' % (level,), path)
        expect(level not in levels, 'level %d given twice' % level, path)
        rows = entry['matrix']
        expect(isinstance(rows, list) and len(rows) == n
               and all(isinstance(row, list) and len(row) == n for row in rows),
               'matrix of level %d should be %d x %d' % (level, n, n), path)
        levels[level] = [[parse_rational(x, path=path) for x in row] for row in rows]
    try:
        r_matrix = RMatrix(n, levels)
    except SymmetryError as e:
        raise SymmetryError('%s: %s' % (path, e), level=e.level, mu=e.mu, nu=e.nu)
    except (ValueError, DimensionMismatchError) as e:
        raise ParseError('%s: %s' % (path, e), path=path)
    _logger.debug('read r-matrix of dimension %d with levels %r from %s', n, r_matrix.levels, path)
    return r_matrix


@required(path=str)
def load_rmatrix(path):
    """
    :return: RMatrix
    :raise ParseError: the file is missing, not json, or off schema
    :raise SymmetryError: the (skew-)symmetry constraint fails
    """
    return parse_rmatrix(read_json(path), path)


def rmatrix_to_dict(r_matrix):
    """the json document of an r-matrix"""
    n = r_matrix.dimension
    return {
        'dimension': n,
        'levels': [{'level': l,
                    'matrix': [[format_rational(r_matrix.entry(l, nu, mu)) for mu in range(1, n + 1)]
                               for nu in range(1, n + 1)]}
                   for l in r_matrix.levels],
    }


def save_rmatrix(path, r_matrix):
    """Write an r-matrix file atomically."""
    write_json(path, rmatrix_to_dict(r_matrix))
