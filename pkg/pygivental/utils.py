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
This module provide some tools shared by the pygivental packages.
"""
from builtins import str, bytes
from future.utils import iteritems

import os
import math
import tempfile
import functools
from collections import Counter
from fractions import Fraction

from pygivental.exception import ParseError


def required(**types):
    """
    decorator of input param check
    :param types: mapping from argument name to accepted type(s)
    :return:
    """
    def _required(f):
        @functools.wraps(f)
        def _decorated(*args, **kwds):
            for i, v in enumerate(args):
                if f.__code__.co_varnames[i] in types:
                    if v is None:
                        raise ValueError('arg "%s" should not be None' %
                                         (f.__code__.co_varnames[i]))
                    if not isinstance(v, types[f.__code__.co_varnames[i]]):
                        raise TypeError('arg "%s"= %r does not match %s' %
                                        (f.__code__.co_varnames[i],
                                         v,
                                         types[f.__code__.co_varnames[i]]))
            for k, v in iteritems(kwds):
                if k in types:
                    if v is None:
                        raise ValueError('arg "%s" should not be None' % k)
                    if not isinstance(v, types[k]):
                        raise TypeError('arg "%s"= %r does not match %s' % (k, v, types[k]))
            return f(*args, **kwds)
        return _decorated
    return _required


def dual_index(n, mu):
    """
    Index paired with mu by the anti-diagonal metric eta_{ab} = delta_{a+b,n+1}.

    Raising or lowering an index with eta is the substitution mu -> n + 1 - mu.
    """
    return n + 1 - mu


def format_rational(value):
    """
    Render a rational as "p/q", or "p" when the denominator is 1.

    :type value: Fraction or int
    :rtype: str
    """
    value = Fraction(value)
    if value.denominator == 1:
        return '%d' % value.numerator
    return '%d/%d' % (value.numerator, value.denominator)


def parse_rational(text, path=None, line=None):
    """
    Parse "p/q" or "p" into a Fraction.

    :raise ParseError: the text is not an exact rational
    """
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError('expected a rational string, got %r' % (text,), path=path, line=line)
    stripped = text.strip()
    if '.' in stripped or 'e' in stripped.lower():
        raise ParseError('rational %r must be written as p/q' % text, path=path, line=line)
    try:
        return Fraction(stripped)
    except (ValueError, ZeroDivisionError):
        raise ParseError('invalid rational %r' % text, path=path, line=line)


def multiset_aut(items):
    """
    Order of the permutation group of a multiset, i.e. the product of the
    factorials of the multiplicities.
    """
    result = 1
    for count in Counter(items).values():
        result *= math.factorial(count)
    return result


def multinomial_orderings(items):
    """Number of distinct orderings of a multiset."""
    items = list(items)
    return math.factorial(len(items)) // multiset_aut(items)


def atomic_write(path, data):
    """
    Write bytes to path through a temporary file in the same directory and an
    atomic rename, so readers never observe a partial file.

    :type path: str
    :type data: bytes
    """
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(prefix='.tmp-', dir=directory)
    try:
        with os.fdopen(fd, 'wb') as fp:
            fp.write(data)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise
