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
This module provide the orjson settings shared by every file pygivental reads
and writes.
"""
import orjson

from pygivental.exception import ParseError
from pygivental.utils import atomic_write

DUMP_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2


def dumps(obj):
    """byte-stable json with sorted keys and a trailing newline"""
    return orjson.dumps(obj, option=DUMP_OPTIONS) + b'\n'


def loads(data, path=None):
    """
    :raise ParseError: the text is not valid json, with the line when known
    """
    try:
        return orjson.loads(data)
    except orjson.JSONDecodeError as e:
        raise ParseError('%s: invalid json: %s' % (path or '<input>', e.msg), path=path, line=e.lineno)


def read_json(path):
    """
    :raise ParseError: the file is missing or not valid json
    """
    try:
        with open(path, 'rb') as fp:
            data = fp.read()
    except (IOError, OSError) as e:
        raise ParseError('%s: cannot read: %s' % (path, e), path=path)
    return loads(data, path)


def write_json(path, obj):
    """Write obj atomically."""
    atomic_write(path, dumps(obj))


def expect(condition, message, path=None):
    """
    :raise ParseError: condition is false
    """
    if not condition:
        raise ParseError('%s: %s' % (path or '<input>', message), path=path)
