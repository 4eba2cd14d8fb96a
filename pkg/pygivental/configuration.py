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
This module defines a common configuration class for pygivental runs.
"""

import os
import logging

from future.utils import iteritems
from builtins import str
from builtins import bytes

from pygivental.model.enum import Route, ReportFormat

_logger = logging.getLogger(__name__)

THREADS_ENV = 'GIVENTAL_THREADS'


class Configuration(object):
    """Configuration of a pygivental run."""

    def __init__(self,
                 degree_cap=None,
                 genus_cap=None,
                 pmax=None,
                 threads=None,
                 route=None,
                 report_format=None,
                 emit_graphs=None):
        """
        Args:
            degree_cap (int): max total power of t-variables kept in every series.
            genus_cap (int): max genus kept; hbar-free series use 1.
            pmax (int): highest hierarchy level p compared.
            threads (int): worker threads for graph contraction, 0 means one per cpu.
            route (Route): which independent computation to run.
            report_format (ReportFormat): text or structured (json) report.
            emit_graphs (bool): also dump the contributing decorated graphs.
        """
        if degree_cap is not None and degree_cap < 0:
            raise ValueError('degree_cap should be a non-negative integer.')
        if genus_cap is not None and genus_cap < 0:
            raise ValueError('genus_cap should be a non-negative integer.')
        if threads is not None and threads < 0:
            raise ValueError('threads should be a non-negative integer.')
        self.degree_cap = degree_cap
        self.genus_cap = genus_cap
        self.pmax = pmax
        self.threads = threads
        self.route = route
        self.report_format = report_format
        self.emit_graphs = emit_graphs

    def merge_non_none_values(self, other):
        """
        Overwrite the fields of self with the non-None fields of other.

        :param other: configuration whose explicit values win
        :type other: Configuration
        """
        for k, v in iteritems(other.__dict__):
            if v is not None:
                self.__dict__[k] = v

    def worker_count(self):
        """
        Resolve the threads field, 0 meaning one worker per cpu.

        :return: number of worker threads, at least 1
        :rtype: int
        """
        if not self.threads:
            return os.cpu_count() or 1
        return self.threads

    @staticmethod
    def from_environ(environ=None):
        """
        Build a configuration holding only the values found in the environment.

        :param environ: mapping to read instead of os.environ
        :return: Configuration
        """
        environ = os.environ if environ is None else environ
        raw = environ.get(THREADS_ENV)
        if raw is None or raw == '':
            return Configuration()
        try:
            threads = int(raw)
        except ValueError:
            _logger.warning('ignoring %s=%r, not an integer', THREADS_ENV, raw)
            return Configuration()
        if threads < 0:
            _logger.warning('ignoring negative %s=%d', THREADS_ENV, threads)
            return Configuration()
        return Configuration(threads=threads)


DEFAULT_DEGREE_CAP = 6
DEFAULT_GENUS_CAP = 1
DEFAULT_PMAX = 2
DEFAULT_THREADS = 0
DEFAULT_ROUTE = Route.BOTH
DEFAULT_REPORT_FORMAT = ReportFormat.TEXT
DEFAULT_CONFIG = Configuration(
    degree_cap=DEFAULT_DEGREE_CAP,
    genus_cap=DEFAULT_GENUS_CAP,
    pmax=DEFAULT_PMAX,
    threads=DEFAULT_THREADS,
    route=DEFAULT_ROUTE,
    report_format=DEFAULT_REPORT_FORMAT,
    emit_graphs=False)
