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
This module defines exceptions for pygivental.
"""

from builtins import str
from builtins import bytes

from pygivental.model.enum import ExitCode


class Error(Exception):
    """Base Error of pygivental."""
    exit_code = ExitCode.MISMATCH

    def __init__(self, message):
        """
        Args:
            message (str): error message
        """
        Exception.__init__(self, message)


class DimensionMismatchError(Error):
    """Objects living on spaces of different dimension were combined."""
    exit_code = ExitCode.PARSE

    def __init__(self, message, left=None, right=None):
        """
        Args:
            message (str): error message
            left (int, optional): dimension of the first operand
            right (int, optional): dimension of the second operand
        """
        Error.__init__(self, message)
        self.left = left
        self.right = right


class CapError(Error):
    """A truncation cap is too small for the requested computation."""
    exit_code = ExitCode.CAP

    def __init__(self, message, cap=None, required=None):
        """
        Args:
            message (str): error message
            cap (object, optional): the cap that was hit
            required (object, optional): the value the computation needed
        """
        Error.__init__(self, message)
        self.cap = cap
        self.required = required


class SymmetryError(Error):
    """An r-matrix violates the (skew-)symmetry constraint."""
    exit_code = ExitCode.PARSE

    def __init__(self, message, level=None, mu=None, nu=None):
        """
        Args:
            message (str): error message
            level (int, optional): the offending level l
            mu (int, optional): first offending index of the raised bivector
            nu (int, optional): second offending index of the raised bivector
        """
        Error.__init__(self, message)
        self.level = level
        self.mu = mu
        self.nu = nu


class DivisionRemainderError(Error):
    """Exact division of a matrix series by (z + w) left a remainder."""

    def __init__(self, message, degree=None):
        """
        Args:
            message (str): error message
            degree (int, optional): total (z, w)-degree where the remainder showed up
        """
        Error.__init__(self, message)
        self.degree = degree


class ParseError(Error):
    """Input text or file could not be parsed."""
    exit_code = ExitCode.PARSE

    def __init__(self, message, path=None, line=None):
        """
        Args:
            message (str): error message
            path (str, optional): file being parsed
            line (int, optional): 1-based line number, when known
        """
        Error.__init__(self, message)
        self.path = path
        self.line = line


class SingularPointError(Error):
    """The inversion map was evaluated on the locus t^n = 0."""
    exit_code = ExitCode.PARSE


class VerificationError(Error):
    """Two independent routes disagree."""

    def __init__(self, message, report=None):
        """
        Args:
            message (str): error message
            report (object, optional): the report listing the mismatches
        """
        Error.__init__(self, message)
        self.report = report
