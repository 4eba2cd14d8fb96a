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
This module provide the givental command line tool.

    givental transform --input F.pot.json --rmatrix r.rmat.json --cap 5 --route both
    givental invert    --input F.pot.json --cap 6
    givental hierarchy --input F.pot.json --cap 5 --pmax 2 --compare lxz
    givental graphs    --cap 5 --genus-cap 0 [--emit-graphs --input .. --rmatrix ..]

Exit status: 0 success, 1 mismatch, 2 parse or symmetry error, 3 cap too small.
"""
import argparse
import logging
import sys

from pygivental.cli.commands import COMMANDS, RunConfig
from pygivental.configuration import Configuration
from pygivental.exception import Error, VerificationError
from pygivental.model.enum import ExitCode, ReportFormat, Route

_logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError('expected a non-negative integer, got %s' % text)
    return value


def build_parser():
    """the argparse parser of every subcommand"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--input', help='potential file (*.pot.json)')
    common.add_argument('--rmatrix', help='r-matrix file (*.rmat.json)')
    common.add_argument('--cap', type=_non_negative, dest='degree_cap', help='degree cap of every series')
    common.add_argument('--genus-cap', type=_non_negative, dest='genus_cap', help='largest genus kept')
    common.add_argument('--pmax', type=_non_negative, help='highest hierarchy level compared')
    common.add_argument('--route', type=Route, choices=list(Route), help='independent computation to run')
    common.add_argument('--report', type=ReportFormat, choices=list(ReportFormat), dest='report_format',
                        help='report format')
    common.add_argument('--emit-graphs', action='store_true', default=None,
                        help='also list the contributing decorated graphs')
    common.add_argument('--output', help='write the report here instead of stdout')
    common.add_argument('--verbose', action='store_true', help='debug logging')

    parser = argparse.ArgumentParser(prog='givental', description='Givental group action toolkit')
    sub = parser.add_subparsers(dest='subcommand')
    sub.required = True
    sub.add_parser('transform', parents=[common], help='apply an r-matrix to a CohFT')
    sub.add_parser('invert', parents=[common], help='check the inversion symmetry coefficientwise')
    hierarchy = sub.add_parser('hierarchy', parents=[common], help='compare transformed Hamiltonians')
    hierarchy.add_argument('--compare', choices=['lxz'], default='lxz', help='comparison densities')
    sub.add_parser('graphs', parents=[common], help='dump the enumerated graph shapes')
    return parser


def _run_config(args):
    config = Configuration(degree_cap=args.degree_cap,
                           genus_cap=args.genus_cap,
                           pmax=args.pmax,
                           route=args.route,
                           report_format=args.report_format,
                           emit_graphs=args.emit_graphs)
    return RunConfig(args.subcommand, input=args.input, rmatrix=args.rmatrix, output=args.output,
                     config=config, compare=getattr(args, 'compare', None))


def main(argv=None):
    """
    Run the tool and return its exit status.

    :param argv: arguments without the program name, sys.argv[1:] when None
    :rtype: int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return ExitCode.OK.value if e.code == 0 else ExitCode.PARSE.value
    logging.basicConfig(format=LOG_FORMAT, level=logging.DEBUG if args.verbose else logging.WARNING)
    if args.subcommand in ('transform', 'invert', 'hierarchy') and not args.input:
        _logger.error('%s needs --input', args.subcommand)
        return ExitCode.PARSE.value
    run = _run_config(args)
    try:
        COMMANDS[args.subcommand](run)
    except VerificationError as e:
        _logger.warning('%s', e)
        return e.exit_code.value
    except Error as e:
        _logger.error('%s', e)
        return e.exit_code.value
    except ValueError as e:
        _logger.error('%s', e)
        return ExitCode.PARSE.value
    return ExitCode.OK.value


if __name__ == '__main__':
    sys.exit(main())
