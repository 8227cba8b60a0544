# -----------------------------------------------------------------------------
# Copyright (C) 2024-2026 The python-mcb authors
#
# This file is part of python-mcb.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# -----------------------------------------------------------------------------
import argparse
import json
import sys
from typing import Optional, Sequence
from ...types import McbError, GermDocumentError, GermStructureError, GermValidationError, UnknownGerm, \
    TableError, FamilyError, FamilyParseError, UnsupportedShape
from . import cmd_invariants, cmd_classify, cmd_duval, cmd_verify_example, cmd_germs
from .utils import setup_logging, EXIT_FAILED, EXIT_PARSE, EXIT_INVALID, EXIT_USAGE


CMD_LIST = '''
Available commands:
  invariants (inv)       Compute wP, (F.C)P and iP of germs and check the global budget
  classify (cls)         Bounded classification for a subindex and splitting degree
  duval (dv)             Resolution graphs and tables of surface singularities
  verify-example (ve)    Check equivariance, central fiber and fixed points of a family
  germs (ls)             List built-in germs

Exit codes: 0 all checks passed, 1 a check failed, 2 parse error, 3 validation failure, 64 unknown command.

Try '%(prog)s COMMAND -h' for more information on each command
'''

COMMANDS = {'invariants', 'inv', 'classify', 'cls', 'duval', 'dv', 'verify-example', 've', 'germs', 'ls'}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and not argv[0].startswith('-') and argv[0] not in COMMANDS:
        print(f'Unknown command: {argv[0]}', file=sys.stderr)
        return EXIT_USAGE

    parser = argparse.ArgumentParser(prog='pymcb', formatter_class=argparse.RawDescriptionHelpFormatter,
                                     epilog=CMD_LIST)
    subparsers = parser.add_subparsers(metavar='COMMAND', help='sub-command to execute')

    cmd_invariants.add_parser(subparsers)
    cmd_classify.add_parser(subparsers)
    cmd_duval.add_parser(subparsers)
    cmd_verify_example.add_parser(subparsers)
    cmd_germs.add_parser(subparsers)

    args = parser.parse_args(argv)
    if 'executor' not in args:
        parser.print_help()
        return EXIT_USAGE
    setup_logging(args)

    try:
        return args.executor(args)
    except (GermDocumentError, FamilyParseError, UnknownGerm, TableError, json.JSONDecodeError, OSError) as e:
        print(f'Parse error: {e}', file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedShape as e:
        print(f'Unsupported: {e}', file=sys.stderr)
        return EXIT_FAILED
    except (GermStructureError, GermValidationError, FamilyError) as e:
        print(f'Validation failure: {e}', file=sys.stderr)
        return EXIT_INVALID
    except McbError as e:
        print(f'Failed: {e}', file=sys.stderr)
        return EXIT_FAILED
    except ValueError as e:
        print(f'Parse error: {e}', file=sys.stderr)
        return EXIT_PARSE
