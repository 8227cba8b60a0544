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
from ...classify import theorem_case
from ...registry import germs_under
from ...report import ReportDocument, germ_to_dict
from .utils import add_common_arguments, emit


def add_parser(subparsers):
    parser = subparsers.add_parser('germs', aliases=['ls'], help='list built-in germs')
    parser.add_argument('prefix', metavar='PREFIX', nargs='?', default='',
                        help='only germs below this name, e.g. main-1/iv')
    add_common_arguments(parser)
    parser.set_defaults(executor=execute)


def execute(args: argparse.Namespace) -> int:
    results = []
    text = []
    for name, germ in germs_under(args.prefix):
        case = theorem_case(germ).value
        results.append({'name': name, 'theorem': case, 'germ': germ_to_dict(germ)})
        text.append(f'{name:<16}{case:<14}{germ}')
    return emit(ReportDocument('germs', {'prefix': args.prefix}, results, True, text), args)
