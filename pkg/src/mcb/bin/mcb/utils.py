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
import logging
import os
from typing import Optional
from ...conf import SearchCaps
from ...germ import NormalizedGerm
from ...registry import germs_under
from ...report import ReportDocument, parse_germ_file


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_USAGE = 64


def add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--json', action='store_true', help='print the report as JSON')
    parser.add_argument('-v', '--verbose', action='store_true', help='log debug messages')


def setup_logging(args: argparse.Namespace):
    level = logging.DEBUG if getattr(args, 'verbose', False) else logging.WARNING
    logging.basicConfig(format='%(name)s:%(levelname)s:%(message)s', level=level)


def search_caps(args: argparse.Namespace, cap_field: Optional[str] = None) -> SearchCaps:
    r"""
    Caps from the configuration files and environment, with ``--cap`` and ``--workers`` on top.
    """
    caps = SearchCaps.from_conf()
    overrides = {}
    cap = getattr(args, 'cap', None)
    if cap is not None and cap_field is not None:
        for name in cap_field.split(','):
            overrides[name] = cap
    workers = getattr(args, 'workers', None)
    if workers is not None:
        overrides['workers'] = max(1, workers)
    if not overrides:
        return caps
    values = caps.as_dict()
    values.update(overrides)
    return SearchCaps(**values)


def resolve_germs(target: str) -> list[tuple[str, NormalizedGerm]]:
    r"""
    A file path, a built-in germ name or alias, or a registry prefix.
    """
    if os.path.isfile(target):
        return [(target, parse_germ_file(target))]
    return germs_under(target)


def emit(doc: ReportDocument, args: argparse.Namespace) -> int:
    if args.json:
        print(doc.dumps())
    else:
        print(doc.render())
    return EXIT_OK if doc.passed else EXIT_FAILED
