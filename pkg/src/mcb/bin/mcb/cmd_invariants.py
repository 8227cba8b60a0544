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
from ...germ import validate
from ...invariants import invariant_report, global_check
from ...classify import theorem_case
from ...report import ReportDocument, invariant_report_to_dict, global_report_to_dict
from .utils import add_common_arguments, search_caps, resolve_germs, emit


def add_parser(subparsers):
    parser = subparsers.add_parser('invariants', aliases=['inv'],
                                   help='compute wP, (F.C)P and iP of germs and check the global budget')
    parser.add_argument('--germ', metavar='GERM', required=True,
                        help='a germ document, a built-in germ name, or a registry prefix')
    parser.add_argument('--lower-only', action='store_true',
                        help='use the binomial lower bound of iP even where the exact value is available')
    parser.add_argument('--extra-gorenstein', metavar='N', type=int, default=0,
                        help='number of further Gorenstein points on the fiber (default: 0)')
    parser.add_argument('--cap', metavar='FACTOR', type=int,
                        help='generator cap factor of the iP searches')
    add_common_arguments(parser)
    parser.set_defaults(executor=execute)


def execute(args: argparse.Namespace) -> int:
    caps = search_caps(args, 'generator')
    results = []
    text = []
    passed = True
    for name, germ in resolve_germs(args.germ):
        checks = validate(germ)
        report = invariant_report(germ, caps, exact=not args.lower_only)
        glob = global_check([report], extra_gorenstein=args.extra_gorenstein)
        ok = bool(checks) and glob.passed
        passed = passed and ok
        results.append({'name': name, 'theorem': theorem_case(germ).value, 'valid': bool(checks),
                        'invariants': invariant_report_to_dict(report), 'global': global_report_to_dict(glob)})
        witness = f' ({report.wp_witness})' if report.wp_witness is not None else ''
        text.append(f'{name}: {germ}')
        text.append(f'  wP = {report.wp}{witness}  (F.C)P = {report.fc}  iP {report.ip}'
                    + (f'  [{report.ip.label}]' if report.ip.label else ''))
        if report.ip.witness:
            text.append(f'  iP witness: {", ".join(str(g) for g in report.ip.witness)}')
        text.append(f'  (-K.C) = {report.anticanonical}  total = {glob.total}  '
                    f'deg gr0 = {glob.deg_gr0_omega}  deg gr1 = {glob.deg_gr1_o}')
        if not ok:
            failures = glob.failures() + ([] if checks else [f'axiom {checks.first_failure().axiom}'])
            text.append(f'  failed: {", ".join(failures)}')
    doc = ReportDocument('invariants', {'germ': args.germ, 'lower-only': args.lower_only,
                                        'extra-gorenstein': args.extra_gorenstein, 'caps': caps.as_dict()},
                         results, passed, text)
    return emit(doc, args)
