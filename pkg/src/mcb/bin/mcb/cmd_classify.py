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
from ...classify import Mode, classify, match_theorem_patterns
from ...report import ReportDocument, survivor_report_to_dict
from .utils import add_common_arguments, search_caps, emit


def add_parser(subparsers):
    parser = subparsers.add_parser('classify', aliases=['cls'],
                                   help='bounded classification of germs with given subindex and splitting degree')
    parser.add_argument('--mbar', metavar='MBAR', type=int, required=True, help='the subindex')
    parser.add_argument('--d', metavar='D', type=int, required=True, help='the splitting degree')
    parser.add_argument('--mode', choices=[m.value for m in Mode], default=Mode.STRICT.value,
                        help='strict uses iP >= 1 only; binomial uses the Jacobian lower bound')
    parser.add_argument('--cap', metavar='FACTOR', type=int,
                        help='order and pair cap factor of the candidate enumeration')
    parser.add_argument('--workers', metavar='N', type=int, help='number of worker processes')
    add_common_arguments(parser)
    parser.set_defaults(executor=execute)


def execute(args: argparse.Namespace) -> int:
    caps = search_caps(args, 'order,pair')
    report = classify(args.mbar, args.d, Mode(args.mode), caps)
    cases = match_theorem_patterns(report.survivors)
    results = survivor_report_to_dict(report)
    results['cases'] = {tag.value: len(germs) for tag, germs in cases.items()}
    passed = not report.unmatched and not report.inconclusive

    text = [f'classify mbar={args.mbar} d={args.d} mode={args.mode}: {report.candidate_count} candidate(s), '
            f'{len(report.survivors)} survivor(s), {len(report.excluded)} excluded, '
            f'{len(report.inconclusive)} inconclusive']
    for s in report.survivors:
        text.append(f'  survivor {s.germ}  wP = {s.report.wp}  iP {s.report.ip}  -> {s.theorem.value}')
    for e in report.excluded:
        cert = e.certificate
        text.append(f'  excluded {e.germ} at {cert.stage.value}: {cert.reason}')
    for e in report.inconclusive:
        text.append(f'  inconclusive {e.germ}: {e.certificate.reason}')
    doc = ReportDocument('classify', {'mbar': args.mbar, 'd': args.d, 'mode': args.mode, 'caps': caps.as_dict()},
                         results, passed, text)
    return emit(doc, args)
