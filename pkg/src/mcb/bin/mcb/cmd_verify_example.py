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
from typing import Any, Optional
from ...types import UnsupportedShape
from ...families import EquivariantFamily, FAMILIES, builtin_examples, load_family, action_order, \
    check_ideal_equivariance, central_fiber_components, fixed_points_check, FiberDecomposition, \
    EquivarianceReport, FixedLocusReport
from ...report import ReportDocument
from .utils import add_common_arguments, emit


ORIGIN = '0,0,0,1;0,0'


def add_parser(subparsers):
    parser = subparsers.add_parser('verify-example', aliases=['ve'],
                                   help='check equivariance, the central fiber and fixed points of a family')
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--family', metavar='NAME', choices=list(FAMILIES),
                       help=f'a built-in family: {", ".join(FAMILIES)}')
    group.add_argument('--file', metavar='PATH', help='a family in the text format')
    parser.add_argument('-k', metavar='K', type=int, help='the family parameter, where the family has one')
    parser.add_argument('--power', metavar='N', type=int,
                        help='check fixed points of the N-th power of the generator')
    parser.add_argument('--point', metavar='POINT', action='append',
                        help='a candidate "x,y,z,t;u,v" or a hyperplane "t=0"; may be repeated')
    add_common_arguments(parser)
    parser.set_defaults(executor=execute)


def _equivariance(rep: EquivarianceReport) -> dict[str, Any]:
    return {'equivariant': rep.equivariant,
            'matrix': None if rep.matrix is None else [[str(c) for c in row] for row in rep.matrix],
            'residuals': [str(r) for r in rep.residuals], 'order-ok': rep.matrix_order_ok()}


def _fiber(dec: FiberDecomposition, expected: Optional[int]) -> dict[str, Any]:
    return {'count': dec.count, 'expected': expected,
            'components': [{'forms': [str(f) for f in c.forms], 'multiple': c.multiple} for c in dec.components],
            'common-point': None if dec.common_point is None else [str(c) for c in dec.common_point],
            'notes': list(dec.notes)}


def _fixed(rep: FixedLocusReport) -> dict[str, Any]:
    return {'power': rep.power, 'base-identity': rep.base_identity, 'passed': rep.passed,
            'candidates': [{'candidate': r.candidate, 'fixed': r.fixed, 'on-family': r.on_family,
                            'jacobian-rank': r.jacobian_rank, 'smooth': r.smooth, 'detail': r.detail}
                           for r in rep.results],
            'eigenspaces': [{'exponent': e.exponent, 'basis': [[str(c) for c in v] for v in e.basis]}
                            for e in rep.eigenspaces]}


def execute(args: argparse.Namespace) -> int:
    if args.family is not None:
        family: EquivariantFamily = builtin_examples(args.family, args.k)
        info = FAMILIES[args.family]
        expected, checks = info.fiber_count, info.checks
    else:
        family = load_family(args.file)
        expected, checks = None, ((1, (ORIGIN,)),)
    if args.power is not None or args.point:
        checks = ((args.power or 1, tuple(args.point or (ORIGIN,))),)

    order = action_order(family)
    equiv = check_ideal_equivariance(family)
    text = [str(family), f'action order {order}', str(equiv)]
    passed = equiv.equivariant and bool(equiv.matrix_order_ok())

    try:
        fiber = central_fiber_components(family)
        fiber_result = _fiber(fiber, expected)
        text.append(f'central fiber: {fiber}')
        if expected is not None and fiber.count != expected:
            text.append(f'  expected {expected} component(s)')
            passed = False
    except UnsupportedShape as e:
        logging.getLogger(__name__).info(f'{family.name}: central fiber not split: {e}')
        fiber_result = {'error': f'unsupported shape: {e}'}
        text.append(f'central fiber: unsupported shape {e}')
        passed = False

    fixed_results = []
    for power, candidates in checks:
        rep = fixed_points_check(family, candidates, power)
        fixed_results.append(_fixed(rep))
        text.append(str(rep))
        passed = passed and rep.passed

    results = {'family': family.name, 'order': family.order, 'action-order': order,
               'generators': [str(g) for g in family.generators], 'equivariance': _equivariance(equiv),
               'fiber': fiber_result, 'fixed': fixed_results}
    inputs = {'family': args.family, 'file': args.file, 'k': args.k, 'power': args.power, 'point': args.point}
    return emit(ReportDocument('verify-example', inputs, results, passed, text), args)
