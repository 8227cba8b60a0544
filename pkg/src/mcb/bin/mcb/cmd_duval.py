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
from fractions import Fraction
from typing import Any
from ...types import TableError
from ...duval import Smooth, DuValType, CyclicQuot, Surface, DualGraph, CoverClass, parse_surface, \
    hj_expand, dual_graph, duval_graph, topological_index, index_divisibility_check, IndexVerdict, \
    canonical_cover_row, catanese_rows
from ...report import ReportDocument, rational
from .utils import add_common_arguments, emit


def add_parser(subparsers):
    parser = subparsers.add_parser('duval', aliases=['dv'],
                                   help='resolution graphs and tables of surface singularities')
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--cyclic', metavar=('N', 'Q'), nargs=2, type=int,
                       help='Hirzebruch-Jung chain of 1/N(1,Q)')
    group.add_argument('--duval', metavar='TYPE', help='dual graph of a DuVal point, e.g. D5')
    group.add_argument('--catanese', metavar='K', type=int, help='the involution table at parameter K')
    group.add_argument('--cover', metavar='ARG', nargs='+',
                       help='a cover table row: CLASS [K] [M], e.g. "cA/m 2 4" or "cAx/4 2"')
    group.add_argument('--index', metavar=('M', 'SURFACE'), nargs=2,
                       help='topological index divisibility of SURFACE through a point of index M')
    add_common_arguments(parser)
    parser.set_defaults(executor=execute)


def graph_to_dict(graph: DualGraph) -> dict[str, Any]:
    return {'weights': list(graph.weights), 'edges': [list(e) for e in graph.edges]}


def surface_graph(surface: Surface) -> Any:
    if isinstance(surface, Smooth):
        return None
    if isinstance(surface, CyclicQuot):
        surface = surface.as_duval()
    if isinstance(surface, CyclicQuot):
        return graph_to_dict(dual_graph(surface))
    return graph_to_dict(duval_graph(surface))


def _cyclic(n: int, q: int) -> tuple[dict, list[str], bool]:
    cq = CyclicQuot(n, q)
    bs = hj_expand(n, q)
    graph = dual_graph(cq)
    folded = graph.continued_fraction()
    ok = folded == Fraction(n, q)
    results = {'surface': str(cq.as_duval()), 'hj': bs, 'chain': list(graph.weights),
               'fold': rational(folded), 'topological-index': topological_index(cq)}
    return results, [f'{cq} = {cq.as_duval()}: [{", ".join(str(b) for b in bs)}]', f'  chain {graph}'], ok


def _duval(text: str) -> tuple[dict, list[str], bool]:
    t = DuValType.parse(text)
    graph = duval_graph(t)
    results = {'surface': str(t), 'graph': graph_to_dict(graph), 'topological-index': topological_index(t)}
    return results, [f'{t}: {graph}', f'  topological index {topological_index(t)}'], True


def _catanese(k: int) -> tuple[list, list[str], bool]:
    results = []
    text = []
    for row in catanese_rows(k):
        results.append({'row': row.row, 'elephant': None if row.elephant is None else str(row.elephant),
                        'quotient': str(row.quotient), 'graph': surface_graph(row.quotient)})
        text.append(str(row))
    return results, text, True


def _cover(items: list[str]) -> tuple[dict, list[str], bool]:
    if len(items) > 3:
        raise TableError(f'--cover takes CLASS [K] [M], got {items}')
    try:
        cls = CoverClass(items[0])
        nums = [int(v) for v in items[1:]]
    except ValueError:
        raise TableError(f'Invalid cover row: {" ".join(items)}') from None
    row = canonical_cover_row(cls, *nums)
    results = {'class': cls.value, 'k': row.k, 'cover': str(row.cover), 'base': str(row.base),
               'degree': row.degree}
    return results, [str(row)], True


def _index(m_text: str, surface_text: str) -> tuple[dict, list[str], bool]:
    try:
        m = int(m_text)
    except ValueError:
        raise TableError(f'Index must be an integer: {m_text}') from None
    surface = parse_surface(surface_text)
    verdict = index_divisibility_check(m, surface)
    results = {'m': m, 'surface': str(surface), 'topological-index': topological_index(surface),
               'verdict': verdict.value}
    return results, [f'index {m}, {surface}: {verdict.value}'], verdict != IndexVerdict.FAIL


def execute(args: argparse.Namespace) -> int:
    if args.cyclic is not None:
        inputs = {'cyclic': args.cyclic}
        results, text, passed = _cyclic(*args.cyclic)
    elif args.duval is not None:
        inputs = {'duval': args.duval}
        results, text, passed = _duval(args.duval)
    elif args.catanese is not None:
        inputs = {'catanese': args.catanese}
        results, text, passed = _catanese(args.catanese)
    elif args.cover is not None:
        inputs = {'cover': args.cover}
        results, text, passed = _cover(args.cover)
    else:
        inputs = {'index': args.index}
        results, text, passed = _index(*args.index)
    return emit(ReportDocument('duval', inputs, results, passed, text), args)
