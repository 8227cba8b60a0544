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
from __future__ import annotations
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Sequence
from ..types import TableError
from .types import DuValKind, Smooth, DuValType, CyclicQuot, DualGraph, Surface


__all__ = ['hj_expand', 'hj_fold', 'dual_graph', 'duval_graph', 'topological_index', 'IndexVerdict',
           'index_divisibility_check']


E_INDEX = {6: 24, 7: 48, 8: 120}


def hj_expand(n: int, q: int) -> list[int]:
    r"""
    The Hirzebruch-Jung continued fraction ``n/q = b1 - 1/(b2 - 1/(...))`` with every ``b_i >= 2``.
    """
    if not 0 < q < n or gcd(n, q) != 1:
        raise TableError(f'hj_expand needs coprime 0 < q < n, got ({n}, {q})')
    ret = []
    while q:
        b = -(-n // q)
        ret.append(b)
        n, q = q, b * q - n
    return ret


def hj_fold(bs: Sequence[int]) -> Fraction:
    if not bs:
        raise TableError('Empty continued fraction')
    val = Fraction(bs[-1])
    for b in reversed(bs[:-1]):
        val = b - 1 / val
    return val


def dual_graph(cq: CyclicQuot) -> DualGraph:
    return DualGraph.chain(-b for b in hj_expand(cq.n, cq.q))


def duval_graph(t: DuValType) -> DualGraph:
    r"""
    The ADE dual graph: all self-intersections -2. ``D_n`` forks at the third vertex from the end
    of its long arm; ``E_n`` branches at the third vertex.
    """
    n = t.subscript
    if t.kind == DuValKind.A:
        return DualGraph.chain([-2] * n)
    chain = DualGraph.chain([-2] * (n - 1))
    fork = n - 3 if t.kind == DuValKind.D else 2
    return DualGraph(tuple([-2] * n), chain.edges + ((fork, n - 1),))


def topological_index(s: Surface) -> int:
    r"""
    The order of the local fundamental group.
    """
    if isinstance(s, Smooth):
        return 1
    if isinstance(s, CyclicQuot):
        return s.n
    if s.kind == DuValKind.A:
        return s.subscript + 1
    if s.kind == DuValKind.D:
        return 4 * (s.subscript - 2)
    return E_INDEX[s.subscript]


class IndexVerdict(Enum):
    FAIL = 'fail'
    r"""The topological index is not divisible by the threefold index."""

    PASS = 'pass'
    r"""The threefold index divides the topological index."""

    PASS_FORCING_A = 'pass-forcing-A'
    r"""The indices agree; the surface is ``A_{m-1}`` and the threefold point is a cyclic quotient."""


def index_divisibility_check(m: int, surface: Surface) -> IndexVerdict:
    r"""
    A DuVal surface through a terminal point of index ``m`` has topological index divisible by ``m``;
    equality forces the surface to be ``A_{m-1}``.
    """
    if m < 2:
        raise ValueError(f'Index must be at least 2: {m}')
    n = topological_index(surface)
    if n % m != 0:
        return IndexVerdict.FAIL
    if n == m:
        if isinstance(surface, CyclicQuot):
            surface = surface.as_duval()
        if surface == DuValType.A(m - 1):
            return IndexVerdict.PASS_FORCING_A
        return IndexVerdict.FAIL
    return IndexVerdict.PASS
