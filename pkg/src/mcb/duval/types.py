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
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Union
from ..types import TableError


__all__ = ['DuValKind', 'Smooth', 'DuValType', 'CyclicQuot', 'DualGraph', 'Surface', 'parse_surface']


class DuValKind(Enum):
    A = 'A'
    D = 'D'
    E = 'E'


@dataclass(frozen=True)
class Smooth:
    r"""
    The smooth surface germ.
    """
    def __str__(self):
        return 'smooth'


@dataclass(frozen=True)
class DuValType:
    r"""
    A DuVal (ADE) surface singularity. Subscripts: ``A_n`` with ``n >= 1``,
    ``D_n`` with ``n >= 4``, ``E_n`` with ``n`` in 6, 7, 8.
    """
    kind: DuValKind
    subscript: int

    def __post_init__(self):
        n = self.subscript
        if not isinstance(n, int) or isinstance(n, bool):
            raise TableError(f'Invalid subscript: {n!r}')
        if ((self.kind == DuValKind.A and n < 1) or (self.kind == DuValKind.D and n < 4)
                or (self.kind == DuValKind.E and n not in (6, 7, 8))):
            raise TableError(f'No DuVal singularity {self.kind.value}{n}')

    @staticmethod
    def A(n: int) -> DuValType:
        return DuValType(DuValKind.A, n)

    @staticmethod
    def D(n: int) -> DuValType:
        return DuValType(DuValKind.D, n)

    @staticmethod
    def E(n: int) -> DuValType:
        return DuValType(DuValKind.E, n)

    @staticmethod
    def parse(text: str) -> DuValType:
        mt = re.fullmatch(r'\s*([ADE])_?(\d+)\s*', text)
        if mt is None:
            raise TableError(f'Cannot parse DuVal type: {text}')
        return DuValType(DuValKind(mt.group(1)), int(mt.group(2)))

    def __str__(self):
        return f'{self.kind.value}{self.subscript}'


@dataclass(frozen=True)
class CyclicQuot:
    r"""
    The cyclic quotient singularity ``1/n(1, q)``, with ``0 < q < n`` and ``gcd(n, q) = 1``.
    """
    n: int
    q: int

    def __post_init__(self):
        if self.n < 2 or not 0 < self.q < self.n or gcd(self.n, self.q) != 1:
            raise TableError(f'Invalid cyclic quotient 1/{self.n}(1,{self.q})')

    def as_duval(self) -> Union[DuValType, CyclicQuot]:
        if self.q == self.n - 1:
            return DuValType.A(self.n - 1)
        return self

    def __str__(self):
        return f'1/{self.n}(1,{self.q})'


Surface = Union[Smooth, DuValType, CyclicQuot]


@dataclass(frozen=True)
class DualGraph:
    r"""
    The dual graph of a minimal resolution: vertex self-intersections and undirected edges.
    """
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if any(w > -2 for w in self.weights):
            raise TableError(f'Self-intersections must be at most -2: {self.weights}')

    @staticmethod
    def chain(weights) -> DualGraph:
        weights = tuple(weights)
        return DualGraph(weights, tuple((i, i + 1) for i in range(len(weights) - 1)))

    def is_chain(self) -> bool:
        return self.edges == tuple((i, i + 1) for i in range(len(self.weights) - 1))

    def degree(self, vertex: int) -> int:
        return sum(vertex in edge for edge in self.edges)

    def continued_fraction(self) -> Fraction:
        r"""
        Fold a chain back into ``n/q``.
        """
        if not self.is_chain():
            raise TableError('Only a chain has a continued fraction')
        from .hj import hj_fold
        return hj_fold([-w for w in self.weights])

    def __str__(self):
        if self.is_chain():
            return ' - '.join(str(w) for w in self.weights)
        return f'{list(self.weights)} edges {list(self.edges)}'


def parse_surface(text: str) -> Surface:
    r"""
    Parse ``smooth``, a DuVal type such as ``D5``, or a cyclic quotient ``1/n(1,q)``.

    :raises TableError: on anything else.
    """
    if text.strip().lower() == 'smooth':
        return Smooth()
    mt = re.fullmatch(r'\s*1/(\d+)\(1,\s*(\d+)\)\s*', text)
    if mt is not None:
        return CyclicQuot(int(mt.group(1)), int(mt.group(2)))
    return DuValType.parse(text)
