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
from itertools import product
from typing import Iterator
from ..types import MonomialError


__all__ = ['Monomial', 'NUM_VARS']


NUM_VARS = 4
_TOKEN = re.compile(r'^x([1-4])(?:\^(\d+))?$')


@dataclass(frozen=True)
class Monomial:
    r"""
    A monomial ``x1^e1 * x2^e2 * x3^e3 * x4^e4`` in the chart coordinates of the canonical cover.

    Monomials are hashable and multiply by adding exponents.
    Weights and orders depend on a germ and are computed by :mod:`mcb.calculus.search`.
    """
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(self.exponents)
        if len(exps) != NUM_VARS:
            raise MonomialError(f'A monomial needs {NUM_VARS} exponents: {exps}')
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise MonomialError(f'Invalid exponent vector: {exps}')
        object.__setattr__(self, 'exponents', exps)

    @staticmethod
    def of(*exponents: int) -> Monomial:
        return Monomial(tuple(exponents))

    @staticmethod
    def unit() -> Monomial:
        return Monomial((0,) * NUM_VARS)

    @staticmethod
    def var(i: int) -> Monomial:
        r"""
        The coordinate ``x_i``, with ``i`` counted from 1.
        """
        if not 1 <= i <= NUM_VARS:
            raise MonomialError(f'No coordinate x{i}')
        return Monomial(tuple(int(j == i - 1) for j in range(NUM_VARS)))

    @staticmethod
    def parse(text: str) -> Monomial:
        r"""
        Parse ``x1^2*x3`` style text. ``1`` is the unit monomial.
        """
        text = text.replace(' ', '')
        if text == '1':
            return Monomial.unit()
        exps = [0] * NUM_VARS
        for tok in text.split('*'):
            mt = _TOKEN.match(tok)
            if mt is None:
                raise MonomialError(f'Cannot parse monomial: {text}')
            exps[int(mt.group(1)) - 1] += int(mt.group(2) or 1)
        return Monomial(tuple(exps))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_unit(self) -> bool:
        return self.degree == 0

    def involves_x4(self) -> bool:
        return self.exponents[3] > 0

    def ex4(self) -> tuple[int, int, int]:
        r"""
        The exponent vector in ``x1, x2, x3``. Rejects monomials involving ``x4``.
        """
        if self.involves_x4():
            raise MonomialError(f'{self} involves x4')
        return self.exponents[0], self.exponents[1], self.exponents[2]

    @property
    def lex_key(self) -> tuple[int, ...]:
        r"""
        Sort key of the lexicographic order with ``x1 > x2 > x3 > x4``:
        a larger exponent of an earlier variable sorts first.
        """
        return tuple(-e for e in self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, n: int) -> Monomial:
        if n < 0:
            raise MonomialError('Negative power of a monomial')
        return Monomial(tuple(e * n for e in self.exponents))

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise MonomialError(f'{other} does not divide {self}')
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def proper_divisors(self) -> Iterator[Monomial]:
        r"""
        All divisors other than the unit and the monomial itself.
        """
        for exps in product(*(range(e + 1) for e in self.exponents)):
            if 0 < sum(exps) < self.degree:
                yield Monomial(exps)

    def __str__(self):
        if self.is_unit():
            return '1'
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f'x{i + 1}')
            elif e > 1:
                parts.append(f'x{i + 1}^{e}')
        return '*'.join(parts)
