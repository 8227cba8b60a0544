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
import logging
from dataclasses import dataclass
from typing import Optional, Sequence
import sympy
from sympy import Poly
from ..types import FamilyError
from .cyclotomic import EPS, CyclotomicField, Cyclotomic, FIBER_VARS, BASE_VARS, VARS
from .linalg import matmul, matpow, identity, rank


__all__ = ['Matrix', 'Action', 'EquivariantFamily', 'apply_action', 'action_order']


Matrix = tuple[tuple[Cyclotomic, ...], ...]


def _freeze(field: CyclotomicField, rows: Sequence[Sequence], size: int) -> Matrix:
    if len(rows) != size or any(len(r) != size for r in rows):
        raise FamilyError(f'Expected a {size}x{size} matrix, got {len(rows)} rows')
    return tuple(tuple(field.element(c) for c in r) for r in rows)


@dataclass(frozen=True)
class Action:
    r"""
    A linear action on ``P^3 x C^2``. Row ``i`` of :attr:`fiber` is the image of the ``i``-th
    projective coordinate: ``var_i -> sum_j fiber[i][j] * var_j``. Likewise :attr:`base` for ``u, v``.
    """
    field: CyclotomicField
    fiber: Matrix
    base: Matrix

    @staticmethod
    def from_rows(field: CyclotomicField, fiber: Sequence[Sequence], base: Sequence[Sequence]) -> Action:
        return Action(field, _freeze(field, fiber, 4), _freeze(field, base, 2))

    @staticmethod
    def diagonal(field: CyclotomicField, fiber: Sequence, base: Sequence) -> Action:
        return Action.from_rows(field,
                                [[c if i == j else 0 for j in range(4)] for i, c in enumerate(fiber)],
                                [[c if i == j else 0 for j in range(2)] for i, c in enumerate(base)])

    def compose(self, other: Action) -> Action:
        r"""
        The substitution ``self`` followed by ``other``, i.e. ``other(self(f))``.
        """
        if other.field != self.field:
            raise FamilyError('Actions over different fields')
        return Action(self.field,
                      tuple(map(tuple, matmul(self.fiber, other.fiber))),
                      tuple(map(tuple, matmul(self.base, other.base))))

    def power(self, k: int) -> Action:
        if k < 0:
            raise FamilyError(f'Negative power of an action: {k}')
        return Action(self.field, tuple(map(tuple, matpow(self.fiber, k))), tuple(map(tuple, matpow(self.base, k))))

    def is_identity(self) -> bool:
        return (self.fiber == tuple(map(tuple, identity(self.field, 4)))
                and self.base == tuple(map(tuple, identity(self.field, 2))))

    def is_invertible(self) -> bool:
        return rank(self.fiber) == 4 and rank(self.base) == 2

    def order(self, limit: Optional[int] = None) -> Optional[int]:
        r"""
        Least ``k >= 1`` with ``self^k`` the identity, searching up to ``limit`` (default ``n``).
        """
        limit = self.field.n if limit is None else limit
        cur = self
        for k in range(1, limit + 1):
            if cur.is_identity():
                return k
            cur = cur.compose(self)
        return None

    def substitution(self) -> dict[sympy.Symbol, sympy.Expr]:
        ret = {}
        for var, row in zip(FIBER_VARS, self.fiber):
            ret[var] = sympy.Add(*(c.as_expr() * w for c, w in zip(row, FIBER_VARS)))
        for var, row in zip(BASE_VARS, self.base):
            ret[var] = sympy.Add(*(c.as_expr() * w for c, w in zip(row, BASE_VARS)))
        return ret

    def __str__(self):
        images = self.substitution()
        return ', '.join(f'{var} -> {images[var]}' for var in VARS)


def apply_action(poly, action: Action) -> sympy.Expr:
    r"""
    Substitute the action into a polynomial in ``x, y, z, t, u, v`` and reduce over the field.
    """
    return action.field.reduce(sympy.sympify(poly).xreplace(action.substitution()))


@dataclass(frozen=True)
class EquivariantFamily:
    r"""
    A subvariety of ``P^3 x C^2`` cut out by :attr:`generators`, with a cyclic action of order :attr:`order`
    over the ``order``-th cyclotomic field.

    :ivar name: registry name or a file label.
    :ivar k: the family parameter, if any.
    """
    name: str
    order: int
    generators: tuple[sympy.Expr, ...]
    action: Action
    k: Optional[int] = None

    def __post_init__(self):
        if self.action.field.n != self.order:
            raise FamilyError(f'{self.name}: action is over Q(e_{self.action.field.n}), expected order {self.order}')
        if not self.generators:
            raise FamilyError(f'{self.name}: no generators')
        gens = tuple(self.action.field.reduce(g) for g in self.generators)
        object.__setattr__(self, 'generators', gens)
        for g in gens:
            if g == 0:
                raise FamilyError(f'{self.name}: zero generator')
            if sympy.sympify(g).free_symbols - set(VARS) - {EPS}:
                raise FamilyError(f'{self.name}: unknown variables in {g}')
            if not Poly(g, *FIBER_VARS).is_homogeneous:
                raise FamilyError(f'{self.name}: {g} is not homogeneous in x, y, z, t')
        if not self.action.is_invertible():
            raise FamilyError(f'{self.name}: action matrix is singular')
        got = self.action.order()
        if got is None or self.order % got != 0:
            raise FamilyError(f'{self.name}: action does not have order dividing {self.order}')

    @property
    def field(self) -> CyclotomicField:
        return self.action.field

    def central_fiber(self) -> tuple[sympy.Expr, ...]:
        r"""
        The generators restricted to ``u = v = 0``.
        """
        return tuple(self.field.reduce(g.xreplace({v: 0 for v in BASE_VARS})) for g in self.generators)

    def __str__(self):
        label = f'{self.name}(k={self.k})' if self.k is not None else self.name
        return f'{label}: Z/{self.order}, ' + '; '.join(f'{g} = 0' for g in self.generators)


def action_order(family: EquivariantFamily) -> int:
    r"""
    Least ``k`` with ``sigma^k`` the identity on ``P^3 x C^2`` coordinates.
    """
    ret = family.action.order()
    logging.getLogger(__name__).debug(f'{family.name}: action order {ret}')
    return ret
