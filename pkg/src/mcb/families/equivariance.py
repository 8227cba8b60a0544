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
from typing import Optional
import sympy
from sympy import Poly
from .cyclotomic import Cyclotomic, CyclotomicField, VARS
from .family import EquivariantFamily, Matrix, apply_action
from .linalg import solve, matpow, identity, rank, rref, reduce_against


__all__ = ['EquivarianceReport', 'coefficient_map', 'check_ideal_equivariance']


@dataclass(frozen=True)
class EquivarianceReport:
    r"""
    Result of :any:`check_ideal_equivariance`.

    :ivar matrix: ``c`` with ``sigma(g_i) = sum_j c[i][j] g_j``, or ``None`` if some row has no solution.
    :ivar residuals: per generator, ``sigma(g_i)`` minus its best combination; zero when solvable.
    :ivar images: ``sigma(g_i)`` for each generator.
    """
    family: EquivariantFamily
    matrix: Optional[Matrix]
    residuals: tuple[sympy.Expr, ...]
    images: tuple[sympy.Expr, ...]

    @property
    def equivariant(self) -> bool:
        return self.matrix is not None

    def matrix_order_ok(self) -> Optional[bool]:
        r"""
        Whether the scalar matrix is invertible with ``c^order`` the identity.
        """
        if self.matrix is None:
            return None
        field = self.family.field
        size = len(self.matrix)
        if rank(self.matrix) != size:
            return False
        return matpow(self.matrix, self.family.order) == identity(field, size)

    def __str__(self):
        if self.matrix is None:
            return '\n'.join(f'sigma(g{i + 1}) not in span: residual {r}' for i, r in enumerate(self.residuals))
        lines = []
        for i, row in enumerate(self.matrix):
            terms = [f'({c})*g{j + 1}' for j, c in enumerate(row) if not c.is_zero()]
            lines.append(f'sigma(g{i + 1}) = ' + (' + '.join(terms) if terms else '0'))
        return '\n'.join(lines)


def coefficient_map(poly: sympy.Expr, field: CyclotomicField) -> dict[tuple[int, ...], Cyclotomic]:
    r"""
    Monomial exponent vector in ``x, y, z, t, u, v`` to its coefficient in the field.
    """
    poly = field.reduce(poly)
    if poly == 0:
        return {}
    return {monom: field.element(coeff) for monom, coeff in Poly(poly, *VARS).terms()}


def check_ideal_equivariance(family: EquivariantFamily) -> EquivarianceReport:
    r"""
    Solve ``sigma(g_i) = sum_j c_ij g_j`` for constants ``c_ij`` by matching monomial coefficients.
    A failure means the generators are not stable under the action, which is weaker than the
    variety being non-invariant.
    """
    field = family.field
    gens = family.generators
    images = tuple(apply_action(g, family.action) for g in gens)
    gen_maps = [coefficient_map(g, field) for g in gens]
    img_maps = [coefficient_map(g, field) for g in images]
    monoms = sorted(set().union(*gen_maps, *img_maps))
    columns = [[m.get(mono, field.zero) for mono in monoms] for m in gen_maps]
    rows = []
    residuals = []
    for img, img_map in zip(images, img_maps):
        sol = solve(columns, [img_map.get(mono, field.zero) for mono in monoms], field)
        if sol is None:
            rows = None
            residuals.append(_residual(img, gens, field))
            continue
        residuals.append(sympy.Integer(0))
        if rows is not None:
            rows.append(tuple(sol))
    if rows is None:
        logging.getLogger(__name__).info(f'{family.name}: generators are not stable under the action')
        return EquivarianceReport(family, None, tuple(residuals), images)
    return EquivarianceReport(family, tuple(rows), tuple(residuals), images)


def _residual(img: sympy.Expr, gens: tuple[sympy.Expr, ...], field: CyclotomicField) -> sympy.Expr:
    gen_maps = [coefficient_map(g, field) for g in gens]
    img_map = coefficient_map(img, field)
    monoms = sorted(set().union(*gen_maps, img_map))
    red, pivots = rref([[m.get(mono, field.zero) for mono in monoms] for m in gen_maps])
    rem = reduce_against(red, pivots, [img_map.get(mono, field.zero) for mono in monoms])
    return field.reduce(sympy.Add(*(c.as_expr() * sympy.Mul(*(v ** k for v, k in zip(VARS, mono)))
                                    for c, mono in zip(rem, monoms) if not c.is_zero())))
