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
import sympy
from sympy import Poly
from ..types import UnsupportedShape
from .cyclotomic import EPS, CyclotomicField, FIBER_VARS
from .family import EquivariantFamily
from .linalg import Vector, rank, rref, nullspace


__all__ = ['LinearComponent', 'FiberDecomposition', 'linear_factors', 'central_fiber_components']


@dataclass(frozen=True)
class LinearComponent:
    r"""
    A projective linear subspace of ``P^3`` cut out by :attr:`forms`, in reduced row echelon form.

    :ivar multiple: some defining factor appeared with exponent above one.
    """
    forms: tuple[sympy.Expr, ...]
    multiple: bool = False

    @property
    def dimension(self) -> int:
        return 3 - len(self.forms)

    def __str__(self):
        body = ', '.join(f'{f} = 0' for f in self.forms)
        return '{' + body + '}' + (' (multiple)' if self.multiple else '')


@dataclass(frozen=True)
class FiberDecomposition:
    r"""
    The central fiber ``u = v = 0`` as a union of pairwise distinct linear components.

    :ivar common_point: the point shared by all components, if they meet in exactly one point.
    """
    components: tuple[LinearComponent, ...]
    common_point: tuple[sympy.Expr, ...] | None
    notes: tuple[str, ...] = ()

    @property
    def count(self) -> int:
        return len(self.components)

    def __str__(self):
        lines = [f'{self.count} component(s)']
        lines.extend(f'  {c}' for c in self.components)
        if self.common_point is not None:
            lines.append(f'  meeting at ({":".join(str(c) for c in self.common_point)})')
        lines.extend(f'  note: {n}' for n in self.notes)
        return '\n'.join(lines)


def _fiber_degree(expr: sympy.Expr) -> int:
    return Poly(expr, *FIBER_VARS).total_degree()


def linear_factors(poly: sympy.Expr, field: CyclotomicField) -> list[tuple[sympy.Expr, int]]:
    r"""
    Split a form in ``x, y, z, t`` into linear factors with exponents, over ``Q(e)``.
    Factors are found over ``Q`` with ``e`` as a parameter, then over ``Q(i)`` when ``4 | n``.

    :raises UnsupportedShape: if a factor of degree two or more remains.
    """
    _, factors = sympy.factor_list(field.reduce(poly), *FIBER_VARS, EPS)
    ret = []
    for fac, exp in factors:
        deg = _fiber_degree(fac)
        if deg == 0:
            continue
        if deg == 1:
            ret.append((fac, exp))
            continue
        if fac.free_symbols & {EPS} or field.n % 4 != 0:
            raise UnsupportedShape(str(poly))
        _, gaussian = sympy.factor_list(fac, *FIBER_VARS, gaussian=True)
        for sub, sub_exp in gaussian:
            sub = sub.xreplace({sympy.I: EPS ** (field.n // 4)})
            sub_deg = _fiber_degree(sub)
            if sub_deg == 0:
                continue
            if sub_deg != 1:
                raise UnsupportedShape(str(poly))
            ret.append((sub, exp * sub_exp))
    return ret


def _vector(form: sympy.Expr, field: CyclotomicField) -> Vector:
    poly = Poly(field.reduce(form), *FIBER_VARS)
    return [field.element(poly.coeff_monomial(v)) for v in FIBER_VARS]


def _form(vec: Vector) -> sympy.Expr:
    return sympy.Add(*(c.as_expr() * v for c, v in zip(vec, FIBER_VARS)))


def _substitute(poly: sympy.Expr, red: list[Vector], pivots: list[int], field: CyclotomicField) -> sympy.Expr:
    # Eliminate each pivot variable using its normalized form.
    subs = {}
    for row, pc in zip(red, pivots):
        var = FIBER_VARS[pc]
        subs[var] = var - _form(row)
    return field.reduce(sympy.expand(poly.xreplace(subs))) if subs else field.reduce(poly)


def _split(pending: list[sympy.Expr], forms: list[Vector], multiple: bool,
           field: CyclotomicField, out: list[tuple[list[Vector], bool]]):
    red, pivots = rref(forms)
    if len(pivots) >= 4:
        return
    current = [g for g in (_substitute(g, red, pivots, field) for g in pending) if g != 0]
    if not current:
        out.append((red, multiple))
        return
    for idx, g in enumerate(current):
        try:
            factors = linear_factors(g, field)
        except UnsupportedShape:
            continue
        rest = current[:idx] + current[idx + 1:]
        for fac, exp in factors:
            _split(rest, red + [_vector(fac, field)], multiple or exp > 1, field, out)
        return
    raise UnsupportedShape(str(current[0]))


def _same(a: list[Vector], b: list[Vector]) -> bool:
    return rank(a) == rank(b) == rank(a + b)


def _contains(big: list[Vector], small: list[Vector]) -> bool:
    # V(big) contains V(small) iff big's forms lie in the span of small's.
    return rank(small + big) == rank(small)


def central_fiber_components(family: EquivariantFamily) -> FiberDecomposition:
    r"""
    Decompose the fiber over ``u = v = 0`` into linear components, when every specialized generator
    splits into linear forms after the earlier ones are imposed.

    :raises UnsupportedShape: if an irreducible factor of degree two or more blocks the splitting.
    """
    field = family.field
    pending = [g for g in family.central_fiber() if g != 0]
    raw: list[tuple[list[Vector], bool]] = []
    _split(pending, [], False, field, raw)

    merged: list[tuple[list[Vector], bool]] = []
    for forms, multiple in raw:
        for i, (other, other_mult) in enumerate(merged):
            if _same(forms, other):
                merged[i] = (other, other_mult or multiple)
                break
        else:
            merged.append((forms, multiple))
    maximal = [(f, m) for f, m in merged
               if not any(_contains(g, f) and not _same(g, f) for g, _ in merged)]

    components = tuple(LinearComponent(tuple(_form(v) for v in f), m) for f, m in maximal)
    common = None
    notes = []
    if maximal:
        union = [v for f, _ in maximal for v in f]
        pts = nullspace(union, field, 4)
        if len(pts) == 1:
            common = tuple(c.as_expr() for c in pts[0])
    if any(c.multiple for c in components):
        notes.append('fiber is non-reduced along the components marked multiple')
    if any(c.dimension != 1 for c in components):
        notes.append('some components are not lines')
    logging.getLogger(__name__).debug(f'{family.name}: {len(components)} central fiber component(s)')
    return FiberDecomposition(components, common, tuple(notes))