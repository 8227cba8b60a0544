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
from __future__ import annotations
from fractions import Fraction
from functools import lru_cache
from typing import Union
import sympy
from sympy import QQ, Poly, Symbol, cyclotomic_poly
from sympy.polys.domains import Domain
from ..types import FamilyError


__all__ = ['EPS', 'X', 'Y', 'Z', 'T', 'U', 'V', 'FIBER_VARS', 'BASE_VARS', 'VARS', 'CyclotomicField', 'Cyclotomic']


EPS = Symbol('e')
r"""The primitive root of unity generating the field."""

X, Y, Z, T, U, V = sympy.symbols('x y z t u v')
FIBER_VARS = (X, Y, Z, T)
BASE_VARS = (U, V)
VARS = FIBER_VARS + BASE_VARS

Scalar = Union['Cyclotomic', int, Fraction, sympy.Expr]


@lru_cache(maxsize=32)
def _number_field(n: int) -> tuple[Poly, Domain]:
    modulus = Poly(cyclotomic_poly(n, EPS), EPS, domain=QQ)
    if modulus.degree() == 1:
        return modulus, QQ
    return modulus, QQ.alg_field_from_poly(modulus)


class CyclotomicField:
    r"""
    ``Q(e)`` with ``e`` a primitive ``n``-th root of unity. Elements live in sympy's algebraic field
    domain over ``QQ`` defined by the ``n``-th cyclotomic polynomial (plain ``QQ`` for ``n <= 2``).
    Negative powers of ``e`` are read as ``e^(n-k)``.

    :ivar modulus: the cyclotomic polynomial in ``e``.
    :ivar domain: the sympy domain holding the elements.
    """
    n: int
    modulus: Poly
    domain: Domain

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise FamilyError(f'Invalid root of unity order: {n!r}')
        self.n = n
        self.modulus, self.domain = _number_field(n)

    @property
    def degree(self) -> int:
        return self.modulus.degree()

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.n == self.n

    def __hash__(self):
        return hash(('CyclotomicField', self.n))

    def __repr__(self):
        return f'CyclotomicField({self.n})'

    def _positive_powers(self, expr: sympy.Expr) -> sympy.Expr:
        n = self.n
        return expr.replace(lambda a: a.is_Pow and a.base == EPS and a.exp.is_Integer and a.exp.is_negative,
                            lambda a: EPS ** (int(a.exp) % n))

    def reduce_scalar(self, expr) -> sympy.Expr:
        expr = sympy.expand(self._positive_powers(sympy.sympify(expr)))
        if expr.free_symbols - {EPS}:
            raise FamilyError(f'Not a scalar of Q(e): {expr}')
        return Poly(expr, EPS, domain=QQ).rem(self.modulus).as_expr()

    def reduce(self, expr) -> sympy.Expr:
        r"""
        Reduce every coefficient of a polynomial in ``x, y, z, t, u, v`` modulo the cyclotomic polynomial.
        """
        expr = sympy.expand(self._positive_powers(sympy.sympify(expr)))
        if not expr.free_symbols & set(VARS):
            return self.reduce_scalar(expr)
        poly = Poly(expr, *VARS)
        terms = []
        for monom, coeff in poly.terms():
            coeff = self.reduce_scalar(coeff)
            if coeff != 0:
                terms.append(coeff * sympy.Mul(*(v ** k for v, k in zip(VARS, monom))))
        return sympy.expand(sympy.Add(*terms))

    def element(self, value: Scalar) -> Cyclotomic:
        if isinstance(value, Cyclotomic):
            if value.field != self:
                raise FamilyError(f'{value} is not in {self}')
            return value
        if isinstance(value, Fraction):
            value = sympy.Rational(value.numerator, value.denominator)
        poly = Poly(self.reduce_scalar(value), EPS, domain=QQ)
        coeffs = [QQ.from_sympy(c) for c in poly.all_coeffs()]
        if self.domain == QQ:
            return Cyclotomic(self, coeffs[-1])
        return Cyclotomic(self, self.domain(coeffs))

    def root(self, k: int = 1) -> Cyclotomic:
        return self.element(EPS ** (k % self.n))

    @property
    def zero(self) -> Cyclotomic:
        return Cyclotomic(self, self.domain.zero)

    @property
    def one(self) -> Cyclotomic:
        return Cyclotomic(self, self.domain.one)


class Cyclotomic:
    r"""
    An element of a :class:`CyclotomicField`. ``value`` is an element of the field's sympy domain,
    and all arithmetic is carried out by that domain.
    """
    __slots__ = ('field', 'value')
    field: CyclotomicField

    def __init__(self, field: CyclotomicField, value):
        self.field = field
        self.value = value

    def _other(self, other):
        return self.field.element(other).value

    def _new(self, value) -> Cyclotomic:
        return Cyclotomic(self.field, value)

    def __add__(self, other):
        return self._new(self.field.domain.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._new(self.field.domain.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return self._new(self.field.domain.sub(self._other(other), self.value))

    def __neg__(self):
        return self._new(self.field.domain.neg(self.value))

    def __mul__(self, other):
        return self._new(self.field.domain.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError('Inverse of zero in a cyclotomic field')
        dom = self.field.domain
        return self._new(dom.quo(dom.one, self.value))

    def __truediv__(self, other):
        return self * self.field.element(other).inverse()

    def __rtruediv__(self, other):
        return self.field.element(other) * self.inverse()

    def __pow__(self, k: int):
        base = self.inverse() if k < 0 else self
        return self._new(self.field.domain.pow(base.value, abs(k)))

    def is_zero(self) -> bool:
        return self.field.domain.is_zero(self.value)

    def coefficients(self) -> tuple[Fraction, ...]:
        r"""
        Coordinates in the basis ``1, e, ..., e^(phi(n)-1)``.
        """
        raw = [self.value] if self.field.domain == QQ else list(reversed(self.value.to_list()))
        coeffs = [Fraction(int(c.numerator), int(c.denominator)) for c in raw]
        return tuple(coeffs + [Fraction(0)] * (self.field.degree - len(coeffs)))

    def __eq__(self, other):
        if not isinstance(other, Cyclotomic):
            try:
                other = self.field.element(other)
            except (FamilyError, TypeError, sympy.SympifyError):
                return NotImplemented
        return self.field == other.field and self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash((self.field.n, self.coefficients()))

    def as_expr(self) -> sympy.Expr:
        return sympy.Add(*(sympy.Rational(c.numerator, c.denominator) * EPS ** i
                           for i, c in enumerate(self.coefficients()) if c))

    def __str__(self):
        return str(self.as_expr())

    def __repr__(self):
        return f'Cyclotomic({self.field.n}, {self.as_expr()})'
