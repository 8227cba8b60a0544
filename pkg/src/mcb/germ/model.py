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
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Union
from ..types import GermStructureError
from ..calculus import Monomial, Residue, Binomial


__all__ = ['Series', 'EquationKind', 'Equation', 'NormalizedGerm']


class Series(Enum):
    r"""
    The two series of terminal points with a curve through them.
    """

    MAIN = 'main'
    r"""Weights ``(a, -a, b, 0) mod m``."""

    EXCEPTIONAL = 'exceptional'
    r"""``m = 4`` and weights ``(a, -a, b, 2) mod 4``."""


class EquationKind(Enum):
    CYCLIC_BINOMIAL = 'cyclic-binomial'
    r"""The cover is ``psi0 - x4^n = 0``; the point is a cyclic quotient."""

    GENERAL = 'general-hypersurface'
    r"""An unspecified hypersurface equation."""

    SMOOTH = 'smooth-marker'
    r"""The point is smooth; all invariants are trivial."""


@dataclass(frozen=True)
class Equation:
    kind: EquationKind
    psi0: Optional[Monomial] = None
    n: int = 0

    @staticmethod
    def binomial(psi0: Monomial, n: int = 1) -> Equation:
        if psi0.involves_x4():
            raise GermStructureError(f'Binomial term {psi0} involves x4')
        if n < 1:
            raise GermStructureError(f'Binomial power must be positive: {n}')
        return Equation(EquationKind.CYCLIC_BINOMIAL, psi0, n)

    @staticmethod
    def general() -> Equation:
        return Equation(EquationKind.GENERAL)

    @staticmethod
    def smooth() -> Equation:
        return Equation(EquationKind.SMOOTH)

    @property
    def generator(self) -> Binomial:
        if self.kind != EquationKind.CYCLIC_BINOMIAL:
            raise GermStructureError(f'{self.kind.value} equation has no binomial generator')
        return Binomial(self.psi0, self.n)

    def swapped(self) -> Equation:
        if self.psi0 is None:
            return self
        e = self.psi0.exponents
        return Equation(self.kind, Monomial((e[1], e[0], e[2], e[3])), self.n)

    def __str__(self):
        if self.kind == EquationKind.CYCLIC_BINOMIAL:
            return str(self.generator)
        return self.kind.value


@dataclass(frozen=True)
class NormalizedGerm:
    r"""
    The local datum of a terminal point ``P`` on a curve ``C``:
    subindex ``mbar``, splitting degree ``d`` (index ``m = mbar * d``),
    the weights of ``x1..x4`` modulo ``m``, their orders of vanishing on the curve in t-units,
    and the equation of the canonical cover.

    Only the shape is checked on construction; the normalization axioms are checked by
    :func:`mcb.germ.validate`.

    :ivar mbar: the subindex.
    :ivar d: the splitting degree.
    :ivar series: the series.
    :ivar weights: weights of ``x1..x4`` as residues mod ``m``. Integers are accepted and reduced.
    :ivar ords: orders ``a1..a4``.
    :ivar equation: the equation of the canonical cover.
    """
    mbar: int
    d: int
    series: Series
    weights: tuple[Residue, ...]
    ords: tuple[int, ...]
    equation: Equation = Equation.general()

    def __post_init__(self):
        for name in ('mbar', 'd'):
            val = getattr(self, name)
            if not isinstance(val, int) or isinstance(val, bool) or val < 1:
                raise GermStructureError(f'{name} must be a positive integer: {val!r}')
        if not isinstance(self.series, Series):
            raise GermStructureError(f'Unknown series: {self.series!r}')
        m = self.mbar * self.d
        weights = tuple(self.weights)
        ords = tuple(self.ords)
        if len(weights) != 4 or len(ords) != 4:
            raise GermStructureError('A germ needs exactly four weights and four orders')
        normed = []
        for w in weights:
            if isinstance(w, Residue):
                if w.modulus != m:
                    raise GermStructureError(f'Weight {w} is not taken mod m = {m}')
                normed.append(w)
            elif isinstance(w, int) and not isinstance(w, bool):
                normed.append(Residue.of(w, m))
            else:
                raise GermStructureError(f'Invalid weight: {w!r}')
        for a in ords:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise GermStructureError(f'Orders must be positive integers: {ords}')
        if not isinstance(self.equation, Equation):
            raise GermStructureError(f'Invalid equation: {self.equation!r}')
        object.__setattr__(self, 'weights', tuple(normed))
        object.__setattr__(self, 'ords', ords)

    @staticmethod
    def main(mbar: int, d: int, weights: Sequence[int], ords: Sequence[int],
             equation: Optional[Equation] = None) -> NormalizedGerm:
        return NormalizedGerm(mbar, d, Series.MAIN, tuple(weights), tuple(ords),
                              equation if equation is not None else Equation.general())

    @staticmethod
    def smooth_point() -> NormalizedGerm:
        return NormalizedGerm(1, 1, Series.MAIN, (0, 0, 0, 0), (1, 1, 1, 1), Equation.smooth())

    @property
    def m(self) -> int:
        return self.mbar * self.d

    @property
    def anticanonical(self) -> Fraction:
        r"""
        ``(-K_X . C) = 1/mbar``.
        """
        return Fraction(1, self.mbar)

    @property
    def weight_values(self) -> tuple[int, ...]:
        return tuple(w.value for w in self.weights)

    @property
    def is_smooth(self) -> bool:
        return self.equation.kind == EquationKind.SMOOTH

    @property
    def is_cyclic_binomial(self) -> bool:
        return self.equation.kind == EquationKind.CYCLIC_BINOMIAL

    def with_orders(self, ords: Sequence[int]) -> NormalizedGerm:
        return replace(self, ords=tuple(ords))

    def with_weights(self, weights: Sequence[Union[int, Residue]]) -> NormalizedGerm:
        return replace(self, weights=tuple(weights))

    def with_equation(self, equation: Equation) -> NormalizedGerm:
        return replace(self, equation=equation)

    def swapped(self) -> NormalizedGerm:
        r"""
        Exchange ``x1`` and ``x2``.
        """
        w, a = self.weights, self.ords
        return NormalizedGerm(self.mbar, self.d, self.series, (w[1], w[0], w[2], w[3]),
                              (a[1], a[0], a[2], a[3]), self.equation.swapped())

    def __str__(self):
        w = ','.join(str(v) for v in self.weight_values)
        a = ','.join(str(v) for v in self.ords)
        return f'1/{self.m}({w}) ord({a}) mbar={self.mbar} d={self.d} [{self.series.value}; {self.equation}]'
