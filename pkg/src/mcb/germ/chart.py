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
from math import gcd
from typing import Optional, Sequence
from ..types import GermStructureError, NoInvariantOfOrder
from ..calculus import Monomial, enumerate_by_weight, ord_of
from .model import NormalizedGerm, Series, Equation


__all__ = ['extend_to_chart', 'chart_invariant', 'is_cyclic_quotient']


def chart_invariant(germ: NormalizedGerm) -> Optional[Monomial]:
    r"""
    The first invariant monomial in ``x1, x2, x3`` of order exactly ``mbar``, if any.
    When it exists, the cover can be taken as ``psi0 - x4 = 0`` and the point is a cyclic quotient.
    """
    for mono in enumerate_by_weight(germ, 0, germ.mbar, include_x4=False):
        if ord_of(mono, germ) == germ.mbar:
            return mono
    return None


def is_cyclic_quotient(germ: NormalizedGerm) -> bool:
    return chart_invariant(germ) is not None


def _default_subindex(m: int, weights: Sequence[int], ords: Sequence[int]) -> int:
    for mbar in sorted((k for k in range(1, m + 1) if m % k == 0), reverse=True):
        if all((a - w) % mbar == 0 for w, a in zip(weights, ords)):
            return mbar
    return 1


def extend_to_chart(m: int, weights: Sequence[int], ords: Sequence[int],
                    mbar: Optional[int] = None) -> NormalizedGerm:
    r"""
    Extend a cyclic quotient ``1/m(w1, w2, w3)`` with orders ``(a1, a2, a3)`` along the curve
    to a four-coordinate chart: ``x4`` is the first invariant monomial of order ``mbar``
    and the cover equation is ``psi0 - x4``.

    :param m: the index.
    :param weights: three weights, coprime to ``m``.
    :param ords: three orders.
    :param mbar: the subindex. Defaults to the largest divisor of ``m`` compatible with the orders.
    :raises GermStructureError: malformed input.
    :raises NoInvariantOfOrder: no invariant monomial of order ``mbar`` exists.
    """
    if m < 1 or len(weights) != 3 or len(ords) != 3:
        raise GermStructureError('A cyclic quotient needs an index and three weights and orders')
    weights = [w % m for w in weights]
    for w in weights:
        if gcd(w, m) != 1:
            raise GermStructureError(f'Weight {w} is not coprime to {m}')
    if mbar is None:
        mbar = _default_subindex(m, weights, ords)
    if m % mbar != 0:
        raise GermStructureError(f'Subindex {mbar} does not divide {m}')
    germ = NormalizedGerm(mbar, m // mbar, Series.MAIN, tuple(weights) + (0,), tuple(ords) + (mbar,))
    psi0 = chart_invariant(germ)
    if psi0 is None:
        raise NoInvariantOfOrder(mbar)
    logging.getLogger(__name__).debug(f'1/{m}{tuple(weights)}: x4 = {psi0}')
    return germ.with_equation(Equation.binomial(psi0, 1))
