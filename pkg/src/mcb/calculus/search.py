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
from functools import lru_cache
from typing import NamedTuple, Optional, Union, TYPE_CHECKING
from ..types import MonomialError, ResidueMismatch
from .monomial import Monomial, NUM_VARS
from .residue import Residue
if TYPE_CHECKING:
    from ..germ.model import NormalizedGerm


__all__ = ['weight_of', 'ord_of', 'order_key', 'enumerate_by_weight', 'min_ord_of_weight', 'WeightMinimum',
           'is_simple_invariant', 'Binomial', 'vanishes_on_curve', 'invariant_monomials']


def weight_of(mono: Monomial, germ: NormalizedGerm) -> Residue:
    return Residue.of(sum(e * w.value for e, w in zip(mono.exponents, germ.weights)), germ.m)


def ord_of(mono: Monomial, germ: NormalizedGerm) -> int:
    return sum(e * a for e, a in zip(mono.exponents, germ.ords))


def order_key(mono: Monomial, germ: NormalizedGerm) -> tuple:
    return (ord_of(mono, germ),) + mono.lex_key


@lru_cache(maxsize=4096)
def _monomials_upto(ords: tuple[int, ...], cap: int) -> tuple[tuple[int, ...], ...]:
    # All exponent vectors with sum(e_i * ords_i) <= cap, the zero vector included
    if not ords:
        return ((),)
    head, rest = ords[0], ords[1:]
    ret = []
    for e in range(cap // head + 1):
        for tail in _monomials_upto(rest, cap - e * head):
            ret.append((e,) + tail)
    return tuple(ret)


def _target(germ: NormalizedGerm, target: Union[Residue, int]) -> int:
    if isinstance(target, Residue):
        if target.modulus != germ.m:
            raise ResidueMismatch(target.modulus, germ.m)
        return target.value
    return target % germ.m


def enumerate_by_weight(germ: NormalizedGerm, target: Union[Residue, int], ord_cap: int,
                        include_x4: bool = True, include_unit: bool = False) -> list[Monomial]:
    r"""
    All monomials of weight ``target`` and order at most ``ord_cap``,
    sorted by order and then lexicographically (``x1 > x2 > x3 > x4``).

    :param germ: the germ providing weights and orders.
    :param target: the weight class.
    :param ord_cap: the largest order to consider, in t-units.
    :param include_x4: if ``False``, only monomials in ``x1, x2, x3`` are listed.
    :param include_unit: if ``True``, the unit monomial is listed when ``target`` is 0.
    :return: the sorted, duplicate-free list.
    """
    if ord_cap < 0:
        return []
    tgt = _target(germ, target)
    nvars = NUM_VARS if include_x4 else NUM_VARS - 1
    ords = tuple(germ.ords[:nvars])
    weights = [w.value for w in germ.weights[:nvars]]
    m = germ.m
    ret = []
    for exps in _monomials_upto(ords, ord_cap):
        if not include_unit and not any(exps):
            continue
        if sum(e * w for e, w in zip(exps, weights)) % m == tgt:
            ret.append(Monomial(exps + (0,) * (NUM_VARS - nvars)))
    ret.sort(key=lambda mono: order_key(mono, germ))
    return ret


class WeightMinimum(NamedTuple):
    order: int
    witness: Monomial


def min_ord_of_weight(germ: NormalizedGerm, target: Union[Residue, int], ord_cap: int,
                      include_x4: bool = True) -> Optional[WeightMinimum]:
    r"""
    The least order of a non-unit monomial of weight ``target``, with its witness.

    :return: the minimum, or ``None`` if no such monomial has order at most ``ord_cap``.
    """
    found = enumerate_by_weight(germ, target, ord_cap, include_x4=include_x4)
    if not found:
        logging.getLogger(__name__).debug(f'No monomial of weight {target} below order {ord_cap}')
        return None
    return WeightMinimum(ord_of(found[0], germ), found[0])


def is_simple_invariant(mono: Monomial, germ: NormalizedGerm) -> bool:
    r"""
    Whether an invariant monomial is not a product of two non-constant invariant monomials.

    :raises MonomialError: ``mono`` is not invariant.
    """
    if not weight_of(mono, germ).is_zero():
        raise MonomialError(f'{mono} is not invariant')
    if mono.is_unit():
        return False
    return not any(weight_of(div, germ).is_zero() for div in mono.proper_divisors())


class Binomial(NamedTuple):
    r"""
    The binomial ``psi - x4^n``.
    """
    psi: Monomial
    n: int

    def __str__(self):
        if self.n == 0:
            return f'{self.psi} - 1'
        return f'{self.psi} - x4' + (f'^{self.n}' if self.n > 1 else '')


def vanishes_on_curve(binomial: Binomial, germ: NormalizedGerm) -> bool:
    r"""
    Whether ``psi - x4^n`` vanishes on every component of the curve
    ``x_i = chi(g)^wt(x_i) t^ord(x_i)``: the orders and the phases must both match.

    :raises MonomialError: ``psi`` involves ``x4``.
    """
    psi, n = binomial
    if psi.involves_x4():
        raise MonomialError(f'{psi} involves x4')
    x4n = Monomial.var(4) ** n
    return ord_of(psi, germ) == ord_of(x4n, germ) and weight_of(psi, germ) == weight_of(x4n, germ)


def invariant_monomials(germ: NormalizedGerm, ord_cap: int) -> list[Monomial]:
    return enumerate_by_weight(germ, 0, ord_cap, include_x4=False)
