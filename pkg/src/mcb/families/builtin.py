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
from dataclasses import dataclass
from typing import Callable, Optional
from ..types import FamilyError
from .cyclotomic import EPS as e, X as x, Y as y, Z as z, T as t, U as u, V as v, CyclotomicField
from .family import Action, EquivariantFamily
from .fixed import Candidate


__all__ = ['FamilyInfo', 'FAMILIES', 'builtin_examples', 'family_names']


ORIGIN = (0, 0, 0, 1, 0, 0)


def _elliptic_a3(k: Optional[int]) -> EquivariantFamily:
    field = CyclotomicField(8)
    action = Action.from_rows(field,
                              [[0, 0, e ** -3, 0],
                               [e, e, e, 0],
                               [0, -e, 0, 0],
                               [0, 0, 0, 1]],
                              [[0, e ** -2],
                               [-e ** 2, 0]])
    return EquivariantFamily('elliptic-A3', 8, (x * y - u * t ** 2, (x + y + z) * z - v * t ** 2), action)


def _quotient_a1(k: Optional[int]) -> EquivariantFamily:
    field = CyclotomicField(4)
    action = Action.from_rows(field,
                              [[0, 1, 0, 0],
                               [-1, 0, 0, 0],
                               [0, 0, e, 0],
                               [0, 0, 0, 1]],
                              [[-1, 0], [0, -1]])
    gens = (x * y - u * t ** 2, z ** 2 - u * (x ** 2 + y ** 2) - v * t ** 2)
    return EquivariantFamily('quotient-A1', 4, gens, action)


def _cax4_family(k: Optional[int]) -> EquivariantFamily:
    field = CyclotomicField(4)
    action = Action.from_rows(field,
                              [[0, e, 0, 0],
                               [e, 0, 0, 0],
                               [0, 0, e, 0],
                               [0, 0, 0, 1]],
                              [[-1, 0], [0, -1]])
    gens = (x * y - (u ** (2 * k + 1) + v) * t ** 2, z ** 2 - u * (x ** 2 - y ** 2) - v * t ** 2)
    return EquivariantFamily('cAx4-family', 4, gens, action, k)


def _multiple_fiber(k: Optional[int]) -> EquivariantFamily:
    action = Action.diagonal(CyclotomicField(2), (-1, -1, -1, 1), (1, 1))
    gens = (x * y - z ** 2 - u * t ** 2, x ** 2 - u * y ** 2 - v * (z ** 2 + t ** 2))
    return EquivariantFamily('multiple-fiber', 2, gens, action)


def _two_nodes(k: Optional[int]) -> EquivariantFamily:
    action = Action.diagonal(CyclotomicField(2), (-1, -1, -1, 1), (1, 1))
    gens = (x ** 2 - u * z ** 2 - v * t ** 2, y ** 2 - u * t ** 2 - v * z ** 2)
    return EquivariantFamily('two-nodes', 2, gens, action)


@dataclass(frozen=True)
class FamilyInfo:
    r"""
    A built-in family with the checks the CLI runs on it.

    :ivar fiber_count: expected number of central fiber components.
    :ivar checks: pairs of a power of the generator and the candidates fixed by it.
    """
    build: Callable[[Optional[int]], EquivariantFamily]
    takes_k: bool
    fiber_count: int
    checks: tuple[tuple[int, tuple[Candidate, ...]], ...]
    summary: str


FAMILIES: dict[str, FamilyInfo] = {
    'elliptic-A3': FamilyInfo(_elliptic_a3, False, 4, ((1, (ORIGIN,)), (4, ('t=0', ORIGIN))),
                              'xy = ut^2, (x+y+z)z = vt^2 with Z/8'),
    'quotient-A1': FamilyInfo(_quotient_a1, False, 2, ((1, (ORIGIN,)),),
                              'xy = ut^2, z^2 = u(x^2+y^2) + vt^2 with Z/4'),
    'cAx4-family': FamilyInfo(_cax4_family, True, 2, ((1, (ORIGIN,)),),
                              'xy = (u^(2k+1)+v)t^2, z^2 = u(x^2-y^2) + vt^2 with Z/4'),
    'multiple-fiber': FamilyInfo(_multiple_fiber, False, 1, ((1, ('t=0', ORIGIN)),),
                                 'xy - z^2 = ut^2, x^2 = uy^2 + v(z^2+t^2) with Z/2'),
    'two-nodes': FamilyInfo(_two_nodes, False, 1, ((1, ('t=0', ORIGIN)),),
                            'x^2 = uz^2 + vt^2, y^2 = ut^2 + vz^2 with Z/2'),
}


def family_names() -> list[str]:
    return list(FAMILIES)


def builtin_examples(name: str, k: Optional[int] = None) -> EquivariantFamily:
    r"""
    Build a named family.

    :param k: the family parameter, defaults to 1 where the family has one.
    :raises FamilyError: for an unknown name, or a bad ``k``.
    """
    try:
        info = FAMILIES[name]
    except KeyError:
        raise FamilyError(f'Unknown family: {name} (known: {", ".join(FAMILIES)})') from None
    if not info.takes_k:
        if k is not None:
            raise FamilyError(f'{name} takes no parameter')
        return info.build(None)
    k = 1 if k is None else k
    if not isinstance(k, int) or k < 1:
        raise FamilyError(f'{name} needs k >= 1, got {k!r}')
    return info.build(k)
