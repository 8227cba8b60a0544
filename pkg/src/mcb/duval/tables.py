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
from enum import Enum
from typing import Optional, Union
from ..types import TableError
from .types import DuValKind, Smooth, DuValType, CyclicQuot, Surface


__all__ = ['CoverClass', 'CoverRow', 'canonical_cover_row', 'cover_rows_with_base',
           'CataneseRow', 'catanese_quotient', 'catanese_rows', 'CATANESE_ROWS']


class CoverClass(Enum):
    r"""
    Types of terminal threefold points, by the general elephant of the point and of its canonical cover.
    """
    CA = 'cA/m'
    CAX2 = 'cAx/2'
    CD2 = 'cD/2'
    CD3 = 'cD/3'
    CE2 = 'cE/2'
    CAX4 = 'cAx/4'

    @property
    def degree(self) -> Optional[int]:
        r"""
        The index of the point, ``None`` for ``cA/m`` where it is a parameter.
        """
        return {CoverClass.CA: None, CoverClass.CAX2: 2, CoverClass.CD2: 2, CoverClass.CD3: 3,
                CoverClass.CE2: 2, CoverClass.CAX4: 4}[self]


@dataclass(frozen=True)
class CoverRow:
    r"""
    The elephant ``base`` of a point of class ``cls`` and index ``degree`` is the quotient
    of the elephant ``cover`` of the canonical cover.
    """
    cls: CoverClass
    k: Optional[int]
    cover: Surface
    base: DuValType
    degree: int

    def __str__(self):
        return f'{self.cls.value}: {self.cover} -> {self.base} (degree {self.degree})'


def _a(n: int) -> Union[Smooth, DuValType]:
    return Smooth() if n == 0 else DuValType.A(n)


def canonical_cover_row(cls: CoverClass, k: Optional[int] = None, m: Optional[int] = None) -> CoverRow:
    r"""
    Instantiate a row of the cover table:

    ============ ============================ ======
    class        cover -> base                degree
    ============ ============================ ======
    cA/m         A_{k-1} -> A_{km-1}          m
    cAx/2        A_{2k-1} -> D_{k+2}          2
    cD/2         D_{k+1} -> D_{2k}            2
    cD/3         D_4 -> E_6                   3
    cE/2         E_6 -> E_7                   2
    cAx/4        A_{2k-2} -> D_{2k+1}         4
    ============ ============================ ======

    :raises TableError: the parameters do not fit the row.
    """
    if cls == CoverClass.CA:
        if k is None or m is None or k < 1 or m < 2:
            raise TableError(f'cA/m needs k >= 1 and m >= 2, got k={k}, m={m}')
        return CoverRow(cls, k, _a(k - 1), DuValType.A(k * m - 1), m)
    if m is not None and m != cls.degree:
        raise TableError(f'{cls.value} has index {cls.degree}, not {m}')
    if cls == CoverClass.CD3:
        return CoverRow(cls, None, DuValType.D(4), DuValType.E(6), 3)
    if cls == CoverClass.CE2:
        return CoverRow(cls, None, DuValType.E(6), DuValType.E(7), 2)
    if k is None or k < 2:
        raise TableError(f'{cls.value} needs k >= 2, got k={k}')
    if cls == CoverClass.CAX2:
        return CoverRow(cls, k, DuValType.A(2 * k - 1), DuValType.D(k + 2), 2)
    if cls == CoverClass.CD2:
        # D3 is A3
        cover = DuValType.A(3) if k == 2 else DuValType.D(k + 1)
        return CoverRow(cls, k, cover, DuValType.D(2 * k), 2)
    return CoverRow(cls, k, DuValType.A(2 * k - 2), DuValType.D(2 * k + 1), 4)


def cover_rows_with_base(surface: Surface, m: int) -> list[CoverRow]:
    r"""
    All rows of index ``m`` whose base is ``surface``.
    """
    if not isinstance(surface, DuValType):
        return []
    n = surface.subscript
    ret = []
    if surface.kind == DuValKind.A:
        if m >= 2 and (n + 1) % m == 0:
            ret.append(canonical_cover_row(CoverClass.CA, (n + 1) // m, m))
    elif surface.kind == DuValKind.D:
        if m == 2:
            ret.append(canonical_cover_row(CoverClass.CAX2, n - 2))
            if n % 2 == 0:
                ret.append(canonical_cover_row(CoverClass.CD2, n // 2))
        elif m == 4 and n % 2 == 1:
            ret.append(canonical_cover_row(CoverClass.CAX4, (n - 1) // 2))
    elif surface == DuValType.E(6) and m == 3:
        ret.append(canonical_cover_row(CoverClass.CD3))
    elif surface == DuValType.E(7) and m == 2:
        ret.append(canonical_cover_row(CoverClass.CE2))
    return ret


@dataclass(frozen=True)
class CataneseRow:
    r"""
    A row of the table of involutions on DuVal points: ``elephant / tau = quotient``.
    ``elephant`` is ``None`` on the first row, where any DuVal point qualifies.
    """
    row: int
    elephant: Optional[DuValType]
    quotient: Surface

    def __str__(self):
        src = 'any' if self.elephant is None else str(self.elephant)
        return f'{self.row}) {src} -> {self.quotient}'


CATANESE_ROWS = {
    1: 'any -> smooth',
    2: 'A_{2k+1} -> D_{k+3}',
    3: 'E_6 -> E_7',
    4: 'D_k -> D_{2k-2}',
    5: 'A_k -> A_{2k+1}',
    6: 'A_{2k+1} -> 1/(4k+4)(1,2k+1)',
    7: 'E_6 -> A_2',
    8: 'A_{2k} -> 1/(2k+1)(1,2k-1)',
    9: 'D_k -> A_1',
    10: 'A_{2k+1} -> A_k',
}


def _require(ok: bool, t: DuValType, row: int):
    if not ok:
        raise TableError(f'Row {row} ({CATANESE_ROWS[row]}) does not apply to {t}')


def catanese_quotient(t: DuValType, row: int) -> Surface:
    r"""
    The quotient of the DuVal point ``t`` by an involution of the given row.

    :raises TableError: the row does not apply to ``t``.
    """
    if row not in CATANESE_ROWS:
        raise TableError(f'No row {row}; the table has rows 1 to 10')
    kind, n = t.kind, t.subscript
    if row == 1:
        return Smooth()
    if row in (3, 7):
        _require(t == DuValType.E(6), t, row)
        return DuValType.E(7) if row == 3 else DuValType.A(2)
    if row in (4, 9):
        _require(kind == DuValKind.D, t, row)
        return DuValType.D(2 * n - 2) if row == 4 else DuValType.A(1)
    _require(kind == DuValKind.A, t, row)
    if row == 5:
        return DuValType.A(2 * n + 1)
    if row == 8:
        _require(n % 2 == 0, t, row)
        k = n // 2
        return CyclicQuot(2 * k + 1, 2 * k - 1)
    _require(n % 2 == 1, t, row)
    k = (n - 1) // 2
    if row == 2:
        # D3 is A3
        return DuValType.A(3) if k == 0 else DuValType.D(k + 3)
    if row == 6:
        return CyclicQuot(4 * k + 4, 2 * k + 1)
    return _a(k)


def catanese_rows(k: int) -> list[CataneseRow]:
    r"""
    All ten rows at parameter ``k >= 1``. Rows with a ``D`` elephant are instantiated at ``D_{k+3}``.
    """
    if k < 1:
        raise TableError(f'Parameter must be positive: {k}')
    elephants = {1: None, 2: DuValType.A(2 * k + 1), 3: DuValType.E(6), 4: DuValType.D(k + 3),
                 5: DuValType.A(k), 6: DuValType.A(2 * k + 1), 7: DuValType.E(6), 8: DuValType.A(2 * k),
                 9: DuValType.D(k + 3), 10: DuValType.A(2 * k + 1)}
    ret = []
    for row, el in elephants.items():
        quotient = Smooth() if el is None else catanese_quotient(el, row)
        ret.append(CataneseRow(row, el, quotient))
    return ret
