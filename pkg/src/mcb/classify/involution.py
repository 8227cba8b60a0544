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
from typing import Optional
from ..duval import (DuValType, CyclicQuot, Smooth, Surface, CoverClass, IndexVerdict, catanese_quotient,
                     cover_rows_with_base, index_divisibility_check, topological_index)
from ..germ import NormalizedGerm, Series, is_cyclic_quotient


__all__ = ['RowOutcome', 'involution_stage', 'elephant_candidates']


@dataclass(frozen=True)
class RowOutcome:
    r"""
    Why one row of the involution table does or does not fit a germ.
    """
    row: int
    elephant: Optional[DuValType]
    quotient: Optional[Surface]
    passed: bool
    reason: str

    def __str__(self):
        return f'row {self.row}: {self.elephant} -> {self.quotient}: {self.reason}'


def elephant_candidates(row: int, d: int) -> list[DuValType]:
    r"""
    The elephants ``F`` of the given row whose quotient has topological index ``d``.
    Row 9 (``D_k -> A_1``) leaves ``k`` free; it is listed as the ``D`` bases of the cover table
    with ``k`` from 4 to 5, which covers both parities.
    """
    if row == 5 and d % 2 == 0 and d // 2 - 1 >= 1:
        return [DuValType.A(d // 2 - 1)]
    if row == 6 and d % 4 == 0:
        return [DuValType.A(2 * (d // 4 - 1) + 1)]
    if row == 7 and d == 3:
        return [DuValType.E(6)]
    if row == 8 and d % 2 == 1 and d >= 3:
        return [DuValType.A(d - 1)]
    if row == 9 and d == 2:
        return [DuValType.D(4), DuValType.D(5)]
    if row == 10 and d >= 2:
        return [DuValType.A(2 * d - 1)]
    return []


def _check_row(germ: NormalizedGerm, row: int) -> RowOutcome:
    m, d = germ.m, germ.d
    if row == 1:
        return RowOutcome(row, None, Smooth(), False, 'the quotient is smooth, the base is singular')
    if row in (2, 3, 4):
        return RowOutcome(row, None, None, False, 'the quotient is not a cyclic quotient')
    elephants = elephant_candidates(row, d)
    if not elephants:
        return RowOutcome(row, None, None, False, f'no quotient of topological index {d}')
    last = None
    for el in elephants:
        quotient = catanese_quotient(el, row)
        if isinstance(quotient, CyclicQuot):
            quotient = quotient.as_duval()
        assert topological_index(quotient) == d
        verdict = index_divisibility_check(m, el)
        if verdict == IndexVerdict.FAIL:
            last = RowOutcome(row, el, quotient, False, f'topological index {topological_index(el)} of {el} '
                                                        f'is not compatible with index {m}')
            continue
        rows = cover_rows_with_base(el, m)
        series = [Series.EXCEPTIONAL if r.cls == CoverClass.CAX4 else Series.MAIN for r in rows]
        if germ.series not in series:
            last = RowOutcome(row, el, quotient, False, f'no {germ.series.value}-series point of index {m} '
                                                        f'has elephant {el}')
            continue
        if verdict == IndexVerdict.PASS_FORCING_A and not is_cyclic_quotient(germ):
            last = RowOutcome(row, el, quotient, False, f'{el} forces a cyclic quotient point')
            continue
        cover = rows[series.index(germ.series)]
        return RowOutcome(row, el, quotient, True, f'{cover}; {verdict.value}')
    return last


def involution_stage(germ: NormalizedGerm) -> tuple[bool, list[RowOutcome]]:
    r"""
    For a point whose general elephant ``F`` is DuVal, the base ``(S, 0)`` is ``F / tau`` for an involution
    ``tau``, a cyclic quotient of topological index ``d``. Try every row of the involution table.

    :return: whether some row fits, and the outcome of every row.
    """
    outcomes = [_check_row(germ, row) for row in range(1, 11)]
    return any(o.passed for o in outcomes), outcomes
