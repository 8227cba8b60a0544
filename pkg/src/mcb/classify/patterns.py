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
from enum import Enum
from typing import Iterable
from ..germ import NormalizedGerm, Series, is_cyclic_quotient
from .canonical import canonicalize


__all__ = ['PatternTag', 'TheoremTag', 'pattern_i', 'pattern_ii', 'pattern_tag', 'theorem_case',
           'match_theorem_patterns', 'gorenstein_allowance']


class PatternTag(Enum):
    MAIN_ORD1 = 'main-ord1'
    r"""``ord(x3) = 1``: the general elephant is good."""

    PATTERN_I = 'pattern-i'
    r"""Weights ``(1, -1, mbar+1, 0) mod 2 mbar``, orders ``(1, mbar-1, mbar+1, mbar)``."""

    PATTERN_II = 'pattern-ii'
    r"""Weights ``(1, -1, mbar+1, 0) mod 2 mbar``, orders ``(1, 2 mbar-1, mbar+1, mbar)``."""

    UNMATCHED = 'unmatched'
    r"""Contradicts the classification at the caps used."""


class TheoremTag(Enum):
    MAIN_1_I = 'main-1.(i)'
    r"""``mbar = 1``, base ``A_1``."""

    MAIN_1_II = 'main-1.(ii)'
    r"""cAx/4 point, base ``A_1``."""

    MAIN_1_III = 'main-1.(iii)'
    r"""``C^3/Z_4(1,3,1)``, base ``A_1``."""

    MAIN_1_IV = 'main-1.(iv)'
    r"""``C^3/Z_{2 mbar}(1,-1,mbar+1)`` with ``mbar`` even and at least 4, base ``A_1``."""

    MAIN_1_V = 'main-1.(v)'
    r"""The second pattern with ``mbar`` even, base ``A_1``."""

    MAIN_2_I = 'main-2.(i)'
    r"""``C^3/Z_8(1,7,1)`` type, ``a = 1``, base ``A_3``."""

    MAIN_2_II = 'main-2.(ii)'
    r"""``C^3/Z_8(3,5,1)`` type, ``a = 3``, base ``A_3``."""

    UNMATCHED = 'unmatched'
    r"""No case of the classification has this shape."""


def _pattern(mbar: int, a2: int) -> NormalizedGerm:
    m = 2 * mbar
    return canonicalize(NormalizedGerm.main(mbar, 2, (1, m - 1, mbar + 1, 0), (1, a2, mbar + 1, mbar)))


def pattern_i(mbar: int) -> NormalizedGerm:
    return _pattern(mbar, mbar - 1)


def pattern_ii(mbar: int) -> NormalizedGerm:
    return _pattern(mbar, 2 * mbar - 1)


def _same_shape(germ: NormalizedGerm, other: NormalizedGerm) -> bool:
    a, b = canonicalize(germ), canonicalize(other)
    return (a.mbar, a.d, a.weight_values, a.ords) == (b.mbar, b.d, b.weight_values, b.ords)


def pattern_tag(germ: NormalizedGerm) -> PatternTag:
    if germ.ords[2] == 1:
        return PatternTag.MAIN_ORD1
    if germ.d == 2 and germ.series == Series.MAIN and germ.mbar >= 2:
        if germ.mbar >= 3 and _same_shape(germ, pattern_i(germ.mbar)):
            return PatternTag.PATTERN_I
        if _same_shape(germ, pattern_ii(germ.mbar)):
            return PatternTag.PATTERN_II
    return PatternTag.UNMATCHED


def _main2_parameter(germ: NormalizedGerm) -> int:
    # normalize wt(x3) to 1 by a character change, then a = min(wt(x1), wt(x2))
    m = germ.m
    w1, w2, w3, _ = germ.weight_values
    u = pow(w3, -1, m)
    return min(u * w1 % m, u * w2 % m)


def theorem_case(germ: NormalizedGerm) -> TheoremTag:
    r"""
    The case of the classification of conic bundles over a singular base that ``germ`` instantiates.
    """
    mbar, d = germ.mbar, germ.d
    if germ.series == Series.EXCEPTIONAL:
        return TheoremTag.MAIN_1_II if germ.m == 4 else TheoremTag.UNMATCHED
    tag = pattern_tag(germ)
    if tag == PatternTag.PATTERN_I and mbar % 2 == 0 and mbar >= 4:
        return TheoremTag.MAIN_1_IV
    if tag == PatternTag.PATTERN_II and mbar % 2 == 0:
        return TheoremTag.MAIN_1_V
    if tag != PatternTag.MAIN_ORD1:
        return TheoremTag.UNMATCHED
    if mbar == 1 and d == 2:
        return TheoremTag.MAIN_1_I
    if germ.ords == (1, 1, 1, 2) and is_cyclic_quotient(germ):
        if (mbar, d) == (2, 2):
            return TheoremTag.MAIN_1_III
        if (mbar, d) == (2, 4):
            a = _main2_parameter(germ)
            if a == 1:
                return TheoremTag.MAIN_2_I
            if a == 3:
                return TheoremTag.MAIN_2_II
    return TheoremTag.UNMATCHED


def match_theorem_patterns(survivors: Iterable) -> dict[TheoremTag, list[NormalizedGerm]]:
    r"""
    Group germs by theorem case. Accepts germs or anything with a ``germ`` attribute.
    """
    ret: dict[TheoremTag, list[NormalizedGerm]] = {}
    for item in survivors:
        germ = item if isinstance(item, NormalizedGerm) else item.germ
        ret.setdefault(theorem_case(germ), []).append(germ)
    return ret


def gorenstein_allowance(tag: TheoremTag) -> int:
    r"""
    How many further Gorenstein singular points the fiber may carry: one over an ``A_1`` base,
    none over an ``A_3`` base.
    """
    return 0 if tag in (TheoremTag.MAIN_2_I, TheoremTag.MAIN_2_II) else 1
