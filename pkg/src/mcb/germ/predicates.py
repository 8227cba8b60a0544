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
from fractions import Fraction
from .model import NormalizedGerm


__all__ = ['PredicateReport', 'structural_predicates', 'Elephant', 'general_elephant_test']


@dataclass(frozen=True)
class PredicateReport:
    r"""
    The structural conditions on a point of a conic bundle over a singular base.
    The checks are independent of each other.

    :ivar d_even: the splitting degree is even.
    :ivar divisibility: ``2 * mbar = 0 mod d``.
    :ivar subindex_bound: ``mbar >= d/2``.
    :ivar a3_congruence: ``ord(x3) = 1 mod mbar``.
    :ivar anticanonical: ``(-K_X . C) = 1/mbar``.
    """
    d_even: bool
    divisibility: bool
    subindex_bound: bool
    a3_congruence: bool
    anticanonical: Fraction

    @property
    def passed(self) -> bool:
        return self.d_even and self.divisibility and self.subindex_bound and self.a3_congruence

    def failures(self) -> list[str]:
        names = ('d_even', 'divisibility', 'subindex_bound', 'a3_congruence')
        return [name for name in names if not getattr(self, name)]


def structural_predicates(germ: NormalizedGerm) -> PredicateReport:
    mbar, d = germ.mbar, germ.d
    return PredicateReport(d_even=d % 2 == 0,
                           divisibility=(2 * mbar) % d == 0,
                           subindex_bound=2 * mbar >= d,
                           a3_congruence=germ.ords[2] % mbar == 1 % mbar,
                           anticanonical=germ.anticanonical)


class Elephant(Enum):
    GOOD = 'good-elephant'
    r"""A general member of ``|-K_X|`` misses the curve and is DuVal at the point."""

    CONTAINS_CURVE = 'contains-curve'
    r"""A general member of ``|-K_X|`` contains the curve."""


def general_elephant_test(germ: NormalizedGerm) -> Elephant:
    return Elephant.GOOD if germ.ords[2] < germ.mbar else Elephant.CONTAINS_CURVE
