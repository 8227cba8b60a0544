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
from math import gcd
from typing import Union
from ..types import ResidueMismatch


__all__ = ['Residue']


@dataclass(frozen=True)
class Residue:
    r"""
    A residue class ``value mod modulus``. Used for weights of semi-invariants
    under the cyclic group of order ``m``.

    Residues combine with residues of the same modulus and with plain integers.
    """
    value: int
    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus <= 0:
            raise ValueError(f'Modulus must be a positive integer: {self.modulus}')
        if not isinstance(self.value, int) or not 0 <= self.value < self.modulus:
            raise ValueError(f'Residue value {self.value} out of range mod {self.modulus}')

    @staticmethod
    def of(value: int, modulus: int) -> Residue:
        return Residue(value % modulus, modulus)

    def _coerce(self, other: Union[Residue, int]) -> Residue:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ResidueMismatch(self.modulus, other.modulus)
            return other
        if isinstance(other, int):
            return Residue.of(other, self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue.of(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue.of(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue.of(other.value - self.value, self.modulus)

    def __neg__(self):
        return Residue.of(-self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Residue.of(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __int__(self):
        return self.value

    def __str__(self):
        return f'{self.value} mod {self.modulus}'

    def is_zero(self) -> bool:
        return self.value == 0

    def is_unit(self) -> bool:
        return gcd(self.value, self.modulus) == 1

    def inverse(self) -> Residue:
        if not self.is_unit():
            raise ValueError(f'{self} is not invertible')
        return Residue(pow(self.value, -1, self.modulus), self.modulus)

    def reduce(self, modulus: int) -> Residue:
        r"""
        The image in ``Z/modulus``. The new modulus must divide the current one.
        """
        if self.modulus % modulus != 0:
            raise ResidueMismatch(self.modulus, modulus)
        return Residue.of(self.value, modulus)
