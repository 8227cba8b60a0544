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
from typing import Optional
from ..calculus import Residue
from ..germ import NormalizedGerm


__all__ = ['canonicalize', 'canonical_key', 'character_changes']


def character_changes(germ: NormalizedGerm) -> list[int]:
    r"""
    Units ``u mod m`` with ``u = 1 mod mbar``: multiplying every weight by ``u`` replaces the
    character by one congruent to it modulo ``mbar``.
    """
    m, mbar = germ.m, germ.mbar
    return [u for u in range(1, m + 1) if u % mbar == 1 % mbar and Residue.of(u, m).is_unit()] if m > 1 else [1]


def canonical_key(germ: NormalizedGerm) -> tuple:
    return germ.weight_values, germ.ords


def _rescale(germ: NormalizedGerm, u: int) -> NormalizedGerm:
    return germ.with_weights([w * u for w in germ.weights])


def canonicalize(germ: NormalizedGerm, orbit: Optional[list[NormalizedGerm]] = None) -> NormalizedGerm:
    r"""
    The representative with the least ``(weights, orders)`` among the germs reached by the allowed
    character changes and the ``x1 <-> x2`` swap. Idempotent.

    :param orbit: if given, the orbit is appended to it.
    """
    best = None
    for u in character_changes(germ):
        scaled = _rescale(germ, u)
        for cand in (scaled, scaled.swapped()):
            if orbit is not None:
                orbit.append(cand)
            if best is None or canonical_key(cand) < canonical_key(best):
                best = cand
    return best
