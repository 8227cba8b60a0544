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
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations
from typing import Optional, Sequence
from ..types import MonomialError, SearchExhausted, UnsupportedGerm
from ..calculus import (Monomial, Binomial, min_ord_of_weight, ord_of, vanishes_on_curve, invariant_monomials,
                        is_simple_invariant)
from ..conf import SearchCaps
from ..germ import NormalizedGerm, Series, EquationKind


__all__ = ['compute_wP', 'compute_fc', 'jacobian_ord', 'compute_iP_exact', 'compute_iP_lower',
           'IPKind', 'IPValue', 'SearchTrace']


def _det3(rows: Sequence[Sequence[int]]) -> int:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _cross(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int]:
    return u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def compute_wP(germ: NormalizedGerm, ord_cap: Optional[int] = None) -> tuple[Fraction, Optional[Monomial]]:
    r"""
    ``w_P``: the least order of a monomial of weight ``-wt(x3)``, divided by ``mbar``.
    Gorenstein points (``m = 1``) have ``w_P = 0`` and no witness.

    :param ord_cap: order cap of the search, ``6 * mbar`` by default.
    :raises SearchExhausted: no monomial of that weight below the cap.
    """
    if germ.m == 1:
        return Fraction(0), None
    cap = ord_cap if ord_cap is not None else SearchCaps().weight_cap(germ.mbar)
    found = min_ord_of_weight(germ, -germ.weights[2], cap)
    if found is None:
        raise SearchExhausted(f'a monomial of weight {-germ.weights[2]}', cap)
    return Fraction(found.order, germ.mbar), found.witness


def compute_fc(germ: NormalizedGerm) -> Fraction:
    r"""
    ``(F . C)_P = ord(x3) / mbar`` for a general elephant ``F``.
    """
    return Fraction(germ.ords[2], germ.mbar)


def jacobian_ord(triple: Sequence[Binomial], germ: NormalizedGerm) -> Optional[int]:
    r"""
    The order along the curve of the Jacobian of three binomial generators ``psi_i - x4^n_i``:
    ``sum(ord(psi_i)) - (a1 + a2 + a3)`` if the exponent vectors of the ``psi_i`` are independent,
    ``None`` (infinite) otherwise.

    :raises MonomialError: a generator does not vanish on the curve.
    """
    if len(triple) != 3:
        raise MonomialError('jacobian_ord needs exactly three generators')
    for gen in triple:
        if not vanishes_on_curve(gen, germ):
            raise MonomialError(f'{gen} does not vanish on the curve')
    if _det3([gen.psi.ex4() for gen in triple]) == 0:
        return None
    return sum(ord_of(gen.psi, germ) for gen in triple) - sum(germ.ords[:3])


class IPKind(Enum):
    EXACT = 'exact'
    LOWER_BOUND = 'lower-bound'
    UNSUPPORTED = 'unsupported'


@dataclass(frozen=True)
class SearchTrace:
    r"""
    What an i_P search looked at.

    :ivar generators: the generators considered, in search order.
    :ivar evaluated: number of independent pairs or triples evaluated.
    :ivar best: the minimizing Jacobian value, if any.
    :ivar cap: the generator order cap.
    :ivar certified: whether the cap provably did not affect the minimum.
    """
    generators: tuple[Monomial, ...]
    evaluated: int
    best: Optional[int]
    cap: int
    certified: bool


@dataclass(frozen=True)
class IPValue:
    kind: IPKind
    value: Optional[Fraction]
    witness: tuple[Binomial, ...] = ()
    trace: Optional[SearchTrace] = None
    boundary_hit: bool = False
    label: str = ''

    @property
    def is_exact(self) -> bool:
        return self.kind == IPKind.EXACT

    def __str__(self):
        if self.kind == IPKind.UNSUPPORTED:
            return 'unsupported'
        prefix = '' if self.is_exact else '>= '
        return f'{prefix}{self.value}'


def _generator(mono: Monomial, germ: NormalizedGerm) -> Binomial:
    return Binomial(mono, ord_of(mono, germ) // germ.ords[3])


def _wp_units(germ: NormalizedGerm, wp: Fraction) -> int:
    return int(wp * germ.mbar)


def compute_iP_exact(germ: NormalizedGerm, caps: Optional[SearchCaps] = None,
                     wp: Optional[Fraction] = None) -> IPValue:
    r"""
    Exact ``i_P`` of a main-series germ with cyclic binomial cover ``phi = psi0 - x4^n``:

    ``i_P * mbar = mbar - ord(x4) - mbar * w_P + min``

    with the minimum of the Jacobian value over pairs ``(phi1, phi2)`` of invariant binomial generators
    making ``{phi, phi1, phi2}`` independent.

    :raises UnsupportedGerm: the germ is exceptional or not a cyclic binomial.
    :raises SearchExhausted: the generator cap may have cut off the minimum.
    """
    if germ.series != Series.MAIN or germ.equation.kind != EquationKind.CYCLIC_BINOMIAL:
        raise UnsupportedGerm(f'Exact i_P needs a main-series cyclic binomial germ: {germ}')
    caps = caps or SearchCaps()
    if wp is None:
        wp, _ = compute_wP(germ, caps.weight_cap(germ.mbar))
    mbar = germ.mbar
    cap = caps.generator_cap(mbar, _wp_units(germ, wp))
    phi = germ.equation.generator
    v0 = phi.psi.ex4()
    gens = [mono for mono in invariant_monomials(germ, cap) if vanishes_on_curve(_generator(mono, germ), germ)]
    ords = [ord_of(mono, germ) for mono in gens]
    best: Optional[int] = None
    best_pair = None
    evaluated = 0
    for i, gi in enumerate(gens):
        if best is not None and 2 * ords[i] >= best:
            break
        cross = _cross(v0, gi.ex4())
        if cross == (0, 0, 0):
            continue
        for j in range(i + 1, len(gens)):
            if best is not None and ords[i] + ords[j] >= best:
                break
            if _dot(cross, gens[j].ex4()) == 0:
                continue
            evaluated += 1
            best = ords[i] + ords[j]
            best_pair = (gi, gens[j])
    o_min = ords[0] if ords else cap + 1
    certified = best is not None and best <= cap + o_min
    jac = None if best is None else best + ord_of(phi.psi, germ) - sum(germ.ords[:3])
    trace = SearchTrace(tuple(gens), evaluated, jac, cap, certified)
    logging.getLogger(__name__).debug(f'{germ}: exact i_P search, {len(gens)} generators, best {jac}')
    if not certified:
        raise SearchExhausted('an independent pair of invariant generators', cap)
    value = Fraction(mbar - germ.ords[3] - _wp_units(germ, wp) + jac, mbar)
    witness = (phi, _generator(best_pair[0], germ), _generator(best_pair[1], germ))
    return IPValue(IPKind.EXACT, value, witness, trace, False, 'exact')


def _assignable(triple: Sequence[Monomial]) -> bool:
    for perm in permutations(range(3)):
        if all(triple[k].exponents[perm[k]] > 0 for k in range(3)):
            return True
    return False


def compute_iP_lower(germ: NormalizedGerm, caps: Optional[SearchCaps] = None,
                     wp: Optional[Fraction] = None) -> IPValue:
    r"""
    A lower bound of ``i_P`` from triples of distinct simple invariant monomials
    ``psi_i = x_i * nu_i`` (after a permutation) with independent exponent vectors:

    ``i_P * mbar >= min(sum(ord(psi_i) - a_i)) - mbar * w_P``

    Triples with a member above the generator cap are accounted for by a tail bound, so the
    value is always a valid bound; ``boundary_hit`` tells that the tail bound decided it.

    :raises UnsupportedGerm: the germ is exceptional.
    """
    if germ.is_smooth:
        return IPValue(IPKind.LOWER_BOUND, Fraction(0), label='smooth point')
    if germ.series != Series.MAIN:
        raise UnsupportedGerm(f'No binomial lower bound for the exceptional series: {germ}')
    caps = caps or SearchCaps()
    if wp is None:
        wp, _ = compute_wP(germ, caps.weight_cap(germ.mbar))
    mbar = germ.mbar
    cap = caps.generator_cap(mbar, _wp_units(germ, wp))
    simple = [mono for mono in invariant_monomials(germ, cap) if is_simple_invariant(mono, germ)]
    ords = [ord_of(mono, germ) for mono in simple]
    vecs = [mono.ex4() for mono in simple]
    base = sum(germ.ords[:3])
    tail = (cap + 1 + 2 * ords[0] if simple else 3 * (cap + 1)) - base
    best: Optional[int] = None
    best_triple = None
    evaluated = 0
    n = len(simple)
    for i in range(n):
        if best is not None and 3 * ords[i] - base >= best:
            break
        for j in range(i + 1, n):
            if best is not None and ords[i] + 2 * ords[j] - base >= best:
                break
            cross = _cross(vecs[i], vecs[j])
            if cross == (0, 0, 0):
                continue
            for k in range(j + 1, n):
                total = ords[i] + ords[j] + ords[k] - base
                if best is not None and total >= best:
                    break
                if _dot(cross, vecs[k]) == 0:
                    continue
                triple = (simple[i], simple[j], simple[k])
                if not _assignable(triple):
                    continue
                evaluated += 1
                best = total
                best_triple = triple
    boundary_hit = best is None or tail < best
    value = tail if boundary_hit else best
    trace = SearchTrace(tuple(simple), evaluated, best, cap, not boundary_hit)
    witness = () if best_triple is None else tuple(_generator(mono, germ) for mono in best_triple)
    label = 'lower-bound (binomial search)' + (', cap-limited' if boundary_hit else '')
    logging.getLogger(__name__).debug(f'{germ}: i_P lower bound search, best {best}, tail {tail}')
    return IPValue(IPKind.LOWER_BOUND, Fraction(value - _wp_units(germ, wp), mbar),
                   witness, trace, boundary_hit, label)
