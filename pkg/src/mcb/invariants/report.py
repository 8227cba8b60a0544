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
from fractions import Fraction
from typing import Optional
from ..types import SearchExhausted, UnsupportedGerm
from ..calculus import Monomial
from ..conf import SearchCaps
from ..germ import NormalizedGerm, Series, EquationKind
from .local import compute_wP, compute_fc, compute_iP_exact, compute_iP_lower, IPKind, IPValue


__all__ = ['InvariantReport', 'invariant_report']


@dataclass(frozen=True)
class InvariantReport:
    r"""
    The local invariants of one point.

    :ivar germ: the germ.
    :ivar wp: ``w_P``.
    :ivar wp_witness: the monomial attaining ``w_P``.
    :ivar fc: ``(F . C)_P``.
    :ivar ip: ``i_P``, exact or a lower bound.
    :ivar ip_alternatives: other i_P values computed on the way, e.g. the lower bound next to an exact value.
    """
    germ: NormalizedGerm
    wp: Fraction
    wp_witness: Optional[Monomial]
    fc: Fraction
    ip: IPValue
    ip_alternatives: tuple[IPValue, ...] = ()

    @property
    def anticanonical(self) -> Fraction:
        return self.germ.anticanonical

    @property
    def deg_gr0_omega(self) -> Fraction:
        r"""
        ``(K_X . C) - w_P``, the degree of ``gr0 omega`` if this is the only non-Gorenstein point.
        """
        return -self.anticanonical - self.wp

    @property
    def singular(self) -> bool:
        return not self.germ.is_smooth


def invariant_report(germ: NormalizedGerm, caps: Optional[SearchCaps] = None, exact: bool = True) -> InvariantReport:
    r"""
    Compute every local invariant of a germ.

    With ``exact`` set, cyclic binomial main-series germs get the exact ``i_P`` and the lower bound as
    an alternative; other main-series germs get the lower bound; exceptional germs are ``unsupported``.

    :raises SearchExhausted: ``w_P`` could not be found below the weight cap.
    """
    caps = caps or SearchCaps()
    wp, witness = compute_wP(germ, caps.weight_cap(germ.mbar))
    fc = compute_fc(germ)
    alternatives = []
    if germ.is_smooth:
        ip = IPValue(IPKind.EXACT, Fraction(0), label='smooth point')
    elif germ.series == Series.EXCEPTIONAL:
        ip = IPValue(IPKind.UNSUPPORTED, None, label='exceptional series')
    else:
        lower = compute_iP_lower(germ, caps, wp)
        ip = lower
        if exact and germ.equation.kind == EquationKind.CYCLIC_BINOMIAL:
            try:
                ip = compute_iP_exact(germ, caps, wp)
                alternatives.append(lower)
            except (SearchExhausted, UnsupportedGerm) as e:
                logging.getLogger(__name__).warning(f'{germ}: exact i_P unavailable ({e}), using the lower bound')
    return InvariantReport(germ, wp, witness, fc, ip, tuple(alternatives))
