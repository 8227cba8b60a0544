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
from itertools import product
from math import gcd
from typing import Iterator, Optional
from ..conf import SearchCaps
from ..germ import NormalizedGerm, Series, Equation, validate, chart_invariant
from .canonical import canonicalize, canonical_key


__all__ = ['enumerate_candidates', 'exceptional_candidate']


def exceptional_candidate() -> NormalizedGerm:
    r"""
    The cAx/4 germ: ``m = 4``, ``mbar = 2``, weights ``(1, 3, 3, 2)``, orders ``(1, 1, 1, 2)``.
    Its weights and orders are pinned, so it is emitted as is rather than searched.
    """
    return NormalizedGerm(2, 2, Series.EXCEPTIONAL, (1, 3, 3, 2), (1, 1, 1, 2), Equation.general())


def _orders(w: int, mbar: int, cap: int) -> range:
    start = w % mbar if mbar > 1 else 1
    return range(start, cap + 1, mbar)


def enumerate_candidates(mbar: int, d: int, caps: Optional[SearchCaps] = None,
                         order_cap: Optional[int] = None, pair_cap: Optional[int] = None) -> Iterator[NormalizedGerm]:
    r"""
    All canonical normalized germs of the main series with subindex ``mbar`` and splitting degree ``d``:
    weights ``(a, -a, b, 0)`` with ``a, b`` units mod ``m``, orders ``a_i = wt(x_i) mod mbar``,
    ``a_i <= order_cap``, ``a1 + a2 <= pair_cap`` and ``a4 = mbar``. The cover equation is the cyclic
    binomial when the germ is a cyclic quotient, a general hypersurface otherwise.
    The exceptional cAx/4 germ is added for ``(mbar, d) = (2, 2)``.

    The stream is sorted by canonical key and therefore deterministic.
    """
    caps = caps or SearchCaps()
    m = mbar * d
    if m <= 1:
        return
    order_cap = order_cap if order_cap is not None else caps.order_cap(mbar)
    pair_cap = pair_cap if pair_cap is not None else caps.pair_cap(mbar)
    units = [u for u in range(1, m) if gcd(u, m) == 1]
    found = {}
    for a, b in product(units, units):
        weights = (a, (-a) % m, b, 0)
        ranges = [_orders(w, mbar, order_cap) for w in weights[:3]]
        for a1, a2, a3 in product(*ranges):
            if a1 + a2 > pair_cap:
                continue
            germ = NormalizedGerm(mbar, d, Series.MAIN, weights, (a1, a2, a3, mbar))
            key = canonical_key(germ)
            if key in found or canonical_key(canonicalize(germ)) != key:
                continue
            if not validate(germ):
                continue
            psi0 = chart_invariant(germ)
            if psi0 is not None:
                germ = germ.with_equation(Equation.binomial(psi0))
            found[key] = germ
    extra = [canonicalize(exceptional_candidate())] if (mbar, d) == (2, 2) else []
    logging.getLogger(__name__).debug(f'({mbar}, {d}): {len(found) + len(extra)} canonical candidates')
    for key in sorted(found):
        yield found[key]
    yield from extra
