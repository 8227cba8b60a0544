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
from functools import lru_cache
from pygtrie import StringTrie
from .types import UnknownGerm
from .germ import NormalizedGerm, Equation, extend_to_chart, chart_invariant
from .classify import pattern_i, pattern_ii, canonicalize, exceptional_candidate


__all__ = ['GermTrie', 'ALIASES', 'builtin_germ', 'germs_under', 'germ_names']


ALIASES = {
    'cAx4': 'main-1/ii',
    'pattern-i-m4': 'main-1/iv/m4',
    'pattern-ii-m4': 'main-1/v/m4',
}


class GermTrie(StringTrie):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, separator='/', **kwargs)

    def _path_from_key(self, key: str):
        return [c for c in key.split(self._separator) if c]


def _with_chart(germ: NormalizedGerm) -> NormalizedGerm:
    psi0 = chart_invariant(germ)
    return germ.with_equation(Equation.binomial(psi0)) if psi0 is not None else germ


@lru_cache(maxsize=1)
def _registry() -> GermTrie:
    ret = GermTrie()
    ret['main-1/i'] = NormalizedGerm.main(1, 2, (1, 1, 1, 0), (1, 1, 1, 1))
    ret['main-1/ii'] = canonicalize(exceptional_candidate())
    ret['main-1/iii'] = extend_to_chart(4, (1, 3, 1), (1, 1, 1))
    for mbar in (4, 6, 8, 10):
        ret[f'main-1/iv/m{mbar}'] = _with_chart(pattern_i(mbar))
    for mbar in (2, 4):
        ret[f'main-1/v/m{mbar}'] = _with_chart(pattern_ii(mbar))
    ret['main-2/i'] = extend_to_chart(8, (1, 7, 1), (1, 1, 1))
    ret['main-2/ii'] = extend_to_chart(8, (3, 5, 1), (1, 1, 1))
    ret['smooth'] = NormalizedGerm.smooth_point()
    return ret


def germ_names() -> list[str]:
    return sorted(_registry().keys()) + sorted(ALIASES)


def builtin_germ(name: str) -> NormalizedGerm:
    r"""
    Look up a built-in germ by full name (``main-1/iv/m4``) or alias (``pattern-i-m4``).

    :raises UnknownGerm: if there is no such germ.
    """
    key = ALIASES.get(name, name)
    try:
        return _registry()[key]
    except KeyError:
        raise UnknownGerm(f'Unknown germ: {name}') from None


def germs_under(prefix: str) -> list[tuple[str, NormalizedGerm]]:
    r"""
    Every built-in germ whose name lies below ``prefix``, sorted by name. An alias or a full name
    yields that single germ; the empty prefix yields all germs.

    :raises UnknownGerm: if nothing lies below ``prefix``.
    """
    if prefix in ALIASES:
        return [(prefix, builtin_germ(prefix))]
    trie = _registry()
    if not prefix.strip('/'):
        return sorted(trie.items())
    try:
        return sorted(trie.items(prefix=prefix))
    except KeyError:
        raise UnknownGerm(f'No built-in germ under: {prefix}') from None
