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
import os
import logging
from configparser import ConfigParser
from dataclasses import dataclass
from typing import Optional


__all__ = ['read_search_conf', 'conf_paths', 'SearchCaps']


DEFAULTS = {
    'weight_cap_factor': '6',
    'generator_cap_factor': '4',
    'order_cap_factor': '3',
    'pair_cap_factor': '3',
    'workers': '1',
}


def conf_paths() -> list[str]:
    ret = []
    if 'MCB_CONF' in os.environ:
        ret.append(os.environ['MCB_CONF'])
    ret.extend(['~/.mcb/mcb.conf', '/usr/local/etc/mcb/mcb.conf', '/etc/mcb/mcb.conf'])
    return ret


def read_search_conf() -> dict[str, str]:
    def get_path() -> str:
        for p_str in conf_paths():
            p = os.path.expanduser(os.path.expandvars(p_str))
            if os.path.exists(p):
                return p
        return ''

    path = get_path()
    ret = dict(DEFAULTS)
    if path:
        logging.getLogger(__name__).debug(f'Reading search configuration from {path}')
        parser = ConfigParser()
        with open(path) as f:
            text = f.read()
        if '[search]' not in text:
            text = '[search]\n' + text
        parser.read_string(text)
        for key in ret.keys():
            try:
                ret[key] = parser['search'][key]
            except KeyError:
                pass
    for key in ret.keys():
        try:
            ret[key] = os.environ[f'MCB_{key.upper()}']
        except KeyError:
            pass
    return ret


@dataclass(frozen=True)
class SearchCaps:
    r"""
    Cap factors of the bounded searches. Every factor multiplies the subindex.

    :ivar weight: order cap of weight-class searches is ``weight * mbar``.
    :ivar generator: generator cap of i_P searches is ``generator * mbar + ceil(mbar * wP)``.
    :ivar order: per-coordinate order cap of classification candidates.
    :ivar pair: cap of ``a1 + a2`` of classification candidates.
    :ivar workers: process fan-out of classification.
    """
    weight: int = 6
    generator: int = 4
    order: int = 3
    pair: int = 3
    workers: int = 1

    def weight_cap(self, mbar: int) -> int:
        return self.weight * mbar

    def generator_cap(self, mbar: int, wp_times_mbar: int = 0) -> int:
        return self.generator * mbar + wp_times_mbar

    def order_cap(self, mbar: int) -> int:
        return self.order * mbar

    def pair_cap(self, mbar: int) -> int:
        return self.pair * mbar

    def as_dict(self) -> dict[str, int]:
        return {'weight': self.weight, 'generator': self.generator, 'order': self.order,
                'pair': self.pair, 'workers': self.workers}

    @staticmethod
    def from_conf(conf: Optional[dict[str, str]] = None) -> 'SearchCaps':
        if conf is None:
            conf = read_search_conf()
        try:
            return SearchCaps(weight=int(conf['weight_cap_factor']),
                              generator=int(conf['generator_cap_factor']),
                              order=int(conf['order_cap_factor']),
                              pair=int(conf['pair_cap_factor']),
                              workers=max(1, int(conf['workers'])))
        except ValueError as e:
            raise ValueError(f'Invalid search configuration: {e}') from e
