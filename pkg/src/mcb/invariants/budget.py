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
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence
from .local import IPKind, IPValue
from .report import InvariantReport


__all__ = ['GlobalReport', 'global_check', 'ip_contribution']


MAX_BUDGET = 4
MAX_SINGULAR_POINTS = 3


@dataclass(frozen=True)
class GlobalReport:
    r"""
    The global constraints along a central fiber.

    :ivar anticanonical: ``(-K_X . C)``.
    :ivar sum_wp: sum of ``w_P``.
    :ivar sum_ip: sum of the ``i_P`` values used (lower bounds rounded up, at least 1 at singular points).
    :ivar total: ``(-K_X . C) + sum_wp + sum_ip``; must not exceed 4.
    :ivar deg_gr0_omega: ``(K_X . C) - sum_wp``; must be an integer in ``[-3, -1]``.
    :ivar deg_gr1_o: ``2 + deg_gr0_omega - sum_ip``; must be at least ``-2``.
    :ivar point_count: number of singular points; at most 3.
    :ivar extra_gorenstein: number of extra Gorenstein singular points.
    """
    anticanonical: Fraction
    sum_wp: Fraction
    sum_ip: Fraction
    total: Fraction
    deg_gr0_omega: Fraction
    deg_gr1_o: Fraction
    point_count: int
    extra_gorenstein: int
    max_gorenstein: Optional[int]

    @property
    def budget_ok(self) -> bool:
        return self.total <= MAX_BUDGET

    @property
    def gr0_integral(self) -> bool:
        return self.deg_gr0_omega.denominator == 1

    @property
    def gr0_range_ok(self) -> bool:
        return -3 <= self.deg_gr0_omega <= -1

    @property
    def gr1_ok(self) -> bool:
        return self.deg_gr1_o >= -2

    @property
    def point_count_ok(self) -> bool:
        return self.point_count <= MAX_SINGULAR_POINTS

    @property
    def gorenstein_ok(self) -> bool:
        return self.max_gorenstein is None or self.extra_gorenstein <= self.max_gorenstein

    @property
    def spare(self) -> Fraction:
        return MAX_BUDGET - self.total

    def checks(self) -> dict[str, bool]:
        return {'budget': self.budget_ok, 'gr0_integral': self.gr0_integral, 'gr0_range': self.gr0_range_ok,
                'gr1': self.gr1_ok, 'point_count': self.point_count_ok, 'gorenstein': self.gorenstein_ok}

    @property
    def passed(self) -> bool:
        return all(self.checks().values())

    def failures(self) -> list[str]:
        return [name for name, ok in self.checks().items() if not ok]


def ip_contribution(ip: IPValue, singular: bool) -> Fraction:
    r"""
    The value of ``i_P`` a budget may rely on. ``i_P`` is an integer and at least 1 at a singular point,
    so a lower bound is rounded up and clamped.
    """
    floor = 1 if singular else 0
    if ip.kind == IPKind.EXACT:
        return ip.value
    if ip.kind == IPKind.UNSUPPORTED or ip.value is None:
        return Fraction(floor)
    return Fraction(max(math.ceil(ip.value), floor))


def global_check(reports: Sequence[InvariantReport], extra_gorenstein: int = 0,
                 anticanonical: Optional[Fraction] = None, max_gorenstein: Optional[int] = None) -> GlobalReport:
    r"""
    Evaluate the budget ``(-K . C) + sum(w_P) + sum(i_P) <= 4``, the degrees of ``gr0 omega`` and ``gr1 O``
    and the singular point count.

    :param reports: one report per non-Gorenstein (or otherwise computed) point on the fiber.
    :param extra_gorenstein: number of further Gorenstein singular points, each with ``w = 0`` and ``i >= 1``.
    :param anticanonical: ``(-K . C)``; defaults to that of the first report.
    :param max_gorenstein: the largest number of extra Gorenstein points allowed, if bounded.
    """
    if anticanonical is None:
        if not reports:
            raise ValueError('global_check needs a report or an explicit anticanonical degree')
        anticanonical = reports[0].anticanonical
    anticanonical = Fraction(anticanonical)
    sum_wp = sum((r.wp for r in reports), Fraction(0))
    sum_ip = sum((ip_contribution(r.ip, r.singular) for r in reports), Fraction(0)) + extra_gorenstein
    points = sum(1 for r in reports if r.singular) + extra_gorenstein
    deg_gr0 = -anticanonical - sum_wp
    return GlobalReport(anticanonical=anticanonical, sum_wp=sum_wp, sum_ip=sum_ip,
                        total=anticanonical + sum_wp + sum_ip, deg_gr0_omega=deg_gr0,
                        deg_gr1_o=2 + deg_gr0 - sum_ip, point_count=points,
                        extra_gorenstein=extra_gorenstein, max_gorenstein=max_gorenstein)
