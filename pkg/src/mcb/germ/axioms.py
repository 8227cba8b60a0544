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
from math import gcd
from typing import Any, Optional
from ..types import GermValidationError
from ..calculus import enumerate_by_weight, min_ord_of_weight, ord_of
from .model import NormalizedGerm, Series


__all__ = ['AxiomCheck', 'ValidationReport', 'validate']


@dataclass(frozen=True)
class AxiomCheck:
    axiom: int
    passed: bool
    detail: str
    witness: Optional[Any] = None


@dataclass(frozen=True)
class ValidationReport:
    r"""
    Results of the five normalization axioms, in order.
    A germ is normalized iff every axiom passes.
    """
    checks: tuple[AxiomCheck, ...]

    @property
    def normalized(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.normalized

    def first_failure(self) -> Optional[AxiomCheck]:
        return next((c for c in self.checks if not c.passed), None)

    def check(self, axiom: int) -> AxiomCheck:
        return self.checks[axiom - 1]

    def raise_for_failure(self):
        fail = self.first_failure()
        if fail is not None:
            raise GermValidationError(fail.axiom, fail.detail, fail.witness)


def _series_pattern(germ: NormalizedGerm) -> AxiomCheck:
    m = germ.m
    w1, w2, w3, w4 = germ.weight_values
    problems = []
    if (w1 + w2) % m != 0:
        problems.append(f'wt(x2) = {w2} is not -wt(x1)')
    if gcd(w1, m) != 1:
        problems.append(f'gcd(wt(x1), {m}) != 1')
    if gcd(w3, m) != 1:
        problems.append(f'gcd(wt(x3), {m}) != 1')
    if germ.series == Series.MAIN:
        if w4 != 0:
            problems.append(f'wt(x4) = {w4} is not 0')
        if germ.ords[3] != germ.mbar:
            problems.append(f'ord(x4) = {germ.ords[3]} is not mbar = {germ.mbar}')
    else:
        if m != 4:
            problems.append(f'exceptional series needs m = 4, got {m}')
        if w4 != 2 % m:
            problems.append(f'wt(x4) = {w4} is not 2')
    if problems:
        return AxiomCheck(1, False, '; '.join(problems))
    return AxiomCheck(1, True, f'{germ.series.value} series pattern')


def _congruences(germ: NormalizedGerm) -> AxiomCheck:
    mbar = germ.mbar
    for i, (a, w) in enumerate(zip(germ.ords, germ.weight_values)):
        if (a - w) % mbar != 0:
            return AxiomCheck(2, False, f'ord(x{i + 1}) = {a} is not wt(x{i + 1}) = {w} mod {mbar}', i + 1)
        if i < 3 and gcd(a, mbar) != 1:
            return AxiomCheck(2, False, f'gcd(ord(x{i + 1}), {mbar}) != 1', i + 1)
    return AxiomCheck(2, True, f'orders agree with weights mod {mbar}')


def _parameter(germ: NormalizedGerm) -> AxiomCheck:
    g = gcd(*germ.ords)
    if g != 1:
        return AxiomCheck(3, False, f'orders have common divisor {g}', g)
    return AxiomCheck(3, True, 'orders generate the t-semigroup')


def _minimality(germ: NormalizedGerm) -> AxiomCheck:
    for i in range(4):
        a = germ.ords[i]
        found = min_ord_of_weight(germ, germ.weights[i], a)
        # x_i itself is in its own class at order a, so the search never comes back empty
        if found is not None and found.order < a:
            return AxiomCheck(4, False, f'{found.witness} has the weight of x{i + 1} at order {found.order} < {a}',
                              found.witness)
    return AxiomCheck(4, True, 'no cheaper semi-invariant in any weight class')


def _invariant(germ: NormalizedGerm) -> AxiomCheck:
    for mono in enumerate_by_weight(germ, 0, germ.mbar):
        if ord_of(mono, germ) == germ.mbar:
            return AxiomCheck(5, True, f'{mono} is invariant of order {germ.mbar}', mono)
    return AxiomCheck(5, False, f'no invariant monomial of order {germ.mbar}')


def validate(germ: NormalizedGerm) -> ValidationReport:
    r"""
    Check the normalization axioms of a germ:

    1. the weights follow the series pattern, with the coprimality conditions;
    2. ``ord(x_i) = wt(x_i) mod mbar`` and ``gcd(ord(x_i), mbar) = 1`` for ``i <= 3``;
    3. ``gcd(a1, a2, a3, a4) = 1``;
    4. no monomial of the weight of ``x_i`` has order below ``ord(x_i)``;
    5. some invariant monomial has order exactly ``mbar``.

    Failures are reported, not raised.
    """
    checks = (_series_pattern(germ), _congruences(germ), _parameter(germ), _minimality(germ), _invariant(germ))
    report = ValidationReport(checks)
    if not report.normalized:
        fail = report.first_failure()
        logging.getLogger(__name__).debug(f'{germ}: axiom ({fail.axiom}) fails: {fail.detail}')
    return report
