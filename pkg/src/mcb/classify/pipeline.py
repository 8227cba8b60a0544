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
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Optional, Union
from ..types import SearchExhausted, UnsupportedGerm
from ..conf import SearchCaps
from ..germ import NormalizedGerm, Series, structural_predicates, general_elephant_test, Elephant
from ..invariants import (compute_wP, compute_iP_lower, compute_iP_exact, IPKind, IPValue, SearchTrace,
                          InvariantReport, ip_contribution)
from ..invariants.budget import MAX_BUDGET
from .candidates import enumerate_candidates
from .canonical import canonical_key
from .involution import involution_stage
from .patterns import PatternTag, TheoremTag, pattern_tag, theorem_case


__all__ = ['Mode', 'Stage', 'Certificate', 'Survivor', 'Exclusion', 'SurvivorReport', 'classify', 'judge']


class Mode(Enum):
    STRICT = 'strict'
    r"""Only ``i_P >= 1`` is used; unconditionally sound."""

    BINOMIAL = 'binomial'
    r"""``i_P`` is bounded below by the binomial Jacobian search."""


class Stage(Enum):
    PREDICATES = 'predicates'
    INVOLUTION = 'involution'
    WP = 'wP'
    IP = 'iP'
    BUDGET = 'budget'


@dataclass(frozen=True)
class Certificate:
    r"""
    A machine-checkable reason for an exclusion or an inconclusive outcome.

    :ivar stage: the stage that decided.
    :ivar reason: human readable summary.
    :ivar data: the values the decision rests on.
    """
    stage: Stage
    reason: str
    data: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Survivor:
    germ: NormalizedGerm
    report: InvariantReport
    pattern: PatternTag
    theorem: TheoremTag


@dataclass(frozen=True)
class Exclusion:
    germ: NormalizedGerm
    certificate: Certificate


@dataclass(frozen=True)
class SurvivorReport:
    r"""
    The outcome of a bounded classification run. ``survivors``, ``excluded`` and ``inconclusive``
    partition the canonical candidates.
    """
    mbar: int
    d: int
    mode: Mode
    caps: SearchCaps
    survivors: tuple[Survivor, ...]
    excluded: tuple[Exclusion, ...]
    inconclusive: tuple[Exclusion, ...]

    @property
    def unmatched(self) -> tuple[Survivor, ...]:
        return tuple(s for s in self.survivors if s.theorem == TheoremTag.UNMATCHED)

    @property
    def candidate_count(self) -> int:
        return len(self.survivors) + len(self.excluded) + len(self.inconclusive)


Outcome = Union[Survivor, Exclusion, tuple[str, Exclusion]]


def _trace_data(trace: Optional[SearchTrace]) -> dict[str, Any]:
    if trace is None:
        return {}
    return {'generators': [str(g) for g in trace.generators], 'evaluated': trace.evaluated,
            'min': trace.best, 'cap': trace.cap, 'certified': trace.certified}


def _ip_value(germ: NormalizedGerm, mode: Mode, caps: SearchCaps,
              wp: Fraction) -> tuple[IPValue, Optional[IPValue], dict[str, Any]]:
    if mode == Mode.STRICT or germ.series == Series.EXCEPTIONAL:
        label = 'singular point' if mode == Mode.STRICT else 'singular point (no binomial bound for cAx/4)'
        return IPValue(IPKind.LOWER_BOUND, Fraction(1), label=label), None, {}
    ip = compute_iP_lower(germ, caps, wp)
    data = {'lower': _trace_data(ip.trace), 'witness': [str(g) for g in ip.witness], 'label': ip.label}
    exact = None
    if germ.is_cyclic_binomial:
        try:
            exact = compute_iP_exact(germ, caps, wp)
            data['exact'] = dict(_trace_data(exact.trace), iP=exact.value,
                                 witness=[str(g) for g in exact.witness])
        except (SearchExhausted, UnsupportedGerm) as e:
            data['exact'] = {'error': str(e)}
    return ip, exact, data


def judge(germ: NormalizedGerm, mode: Mode = Mode.STRICT, caps: Optional[SearchCaps] = None) -> Outcome:
    r"""
    Run one candidate through the exclusion stages.

    :return: a :class:`Survivor`, an :class:`Exclusion`, or ``('inconclusive', Exclusion)``.
    """
    caps = caps or SearchCaps()
    logger = logging.getLogger(__name__)
    preds = structural_predicates(germ)
    if not preds.passed:
        logger.debug(f'{germ}: excluded by predicates {preds.failures()}')
        return Exclusion(germ, Certificate(Stage.PREDICATES, 'failed ' + ', '.join(preds.failures()),
                                           {'failed': preds.failures(), 'mbar': germ.mbar, 'd': germ.d,
                                            'a3': germ.ords[2]}))
    if germ.mbar > 1 and general_elephant_test(germ) == Elephant.GOOD:
        ok, rows = involution_stage(germ)
        if not ok:
            logger.debug(f'{germ}: excluded by the involution table')
            return Exclusion(germ, Certificate(Stage.INVOLUTION, 'no involution quotient fits',
                                               {'rows': [str(r) for r in rows]}))
    try:
        wp, witness = compute_wP(germ, caps.weight_cap(germ.mbar))
    except SearchExhausted as e:
        logger.debug(f'{germ}: inconclusive, {e}')
        return 'inconclusive', Exclusion(germ, Certificate(Stage.WP, str(e), {'cap': e.cap}))
    ip, exact, ip_data = _ip_value(germ, mode, caps, wp)
    contribution = ip_contribution(ip, True)
    total = germ.anticanonical + wp + contribution
    data = {'anticanonical': germ.anticanonical, 'wP': wp, 'wP_witness': str(witness), 'iP': contribution,
            'iP_bound': ip.value, 'total': total, **ip_data}
    if total > MAX_BUDGET and ip.boundary_hit:
        # A cap-limited bound never excludes alone; i_P >= 1 or a certified exact i_P has to.
        certified = germ.anticanonical + wp + (exact.value if exact is not None else 1)
        if certified <= MAX_BUDGET:
            logger.debug(f'{germ}: inconclusive, cap-limited i_P bound {ip.value}')
            return 'inconclusive', Exclusion(germ, Certificate(
                Stage.IP, f'budget {total} > {MAX_BUDGET} rests on a cap-limited bound ({ip.label})',
                dict(data, certified_total=certified)))
    if total > MAX_BUDGET:
        stage = Stage.IP if ip.value is not None and ip.value > 1 else Stage.BUDGET
        reason = f'budget {total} > {MAX_BUDGET} ({ip.label})'
        if ip.boundary_hit:
            reason += f'; exact i_P {exact.value}' if exact is not None else '; i_P >= 1 suffices'
        logger.debug(f'{germ}: excluded, {reason}')
        return Exclusion(germ, Certificate(stage, reason, data))
    report = InvariantReport(germ, wp, witness, Fraction(germ.ords[2], germ.mbar), ip)
    return Survivor(germ, report, pattern_tag(germ), theorem_case(germ))


def _judge_args(args) -> Outcome:
    return judge(*args)


def _germ_key(item: Union[Survivor, Exclusion]):
    return canonical_key(item.germ)


def classify(mbar: int, d: int, mode: Mode = Mode.STRICT, caps: Optional[SearchCaps] = None,
             workers: Optional[int] = None, order_cap: Optional[int] = None,
             pair_cap: Optional[int] = None) -> SurvivorReport:
    r"""
    Enumerate the canonical candidates of ``(mbar, d)`` and run each through the stages
    structural predicates, involution table (good elephant, ``mbar > 1``), ``w_P``, ``i_P`` and budget.

    :param mode: how ``i_P`` is bounded.
    :param caps: search caps.
    :param workers: number of worker processes; the report does not depend on it.
    :return: the partition of the candidates.
    """
    caps = caps or SearchCaps()
    workers = workers if workers is not None else caps.workers
    candidates = list(enumerate_candidates(mbar, d, caps, order_cap, pair_cap))
    logging.getLogger(__name__).info(f'classify({mbar}, {d}, {mode.value}): {len(candidates)} candidates')
    if workers > 1 and len(candidates) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(_judge_args, [(g, mode, caps) for g in candidates]))
    else:
        outcomes = [judge(g, mode, caps) for g in candidates]
    survivors, excluded, inconclusive = [], [], []
    for outcome in outcomes:
        if isinstance(outcome, Survivor):
            survivors.append(outcome)
        elif isinstance(outcome, Exclusion):
            excluded.append(outcome)
        else:
            inconclusive.append(outcome[1])
    return SurvivorReport(mbar, d, mode, caps, tuple(sorted(survivors, key=_germ_key)),
                          tuple(sorted(excluded, key=_germ_key)), tuple(sorted(inconclusive, key=_germ_key)))
