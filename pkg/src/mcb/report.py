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
import dataclasses
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Optional
from .types import GermDocumentError
from .calculus import Monomial, Residue, Binomial
from .germ import NormalizedGerm, Series, Equation, EquationKind, validate
from .invariants import InvariantReport, GlobalReport, IPValue, SearchTrace
from .classify import SurvivorReport, Survivor, Exclusion


__all__ = ['SCHEMA_VERSION', 'rational', 'jsonable', 'germ_to_dict', 'germ_from_dict', 'parse_germ_text',
           'parse_germ_file', 'ip_to_dict', 'invariant_report_to_dict', 'global_report_to_dict',
           'survivor_report_to_dict', 'ReportDocument']


SCHEMA_VERSION = 1

GERM_FIELDS = {'mbar', 'd', 'series', 'weights', 'ords', 'equation'}
REQUIRED_GERM_FIELDS = ('mbar', 'd', 'weights', 'ords')


def rational(value: Fraction) -> dict[str, int]:
    value = Fraction(value)
    return {'num': value.numerator, 'den': value.denominator}


def jsonable(obj: Any) -> Any:
    r"""
    Convert a result value to plain JSON types. Rationals become ``{num, den}`` pairs; no float is produced.
    """
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return rational(obj)
    if isinstance(obj, float):
        raise TypeError('Floating point values are not serialized')
    if isinstance(obj, Residue):
        return int(obj)
    if isinstance(obj, (Monomial, Binomial)):
        return str(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, NormalizedGerm):
        return germ_to_dict(obj)
    if isinstance(obj, IPValue):
        return ip_to_dict(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    return str(obj)


def _equation_to_dict(eq: Equation) -> Any:
    if eq.kind == EquationKind.CYCLIC_BINOMIAL:
        return {'binomial': list(eq.psi0.exponents), 'n': eq.n}
    return eq.kind.value


def germ_to_dict(germ: NormalizedGerm) -> dict[str, Any]:
    return {'mbar': germ.mbar, 'd': germ.d, 'series': germ.series.value,
            'weights': list(germ.weight_values), 'ords': list(germ.ords),
            'equation': _equation_to_dict(germ.equation)}


def _int(doc: dict, key: str) -> int:
    value = doc[key]
    if not isinstance(value, int) or isinstance(value, bool):
        raise GermDocumentError(f'Field {key} must be an integer, got {value!r}')
    return value


def _int_list(doc: dict, key: str, length: int) -> tuple[int, ...]:
    value = doc[key]
    if (not isinstance(value, list) or len(value) != length
            or any(not isinstance(v, int) or isinstance(v, bool) for v in value)):
        raise GermDocumentError(f'Field {key} must be a list of {length} integers, got {value!r}')
    return tuple(value)


def _equation_from_doc(value: Any) -> Equation:
    if value in (None, EquationKind.GENERAL.value):
        return Equation.general()
    if value == EquationKind.SMOOTH.value:
        return Equation.smooth()
    if isinstance(value, dict):
        extra = set(value) - {'binomial', 'n'}
        if extra or 'binomial' not in value:
            raise GermDocumentError(f'Equation must be {{binomial: [4 exponents], n}}, got {value!r}')
        exps = _int_list(value, 'binomial', 4)
        n = _int(value, 'n') if 'n' in value else 1
        if exps[3] != 0 or any(e < 0 for e in exps) or n < 1:
            raise GermDocumentError(f'Invalid binomial equation: {value!r}')
        return Equation.binomial(Monomial(exps), n)
    raise GermDocumentError(f'Unknown equation: {value!r}')


def germ_from_dict(doc: Any) -> NormalizedGerm:
    r"""
    Build a germ from a document. The germ is not validated.

    :raises GermDocumentError: on a missing, unknown or mistyped field.
    :raises GermStructureError: when the fields do not form a germ.
    """
    if not isinstance(doc, dict):
        raise GermDocumentError('A germ document must be an object')
    unknown = set(doc) - GERM_FIELDS
    if unknown:
        raise GermDocumentError(f'Unknown field(s): {", ".join(sorted(unknown))}')
    for key in REQUIRED_GERM_FIELDS:
        if key not in doc:
            raise GermDocumentError(f'Missing field: {key}')
    try:
        series = Series(doc.get('series', Series.MAIN.value))
    except ValueError:
        raise GermDocumentError(f'Unknown series: {doc["series"]!r}') from None
    return NormalizedGerm(_int(doc, 'mbar'), _int(doc, 'd'), series, _int_list(doc, 'weights', 4),
                          _int_list(doc, 'ords', 4), _equation_from_doc(doc.get('equation')))


def parse_germ_text(text: str) -> NormalizedGerm:
    r"""
    Parse and validate a germ document.

    :raises GermDocumentError: the document is malformed.
    :raises GermStructureError: the fields do not form a germ.
    :raises GermValidationError: a normalized chart axiom fails.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GermDocumentError(f'Not a JSON document: {e}') from e
    germ = germ_from_dict(doc)
    validate(germ).raise_for_failure()
    return germ


def parse_germ_file(path: str) -> NormalizedGerm:
    with open(path) as f:
        return parse_germ_text(f.read())


def _trace_to_dict(trace: Optional[SearchTrace]) -> Optional[dict[str, Any]]:
    if trace is None:
        return None
    return {'generators': [str(g) for g in trace.generators], 'evaluated': trace.evaluated,
            'min': trace.best, 'cap': trace.cap, 'certified': trace.certified}


def ip_to_dict(ip: IPValue) -> dict[str, Any]:
    return {'kind': ip.kind.value, 'value': None if ip.value is None else rational(ip.value),
            'witness': [str(g) for g in ip.witness], 'trace': _trace_to_dict(ip.trace),
            'cap-limited': ip.boundary_hit, 'label': ip.label}


def invariant_report_to_dict(report: InvariantReport) -> dict[str, Any]:
    return {'germ': germ_to_dict(report.germ), 'anticanonical': rational(report.anticanonical),
            'wP': rational(report.wp), 'wP-witness': None if report.wp_witness is None else str(report.wp_witness),
            'FC': rational(report.fc), 'iP': ip_to_dict(report.ip),
            'iP-alternatives': [ip_to_dict(ip) for ip in report.ip_alternatives],
            'deg-gr0-omega': rational(report.deg_gr0_omega)}


def global_report_to_dict(report: GlobalReport) -> dict[str, Any]:
    return {'anticanonical': rational(report.anticanonical), 'sum-wP': rational(report.sum_wp),
            'sum-iP': rational(report.sum_ip), 'total': rational(report.total),
            'deg-gr0-omega': rational(report.deg_gr0_omega), 'deg-gr1-O': rational(report.deg_gr1_o),
            'points': report.point_count, 'extra-gorenstein': report.extra_gorenstein,
            'checks': report.checks(), 'passed': report.passed}


def _survivor_to_dict(s: Survivor) -> dict[str, Any]:
    return {'germ': germ_to_dict(s.germ), 'pattern': s.pattern.value, 'theorem': s.theorem.value,
            'wP': rational(s.report.wp), 'iP': ip_to_dict(s.report.ip)}


def _exclusion_to_dict(e: Exclusion) -> dict[str, Any]:
    return {'germ': germ_to_dict(e.germ), 'stage': e.certificate.stage.value,
            'reason': e.certificate.reason, 'data': jsonable(e.certificate.data)}


def survivor_report_to_dict(report: SurvivorReport) -> dict[str, Any]:
    return {'mbar': report.mbar, 'd': report.d, 'mode': report.mode.value, 'caps': report.caps.as_dict(),
            'candidates': report.candidate_count,
            'survivors': [_survivor_to_dict(s) for s in report.survivors],
            'excluded': [_exclusion_to_dict(e) for e in report.excluded],
            'inconclusive': [_exclusion_to_dict(e) for e in report.inconclusive],
            'unmatched': len(report.unmatched)}


@dataclasses.dataclass
class ReportDocument:
    r"""
    The machine-readable outcome of one command.

    :ivar passed: every check in ``results`` passed; decides the exit code.
    :ivar text: the plain text rendering, one entry per line.
    """
    command: str
    inputs: dict[str, Any]
    results: Any
    passed: bool = True
    text: list[str] = dataclasses.field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {'schema-version': SCHEMA_VERSION, 'command': self.command, 'inputs': jsonable(self.inputs),
                'results': jsonable(self.results), 'passed': self.passed}

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def render(self) -> str:
        lines = list(self.text)
        lines.append('PASSED' if self.passed else 'FAILED')
        return '\n'.join(lines)
