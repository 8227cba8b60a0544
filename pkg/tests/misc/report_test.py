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
import json
from fractions import Fraction
import pytest
from mcb.types import GermDocumentError, GermStructureError, GermValidationError
from mcb.calculus import Monomial
from mcb.germ import EquationKind
from mcb.invariants import compute_wP, invariant_report, global_check
from mcb.registry import builtin_germ, germ_names
from mcb.report import (SCHEMA_VERSION, rational, jsonable, germ_to_dict, germ_from_dict, parse_germ_text,
                        parse_germ_file, invariant_report_to_dict, global_report_to_dict, ReportDocument)


PATTERN_I = {'mbar': 4, 'd': 2, 'series': 'main', 'weights': [1, 7, 5, 0], 'ords': [1, 3, 5, 4],
             'equation': {'binomial': [1, 1, 0, 0], 'n': 1}}


class TestGermDocument:
    @staticmethod
    def test_pattern_i():
        germ = parse_germ_text(json.dumps(PATTERN_I))
        assert germ.mbar == 4 and germ.m == 8
        assert germ.weight_values == (1, 7, 5, 0)
        assert germ.equation.kind == EquationKind.CYCLIC_BINOMIAL
        assert germ.equation.psi0 == Monomial.parse('x1*x2')
        assert compute_wP(germ)[0] == Fraction(3, 4)

    @staticmethod
    def test_builtin():
        for name in germ_names():
            germ = builtin_germ(name)
            assert germ_from_dict(json.loads(json.dumps(germ_to_dict(germ)))) == germ, name

    @staticmethod
    def test_defaults():
        doc = {k: v for k, v in PATTERN_I.items() if k not in ('series', 'equation')}
        germ = germ_from_dict(doc)
        assert germ.equation.kind == EquationKind.GENERAL
        assert germ.series.value == 'main'

    @staticmethod
    def test_malformed():
        with pytest.raises(GermDocumentError, match='ords'):
            parse_germ_text(json.dumps({k: v for k, v in PATTERN_I.items() if k != 'ords'}))
        with pytest.raises(GermDocumentError, match='colour'):
            germ_from_dict(dict(PATTERN_I, colour='red'))
        with pytest.raises(GermDocumentError):
            germ_from_dict(dict(PATTERN_I, mbar='4'))
        with pytest.raises(GermDocumentError):
            germ_from_dict(dict(PATTERN_I, weights=[1, 7, 5]))
        with pytest.raises(GermDocumentError):
            germ_from_dict(dict(PATTERN_I, series='other'))
        with pytest.raises(GermDocumentError):
            germ_from_dict(dict(PATTERN_I, equation={'binomial': [1, 1, 0, 1]}))
        with pytest.raises(GermDocumentError):
            germ_from_dict([PATTERN_I])
        with pytest.raises(GermDocumentError):
            parse_germ_text('{"mbar": 4,')

    @staticmethod
    def test_invalid():
        with pytest.raises((GermValidationError, GermStructureError)):
            parse_germ_text(json.dumps(dict(PATTERN_I, weights=[1, 7, 6, 0])))
        with pytest.raises(GermStructureError):
            germ_from_dict(dict(PATTERN_I, ords=[0, 3, 5, 4]))

    @staticmethod
    def test_file(tmp_path):
        path = tmp_path / 'germ.json'
        path.write_text(json.dumps(PATTERN_I))
        assert parse_germ_file(str(path)).d == 2


class TestReportDocument:
    @staticmethod
    def test_jsonable():
        assert rational(Fraction(3, 4)) == {'num': 3, 'den': 4}
        assert rational(2) == {'num': 2, 'den': 1}
        assert jsonable({'w': Fraction(1, 2), 'x': (Monomial.parse('x1^2'), None)}) == {
            'w': {'num': 1, 'den': 2}, 'x': ['x1^2', None]}
        with pytest.raises(TypeError):
            jsonable([0.5])

    @staticmethod
    def test_invariants():
        report = invariant_report(builtin_germ('main-2/ii'))
        doc = invariant_report_to_dict(report)
        assert doc['wP'] == {'num': 3, 'den': 2}
        assert doc['iP']['kind'] == 'exact'
        assert doc['iP']['value'] == {'num': 2, 'den': 1}
        assert doc['deg-gr0-omega'] == {'num': -2, 'den': 1}

    @staticmethod
    def test_global():
        doc = global_report_to_dict(global_check([invariant_report(builtin_germ('main-1/iii'))], extra_gorenstein=1))
        assert doc['total'] == {'num': 4, 'den': 1}
        assert doc['points'] == 2
        assert doc['passed']

    @staticmethod
    def test_dumps():
        doc = ReportDocument('duval', {'cyclic': [8, 3]}, {'chain': [-3, -3], 'w': Fraction(1, 3)}, text=['chain'])
        out = json.loads(doc.dumps())
        assert out == {'schema-version': SCHEMA_VERSION, 'command': 'duval', 'inputs': {'cyclic': [8, 3]},
                       'results': {'chain': [-3, -3], 'w': {'num': 1, 'den': 3}}, 'passed': True}
        assert doc.dumps() == doc.dumps()
        assert doc.render() == 'chain\nPASSED'
        doc.passed = False
        assert doc.render().endswith('FAILED')
