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
import pytest
from mcb.types import FamilyError, FamilyParseError
from mcb.families import (CyclotomicField, builtin_examples, parse_family, parse_family_text, load_family,
                          check_ideal_equivariance, central_fiber_components)


QUOTIENT_A1 = '''
order 4
name quotient-A1
# the Z/4 action swapping x and y
gen x*y - u*t^2
gen z^2 - u*(x^2 + y^2) - v*t^2
row 0, 1, 0, 0
row -1, 0, 0, 0
row 0, 0, e, 0
row 0, 0, 0, 1
base -1, 0
base 0, -1
'''


class TestParseFamily:
    @staticmethod
    def test_quotient():
        fam = parse_family(QUOTIENT_A1)
        assert fam.name == 'quotient-A1'
        assert fam.order == 4
        assert fam.generators == builtin_examples('quotient-A1').generators
        assert fam.action == builtin_examples('quotient-A1').action
        assert check_ideal_equivariance(fam).equivariant
        assert central_fiber_components(fam).count == 2

    @staticmethod
    def test_inverse_root():
        fam = parse_family(QUOTIENT_A1.replace('row 0, 0, e, 0', 'row 0, 0, e^-1, 0').replace('name quotient-A1', ''),
                           name='inverted')
        assert fam.name == 'inverted'
        assert fam.action.fiber[2][2] == -CyclotomicField(4).root()
        assert check_ideal_equivariance(fam).equivariant

    @staticmethod
    def test_text():
        doc = parse_family_text('order 2\ngen x^2 - u*z^2\nrow 1, 0, 0, 0')
        assert doc.order == 2
        assert doc.name is None
        assert len(doc.generators) == 1
        assert doc.rows == [[1, 0, 0, 0]]
        assert doc.base == []

    @staticmethod
    def test_missing():
        with pytest.raises(FamilyParseError, match='order'):
            parse_family(QUOTIENT_A1.replace('order 4', ''))
        with pytest.raises(FamilyParseError, match='gen'):
            parse_family('\n'.join(line for line in QUOTIENT_A1.splitlines() if not line.startswith('gen')))
        with pytest.raises(FamilyParseError):
            parse_family(QUOTIENT_A1.replace('row 0, 0, 0, 1', ''))
        with pytest.raises(FamilyParseError):
            parse_family(QUOTIENT_A1.replace('base 0, -1', ''))

    @staticmethod
    def test_malformed():
        with pytest.raises(FamilyParseError, match='Negative power'):
            parse_family_text('gen x^-1*y')
        with pytest.raises(FamilyParseError, match='Duplicate'):
            parse_family_text('order 4\norder 8')
        with pytest.raises(FamilyParseError):
            parse_family_text('gen x y')
        with pytest.raises(FamilyParseError):
            parse_family_text('gen x*y +')
        with pytest.raises(FamilyParseError):
            parse_family(QUOTIENT_A1.replace('order 4', 'order 0'))

    @staticmethod
    def test_not_homogeneous():
        with pytest.raises(FamilyError):
            parse_family(QUOTIENT_A1.replace('gen x*y - u*t^2', 'gen x*y - u*t'))

    @staticmethod
    def test_load(tmp_path):
        path = tmp_path / 'family.txt'
        path.write_text(QUOTIENT_A1.replace('name quotient-A1', ''))
        fam = load_family(str(path))
        assert fam.name == str(path)
        assert fam.order == 4
        with pytest.raises(OSError):
            load_family(str(tmp_path / 'missing.txt'))
