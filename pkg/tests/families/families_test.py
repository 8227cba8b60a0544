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
import sympy
from sympy import QQ
from hypothesis import given, settings, strategies as st
from mcb.types import FamilyError, UnsupportedShape
from mcb.families import (EPS, X, Y, Z, T, U, VARS, CyclotomicField, Action, EquivariantFamily, FAMILIES,
                          apply_action, action_order, builtin_examples, family_names, check_ideal_equivariance,
                          central_fiber_components, linear_factors, fixed_points_check, parse_point, rank, nullspace,
                          rref, solve, reduce_against, matpow, identity, to_domain_matrix, from_domain_matrix)


ORIGIN = (0, 0, 0, 1, 0, 0)


@st.composite
def polynomials(draw, with_eps=False, top=2):
    terms = draw(st.lists(st.tuples(st.integers(-3, 3), st.integers(0, 9), st.tuples(*[st.integers(0, top)] * 6)),
                          min_size=1, max_size=4))
    ret = sympy.Integer(0)
    for coeff, k, exps in terms:
        mono = sympy.Mul(*(v ** e for v, e in zip(VARS, exps)))
        ret += coeff * (EPS ** k if with_eps else 1) * mono
    return ret


class TestCyclotomic:
    @staticmethod
    def test_roots():
        field = CyclotomicField(8)
        e = field.root()
        assert field.degree == 4
        assert e ** 8 == 1
        assert e ** 4 == -1
        assert field.root(-2) == -(e ** 2)
        assert e.coefficients() == (0, 1, 0, 0)
        assert e ** -1 == e ** 7
        assert (1 + e) * (1 + e).inverse() == 1
        assert (e ** 2 + 1) / (e ** 2 + 1) == field.one

    @staticmethod
    def test_field():
        assert CyclotomicField(4) == CyclotomicField(4)
        assert CyclotomicField(4) != CyclotomicField(8)
        assert CyclotomicField(2).root() == -1
        assert CyclotomicField(1).root() == 1
        with pytest.raises(FamilyError):
            CyclotomicField(0)
        with pytest.raises(FamilyError):
            CyclotomicField(4).reduce_scalar(X + 1)
        with pytest.raises(ZeroDivisionError):
            CyclotomicField(4).zero.inverse()

    @staticmethod
    def test_reduce():
        field = CyclotomicField(4)
        assert field.reduce(EPS ** 2 * X) == -X
        assert field.reduce(EPS ** -1 * Y) == -EPS * Y
        assert field.reduce((EPS ** 2 + 1) * Z) == 0

    @staticmethod
    @settings(max_examples=200, deadline=None)
    @given(n=st.integers(1, 12), poly=polynomials(with_eps=True))
    def test_reduce_idempotent(n, poly):
        field = CyclotomicField(n)
        once = field.reduce(poly)
        assert sympy.expand(field.reduce(once) - once) == 0

    @staticmethod
    @settings(max_examples=200, deadline=None)
    @given(n=st.integers(1, 12), k=st.integers(-30, 30))
    def test_root_power(n, k):
        field = CyclotomicField(n)
        assert field.root(k) ** n == 1
        assert field.root(k) * field.root(-k) == 1
        assert field.root(k) == field.root(1) ** k


class TestFamilies:
    @staticmethod
    def test_names():
        assert family_names() == ['elliptic-A3', 'quotient-A1', 'cAx4-family', 'multiple-fiber', 'two-nodes']
        with pytest.raises(FamilyError):
            builtin_examples('nope')
        with pytest.raises(FamilyError):
            builtin_examples('two-nodes', 2)
        with pytest.raises(FamilyError):
            builtin_examples('cAx4-family', 0)
        fam = builtin_examples('cAx4-family', 2)
        assert fam.k == 2
        assert sympy.Poly(fam.generators[0], U).degree() == 5
        assert builtin_examples('cAx4-family').k == 1

    @staticmethod
    def test_action_order():
        for name in FAMILIES:
            fam = builtin_examples(name)
            assert action_order(fam) == fam.order, name

    @staticmethod
    @settings(max_examples=200, deadline=None)
    @given(name=st.sampled_from(list(FAMILIES)), poly=polynomials(top=1))
    def test_action_has_order(name, poly):
        fam = builtin_examples(name)
        cur = poly
        for _ in range(fam.order):
            cur = apply_action(cur, fam.action)
        assert sympy.expand(cur - fam.field.reduce(poly)) == 0

    @staticmethod
    def test_malformed():
        field = CyclotomicField(4)
        action = builtin_examples('quotient-A1').action
        with pytest.raises(FamilyError):
            EquivariantFamily('bad', 8, (X * Y,), action)
        with pytest.raises(FamilyError):
            EquivariantFamily('bad', 4, (X * Y - T,), action)
        with pytest.raises(FamilyError):
            EquivariantFamily('bad', 4, (), action)
        with pytest.raises(FamilyError):
            EquivariantFamily('bad', 4, (X * Y,), Action.diagonal(field, (1, 1, 1, 0), (1, 1)))
        with pytest.raises(FamilyError):
            Action.from_rows(field, [[1, 0], [0, 1]], [[1, 0], [0, 1]])

    @staticmethod
    def test_action_power():
        action = builtin_examples('elliptic-A3').action
        assert not action.power(4).is_identity()
        assert action.power(4).base == action.power(0).base
        assert action.power(8).is_identity()
        assert apply_action(X, action) == -EPS * Z


class TestEquivariance:
    @staticmethod
    def test_elliptic():
        rep = check_ideal_equivariance(builtin_examples('elliptic-A3'))
        field = CyclotomicField(8)
        assert rep.equivariant
        assert rep.matrix[0][0].is_zero() and rep.matrix[1][1].is_zero()
        assert rep.matrix[0][1] == field.root(-2)
        assert rep.matrix[1][0] == -(field.root(2))
        assert rep.matrix_order_ok()

    @staticmethod
    def test_sign_changes():
        for name in ('quotient-A1', 'cAx4-family', 'multiple-fiber', 'two-nodes'):
            rep = check_ideal_equivariance(builtin_examples(name))
            assert rep.equivariant, name
            assert rep.matrix_order_ok(), name
        rep = check_ideal_equivariance(builtin_examples('quotient-A1'))
        assert rep.matrix[0][0] == -1 and rep.matrix[1][1] == -1

    @staticmethod
    def test_not_stable():
        fam = builtin_examples('quotient-A1')
        bad = EquivariantFamily('bad', 4, (fam.generators[0], fam.generators[1] + X * Z), fam.action)
        rep = check_ideal_equivariance(bad)
        assert not rep.equivariant
        assert rep.matrix_order_ok() is None
        assert rep.residuals[0] == 0
        assert rep.residuals[1] != 0
        assert 'residual' in str(rep)


class TestFiber:
    @staticmethod
    def test_counts():
        for name, info in FAMILIES.items():
            assert central_fiber_components(builtin_examples(name)).count == info.fiber_count, name

    @staticmethod
    def test_elliptic():
        dec = central_fiber_components(builtin_examples('elliptic-A3'))
        assert dec.common_point == (0, 0, 0, 1)
        assert all(c.dimension == 1 for c in dec.components)
        assert not any(c.multiple for c in dec.components)

    @staticmethod
    def test_multiple():
        dec = central_fiber_components(builtin_examples('multiple-fiber'))
        assert dec.components[0].multiple
        assert dec.notes

    @staticmethod
    def test_linear_factors():
        assert len(linear_factors(X ** 2 - Y ** 2, CyclotomicField(2))) == 2
        assert linear_factors(X ** 2, CyclotomicField(2)) == [(X, 2)]
        assert len(linear_factors(X ** 2 + Y ** 2, CyclotomicField(4))) == 2
        with pytest.raises(UnsupportedShape):
            linear_factors(X ** 2 + Y ** 2, CyclotomicField(2))

    @staticmethod
    def test_unsupported():
        action = builtin_examples('two-nodes').action
        fam = EquivariantFamily('conic', 2, (X ** 2 + Y ** 2 + Z ** 2 - U * T ** 2,), action)
        with pytest.raises(UnsupportedShape):
            central_fiber_components(fam)


class TestFixed:
    @staticmethod
    def test_origin():
        for name in FAMILIES:
            rep = fixed_points_check(builtin_examples(name), [ORIGIN])
            res = rep.results[0]
            assert res.fixed and res.on_family, name
            assert res.jacobian_rank == (1 if name == 'cAx4-family' else 2), name

    @staticmethod
    def test_hyperplane():
        fam = builtin_examples('elliptic-A3')
        assert not fixed_points_check(fam, ['t=0']).passed
        rep = fixed_points_check(fam, ['t=0', '0,0,0,1;0,0'], power=4)
        assert rep.base_identity
        assert rep.passed
        assert fixed_points_check(builtin_examples('multiple-fiber'), ['t = 0']).passed

    @staticmethod
    def test_eigenspaces():
        rep = fixed_points_check(builtin_examples('two-nodes'), [])
        assert [(e.exponent, e.dimension) for e in rep.eigenspaces] == [(0, 1), (1, 3)]

    @staticmethod
    def test_points():
        fam = builtin_examples('two-nodes')
        res = fixed_points_check(fam, [(1, 0, 0, 0, 0, 0)]).results[0]
        assert res.fixed and not res.on_family
        assert not fixed_points_check(fam, [(1, 0, 0, 0, 0, 0)]).passed
        res = fixed_points_check(fam, [(0, 0, 0, 0, 0, 0)]).results[0]
        assert not res.fixed

    @staticmethod
    def test_parse_point():
        assert parse_point('0,0,0,1;0,0') == (0, 0, 0, 1, 0, 0)
        assert parse_point('1, e, 0, 0; 0, 0')[1] == EPS
        with pytest.raises(ValueError):
            parse_point('0,0,0,1')
        with pytest.raises(ValueError):
            parse_point('0,0,1;0,0')


class TestLinalg:
    @staticmethod
    def test_rank_nullspace():
        field = CyclotomicField(4)
        e = field.root()
        rows = [[field.one, e, field.zero], [e, -field.one, field.zero]]
        assert rank(rows) == 1
        basis = nullspace(rows, field, 3)
        assert len(basis) == 2
        for vec in basis:
            assert all(sum((a * b for a, b in zip(row, vec)), start=field.zero) == 0 for row in rows)

    @staticmethod
    def test_domain():
        assert CyclotomicField(2).domain == QQ
        field = CyclotomicField(8)
        assert field.domain.is_AlgebraicField
        e = field.root()
        mat = to_domain_matrix([[field.one, e]])
        assert mat.domain == field.domain
        assert mat.shape == (1, 2)
        assert from_domain_matrix(mat, field) == [[field.one, e]]
        assert to_domain_matrix([], field, 3).shape == (0, 3)

    @staticmethod
    def test_normalized_nullspace():
        field = CyclotomicField(4)
        e = field.root()
        assert nullspace([[field.one, e, field.zero]], field, 3) == [[-e, field.one, field.zero],
                                                                     [field.zero, field.zero, field.one]]
        assert nullspace([], field, 2) == identity(field, 2)

    @staticmethod
    def test_rref_solve():
        field = CyclotomicField(4)
        e, one = field.root(), field.one
        red, pivots = rref([[e, one], [-one, e]])
        assert pivots == [0]
        assert red == [[one, -e]]
        assert reduce_against(red, pivots, [one, one]) == [field.zero, one + e]
        assert reduce_against(red, pivots, [e, one]) == [field.zero, field.zero]
        assert solve([[one, e], [e, one]], [one + e, one + e], field) == [one, one]
        assert solve([[one, e]], [one, one], field) is None

    @staticmethod
    def test_matpow():
        field = CyclotomicField(8)
        e = field.root()
        swap = [[field.zero, e], [e, field.zero]]
        assert matpow(swap, 0) == identity(field, 2)
        assert matpow(swap, 2) == [[e ** 2, field.zero], [field.zero, e ** 2]]
        assert matpow(swap, 8) == identity(field, 2)
