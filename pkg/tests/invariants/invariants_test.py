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
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
import pytest
from mcb.types import MonomialError, SearchExhausted, UnsupportedGerm
from mcb.calculus import Monomial, Binomial, ord_of, weight_of
from mcb.germ import NormalizedGerm
from mcb.registry import builtin_germ
from mcb.classify import enumerate_candidates
from mcb.invariants import (compute_wP, compute_fc, jacobian_ord, compute_iP_exact, compute_iP_lower, IPKind,
                            IPValue, invariant_report, global_check, ip_contribution)


x1, x2, x3, x4 = (Monomial.var(i) for i in range(1, 5))


def det3(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def invariants_upto(germ, cap):
    ret = []
    for exps in product(*(range(cap // a + 1) for a in germ.ords[:3])):
        mono = Monomial(exps + (0,))
        if not mono.is_unit() and ord_of(mono, germ) <= cap and weight_of(mono, germ).is_zero():
            ret.append(mono)
    return ret


def lower_oracle(germ, cap):
    # every triple of simple invariants, no pruning
    invs = invariants_upto(germ, cap)
    simple = [mono for mono in invs
              if not any(weight_of(div, germ).is_zero() for div in mono.proper_divisors())]
    best = None
    for triple in combinations(simple, 3):
        if det3([mono.ex4() for mono in triple]) == 0:
            continue
        if not any(all(triple[k].exponents[p[k]] > 0 for k in range(3)) for p in permutations(range(3))):
            continue
        total = sum(ord_of(mono, germ) for mono in triple) - sum(germ.ords[:3])
        best = total if best is None else min(best, total)
    return best


def exact_oracle(germ, cap):
    # every pair of vanishing invariant generators independent of the cover equation
    psi0 = germ.equation.psi0
    gens = [mono for mono in invariants_upto(germ, cap) if ord_of(mono, germ) % germ.ords[3] == 0]
    best = None
    for a, b in combinations(gens, 2):
        if det3([psi0.ex4(), a.ex4(), b.ex4()]) == 0:
            continue
        total = ord_of(a, germ) + ord_of(b, germ)
        best = total if best is None else min(best, total)
    return None if best is None else best + ord_of(psi0, germ) - sum(germ.ords[:3])


@lru_cache(maxsize=1)
def cyclic_candidates():
    ret = []
    for mbar, d in product(range(2, 9), (2, 4)):
        ret.extend(g for g in enumerate_candidates(mbar, d) if g.is_cyclic_binomial)
    return tuple(ret)


class TestWP:
    @staticmethod
    def test_values():
        assert compute_wP(builtin_germ('pattern-i-m4')) == (Fraction(3, 4), x1 ** 3)
        assert compute_wP(builtin_germ('main-2/ii')) == (Fraction(3, 2), x1 ** 2 * x3)
        assert compute_wP(builtin_germ('cAx4')) == (Fraction(1, 2), x1)
        assert compute_wP(builtin_germ('main-1/iii'))[0] == Fraction(1, 2)
        assert compute_wP(builtin_germ('main-2/i'))[0] == Fraction(1, 2)

    @staticmethod
    def test_gorenstein():
        assert compute_wP(NormalizedGerm.smooth_point()) == (Fraction(0), None)

    @staticmethod
    def test_cap():
        with pytest.raises(SearchExhausted) as e:
            compute_wP(builtin_germ('pattern-i-m4'), ord_cap=2)
        assert e.value.cap == 2

    @staticmethod
    def test_fc():
        assert compute_fc(builtin_germ('cAx4')) == Fraction(1, 2)
        assert compute_fc(builtin_germ('pattern-i-m4')) == Fraction(5, 4)


class TestJacobian:
    @staticmethod
    def test_independent():
        germ = builtin_germ('main-1/iii')
        triple = [Binomial(x1 * x2, 1), Binomial(x2 * x3, 1), Binomial(x1 ** 4, 2)]
        assert jacobian_ord(triple, germ) == 5

    @staticmethod
    def test_dependent():
        germ = builtin_germ('main-1/iii')
        triple = [Binomial(x1 * x2, 1), Binomial(x2 * x3, 1), Binomial(x1 ** 2 * x2 ** 2, 2)]
        assert jacobian_ord(triple, germ) is None

    @staticmethod
    def test_errors():
        germ = builtin_germ('main-1/iii')
        with pytest.raises(MonomialError):
            jacobian_ord([Binomial(x1 * x2, 1), Binomial(x2 * x3, 1)], germ)
        with pytest.raises(MonomialError):
            jacobian_ord([Binomial(x1 * x2, 1), Binomial(x2 * x3, 1), Binomial(x1 * x3, 1)], germ)


class TestExact:
    @staticmethod
    def test_values():
        assert compute_iP_exact(builtin_germ('main-1/iii')).value == 2
        assert compute_iP_exact(builtin_germ('main-2/ii')).value == 2
        for mbar in (4, 6, 8, 10):
            ip = compute_iP_exact(builtin_germ(f'main-1/iv/m{mbar}'))
            assert ip.kind == IPKind.EXACT
            assert ip.value == 2

    @staticmethod
    def test_trace():
        ip = compute_iP_exact(builtin_germ('main-2/i'))
        assert ip.value == 4
        assert ip.is_exact
        assert ip.trace.best == 9
        assert ip.trace.cap == 9
        assert ip.trace.certified
        assert ip.witness[0] == Binomial(x1 * x2, 1)
        assert str(ip) == '4'

    @staticmethod
    def test_unsupported():
        with pytest.raises(UnsupportedGerm):
            compute_iP_exact(builtin_germ('cAx4'))
        with pytest.raises(UnsupportedGerm):
            compute_iP_exact(builtin_germ('pattern-ii-m4'))

    @staticmethod
    def test_oracle():
        for name in ('main-1/iii', 'main-2/i', 'main-2/ii', 'pattern-i-m4', 'main-1/iv/m6'):
            germ = builtin_germ(name)
            ip = compute_iP_exact(germ)
            assert ip.trace.best == exact_oracle(germ, ip.trace.cap), name


class TestLower:
    @staticmethod
    def test_values():
        ip = compute_iP_lower(builtin_germ('pattern-ii-m4'))
        assert ip.kind == IPKind.LOWER_BOUND
        assert ip.value == 2
        assert ip.trace.best == 11
        assert str(ip) == '>= 2'
        assert compute_iP_lower(builtin_germ('main-2/i')).value == 4
        assert compute_iP_lower(builtin_germ('pattern-i-m4')).value == 2
        assert compute_iP_lower(builtin_germ('main-2/ii')).value == 2

    @staticmethod
    def test_special():
        assert compute_iP_lower(NormalizedGerm.smooth_point()).value == 0
        with pytest.raises(UnsupportedGerm):
            compute_iP_lower(builtin_germ('cAx4'))

    @staticmethod
    def test_oracle():
        for name in ('main-1/iii', 'main-2/i', 'main-2/ii', 'pattern-i-m4', 'pattern-ii-m4'):
            germ = builtin_germ(name)
            ip = compute_iP_lower(germ)
            assert not ip.boundary_hit
            assert ip.trace.best == lower_oracle(germ, ip.trace.cap), name

    @staticmethod
    def test_lower_below_exact():
        compared = 0
        for germ in cyclic_candidates():
            try:
                exact = compute_iP_exact(germ)
            except SearchExhausted:
                continue
            assert compute_iP_lower(germ).value <= exact.value, str(germ)
            compared += 1
        assert compared > 0


class TestReport:
    @staticmethod
    def test_exact_report():
        report = invariant_report(builtin_germ('main-2/i'))
        assert report.ip.is_exact
        assert report.ip.value == 4
        assert [ip.value for ip in report.ip_alternatives] == [4]
        assert report.anticanonical == Fraction(1, 2)
        assert report.deg_gr0_omega == -1
        assert report.singular

    @staticmethod
    def test_lower_report():
        report = invariant_report(builtin_germ('main-2/i'), exact=False)
        assert report.ip.kind == IPKind.LOWER_BOUND
        assert report.ip_alternatives == ()

    @staticmethod
    def test_exceptional():
        report = invariant_report(builtin_germ('cAx4'))
        assert report.ip.kind == IPKind.UNSUPPORTED
        assert report.wp == Fraction(1, 2)
        assert global_check([report]).total == 2

    @staticmethod
    def test_smooth():
        report = invariant_report(NormalizedGerm.smooth_point())
        assert not report.singular
        assert report.ip.value == 0


class TestGlobal:
    @staticmethod
    def test_main_1_iii():
        rep = global_check([invariant_report(builtin_germ('main-1/iii'))], extra_gorenstein=1)
        assert rep.total == 4
        assert rep.deg_gr0_omega == -1
        assert rep.deg_gr1_o == -2
        assert rep.point_count == 2
        assert rep.passed

    @staticmethod
    def test_main_2_ii():
        rep = global_check([invariant_report(builtin_germ('main-2/ii'))])
        assert rep.total == 4
        assert rep.deg_gr0_omega == -2
        assert rep.deg_gr1_o == -2
        assert rep.spare == 0
        assert rep.passed

    @staticmethod
    def test_pattern():
        report = invariant_report(builtin_germ('pattern-i-m4'))
        assert global_check([report]).total == 3
        assert global_check([report], extra_gorenstein=1).passed

    @staticmethod
    def test_failures():
        rep = global_check([], anticanonical=Fraction(1, 3))
        assert 'gr0_integral' in rep.failures()
        assert not rep.passed
        rep = global_check([], extra_gorenstein=4, anticanonical=1)
        assert not rep.point_count_ok
        assert not rep.budget_ok
        rep = global_check([], extra_gorenstein=2, anticanonical=1, max_gorenstein=1)
        assert rep.failures() == ['gorenstein']
        with pytest.raises(ValueError):
            global_check([])

    @staticmethod
    def test_contribution():
        assert ip_contribution(IPValue(IPKind.LOWER_BOUND, Fraction(3, 2)), True) == 2
        assert ip_contribution(IPValue(IPKind.LOWER_BOUND, Fraction(0)), True) == 1
        assert ip_contribution(IPValue(IPKind.LOWER_BOUND, Fraction(0)), False) == 0
        assert ip_contribution(IPValue(IPKind.UNSUPPORTED, None), True) == 1
        assert ip_contribution(IPValue(IPKind.EXACT, Fraction(5, 2)), True) == Fraction(5, 2)
