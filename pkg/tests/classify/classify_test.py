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
from math import gcd
from hypothesis import given, settings, strategies as st
from mcb.duval import DuValType
from mcb.germ import NormalizedGerm, Series, validate
from mcb.registry import builtin_germ
from mcb.classify import (canonicalize, canonical_key, character_changes, enumerate_candidates, exceptional_candidate,
                          involution_stage, elephant_candidates, PatternTag, TheoremTag, pattern_i, pattern_ii,
                          pattern_tag, theorem_case, match_theorem_patterns, gorenstein_allowance, Mode, Stage,
                          Survivor, Exclusion, classify, judge)


def find(items, weights, ords):
    return [item for item in items if item.germ.weight_values == weights and item.germ.ords == ords]


@st.composite
def main_germs(draw):
    mbar = draw(st.integers(1, 5))
    d = draw(st.integers(2, 4))
    m = mbar * d
    units = [u for u in range(1, m) if gcd(u, m) == 1]
    a = draw(st.sampled_from(units))
    b = draw(st.sampled_from(units))
    ords = draw(st.tuples(*[st.integers(1, 8)] * 4))
    return NormalizedGerm.main(mbar, d, (a, -a, b, 0), ords)


class TestCanonical:
    @staticmethod
    def test_forms():
        germ = canonicalize(NormalizedGerm.main(4, 2, (7, 1, 5, 0), (3, 1, 5, 4)))
        assert (germ.weight_values, germ.ords) == ((1, 7, 5, 0), (1, 3, 5, 4))
        germ = canonicalize(NormalizedGerm.main(2, 4, (3, 5, 1, 0), (1, 1, 1, 2)))
        assert germ.weight_values == (1, 7, 3, 0)
        germ = canonicalize(exceptional_candidate())
        assert germ.weight_values == (1, 3, 1, 2)
        assert germ.series == Series.EXCEPTIONAL

    @staticmethod
    def test_character_changes():
        assert character_changes(pattern_i(4)) == [1, 5]
        assert character_changes(builtin_germ('main-2/i')) == [1, 3, 5, 7]

    @staticmethod
    def test_orbit():
        orbit = []
        canonicalize(pattern_i(4), orbit)
        assert len(orbit) == 4

    @staticmethod
    @settings(max_examples=300, deadline=None)
    @given(germ=main_germs())
    def test_idempotent(germ):
        canon = canonicalize(germ)
        assert canonical_key(canonicalize(canon)) == canonical_key(canon)
        assert canonical_key(canonicalize(germ.swapped())) == canonical_key(canon)
        for u in character_changes(germ):
            moved = germ.with_weights([w * u for w in germ.weights])
            assert canonical_key(canonicalize(moved)) == canonical_key(canon)
        assert canonical_key(canon) <= canonical_key(germ)


class TestCandidates:
    @staticmethod
    def test_small():
        found = list(enumerate_candidates(2, 2))
        assert found[-1] == canonicalize(exceptional_candidate())
        keys = [canonical_key(g) for g in found[:-1]]
        assert keys == sorted(keys)
        assert len(set(keys)) == len(keys)
        assert builtin_germ('main-1/iii') in found
        for germ in found:
            assert validate(germ)
            assert canonical_key(canonicalize(germ)) == canonical_key(germ)

    @staticmethod
    def test_caps():
        for germ in enumerate_candidates(2, 4, order_cap=3, pair_cap=2):
            assert max(germ.ords[:3]) <= 3
            assert germ.ords[0] + germ.ords[1] <= 2
        assert list(enumerate_candidates(1, 1)) == []

    @staticmethod
    def test_binomial_equation():
        germ = [g for g in enumerate_candidates(2, 4) if g.weight_values == (1, 7, 1, 0) and g.ords == (1, 1, 1, 2)]
        assert len(germ) == 1
        assert germ[0].is_cyclic_binomial


class TestInvolution:
    @staticmethod
    def test_elephants():
        assert elephant_candidates(9, 2) == [DuValType.D(4), DuValType.D(5)]
        assert elephant_candidates(10, 4) == [DuValType.A(7)]
        assert elephant_candidates(5, 4) == [DuValType.A(1)]
        assert elephant_candidates(5, 2) == []
        assert elephant_candidates(7, 3) == [DuValType.E(6)]

    @staticmethod
    def test_cyclic_point():
        ok, rows = involution_stage(builtin_germ('main-1/iii'))
        assert ok
        assert len(rows) == 10
        assert [r.row for r in rows if r.passed] == [10]

    @staticmethod
    def test_cax4():
        ok, rows = involution_stage(builtin_germ('cAx4'))
        assert ok
        passing = [r for r in rows if r.passed]
        assert [r.row for r in passing] == [9]
        assert passing[0].elephant == DuValType.D(5)


class TestPatterns:
    @staticmethod
    def test_registry_tags():
        expected = {
            'main-1/i': TheoremTag.MAIN_1_I,
            'main-1/ii': TheoremTag.MAIN_1_II,
            'main-1/iii': TheoremTag.MAIN_1_III,
            'main-1/iv/m4': TheoremTag.MAIN_1_IV,
            'main-1/iv/m10': TheoremTag.MAIN_1_IV,
            'main-1/v/m2': TheoremTag.MAIN_1_V,
            'main-1/v/m4': TheoremTag.MAIN_1_V,
            'main-2/i': TheoremTag.MAIN_2_I,
            'main-2/ii': TheoremTag.MAIN_2_II,
            'smooth': TheoremTag.UNMATCHED,
        }
        for name, tag in expected.items():
            assert theorem_case(builtin_germ(name)) == tag, name

    @staticmethod
    def test_pattern_tags():
        assert pattern_tag(pattern_i(4)) == PatternTag.PATTERN_I
        assert pattern_tag(pattern_ii(4)) == PatternTag.PATTERN_II
        assert pattern_tag(builtin_germ('main-2/i')) == PatternTag.MAIN_ORD1
        assert pattern_tag(NormalizedGerm.main(2, 4, (1, 7, 3, 0), (1, 1, 3, 2))) == PatternTag.UNMATCHED
        assert pattern_i(4).weight_values == (1, 7, 5, 0)
        assert pattern_i(4).ords == (1, 3, 5, 4)

    @staticmethod
    def test_grouping():
        groups = match_theorem_patterns([builtin_germ('main-2/i'), builtin_germ('main-2/ii'), pattern_i(6)])
        assert set(groups) == {TheoremTag.MAIN_2_I, TheoremTag.MAIN_2_II, TheoremTag.MAIN_1_IV}
        assert gorenstein_allowance(TheoremTag.MAIN_2_I) == 0
        assert gorenstein_allowance(TheoremTag.MAIN_1_III) == 1


class TestJudge:
    @staticmethod
    def test_predicates():
        outcome = judge(NormalizedGerm.main(1, 3, (1, 2, 1, 0), (1, 1, 1, 1)))
        assert isinstance(outcome, Exclusion)
        assert outcome.certificate.stage == Stage.PREDICATES
        assert 'd_even' in outcome.certificate.data['failed']

    @staticmethod
    def test_binomial_exclusion():
        outcome = judge(builtin_germ('main-2/i'), Mode.BINOMIAL)
        assert isinstance(outcome, Exclusion)
        data = outcome.certificate.data
        assert outcome.certificate.stage == Stage.IP
        assert data['total'] == 5
        assert data['exact']['min'] == 9
        assert data['exact']['iP'] == 4

    @staticmethod
    def test_strict_survivor():
        outcome = judge(builtin_germ('main-2/i'))
        assert isinstance(outcome, Survivor)
        assert outcome.theorem == TheoremTag.MAIN_2_I
        assert outcome.report.ip.value == 1


class TestClassify:
    @staticmethod
    def test_a1_base():
        report = classify(2, 2)
        assert report.candidate_count == len(list(enumerate_candidates(2, 2)))
        cyclic = find(report.survivors, (1, 3, 1, 0), (1, 1, 1, 2))
        assert [s.theorem for s in cyclic] == [TheoremTag.MAIN_1_III]
        cax4 = find(report.survivors, (1, 3, 1, 2), (1, 1, 1, 2))
        assert [s.theorem for s in cax4] == [TheoremTag.MAIN_1_II]

    @staticmethod
    def test_a3_base():
        report = classify(2, 4)
        assert [s.theorem for s in find(report.survivors, (1, 7, 1, 0), (1, 1, 1, 2))] == [TheoremTag.MAIN_2_I]
        assert [s.theorem for s in find(report.survivors, (1, 7, 3, 0), (1, 1, 1, 2))] == [TheoremTag.MAIN_2_II]

    @staticmethod
    def test_a3_base_binomial():
        report = classify(2, 4, Mode.BINOMIAL)
        assert find(report.survivors, (1, 7, 1, 0), (1, 1, 1, 2)) == []
        excluded = find(report.excluded, (1, 7, 1, 0), (1, 1, 1, 2))
        assert len(excluded) == 1
        assert excluded[0].certificate.data['total'] == 5
        assert [s.theorem for s in find(report.survivors, (1, 7, 3, 0), (1, 1, 1, 2))] == [TheoremTag.MAIN_2_II]

    @staticmethod
    def test_cap_limited_bound_is_inconclusive():
        report = classify(2, 4, Mode.BINOMIAL)
        capped = find(report.inconclusive, (1, 7, 1, 0), (3, 3, 3, 2))
        assert len(capped) == 1
        cert = capped[0].certificate
        assert cert.stage == Stage.IP
        assert 'cap-limited' in cert.reason
        assert cert.data['wP'] == Fraction(3, 2)
        assert cert.data['total'] == 8
        assert cert.data['certified_total'] == 3
        assert find(report.excluded, (1, 7, 1, 0), (3, 3, 3, 2)) == []
        for ex in report.excluded:
            data = ex.certificate.data
            if 'cap-limited' in ex.certificate.reason:
                assert 'exact i_P' in ex.certificate.reason or data['anticanonical'] + data['wP'] + 1 > 4

    @staticmethod
    def test_patterns_binomial():
        report = classify(4, 2, Mode.BINOMIAL)
        tags = {s.pattern for s in report.survivors if s.germ.ords[2] > 4}
        assert tags == {PatternTag.PATTERN_I, PatternTag.PATTERN_II}

    @staticmethod
    def test_empty():
        report = classify(2, 3)
        assert report.survivors == ()
        assert all(e.certificate.stage == Stage.PREDICATES for e in report.excluded)
        assert classify(1, 4).survivors == ()

    @staticmethod
    def test_workers():
        serial = classify(2, 2)
        parallel = classify(2, 2, workers=2)
        assert [canonical_key(s.germ) for s in parallel.survivors] == [canonical_key(s.germ) for s in serial.survivors]
        assert [canonical_key(e.germ) for e in parallel.excluded] == [canonical_key(e.germ) for e in serial.excluded]
