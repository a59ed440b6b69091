"""
双团队语义求值器测试
"""

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from engines.doubleteam.models import EvalConfig
from engines.doubleteam.semantics import (
    VerdictCache, eval_double_team, eval_fo, flatness_check, fo_side, sentence_true
)
from engines.harness.corpus import Corpus
from engines.harness.models import CorpusSpec
from logic.errors import CapExceededError, UnsupportedFormulaError, VariableDomainError
from logic.models import Assignment, DoubleTeam, Not, Team
from logic.parser import parse
from logic.syntax import has_generalized_atoms, renumber

from .conftest import double_team, formulas, structure

COUNTEREXAMPLE = "Q<dual(empty)> x . (@<none>(x ; x))"

_random = settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
_thorough = settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def _corpus(**overrides) -> Corpus:
    data = {
        "check": "negation",
        "vocab": {"P": 1, "R": 2},
        "maxDomain": 2,
        "teamVars": ["x"],
        "maxTeamSize": 1,
        "varPool": ["x", "y"],
        "formulaDepth": 2,
        "quantifiers": ["exists", "forall", "majority", "even", "empty", "dual(empty)", "most"],
        "atoms": ["none", "double", "dep"],
        "sampleCount": 1,
    }
    data.update(overrides)
    return Corpus(CorpusSpec.parse(data))


FLAT = _corpus(check="flatness", atoms=[])
WITH_ATOMS = _corpus()
_index = st.integers(min_value=0, max_value=10 ** 9)


class TestClauses:

    def test_atomic_formula(self, two_point):
        dt = double_team(["x"], [{"x": "0"}], [{"x": "1"}])
        verdict = eval_double_team(two_point, dt, parse("P(x)"))
        assert verdict.value is True
        assert verdict.to_dict()["engine"] == "double-team"
        assert not eval_double_team(two_point, dt.swapped(), parse("P(x)"))

    def test_negation_swaps_teams(self, two_point):
        dt = double_team(["x"], [{"x": "1"}], [{"x": "0"}])
        assert eval_double_team(two_point, dt, parse("~P(x)")).value

    def test_disjunction_splits_verifying_team(self, two_point):
        dt = double_team(["x"], [{"x": "0"}, {"x": "1"}], [])
        assert eval_double_team(two_point, dt, parse("P(x) | ~P(x)")).value
        falsify = double_team(["x"], [], [{"x": "0"}])
        assert not eval_double_team(two_point, falsify, parse("P(x) | x = x")).value

    def test_quantifier(self, two_point):
        assert sentence_true(two_point, parse("E x. P(x)"))
        assert not sentence_true(two_point, parse("A x. P(x)"))
        assert sentence_true(two_point, parse("E x. E y. R(x,y)"))
        assert not sentence_true(two_point, parse("Q<majority> x . (P(x))"))

    def test_type_two_quantifier(self, two_point):
        assert sentence_true(two_point, parse("Q<exists[2]> (x,y) . (R(x,y))"))
        assert not sentence_true(two_point, parse("Q<exists[2]> (x,x) . (R(x,x))"))

    def test_counterexample_is_false(self, two_point):
        dt = DoubleTeam(Team.empty(), Team.unit())
        assert not eval_double_team(two_point, dt, parse(COUNTEREXAMPLE)).value

    def test_generalized_atom(self, two_point):
        dt = double_team(["x"], [{"x": "0"}], [{"x": "0"}, {"x": "1"}])
        assert eval_double_team(two_point, dt, parse("@<double>(x ; x)")).value
        assert not eval_double_team(two_point, dt, parse("@<none>(x ; x)")).value

    def test_sentence_requires_no_free_variables(self, two_point):
        with pytest.raises(VariableDomainError):
            sentence_true(two_point, parse("P(x)"))

    def test_free_variables_must_be_in_team(self, two_point):
        with pytest.raises(VariableDomainError):
            eval_double_team(two_point, double_team(["x"], [], []), parse("R(x,y)"))


class TestCaps:

    def test_domain_cap(self):
        A = structure(["0", "1", "2", "3", "4"], P=(1, []))
        with pytest.raises(CapExceededError):
            sentence_true(A, parse("E x. P(x)"))

    def test_team_cap(self, two_point):
        dt = double_team(["x"], [{"x": "0"}, {"x": "1"}], [])
        with pytest.raises(CapExceededError):
            eval_double_team(two_point, dt, parse("P(x)"), EvalConfig(max_team=1))

    def test_enumeration_cap(self, two_point):
        dt = double_team(["x"], [{"x": "0"}, {"x": "1"}], [])
        with pytest.raises(CapExceededError):
            eval_double_team(two_point, dt, parse("P(x) | x = x"), EvalConfig(enumeration_cap=8))

    def test_config_validation(self):
        with pytest.raises(ValueError):
            EvalConfig(max_domain=0)
        with pytest.raises(ValueError, match="max_team 必须为正数"):
            EvalConfig(max_team=0)


class TestClassical:

    def test_eval_fo_witness_sets(self, two_point):
        s = Assignment.of({"x": "0"})
        assert eval_fo(two_point, s, parse("E y. R(x,y)"))
        assert not eval_fo(two_point, s, parse("Q<majority> y . (R(x,y))"))

    def test_fo_side(self, two_point):
        dt = double_team(["x"], [{"x": "0"}], [{"x": "1"}])
        assert fo_side(two_point, dt, parse("P(x)"))

    def test_flatness_rejects_atoms(self, two_point):
        with pytest.raises(UnsupportedFormulaError):
            flatness_check(two_point, DoubleTeam.sentence(), parse(COUNTEREXAMPLE))


class TestProperties:

    @_random
    @given(formulas)
    def test_empty_double_team_is_vacuously_true(self, phi):
        assume(not has_generalized_atoms(phi))
        A = structure(["0", "1"], P=(1, [("0",)]), R=(2, [("0", "1")]))
        dt = DoubleTeam(Team.empty({"x", "y", "z"}), Team.empty({"x", "y", "z"}))
        assert eval_double_team(A, dt, phi).value

    @_random
    @given(_index)
    def test_flatness(self, index):
        instance = FLAT.sample(index)
        report = flatness_check(instance.structure, instance.double_team, instance.formula)
        assert report.agree

    @_thorough
    @given(_index, st.data())
    def test_isomorphism_invariance(self, index, data):
        instance = WITH_ATOMS.sample(index)
        A, dt, phi = instance.structure, instance.double_team, instance.formula
        image = data.draw(st.permutations(A.domain))
        mapping = dict(zip(A.domain, image))
        expected = eval_double_team(A, dt, phi).value
        assert eval_double_team(A.relabel(mapping), dt.relabel(mapping), phi).value is expected

    @_random
    @given(_index)
    def test_negation_laws(self, index):
        instance = WITH_ATOMS.sample(index)
        A, dt, phi = instance.structure, instance.double_team, instance.formula
        value = eval_double_team(A, dt, phi).value
        assert eval_double_team(A, dt, renumber(Not(sub=phi))).value == eval_double_team(A, dt.swapped(), phi).value
        assert eval_double_team(A, dt, renumber(Not(sub=Not(sub=phi)))).value == value

    @_random
    @given(_index)
    def test_memo_is_sound(self, index):
        instance = WITH_ATOMS.sample(index)
        A, dt, phi = instance.structure, instance.double_team, instance.formula
        with_memo = eval_double_team(A, dt, phi)
        without_memo = eval_double_team(A, dt, phi, EvalConfig(memo=False))
        assert with_memo.value == without_memo.value
        assert without_memo.stats.cache_hits == 0

    def test_shared_cache(self, two_point):
        cache = VerdictCache()
        dt = double_team(["x"], [{"x": "0"}], [{"x": "1"}])
        phi = parse("P(x) | E y. R(x,y)")
        first = eval_double_team(two_point, dt, phi, cache=cache)
        assert len(cache) > 0
        second = eval_double_team(two_point, dt, phi, cache=cache)
        assert first.value == second.value
        assert second.stats.cache_hits >= 1
