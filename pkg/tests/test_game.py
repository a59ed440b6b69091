"""
语义博弈规则、策略搜索与验证测试
"""

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from engines.doubleteam.semantics import eval_double_team
from engines.game.models import (
    GameLimits, MoveKind, OrPick, PlayResult, Position, Sign, Strategy, WitnessSet
)
from engines.game.rules import Game, transitions
from engines.game.search import enumerate_plays, find_uniform_survival_strategy, verify_strategy
from engines.harness.corpus import Corpus
from engines.harness.models import CorpusSpec
from logic.errors import CapExceededError, GameError, IllegalChoiceError, SearchLimitError, StrategyError
from logic.models import Assignment, Team
from logic.parser import parse

from .conftest import team

COUNTEREXAMPLE = "Q<dual(empty)> x . (@<none>(x ; x))"
EMPTY = Assignment.of()

THEOREM = Corpus(CorpusSpec.parse({
    "check": "game",
    "vocab": {"P": 1},
    "maxDomain": 2,
    "teamVars": ["x"],
    "maxTeamSize": 2,
    "varPool": ["x"],
    "formulaDepth": 2,
    "quantifiers": ["exists", "forall", "empty", "dual(empty)", "majority"],
    "atoms": ["none", "double"],
    "sampleCount": 1,
}))


class TestRules:

    def test_atoms_are_terminal(self, two_point):
        phi = parse("P(x)")
        won = transitions(two_point, Position(Assignment.of({"x": "0"}), Sign.POSITIVE, 0), phi)
        assert won.kind is MoveKind.TERMINAL and won.result is PlayResult.WIN
        lost = transitions(two_point, Position(Assignment.of({"x": "0"}), Sign.NEGATIVE, 0), phi)
        assert lost.result is PlayResult.LOSE

    def test_generalized_atom_survives(self, two_point):
        move = transitions(two_point, Position(Assignment.of({"x": "0"}), Sign.POSITIVE, 0), parse("@<none>(x ; x)"))
        assert move.result is PlayResult.SURVIVE

    def test_negation_flips_sign(self, two_point):
        move = transitions(two_point, Position(EMPTY, Sign.POSITIVE, 0), parse("~E x. P(x)"))
        assert move.kind is MoveKind.FORCED
        assert move.successors == (Position(EMPTY, Sign.NEGATIVE, 1),)

    def test_disjunction_moves(self, two_point):
        s = Assignment.of({"x": "0"})
        phi = parse("P(x) | x = x")
        positive = transitions(two_point, Position(s, Sign.POSITIVE, 0), phi)
        assert positive.kind is MoveKind.AGENT
        options = dict(positive.options)
        assert options[OrPick(frozenset({"left"}))] == (Position(s, Sign.POSITIVE, 1), Position(s, Sign.NEGATIVE, 2))
        assert options[OrPick(frozenset({"left", "right"}))] == (Position(s, Sign.POSITIVE, 1),
                                                                 Position(s, Sign.POSITIVE, 2))
        negative = transitions(two_point, Position(s, Sign.NEGATIVE, 0), phi)
        assert negative.kind is MoveKind.INTERROGATOR
        assert set(negative.successors) == {Position(s, Sign.NEGATIVE, 1), Position(s, Sign.NEGATIVE, 2)}

    def test_quantifier_moves(self, two_point):
        game = Game(two_point, parse("E x. P(x)"))
        pos = Position(EMPTY, Sign.POSITIVE, 0)
        assert [w.elements for w in game.witness_sets(game.node(pos), Sign.POSITIVE)] == [
            {"0"}, {"1"}, {"0", "1"}]
        after = game.continuations(pos, WitnessSet(frozenset({"0", "1"})))
        # A∖S = ∅：ℐ 选补集时 𝒜 存活
        assert PlayResult.SURVIVE in after
        assert Position(Assignment.of({"x": "1"}), Sign.POSITIVE, 1) in after

    def test_negative_quantifier_uses_dual(self, two_point):
        game = Game(two_point, parse("E x. P(x)"))
        assert [w.elements for w in game.witness_sets(game.node(Position(EMPTY, Sign.NEGATIVE, 0)),
                                                      Sign.NEGATIVE)] == [frozenset()]

    def test_empty_lift_loses(self, two_point):
        move = transitions(two_point, Position(EMPTY, Sign.POSITIVE, 0), parse("Q<empty> x . (P(x))"))
        assert move.result is PlayResult.LOSE

    def test_illegal_choice(self, two_point):
        game = Game(two_point, parse("Q<forall> x . (P(x))"))
        with pytest.raises(IllegalChoiceError):
            game.continuations(Position(EMPTY, Sign.POSITIVE, 0), WitnessSet(frozenset({"0"})))

    def test_non_unary_quantifier(self, two_point):
        with pytest.raises(GameError):
            Game(two_point, parse("Q<most> x, y . (P(x), P(y))"))


class TestSearch:

    def test_counterexample_exhausts(self, two_point):
        result = find_uniform_survival_strategy(two_point, Team.empty(), Team.unit(), parse(COUNTEREXAMPLE))
        assert not result.found
        assert result.exhausted

    def test_empty_teams_use_empty_strategy(self, two_point):
        result = find_uniform_survival_strategy(two_point, team(["x"]), team(["x"]), parse("P(x) | ~P(x)"))
        assert result.found
        assert result.strategy.to_list() == []

    def test_empty_teams_with_unsatisfiable_atom(self, two_point):
        result = find_uniform_survival_strategy(two_point, team(["x"]), team(["x"]), parse("@<none>(x ; x)"))
        assert not result.found

    def test_sentence_strategy(self, two_point):
        phi = parse("E x. P(x)")
        result = find_uniform_survival_strategy(two_point, Team.unit(), Team.empty(), phi)
        assert result.found
        assert result.strategy.get(Position(EMPTY, Sign.POSITIVE, 0)) == WitnessSet(frozenset({"0"}))
        assert verify_strategy(two_point, Team.unit(), Team.empty(), phi, result.strategy)

    def test_final_teams_for_atoms(self, two_point):
        phi = parse("@<double>(x ; x)")
        U, V = team(["x"], {"x": "0"}), team(["x"], {"x": "0"}, {"x": "1"})
        result = find_uniform_survival_strategy(two_point, U, V, phi)
        assert result.found
        S, T = result.final_teams.per_atom[0]
        assert S == U and T == V

    def test_plays_follow_strategy(self, two_point):
        phi = parse("E x. P(x)")
        result = find_uniform_survival_strategy(two_point, Team.unit(), Team.empty(), phi)
        outcomes, _ = enumerate_plays(two_point, Team.unit(), Team.empty(), phi, result.strategy)
        assert {outcome.result for outcome in outcomes} == {PlayResult.WIN}
        assert all(outcome.choices for outcome in outcomes)

    def test_undefined_strategy(self, two_point):
        with pytest.raises(StrategyError):
            enumerate_plays(two_point, Team.unit(), Team.empty(), parse("E x. P(x)"), Strategy())

    def test_illegal_strategy_fails_verification(self, two_point):
        strategy = Strategy({Position(EMPTY, Sign.POSITIVE, 0): WitnessSet(frozenset({"1"}))})
        assert not verify_strategy(two_point, Team.unit(), Team.empty(), parse("A x. P(x)"), strategy)

    def test_losing_strategy_fails_verification(self, two_point):
        strategy = Strategy({Position(EMPTY, Sign.POSITIVE, 0): WitnessSet(frozenset({"1"}))})
        assert not verify_strategy(two_point, Team.unit(), Team.empty(), parse("E x. P(x)"), strategy)

    def test_strategy_serialization(self, two_point):
        phi = parse("E x. (P(x) | x = x)")
        result = find_uniform_survival_strategy(two_point, Team.unit(), Team.empty(), phi)
        restored = Strategy.from_list(result.strategy.to_list())
        assert restored.choices == result.strategy.choices

    def test_candidate_limit(self, two_point):
        with pytest.raises(SearchLimitError):
            find_uniform_survival_strategy(two_point, Team.unit(), Team.empty(), parse("E x. (P(x) | x = x)"),
                                           limits=GameLimits(max_candidates=1))

    def test_domain_and_team_limits(self, two_point):
        phi = parse("P(x)")
        U, V = team(["x"], {"x": "0"}), team(["x"], {"x": "0"}, {"x": "1"})
        with pytest.raises(CapExceededError):
            find_uniform_survival_strategy(two_point, U, V, phi, limits=GameLimits(max_domain=1))
        with pytest.raises(CapExceededError):
            find_uniform_survival_strategy(two_point, U, V, phi, limits=GameLimits(max_team=1))
        assert not find_uniform_survival_strategy(two_point, U, V, phi, limits=GameLimits(max_domain=2, max_team=2)).found

    def test_search_is_deterministic(self):
        for index in range(50):
            instance = THEOREM.sample(index)
            A, dt, phi = instance.structure, instance.double_team, instance.formula
            first = find_uniform_survival_strategy(A, dt.U, dt.V, phi)
            second = find_uniform_survival_strategy(A, dt.U, dt.V, phi)
            assert first.candidates == second.candidates
            if first.found:
                assert first.strategy.to_list() == second.strategy.to_list()
            else:
                assert not second.found

    def test_corrupted_or_pick_fails_verification(self, two_point):
        U, V = team(["x"], {"x": "0"}), team(["x"])
        phi = parse("P(x) | ~P(x)")
        result = find_uniform_survival_strategy(two_point, U, V, phi)
        assert result.found and verify_strategy(two_point, U, V, phi, result.strategy)
        pos, picked = next((pos, choice) for pos, choice in result.strategy.choices.items()
                           if isinstance(choice, OrPick))
        assert picked == OrPick(frozenset({"left"}))
        for sides in ({"right"}, {"left", "right"}):
            corrupted = result.strategy.with_choice(pos, OrPick(frozenset(sides)))
            assert not verify_strategy(two_point, U, V, phi, corrupted)


@settings(max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.integers(min_value=0, max_value=10 ** 9))
def test_game_agrees_with_double_team_semantics(index):
    instance = THEOREM.sample(index)
    A, dt, phi = instance.structure, instance.double_team, instance.formula
    result = find_uniform_survival_strategy(A, dt.U, dt.V, phi)
    assert result.found == eval_double_team(A, dt, phi).value
    if result.found:
        assert verify_strategy(A, dt.U, dt.V, phi, result.strategy)
