"""
团队代数与模型测试
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logic.errors import LengthMismatchError, ModelError, RepetitionError, VariableDomainError
from logic.models import Assignment, DoubleTeam, Team, VValue
from logic.models.files import load_double_team, load_structure
from logic.team_algebra import (
    complement_fn, extend, extend_by_set, rel, repetition_respecting_tuples, respects_repetitions,
    split, team_extend
)

from .conftest import structure

DOMAIN = ("0", "1", "2")

_assignment = st.builds(lambda a, b: Assignment.of({"x": a, "y": b}), st.sampled_from(DOMAIN), st.sampled_from(DOMAIN))
_team = st.frozensets(_assignment, max_size=6).map(lambda members: Team(frozenset({"x", "y"}), members))
_pattern = st.sampled_from([("z",), ("x",), ("z", "z"), ("z", "w"), ("x", "z", "x")])
_projection = st.sampled_from([("x",), ("y", "x"), ("x", "x", "y")])


@st.composite
def _witness(draw):
    U = draw(_team)
    xs = draw(_pattern)
    rows = repetition_respecting_tuples(xs, DOMAIN)
    f = {s: frozenset(draw(st.sets(st.sampled_from(rows)))) for s in U.members}
    return U, xs, f


class TestAssignments:

    def test_extend_overrides_and_adds(self):
        s = Assignment.of({"x": "0"})
        assert extend(s, ("x", "y"), ("1", "2")).as_dict() == {"x": "1", "y": "2"}

    def test_extend_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            extend(Assignment.of(), ("x", "y"), ("0",))

    def test_extend_repetition(self):
        with pytest.raises(RepetitionError):
            extend(Assignment.of(), ("x", "x"), ("0", "1"))
        assert extend(Assignment.of(), ("x", "x"), ("1", "1")).as_dict() == {"x": "1"}

    def test_repetition_respecting_tuples(self):
        assert repetition_respecting_tuples(("x", "x"), ("0", "1")) == [("0", "0"), ("1", "1")]
        assert len(repetition_respecting_tuples(("x", "y", "x"), DOMAIN)) == 9
        assert respects_repetitions(("x", "y", "x"), ("0", "1", "0"))
        assert not respects_repetitions(("x", "y", "x"), ("0", "1", "1"))

    def test_missing_variable(self):
        with pytest.raises(VariableDomainError):
            Assignment.of({"x": "0"})["y"]


class TestTeamIdentities:

    @settings(max_examples=1000)
    @given(_assignment, _pattern)
    def test_extend_by_empty_set_is_empty(self, s, xs):
        assert extend_by_set(s, xs, []).is_empty()

    @settings(max_examples=1000)
    @given(_pattern)
    def test_extend_empty_team_is_empty(self, xs):
        assert team_extend(Team.empty({"x", "y"}), xs, {}).is_empty()

    @settings(max_examples=1000)
    @given(_witness())
    def test_complement_is_an_involution(self, case):
        U, xs, f = case
        assert complement_fn(complement_fn(f, xs, DOMAIN), xs, DOMAIN) == f

    @settings(max_examples=1000)
    @given(_team, st.data())
    def test_split_covers_team(self, U, data):
        h = {s: data.draw(st.sampled_from(list(VValue))) for s in U.members}
        u1, u1c, u2, u2c = split(U, h)
        assert u1.members | u2.members == U.members
        assert u1c.members == U.members - u1.members
        assert u2c.members == U.members - u2.members

    @given(_witness())
    def test_team_extend_is_union_of_extensions(self, case):
        U, xs, f = case
        expected = set()
        for s in U.members:
            expected |= extend_by_set(s, xs, f[s]).members
        assert team_extend(U, xs, f).members == expected

    @settings(max_examples=1000)
    @given(_team, _team, _projection)
    def test_rel_distributes_over_union(self, V, W, ys):
        A = structure(DOMAIN)
        assert rel(A, V.union(W), ys) == rel(A, V, ys) | rel(A, W, ys)

    def test_team_extend_requires_total_function(self):
        U = Team.of({"x"}, [{"x": "0"}])
        with pytest.raises(VariableDomainError):
            team_extend(U, ("y",), {})

    def test_rel_projection(self):
        A = structure(DOMAIN)
        V = Team.of({"x", "y"}, [{"x": "0", "y": "1"}, {"x": "2", "y": "1"}])
        assert rel(A, V, ("y", "x")) == {("1", "0"), ("1", "2")}
        assert rel(A, Team.empty({"x"}), ("x",)) == frozenset()
        with pytest.raises(VariableDomainError):
            rel(A, V, ("z",))


class TestModelFiles:

    def test_structure_labels_are_strings(self):
        A = load_structure({"domain": [0, 1], "relations": {"P": {"arity": 1, "tuples": [[0]]}}})
        assert A.domain == ("0", "1")
        assert A.relation("P").tuples == {("0",)}

    def test_structure_rejects_foreign_elements(self):
        with pytest.raises(ModelError):
            load_structure({"domain": ["0"], "relations": {"P": {"arity": 1, "tuples": [["5"]]}}})

    def test_double_team_bare_lists(self):
        dt = load_double_team({"U": [{"x": 0}], "V": []})
        assert dt.variables == {"x"}
        assert dt.V.is_empty()

    def test_sentence_double_team(self):
        dt = load_double_team({"U": [{}], "V": []})
        assert dt == DoubleTeam.sentence()

    def test_mismatched_variables(self):
        with pytest.raises(ModelError):
            load_double_team({"U": {"vars": ["x"], "assignments": []}, "V": {"vars": ["y"], "assignments": []}})

    def test_relabel_and_restrict(self):
        A = structure(["0", "1"], P=(1, [("0",)]))
        swapped = A.relabel({"0": "1", "1": "0"})
        assert swapped.relation("P").tuples == {("1",)}
        assert A.restrict(["1"]).relation("P").tuples == frozenset()
        U = Team.of({"x"}, [{"x": "0"}, {"x": "1"}])
        assert len(U.restrict(["1"])) == 1
