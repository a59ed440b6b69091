"""
公式解析、打印与语法工具测试
"""

import pytest
from hypothesis import given, settings

from logic.errors import FormulaDepthError, FormulaParseError, TypeMismatchError, UnknownNameError
from logic.models import Equality, Formula, GAtom, Not, Or, Quant, RelAtom
from logic.parser import MAX_NESTING, parse, pretty
from logic.syntax import (
    bound_variables, depth, free_variables, has_generalized_atoms, index_nodes,
    quantifier_names, renumber, replace_subtree
)

from .conftest import formulas


def _free_by_occurrence(phi: Formula) -> frozenset:
    """逐个原子出现检查：变量在到根的路径上没有被本分支的量词元组约束时才自由"""
    free = set()
    stack = [(phi, frozenset())]
    while stack:
        node, bound = stack.pop()
        if isinstance(node, Quant):
            stack.extend((sub, bound | set(xs)) for xs, sub in zip(node.tuples, node.subs))
        elif isinstance(node, (Not, Or)):
            stack.extend((child, bound) for child in node.children())
        elif isinstance(node, Equality):
            free |= {node.y1, node.y2} - bound
        elif isinstance(node, RelAtom):
            free |= set(node.args) - bound
        else:
            free |= {x for xs in node.pos_args + node.neg_args for x in xs} - bound
    return frozenset(free)


class TestParse:

    def test_relation_atom(self):
        assert parse("P(x)") == RelAtom(rel="P", args=("x",))

    def test_equality(self):
        assert parse("x = y") == Equality(y1="x", y2="y")

    def test_precedence_not_and_or(self):
        phi = parse("~P(x) | R(x,y) & x = y")
        assert isinstance(phi, Or)
        assert phi.left == Not(sub=RelAtom(rel="P", args=("x",)))
        # & 是 ~(~a | ~b)
        assert phi.right == Not(sub=Or(left=Not(sub=RelAtom(rel="R", args=("x", "y"))),
                                       right=Not(sub=Equality(y1="x", y2="y"))))

    def test_or_is_left_associative(self):
        phi = parse("P(x) | P(y) | P(z)")
        assert isinstance(phi.left, Or)
        assert phi.right == RelAtom(rel="P", args=("z",))

    def test_exists_sugar_binds_unary(self):
        phi = parse("E x. P(x) | R(x,x)")
        assert isinstance(phi, Or)
        assert phi.left == Quant(qname="exists", tuples=(("x",),), subs=(RelAtom(rel="P", args=("x",)),))

    def test_forall_sugar(self):
        phi = parse("A x. (P(x) | x = x)")
        assert isinstance(phi, Quant) and phi.qname == "forall"
        assert isinstance(phi.subs[0], Or)

    def test_generalized_quantifier_with_tuples(self):
        phi = parse("Q<most> x, y . (P(x), R(y,y))")
        assert phi.qname == "most"
        assert phi.tuples == (("x",), ("y",))
        assert phi.subs[1] == RelAtom(rel="R", args=("y", "y"))

    def test_type_annotation_and_dual(self):
        phi = parse("Q<dual(exists[2])> (x,y) . (R(x,y))")
        assert phi.qname == "dual(exists[2])"
        assert phi.tuples == (("x", "y"),)

    def test_parametric_quantifier(self):
        assert parse("Q<at_least<2>> x . (P(x))").qname == "at_least<2>"

    def test_generalized_atom(self):
        phi = parse("@<none>(x ; y)")
        assert phi == GAtom(aname="none", pos_args=(("x",),), neg_args=(("y",),))
        assert parse("@<dep>((x,y) ; )") == GAtom(aname="dep", pos_args=(("x", "y"),), neg_args=())

    def test_node_ids_are_preorder(self):
        phi = parse("~(P(x) | E y. R(x,y))")
        assert [node.node_id for node in phi.walk()] == list(range(5))

    def test_unknown_quantifier(self):
        with pytest.raises(UnknownNameError):
            parse("Q<zzz> x . (P(x))")

    def test_unknown_atom(self):
        with pytest.raises(UnknownNameError):
            parse("@<zzz>(x ; y)")

    def test_quantifier_type_mismatch(self):
        with pytest.raises(TypeMismatchError):
            parse("Q<most> x . (P(x))")
        with pytest.raises(TypeMismatchError):
            parse("Q<exists> (x,y) . (R(x,y))")

    def test_atom_type_mismatch(self):
        with pytest.raises(TypeMismatchError):
            parse("@<none>(x ; )")

    @pytest.mark.parametrize("text", ["P(x", "x =", "| P(x)", "Q<exists> x (P(x))", ""])
    def test_syntax_errors(self, text):
        with pytest.raises(FormulaParseError):
            parse(text)

    def test_nesting_limit(self):
        assert depth(parse("~" * MAX_NESTING + "P(x)")) == MAX_NESTING
        with pytest.raises(FormulaDepthError):
            parse("~" * (MAX_NESTING + 1) + "P(x)")

    def test_very_deep_formula_is_a_parse_error(self):
        with pytest.raises(FormulaDepthError):
            parse("E x. " + "~" * 3000 + "P(x)")


class TestPretty:

    def test_quantifiers_print_closed(self):
        assert pretty(parse("E x. P(x)")) == "Q<exists> x . (P(x))"

    def test_right_disjunct_is_parenthesized(self):
        assert pretty(parse("P(x) | (P(y) | P(z))")) == "P(x) | (P(y) | P(z))"

    @settings(max_examples=1000, deadline=None)
    @given(formulas)
    def test_round_trip(self, phi):
        assert parse(pretty(phi)) == phi


class TestSyntaxTools:

    def test_free_variables(self):
        assert free_variables(parse("E x. R(x,y) | P(z)")) == {"y", "z"}
        assert free_variables(parse("@<none>(x ; y)")) == {"x", "y"}

    @settings(max_examples=500, deadline=None)
    @given(formulas)
    def test_free_variables_match_occurrences(self, phi):
        assert free_variables(phi) == _free_by_occurrence(phi)

    def test_bound_variables_per_node(self):
        phi = parse("E y. R(x,y)")
        scopes = bound_variables(phi, {"x"})
        assert scopes[0] == {"x"}
        assert scopes[1] == {"x", "y"}

    def test_index_nodes(self):
        phi = parse("~P(x)")
        nodes = index_nodes(phi)
        assert isinstance(nodes[0], Not) and isinstance(nodes[1], RelAtom)

    def test_replace_subtree_renumbers(self):
        phi = parse("~(P(x) | x = x)")
        smaller = replace_subtree(phi, 1, parse("P(x)"))
        assert smaller == Not(sub=RelAtom(rel="P", args=("x",)))
        assert [node.node_id for node in smaller.walk()] == [0, 1]

    def test_renumber_start(self):
        phi = renumber(parse("~P(x)"), start=10)
        assert [node.node_id for node in phi.walk()] == [10, 11]

    def test_measures(self):
        phi = parse("E x. (P(x) | @<none>(x ; x))")
        assert depth(phi) == 2
        assert has_generalized_atoms(phi)
        assert quantifier_names(phi) == {"exists"}
