"""Operator grammars, the shunting yard, postfix evaluation, and the
formula mini-language."""

import random
from collections import Counter

import pytest

from oracles import eval_expr, random_expr, render_expr
from ringua import make_cyclic_ring, make_matrix_ring
from ringua.errors import FormatError
from ringua.opparse import (
    OperatorGrammar,
    Production,
    eval_postfix,
    parse_formula_text,
    postfix_text,
    postfix_to_infix,
    shunting_yard,
    tokenize_infix,
    validate_operator_grammar,
)


def grammar(productions):
    return OperatorGrammar(
        terminals=frozenset({"+", "*", "(", ")", "id"}),
        nonterminals=frozenset({"E"}),
        productions=tuple(productions),
        precedence={"+": (1, "left"), "*": (2, "left")},
    )


class TestGrammarValidation:
    def test_classic_expression_grammar_valid(self):
        g = grammar(
            [
                Production("E", ("E", "+", "E")),
                Production("E", ("E", "*", "E")),
                Production("E", ("(", "E", ")")),
                Production("E", ("id",)),
            ]
        )
        verdict = validate_operator_grammar(g)
        assert verdict.valid and not verdict.violations

    def test_empty_rhs_rejected(self):
        verdict = validate_operator_grammar(grammar([Production("E", ())]))
        assert not verdict.valid
        assert verdict.violations[0][1] == "empty-rhs"

    def test_adjacent_nonterminals_rejected(self):
        verdict = validate_operator_grammar(grammar([Production("E", ("E", "E"))]))
        assert not verdict.valid
        assert verdict.violations[0][1] == "adjacent-nonterminals"

    def test_every_violation_listed(self):
        verdict = validate_operator_grammar(
            grammar([Production("E", ()), Production("E", ("E", "E")), Production("E", ("id",))])
        )
        assert len(verdict.violations) == 2

    def test_overlapping_symbol_sets_rejected(self):
        g = OperatorGrammar(frozenset({"x"}), frozenset({"x"}), (), {})
        with pytest.raises(ValueError):
            validate_operator_grammar(g)


class TestShuntingYard:
    def test_right_factor_example(self):
        assert postfix_text(shunting_yard("r*(a+b)")) == "r a b + *"

    def test_left_factor_example(self):
        assert postfix_text(shunting_yard("(a+b)*r")) == "a b + r *"

    def test_single_operand(self):
        assert postfix_text(shunting_yard("a")) == "a"

    def test_precedence_without_parens(self):
        assert postfix_text(shunting_yard("a+b*c")) == "a b c * +"
        assert postfix_text(shunting_yard("a*b+c")) == "a b * c +"

    def test_left_associativity(self):
        assert postfix_text(shunting_yard("a+b+c")) == "a b + c +"

    def test_unbalanced_rejected(self):
        with pytest.raises(FormatError):
            shunting_yard("(a+b")
        with pytest.raises(FormatError):
            shunting_yard("a+b)")

    def test_unknown_operator_rejected(self):
        with pytest.raises(FormatError):
            tokenize_infix("a % b")

    def test_token_multiset_preserved(self):
        rng = random.Random(42)
        for _ in range(200):
            tree = random_expr(rng)
            text = render_expr(tree, rng)
            tokens = tokenize_infix(text)
            postfix = shunting_yard(tokens)
            without_parens = [t.text for t in tokens if t.kind not in ("lparen", "rparen")]
            assert Counter(t.text for t in postfix) == Counter(without_parens)

    def test_two_operator_forms_are_distinct_token_sequences(self):
        # r*x and x*r postfix forms differ for every operand x other than r
        for x in ("a", "b", "c", "y"):
            left = [t.text for t in shunting_yard(f"r*{x}")]
            right = [t.text for t in shunting_yard(f"{x}*r")]
            assert left != right


class TestEvalPostfix:
    OPS = {"+": lambda a, b: a + b, "*": lambda a, b: a * b}

    def test_worked_example(self):
        postfix = shunting_yard("r*(a+b)")
        assert eval_postfix(postfix, {"r": 2, "a": 3, "b": 4}, self.OPS) == 14

    def test_commuted_form_equal_over_ints(self):
        assert (
            eval_postfix(shunting_yard("(a+b)*r"), {"r": 2, "a": 3, "b": 4}, self.OPS) == 14
        )

    def test_random_agreement_with_recursive_oracle(self):
        rng = random.Random(2718)
        env = {"a": 3, "b": -2, "c": 5, "r": 7, "x": -1}
        for _ in range(300):
            tree = random_expr(rng)
            text = render_expr(tree, rng)
            got = eval_postfix(shunting_yard(text), env, self.OPS)
            assert got == eval_expr(tree, env)

    def test_noncommutative_matrix_operands_differ(self):
        ring = make_matrix_ring(make_cyclic_ring(2))
        ops = {
            "+": lambda x, y: ring.add[x][y],
            "*": lambda x, y: ring.mul[x][y],
        }
        # r = [[0,1],[1,0]], a = [[1,0],[0,0]], b = 0
        env = {"r": 0b0110, "a": 0b1000, "b": ring.zero}
        left = eval_postfix(shunting_yard("r*(a+b)"), env, ops)
        right = eval_postfix(shunting_yard("(a+b)*r"), env, ops)
        assert left != right

    def test_malformed_postfix_errors(self):
        plus = shunting_yard("a+b")[2:]  # just the operator
        with pytest.raises(FormatError, match="underflow"):
            eval_postfix(plus, {}, self.OPS)
        operands = shunting_yard("a b")  # two operands, no operator
        with pytest.raises(FormatError, match="left on the stack"):
            eval_postfix(operands, {"a": 1, "b": 2}, self.OPS)

    def test_postfix_to_infix_round_trip(self):
        rng = random.Random(31)
        env = {"a": 2, "b": 3, "c": -4, "r": 5, "x": 1}
        for _ in range(100):
            tree = random_expr(rng)
            text = render_expr(tree, rng)
            rebuilt = postfix_to_infix(shunting_yard(text))
            assert eval_postfix(shunting_yard(rebuilt), env, self.OPS) == eval_expr(tree, env)


class TestFormulaText:
    def test_bare_symbols(self):
        f = parse_formula_text("G J B")
        assert f.pattern == "GJB"
        assert all(s.member is None and s.modifier is None for s in f.symbols)

    def test_subscripts_and_superscripts(self):
        f = parse_formula_text("A_1^p V C_2")
        assert f.symbols[0].member == "1" and f.symbols[0].modifier == "p"
        assert f.symbols[2].member == "2" and f.symbols[2].modifier is None

    def test_malformed_rejected(self):
        with pytest.raises(FormatError, match="malformed"):
            parse_formula_text("A_^")
        with pytest.raises(FormatError, match="unknown symbol"):
            parse_formula_text("a V C")

    def test_render_round_trip(self):
        f = parse_formula_text("A_1^p V C_2")
        assert parse_formula_text(str(f)) == f
