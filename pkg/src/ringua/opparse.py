"""Operator-precedence grammars, the shunting-yard conversion, and the
formula mini-language parser.

An operator grammar is a context-free grammar whose productions never have an
empty right-hand side and never place two nonterminals side by side; that
property is what makes precedence-driven parsing possible, and the shunting
yard is its classic stack realization for infix expressions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import FormatError
from .sublang.formulas import FormulaSymbol, SentenceFormula

# level, associativity; higher level binds tighter
Precedence = dict[str, tuple[int, str]]

DEFAULT_PRECEDENCE: Precedence = {"+": (1, "left"), "*": (2, "left")}


@dataclass(frozen=True)
class Production:
    lhs: str
    rhs: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.lhs} -> {' '.join(self.rhs) if self.rhs else 'ε'}"


@dataclass(frozen=True)
class OperatorGrammar:
    terminals: frozenset[str]
    nonterminals: frozenset[str]
    productions: tuple[Production, ...]
    precedence: Precedence


@dataclass(frozen=True)
class GrammarVerdict:
    valid: bool
    violations: tuple[tuple[Production, str], ...]

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [[str(p), reason] for p, reason in self.violations],
        }


def validate_operator_grammar(g: OperatorGrammar) -> GrammarVerdict:
    """Accept iff no production has an empty right-hand side or two adjacent
    nonterminals; every violating production is listed."""
    if g.terminals & g.nonterminals:
        raise ValueError(
            f"terminal and nonterminal sets must be disjoint: {sorted(g.terminals & g.nonterminals)}"
        )
    violations = []
    for prod in g.productions:
        if prod.lhs not in g.nonterminals:
            raise ValueError(f"production head {prod.lhs!r} is not a declared nonterminal")
        for sym in prod.rhs:
            if sym not in g.terminals and sym not in g.nonterminals:
                raise ValueError(f"production {prod} uses undeclared symbol {sym!r}")
        if not prod.rhs:
            violations.append((prod, "empty-rhs"))
            continue
        for a, b in zip(prod.rhs, prod.rhs[1:]):
            if a in g.nonterminals and b in g.nonterminals:
                violations.append((prod, "adjacent-nonterminals"))
                break
    return GrammarVerdict(not violations, tuple(violations))


# ---------------------------------------------------------------------------
# Token streams and the shunting yard


@dataclass(frozen=True)
class Token:
    kind: str  # "operand" | "operator" | "lparen" | "rparen"
    text: str

    def __str__(self) -> str:
        return self.text


_OPERAND_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|\d+")


def tokenize_infix(text: str, precedence: Precedence | None = None) -> list[Token]:
    precedence = DEFAULT_PRECEDENCE if precedence is None else precedence
    ops = sorted(precedence, key=len, reverse=True)
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "(":
            tokens.append(Token("lparen", "("))
            i += 1
            continue
        if ch == ")":
            tokens.append(Token("rparen", ")"))
            i += 1
            continue
        m = _OPERAND_RE.match(text, i)
        if m:
            tokens.append(Token("operand", m.group()))
            i = m.end()
            continue
        for op in ops:
            if text.startswith(op, i):
                tokens.append(Token("operator", op))
                i += len(op)
                break
        else:
            raise FormatError(f"unexpected character {ch!r} at position {i}")
    return tokens


def shunting_yard(tokens, precedence: Precedence | None = None) -> list[Token]:
    """Infix to postfix via the operator stack; parentheses must balance and
    every operator must have a precedence entry."""
    precedence = DEFAULT_PRECEDENCE if precedence is None else precedence
    if isinstance(tokens, str):
        tokens = tokenize_infix(tokens, precedence)
    output: list[Token] = []
    stack: list[Token] = []
    for tok in tokens:
        if tok.kind == "operand":
            output.append(tok)
        elif tok.kind == "operator":
            if tok.text not in precedence:
                raise FormatError(f"operator {tok.text!r} has no precedence entry")
            level, assoc = precedence[tok.text]
            while stack and stack[-1].kind == "operator":
                top_level, _ = precedence[stack[-1].text]
                if top_level > level or (top_level == level and assoc == "left"):
                    output.append(stack.pop())
                else:
                    break
            stack.append(tok)
        elif tok.kind == "lparen":
            stack.append(tok)
        elif tok.kind == "rparen":
            while stack and stack[-1].kind != "lparen":
                output.append(stack.pop())
            if not stack:
                raise FormatError("unbalanced parentheses: unmatched ')'")
            stack.pop()
        else:
            raise ValueError(f"unknown token kind {tok.kind!r}")
    while stack:
        top = stack.pop()
        if top.kind == "lparen":
            raise FormatError("unbalanced parentheses: unmatched '('")
        output.append(top)
    return output


def postfix_text(tokens) -> str:
    return " ".join(t.text for t in tokens)


def eval_postfix(postfix, env, ops) -> object:
    """Stack evaluation of a postfix stream.

    `env` maps operand names to values (bare integer literals evaluate to
    ints), `ops` maps operator text to binary functions. Malformed input
    raises FormatError, naming underflow or leftover operands.
    """
    stack = []
    for tok in postfix:
        if tok.kind == "operand":
            if tok.text in env:
                stack.append(env[tok.text])
            elif tok.text.isdigit():
                stack.append(int(tok.text))
            else:
                raise FormatError(f"operand {tok.text!r} has no value")
        elif tok.kind == "operator":
            if len(stack) < 2:
                raise FormatError(f"stack underflow at operator {tok.text!r}")
            right = stack.pop()
            left = stack.pop()
            stack.append(ops[tok.text](left, right))
        else:
            raise FormatError(f"postfix stream cannot contain {tok.kind!r} tokens")
    if len(stack) != 1:
        raise FormatError(f"malformed postfix: {len(stack)} values left on the stack")
    return stack[0]


def postfix_to_infix(postfix) -> str:
    """Fully parenthesized infix rendering of a postfix stream."""
    stack: list[str] = []
    for tok in postfix:
        if tok.kind == "operand":
            stack.append(tok.text)
        elif tok.kind == "operator":
            if len(stack) < 2:
                raise FormatError(f"stack underflow at operator {tok.text!r}")
            right = stack.pop()
            left = stack.pop()
            stack.append(f"({left} {tok.text} {right})")
        else:
            raise FormatError(f"postfix stream cannot contain {tok.kind!r} tokens")
    if len(stack) != 1:
        raise FormatError(f"malformed postfix: {len(stack)} values left on the stack")
    return stack[0]


# ---------------------------------------------------------------------------
# Formula mini-language: SYMBOL ('_' member)? ('^' modifier)?


_FORMULA_TOKEN_RE = re.compile(
    r"^(?P<symbol>[A-Z?])(?:_(?P<member>[A-Za-z0-9-]+))?(?:\^(?P<modifier>[A-Za-z0-9-]+))?$"
)


def parse_formula_text(text: str) -> SentenceFormula:
    """Parse whitespace-separated formula tokens such as "A_1^p V C_2".

    Symbols are single uppercase letters (or '?'); subscripts name class
    members, superscripts name modifiers.
    """
    symbols = []
    for raw in text.split():
        m = _FORMULA_TOKEN_RE.match(raw)
        if not m:
            if raw and (raw[0].islower() or not (raw[0].isalpha() or raw[0] == "?")):
                raise FormatError(f"unknown symbol in formula token {raw!r}")
            raise FormatError(f"malformed formula token {raw!r}")
        symbols.append(
            FormulaSymbol(
                symbol=m.group("symbol"),
                member=m.group("member"),
                modifier=m.group("modifier"),
            )
        )
    return SentenceFormula(tuple(symbols))
