"""Sentence formulas: extraction from word sequences and core membership.

A sentence formula is the class-symbol string of a sentence: content words
map to argument-class or operator symbols in surface order, function words
drop out, unrecognized content words surface as '?'. Subscripts record which
class member produced each symbol; the reserved superscript "pass" marks an
operator recognized from an agentful passive, which membership checking
undoes before judging the formula.

Core membership requires an admissible pattern (pattern strings may use '.'
as a single-symbol wildcard) and, for every operator occurrence, that its
ordered arguments satisfy the operator's class/feature constraints.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lexicon import PASSIVE_MARK, UNKNOWN_SYMBOL, WILDCARD, Lexicon, SublanguageSpec

_STRIP_CHARS = ".,;:!?\"'()[]"


@dataclass(frozen=True)
class FormulaSymbol:
    symbol: str
    member: str | None = None       # subscript: which class member
    modifier: str | None = None     # superscript: modifier mark
    features: frozenset[str] = frozenset()

    def render(self) -> str:
        out = self.symbol
        if self.member is not None:
            out += "_" + self.member.replace(" ", "-")
        if self.modifier is not None:
            out += "^" + self.modifier
        return out


@dataclass(frozen=True)
class SentenceFormula:
    symbols: tuple[FormulaSymbol, ...]

    @property
    def pattern(self) -> str:
        return "".join(s.symbol for s in self.symbols)

    def __str__(self) -> str:
        return " ".join(s.render() for s in self.symbols)

    def bare(self) -> "SentenceFormula":
        """Strip subscripts, superscripts, and features; keep the symbols."""
        return SentenceFormula(tuple(FormulaSymbol(s.symbol) for s in self.symbols))

    def to_json(self) -> dict:
        return {
            "pattern": self.pattern,
            "symbols": [
                {
                    "symbol": s.symbol,
                    "member": s.member,
                    "modifier": s.modifier,
                    "features": sorted(s.features),
                }
                for s in self.symbols
            ],
        }


def tokenize(text: str) -> list[str]:
    """Whitespace tokenizer: lowercase, punctuation stripped at token edges."""
    out = []
    for raw in text.lower().split():
        tok = raw.strip(_STRIP_CHARS)
        if tok:
            out.append(tok)
    return out


def formulaize(tokens, lex: Lexicon) -> SentenceFormula:
    """Map a sentence to its formula, deterministically and totally.

    Tokens are lemmatized, then scanned left to right with greedy
    longest-phrase matching against the lexicon (phrases may span function
    words such as "of"). Unmatched function words are dropped; unmatched
    content words become '?'.
    """
    if isinstance(tokens, str):
        words = tokenize(tokens)
    else:
        words = []
        for raw in tokens:
            tok = str(raw).lower().strip(_STRIP_CHARS)
            if tok:
                words.append(tok)
    lemmas = [lex.lemmas.get(w, w) for w in words]

    symbols: list[FormulaSymbol] = []
    i = 0
    while i < len(lemmas):
        match = None
        for width in range(min(lex.max_phrase_len, len(lemmas) - i), 0, -1):
            key = " ".join(lemmas[i:i + width])
            entry = lex.phrase_symbols.get(key)
            if entry is not None:
                match = (key, entry, width)
                break
        if match is not None:
            key, (symbol, _is_op, passive), width = match
            symbols.append(
                FormulaSymbol(
                    symbol=symbol,
                    member=key,
                    modifier=PASSIVE_MARK if passive else None,
                    features=lex.features.get(key, frozenset()),
                )
            )
            i += width
        elif lemmas[i] in lex.function_words:
            i += 1
        else:
            symbols.append(FormulaSymbol(UNKNOWN_SYMBOL, member=lemmas[i]))
            i += 1
    return SentenceFormula(tuple(symbols))


def pattern_matches(pattern: str, symbols: str) -> bool:
    return len(pattern) == len(symbols) and all(
        p == WILDCARD or p == s for p, s in zip(pattern, symbols)
    )


def _is_binary(f: SentenceFormula, operator_symbols=None) -> bool:
    if len(f.symbols) != 3:
        return False
    if operator_symbols is None:
        return True
    mid = f.symbols[1].symbol
    outer_ok = all(s.symbol not in operator_symbols for s in (f.symbols[0], f.symbols[2]))
    return mid in operator_symbols and outer_ok


def passive_transform(f, lex: Lexicon | None = None) -> SentenceFormula:
    """Swap the arguments of a binary formula and toggle its passive mark.

    Accepts a SentenceFormula, or raw tokens/text (then `lex` is required to
    formulaize first). Involutive at the formula level.
    """
    if not isinstance(f, SentenceFormula):
        if lex is None:
            raise ValueError("token input needs a lexicon to formulaize first")
        f = formulaize(f, lex)
    if len(f.symbols) != 3:
        raise ValueError(
            f"passive transform is defined for binary formulas only, got {f.pattern!r}"
        )
    left, op, right = f.symbols
    toggled = None if op.modifier == PASSIVE_MARK else PASSIVE_MARK
    new_op = FormulaSymbol(op.symbol, op.member, toggled, op.features)
    return SentenceFormula((right, new_op, left))


def canonical_form(f: SentenceFormula, spec: SublanguageSpec) -> SentenceFormula:
    """Undo the passive transform so membership judges the underlying form."""
    if _is_binary(f, spec.operator_symbols) and f.symbols[1].modifier == PASSIVE_MARK:
        left, op, right = f.symbols
        return SentenceFormula(
            (right, FormulaSymbol(op.symbol, op.member, None, op.features), left)
        )
    return f


@dataclass(frozen=True)
class Violation:
    kind: str  # "unknown-word" | "pattern" | "operator-argument"
    message: str
    position: int | None = None

    def to_json(self) -> dict:
        return {"kind": self.kind, "message": self.message, "position": self.position}


@dataclass(frozen=True)
class CoreDecision:
    accepted: bool
    violations: tuple[Violation, ...] = ()
    formula: SentenceFormula | None = None

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "violations": [v.to_json() for v in self.violations],
            "formula": self.formula.to_json() if self.formula else None,
        }


def in_core(f: SentenceFormula, spec: SublanguageSpec) -> CoreDecision:
    """Decide core membership; total, with named violations on rejection."""
    violations = []
    for i, sym in enumerate(f.symbols):
        if sym.symbol == UNKNOWN_SYMBOL:
            violations.append(
                Violation("unknown-word", f"unrecognized word {sym.member!r}", i)
            )
    if violations:
        return CoreDecision(False, tuple(violations), f)

    canon = canonical_form(f, spec)
    pat = canon.pattern
    if not any(pattern_matches(p, pat) for p in spec.patterns):
        violations.append(Violation("pattern", f"pattern {pat!r} is not admissible"))

    for i, sym in enumerate(canon.symbols):
        slots = spec.operator_constraints.get(sym.symbol)
        if not slots:
            continue
        for slot_idx, slot in enumerate(slots):
            pos = i - 1 if slot_idx == 0 else i + 1
            arg = canon.symbols[pos] if 0 <= pos < len(canon.symbols) else None
            word = sym.member or sym.symbol
            if arg is None or arg.symbol in spec.operator_symbols:
                violations.append(
                    Violation(
                        "operator-argument",
                        f"operator {word!r} is missing argument {slot_idx + 1}",
                        i,
                    )
                )
                continue
            argname = arg.member or arg.symbol
            if slot.allow_classes and arg.symbol not in slot.allow_classes:
                violations.append(
                    Violation(
                        "operator-argument",
                        f"argument {slot_idx + 1} of {word!r} must be in classes "
                        f"{sorted(slot.allow_classes)}, got {arg.symbol} ({argname!r})",
                        i,
                    )
                )
            if arg.features:
                if slot.allow_features and not (arg.features & slot.allow_features):
                    violations.append(
                        Violation(
                            "operator-argument",
                            f"argument {slot_idx + 1} of {word!r} needs a feature in "
                            f"{sorted(slot.allow_features)}; {argname!r} has "
                            f"{sorted(arg.features)}",
                            i,
                        )
                    )
                forbidden = arg.features & slot.forbid_features
                if forbidden:
                    violations.append(
                        Violation(
                            "operator-argument",
                            f"argument {slot_idx + 1} of {word!r} carries forbidden "
                            f"feature(s) {sorted(forbidden)} ({argname!r})",
                            i,
                        )
                    )
    return CoreDecision(not violations, tuple(violations), f)


def sentence_in_core(text, lex: Lexicon, spec: SublanguageSpec) -> CoreDecision:
    return in_core(formulaize(text, lex), spec)
