"""Lexicon and grammar documents for the sublanguage engine.

A Lexicon maps words and multiword phrases to single-letter argument-class
symbols or operator symbols, carries feature tags per entry, an inflection
table, and the function words the formula extractor drops. A
SublanguageSpec declares the symbol alphabets, the admissible formula
patterns, per-operator argument constraints, the conjunction set with
strict/permissive flags, and the recognized transforms.

Both load from JSON, either as separate documents or combined in one file
under the keys "lexicon" and "grammar". The shipped default encodes a small
immunology-style system.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from ..errors import FormatError

PASSIVE_MARK = "pass"
UNKNOWN_SYMBOL = "?"
WILDCARD = "."

DEFAULT_FIXTURE = "immunology.json"


@dataclass(frozen=True)
class OperatorEntry:
    symbol: str
    passive: bool = False


@dataclass(frozen=True)
class Lexicon:
    word_classes: dict[str, str]
    operator_classes: dict[str, OperatorEntry]
    features: dict[str, frozenset[str]]
    lemmas: dict[str, str]
    function_words: frozenset[str]

    # phrase lookup table built once: key is the space-joined lemma n-gram
    phrase_symbols: dict[str, tuple[str, bool, bool]] = field(repr=False, default_factory=dict)
    max_phrase_len: int = 1

    def class_symbols(self) -> frozenset[str]:
        return frozenset(self.word_classes.values())

    def operator_symbols(self) -> frozenset[str]:
        return frozenset(e.symbol for e in self.operator_classes.values())


def _check_symbol(symbol, where: str) -> str:
    if (
        not isinstance(symbol, str)
        or len(symbol) != 1
        or not symbol.isalpha()
        or not symbol.isupper()
    ):
        raise FormatError(
            f"{where}: symbols must be single uppercase letters, got {symbol!r}"
        )
    return symbol


def _build_lexicon(data: dict) -> Lexicon:
    if not isinstance(data, dict):
        raise FormatError("lexicon must be a JSON object")
    raw_classes = data.get("word_classes", {})
    raw_ops = data.get("operator_classes", {})
    if not isinstance(raw_classes, dict) or not isinstance(raw_ops, dict):
        raise FormatError("word_classes and operator_classes must be objects")

    word_classes = {}
    for word, symbol in raw_classes.items():
        word_classes[word.lower()] = _check_symbol(symbol, f"word_classes[{word!r}]")

    operator_classes = {}
    for word, entry in raw_ops.items():
        key = word.lower()
        if isinstance(entry, str):
            operator_classes[key] = OperatorEntry(_check_symbol(entry, f"operator_classes[{word!r}]"))
        elif isinstance(entry, dict) and "symbol" in entry:
            operator_classes[key] = OperatorEntry(
                _check_symbol(entry["symbol"], f"operator_classes[{word!r}]"),
                bool(entry.get("passive", False)),
            )
        else:
            raise FormatError(
                f"operator_classes[{word!r}] must be a symbol or an object with 'symbol'"
            )

    doubled = word_classes.keys() & operator_classes.keys()
    if doubled:
        raise FormatError(f"words mapped to both a class and an operator: {sorted(doubled)}")
    overlap = frozenset(word_classes.values()) & frozenset(
        e.symbol for e in operator_classes.values()
    )
    if overlap:
        raise FormatError(f"class and operator symbol sets must be disjoint: {sorted(overlap)}")

    features = {}
    for word, tags in data.get("features", {}).items():
        if not isinstance(tags, list) or any(not isinstance(t, str) for t in tags):
            raise FormatError(f"features[{word!r}] must be a list of strings")
        features[word.lower()] = frozenset(tags)

    lemmas = {k.lower(): v.lower() for k, v in data.get("lemmas", {}).items()}
    function_words = frozenset(w.lower() for w in data.get("function_words", []))

    phrase_symbols: dict[str, tuple[str, bool, bool]] = {}
    for word, symbol in word_classes.items():
        phrase_symbols[word] = (symbol, False, False)
    for word, entry in operator_classes.items():
        phrase_symbols[word] = (entry.symbol, True, entry.passive)
    max_len = max((len(p.split()) for p in phrase_symbols), default=1)

    return Lexicon(
        word_classes=word_classes,
        operator_classes=operator_classes,
        features=features,
        lemmas=lemmas,
        function_words=function_words,
        phrase_symbols=phrase_symbols,
        max_phrase_len=max_len,
    )


@dataclass(frozen=True)
class SlotConstraint:
    """Constraint on one ordered argument of an operator.

    allow_classes: the argument's class symbol must be among these (if set).
    allow_features / forbid_features: checked against the member word's
    feature tags; skipped when the formula carries no features (bare
    symbol-string input).
    """

    allow_classes: frozenset[str] = frozenset()
    allow_features: frozenset[str] = frozenset()
    forbid_features: frozenset[str] = frozenset()


@dataclass(frozen=True)
class SublanguageSpec:
    class_symbols: frozenset[str]
    operator_symbols: frozenset[str]
    feature_names: frozenset[str]
    patterns: tuple[str, ...]
    operator_constraints: dict[str, tuple[SlotConstraint, ...]]
    conjunctions: dict[str, str]  # word -> "permissive" | "strict"
    transforms: tuple[str, ...]
    general_patterns: tuple[str, ...] = ()

    def permissive_conjunctions(self) -> list[str]:
        return sorted(w for w, flag in self.conjunctions.items() if flag == "permissive")


def _check_pattern(pattern: str, declared: frozenset[str], where: str) -> str:
    if not isinstance(pattern, str) or not pattern:
        raise FormatError(f"{where}: patterns must be nonempty strings")
    for ch in pattern:
        if ch != WILDCARD and ch not in declared:
            raise FormatError(f"{where}: pattern {pattern!r} uses undeclared symbol {ch!r}")
    return pattern


def _build_spec(data: dict) -> SublanguageSpec:
    if not isinstance(data, dict):
        raise FormatError("grammar must be a JSON object")
    class_symbols = frozenset(
        _check_symbol(s, "class_symbols") for s in data.get("class_symbols", [])
    )
    operator_symbols = frozenset(
        _check_symbol(s, "operator_symbols") for s in data.get("operator_symbols", [])
    )
    if class_symbols & operator_symbols:
        raise FormatError("class_symbols and operator_symbols must be disjoint")
    declared = class_symbols | operator_symbols
    feature_names = frozenset(data.get("features", []))

    patterns = tuple(
        _check_pattern(p, declared, "patterns") for p in data.get("patterns", [])
    )
    general = tuple(
        _check_pattern(p, declared, "general_patterns")
        for p in data.get("general_patterns", [])
    )

    constraints: dict[str, tuple[SlotConstraint, ...]] = {}
    for op, slots in data.get("operator_constraints", {}).items():
        if op not in operator_symbols:
            raise FormatError(f"operator_constraints references undeclared operator {op!r}")
        if not isinstance(slots, list) or len(slots) > 2:
            raise FormatError(f"operator {op!r}: constraints must list at most 2 argument slots")
        parsed = []
        for slot in slots:
            allow_classes = frozenset(slot.get("allow_classes", []))
            allow_features = frozenset(slot.get("allow_features", []))
            forbid_features = frozenset(slot.get("forbid_features", []))
            if not allow_classes <= class_symbols:
                raise FormatError(f"operator {op!r}: allow_classes outside declared classes")
            if not (allow_features | forbid_features) <= feature_names:
                raise FormatError(f"operator {op!r}: constraint references undeclared features")
            parsed.append(SlotConstraint(allow_classes, allow_features, forbid_features))
        constraints[op] = tuple(parsed)

    conjunctions = {}
    for word, flag in data.get("conjunctions", {}).items():
        if flag not in ("permissive", "strict"):
            raise FormatError(
                f"conjunction {word!r} flag must be 'permissive' or 'strict', got {flag!r}"
            )
        conjunctions[word.lower()] = flag

    return SublanguageSpec(
        class_symbols=class_symbols,
        operator_symbols=operator_symbols,
        feature_names=feature_names,
        patterns=patterns,
        operator_constraints=constraints,
        conjunctions=conjunctions,
        transforms=tuple(data.get("transforms", [])),
        general_patterns=general,
    )


def _decode(text) -> dict:
    if isinstance(text, dict):
        return text
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("document must be a JSON object")
    return data


def load_lexicon(text) -> Lexicon:
    """Load a lexicon document, or the lexicon half of a combined document."""
    data = _decode(text)
    return _build_lexicon(data.get("lexicon", data))


def load_spec(text) -> SublanguageSpec:
    """Load a grammar document, or the grammar half of a combined document."""
    data = _decode(text)
    return _build_spec(data.get("grammar", data))


def fixture_text(name: str = DEFAULT_FIXTURE) -> str:
    return resources.files("ringua.fixtures").joinpath(name).read_text(encoding="utf-8")


def default_system() -> tuple[Lexicon, SublanguageSpec]:
    """The bundled immunology-style lexicon and grammar."""
    text = fixture_text()
    return load_lexicon(text), load_spec(text)
