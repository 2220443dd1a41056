"""Sublanguage engine: lexicon-driven formulas, core membership, conjunction
chains with the right-ideal absorption check, and diachronic pattern drift."""

from .chains import (
    ChainDecision,
    ClosureReport,
    DiscourseChain,
    chain_membership,
    verify_right_ideal_property,
)
from .diachrony import (
    CorpusRecord,
    DiachronicProfile,
    PeriodBin,
    diachronic_profile,
    dominant_sequence,
    ingest_corpus,
)
from .formulas import (
    CoreDecision,
    FormulaSymbol,
    SentenceFormula,
    Violation,
    canonical_form,
    formulaize,
    in_core,
    passive_transform,
    pattern_matches,
    sentence_in_core,
    tokenize,
)
from .lexicon import (
    Lexicon,
    OperatorEntry,
    SlotConstraint,
    SublanguageSpec,
    default_system,
    fixture_text,
    load_lexicon,
    load_spec,
)

__all__ = [
    "ChainDecision",
    "ClosureReport",
    "CoreDecision",
    "CorpusRecord",
    "DiachronicProfile",
    "DiscourseChain",
    "FormulaSymbol",
    "Lexicon",
    "OperatorEntry",
    "PeriodBin",
    "SentenceFormula",
    "SlotConstraint",
    "SublanguageSpec",
    "Violation",
    "canonical_form",
    "chain_membership",
    "default_system",
    "diachronic_profile",
    "dominant_sequence",
    "fixture_text",
    "formulaize",
    "in_core",
    "ingest_corpus",
    "load_lexicon",
    "load_spec",
    "passive_transform",
    "pattern_matches",
    "sentence_in_core",
    "tokenize",
    "verify_right_ideal_property",
]
