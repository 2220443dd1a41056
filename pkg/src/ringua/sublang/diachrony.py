"""Pattern drift over a dated corpus.

Records carry a year and either raw text or a token list. The profile bins
records into fixed-width periods (decades by default), tallies formula
patterns per period, and marks each period's modal pattern; ties break
lexicographically and are flagged. The dominant sequence lists each pattern
at the period where it first becomes modal.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from ..errors import FormatError, RinguaError
from .formulas import formulaize, in_core
from .lexicon import Lexicon, SublanguageSpec


@dataclass(frozen=True)
class CorpusRecord:
    year: int
    text: str | None
    tokens: tuple[str, ...] | None
    line: int

    def words(self):
        return self.tokens if self.tokens is not None else self.text


def _parse_year(raw, line: int) -> int:
    if isinstance(raw, bool):
        raise FormatError(f"line {line}: date must be a year, got {raw!r}")
    if isinstance(raw, int):
        year = raw
    elif isinstance(raw, str) and len(raw) >= 4 and raw[:4].isdigit():
        year = int(raw[:4])
    else:
        raise FormatError(f"line {line}: date must be a year or 'YYYY...' string, got {raw!r}")
    if not 0 < year < 10000:
        raise FormatError(f"line {line}: year {year} out of range")
    return year


def _parse_record(obj, line: int) -> CorpusRecord:
    if not isinstance(obj, dict):
        raise FormatError(f"line {line}: record must be a JSON object")
    if "date" not in obj:
        raise FormatError(f"line {line}: record has no date")
    year = _parse_year(obj["date"], line)
    text = obj.get("text")
    tokens = obj.get("tokens")
    if text is None and tokens is None:
        raise FormatError(f"line {line}: record needs 'text' or 'tokens'")
    if text is not None and not isinstance(text, str):
        raise FormatError(f"line {line}: 'text' must be a string")
    if tokens is not None:
        if not isinstance(tokens, list) or any(not isinstance(t, str) for t in tokens):
            raise FormatError(f"line {line}: 'tokens' must be a list of strings")
        tokens = tuple(tokens)
    return CorpusRecord(year=year, text=text, tokens=tokens, line=line)


def ingest_corpus(source, strict: bool = False) -> tuple[list[CorpusRecord], list[str]]:
    """Read line-delimited JSON records, preserving file order and line numbers.

    Returns (records, issues). Under strict mode the first malformed line
    aborts with its line number; otherwise malformed lines are skipped and
    reported in `issues`.
    """
    if isinstance(source, (str, Path)):
        lines = Path(source).read_text(encoding="utf-8").splitlines()
    else:
        lines = [str(l).rstrip("\n") for l in source]
    records: list[CorpusRecord] = []
    issues: list[str] = []
    for lineno, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        try:
            try:
                obj = json.loads(raw)
            except json.JSONDecodeError as exc:
                raise FormatError(f"line {lineno}: not valid JSON ({exc.msg})") from exc
            records.append(_parse_record(obj, lineno))
        except FormatError as exc:
            if strict:
                raise
            issues.append(str(exc))
    return records, issues


@dataclass(frozen=True)
class PeriodBin:
    start: int
    counts: dict[str, int]
    modal: str
    tied: bool
    core_count: int | None = None

    def to_json(self) -> dict:
        out = {
            "period": self.start,
            "counts": dict(sorted(self.counts.items())),
            "modal": self.modal,
            "tied": self.tied,
        }
        if self.core_count is not None:
            out["core_count"] = self.core_count
        return out


@dataclass(frozen=True)
class DiachronicProfile:
    period_years: int
    bins: tuple[PeriodBin, ...]

    def to_json(self) -> dict:
        return {
            "period_years": self.period_years,
            "bins": [b.to_json() for b in self.bins],
            "dominant_sequence": dominant_sequence(self),
        }


def diachronic_profile(
    records: list[CorpusRecord],
    lex: Lexicon,
    spec: SublanguageSpec | None = None,
    period_years: int = 10,
) -> DiachronicProfile:
    """Histogram of formula patterns per fixed-width period."""
    if not records:
        raise RinguaError("empty corpus")
    if period_years < 1:
        raise ValueError(f"period width must be positive, got {period_years}")
    by_period: dict[int, Counter] = {}
    core_counts: dict[int, int] = {}
    for rec in records:
        start = rec.year - rec.year % period_years
        formula = formulaize(rec.words(), lex)
        by_period.setdefault(start, Counter())[formula.pattern] += 1
        if spec is not None:
            core_counts[start] = core_counts.get(start, 0) + (
                1 if in_core(formula, spec).accepted else 0
            )
    bins = []
    for start in sorted(by_period):
        counts = by_period[start]
        top = max(counts.values())
        leaders = sorted(p for p, c in counts.items() if c == top)
        bins.append(
            PeriodBin(
                start=start,
                counts=dict(counts),
                modal=leaders[0],
                tied=len(leaders) > 1,
                core_count=core_counts.get(start) if spec is not None else None,
            )
        )
    return DiachronicProfile(period_years, tuple(bins))


def dominant_sequence(profile: DiachronicProfile) -> list[str]:
    """Each pattern at the period where it first becomes modal, in time order."""
    seen = []
    for b in profile.bins:
        if b.modal not in seen:
            seen.append(b.modal)
    return seen
