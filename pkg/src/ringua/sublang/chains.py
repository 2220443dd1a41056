"""Conjunction chains and the one-sided absorption property.

The extended sublanguage E consists of the conjunction chains whose first
sentence passes core membership (strict conjunctions additionally require
their own sentence to pass). Over the free monoid of chains this makes E a
right ideal: appending any permissive conjunction and any sentence to a
member of E stays in E, while prepending a non-core sentence leaves E. The
verifier checks both facts exhaustively to a bounded chain depth.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import RinguaError
from .formulas import CoreDecision, formulaize, in_core
from .lexicon import Lexicon, SublanguageSpec


@dataclass(frozen=True)
class DiscourseChain:
    """A head sentence followed by (conjunction, sentence) links."""

    head: str
    links: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if not str(self.head).strip():
            raise ValueError("chain head must be a nonempty sentence")

    def sentences(self) -> list[str]:
        return [self.head] + [s for _, s in self.links]

    def extended(self, conjunction: str, sentence: str) -> "DiscourseChain":
        return DiscourseChain(self.head, self.links + ((conjunction, sentence),))

    def to_json(self) -> dict:
        return {"head": self.head, "links": [list(l) for l in self.links]}


@dataclass(frozen=True)
class ChainDecision:
    member: bool
    head_decision: CoreDecision
    strict_failures: tuple[int, ...] = ()  # indices of failing strict links

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "head": self.head_decision.to_json(),
            "strict_failures": list(self.strict_failures),
        }


def chain_membership(chain: DiscourseChain, lex: Lexicon, spec: SublanguageSpec) -> ChainDecision:
    """Membership of a chain in the extended sublanguage.

    Decided by the first sentence; sentences after permissive conjunctions
    are unrestricted, sentences after strict conjunctions must themselves
    pass core membership.
    """
    for conj, _ in chain.links:
        if conj not in spec.conjunctions:
            raise RinguaError(f"conjunction {conj!r} is not in the conjunction set")
    head_decision = in_core(formulaize(chain.head, lex), spec)
    strict_failures = tuple(
        idx
        for idx, (conj, sentence) in enumerate(chain.links)
        if spec.conjunctions[conj] == "strict"
        and not in_core(formulaize(sentence, lex), spec).accepted
    )
    member = head_decision.accepted and not strict_failures
    return ChainDecision(member, head_decision, strict_failures)


@dataclass(frozen=True)
class ClosureReport:
    """Outcome of the exhaustive absorption check.

    r1 (right absorption): every one-link extension of a member chain, by any
    permissive conjunction and any pool sentence, stays a member. Checked for
    all member chains up to the requested depth.
    r2 (left non-absorption): some chain headed by a non-core sentence and
    followed by a core sentence is not a member.
    """

    depth: int
    r1_checked: int
    r1_ok: bool
    r1_failures: tuple[dict, ...]
    r2_status: str  # "witness-found" | "no-witness-sought" | "failed"
    r2_witness: dict | None

    @property
    def ok(self) -> bool:
        return self.r1_ok and self.r2_status != "failed"

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "r1": {
                "checked": self.r1_checked,
                "ok": self.r1_ok,
                "failures": list(self.r1_failures),
            },
            "r2": {"status": self.r2_status, "witness": self.r2_witness},
            "ok": self.ok,
        }


def verify_right_ideal_property(
    lex: Lexicon,
    spec: SublanguageSpec,
    core_pool: list[str],
    general_pool: list[str],
    depth: int = 3,
) -> ClosureReport:
    """Exhaustively verify absorption over chains of up to `depth` sentences.

    Preconditions (checked): core_pool sentences all pass core membership,
    general_pool sentences all fail it, core_pool is nonempty.
    """
    if not core_pool:
        raise RinguaError("core pool must be nonempty")
    for s in core_pool:
        if not in_core(formulaize(s, lex), spec).accepted:
            raise RinguaError(f"core pool sentence fails membership: {s!r}")
    for s in general_pool:
        if in_core(formulaize(s, lex), spec).accepted:
            raise RinguaError(f"general pool sentence passes membership: {s!r}")

    conjs = spec.permissive_conjunctions()
    if not conjs:
        raise RinguaError("the conjunction set has no permissive members")
    pool = list(core_pool) + list(general_pool)

    members = [
        ch
        for ch in (DiscourseChain(s) for s in pool)
        if chain_membership(ch, lex, spec).member
    ]
    checked = 0
    failures: list[dict] = []
    for _level in range(depth - 1):
        grown = []
        for ch in members:
            for conj in conjs:
                for sentence in pool:
                    ext = ch.extended(conj, sentence)
                    checked += 1
                    if chain_membership(ext, lex, spec).member:
                        grown.append(ext)
                    else:
                        failures.append(ext.to_json())
        members = grown

    if general_pool:
        witness = None
        for head in general_pool:
            for conj in conjs:
                for tail in core_pool:
                    candidate = DiscourseChain(head, ((conj, tail),))
                    if not chain_membership(candidate, lex, spec).member:
                        witness = candidate.to_json()
                        break
                if witness:
                    break
            if witness:
                break
        r2_status = "witness-found" if witness else "failed"
    else:
        witness = None
        r2_status = "no-witness-sought"

    return ClosureReport(
        depth=depth,
        r1_checked=checked,
        r1_ok=not failures,
        r1_failures=tuple(failures),
        r2_status=r2_status,
        r2_witness=witness,
    )
