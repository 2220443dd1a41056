"""Classification, generation, and exhaustive enumeration of one-sided ideals.

Subsets of a ring carrier are int bitmasks. Classification is total: any mask
gets the strongest applicable kind among

    not-subgroup < subgroup-only < left / right < two-sided

with a concrete witness recorded for every stronger kind that fails.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

from . import kernels
from .errors import BudgetError, RinguaError
from .rings import (
    Element,
    RingSpec,
    check_element,
    check_subset,
    members_to_mask,
    subset_members,
)

KINDS = ("not-subgroup", "subgroup-only", "left", "right", "two-sided")
SIDES = ("left", "right", "two-sided")

DEFAULT_ENUM_BUDGET = 64
BUDGET_ENV_VAR = "RINGUA_BUDGET"


def _resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw:
        try:
            return int(raw)
        except ValueError as exc:
            raise RinguaError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from exc
    return DEFAULT_ENUM_BUDGET


@dataclass(frozen=True)
class IdealClassification:
    """Outcome of classify_subset.

    `witnesses` maps failed-test names to witness tuples:
      zero-membership  -> (zero,)           subset misses the additive identity
      add-closure      -> (a, b, a+b)       sum escapes the subset
      left-absorption  -> (r, a, r*a)       product escapes on the left
      right-absorption -> (a, r, a*r)       product escapes on the right
    """

    subset: int
    kind: str
    witnesses: dict[str, tuple] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "bitmask": format(self.subset, "#x"),
            "kind": self.kind,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def _subgroup_witness(ring: RingSpec, mask: int):
    if not (mask >> ring.zero) & 1:
        return ("zero-membership", (ring.zero,))
    members = subset_members(mask, ring.size)
    for a in members:
        row = ring.add[a]
        for b in members:
            s = row[b]
            if not (mask >> s) & 1:
                return ("add-closure", (a, b, s))
    return None


def classify_subset(ring: RingSpec, mask: int) -> IdealClassification:
    """Strongest ideal-like kind of a carrier subset, with failure witnesses.

    Absorption means: left ideal absorbs r*a, right ideal absorbs a*r, for
    every ring element r and subset member a.
    """
    check_subset(ring, mask)
    sub_w = _subgroup_witness(ring, mask)
    if sub_w is not None:
        return IdealClassification(mask, "not-subgroup", {sub_w[0]: sub_w[1]})
    witnesses: dict[str, tuple] = {}
    left_w = kernels.absorption_witness(ring.mul, mask, "left")
    right_w = kernels.absorption_witness(ring.mul, mask, "right")
    if left_w is not None:
        witnesses["left-absorption"] = left_w
    if right_w is not None:
        witnesses["right-absorption"] = right_w
    if left_w is None and right_w is None:
        kind = "two-sided"
    elif left_w is None:
        kind = "left"
    elif right_w is None:
        kind = "right"
    else:
        kind = "subgroup-only"
    return IdealClassification(mask, kind, witnesses)


def principal_ideal(ring: RingSpec, a: Element, side: str) -> int:
    """Smallest one-sided ideal containing `a`.

    For a unital ring this is the orbit a*R (right) or R*a (left), which is
    already additively closed. Without an identity the orbit need not contain
    a itself, so the subset is grown to closure under addition and one-sided
    multiplication instead.
    """
    check_element(ring, a)
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    n = ring.size
    if ring.one is not None:
        if side == "right":
            return members_to_mask(ring.mul[a][r] for r in range(n))
        return members_to_mask(ring.mul[r][a] for r in range(n))
    mask = 1 << a
    while True:
        grown = kernels.close_under_add(ring.add, mask)
        for x in subset_members(grown, n):
            for r in range(n):
                p = ring.mul[x][r] if side == "right" else ring.mul[r][x]
                grown |= 1 << p
        if grown == mask:
            return mask
        mask = grown


def enumerate_one_sided_ideals(ring: RingSpec, side: str, budget: int | None = None) -> list[int]:
    """All ideals of the requested side, as bitmasks sorted by (size, mask).

    Exhaustive: every additive subgroup is generated by closure-growing, then
    filtered by the absorption condition(s). Always contains {0} and R.
    Raises BudgetError above the enumeration cap (default 64, overridable via
    the RINGUA_BUDGET environment variable or the `budget` argument).
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    cap = _resolve_budget(budget)
    if ring.size > cap:
        raise BudgetError(
            f"carrier size {ring.size} exceeds the enumeration budget {cap}; "
            "raise RINGUA_BUDGET or sample with principal_ideal instead"
        )
    subgroups = kernels.additive_subgroups(ring.add, ring.zero)
    if side == "two-sided":
        keep_left = kernels.filter_absorbing(ring.mul, subgroups, "left")
        keep_right = kernels.filter_absorbing(ring.mul, subgroups, "right")
        return [m for m, kl, kr in zip(subgroups, keep_left, keep_right) if kl and kr]
    keep = kernels.filter_absorbing(ring.mul, subgroups, side)
    return [m for m, k in zip(subgroups, keep) if k]


# ---------------------------------------------------------------------------
# Maximality and primality


@dataclass(frozen=True)
class IdealFlags:
    subset: int
    kind: str
    maximal: bool
    prime: bool | None

    def to_json(self) -> dict:
        return {
            "bitmask": format(self.subset, "#x"),
            "kind": self.kind,
            "maximal": self.maximal,
            "prime": self.prime,
        }


def _is_prime_commutative(ring: RingSpec, mask: int) -> bool:
    if mask == ring.full_mask:
        return False
    outside = [x for x in range(ring.size) if not (mask >> x) & 1]
    for a in outside:
        row = ring.mul[a]
        for b in outside:
            if (mask >> row[b]) & 1:
                return False
    return True


def _is_prime_two_sided(ring: RingSpec, mask: int) -> bool:
    # a R b inside the ideal for a, b outside it disproves primality.
    if mask == ring.full_mask:
        return False
    outside = [x for x in range(ring.size) if not (mask >> x) & 1]
    n = ring.size
    for a in outside:
        for b in outside:
            if all((mask >> ring.mul[ring.mul[a][r]][b]) & 1 for r in range(n)):
                return False
    return True


def maximal_and_prime(ring: RingSpec, ideals: list[int], side: str) -> list[IdealFlags]:
    """Flag each enumerated ideal as maximal and (where defined) prime.

    Maximality is relative to the given complete list: proper, with no
    strictly intermediate ideal of the same side. Primality is only defined
    for two-sided ideals (via the a*R*b test) or over a commutative ring (via
    the a*b test); one-sided ideals of a noncommutative ring get prime=None.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")
    full = ring.full_mask
    commutative = ring.is_commutative()
    out = []
    ideal_set = set(ideals)
    for mask in ideals:
        maximal = mask != full and not any(
            mask != other != full and mask | other == other for other in ideal_set
        )
        if commutative:
            prime = _is_prime_commutative(ring, mask)
        elif side == "two-sided":
            prime = _is_prime_two_sided(ring, mask)
        else:
            prime = None
        kind = classify_subset(ring, mask).kind
        out.append(IdealFlags(mask, kind, maximal, prime))
    return out


# ---------------------------------------------------------------------------
# Commutative ideal arithmetic, Oka / Ako families


def _require_commutative(ring: RingSpec, what: str) -> None:
    w = kernels.first_noncommutative(ring.mul)
    if w is not None:
        raise RinguaError(
            f"{what} needs a commutative ring; witness {w[0]}*{w[1]} != {w[1]}*{w[0]}"
        )


def _require_ideal(ring: RingSpec, mask: int) -> None:
    cls = classify_subset(ring, mask)
    if cls.kind != "two-sided":
        raise RinguaError(f"subset {format(mask, '#x')} classifies as {cls.kind}, not an ideal")


def ideal_arithmetic(ring: RingSpec, ideal: int, a: Element) -> tuple[int, int]:
    """The pair ((I,a), (I:a)) over a commutative ring.

    (I,a) is the ideal generated by I and a; (I:a) is {x : x*a in I}. Both
    results are ideals again.
    """
    _require_commutative(ring, "ideal arithmetic")
    check_element(ring, a)
    _require_ideal(ring, ideal)
    extended = kernels.close_under_add(ring.add, ideal | principal_ideal(ring, a, "right"))
    colon = members_to_mask(x for x in range(ring.size) if (ideal >> ring.mul[x][a]) & 1)
    return extended, colon


def _normalize_family(family, ideals: list[int]):
    if callable(family):
        return {m for m in ideals if family(m)}
    return {int(m) for m in family}


def principal_ideal_family(ring: RingSpec, budget: int | None = None) -> set[int]:
    """All principal ideals of a commutative ring (includes {0}, and R when unital)."""
    _require_commutative(ring, "the principal-ideal family")
    return {principal_ideal(ring, a, "right") for a in range(ring.size)}


@dataclass(frozen=True)
class FamilyReport:
    """Outcome of an Oka or Ako family check plus its Prime Ideal Principle
    consequence: with the condition verified, every maximal element of the
    family's complement must be prime.
    """

    condition: str
    holds: bool
    violations: tuple[tuple, ...]
    complement_maximal: tuple[int, ...]
    pip_ok: bool | None
    pip_failures: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "condition": self.condition,
            "holds": self.holds,
            "violations": [list(v) for v in self.violations],
            "complement_maximal": [format(m, "#x") for m in self.complement_maximal],
            "pip_ok": self.pip_ok,
            "pip_failures": [format(m, "#x") for m in self.pip_failures],
        }


def _pip_consequence(ring: RingSpec, ideals: list[int], member: set[int]):
    complement = [m for m in ideals if m not in member]
    comp_set = set(complement)
    maximal = tuple(
        m for m in complement
        if not any(m != other and m | other == other for other in comp_set)
    )
    failures = tuple(m for m in maximal if not _is_prime_commutative(ring, m))
    return maximal, failures


def check_oka_family(ring: RingSpec, family, budget: int | None = None) -> FamilyReport:
    """Verify the Oka condition ((I,a) and (I:a) in F imply I in F) for every
    ideal I and element a, then the Prime Ideal Principle consequence.

    `family` is a predicate over ideal bitmasks or a collection of them; R
    itself must belong to it.
    """
    _require_commutative(ring, "an Oka family check")
    ideals = enumerate_one_sided_ideals(ring, "two-sided", budget)
    member = _normalize_family(family, ideals)
    if ring.full_mask not in member:
        raise RinguaError("the family must contain the whole ring")
    violations = []
    for ideal in ideals:
        if ideal in member:
            continue
        for a in range(ring.size):
            extended, colon = ideal_arithmetic(ring, ideal, a)
            if extended in member and colon in member:
                violations.append((ideal, a, extended, colon))
    holds = not violations
    if holds:
        maximal, failures = _pip_consequence(ring, ideals, member)
        pip_ok = not failures
    else:
        maximal, failures, pip_ok = (), (), None
    return FamilyReport("oka", holds, tuple(violations), maximal, pip_ok, failures)


def check_ako_family(ring: RingSpec, family, budget: int | None = None) -> FamilyReport:
    """Verify the Ako condition ((I,a) and (I,b) in F imply (I,ab) in F),
    then the same Prime Ideal Principle consequence as for Oka families.
    """
    _require_commutative(ring, "an Ako family check")
    ideals = enumerate_one_sided_ideals(ring, "two-sided", budget)
    member = _normalize_family(family, ideals)
    if ring.full_mask not in member:
        raise RinguaError("the family must contain the whole ring")
    violations = []
    for ideal in ideals:
        ext = {a: ideal_arithmetic(ring, ideal, a)[0] for a in range(ring.size)}
        for a in range(ring.size):
            if ext[a] not in member:
                continue
            for b in range(ring.size):
                if ext[b] not in member:
                    continue
                if ext[ring.mul[a][b]] not in member:
                    violations.append((ideal, a, b, ext[ring.mul[a][b]]))
    holds = not violations
    if holds:
        maximal, failures = _pip_consequence(ring, ideals, member)
        pip_ok = not failures
    else:
        maximal, failures, pip_ok = (), (), None
    return FamilyReport("ako", holds, tuple(violations), maximal, pip_ok, failures)


# ---------------------------------------------------------------------------
# Chains and finite generation


def longest_ideal_chain(ring: RingSpec, side: str, budget: int | None = None) -> int:
    """Length of a longest chain {0} < I_1 < ... < R through ideals of the
    given side, counting strict inclusions (so the zero ring has length 0).
    """
    ideals = enumerate_one_sided_ideals(ring, side, budget)
    # ideals are sorted by popcount, so every proper subset precedes its superset
    longest: dict[int, int] = {}
    for mask in ideals:
        best = 0
        for prev, depth in longest.items():
            if prev != mask and prev | mask == mask:
                best = max(best, depth + 1)
        longest[mask] = best
    return longest[ring.full_mask]


def generated_ideal(ring: RingSpec, generators, side: str = "right") -> int:
    """Smallest ideal of the given side containing all the generators."""
    mask = 0
    for g in generators:
        mask |= principal_ideal(ring, g, side)
    return kernels.close_under_add(ring.add, mask) if mask else 1 << ring.zero


@dataclass(frozen=True)
class PrimeGenerators:
    subset: int
    generators: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "bitmask": format(self.subset, "#x"),
            "generators": list(self.generators),
            "count": len(self.generators),
        }


def cohen_check(ring: RingSpec, budget: int | None = None) -> list[PrimeGenerators]:
    """Exhibit a minimal generating set for every prime ideal.

    For finite commutative rings this always succeeds (any ideal is generated
    by its members); the value of the check is the per-prime generator count.
    Searches exhaustively by generating-set size up to 3, then falls back to
    an irredundant greedy set.
    """
    _require_commutative(ring, "the finite-generation check")
    ideals = enumerate_one_sided_ideals(ring, "two-sided", budget)
    out = []
    for mask in ideals:
        if not _is_prime_commutative(ring, mask):
            continue
        members = [x for x in subset_members(mask, ring.size) if x != ring.zero]
        found: tuple[int, ...] | None = None
        if mask == 1 << ring.zero:
            found = ()
        else:
            for k in range(1, min(len(members), 3) + 1):
                for combo in itertools.combinations(members, k):
                    if generated_ideal(ring, combo) == mask:
                        found = combo
                        break
                if found is not None:
                    break
        if found is None:
            gens = list(members)
            for g in list(gens):
                trial = [x for x in gens if x != g]
                if trial and generated_ideal(ring, trial) == mask:
                    gens = trial
            found = tuple(gens)
        out.append(PrimeGenerators(mask, found))
    return out


def ideal_list_json(ring: RingSpec, ideals: list[int], side: str) -> list[dict]:
    """Serialize an enumeration per the interchange contract."""
    return [flags.to_json() for flags in maximal_and_prime(ring, ideals, side)]
