"""Finite rings as explicit operation tables.

A ring is a carrier {0, ..., n-1} with full n x n addition and multiplication
tables. Everything downstream (ideal enumeration, modules, quotients) works by
exhaustive loops over these tables, so every axiom is decidable. Elements are
plain ints (their carrier index); subsets are int bitmasks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import kernels
from .errors import AxiomError, BudgetError, FormatError, QuotientError

Element = int
Table = list[list[int]]

# Cap on carrier size for product-style constructors (matrix and triangular
# rings build n^2-entry tables; 4096 elements is the largest that stays cheap).
ELEMENT_BUDGET = 4096

MAX_BOOLEAN_UNIVERSE = 5


@dataclass(frozen=True)
class RingSpec:
    """A finite ring given by its Cayley tables.

    `one` is optional: the definition used here does not require a
    multiplicative identity. `labels` carry display strings per element.
    Instances are treated as immutable; do not mutate the tables.
    """

    size: int
    add: Table
    mul: Table
    zero: Element
    one: Element | None = None
    labels: list[str] | None = None

    def label(self, x: Element) -> str:
        return self.labels[x] if self.labels else str(x)

    def subset_label(self, mask: int) -> str:
        return ",".join(self.label(i) for i in subset_members(mask, self.size))

    def neg(self, x: Element) -> Element:
        return self.add[x].index(self.zero)

    def is_commutative(self) -> bool:
        return kernels.first_noncommutative(self.mul) is None

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "add": [list(row) for row in self.add],
            "mul": [list(row) for row in self.mul],
            "zero": self.zero,
            "one": self.one,
            "labels": list(self.labels) if self.labels else None,
        }


def subset_members(mask: int, size: int) -> list[int]:
    return [i for i in range(size) if (mask >> i) & 1]


def members_to_mask(members) -> int:
    mask = 0
    for m in members:
        mask |= 1 << m
    return mask


def check_element(ring: RingSpec, x: Element) -> None:
    if not isinstance(x, int) or not 0 <= x < ring.size:
        raise ValueError(f"element index {x!r} out of range [0, {ring.size})")


def check_subset(ring: RingSpec, mask: int) -> None:
    if not isinstance(mask, int) or mask < 0 or mask > ring.full_mask:
        raise ValueError(f"subset mask {mask!r} out of range for carrier size {ring.size}")


# ---------------------------------------------------------------------------
# Axiom verification


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    ok: bool
    witness: tuple | None = None

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "ok": self.ok,
            "witness": list(self.witness) if self.witness is not None else None,
        }


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[AxiomCheck, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def _table_shape_witness(ring: RingSpec):
    n = ring.size
    for name, table in (("add", ring.add), ("mul", ring.mul)):
        if len(table) != n:
            return (name, len(table))
        for i, row in enumerate(table):
            if len(row) != n:
                return (name, i, len(row))
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    return (name, i, j, v)
    if not 0 <= ring.zero < n:
        return ("zero", ring.zero)
    if ring.one is not None and not 0 <= ring.one < n:
        return ("one", ring.one)
    return None


def verify_ring_axioms(ring: RingSpec) -> AxiomReport:
    """Exhaustively check the ring axioms, reporting a witness per failure.

    Checks, in order: table well-formedness, abelian group axioms for the
    addition (commutative, associative, identity, inverses), associativity of
    the multiplication, both distributive laws, and the identity law when
    `one` is present. Witness tuples are element indices in scan order.
    """
    checks = []
    shape = _table_shape_witness(ring)
    checks.append(AxiomCheck("table-shape", shape is None, shape))
    if shape is not None:
        # Remaining scans index with table entries; bail out early.
        return AxiomReport(tuple(checks))

    w = kernels.first_noncommutative(ring.add)
    checks.append(AxiomCheck("add-commutative", w is None, w))
    w = kernels.first_nonassociative(ring.add)
    checks.append(AxiomCheck("add-associative", w is None, w))

    zero_w = None
    for x in range(ring.size):
        if ring.add[ring.zero][x] != x or ring.add[x][ring.zero] != x:
            zero_w = (x,)
            break
    checks.append(AxiomCheck("additive-identity", zero_w is None, zero_w))

    inv_w = None
    for x in range(ring.size):
        if ring.zero not in ring.add[x]:
            inv_w = (x,)
            break
    checks.append(AxiomCheck("additive-inverses", inv_w is None, inv_w))

    w = kernels.first_nonassociative(ring.mul)
    checks.append(AxiomCheck("mul-associative", w is None, w))
    w = kernels.first_left_distrib_violation(ring.add, ring.mul)
    checks.append(AxiomCheck("left-distributive", w is None, w))
    w = kernels.first_right_distrib_violation(ring.add, ring.mul)
    checks.append(AxiomCheck("right-distributive", w is None, w))

    if ring.one is not None:
        one_w = None
        for x in range(ring.size):
            if ring.mul[ring.one][x] != x or ring.mul[x][ring.one] != x:
                one_w = (x,)
                break
        checks.append(AxiomCheck("multiplicative-identity", one_w is None, one_w))

    return AxiomReport(tuple(checks))


def _find_identity(mul: Table) -> int | None:
    n = len(mul)
    for e in range(n):
        if all(mul[e][x] == x and mul[x][e] == x for x in range(n)):
            return e
    return None


# ---------------------------------------------------------------------------
# Constructors


def make_cyclic_ring(n: int) -> RingSpec:
    """Integers mod n with the usual tables; the baseline commutative ring."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"carrier size must be a positive integer, got {n!r}")
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    return RingSpec(
        size=n,
        add=add,
        mul=mul,
        zero=0,
        one=1 if n > 1 else 0,
        labels=[str(i) for i in range(n)],
    )


def make_boolean_ring(universe_size: int) -> RingSpec:
    """Power set of {1..k}: addition is symmetric difference, product is
    intersection. Every element is idempotent and self-inverse.
    """
    if not isinstance(universe_size, int) or universe_size < 0:
        raise ValueError(f"universe size must be a nonnegative integer, got {universe_size!r}")
    if universe_size > MAX_BOOLEAN_UNIVERSE:
        raise BudgetError(
            f"universe size {universe_size} gives a {2 ** universe_size}-element carrier; "
            f"the cap is {MAX_BOOLEAN_UNIVERSE}"
        )
    n = 1 << universe_size
    add = [[i ^ j for j in range(n)] for i in range(n)]
    mul = [[i & j for j in range(n)] for i in range(n)]

    def set_label(bits: int) -> str:
        elems = [str(k + 1) for k in range(universe_size) if (bits >> k) & 1]
        return "{" + ",".join(elems) + "}"

    return RingSpec(
        size=n,
        add=add,
        mul=mul,
        zero=0,
        one=n - 1,
        labels=[set_label(i) for i in range(n)],
    )


def make_matrix_ring(base: RingSpec, dim: int = 2) -> RingSpec:
    """Ring of dim x dim matrices over `base` (only dim=2 is supported).

    Elements are encoded mixed-radix: the matrix [[a,b],[c,d]] has index
    ((a*s + b)*s + c)*s + d with s = base.size.
    """
    if dim != 2:
        raise ValueError("only 2x2 matrix rings are supported")
    s = base.size
    n = s ** 4
    if n > ELEMENT_BUDGET:
        raise BudgetError(
            f"matrix ring over a {s}-element base has {n} elements; the cap is {ELEMENT_BUDGET}"
        )

    def decode(idx: int) -> tuple[int, int, int, int]:
        d = idx % s
        idx //= s
        c = idx % s
        idx //= s
        b = idx % s
        return idx // s, b, c, d

    def encode(a: int, b: int, c: int, d: int) -> int:
        return ((a * s + b) * s + c) * s + d

    badd, bmul = base.add, base.mul
    entries = [decode(i) for i in range(n)]
    add = [
        [
            encode(badd[a][e], badd[b][f], badd[c][g], badd[d][h])
            for (e, f, g, h) in entries
        ]
        for (a, b, c, d) in entries
    ]
    mul = [
        [
            encode(
                badd[bmul[a][e]][bmul[b][g]],
                badd[bmul[a][f]][bmul[b][h]],
                badd[bmul[c][e]][bmul[d][g]],
                badd[bmul[c][f]][bmul[d][h]],
            )
            for (e, f, g, h) in entries
        ]
        for (a, b, c, d) in entries
    ]
    z = base.zero
    one = None
    if base.one is not None:
        one = encode(base.one, z, z, base.one)
    labels = [
        f"[[{base.label(a)},{base.label(b)}],[{base.label(c)},{base.label(d)}]]"
        for (a, b, c, d) in entries
    ]
    return RingSpec(size=n, add=add, mul=mul, zero=encode(z, z, z, z), one=one, labels=labels)


def _check_action_laws(top: RingSpec, bottom: RingSpec, m_size: int,
                       left_action: Table, right_action: Table) -> None:
    """Validate the bimodule laws the triangular product needs; the bimodule
    group is Z/m_size. Raises AxiomError naming the first violated law.
    """
    def madd(x, y):
        return (x + y) % m_size

    if len(left_action) != top.size or any(len(r) != m_size for r in left_action):
        raise FormatError("left action table must be top.size x bimodule_size")
    if len(right_action) != m_size or any(len(r) != bottom.size for r in right_action):
        raise FormatError("right action table must be bimodule_size x bottom.size")
    for name, table, bound in (("left", left_action, m_size), ("right", right_action, m_size)):
        for row in table:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < bound:
                    raise FormatError(f"{name} action table entry {v!r} out of range [0, {bound})")

    la, ra = left_action, right_action
    for r in range(top.size):
        for m in range(m_size):
            for m2 in range(m_size):
                if la[r][madd(m, m2)] != madd(la[r][m], la[r][m2]):
                    raise AxiomError(
                        f"left action not additive in the bimodule: witness (r={r}, m={m}, m'={m2})"
                    )
    for r in range(top.size):
        for r2 in range(top.size):
            for m in range(m_size):
                if la[top.add[r][r2]][m] != madd(la[r][m], la[r2][m]):
                    raise AxiomError(
                        f"left action not additive in the top ring: witness (r={r}, r'={r2}, m={m})"
                    )
                if la[top.mul[r][r2]][m] != la[r][la[r2][m]]:
                    raise AxiomError(
                        f"left action not associative over the top ring: witness (r={r}, r'={r2}, m={m})"
                    )
    for m in range(m_size):
        for s in range(bottom.size):
            for m2 in range(m_size):
                if ra[madd(m, m2)][s] != madd(ra[m][s], ra[m2][s]):
                    raise AxiomError(
                        f"right action not additive in the bimodule: witness (m={m}, m'={m2}, s={s})"
                    )
            for s2 in range(bottom.size):
                if ra[m][bottom.mul[s][s2]] != ra[ra[m][s]][s2]:
                    raise AxiomError(
                        f"right action not associative over the bottom ring: witness (m={m}, s={s}, s'={s2})"
                    )
    for m in range(m_size):
        for s in range(bottom.size):
            for s2 in range(bottom.size):
                if ra[m][bottom.add[s][s2]] != madd(ra[m][s], ra[m][s2]):
                    raise AxiomError(
                        f"right action not additive in the bottom ring: witness (m={m}, s={s}, s'={s2})"
                    )
    for r in range(top.size):
        for m in range(m_size):
            for s in range(bottom.size):
                if ra[la[r][m]][s] != la[r][ra[m][s]]:
                    raise AxiomError(
                        f"actions not compatible ((r.m).s != r.(m.s)): witness (r={r}, m={m}, s={s})"
                    )


def make_triangular_ring(top: RingSpec, bottom: RingSpec, bimodule_size: int,
                         left_action: Table, right_action: Table) -> RingSpec:
    """Upper-triangular ring built from two rings and a bimodule.

    Elements are triples (r, m, s) with r from `top`, s from `bottom`, and m
    in the cyclic group Z/bimodule_size acted on by `left_action[r][m]` and
    `right_action[m][s]`. Multiplication is
    (r, m, s) * (r', m', s') = (r r', r.m' + m.s', s s'), addition is
    componentwise. The action tables must satisfy the bimodule laws; the
    classic instance (tops Z/4 and Z/2, reduction-mod-2 left action) is the
    standard witness that left and right ideal counts can differ.
    """
    if not isinstance(bimodule_size, int) or bimodule_size < 1:
        raise ValueError(f"bimodule size must be a positive integer, got {bimodule_size!r}")
    n = top.size * bimodule_size * bottom.size
    if n > ELEMENT_BUDGET:
        raise BudgetError(f"triangular ring has {n} elements; the cap is {ELEMENT_BUDGET}")
    _check_action_laws(top, bottom, bimodule_size, left_action, right_action)

    ms, bs = bimodule_size, bottom.size

    def encode(r: int, m: int, s: int) -> int:
        return (r * ms + m) * bs + s

    triples = [
        (r, m, s)
        for r in range(top.size)
        for m in range(ms)
        for s in range(bs)
    ]
    add = [
        [
            encode(top.add[r][r2], (m + m2) % ms, bottom.add[s][s2])
            for (r2, m2, s2) in triples
        ]
        for (r, m, s) in triples
    ]
    la, ra = left_action, right_action
    mul = [
        [
            encode(top.mul[r][r2], (la[r][m2] + ra[m][s2]) % ms, bottom.mul[s][s2])
            for (r2, m2, s2) in triples
        ]
        for (r, m, s) in triples
    ]
    labels = [f"({top.label(r)},{m},{bottom.label(s)})" for (r, m, s) in triples]
    return RingSpec(
        size=n,
        add=add,
        mul=mul,
        zero=encode(top.zero, 0, bottom.zero),
        one=_find_identity(mul),
        labels=labels,
    )


def opposite_ring(ring: RingSpec) -> RingSpec:
    """Same carrier and addition, multiplication arguments swapped."""
    n = ring.size
    mul = [[ring.mul[j][i] for j in range(n)] for i in range(n)]
    return RingSpec(
        size=n,
        add=[list(row) for row in ring.add],
        mul=mul,
        zero=ring.zero,
        one=ring.one,
        labels=list(ring.labels) if ring.labels else None,
    )


# ---------------------------------------------------------------------------
# Loading / quotients


def parse_ring_json(text: str | dict) -> RingSpec:
    """Decode the ring interchange format without verifying the axioms."""
    if isinstance(text, dict):
        data = text
    else:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"ring spec is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("ring spec must be a JSON object")
    missing = {"size", "add", "mul", "zero"} - data.keys()
    if missing:
        raise FormatError(f"ring spec missing keys: {sorted(missing)}")
    size = data["size"]
    if not isinstance(size, int) or size < 1:
        raise FormatError(f"ring size must be a positive integer, got {size!r}")
    for key in ("add", "mul"):
        table = data[key]
        if (
            not isinstance(table, list)
            or len(table) != size
            or any(not isinstance(row, list) or len(row) != size for row in table)
        ):
            raise FormatError(f"'{key}' must be a {size}x{size} table")
        for row in table:
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < size:
                    raise FormatError(f"'{key}' entry {v!r} is not an element index in [0, {size})")
    zero = data["zero"]
    if not isinstance(zero, int) or not 0 <= zero < size:
        raise FormatError(f"'zero' must be an element index, got {zero!r}")
    one = data.get("one")
    if one is not None and (not isinstance(one, int) or not 0 <= one < size):
        raise FormatError(f"'one' must be an element index or null, got {one!r}")
    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != size or any(
            not isinstance(s, str) for s in labels
        ):
            raise FormatError(f"'labels' must be a list of {size} strings")
    return RingSpec(size=size, add=data["add"], mul=data["mul"], zero=zero, one=one, labels=labels)


def load_ring(text: str | dict) -> RingSpec:
    """Parse the interchange format and verify the axioms; reject on failure."""
    ring = parse_ring_json(text)
    report = verify_ring_axioms(ring)
    if not report.ok:
        names = ", ".join(
            f"{c.axiom} (witness {c.witness})" for c in report.failures()
        )
        raise AxiomError(f"ring spec violates axioms: {names}", report)
    return ring


def _cosets_by_subgroup(ring: RingSpec, mask: int) -> tuple[list[int], list[int]]:
    """Partition the carrier into additive cosets of the subgroup `mask`.

    Returns (reps, coset_of): sorted minimal representatives and the map from
    element to coset index.
    """
    coset_of = [-1] * ring.size
    reps: list[int] = []
    for x in range(ring.size):
        if coset_of[x] >= 0:
            continue
        idx = len(reps)
        reps.append(x)
        for t in subset_members(mask, ring.size):
            coset_of[ring.add[x][t]] = idx
    return reps, coset_of


def multiplication_illdefined_witness(ring: RingSpec, mask: int):
    """Find congruent pairs mod `mask` whose products land in different cosets.

    Returns (x, x2, y, y2, xy, x2y2) or None. For a two-sided ideal no witness
    exists; for a one-sided ideal one usually does.
    """
    reps, coset_of = _cosets_by_subgroup(ring, mask)
    n = ring.size
    for x in range(n):
        for x2 in range(x, n):
            if coset_of[x] != coset_of[x2]:
                continue
            for y in range(n):
                for y2 in range(n):
                    if coset_of[y] != coset_of[y2]:
                        continue
                    p, q = ring.mul[x][y], ring.mul[x2][y2]
                    if coset_of[p] != coset_of[q]:
                        return (x, x2, y, y2, p, q)
    return None


def quotient_ring(ring: RingSpec, mask: int) -> RingSpec:
    """Quotient by a two-sided ideal; refuses anything weaker.

    When the subset is a one-sided ideal (or a mere subgroup) the refusal
    carries a witness showing the induced multiplication is ill-defined,
    when one exists.
    """
    from .ideals import classify_subset  # local import avoids a cycle

    cls = classify_subset(ring, mask)
    if cls.kind != "two-sided":
        witness = None
        if cls.kind in ("left", "right", "subgroup-only"):
            witness = multiplication_illdefined_witness(ring, mask)
        raise QuotientError(
            f"subset classifies as {cls.kind}; quotient needs a two-sided ideal"
            + (f" (ill-definedness witness {witness})" if witness else ""),
            classification=cls,
            witness=witness,
        )
    reps, coset_of = _cosets_by_subgroup(ring, mask)
    k = len(reps)
    add = [[coset_of[ring.add[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    mul = [[coset_of[ring.mul[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    members_of = [[] for _ in range(k)]
    for x in range(ring.size):
        members_of[coset_of[x]].append(x)
    labels = ["{" + ",".join(ring.label(x) for x in ms) + "}" for ms in members_of]
    return RingSpec(
        size=k,
        add=add,
        mul=mul,
        zero=coset_of[ring.zero],
        one=coset_of[ring.one] if ring.one is not None else None,
        labels=labels,
    )
