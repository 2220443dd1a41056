"""One-sided modules over finite rings.

A module is an abelian group (tables) with an external action table of shape
group.size x ring.size. For a right module action[x][r] means x.r; for a left
module it means r.x. The two sides differ in the associativity law linking
the action to the ring multiplication, which is exactly what makes left and
right structures genuinely different objects.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .errors import FormatError, RinguaError
from .rings import AxiomCheck, AxiomReport, RingSpec, subset_members


@dataclass(frozen=True)
class GroupSpec:
    """A finite abelian group given by its addition table."""

    size: int
    add: list[list[int]]
    zero: int
    labels: list[str] | None = None

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "add": [list(r) for r in self.add],
            "zero": self.zero,
            "labels": list(self.labels) if self.labels else None,
        }


@dataclass(frozen=True)
class ModuleSpec:
    group: GroupSpec
    ring: RingSpec
    action: list[list[int]]
    side: str  # "left" | "right"

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "ring": self.ring.to_json(),
            "action": [list(r) for r in self.action],
            "side": self.side,
        }


def _group_checks(group: GroupSpec) -> list[AxiomCheck]:
    checks = []
    shape = None
    if len(group.add) != group.size or any(len(r) != group.size for r in group.add):
        shape = ("add", len(group.add))
    else:
        for i, row in enumerate(group.add):
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < group.size:
                    shape = ("add", i, j, v)
                    break
            if shape:
                break
    checks.append(AxiomCheck("group-table-shape", shape is None, shape))
    if shape is not None:
        return checks
    w = kernels.first_noncommutative(group.add)
    checks.append(AxiomCheck("group-commutative", w is None, w))
    w = kernels.first_nonassociative(group.add)
    checks.append(AxiomCheck("group-associative", w is None, w))
    zw = None
    for x in range(group.size):
        if group.add[group.zero][x] != x:
            zw = (x,)
            break
    checks.append(AxiomCheck("group-identity", zw is None, zw))
    iw = None
    for x in range(group.size):
        if group.zero not in group.add[x]:
            iw = (x,)
            break
    checks.append(AxiomCheck("group-inverses", iw is None, iw))
    return checks


def verify_module_axioms(module: ModuleSpec) -> AxiomReport:
    """Exhaustive module-law check with witness tuples.

    Right side: x.(a+b) = x.a + x.b, (x+y).a = x.a + y.a, x.(ab) = (x.a).b,
    and x.1 = x when the ring is unital.
    Left side (action[x][s] = s.x): s(x+y) = sx + sy, (s+t)x = sx + tx,
    s(tx) = (st)x, and 1.x = x when unital.
    """
    if module.side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {module.side!r}")
    checks = _group_checks(module.group)
    if any(not c.ok for c in checks):
        return AxiomReport(tuple(checks))
    g, ring, act = module.group, module.ring, module.action

    shape = None
    if len(act) != g.size or any(len(r) != ring.size for r in act):
        shape = ("action", len(act))
    else:
        for i, row in enumerate(act):
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < g.size:
                    shape = ("action", i, j, v)
                    break
            if shape:
                break
    checks.append(AxiomCheck("action-table-shape", shape is None, shape))
    if shape is not None:
        return AxiomReport(tuple(checks))

    gadd, radd, rmul = g.add, ring.add, ring.mul

    w = None
    for x in range(g.size):
        for a in range(ring.size):
            for b in range(ring.size):
                if act[x][radd[a][b]] != gadd[act[x][a]][act[x][b]]:
                    w = (x, a, b)
                    break
            if w:
                break
        if w:
            break
    checks.append(AxiomCheck("scalar-distributivity", w is None, w))

    w = None
    for x in range(g.size):
        for y in range(g.size):
            for a in range(ring.size):
                if act[gadd[x][y]][a] != gadd[act[x][a]][act[y][a]]:
                    w = (x, y, a)
                    break
            if w:
                break
        if w:
            break
    checks.append(AxiomCheck("vector-distributivity", w is None, w))

    w = None
    for x in range(g.size):
        for a in range(ring.size):
            for b in range(ring.size):
                if module.side == "right":
                    # x.(ab) = (x.a).b
                    ok = act[x][rmul[a][b]] == act[act[x][a]][b]
                else:
                    # a(bx) = (ab)x
                    ok = act[act[x][b]][a] == act[x][rmul[a][b]]
                if not ok:
                    w = (x, a, b)
                    break
            if w:
                break
        if w:
            break
    checks.append(AxiomCheck("scalar-associativity", w is None, w))

    if ring.one is not None:
        w = None
        for x in range(g.size):
            if act[x][ring.one] != x:
                w = (x,)
                break
        checks.append(AxiomCheck("unitary", w is None, w))

    return AxiomReport(tuple(checks))


def regular_module(ring: RingSpec, side: str = "right") -> ModuleSpec:
    """The ring acting on its own additive group by its multiplication."""
    group = GroupSpec(ring.size, [list(r) for r in ring.add], ring.zero,
                      list(ring.labels) if ring.labels else None)
    if side == "right":
        action = [list(r) for r in ring.mul]
    elif side == "left":
        action = [[ring.mul[s][x] for s in range(ring.size)] for x in range(ring.size)]
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return ModuleSpec(group, ring, action, side)


def ideal_as_module(ring: RingSpec, mask: int, side: str = "right") -> ModuleSpec:
    """A one-sided ideal viewed as a module over its ring."""
    from .ideals import classify_subset

    cls = classify_subset(ring, mask)
    if cls.kind not in (side, "two-sided"):
        raise RinguaError(f"subset classifies as {cls.kind}; not a {side} ideal")
    members = subset_members(mask, ring.size)
    index_of = {m: i for i, m in enumerate(members)}
    k = len(members)
    add = [[index_of[ring.add[members[i]][members[j]]] for j in range(k)] for i in range(k)]
    group = GroupSpec(k, add, index_of[ring.zero], [ring.label(m) for m in members])
    if side == "right":
        action = [[index_of[ring.mul[members[i]][r]] for r in range(ring.size)] for i in range(k)]
    else:
        action = [[index_of[ring.mul[r][members[i]]] for r in range(ring.size)] for i in range(k)]
    return ModuleSpec(group, ring, action, side)


@dataclass(frozen=True)
class QuotientModule:
    """R/T as a right module, plus the induced-multiplication verdict.

    The coset action x+T -> xr+T is always well defined for a right ideal T;
    coset multiplication is well defined only when T is two-sided, and
    `multiplication_witness` exhibits the failure otherwise:
    (x, x2, y, y2, x*y, x2*y2) with x ~ x2 and y ~ y2 but x*y !~ x2*y2.
    """

    module: ModuleSpec
    cosets: tuple[tuple[int, ...], ...]
    multiplication_well_defined: bool
    multiplication_witness: tuple | None

    def to_json(self) -> dict:
        return {
            "cosets": [list(c) for c in self.cosets],
            "side": self.module.side,
            "multiplication_well_defined": self.multiplication_well_defined,
            "multiplication_witness": (
                list(self.multiplication_witness)
                if self.multiplication_witness is not None
                else None
            ),
        }


def quotient_right_module(ring: RingSpec, mask: int) -> QuotientModule:
    """Quotient of the ring by a right ideal, as a right module over the ring."""
    from .ideals import classify_subset
    from .rings import _cosets_by_subgroup, multiplication_illdefined_witness

    cls = classify_subset(ring, mask)
    if cls.kind not in ("right", "two-sided"):
        raise RinguaError(f"subset classifies as {cls.kind}; not a right ideal")
    reps, coset_of = _cosets_by_subgroup(ring, mask)
    k = len(reps)
    members_of: list[list[int]] = [[] for _ in range(k)]
    for x in range(ring.size):
        members_of[coset_of[x]].append(x)
    labels = ["{" + ",".join(ring.label(x) for x in ms) + "}" for ms in members_of]
    add = [[coset_of[ring.add[reps[i]][reps[j]]] for j in range(k)] for i in range(k)]
    group = GroupSpec(k, add, coset_of[ring.zero], labels)
    action = [[coset_of[ring.mul[reps[i]][r]] for r in range(ring.size)] for i in range(k)]
    module = ModuleSpec(group, ring, action, "right")
    witness = multiplication_illdefined_witness(ring, mask)
    return QuotientModule(
        module=module,
        cosets=tuple(tuple(ms) for ms in members_of),
        multiplication_well_defined=witness is None,
        multiplication_witness=witness,
    )


def module_from_json(data: dict) -> ModuleSpec:
    """Decode the module interchange format (group, ring, action, side)."""
    from .rings import parse_ring_json

    if not isinstance(data, dict):
        raise FormatError("module spec must be a JSON object")
    missing = {"group", "ring", "action", "side"} - data.keys()
    if missing:
        raise FormatError(f"module spec missing keys: {sorted(missing)}")
    gdata = data["group"]
    if not isinstance(gdata, dict) or {"size", "add", "zero"} - gdata.keys():
        raise FormatError("module group must be an object with size, add, zero")
    group = GroupSpec(gdata["size"], gdata["add"], gdata["zero"], gdata.get("labels"))
    ring = parse_ring_json(data["ring"])
    side = data["side"]
    if side not in ("left", "right"):
        raise FormatError(f"module side must be 'left' or 'right', got {side!r}")
    action = data["action"]
    if not isinstance(action, list):
        raise FormatError("module action must be a table")
    return ModuleSpec(group, ring, action, side)
