"""Pure-Python scan kernels.

These are the reference implementations of the exhaustive loops that dominate
runtime: whole-table axiom scans (associativity, distributivity) and additive
subgroup enumeration. ringua.kernels selects these when the compiled twin
(ringua._fastkernels) is unavailable or disabled via RINGUA_PURE=1.

Conventions shared with the compiled twin (results must match exactly):
  * operation tables are n x n nested sequences of element indices in [0, n)
  * subsets of the carrier are int bitmasks (bit i set <=> element i present)
  * every "first_*" scanner walks indices in ascending order and returns the
    first violating tuple, or None
"""

from __future__ import annotations


def first_noncommutative(table) -> tuple[int, int] | None:
    n = len(table)
    for i in range(n):
        row = table[i]
        for j in range(i + 1, n):
            if row[j] != table[j][i]:
                return (i, j)
    return None


def first_nonassociative(table) -> tuple[int, int, int] | None:
    """First (i, j, k) with (i*j)*k != i*(j*k), scanning i, then j, then k."""
    n = len(table)
    for i in range(n):
        row_i = table[i]
        for j in range(n):
            row_ij = table[row_i[j]]
            row_j = table[j]
            for k in range(n):
                if row_ij[k] != row_i[row_j[k]]:
                    return (i, j, k)
    return None


def first_left_distrib_violation(add, mul) -> tuple[int, int, int] | None:
    """First (r, a, b) with r*(a+b) != r*a + r*b."""
    n = len(add)
    for r in range(n):
        mul_r = mul[r]
        for a in range(n):
            add_a = add[a]
            add_ra = add[mul_r[a]]
            for b in range(n):
                if mul_r[add_a[b]] != add_ra[mul_r[b]]:
                    return (r, a, b)
    return None


def first_right_distrib_violation(add, mul) -> tuple[int, int, int] | None:
    """First (a, b, r) with (a+b)*r != a*r + b*r."""
    n = len(add)
    for a in range(n):
        add_a = add[a]
        mul_a = mul[a]
        for b in range(n):
            mul_ab = mul[add_a[b]]
            mul_b = mul[b]
            for r in range(n):
                if mul_ab[r] != add[mul_a[r]][mul_b[r]]:
                    return (a, b, r)
    return None


def close_under_add(add, mask: int) -> int:
    """Smallest superset of `mask` closed under the (finite abelian) addition.

    In a finite group, a nonempty subset closed under the operation is a
    subgroup, so no separate negation/identity closure is needed.
    """
    if mask == 0:
        return 0
    members = [i for i in range(len(add)) if (mask >> i) & 1]
    head = 0
    while head < len(members):
        x = members[head]
        head += 1
        row = add[x]
        # Pair x with everything present when it is processed; later arrivals
        # pick up the pair when they are processed themselves.
        for i in range(len(members)):
            z = row[members[i]]
            if not (mask >> z) & 1:
                mask |= 1 << z
                members.append(z)
    return mask


def additive_subgroups(add, zero: int) -> list[int]:
    """All additive subgroups of the table's abelian group, as bitmasks.

    Breadth-first join closure: every subgroup is a join of cyclic subgroups,
    so growing known subgroups by one cyclic generator at a time reaches all
    of them. Output is sorted by (popcount, mask value).
    """
    trivial = 1 << zero
    cyclics = sorted({close_under_add(add, (1 << g) | trivial) for g in range(len(add))})
    found = {trivial}
    seeded = set()
    queue = [trivial]
    while queue:
        sub = queue.pop()
        for cyc in cyclics:
            union = sub | cyc
            if union == sub or union in seeded:
                continue
            seeded.add(union)
            join = close_under_add(add, union)
            if join not in found:
                found.add(join)
                queue.append(join)
    return sorted(found, key=lambda m: (m.bit_count(), m))


def absorption_witness(mul, mask: int, side: str) -> tuple[int, int, int] | None:
    """First failure of one-sided multiplicative absorption for the subset.

    side="left" : wants r*a in subset for every ring element r, subset member a;
                  witness is (r, a, r*a).
    side="right": wants a*r in subset; witness is (a, r, a*r).
    Scan order is r ascending, then members ascending, for both sides.
    """
    n = len(mul)
    members = [a for a in range(n) if (mask >> a) & 1]
    if side == "left":
        for r in range(n):
            row = mul[r]
            for a in members:
                p = row[a]
                if not (mask >> p) & 1:
                    return (r, a, p)
    elif side == "right":
        for r in range(n):
            for a in members:
                p = mul[a][r]
                if not (mask >> p) & 1:
                    return (a, r, p)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return None


def filter_absorbing(mul, masks, side: str) -> list[bool]:
    return [absorption_witness(mul, m, side) is None for m in masks]
