"""Independent brute-force oracles.

These deliberately avoid the library's algorithms: ideal enumeration scans
every bitmask, matrix products are triple loops, expression evaluation is
recursive over the tree, areas come from the shoelace formula, and poset
reachability is a plain transitive closure. Tests compare library output
against these.
"""

from __future__ import annotations

from fractions import Fraction


def brute_force_ideals(add, mul, zero: int, side: str) -> list[int]:
    """Every ideal of the given side by scanning all 2^n subsets (n <= 16)."""
    n = len(add)
    assert n <= 16, "oracle is exponential; keep carriers small"
    out = []
    for mask in range(1, 1 << n):
        if not (mask >> zero) & 1:
            continue
        members = [i for i in range(n) if (mask >> i) & 1]
        if any(not (mask >> add[a][b]) & 1 for a in members for b in members):
            continue
        ok = True
        if side in ("left", "two-sided"):
            ok = all((mask >> mul[r][a]) & 1 for r in range(n) for a in members)
        if ok and side in ("right", "two-sided"):
            ok = all((mask >> mul[a][r]) & 1 for r in range(n) for a in members)
        if ok:
            out.append(mask)
    return sorted(out, key=lambda m: (bin(m).count("1"), m))


def dense_matmul(a: list[list], b: list[list]) -> list[list]:
    rows, inner, cols = len(a), len(b), len(b[0])
    assert len(a[0]) == inner
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(rows)
    ]


def shoelace_area(points) -> Fraction | float:
    """Absolute polygon area; points must be in boundary order."""
    total = 0.0
    for (x1, y1), (x2, y2) in zip(points, points[1:] + points[:1]):
        total += x1 * y2 - x2 * y1
    return abs(total) / 2


def reachable_pairs(node_ids, edges) -> set[tuple[str, str]]:
    """Transitive closure of a DAG given as (lower, upper) edges."""
    succ = {nid: set() for nid in node_ids}
    for lo, hi in edges:
        succ[lo].add(hi)
    closure = set()
    for start in node_ids:
        stack = list(succ[start])
        seen = set()
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            closure.add((start, node))
            stack.extend(succ[node])
    return closure


# --- random arithmetic expressions with a recursive-descent oracle ---------


def random_expr(rng, depth: int = 0):
    """Expression tree: ('num', k) | ('var', name) | (op, left, right)."""
    if depth >= 4 or rng.random() < 0.35:
        if rng.random() < 0.5:
            return ("num", rng.randint(0, 9))
        return ("var", rng.choice(["a", "b", "c", "r", "x"]))
    op = rng.choice(["+", "*"])
    return (op, random_expr(rng, depth + 1), random_expr(rng, depth + 1))


_LEVEL = {"+": 1, "*": 2}


def render_expr(tree, rng) -> str:
    """Infix text whose standard-precedence parse equals the tree.

    Parentheses are emitted whenever required (lower-precedence child, or an
    equal-precedence right child under left associativity) and occasionally
    when redundant, to exercise the parser.
    """
    kind = tree[0]
    if kind == "num":
        return str(tree[1])
    if kind == "var":
        return tree[1]
    op, left, right = tree
    lt = render_expr(left, rng)
    rt = render_expr(right, rng)
    if left[0] in _LEVEL and (_LEVEL[left[0]] < _LEVEL[op] or rng.random() < 0.3):
        lt = f"({lt})"
    if right[0] in _LEVEL and (_LEVEL[right[0]] <= _LEVEL[op] or rng.random() < 0.3):
        rt = f"({rt})"
    return f"{lt} {op} {rt}"


def eval_expr(tree, env) -> int:
    kind = tree[0]
    if kind == "num":
        return tree[1]
    if kind == "var":
        return env[tree[1]]
    op, left, right = tree
    lv, rv = eval_expr(left, env), eval_expr(right, env)
    return lv + rv if op == "+" else lv * rv
