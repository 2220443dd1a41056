"""Ideal posets as Hasse diagrams, emitted as DOT text.

The diagram keeps only cover edges (the transitive reduction of set
inclusion), which is the defining economy of a Hasse drawing: anything
implied by transitivity is left to paths.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

LABEL_LIMIT = 40


@dataclass(frozen=True)
class PosetNode:
    id: str
    label: str
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class PosetDiagram:
    nodes: tuple[PosetNode, ...]
    cover_edges: tuple[tuple[str, str], ...]  # (lower id, upper id)

    def to_json(self) -> dict:
        return {
            "nodes": [
                {"id": n.id, "label": n.label, "flags": list(n.flags)} for n in self.nodes
            ],
            "edges": [list(e) for e in self.cover_edges],
        }


def truncate_label(label: str, limit: int = LABEL_LIMIT) -> str:
    """Deterministic display truncation: head of the label plus a short hash."""
    if len(label) <= limit:
        return label
    digest = hashlib.sha1(label.encode("utf-8")).hexdigest()[:8]
    return label[:limit] + "#" + digest


def ideal_poset(subsets: list[int], labeler=None, flags=None) -> PosetDiagram:
    """Build the inclusion poset of distinct bitmask subsets.

    Nodes are ordered canonically by (popcount, mask); cover edges are the
    transitive reduction of strict inclusion. `labeler` maps a mask to a
    display string (default: hex); `flags` maps a mask to a tuple of tags.
    """
    if len(set(subsets)) != len(subsets):
        raise ValueError("subsets must be pairwise distinct")
    order = sorted(subsets, key=lambda m: (m.bit_count(), m))
    node_id = {mask: f"n{i}" for i, mask in enumerate(order)}

    def lt(a: int, b: int) -> bool:
        return a != b and a | b == b

    edges = []
    for a in order:
        for b in order:
            if lt(a, b) and not any(lt(a, c) and lt(c, b) for c in order):
                edges.append((node_id[a], node_id[b]))
    edges.sort(key=lambda e: (int(e[0][1:]), int(e[1][1:])))

    if labeler is None:
        labeler = lambda mask: format(mask, "#x")
    nodes = tuple(
        PosetNode(
            id=node_id[mask],
            label=truncate_label(labeler(mask)),
            flags=tuple(flags(mask)) if flags else (),
        )
        for mask in order
    )
    return PosetDiagram(nodes, tuple(edges))


def ring_ideal_poset(ring, subsets: list[int], kinds: dict[int, str] | None = None) -> PosetDiagram:
    """Ideal poset labelled with ring element labels (comma-joined members)."""
    def labeler(mask: int) -> str:
        return ring.subset_label(mask) if mask else "{}"

    flags = (lambda mask: (kinds[mask],) if mask in kinds else ()) if kinds else None
    return ideal_poset(subsets, labeler=labeler, flags=flags)


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def emit_dot(diagram: PosetDiagram) -> str:
    """Deterministic DOT rendering: edges run lower -> upper, ranks grow upward."""
    lines = ["digraph {"]
    if diagram.nodes:
        lines.append("  rankdir=BT;")
        lines.append("  node [shape=box];")
        for node in diagram.nodes:
            label = node.label
            if node.flags:
                label += "\\n(" + ",".join(node.flags) + ")"
            lines.append(f'  {node.id} [label="{_escape(label)}"];')
        for lower, upper in diagram.cover_edges:
            lines.append(f"  {lower} -> {upper};")
    lines.append("}")
    return "\n".join(lines) + "\n"
