"""Finite directed graphs with 1-based vertex indices."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class DiGraph:
    """A simple digraph: nu vertices named 1..nu, arcs as (tail, head) pairs."""

    nu: int
    arcs: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.nu, int) or self.nu < 1:
            raise ValueError("vertex count must be >= 1")
        arcs = tuple((int(t), int(h)) for t, h in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        seen = set()
        for t, h in arcs:
            if not (1 <= t <= self.nu and 1 <= h <= self.nu):
                raise ValueError(f"arc ({t}, {h}) out of range 1..{self.nu}")
            if t == h:
                raise ValueError(f"self-loop at vertex {t}")
            if (t, h) in seen:
                raise ValueError(f"duplicate arc ({t}, {h})")
            seen.add((t, h))

    @property
    def eps(self) -> int:
        return len(self.arcs)

    def out_degrees(self) -> list[int]:
        """Out-degree table, 1-based (index 0 unused)."""
        out = [0] * (self.nu + 1)
        for t, _ in self.arcs:
            out[t] += 1
        return out

    def in_degrees(self) -> list[int]:
        """In-degree table, 1-based (index 0 unused)."""
        ind = [0] * (self.nu + 1)
        for _, h in self.arcs:
            ind[h] += 1
        return ind

    def reversed(self) -> DiGraph:
        return DiGraph(self.nu, tuple((h, t) for t, h in self.arcs))

    def to_json(self) -> str:
        return json.dumps(
            {"kind": "digraph", "nu": self.nu, "arcs": [list(a) for a in self.arcs]}
        )


def digraph_from_json(text: str) -> DiGraph:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("digraph JSON must be an object")
    kind = data.get("kind", "digraph")
    if kind != "digraph":
        raise ValueError(f"expected a digraph file, got kind {kind!r}")
    if "nu" not in data or "arcs" not in data:
        raise ValueError('digraph JSON needs "nu" and "arcs"')
    return DiGraph(data["nu"], tuple(tuple(a) for a in data["arcs"]))


def is_acyclic(g: DiGraph) -> bool:
    """Kahn's algorithm; true iff g has a topological order."""
    indeg = g.in_degrees()
    succ = [[] for _ in range(g.nu + 1)]
    for t, h in g.arcs:
        succ[t].append(h)
    stack = [v for v in range(1, g.nu + 1) if indeg[v] == 0]
    seen = len(stack)
    while stack:
        v = stack.pop()
        for u in succ[v]:
            indeg[u] -= 1
            if indeg[u] == 0:
                stack.append(u)
                seen += 1
    return seen == g.nu


def underlying_edges(g: DiGraph) -> list[tuple[int, int]]:
    """Undirected edge set of g as sorted (low, high) pairs."""
    return sorted({(t, h) if t < h else (h, t) for t, h in g.arcs})


def complete_graph(m: int) -> DiGraph:
    """K_m, oriented low index -> high index."""
    if not isinstance(m, int) or m < 1:
        raise ValueError("vertex count must be >= 1")
    return DiGraph(m, tuple((i, j) for i in range(1, m) for j in range(i + 1, m + 1)))


def disjoint_union(graphs: list[DiGraph]) -> DiGraph:
    """Relabels each component onto a fresh index block, in list order."""
    if not graphs:
        raise ValueError("union of no graphs")
    arcs: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        arcs.extend((t + offset, h + offset) for t, h in g.arcs)
        offset += g.nu
    return DiGraph(offset, tuple(arcs))
