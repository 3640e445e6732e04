"""Finite Jaco graphs J_n(1) and their structural invariants.

The graph lives on vertices v_1..v_n. Scanning i upward, v_i receives its
in-degree d^-(v_i) from lower-indexed vertices only, and then sends arcs to
the contiguous block v_{i+1} .. v_{min(n, 2i - d^-(v_i))}. Because every
out-neighbourhood is a contiguous index range, adjacency queries reduce to a
range test and the whole degree structure can be computed in one O(n) sweep.

`inf_out_deg` records the out-degree v_i would have in a sufficiently large
graph; it is obtained by running the same construction out to 2n vertices
(out-neighbours of v_i never exceed index 2i) and truncating.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .digraph import DiGraph
from .errors import InternalConsistencyError


def _in_degree_sweep(limit: int) -> tuple[list[int], list[int]]:
    """In-degrees and untruncated arc reach for v_1..v_limit, 1-based tables.

    reach[i] = 2i - d^-(v_i) is the highest out-neighbour index of v_i before
    any truncation. The sweep is sound because arcs into v_i come only from
    lower-indexed vertices, so d^-(v_i) is final when i is reached.
    """
    in_deg = [0] * (limit + 1)
    reach = [0] * (limit + 1)
    pending = [0] * (limit + 2)  # difference array of open out-ranges
    active = 0
    for i in range(1, limit + 1):
        active += pending[i]
        in_deg[i] = active
        r = 2 * i - active
        reach[i] = r
        hi = min(limit, r)
        if i + 1 <= hi:
            pending[i + 1] += 1
            pending[hi + 1] -= 1
    return in_deg, reach


class JacoGraph:
    """J_n(1) with its degree tables. Immutable after construction.

    Vertices are 1-based; all tables carry a padding 0 at index 0 so that
    table[i] refers to v_i with no index shift.
    """

    def __init__(self, n: int, in_deg: list[int], out_deg: list[int],
                 inf_out_deg: list[int]):
        self.n = n
        self.in_deg = in_deg
        self.out_deg = out_deg
        self.inf_out_deg = inf_out_deg

    def __repr__(self):
        return f"JacoGraph(n={self.n}, eps={self.eps})"

    @property
    def eps(self) -> int:
        return sum(self.out_deg[1:])

    def out_hi(self, i: int) -> int:
        """Highest out-neighbour of v_i; out-neighbours are i+1 .. out_hi(i)."""
        return i + self.out_deg[i]

    def has_arc(self, i: int, j: int) -> bool:
        return 1 <= i < j <= self.n and j <= self.out_hi(i)

    @cached_property
    def arcs(self) -> list[tuple[int, int]]:
        """All arcs (i, j), i < j, sorted lexicographically."""
        return [
            (i, j)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.out_hi(i) + 1)
        ]

    def to_digraph(self) -> DiGraph:
        return DiGraph(self.n, tuple(self.arcs))

    def to_json(self) -> str:
        return json.dumps(
            {"kind": "jaco", "n": self.n, "arcs": [list(a) for a in self.arcs]}
        )


def build_jaco(n: int) -> JacoGraph:
    """Construct J_n(1).

    Runs the arc-placement sweep out to 2n vertices so that the untruncated
    out-degrees of v_1..v_n are known, then truncates to n.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError("vertex count must be >= 1")
    in_deg_full, reach = _in_degree_sweep(2 * n)
    in_deg = in_deg_full[: n + 1]
    inf_out_deg = [0] * (n + 1)
    out_deg = [0] * (n + 1)
    for i in range(1, n + 1):
        inf_out_deg[i] = reach[i] - i
        out_deg[i] = min(reach[i], n) - i
    return JacoGraph(n, in_deg, out_deg, inf_out_deg)


def finite_degree(g: JacoGraph, i: int) -> int:
    """Degree of v_i inside J_n(1): d^-(v_i) + d^+(v_i)."""
    if not 1 <= i <= g.n:
        raise ValueError(f"vertex index {i} out of range 1..{g.n}")
    return g.in_deg[i] + g.out_deg[i]


def jaconian_set(g: JacoGraph) -> set[int]:
    """Indices of all vertices attaining the maximum degree of J_n(1)."""
    degrees = [g.in_deg[i] + g.out_deg[i] for i in range(1, g.n + 1)]
    top = max(degrees)
    return {i for i, d in enumerate(degrees, start=1) if d == top}


def prime_jaconian(g: JacoGraph) -> int:
    """Lowest index attaining the maximum degree."""
    return min(jaconian_set(g))


@dataclass(frozen=True)
class HopeView:
    """The complete subgraph induced on the vertices above the prime Jaconian one."""

    prime_index: int
    vertices: range

    @property
    def arc_count(self) -> int:
        k = len(self.vertices)
        return k * (k - 1) // 2

    @property
    def arcs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(a, b) for a in vs for b in vs if a < b]


def hope_subgraph(g: JacoGraph) -> HopeView:
    """Vertex range prime+1 .. n; completeness of the induced subgraph is asserted."""
    i = prime_jaconian(g)
    for a in range(i + 1, g.n):
        # complete on the range iff every vertex reaches the last one
        if g.out_hi(a) < g.n:
            raise InternalConsistencyError(
                f"subgraph on {i + 1}..{g.n} is not complete: "
                f"v_{a} reaches only v_{g.out_hi(a)}"
            )
    return HopeView(prime_index=i, vertices=range(i + 1, g.n + 1))


def jaco_from_json(text: str) -> JacoGraph:
    """Parse and validate a Jaco graph file; the arc list must be exactly J_n(1)."""
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("jaco JSON must be an object")
    kind = data.get("kind", "jaco")
    if kind != "jaco":
        raise ValueError(f"expected a jaco file, got kind {kind!r}")
    if "n" not in data or "arcs" not in data:
        raise ValueError('jaco JSON needs "n" and "arcs"')
    n = data["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError("vertex count must be >= 1")
    given = [tuple(a) for a in data["arcs"]]
    g = build_jaco(n)
    if given != g.arcs:
        raise ValueError(f"arc list does not satisfy the Jaco arc rule for n={n}")
    return g
