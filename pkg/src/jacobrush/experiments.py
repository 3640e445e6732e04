"""Invariant tables and the two open-ended experiments.

table1 reproduces the standard degree/brush-number table of the family.
The Hope-bound experiment tabulates b_r(J_n(1)) against the brush number of
the complete subgraph above the prime Jaconian vertex, together with the
count of arcs crossing that cut; both experiments report data and assert
nothing about the underlying conjectures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .brushes import brush_number
from .census import DEFAULT_CAP_EPS, brute_force_brush_number, complete_graph_brush_number
from .digraph import DiGraph, disjoint_union
from .errors import CapExceededError
from .jaco import build_jaco, prime_jaconian


@dataclass(frozen=True)
class TableRow:
    i: int
    d_minus: int
    d_plus_inf: int
    prime_vertex: int
    br: int


@dataclass(frozen=True)
class HopeBoundRow:
    n: int
    prime_index: int
    br_jaco: int
    hope_size: int
    br_hope: int
    bound_holds: bool
    linking_edges: int


@dataclass(frozen=True)
class LinkingRow:
    n: int
    prime_index: int
    eps_total: int
    eps_prefix: int
    eps_hope: int
    linking_edges: int


def table1(max_n: int) -> list[TableRow]:
    """One row per i = 1..max_n: in-degree, untruncated out-degree, prime vertex, b_r."""
    if not isinstance(max_n, int) or max_n < 1:
        raise ValueError("vertex count must be >= 1")
    big = build_jaco(2 * max_n)
    rows = []
    for i in range(1, max_n + 1):
        g = build_jaco(i)
        rows.append(
            TableRow(
                i=i,
                d_minus=big.in_deg[i],
                d_plus_inf=big.inf_out_deg[i],
                prime_vertex=prime_jaconian(g),
                br=brush_number(g).br,
            )
        )
    return rows


def linking_edges(n: int) -> int:
    """Arcs crossing the cut between v_1..v_i and the vertices above, i prime Jaconian."""
    g = build_jaco(n)
    i = prime_jaconian(g)
    return sum(max(0, g.out_hi(a) - i) for a in range(1, i + 1))


def hope_bound_experiment(max_n: int) -> list[HopeBoundRow]:
    """Tabulates b_r(J_n(1)) against floor((n-i)^2/4); reports, never asserts."""
    if not isinstance(max_n, int) or max_n < 1:
        raise ValueError("vertex count must be >= 1")
    rows = []
    for n in range(1, max_n + 1):
        g = build_jaco(n)
        i = prime_jaconian(g)
        br_jaco = brush_number(g).br
        hope_size = n - i
        br_hope = complete_graph_brush_number(hope_size) if hope_size >= 1 else 0
        rows.append(
            HopeBoundRow(
                n=n,
                prime_index=i,
                br_jaco=br_jaco,
                hope_size=hope_size,
                br_hope=br_hope,
                bound_holds=br_jaco >= br_hope,
                linking_edges=linking_edges(n),
            )
        )
    return rows


def linking_experiment(max_n: int) -> list[LinkingRow]:
    """Arc counts of the prefix / crossing / Hope partition, one row per n."""
    if not isinstance(max_n, int) or max_n < 1:
        raise ValueError("vertex count must be >= 1")
    rows = []
    for n in range(1, max_n + 1):
        g = build_jaco(n)
        i = prime_jaconian(g)
        hope_size = n - i
        ell = linking_edges(n)
        rows.append(
            LinkingRow(
                n=n,
                prime_index=i,
                eps_total=g.eps,
                eps_prefix=build_jaco(i).eps,
                eps_hope=hope_size * (hope_size - 1) // 2,
                linking_edges=ell,
            )
        )
    return rows


def union_additivity_check(
    components: list[DiGraph], cap_eps: int = DEFAULT_CAP_EPS
) -> bool:
    """True iff the brute-force brush number is additive over the disjoint union."""
    union = disjoint_union(components)
    if union.eps > cap_eps:
        raise CapExceededError(union.eps, cap_eps)
    total = sum(brute_force_brush_number(g, cap_eps) for g in components)
    return brute_force_brush_number(union, cap_eps) == total
