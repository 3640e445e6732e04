"""Brush numbers: the closed formula for J_n(1) and per-orientation costs.

For an acyclic orientation the cheapest cleaning allocation is forced per
vertex: v must start with max{0, d^+(v) - d^-(v)} brushes, since exactly
d^-(v) brushes arrive before v fires and d^+(v) are needed to fire. The cost
of the orientation is the sum of those lower bounds; cyclic orientations
cannot be cleaned at any price and get the distinct value UNDOABLE.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cleaning import BrushAllocation
from .digraph import DiGraph, is_acyclic
from .errors import InternalConsistencyError
from .jaco import JacoGraph, prime_jaconian


class Undoable:
    """Cost of a cyclic orientation; deliberately not a number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Undoable"


UNDOABLE = Undoable()


@dataclass(frozen=True)
class BrushReport:
    """Brush number of J_n(1) split into its two sums, with a witness allocation."""

    n: int
    prime_index: int
    sum_prefix: int
    sum_hope: int
    br: int
    allocation: BrushAllocation

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "prime_index": self.prime_index,
                "sum_prefix": self.sum_prefix,
                "sum_hope": self.sum_hope,
                "br": self.br,
                "allocation": list(self.allocation),
            }
        )


def brush_number(g: JacoGraph) -> BrushReport:
    """Evaluate the closed formula with i the prime Jaconian index.

    sum_prefix adds d^+(v_j) - d^-(v_j) over j = 1..i (each term is checked
    to be non-negative); sum_hope adds max{0, (n-j) - d^-(v_j)} over the rest.
    The attached allocation is the forced per-vertex vector of the defined
    orientation and always sums to the total.
    """
    i = prime_jaconian(g)
    n = g.n
    sum_prefix = 0
    for j in range(1, i + 1):
        d = g.out_deg[j] - g.in_deg[j]
        if d < 0:
            raise InternalConsistencyError(
                f"negative out-in difference {d} at prefix vertex v_{j}"
            )
        sum_prefix += d
    sum_hope = 0
    for j in range(i + 1, n + 1):
        sum_hope += max(0, (n - j) - g.in_deg[j])
    beta = tuple(
        max(0, g.out_deg[j] - g.in_deg[j]) for j in range(1, n + 1)
    )
    total = sum_prefix + sum_hope
    if sum(beta) != total:
        raise InternalConsistencyError(
            f"witness allocation sums to {sum(beta)}, formula gives {total}"
        )
    return BrushReport(
        n=n,
        prime_index=i,
        sum_prefix=sum_prefix,
        sum_hope=sum_hope,
        br=total,
        allocation=BrushAllocation(beta),
    )


def minimal_allocation(g: DiGraph) -> BrushAllocation:
    """The forced minimum allocation for an acyclic digraph."""
    if not is_acyclic(g):
        raise ValueError(
            "orientation undoable: no finite allocation cleans a cyclic digraph"
        )
    out = g.out_degrees()
    ind = g.in_degrees()
    return BrushAllocation(
        tuple(max(0, out[v] - ind[v]) for v in range(1, g.nu + 1))
    )


def orientation_cost(g: DiGraph) -> int | Undoable:
    """Minimum total allocation cleaning g, or UNDOABLE when g is cyclic."""
    if not is_acyclic(g):
        return UNDOABLE
    out = g.out_degrees()
    ind = g.in_degrees()
    return sum(max(0, out[v] - ind[v]) for v in range(1, g.nu + 1))
