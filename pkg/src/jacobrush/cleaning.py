"""Simulator for the directed brush-cleaning process.

Every arc starts dirty. A vertex may fire once all its in-arcs are clean and
it holds at least one brush per dirty out-arc; firing cleans all its dirty
out-arcs in one step and each cleaned arc deposits one brush at its head.
The simulator always fires the lowest-indexed eligible vertex, which makes
traces reproducible; the outcome is selection-independent on acyclic inputs.

Vertices with no incident arcs take no part in the process and never appear
in the trace. Vertices whose in-arcs are clean and whose out-arcs are all
clean (or absent) fire trivially with an empty cleaned list, so the trace
records the complete cleaning sequence.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass

from .digraph import DiGraph

CLEANED = "cleaned"
UNDOABLE = "undoable"


@dataclass(frozen=True)
class BrushAllocation:
    """Non-negative brush counts, one per vertex; beta[k] belongs to v_{k+1}."""

    beta: tuple[int, ...]

    def __post_init__(self):
        beta = tuple(int(b) for b in self.beta)
        object.__setattr__(self, "beta", beta)
        for k, b in enumerate(beta):
            if b < 0:
                raise ValueError(f"negative brush count {b} at vertex {k + 1}")

    def __len__(self):
        return len(self.beta)

    def __iter__(self):
        return iter(self.beta)

    def __getitem__(self, k):
        return self.beta[k]

    @property
    def total(self) -> int:
        return sum(self.beta)

    def to_json(self) -> str:
        return json.dumps(list(self.beta))


def allocation_from_json(text: str) -> BrushAllocation:
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("allocation JSON must be a list of brush counts")
    return BrushAllocation(tuple(data))


@dataclass(frozen=True)
class CleaningStep:
    vertex: int
    held: int
    cleaned: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CleaningTrace:
    outcome: str
    steps: tuple[CleaningStep, ...]
    remaining_dirty: tuple[tuple[int, int], ...]

    def to_json(self) -> str:
        return json.dumps(
            {
                "outcome": self.outcome,
                "steps": [
                    {
                        "vertex": s.vertex,
                        "held": s.held,
                        "cleaned": [list(a) for a in s.cleaned],
                    }
                    for s in self.steps
                ],
                "remaining_dirty": [list(a) for a in self.remaining_dirty],
            }
        )


def simulate(g: DiGraph, alloc: BrushAllocation) -> CleaningTrace:
    """Run the cleaning process to exhaustion and report the trace."""
    if len(alloc) != g.nu:
        raise ValueError(
            f"allocation length {len(alloc)} does not match vertex count {g.nu}"
        )
    nu = g.nu
    out_heads: list[list[int]] = [[] for _ in range(nu + 1)]
    indeg = [0] * (nu + 1)
    for t, h in g.arcs:
        out_heads[t].append(h)
        indeg[h] += 1
    for v in range(1, nu + 1):
        out_heads[v].sort()

    held = [0] + list(alloc.beta)
    unclean_in = indeg[:]
    fired = [False] * (nu + 1)
    queued = [False] * (nu + 1)
    heap: list[int] = []

    def consider(v: int) -> None:
        # eligibility is monotone: brushes only arrive, in-arcs only get cleaned
        if (
            not queued[v]
            and not fired[v]
            and (out_heads[v] or indeg[v])
            and unclean_in[v] == 0
            and held[v] >= len(out_heads[v])
        ):
            queued[v] = True
            heapq.heappush(heap, v)

    for v in range(1, nu + 1):
        consider(v)

    steps: list[CleaningStep] = []
    cleaned_total = 0
    while heap:
        v = heapq.heappop(heap)
        fired[v] = True
        cleaned = tuple((v, u) for u in out_heads[v])
        steps.append(CleaningStep(vertex=v, held=held[v], cleaned=cleaned))
        cleaned_total += len(cleaned)
        for u in out_heads[v]:
            held[u] += 1
            unclean_in[u] -= 1
        for u in out_heads[v]:
            consider(u)

    remaining = tuple(sorted((t, h) for t, h in g.arcs if not fired[t]))
    outcome = CLEANED if cleaned_total == g.eps else UNDOABLE
    return CleaningTrace(outcome=outcome, steps=tuple(steps), remaining_dirty=remaining)


def is_cleanable(g: DiGraph) -> bool:
    """True iff some finite allocation cleans g (equivalently, g is acyclic).

    Decided by simulating under the saturating allocation beta(v) = d^+(v),
    which cleans g whenever anything does.
    """
    saturating = BrushAllocation(tuple(g.out_degrees()[1:]))
    return simulate(g, saturating).outcome == CLEANED


def verify_allocation(g: DiGraph, alloc: BrushAllocation) -> bool:
    """True iff the process started from alloc cleans every arc of g."""
    return simulate(g, alloc).outcome == CLEANED
