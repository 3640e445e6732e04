"""Pure-Python census kernel; fallback when the compiled core is unavailable.

Both kernels implement the same contract, see `census_costs`. Keep this file
and _census_cy.pyx in lockstep: the test suite asserts identical output.
"""

from __future__ import annotations


def census_costs(nu, tails, heads, costs):
    """Fill costs[mask] with the brush cost of every orientation of the edges.

    Edge k (0-based, over the given edge order) is reversed under `mask` iff
    bit eps-1-k of mask is set: masks read as big-endian bit strings over the
    edge order, so mask 0 orients every edge low-index -> high-index and
    mask 2^eps - 1 reverses all of them. Cyclic orientations are stored as -1.

    `costs` must be a writable int8 buffer of length 2^eps. Returns
    (minimum finite cost or None, number of cyclic orientations).
    """
    eps = len(tails)
    nu1 = nu + 1
    # per-edge: the mask bit selecting its direction, plus both endpoints
    edges = [
        (1 << (eps - 1 - k), tails[k], heads[k]) for k in range(eps)
    ]
    # per-vertex incidence: (bit, neighbour, True if v is the tail when bit is 0)
    incid: list[list[tuple[int, int, bool]]] = [[] for _ in range(nu1)]
    for bit, t, h in edges:
        incid[t].append((bit, h, True))
        incid[h].append((bit, t, False))

    best = None
    undoable = 0
    for mask in range(1 << eps):
        diff = [0] * nu1
        indeg = [0] * nu1
        for bit, t, h in edges:
            if mask & bit:
                t, h = h, t
            diff[t] += 1
            diff[h] -= 1
            indeg[h] += 1
        stack = [v for v in range(1, nu1) if indeg[v] == 0]
        seen = len(stack)
        while stack:
            v = stack.pop()
            for bit, nbr, tail_when_zero in incid[v]:
                if (mask & bit == 0) == tail_when_zero:
                    indeg[nbr] -= 1
                    if indeg[nbr] == 0:
                        stack.append(nbr)
                        seen += 1
        if seen < nu:
            costs[mask] = -1
            undoable += 1
        else:
            c = 0
            for v in range(1, nu1):
                d = diff[v]
                if d > 0:
                    c += d
            costs[mask] = c
            if best is None or c < best:
                best = c
    return best, undoable
