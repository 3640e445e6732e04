# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernel; the hot loop of the orientation enumeration.

Same contract as _census_py.census_costs; keep the two in lockstep.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memset


def census_costs(int nu, int[::1] tails, int[::1] heads, signed char[::1] costs):
    """Fill costs[mask] for every orientation mask; -1 marks cyclic ones.

    Edge k is reversed under mask iff bit eps-1-k is set (big-endian over the
    edge order; mask 0 = every edge low-index -> high-index). Returns
    (minimum finite cost or None, number of cyclic orientations).
    """
    cdef Py_ssize_t eps = tails.shape[0]
    cdef unsigned long long nmask = (<unsigned long long>1) << eps
    if <unsigned long long>costs.shape[0] != nmask:
        raise ValueError("costs buffer must have length 2^eps")

    cdef int nu1 = nu + 1
    cdef int *diff = <int *>calloc(nu1, sizeof(int))
    cdef int *indeg = <int *>calloc(nu1, sizeof(int))
    cdef int *stack = <int *>calloc(nu1, sizeof(int))
    # per-edge direction bit and endpoints
    cdef unsigned long long *bit = <unsigned long long *>calloc(eps if eps else 1, sizeof(unsigned long long))
    cdef int *et = <int *>calloc(eps if eps else 1, sizeof(int))
    cdef int *eh = <int *>calloc(eps if eps else 1, sizeof(int))
    # CSR incidence: edge ids grouped per vertex
    cdef int *inc_ptr = <int *>calloc(nu1 + 1, sizeof(int))
    cdef int *inc_edge = <int *>calloc(2 * eps if eps else 1, sizeof(int))
    if (diff is NULL or indeg is NULL or stack is NULL or bit is NULL
            or et is NULL or eh is NULL or inc_ptr is NULL or inc_edge is NULL):
        free(diff); free(indeg); free(stack); free(bit); free(et); free(eh)
        free(inc_ptr); free(inc_edge)
        raise MemoryError()

    cdef Py_ssize_t k
    cdef int v, t, h, nbr, top, seen, c, d
    for k in range(eps):
        bit[k] = (<unsigned long long>1) << (eps - 1 - k)
        et[k] = tails[k]
        eh[k] = heads[k]
        inc_ptr[et[k] + 1] += 1
        inc_ptr[eh[k] + 1] += 1
    for v in range(1, nu1):
        inc_ptr[v + 1] += inc_ptr[v]
    cdef int *fill = <int *>calloc(nu1, sizeof(int))
    if fill is NULL:
        free(diff); free(indeg); free(stack); free(bit); free(et); free(eh)
        free(inc_ptr); free(inc_edge)
        raise MemoryError()
    for k in range(eps):
        inc_edge[inc_ptr[et[k]] + fill[et[k]]] = <int>k
        fill[et[k]] += 1
        inc_edge[inc_ptr[eh[k]] + fill[eh[k]]] = <int>k
        fill[eh[k]] += 1
    free(fill)

    cdef unsigned long long mask = 0
    cdef long long best = -1
    cdef unsigned long long undoable = 0
    cdef Py_ssize_t p
    with nogil:
        while mask < nmask:
            memset(diff, 0, nu1 * sizeof(int))
            memset(indeg, 0, nu1 * sizeof(int))
            for k in range(eps):
                if mask & bit[k]:
                    t = eh[k]; h = et[k]
                else:
                    t = et[k]; h = eh[k]
                diff[t] += 1
                diff[h] -= 1
                indeg[h] += 1
            top = 0
            seen = 0
            for v in range(1, nu1):
                if indeg[v] == 0:
                    stack[top] = v
                    top += 1
                    seen += 1
            while top:
                top -= 1
                v = stack[top]
                for p in range(inc_ptr[v], inc_ptr[v + 1]):
                    k = inc_edge[p]
                    if mask & bit[k]:
                        t = eh[k]; h = et[k]
                    else:
                        t = et[k]; h = eh[k]
                    if t == v:
                        indeg[h] -= 1
                        if indeg[h] == 0:
                            stack[top] = h
                            top += 1
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
                costs[mask] = <signed char>c
                if best < 0 or c < best:
                    best = c
            mask += 1

    free(diff); free(indeg); free(stack); free(bit); free(et); free(eh)
    free(inc_ptr); free(inc_edge)
    return (None if best < 0 else int(best)), int(undoable)
