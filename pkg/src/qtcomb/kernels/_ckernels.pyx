# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration and summation kernels.

Same contracts as ``_pykernels``; partitions live in C int buffers during
the chain search and are only boxed into tuples for the results.
"""
from libc.stdlib cimport malloc, free
from math import gcd


def box_product(lo, hi):
    cdef Py_ssize_t n = len(lo)
    cdef Py_ssize_t i
    cdef int *clo
    cdef int *chi
    cdef int *cur
    out = []
    for i in range(n):
        if lo[i] > hi[i]:
            return out
    if n == 0:
        return [()]
    clo = <int *> malloc(3 * n * sizeof(int))
    chi = clo + n
    cur = clo + 2 * n
    try:
        for i in range(n):
            clo[i] = lo[i]
            chi[i] = hi[i]
            cur[i] = clo[i]
        while True:
            out.append(tuple([cur[i] for i in range(n)]))
            i = n - 1
            while i >= 0 and cur[i] == chi[i]:
                cur[i] = clo[i]
                i -= 1
            if i < 0:
                return out
            cur[i] += 1
    finally:
        free(clo)


cdef tuple _boxed(int *row, int width):
    cdef int end = width
    while end > 0 and row[end - 1] == 0:
        end -= 1
    return tuple([row[i] for i in range(end)])


cdef int _length(int *row, int width):
    cdef int end = width
    while end > 0 and row[end - 1] == 0:
        end -= 1
    return end


cdef void _descend(int k, int width, int nrows, int *levels, list out):
    # levels holds nrows rows of `width` ints; row k is fixed, enumerate row k-1
    cdef int *cur = levels + k * width
    cdef int *nxt
    cdef int i, length
    if k == 0:
        if _length(cur, width) == 0:
            out.append(tuple([_boxed(levels + r * width, width) for r in range(nrows)]))
        return
    nxt = levels + (k - 1) * width
    length = _length(cur, width)
    for i in range(width):
        nxt[i] = cur[i + 1] if i + 1 < length else 0
    while True:
        # k-1 strips cannot build more than k-1 rows
        if _length(nxt, width) <= k - 1:
            _descend(k - 1, width, nrows, levels, out)
        i = length - 1
        while i >= 0 and nxt[i] == cur[i]:
            nxt[i] = cur[i + 1] if i + 1 < length else 0
            i -= 1
        if i < 0:
            return
        nxt[i] += 1


def strip_chains(shape, int n):
    cdef int width, i
    cdef int *levels
    shape = tuple(p for p in shape if p)
    width = len(shape) + 1
    if width - 1 > n:
        return []
    levels = <int *> malloc((n + 1) * width * sizeof(int))
    out = []
    try:
        for i in range((n + 1) * width):
            levels[i] = 0
        for i in range(width - 1):
            levels[n * width + i] = shape[i]
        _descend(n, width, n + 1, levels, out)
    finally:
        free(levels)
    out.sort()
    return out


def chain_filling(chain):
    cdef int n = len(chain) - 1
    cdef int i, j, k, row
    shape = chain[n]
    entries = []
    for i in range(len(shape)):
        row = shape[i]
        for j in range(row):
            for k in range(1, n + 1):
                level = chain[k]
                if i < len(level) and level[i] > j:
                    entries.append(n - k + 1)
                    break
    return tuple(entries)


def weighted_product_sum(fillings, wnum, wden, tnum, tden):
    cdef Py_ssize_t idx, c, ncells
    cdef int v
    cdef object filling
    snum, sden = 0, 1
    for idx in range(len(fillings)):
        pn = wnum[idx]
        if pn == 0:
            continue
        pd = wden[idx]
        filling = fillings[idx]
        ncells = len(filling)
        for c in range(ncells):
            v = filling[c]
            pn *= tnum[c][v - 1]
            if pn == 0:
                break
            pd *= tden[c][v - 1]
        if pn == 0:
            continue
        g = gcd(sden, pd)
        snum = snum * (pd // g) + pn * (sden // g)
        sden = sden * (pd // g)
    return snum, sden
