# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels.  Same API as ``_kernels_py``."""


def echelon_int(rows, Py_ssize_t ncols):
    cdef list m = [list(row_in) for row_in in rows if any(row_in)]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef list pivots = []
    cdef list piv_row, row
    cdef object prev = 1, piv, f
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and (<list>m[p])[c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv_row = <list>m[r]
        piv = piv_row[c]
        for i in range(r + 1, nrows):
            row = <list>m[i]
            f = row[c]
            if f == 0:
                for j in range(c + 1, ncols):
                    row[j] = row[j] * piv // prev
            else:
                for j in range(c + 1, ncols):
                    row[j] = (row[j] * piv - f * piv_row[j]) // prev
                row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return r, pivots, m[:r]


def rank_int(rows, Py_ssize_t ncols):
    return echelon_int(rows, ncols)[0]


ctypedef unsigned long long u64

cdef int _covered(int k, int* members, u64* supports):
    cdef int a, b
    cdef u64 rest
    for a in range(k):
        rest = 0
        for b in range(k):
            if b != a:
                rest |= supports[members[b]]
        if supports[members[a]] & ~rest == 0:
            return 1
    return 0


cdef void _grow(u64 mask, int k, int* members, u64 cand, u64* compat,
                u64* supports, list out):
    cdef u64 low
    cdef int j
    out.append(mask)
    while cand:
        low = cand & (~cand + 1)
        j = 0
        while (low >> j) != 1:
            j += 1
        cand ^= low
        members[k] = j
        if _covered(k + 1, members, supports):
            continue
        _grow(mask | low, k + 1, members, cand & compat[j], compat, supports, out)


def compatible_subsets(compat, supports):
    cdef int n = len(compat)
    if n > 63 or any(s >= (1 << 63) for s in supports):
        from ._kernels_py import compatible_subsets as slow
        return slow(compat, supports)
    cdef u64 c_compat[64]
    cdef u64 c_supp[64]
    cdef int members[64]
    cdef int i
    for i in range(n):
        c_compat[i] = compat[i]
        c_supp[i] = supports[i]
    cdef list out = []
    cdef u64 full = (<u64>1 << n) - 1
    _grow(0, 0, members, full, c_compat, c_supp, out)
    return out
