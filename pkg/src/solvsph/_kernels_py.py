"""Pure-Python kernels.  Same API as the compiled ``_kernels`` module."""


def echelon_int(rows, ncols):
    """Fraction-free (Bareiss) row echelon form of an integer matrix.

    Returns ``(rank, pivots, rows)`` where ``rows`` holds the ``rank`` nonzero
    echelon rows as lists of ints and ``pivots`` their pivot columns.
    """
    m = [list(r) for r in rows if any(r)]
    nrows = len(m)
    pivots = []
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and m[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        piv_row = m[r]
        piv = piv_row[c]
        for i in range(r + 1, nrows):
            row = m[i]
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


def rank_int(rows, ncols):
    return echelon_int(rows, ncols)[0]


def _covered(members, supports):
    for i in members:
        rest = 0
        for j in members:
            if j != i:
                rest |= supports[j]
        if supports[i] & ~rest == 0:
            return True
    return False


def compatible_subsets(compat, supports):
    """All subsets (bitmasks over items) that are cliques of ``compat`` and
    in which no member's support is covered by the union of the others.

    ``compat[i]`` is a bitmask of the items compatible with item ``i``.
    Output is in DFS order starting from the empty set.
    """
    n = len(compat)
    out = []

    def grow(mask, members, cand):
        out.append(mask)
        while cand:
            low = cand & -cand
            j = low.bit_length() - 1
            cand ^= low
            new = members + [j]
            if _covered(new, supports):
                continue
            grow(mask | low, new, cand & compat[j])

    grow(0, [], (1 << n) - 1)
    return out
