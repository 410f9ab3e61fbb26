from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from solvsph import _kernels_py
from solvsph._accel import BACKEND
from solvsph.linalg import Subspace, nullspace, rank, rref

small_int = st.integers(min_value=-6, max_value=6)


def matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small_int, min_size=c, max_size=c), min_size=0,
                           max_size=max_rows).map(lambda rows: (rows, c)))


def fraction_rank(rows, ncols):
    """Textbook Gauss elimination over Fraction, the reference oracle."""
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


@given(matrices())
def test_rank_matches_fraction_elimination(mc):
    rows, ncols = mc
    assert rank(rows, ncols) == fraction_rank(rows, ncols)


@given(matrices())
def test_rref_shape(mc):
    rows, ncols = mc
    red, pivots = rref(rows, ncols) if rows else ((), ())
    assert list(pivots) == sorted(pivots)
    for i, (row, p) in enumerate(zip(red, pivots)):
        assert row[p] == 1
        assert all(x == 0 for x in row[:p])
        assert all(red[k][p] == 0 for k in range(len(red)) if k != i)


@given(matrices())
def test_nullspace_is_orthogonal_complement(mc):
    rows, ncols = mc
    basis = nullspace(rows, ncols)
    assert len(basis) == ncols - fraction_rank(rows, ncols)
    for v in basis:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) == 0


@given(matrices(), matrices())
def test_subspace_dimension_formula(a, b):
    (ra, ca), (rb, _) = a, b
    rb = [(r + [0] * ca)[:ca] for r in rb]
    A, B = Subspace(ra, ca), Subspace(rb, ca)
    assert (A + B).dim + A.intersect(B).dim == A.dim + B.dim
    assert A.intersect(B) <= A and A <= A + B


@given(matrices())
def test_subspace_canonical(mc):
    rows, ncols = mc
    S = Subspace(rows, ncols)
    assert Subspace(list(reversed(rows)), ncols) == S
    assert Subspace([[3 * x for x in r] for r in rows], ncols) == S
    assert all(S.contains(r) for r in rows)
    assert S.annihilator().annihilator() == S


def test_subspace_basics():
    S = Subspace([[1, 2, 0]], 3)
    assert S.contains([2, 4, 0]) and not S.contains([0, 0, 1])
    assert Subspace.full(3).dim == 3 and Subspace.zero(3).dim == 0
    assert Subspace.coordinate([0, 2], 3).contains([5, 0, -1])
    with pytest.raises(ValueError):
        Subspace([])


@pytest.mark.skipif(BACKEND != "cython", reason="compiled kernels not built")
@given(matrices(8, 8))
def test_compiled_echelon_equals_fallback(mc):
    from solvsph import _kernels
    rows, ncols = mc
    assert _kernels.echelon_int(rows, ncols) == _kernels_py.echelon_int(rows, ncols)


@pytest.mark.skipif(BACKEND != "cython", reason="compiled kernels not built")
@settings(max_examples=60)
@given(st.integers(0, 10).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, (1 << n) - 1 if n else 0), min_size=n, max_size=n),
    st.lists(st.integers(1, 31), min_size=n, max_size=n))))
def test_compiled_subsets_equal_fallback(cs):
    from solvsph import _kernels
    compat, supports = cs
    n = len(compat)
    # symmetrize and drop self-loops, as the enumerator does
    sym = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and (compat[i] >> j & 1 or compat[j] >> i & 1):
                sym[i] |= 1 << j
    assert _kernels.compatible_subsets(sym, supports) == \
        _kernels_py.compatible_subsets(sym, supports)


def test_compatible_subsets_brute_force():
    import itertools
    compat = [0b0110, 0b0101, 0b1011, 0b0100]
    supports = [0b001, 0b010, 0b011, 0b100]
    got = set(_kernels_py.compatible_subsets(compat, supports))
    expected = set()
    for k in range(5):
        for sub in itertools.combinations(range(4), k):
            if any(not compat[a] >> b & 1 for a in sub for b in sub if a != b):
                continue
            covered = False
            for a in sub:
                rest = 0
                for b in sub:
                    if b != a:
                        rest |= supports[b]
                covered |= supports[a] & ~rest == 0
            if not covered:
                expected.add(sum(1 << a for a in sub))
    assert got == expected


def test_fallback_selected_by_environment():
    import os
    import subprocess
    import sys
    env = dict(os.environ, SOLVSPH_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import solvsph; print(solvsph.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
