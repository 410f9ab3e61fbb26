"""Chevalley basis of a semisimple Lie algebra with exact arithmetic.

Basis order: ``e_beta`` for the positive roots (in root-system order), then
``e_{-beta}`` in the same order, then the simple coroots ``h_1 .. h_n``.
Structure constant signs are fixed by declaring ``N_{alpha,beta} > 0`` on
every extraspecial pair and propagating with the standard identities.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import cached_property
from math import factorial

from .linalg import Subspace
from .rootsys import RootSystem


class LieAlgebraError(RuntimeError):
    pass


def _neg(r):
    return tuple(-x for x in r)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class ChevalleyAlgebra:
    def __init__(self, rs: RootSystem, verify: bool = True):
        self.rs = rs
        self.npos = len(rs.positive_roots)
        self.rank = rs.rank
        self.dim = 2 * self.npos + self.rank
        self._pos_N = {}
        self._build_structure_constants()
        self._table = self._build_table()
        if verify:
            bad = self.jacobi_failures(sample=None if self.dim <= 40 else 4000)
            if bad:
                raise LieAlgebraError(f"Jacobi identity fails on {bad[0]}")

    # -- indexing --------------------------------------------------------
    def root_index(self, root) -> int:
        """Basis index of ``e_root`` for a (signed) root."""
        root = tuple(root)
        if self.rs.is_positive_root(root):
            return self.rs.index(root)
        return self.npos + self.rs.index(_neg(root))

    def h_index(self, i: int) -> int:
        return 2 * self.npos + i

    def basis_root(self, k: int):
        """Root of basis vector ``k``, or ``None`` for a Cartan element."""
        if k < self.npos:
            return self.rs.positive_roots[k]
        if k < 2 * self.npos:
            return _neg(self.rs.positive_roots[k - self.npos])
        return None

    def basis_vector(self, k: int):
        v = [Fraction(0)] * self.dim
        v[k] = Fraction(1)
        return v

    def e(self, root):
        return self.basis_vector(self.root_index(root))

    def h(self, i: int):
        return self.basis_vector(self.h_index(i))

    def coroot(self, root):
        """Coefficients of ``h_root`` over ``h_1 .. h_n`` (root may be negative)."""
        rs = self.rs
        sign = 1
        if not rs.is_positive_root(root):
            root, sign = _neg(root), -1
        rr = rs.inner(root, root)
        return [sign * int(k * rs.gram[i][i] / rr) for i, k in enumerate(root)]

    # -- structure constants ---------------------------------------------
    def _string_down(self, alpha, beta) -> int:
        """Largest p with ``beta - p*alpha`` a root."""
        p, cur = 0, beta
        while True:
            cur = tuple(b - a for a, b in zip(alpha, cur))
            if self.rs.is_root(cur):
                p += 1
            else:
                return p

    def N(self, r, s) -> int:
        """Structure constant: ``[e_r, e_s] = N(r, s) e_{r+s}``."""
        r, s = tuple(r), tuple(s)
        rs = self.rs
        t = _add(r, s)
        if not rs.is_root(t):
            return 0
        rpos, spos = rs.is_positive_root(r), rs.is_positive_root(s)
        if rpos and spos:
            if (r, s) in self._pos_N:
                return self._pos_N[(r, s)]
            return -self._pos_N[(s, r)]
        if not rpos and not spos:
            return -self.N(_neg(r), _neg(s))
        if not rpos:
            return -self.N(s, r)
        # r positive, s negative; t = -(r+s)
        t = _neg(t)
        if rs.is_positive_root(t):
            val = rs.inner(t, t) / rs.inner(s, s) * self.N(t, r)
        else:
            val = rs.inner(t, t) / rs.inner(r, r) * self.N(s, t)
        if val.denominator != 1:
            raise LieAlgebraError(f"non-integral structure constant for {r}, {s}")
        return int(val)

    def _build_structure_constants(self):
        rs = self.rs
        order = {r: i for i, r in enumerate(rs.positive_roots)}
        for xi in rs.positive_roots:
            pairs = []
            for a, b in rs.decompositions(xi):
                pairs.append((a, b) if order[a] < order[b] else (b, a))
            if not pairs:
                continue
            pairs.sort(key=lambda ab: order[ab[0]])
            alpha, beta = pairs[0]
            n_ab = self._string_down(alpha, beta) + 1
            self._pos_N[(alpha, beta)] = n_ab
            xx = rs.inner(xi, xi)
            for gamma, delta in pairs[1:]:
                total = Fraction(0)
                d_a = tuple(x - y for x, y in zip(delta, alpha))
                if rs.is_root(d_a):
                    total += Fraction(self.N(delta, _neg(alpha)) * self.N(gamma, _neg(beta)),
                                      rs.inner(d_a, d_a))
                g_a = tuple(x - y for x, y in zip(gamma, alpha))
                if rs.is_root(g_a):
                    total += Fraction(self.N(_neg(alpha), gamma) * self.N(delta, _neg(beta)),
                                      rs.inner(g_a, g_a))
                val = xx / n_ab * total
                if val.denominator != 1 or abs(val) != self._string_down(gamma, delta) + 1:
                    raise LieAlgebraError(f"inconsistent structure constant for {gamma}, {delta}")
                self._pos_N[(gamma, delta)] = int(val)

    def _build_table(self):
        """``table[a][b]`` = sparse list ``[(c, coeff)]`` of ``[x_a, x_b]``."""
        dim, P, n = self.dim, self.npos, self.rank
        rs = self.rs
        table = [[() for _ in range(dim)] for _ in range(dim)]
        roots = [self.basis_root(k) for k in range(2 * P)]
        for a in range(2 * P):
            ra = roots[a]
            for b in range(2 * P):
                rb = roots[b]
                s = _add(ra, rb)
                if not any(s):
                    table[a][b] = tuple((self.h_index(i), Fraction(c))
                                        for i, c in enumerate(self.coroot(ra)) if c)
                elif rs.is_root(s):
                    table[a][b] = ((self.root_index(s), Fraction(self.N(ra, rb))),)
            for i in range(n):
                c = rs.pairing(ra, i)
                if c:
                    table[self.h_index(i)][a] = ((a, Fraction(c)),)
                    table[a][self.h_index(i)] = ((a, Fraction(-c)),)
        return table

    # -- element arithmetic ----------------------------------------------
    def bracket(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise LieAlgebraError("element does not belong to this algebra")
        out = [Fraction(0)] * self.dim
        table = self._table
        ys = [(b, yb) for b, yb in enumerate(y) if yb]
        for a, xa in enumerate(x):
            if not xa:
                continue
            row = table[a]
            for b, yb in ys:
                for c, coeff in row[b]:
                    out[c] += xa * yb * coeff
        return out

    def ad_matrix(self, x):
        """Matrix of ``ad x`` as a list of rows (``M[c][b]``)."""
        dim = self.dim
        M = [[Fraction(0)] * dim for _ in range(dim)]
        table = self._table
        for a, xa in enumerate(x):
            if not xa:
                continue
            row = table[a]
            for b in range(dim):
                for c, coeff in row[b]:
                    M[c][b] += xa * coeff
        return M

    def ad_exp(self, x, y):
        """``exp(ad x)(y)``, requiring ``ad x`` nilpotent."""
        result = list(y)
        term = list(y)
        for k in range(1, self.dim + 2):
            term = [c / k for c in self.bracket(x, term)]
            if not any(term):
                return result
            result = [a + b for a, b in zip(result, term)]
        raise LieAlgebraError("ad x is not nilpotent")

    def exp_ad_matrix(self, x):
        """Matrix of ``exp(ad x)`` for nilpotent ``ad x``."""
        A = self.ad_matrix(x)
        dim = self.dim
        result = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
        power = [row[:] for row in result]
        for k in range(1, dim + 2):
            power = matmul(A, power)
            if not any(any(row) for row in power):
                return result
            f = factorial(k)
            for i in range(dim):
                ri, pi = result[i], power[i]
                for j in range(dim):
                    if pi[j]:
                        ri[j] += pi[j] / f
        raise LieAlgebraError("ad x is not nilpotent")

    def killing(self, x, y):
        ax, ay = self.ad_matrix(x), self.ad_matrix(y)
        dim = self.dim
        return sum((ax[i][k] * ay[k][i] for i in range(dim) for k in range(dim)
                    if ax[i][k] and ay[k][i]), Fraction(0))

    @cached_property
    def _weyl_matrices(self):
        mats = []
        for i in range(self.rank):
            alpha = self.rs.simple_root(i)
            E = self.exp_ad_matrix(self.e(alpha))
            F = self.exp_ad_matrix([-c for c in self.e(_neg(alpha))])
            mats.append(matmul(E, matmul(F, E)))
        return mats

    def weyl_action(self, i: int):
        """Matrix of ``Ad(n_i)``, ``n_i = exp(e_i) exp(-f_i) exp(e_i)``."""
        return self._weyl_matrices[i]

    def jacobi_failures(self, sample=None, seed=0):
        dim = self.dim
        if sample is None:
            triples = ((a, b, c) for a in range(dim) for b in range(a + 1, dim)
                       for c in range(b + 1, dim))
        else:
            rng = random.Random(seed)
            triples = (tuple(rng.randrange(dim) for _ in range(3)) for _ in range(sample))
        bad = []
        for a, b, c in triples:
            xa, xb, xc = self.basis_vector(a), self.basis_vector(b), self.basis_vector(c)
            s = [p + q + r for p, q, r in zip(
                self.bracket(xa, self.bracket(xb, xc)),
                self.bracket(xb, self.bracket(xc, xa)),
                self.bracket(xc, self.bracket(xa, xb)))]
            if any(s):
                bad.append((a, b, c))
                break
        return bad

    # -- standard subspaces ----------------------------------------------
    def borel(self) -> Subspace:
        return Subspace.coordinate(list(range(self.npos)) + [self.h_index(i) for i in range(self.rank)],
                                   self.dim)

    def nilradical(self) -> Subspace:
        return Subspace.coordinate(range(self.npos), self.dim)

    def cartan_subalgebra(self) -> Subspace:
        return Subspace.coordinate([self.h_index(i) for i in range(self.rank)], self.dim)


def matmul(A, B):
    n, m = len(A), len(B[0])
    Bt = list(zip(*B))
    out = []
    for i in range(n):
        row = A[i]
        nz = [(k, a) for k, a in enumerate(row) if a]
        out.append([sum((a * Bt[j][k] for k, a in nz if Bt[j][k]), Fraction(0)) for j in range(m)])
    return out


def apply(matrix, v):
    return [sum((a * b for a, b in zip(row, v) if a and b), Fraction(0)) for row in matrix]


_CACHE = {}


def build_chevalley(rs: RootSystem, verify: bool = True) -> ChevalleyAlgebra:
    key = rs.components
    if key not in _CACHE:
        _CACHE[key] = ChevalleyAlgebra(rs, verify=verify)
    return _CACHE[key]
