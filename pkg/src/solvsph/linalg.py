"""Exact rational subspaces in reduced row echelon form."""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from ._accel import echelon_int, rank_int


def _to_int_rows(rows):
    out = []
    for r in rows:
        d = 1
        for x in r:
            if isinstance(x, Fraction) and x.denominator != 1:
                d = lcm(d, x.denominator)
        out.append([int(x * d) for x in r])
    return out


def rank(rows, ncols=None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return rank_int(_to_int_rows(rows), ncols)


def rref(rows, ncols):
    """Reduced row echelon form: ``(tuple of Fraction rows, pivot columns)``."""
    r, pivots, ech = echelon_int(_to_int_rows(rows), ncols)
    out = []
    for row, p in zip(ech, pivots):
        piv = row[p]
        out.append([Fraction(x, piv) for x in row])
    for i in range(r - 1, -1, -1):
        p = pivots[i]
        src = out[i]
        for k in range(i):
            f = out[k][p]
            if f:
                dst = out[k]
                for j in range(p, ncols):
                    if src[j]:
                        dst[j] -= f * src[j]
    return tuple(tuple(row) for row in out), tuple(pivots)


def nullspace(rows, ncols):
    """Basis of ``{x : row . x == 0 for every row}``."""
    red, pivots = rref(rows, ncols) if rows else ((), ())
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


class Subspace:
    """A subspace of ``Q^n`` stored canonically as its RREF basis.

    Equality is equality of the RREF matrices.
    """

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, vectors=(), ambient=None):
        vectors = [list(v) for v in vectors]
        if ambient is None:
            if not vectors:
                raise ValueError("ambient dimension required for the zero subspace")
            ambient = len(vectors[0])
        self.ambient = ambient
        if vectors:
            self.rows, self.pivots = rref(vectors, ambient)
        else:
            self.rows, self.pivots = (), ()

    @classmethod
    def zero(cls, n):
        return cls((), n)

    @classmethod
    def full(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def coordinate(cls, indices, n):
        return cls([[int(i == j) for j in range(n)] for i in sorted(indices)], n)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def __add__(self, other):
        return Subspace(list(self.rows) + list(other.rows), self.ambient)

    def contains(self, v) -> bool:
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return not any(v)

    def __contains__(self, v):
        return self.contains(v)

    def __le__(self, other):
        return all(other.contains(r) for r in self.rows)

    def annihilator(self) -> "Subspace":
        return Subspace(nullspace(self.rows, self.ambient), self.ambient)

    def intersect(self, other) -> "Subspace":
        ann = self.annihilator() + other.annihilator()
        return ann.annihilator()

    def image(self, matrix) -> "Subspace":
        """Image under ``v -> matrix @ v`` (matrix given as a list of rows)."""
        out = [[sum((a * b for a, b in zip(mrow, v) if b), Fraction(0)) for mrow in matrix]
               for v in self.rows]
        return Subspace(out, len(matrix))

    def key(self):
        """Total-order key (used for canonical forms)."""
        return tuple(tuple((x.numerator, x.denominator) for x in row) for row in self.rows)


def sum_subspaces(a: Subspace, b: Subspace) -> Subspace:
    return a + b
