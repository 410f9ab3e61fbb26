"""Recover the Lie algebra ``h = s + n`` of a subgroup from its datum, and back."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .data import CombinatorialDatum, make_datum
from .lie import ChevalleyAlgebra, build_chevalley
from .linalg import Subspace, nullspace
from .marked import MarkedPair, build_closure


class ReconstructionError(RuntimeError):
    pass


class NotStandardlyEmbedded(ReconstructionError):
    pass


def full_marked_set(d: CombinatorialDatum) -> frozenset:
    """``Psi``: the union of the closures of the maximal marked roots."""
    pis = {}
    for pair in d.pairs:
        for sub in build_closure(d.rs, pair).pairs:
            if pis.setdefault(sub.root, sub.pi) != sub.pi:
                raise ReconstructionError(
                    f"conflicting associated simple roots for {d.rs.root_str(sub.root)}")
    return frozenset(MarkedPair(r, p) for r, p in pis.items())


def _reduce(vec, kernel: Subspace):
    v = [Fraction(x) for x in vec]
    for row, p in zip(kernel.rows, kernel.pivots):
        f = v[p]
        if f:
            v = [a - f * b for a, b in zip(v, row)]
    return tuple(v)


def weight_classes(kernel: Subspace, rs) -> list[tuple]:
    """Partition of the positive roots by their image under ``tau``."""
    classes = {}
    for r in rs.positive_roots:
        classes.setdefault(_reduce(r, kernel), []).append(r)
    return [tuple(c) for c in classes.values()]


def torus_subalgebra(kernel: Subspace, alg: ChevalleyAlgebra) -> Subspace:
    """``s`` inside ``t``: the common zeros of the characters in ``Ker tau``."""
    rs = alg.rs
    n = rs.rank
    rows = [[sum(k[i] * rs.cartan[i][j] for i in range(n)) for j in range(n)] for k in kernel.rows]
    if rows:
        coeffs = nullspace(rows, n)
    else:
        coeffs = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    vecs = []
    for c in coeffs:
        v = [Fraction(0)] * alg.dim
        for j in range(n):
            v[alg.h_index(j)] = c[j]
        vecs.append(v)
    return Subspace(vecs, alg.dim)


def kernel_from_torus(s: Subspace, alg: ChevalleyAlgebra) -> Subspace:
    rs = alg.rs
    n = rs.rank
    rows = []
    for v in s.rows:
        c = [v[alg.h_index(j)] for j in range(n)]
        rows.append([sum(rs.cartan[i][j] * c[j] for j in range(n)) for i in range(n)])
    if not rows:
        return Subspace.full(n)
    return Subspace(nullspace(rows, n), n)


def is_bracket_closed(space: Subspace, alg: ChevalleyAlgebra, other: Subspace = None) -> bool:
    """``[other, space] <= space`` (``other`` defaults to ``space``)."""
    rows = space.rows
    left = rows if other is None else other.rows
    for i, x in enumerate(left):
        start = i if other is None else 0
        for y in rows[start:]:
            if not space.contains(alg.bracket(x, y)):
                return False
    return True


@dataclass(frozen=True, eq=False)
class SubgroupModel:
    datum: CombinatorialDatum
    alg: ChevalleyAlgebra
    psi: frozenset
    n_basis: Subspace
    s_basis: Subspace

    @property
    def h_basis(self) -> Subspace:
        return self.s_basis + self.n_basis

    @cached_property
    def kernel(self) -> Subspace:
        """``Ker tau`` of the torus actually present in ``s_basis``."""
        return kernel_from_torus(self.s_basis, self.alg)

    @property
    def psi_roots(self):
        return frozenset(p.root for p in self.psi)


def _class_space(alg, unmarked, marked, signs):
    vecs = [alg.e(r) for r in unmarked]
    for a, b, sa, sb in zip(marked, marked[1:], signs, signs[1:]):
        v = [Fraction(0)] * alg.dim
        v[alg.root_index(a)] = Fraction(sa)
        v[alg.root_index(b)] = Fraction(-sb)
        vecs.append(v)
    return vecs


def build_model(d: CombinatorialDatum, alg: ChevalleyAlgebra = None) -> SubgroupModel:
    rs = d.rs
    alg = alg or build_chevalley(rs)
    psi = full_marked_set(d)
    psi_roots = frozenset(p.root for p in psi)
    classes = weight_classes(d.torus.kernel, rs)
    fixed, fused = [], []
    for cls in classes:
        marked = [r for r in cls if r in psi_roots]
        unmarked = [r for r in cls if r not in psi_roots]
        fixed += [alg.e(r) for r in unmarked]
        if len(marked) >= 2:
            fused.append(marked)
    s_basis = torus_subalgebra(d.torus.kernel, alg)
    nvars = sum(len(m) - 1 for m in fused)
    for choice in itertools.product((1, -1), repeat=nvars):
        vecs = list(fixed)
        pos = 0
        for marked in fused:
            signs = (1,) + choice[pos:pos + len(marked) - 1]
            pos += len(marked) - 1
            vecs += _class_space(alg, [], marked, signs)
        n_basis = Subspace(vecs, alg.dim) if vecs else Subspace.zero(alg.dim)
        if is_bracket_closed(n_basis, alg):
            return SubgroupModel(d, alg, psi, n_basis, s_basis)
    raise ReconstructionError(f"no sign choice closes n for {d.describe()}")


def extract_datum(s_basis: Subspace, n_basis: Subspace, alg: ChevalleyAlgebra) -> CombinatorialDatum:
    """Read ``(S, M, pi, ~)`` off a standardly embedded ``s + n``."""
    rs = alg.rs
    h_idx = {alg.h_index(i) for i in range(rs.rank)}
    for v in s_basis.rows:
        if any(x for k, x in enumerate(v) if k not in h_idx):
            raise NotStandardlyEmbedded("s is not contained in t")
    for v in n_basis.rows:
        if any(x for k, x in enumerate(v) if k >= alg.npos):
            raise NotStandardlyEmbedded("n is not contained in u")
    if not is_bracket_closed(n_basis, alg, s_basis):
        raise NotStandardlyEmbedded("n is not stable under s")
    kernel = kernel_from_torus(s_basis, alg)
    marked = {r for r in rs.positive_roots if not n_basis.contains(alg.e(r))}
    maximal = [r for r in rs.positive_roots if r in marked and not any(
        tuple(x - y for x, y in zip(a, r)) in rs._index for a in marked if a != r)]
    pairs = [(r, associated_simple_root(rs, r, marked)) for r in maximal]
    blocks = []
    for r in maximal:
        for b in blocks:
            if kernel.contains([x - y for x, y in zip(r, b[0])]):
                b.append(r)
                break
        else:
            blocks.append([r])
    return make_datum(rs, pairs, blocks, kernel)


def associated_simple_root(rs, root, marked) -> int:
    """The unique simple root governing which summands of ``root`` are marked."""
    cands = []
    for c in sorted(rs.support(root)):
        if all((c not in rs.support(x)) == (x in marked) and (c not in rs.support(y)) == (y in marked)
               for x, y in rs.decompositions(root)):
            cands.append(c)
    if len(cands) != 1:
        raise ReconstructionError(
            f"{len(cands)} candidate associated simple roots for {rs.root_str(root)}")
    return cands[0]


def is_regular(root, m: SubgroupModel) -> bool:
    root = tuple(root)
    if root not in m.psi_roots:
        raise ReconstructionError(f"{m.datum.rs.root_str(root)} is not marked")
    k = m.alg.root_index(root)
    return all(v[k] == 0 for v in m.n_basis.rows)


def c_table(m: SubgroupModel):
    """``[(class roots, c_lambda)]`` computed from ``n`` directly."""
    alg = m.alg
    out = []
    for cls in weight_classes(m.kernel, alg.rs):
        u_l = Subspace.coordinate([alg.root_index(r) for r in cls], alg.dim)
        out.append((cls, len(cls) - u_l.intersect(m.n_basis).dim))
    return out
