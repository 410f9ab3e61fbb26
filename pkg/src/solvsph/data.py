"""Combinatorial data ``(S, M, pi, ~)`` and their validation."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .linalg import Subspace
from .marked import MarkedPair, table1_pairs
from .rootsys import RootSystem, build_root_system


class DatumError(ValueError):
    """Malformed datum (as opposed to a well-formed but invalid one)."""


@dataclass(frozen=True)
class TorusData:
    """The torus ``S``, encoded by ``Ker tau`` inside ``Q^Pi``."""

    kernel: Subspace

    @property
    def s_rank(self) -> int:
        return self.kernel.ambient - self.kernel.dim

    @classmethod
    def full(cls, n):
        return cls(Subspace.zero(n))


@dataclass(frozen=True)
class CombinatorialDatum:
    rs: RootSystem
    torus: TorusData
    M: tuple  # roots, sorted by root order
    pi: tuple  # simple index per entry of M
    sim: tuple  # blocks of roots; blocks and their members sorted

    @property
    def pairs(self):
        return tuple(MarkedPair(r, p) for r, p in zip(self.M, self.pi))

    def pi_of(self, root) -> int:
        return self.pi[self.M.index(tuple(root))]

    def block_of(self, root):
        root = tuple(root)
        for b in self.sim:
            if root in b:
                return b
        raise KeyError(root)

    def equivalent(self, a, b) -> bool:
        return tuple(b) in self.block_of(a)

    def sort_key(self):
        idx = self.rs.index
        return (tuple(idx(r) for r in self.M), self.pi,
                tuple(tuple(idx(r) for r in b) for b in self.sim), self.torus.kernel.key())

    def describe(self) -> str:
        rs = self.rs
        if not self.M:
            body = "M = {}"
        else:
            items = ", ".join(f"{rs.root_str(r)}:a{p + 1}" for r, p in zip(self.M, self.pi))
            blocks = " | ".join(",".join(rs.root_str(r) for r in b) for b in self.sim)
            body = f"M = {{{items}}}  ~ = [{blocks}]"
        return f"{body}  rk S = {self.torus.s_rank}"


def _normalize(rs, pairs, blocks):
    order = rs.index
    pairs = [(tuple(r), p) for r, p in pairs]
    for r, _ in pairs:
        if not rs.is_positive_root(r):
            raise DatumError(f"{r} is not a positive root of {rs.label}")
    pairs.sort(key=lambda rp: order(rp[0]))
    roots = [r for r, _ in pairs]
    if len(set(roots)) != len(roots):
        raise DatumError("M contains a root twice")
    if any(tuple(x) not in roots for b in blocks for x in b):
        raise DatumError("~ must partition M")
    norm_blocks = sorted((tuple(sorted((tuple(x) for x in b), key=order)) for b in blocks),
                         key=lambda b: order(b[0]) if b else -1)
    flat = [r for b in norm_blocks for r in b]
    if any(not b for b in norm_blocks) or sorted(flat, key=order) != roots:
        raise DatumError("~ must partition M")
    return tuple(roots), tuple(p for _, p in pairs), tuple(norm_blocks)


def canonical_kernel(rs: RootSystem, blocks) -> Subspace:
    diffs = []
    for b in blocks:
        for x in b[1:]:
            diffs.append([p - q for p, q in zip(x, b[0])])
    return Subspace(diffs, rs.rank)


def canonical_torus(rs: RootSystem, M, pi, sim) -> TorusData:
    """The largest torus compatible with (T): ``Ker tau`` = differences of ``~``-classes."""
    return TorusData(canonical_kernel(rs, sim))


def make_datum(rs: RootSystem, pairs, blocks=None, kernel=None) -> CombinatorialDatum:
    """Build a normalized datum; ``blocks=None`` means trivial ``~``, ``kernel=None``
    means the canonical torus."""
    pairs = list(pairs)
    if blocks is None:
        blocks = [[r] for r, _ in pairs]
    M, pi, sim = _normalize(rs, pairs, blocks)
    if kernel is None:
        torus = canonical_torus(rs, M, pi, sim)
    else:
        torus = TorusData(kernel if isinstance(kernel, Subspace) else Subspace(kernel, rs.rank))
    return CombinatorialDatum(rs, torus, M, pi, sim)


# -- pairwise conditions -----------------------------------------------------

def _ones(root) -> bool:
    return all(c in (0, 1) for c in root)


def three_arm_spine(rs: RootSystem, a, b):
    """Shared chain ``gamma_0 .. gamma_r`` if the supports of ``a`` and ``b`` form
    the three-armed tree with both roots summing an arm plus that chain with all
    coefficients 1; otherwise ``None``."""
    if not (_ones(a) and _ones(b)):
        return None
    sa, sb = rs.support(a), rs.support(b)
    inter, only_a, only_b = sa & sb, sa - sb, sb - sa
    if len(inter) < 2 or not only_a or not only_b:
        return None
    union = sa | sb
    if not rs.is_connected(union):
        return None
    deg = {v: rs.degree(v, union) for v in union}
    branch = [v for v in union if deg[v] == 3]
    if len(branch) != 1 or any(d > 3 for d in deg.values()):
        return None
    g0 = branch[0]
    if g0 not in inter:
        return None
    adj = rs.adjacency
    if any(adj[v] & only_b for v in only_a):
        return None
    for arm in (only_a, only_b):
        links = [(v, w) for v in arm for w in adj[v] & inter]
        if len(links) != 1 or links[0][1] != g0:
            return None
    if not (rs.is_connected(inter) and rs.is_connected(only_a) and rs.is_connected(only_b)):
        return None
    if not rs.is_terminal(g0, inter):
        return None
    return inter


def _single_terminal(rs, a, b):
    sa, sb = rs.support(a.root), rs.support(b.root)
    inter = sa & sb
    if len(inter) != 1:
        return None
    delta, = inter
    if len(sa) < 2 or len(sb) < 2:
        return None
    if rs.is_terminal(delta, sa) and rs.is_terminal(delta, sb):
        return delta
    return None


def cond_D0(rs, a: MarkedPair, b: MarkedPair) -> bool:
    return not (rs.support(a.root) & rs.support(b.root))


def cond_D1(rs, a: MarkedPair, b: MarkedPair) -> bool:
    delta = _single_terminal(rs, a, b)
    return delta is not None and a.pi != delta and b.pi != delta


def cond_E1(rs, a: MarkedPair, b: MarkedPair) -> bool:
    delta = _single_terminal(rs, a, b)
    if delta is None or not (a.pi == delta == b.pi):
        return False
    d = rs.simple_root(delta)
    return all(rs.is_positive_root(tuple(x - y for x, y in zip(r, d))) for r in (a.root, b.root))


def cond_D2(rs, a: MarkedPair, b: MarkedPair) -> bool:
    spine = three_arm_spine(rs, a.root, b.root)
    return spine is not None and a.pi not in spine and b.pi not in spine


def cond_E2(rs, a: MarkedPair, b: MarkedPair) -> bool:
    spine = three_arm_spine(rs, a.root, b.root)
    return spine is not None and a.pi == b.pi and a.pi in spine


def d_list(rs, a, b) -> bool:
    return cond_D0(rs, a, b) or cond_D1(rs, a, b) or cond_D2(rs, a, b)


def e_list(rs, a, b) -> bool:
    return d_list(rs, a, b) or cond_E1(rs, a, b) or cond_E2(rs, a, b)


# -- validation ----------------------------------------------------------------

@dataclass
class Verdict:
    ok: bool = True
    offenders: list = field(default_factory=list)

    def fail(self, what):
        self.ok = False
        self.offenders.append(what)


@dataclass
class ValidationReport:
    A: Verdict
    D: Verdict
    E: Verdict
    C: Verdict
    T: Verdict

    @property
    def valid(self) -> bool:
        return all(v.ok for v in (self.A, self.D, self.E, self.C, self.T))

    def lines(self):
        for name in "ADECT":
            v = getattr(self, name)
            yield f"({name}) {'ok' if v.ok else 'FAIL'}" + (
                "" if v.ok else ": " + "; ".join(v.offenders))


def _support_span(rs, M) -> Subspace:
    nodes = set()
    for r in M:
        nodes |= rs.support(r)
    return Subspace.coordinate(nodes, rs.rank)


def validate(d: CombinatorialDatum) -> ValidationReport:
    rs = d.rs
    rep = ValidationReport(Verdict(), Verdict(), Verdict(), Verdict(), Verdict())
    allowed = table1_pairs(rs)
    for p in d.pairs:
        if p not in allowed:
            rep.A.fail(p.describe(rs))
    for a, b in combinations(d.pairs, 2):
        if d.equivalent(a.root, b.root):
            if not e_list(rs, a, b):
                rep.E.fail(f"{a.describe(rs)} ~ {b.describe(rs)}")
        elif not d_list(rs, a, b):
            rep.D.fail(f"{a.describe(rs)} / {b.describe(rs)}")
    for r in d.M:
        rest = set()
        for q in d.M:
            if q != r:
                rest |= rs.support(q)
        if rs.support(r) <= rest:
            rep.C.fail(rs.root_str(r))
    K = d.torus.kernel
    if K.ambient != rs.rank:
        rep.T.fail("kernel has the wrong ambient dimension")
        return rep
    if K.intersect(_support_span(rs, d.M)) != canonical_kernel(rs, d.sim):
        rep.T.fail("Ker tau restricted to R differs from the span of ~-differences")
    # ~ must be exactly equality of tau-images on M
    for a, b in combinations(d.M, 2):
        if not d.equivalent(a, b) and K.contains([x - y for x, y in zip(a, b)]):
            rep.T.fail(f"tau({rs.root_str(a)}) = tau({rs.root_str(b)}) but they are not ~")
    return rep


# -- JSON ------------------------------------------------------------------------

def _frac_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def datum_to_dict(d: CombinatorialDatum) -> dict:
    index = {r: i for i, r in enumerate(d.M)}
    return {
        "system": d.rs.label,
        "kernel": [[_frac_str(x) for x in row] for row in d.torus.kernel.rows],
        "M": [list(r) for r in d.M],
        "pi": [p + 1 for p in d.pi],
        "sim": [[index[r] for r in b] for b in d.sim],
    }


def datum_from_dict(obj) -> CombinatorialDatum:
    try:
        rs = build_root_system(obj["system"])
        M = [tuple(int(c) for c in r) for r in obj.get("M", [])]
        pi = [int(p) - 1 for p in obj.get("pi", [])]
        if len(pi) != len(M):
            raise DatumError("pi must have one entry per root of M")
        if any(not 0 <= p < rs.rank for p in pi):
            raise DatumError(f"pi entries must lie in 1..{rs.rank}")
        if any(len(r) != rs.rank for r in M):
            raise DatumError("root length does not match the rank")
        if "sim" in obj:
            blocks = [[M[i] for i in b] for b in obj["sim"]]
        else:
            blocks = None
        kernel = None
        if "kernel" in obj and obj["kernel"] is not None:
            rows = [[Fraction(str(x)) for x in row] for row in obj["kernel"]]
            if any(len(row) != rs.rank for row in rows):
                raise DatumError("kernel rows must have one entry per simple root")
            kernel = Subspace(rows, rs.rank)
        return make_datum(rs, zip(M, pi), blocks, kernel)
    except (KeyError, IndexError, TypeError) as exc:
        raise DatumError(f"malformed datum: {exc!r}") from exc


def datum_to_json(d: CombinatorialDatum) -> str:
    return json.dumps(datum_to_dict(d), sort_keys=True)


def datum_from_json(text: str) -> CombinatorialDatum:
    return datum_from_dict(json.loads(text))
