"""Enumeration of valid data, elementary transformations and conjugacy classes."""
from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ._accel import compatible_subsets
from .data import CombinatorialDatum, d_list, e_list, make_datum, validate
from .lie import build_chevalley
from .linalg import Subspace
from .marked import DEFAULT_RANK_CAP, table1_pairs
from .reconstruct import build_model, extract_datum, is_regular
from .rootsys import RootSystem


DEFAULT_ORBIT_BOUND = 10 ** 6


class TransformError(ValueError):
    pass


class OrbitTooLarge(RuntimeError):
    pass


def rank_cap_from_env(default: int = DEFAULT_RANK_CAP) -> int:
    value = os.environ.get("SPHERICAL_RANK_CAP")
    return int(value) if value else default


def _check_cap(rs: RootSystem, rank_cap):
    if rank_cap is None:
        rank_cap = rank_cap_from_env()
    if rs.rank > rank_cap:
        raise ValueError(f"{rs.label} has rank {rs.rank} above the cap {rank_cap}")


# -- enumeration -------------------------------------------------------------

def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _components(members, must_join):
    parent = {m: m for m in members}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in must_join:
        parent[find(a)] = find(b)
    groups = {}
    for m in members:
        groups.setdefault(find(m), []).append(m)
    return sorted(groups.values())


def _pair_tables(rs):
    pairs = sorted(table1_pairs(rs), key=lambda p: (rs.index(p.root), p.pi))
    n = len(pairs)
    compat = [0] * n
    d_ok = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j or pairs[i].root == pairs[j].root:
                continue
            if e_list(rs, pairs[i], pairs[j]):
                compat[i] |= 1 << j
            d_ok[i][j] = d_list(rs, pairs[i], pairs[j])
    supports = [sum(1 << k for k in rs.support(p.root)) for p in pairs]
    return pairs, compat, d_ok, supports


def _data_for_subset(rs, pairs, d_ok, mask):
    members = [i for i in range(len(pairs)) if mask >> i & 1]
    must_join = [(a, b) for a in members for b in members if a < b and not d_ok[a][b]]
    comps = _components(members, must_join)
    out = []
    for part in _set_partitions(comps):
        blocks = [[pairs[i].root for comp in block for i in comp] for block in part]
        d = make_datum(rs, [pairs[i] for i in members], blocks)
        if validate(d).valid:
            out.append(d)
    return out


def _worker(args):
    label, masks = args
    from .rootsys import build_root_system
    rs = build_root_system(label)
    pairs, _, d_ok, _ = _pair_tables(rs)
    out = []
    for mask in masks:
        out += _data_for_subset(rs, pairs, d_ok, mask)
    return out


def enumerate_data(rs: RootSystem, rank_cap=None, jobs: int = 1) -> list[CombinatorialDatum]:
    """Every valid datum with the canonical torus, sorted by the datum order.

    ``M`` grows one admissible pair at a time (pairs failing every (E)/(D)
    condition and (C) violations prune the search); then ``~`` ranges over
    partitions whose cross-block pairs satisfy the (D) list.
    """
    _check_cap(rs, rank_cap)
    pairs, compat, d_ok, supports = _pair_tables(rs)
    masks = compatible_subsets(compat, supports)
    if jobs > 1 and len(masks) > 64:
        groups = {}
        for mask in masks:
            groups.setdefault((mask & -mask).bit_length(), []).append(mask)
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunks = ex.map(_worker, [(rs.label, g) for g in groups.values()])
            data = [d for chunk in chunks for d in chunk]
        # rebind to this process's root system object
        data = [make_datum(rs, d.pairs, d.sim, d.torus.kernel) for d in data]
    else:
        data = []
        for mask in masks:
            data += _data_for_subset(rs, pairs, d_ok, mask)
    data.sort(key=CombinatorialDatum.sort_key)
    return data


# -- elementary transformations ------------------------------------------------

def regular_simple_roots(d: CombinatorialDatum, model=None):
    """Simple indices ``i`` with ``alpha_i`` a regular marked root of ``d``."""
    m = model or build_model(d)
    rs = d.rs
    return [i for i in range(rs.rank)
            if rs.simple_root(i) in m.psi_roots and is_regular(rs.simple_root(i), m)]


def elementary_transform(d: CombinatorialDatum, i: int, model=None) -> CombinatorialDatum:
    """Combinatorial effect of conjugating by ``n_{alpha_i}``."""
    rs = d.rs
    alpha = rs.simple_root(i)
    if i not in regular_simple_roots(d, model):
        raise TransformError(f"a{i + 1} is not a regular marked simple root")
    rest = [p for p in d.pairs if p.root != alpha]
    refl = {p.root: rs.reflect(i, p.root) for p in rest}
    images = list(refl.values())
    kernel = Subspace([rs.reflect(i, row) for row in d.torus.kernel.rows], rs.rank) \
        if d.torus.kernel.dim else Subspace.zero(rs.rank)
    blocks = [[refl[r] for r in b if r != alpha] for b in d.sim]
    blocks = [b for b in blocks if b]
    if any(i in rs.support(x) for x in images):
        # case (1)
        new_pairs = [(refl[p.root], p.pi) for p in rest]
    else:
        # case (2)
        new_pairs = [(refl[p.root], p.pi) for p in rest] + [(alpha, i)]
        blocks.append([alpha])
    return make_datum(rs, new_pairs, blocks, kernel)


def verify_transform(d: CombinatorialDatum, i: int, alg=None) -> bool:
    """Compare :func:`elementary_transform` with honest conjugation by ``n_{alpha_i}``."""
    alg = alg or build_chevalley(d.rs)
    m = build_model(d, alg)
    expected = elementary_transform(d, i, m)
    W = alg.weyl_action(i)
    conj = extract_datum(m.s_basis.image(W), m.n_basis.image(W), alg)
    return conj == expected


def orbit(d: CombinatorialDatum, bound: int = DEFAULT_ORBIT_BOUND):
    """Breadth-first closure under elementary transformations."""
    seen = {d: None}
    queue = deque([d])
    while queue:
        x = queue.popleft()
        m = build_model(x)
        for i in regular_simple_roots(x, m):
            y = elementary_transform(x, i, m)
            if y not in seen:
                if len(seen) >= bound:
                    raise OrbitTooLarge(f"orbit exceeds {bound} data; raise the bound")
                seen[y] = None
                queue.append(y)
    return list(seen)


def canonical_form(d: CombinatorialDatum, bound: int = DEFAULT_ORBIT_BOUND) -> CombinatorialDatum:
    return min(orbit(d, bound), key=CombinatorialDatum.sort_key)


@dataclass(frozen=True)
class ClassificationEntry:
    datum: CombinatorialDatum
    orbit_id: int
    canonical: bool
    isolated: bool = False  # orbit of size 1 with no regular marked simple root


def classify(rs: RootSystem, up_to: str = "g-conjugacy", rank_cap=None, jobs: int = 1,
             bound: int = DEFAULT_ORBIT_BOUND) -> list[ClassificationEntry]:
    data = enumerate_data(rs, rank_cap, jobs)
    if up_to in ("torus-conjugacy", "t-conjugacy"):
        return [ClassificationEntry(d, k, True) for k, d in enumerate(data)]
    if up_to != "g-conjugacy":
        raise ValueError(f"unknown equivalence {up_to!r}")
    orbit_of = {}
    orbits = []
    for d in data:
        if d in orbit_of:
            continue
        orb = orbit(d, bound)
        rep = min(orb, key=CombinatorialDatum.sort_key)
        orbits.append((rep, orb))
        for x in orb:
            orbit_of[x] = rep
    orbits.sort(key=lambda ro: ro[0].sort_key())
    ids = {rep: k for k, (rep, _) in enumerate(orbits)}
    isolated = {rep for rep, orb in orbits if len(orb) == 1 and not regular_simple_roots(rep)}
    out = []
    for d in data:
        rep = orbit_of[d]
        out.append(ClassificationEntry(d, ids[rep], d == rep, rep in isolated))
    return out
