"""Marked roots and their associated simple roots.

Two independent routes to the admissible pairs ``(alpha, pi(alpha))``:

* :func:`table1_pairs` reads the classification table off the type of the
  subsystem generated by ``Supp alpha``;
* :func:`derive_admissible_pairs` searches, with no knowledge of the table,
  for a self-consistent set of subordinate marked roots (:func:`build_closure`).
"""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .rootsys import RootSystem, classify_diagram

DEFAULT_RANK_CAP = 4


class MarkedPair(NamedTuple):
    root: tuple
    pi: int  # simple index, 0-based

    def describe(self, rs: RootSystem) -> str:
        return f"({rs.root_str(self.root)}, a{self.pi + 1})"


class InadmissiblePair(ValueError):
    pass


class MarkedClosure(NamedTuple):
    """A marked root with every marked root forced below it."""

    pairs: frozenset  # of MarkedPair
    unmarked: frozenset  # roots forced into n along the way

    @property
    def roots(self):
        return frozenset(p.root for p in self.pairs)

    def pi_of(self, root):
        for p in self.pairs:
            if p.root == root:
                return p.pi
        raise KeyError(root)


# -- the table ------------------------------------------------------------

def _table_row_pis(letter, rank, coeffs):
    """Positions (in the standard numbering) allowed for pi, per table row."""
    n = rank
    out = set()
    if all(c == 1 for c in coeffs):
        out |= set(range(n))
    if letter == "B" and coeffs == (1,) * (n - 1) + (2,):
        out |= set(range(n - 1))
    if letter == "C" and coeffs == (2,) * (n - 1) + (1,):
        out.add(n - 1)
    if letter == "F" and coeffs == (2, 2, 1, 1):
        out |= {2, 3}
    if letter == "G" and coeffs in ((2, 1), (3, 1)):
        out.add(1)
    return out


def table1_pairs(rs: RootSystem) -> frozenset:
    pairs = set()
    for root in rs.positive_roots:
        comp, = classify_diagram(rs, rs.support(root))
        readings = [(comp.letter, comp.nodes)]
        if comp.letter == "B" and comp.rank == 2:
            # B2 and C2 are the same diagram read in opposite directions
            readings.append(("C", comp.nodes[::-1]))
        for letter, nodes in readings:
            coeffs = tuple(root[i] for i in nodes)
            for pos in _table_row_pis(letter, comp.rank, coeffs):
                pairs.add(MarkedPair(root, nodes[pos]))
    return frozenset(pairs)


# -- the brute-force oracle -----------------------------------------------

def _pi_candidates(rs, root, marked, unmarked):
    supp = rs.support(root)
    out = []
    for c in sorted(supp):
        ok = True
        for x, y in rs.decompositions(root):
            in_x, in_y = c in rs.support(x), c in rs.support(y)
            if in_x and in_y:
                ok = False
                break
            m, u = (y, x) if in_x else (x, y)
            if m in unmarked or u in marked:
                ok = False
                break
        if ok:
            out.append(c)
    return out


def closure_solutions(rs: RootSystem, alpha, pi) -> list[MarkedClosure]:
    """Every self-consistent assignment of subordinate marked roots.

    A marked root ``b`` with associated simple root ``p`` forces, for each
    decomposition ``b = x + y``, the summand avoiding ``p`` to be marked and
    the other to be unmarked; each newly marked root then needs its own
    associated simple root, chosen among those consistent with what is known.
    """
    alpha = tuple(alpha)
    if pi not in rs.support(alpha):
        raise InadmissiblePair("pi must lie in the support")
    solutions = []

    def propagate(marked, unmarked, queue):
        while queue:
            beta = queue.pop()
            pb = marked[beta]
            for x, y in rs.decompositions(beta):
                in_x, in_y = pb in rs.support(x), pb in rs.support(y)
                if in_x and in_y:
                    return False
                m, u = (y, x) if in_x else (x, y)
                if m in unmarked or u in marked:
                    return False
                unmarked.add(u)
                if m not in marked:
                    marked[m] = None
        return True

    def solve(marked, unmarked, queue):
        if not propagate(marked, unmarked, queue):
            return
        open_roots = [r for r, p in marked.items() if p is None]
        if not open_roots:
            solutions.append(MarkedClosure(
                frozenset(MarkedPair(r, p) for r, p in marked.items()), frozenset(unmarked)))
            return
        cands = {r: _pi_candidates(rs, r, marked, unmarked) for r in open_roots}
        root = min(open_roots, key=lambda r: (len(cands[r]), rs.index(r)))
        for c in cands[root]:
            m2 = dict(marked)
            m2[root] = c
            solve(m2, set(unmarked), [root])

    solve({alpha: pi}, set(), [alpha])
    return solutions


@lru_cache(maxsize=None)
def _cached_closure(rs, alpha, pi):
    sols = closure_solutions(rs, alpha, pi)
    if not sols:
        raise InadmissiblePair(f"no consistent closure for ({rs.root_str(alpha)}, a{pi + 1})")
    if len(sols) > 1:
        raise InadmissiblePair(
            f"associated simple roots below ({rs.root_str(alpha)}, a{pi + 1}) are not unique")
    return sols[0]


def build_closure(rs: RootSystem, pair) -> MarkedClosure:
    alpha, pi = pair
    return _cached_closure(rs, tuple(alpha), pi)


def is_admissible(rs: RootSystem, pair) -> bool:
    try:
        build_closure(rs, pair)
    except InadmissiblePair:
        return False
    return True


def derive_admissible_pairs(rs: RootSystem, rank_cap: int = DEFAULT_RANK_CAP) -> frozenset:
    for letter, rank in rs.components:
        if rank > rank_cap:
            raise ValueError(f"component {letter}{rank} exceeds the rank cap {rank_cap}")
    return frozenset(MarkedPair(root, pi)
                     for root in rs.positive_roots
                     for pi in sorted(rs.support(root))
                     if is_admissible(rs, (root, pi)))
