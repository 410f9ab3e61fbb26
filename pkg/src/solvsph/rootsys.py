"""Root systems of simple and semisimple types.

Roots are plain tuples of integers: the coefficients over the simple roots.
Simple-root indices are 0-based internally and printed 1-based (``a1``,
``a2``, ...).  Numbering follows the Vinberg--Onishchik tables:

=====  ==========================================================
type   numbering
=====  ==========================================================
A_n    chain 1 - 2 - ... - n
B_n    chain, alpha_n short
C_n    chain, alpha_n long
D_n    chain 1 - ... - (n-2), with n-1 and n both attached to n-2
E_n    chain 1 - ... - (n-1), with n attached to n-3
F_4    chain, alpha_1 and alpha_2 short, alpha_3 and alpha_4 long
G_2    alpha_1 short
=====  ==========================================================
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

Root = tuple  # tuple[int, ...]

_RANK_BOUNDS = {"A": 1, "B": 2, "C": 2, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


class RootSystemError(ValueError):
    pass


def parse_type_label(label: str) -> list[tuple[str, int]]:
    """Parse ``"B2xA1"`` into ``[("B", 2), ("A", 1)]``."""
    parts = [p.strip() for p in label.strip().lower().split("x")]
    if not parts or any(not p for p in parts):
        raise RootSystemError(f"malformed type label {label!r}")
    out = []
    for part in parts:
        m = re.fullmatch(r"([a-g])(\d+)", part)
        if m is None:
            raise RootSystemError(f"unknown type letter in {part!r}")
        letter, rank = m.group(1).upper(), int(m.group(2))
        if letter in _FIXED_RANKS:
            if rank not in _FIXED_RANKS[letter]:
                raise RootSystemError(f"invalid rank for type {letter}: {rank}")
        elif rank < _RANK_BOUNDS[letter]:
            raise RootSystemError(f"invalid rank for type {letter}: {rank}")
        out.append((letter, rank))
    return out


def format_type_label(components) -> str:
    return "x".join(f"{letter}{rank}" for letter, rank in components)


def _component_geometry(letter: str, n: int):
    """Squared lengths of simple roots and edges of the Dynkin diagram."""
    chain = [(i, i + 1) for i in range(n - 1)]
    if letter == "A":
        return [2] * n, chain
    if letter == "B":
        return [2] * (n - 1) + [1], chain
    if letter == "C":
        return [1] * (n - 1) + [2], chain
    if letter == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        return [2] * n, edges
    if letter == "E":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 4, n - 1)]
        return [2] * n, edges
    if letter == "F":
        return [1, 1, 2, 2], chain
    if letter == "G":
        return [2, 6], chain
    raise RootSystemError(f"unknown type letter {letter!r}")


def cartan_from_geometry(lengths, edges):
    """Cartan matrix with ``cartan[i][j] = <alpha_i, alpha_j^vee>``."""
    n = len(lengths)
    gram = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = Fraction(lengths[i])
    for i, j in edges:
        gram[i][j] = gram[j][i] = -Fraction(max(lengths[i], lengths[j]), 2)
    return [[int(2 * gram[i][j] / gram[j][j]) for j in range(n)] for i in range(n)], gram


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A reduced root system.

    Positive roots are ordered by height, then by coefficient vector in
    decreasing lexicographic order (so ``a1, a2, ...`` come first).
    """

    components: tuple
    cartan: tuple
    gram: tuple
    positive_roots: tuple
    component_of: tuple  # simple index -> component number
    _index: dict = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def label(self) -> str:
        return format_type_label(self.components)

    def __repr__(self):
        return f"RootSystem({self.label!r})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    # -- lookups ---------------------------------------------------------
    def index(self, root) -> int:
        """Position of a positive root in ``positive_roots``."""
        return self._index[tuple(root)]

    def is_positive_root(self, root) -> bool:
        return tuple(root) in self._index

    def is_root(self, root) -> bool:
        root = tuple(root)
        return root in self._index or tuple(-c for c in root) in self._index

    def simple_root(self, i: int) -> Root:
        return tuple(int(j == i) for j in range(self.rank))

    @cached_property
    def simple_roots(self):
        return tuple(self.simple_root(i) for i in range(self.rank))

    # -- geometry --------------------------------------------------------
    def pairing(self, root, j: int) -> int:
        """``<root, alpha_j^vee>``."""
        return sum(k * self.cartan[i][j] for i, k in enumerate(root) if k)

    def inner(self, a, b) -> Fraction:
        g = self.gram
        return sum((a[i] * b[j] * g[i][j] for i in range(self.rank) for j in range(self.rank)
                    if a[i] and b[j]), Fraction(0))

    def reflect(self, i: int, root) -> Root:
        c = self.pairing(root, i)
        out = list(root)
        out[i] -= c
        return tuple(out)

    def height(self, root) -> int:
        return sum(root)

    # -- diagram ---------------------------------------------------------
    @cached_property
    def adjacency(self):
        n = self.rank
        return tuple(frozenset(j for j in range(n) if j != i and self.cartan[i][j])
                     for i in range(n))

    def support(self, root) -> frozenset:
        return frozenset(i for i, k in enumerate(root) if k > 0)

    def is_connected(self, nodes) -> bool:
        nodes = set(nodes)
        if not nodes:
            return False
        start = next(iter(nodes))
        seen, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v] & nodes:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == nodes

    def degree(self, node: int, nodes) -> int:
        return len(self.adjacency[node] & frozenset(nodes))

    def is_terminal(self, node: int, nodes) -> bool:
        """True iff ``node`` has exactly one neighbour inside ``nodes``."""
        nodes = frozenset(nodes)
        if node not in nodes:
            raise RootSystemError(f"node {node + 1} is not in the support")
        return self.degree(node, nodes) == 1

    # -- decompositions --------------------------------------------------
    @cached_property
    def _decompositions(self):
        table = {r: [] for r in self.positive_roots}
        roots = self.positive_roots
        for a, ra in enumerate(roots):
            for rb in roots[a:]:
                s = tuple(x + y for x, y in zip(ra, rb))
                if s in self._index:
                    table[s].append((ra, rb))
        return {r: tuple(v) for r, v in table.items()}

    def decompositions(self, root):
        """All unordered pairs ``(b, c)`` of positive roots with ``b + c == root``."""
        return self._decompositions[tuple(root)]

    def roots_in_support(self, nodes):
        nodes = frozenset(nodes)
        return tuple(r for r in self.positive_roots if self.support(r) <= nodes)

    def generated_subsystem(self, nodes):
        """Type label and positive roots of the subsystem spanned by ``nodes``."""
        nodes = frozenset(nodes)
        if not nodes:
            raise RootSystemError("empty support")
        comps = classify_diagram(self, nodes)
        label = format_type_label((c.letter, c.rank) for c in comps)
        return label, self.roots_in_support(nodes)

    # -- formatting ------------------------------------------------------
    def root_str(self, root) -> str:
        terms = []
        for i, k in enumerate(root):
            if k == 0:
                continue
            sign = "-" if k < 0 else "+"
            mag = abs(k)
            terms.append((sign, f"{'' if mag == 1 else mag}a{i + 1}"))
        if not terms:
            return "0"
        s = "".join(f"{sg}{t}" for sg, t in terms)
        return s[1:] if s.startswith("+") else s


def _closure(cartan):
    """Positive roots from the Cartan matrix via root strings."""
    n = len(cartan)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for r in layer:
            for i in range(n):
                # p: how far down the alpha_i string through r goes
                p, down = 0, list(r)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pair = sum(k * cartan[j][i] for j, k in enumerate(r))
                if p - pair > 0:
                    up = list(r)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots and r != simple[i]:
                        nxt.add(up)
        roots |= nxt
        layer = list(nxt)
    return sorted(roots, key=lambda r: (sum(r), tuple(-c for c in r)))


def build_root_system(label) -> RootSystem:
    components = parse_type_label(label) if isinstance(label, str) else list(label)
    lengths, edges, owner = [], [], []
    for c, (letter, rank) in enumerate(components):
        l, e = _component_geometry(letter, rank)
        off = len(lengths)
        lengths += l
        edges += [(i + off, j + off) for i, j in e]
        owner += [c] * rank
    cartan, gram = cartan_from_geometry(lengths, edges)
    roots = _closure(cartan)
    return RootSystem(
        components=tuple(components),
        cartan=tuple(tuple(r) for r in cartan),
        gram=tuple(tuple(r) for r in gram),
        positive_roots=tuple(roots),
        component_of=tuple(owner),
        _index={r: i for i, r in enumerate(roots)},
    )


def classical_count(letter: str, n: int) -> int:
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": {6: 36, 7: 63, 8: 120}.get(n, 0),
        "F": 24,
        "G": 6,
    }[letter]


# -- diagram classification -------------------------------------------------

@dataclass(frozen=True)
class DiagramComponent:
    """A connected sub-diagram identified with a standard type.

    ``nodes[k]`` is the ambient simple index playing the role of the
    standard ``alpha_{k+1}``.
    """

    letter: str
    rank: int
    nodes: tuple


def _walk_path(rs, start, nodes):
    order, prev, cur = [start], None, start
    while True:
        nxt = [w for w in rs.adjacency[cur] & nodes if w != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def _classify_connected(rs: RootSystem, nodes: frozenset) -> DiagramComponent:
    n = len(nodes)
    if n == 1:
        return DiagramComponent("A", 1, tuple(nodes))
    lengths = {i: rs.gram[i][i] for i in nodes}
    degrees = {i: rs.degree(i, nodes) for i in nodes}
    multi = [(i, j) for i in nodes for j in rs.adjacency[i] & nodes
             if i < j and rs.cartan[i][j] * rs.cartan[j][i] > 1]
    ends = sorted(i for i in nodes if degrees[i] == 1)
    if max(degrees.values()) <= 2:
        if not multi:
            return DiagramComponent("A", n, tuple(_walk_path(rs, ends[0], nodes)))
        (i, j), = multi
        if rs.cartan[i][j] * rs.cartan[j][i] == 3:
            short, long_ = (i, j) if lengths[i] < lengths[j] else (j, i)
            return DiagramComponent("G", 2, (short, long_))
        if n == 2:
            long_, short = (i, j) if lengths[i] > lengths[j] else (j, i)
            return DiagramComponent("B", 2, (long_, short))
        for end in ends:
            path = _walk_path(rs, end, nodes)
            a, b = path[-2], path[-1]
            if {a, b} == {i, j}:
                letter = "B" if lengths[b] < lengths[a] else "C"
                return DiagramComponent(letter, n, tuple(path))
        # double edge in the interior: F4, short end first
        for end in ends:
            path = _walk_path(rs, end, nodes)
            if lengths[path[0]] < lengths[path[-1]]:
                return DiagramComponent("F", 4, tuple(path))
        raise RootSystemError("unrecognised diagram")
    branch = next(i for i in nodes if degrees[i] == 3)
    arms = []
    for start in sorted(rs.adjacency[branch] & nodes):
        arms.append(_walk_path(rs, start, nodes - {branch}))
    lens = sorted(len(a) for a in arms)
    letter = "D" if lens[:2] == [1, 1] else "E"
    candidates = []
    for first, second, third in itertools.permutations(arms):
        if letter == "D" and len(second) == 1 and len(third) == 1:
            # long arm (reversed) -> branch -> the two leaves
            candidates.append(tuple(reversed(first)) + (branch, second[0], third[0]))
        elif letter == "E" and len(third) == 1 and len(second) == 2 and len(first) >= 2:
            candidates.append(tuple(reversed(first)) + (branch,) + tuple(second) + (third[0],))
    return DiagramComponent(letter, n, min(candidates))


def classify_diagram(rs: RootSystem, nodes) -> list[DiagramComponent]:
    """Split ``nodes`` into connected components and identify each type."""
    nodes = frozenset(nodes)
    out, left = [], set(nodes)
    while left:
        start = min(left)
        comp, stack = {start}, [start]
        while stack:
            v = stack.pop()
            for w in rs.adjacency[v] & nodes:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        left -= comp
        out.append(_classify_connected(rs, frozenset(comp)))
    return out
