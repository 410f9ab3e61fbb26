"""Acceptance criteria, one test each, at the stated tolerances.

Every test appends a single pass/fail line to the summary printed at the end
of the run (see ``conftest.pytest_terminal_summary``).
"""
import itertools
import random
import time
from dataclasses import replace
from importlib import resources

import pytest

from solvsph.cli import classification_json
from solvsph.data import make_datum, validate
from solvsph.enumerate import (canonical_form, classify, elementary_transform, orbit,
                               regular_simple_roots, verify_transform)
from solvsph.linalg import Subspace
from solvsph.marked import _cached_closure, derive_admissible_pairs, table1_pairs
from solvsph.reconstruct import (extract_datum, is_bracket_closed, torus_subalgebra,
                                 weight_classes)
from solvsph.rootsys import build_root_system
from solvsph.sphericity import criterion, oracle_open_orbit

from conftest import ACCEPTANCE_LINES, algebra, data, model, system


def report(number, title, ok, detail):
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


# -- 1 -------------------------------------------------------------------------

TABLE_SYSTEMS = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]


def test_criterion_1_table_rederived():
    _cached_closure.cache_clear()
    start = time.perf_counter()
    mismatched = []
    total = 0
    for label in TABLE_SYSTEMS:
        rs = build_root_system(label)
        derived, table = derive_admissible_pairs(rs), table1_pairs(rs)
        total += len(table)
        if derived != table:
            mismatched.append(label)
    elapsed = time.perf_counter() - start
    report(1, "derived pairs equal the table", not mismatched and elapsed < 60,
           f"{len(TABLE_SYSTEMS)} systems, {total} pairs, mismatches {mismatched or 'none'}, "
           f"{elapsed:.1f}s (limit 60s)")


# -- 2 -------------------------------------------------------------------------

SPHERICITY_SYSTEMS = ["A1", "A2", "A1xA1", "B2", "G2"]
MIN_MUTANTS = 50
MAX_ATTEMPTS = 4000


def shrink_torus(m, rng):
    n = m.alg.rank
    while True:
        v = [rng.randint(-2, 2) for _ in range(n)]
        if not m.kernel.contains(v):
            break
    kernel = Subspace(list(m.kernel.rows) + [v], n)
    return replace(m, s_basis=torus_subalgebra(kernel, m.alg))


def drop_fusion(m, rng):
    g = m.alg
    fused = [[r for r in cls if r in m.psi_roots] for cls in weight_classes(m.kernel, g.rs)]
    fused = [c for c in fused if len(c) >= 2]
    if not fused:
        return None
    cls = rng.choice(fused)
    drop = {g.root_index(r) for r in cls}
    keep = Subspace.coordinate([k for k in range(g.dim) if k not in drop], g.dim)
    return replace(m, n_basis=m.n_basis.intersect(keep))


def mutate(m, rng):
    mutant = drop_fusion(m, rng) if rng.random() < 0.5 else None
    return mutant or shrink_torus(m, rng)


def well_formed(m):
    return is_bracket_closed(m.n_basis, m.alg) and is_bracket_closed(m.n_basis, m.alg, m.s_basis)


@pytest.mark.parametrize("label", SPHERICITY_SYSTEMS)
def test_criterion_2_sphericity_agreement(label):
    models = [model(d) for d in data(label)]
    spherical_fail = [m.datum.describe() for m in models
                      if not (criterion(m) and oracle_open_orbit(m, trials=5))]
    rng = random.Random(f"mutants-{label}")
    disagreements, negatives, total = 0, 0, 0
    for attempt in range(MAX_ATTEMPTS):
        if negatives >= MIN_MUTANTS:
            break
        mutant = mutate(rng.choice(models), rng)
        if not well_formed(mutant):
            continue
        total += 1
        crit = criterion(mutant)
        orac = oracle_open_orbit(mutant, trials=5, seed=attempt)
        disagreements += crit != orac
        negatives += not crit and not orac
    ok = not spherical_fail and negatives >= MIN_MUTANTS and disagreements == 0
    report(2, f"criterion vs oracle on {label}", ok,
           f"{len(models)} data spherical by both (failures {len(spherical_fail)}), "
           f"{total} mutants, {negatives} non-spherical by both, {disagreements} disagreements")


# -- 3 -------------------------------------------------------------------------

ROUND_TRIP_SYSTEMS = ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A2xA1", "B2xA1",
                      "G2xA1", "A1xA1xA1"]


def test_criterion_3_round_trip():
    failures, count = [], 0
    for label in ROUND_TRIP_SYSTEMS:
        for d in data(label):
            count += 1
            m = model(d)
            if not is_bracket_closed(m.n_basis, m.alg):
                failures.append(f"{label} {d.describe()}: not closed")
            elif extract_datum(m.s_basis, m.n_basis, m.alg) != d:
                failures.append(f"{label} {d.describe()}: round trip")
    report(3, "extract_datum(build_model(d)) == d with closed brackets", not failures,
           f"{count} data over {len(ROUND_TRIP_SYSTEMS)} systems of rank <= 3, "
           f"failures {failures[:3] or 'none'}")


# -- 4 -------------------------------------------------------------------------

def test_criterion_4_transforms_verified():
    failures, count = [], 0
    for label in ["A2", "A3", "B2"]:
        g = algebra(label)
        for d in data(label):
            for i in regular_simple_roots(d, model(d)):
                count += 1
                if not verify_transform(d, i, g):
                    failures.append(f"{label} {d.describe()} at a{i + 1}")
    report(4, "verify_transform on every regular marked simple root", not failures and count > 0,
           f"{count} (datum, root) pairs in A2, A3, B2, failures {failures[:3] or 'none'}")


# -- 5 -------------------------------------------------------------------------

SNAPSHOT_COUNTS = {"A1": (2, 2), "A1xA1": (5, 5), "A2": (7, 5), "B2": (8, 6), "G2": (9, 6)}


def test_criterion_5_canonical_forms_and_snapshots():
    problems = []
    counts = {}
    for label, expected in SNAPSHOT_COUNTS.items():
        rs = system(label)
        for d in data(label):
            c = canonical_form(d)
            if any(canonical_form(x) != c for x in orbit(d)):
                problems.append(f"{label}: canonical form varies on the orbit of {d.describe()}")
            m = model(d)
            for i in regular_simple_roots(d, m):
                if canonical_form(elementary_transform(d, i, m)) != c:
                    problems.append(f"{label}: a{i + 1} changes the class of {d.describe()}")
        entries = classify(rs)
        counts[label] = (len(entries), len({e.orbit_id for e in entries}))
        if counts[label] != expected:
            problems.append(f"{label}: counts {counts[label]} != snapshot {expected}")
        stored = (resources.files("solvsph") / "tables" / f"{label}.json").read_text()
        if classification_json(rs, "g-conjugacy", entries) != stored:
            problems.append(f"{label}: output differs from the stored table")
    detail = ", ".join(f"{k} {v[0]} data/{v[1]} classes" for k, v in counts.items())
    report(5, "canonical forms constant on orbits, snapshot counts frozen", not problems,
           f"{detail}; problems {problems[:3] or 'none'}")


# -- 6 -------------------------------------------------------------------------

def set_partitions(items):
    """Restricted growth strings, independent of the enumerator's recursion."""
    n = len(items)
    if n == 0:
        yield []
        return
    codes = [0] * n
    while True:
        blocks = [[] for _ in range(max(codes) + 1)]
        for item, c in zip(items, codes):
            blocks[c].append(item)
        yield blocks
        i = n - 1
        while i > 0 and codes[i] > max(codes[:i]):
            i -= 1
        if i == 0:
            return
        codes[i] += 1
        codes[i + 1:] = [0] * (n - i - 1)


def naive_enumeration(rs):
    pairs = sorted(table1_pairs(rs))
    found = set()
    for k in range(len(pairs) + 1):
        for subset in itertools.combinations(pairs, k):
            roots = [p.root for p in subset]
            if len(set(roots)) != len(roots):
                continue
            for blocks in set_partitions(roots):
                d = make_datum(rs, subset, blocks)
                if validate(d).valid:
                    found.add(d)
    return found


def test_criterion_6_naive_enumerator_agrees():
    problems, sizes = [], []
    for label in ["A1", "A2", "B2", "G2", "A1xA1"]:
        naive = naive_enumeration(system(label))
        pruned = set(data(label))
        sizes.append(f"{label} {len(naive)}")
        if naive != pruned:
            problems.append(f"{label}: naive only {len(naive - pruned)}, "
                            f"pruned only {len(pruned - naive)}")
    report(6, "naive generate-and-filter equals the pruned enumerator", not problems,
           f"{', '.join(sizes)}; problems {problems or 'none'}")
