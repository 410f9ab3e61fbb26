import itertools

import pytest
from hypothesis import given, strategies as st

from solvsph.rootsys import (RootSystemError, build_root_system, classical_count,
                             classify_diagram, parse_type_label)

from conftest import system

SIMPLE_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5",
                "G2", "F4", "E6"]


def test_parse_labels():
    assert parse_type_label("B2xA1") == [("B", 2), ("A", 1)]
    assert parse_type_label("g2") == [("G", 2)]
    for bad in ["Q3", "G3", "F5", "B1", "", "A2x", "D3", "E9"]:
        with pytest.raises(RootSystemError):
            parse_type_label(bad)


def test_a2_roots():
    assert system("A2").positive_roots == ((1, 0), (0, 1), (1, 1))


def test_g2_has_table_roots():
    roots = system("G2").positive_roots
    assert (2, 1) in roots and (3, 1) in roots


@pytest.mark.parametrize("label", SIMPLE_TYPES)
def test_root_counts(label):
    rs = system(label)
    (letter, rank), = rs.components
    assert len(rs.positive_roots) == classical_count(letter, rank)


def test_b3_count_is_n_squared():
    assert len(system("B3").positive_roots) == 9


def test_product_counts():
    assert len(system("B2xA1").positive_roots) == 5
    assert len(system("A1xA1xA1").positive_roots) == 3


@pytest.mark.parametrize("label", SIMPLE_TYPES + ["B2xA1"])
def test_cartan_shape(label):
    rs = system(label)
    for i, j in itertools.product(range(rs.rank), repeat=2):
        if i == j:
            assert rs.cartan[i][j] == 2
        else:
            assert rs.cartan[i][j] <= 0
            assert (rs.cartan[i][j] == 0) == (rs.cartan[j][i] == 0)


@pytest.mark.parametrize("label", SIMPLE_TYPES + ["B2xA1"])
def test_closure_under_sums_and_decompositions(label):
    rs = system(label)
    roots = rs.positive_roots
    for a in roots:
        for b in roots:
            s = tuple(x + y for x, y in zip(a, b))
            if rs.is_positive_root(s):
                pairs = rs.decompositions(s)
                assert (a, b) in pairs or (b, a) in pairs
    assert len(set(roots)) == len(roots)


@pytest.mark.parametrize("label", SIMPLE_TYPES)
def test_supports_connected(label):
    rs = system(label)
    assert all(rs.is_connected(rs.support(r)) for r in rs.positive_roots)


@pytest.mark.parametrize("label", ["A3", "B3", "G2", "F4", "D4"])
def test_reflection_involution_and_permutation(label):
    rs = system(label)
    roots = set(rs.positive_roots)
    for i in range(rs.rank):
        alpha = rs.simple_root(i)
        for r in rs.positive_roots:
            assert rs.reflect(i, rs.reflect(i, r)) == r
            img = rs.reflect(i, r)
            if r != alpha:
                assert img in roots
        assert rs.reflect(i, alpha) == tuple(-c for c in alpha)


def test_reflect_examples():
    assert system("A2").reflect(0, (1, 0)) == (-1, 0)
    assert system("A2").reflect(0, (0, 1)) == (1, 1)
    assert system("G2").reflect(1, (3, 1)) == (3, 2)


def test_support_examples():
    assert system("A2").support((1, 1)) == {0, 1}
    assert system("G2").support((2, 1)) == {0, 1}
    assert system("B3").support((0, 1, 0)) == {1}


def test_decomposition_examples():
    assert system("A2").decompositions((1, 0)) == ()
    assert set(system("A2").decompositions((1, 1))) == {((1, 0), (0, 1))}


def test_g2_decomposition_by_brute_force():
    rs = system("G2")
    target = (2, 1)
    brute = {frozenset([a, b]) for a in rs.positive_roots for b in rs.positive_roots
             if tuple(x + y for x, y in zip(a, b)) == target}
    assert brute == {frozenset([(1, 0), (1, 1)])}
    assert {frozenset(p) for p in rs.decompositions(target)} == brute


def test_generated_subsystem_examples():
    f4 = system("F4")
    assert f4.generated_subsystem(f4.support((2, 2, 1, 1)))[0] == "F4"
    assert system("A3").generated_subsystem({1})[0] == "A1"
    label, roots = system("B3").generated_subsystem({1, 2})
    assert label == "B2" and len(roots) == 4


def test_f4_subdiagrams_follow_edge_direction():
    f4 = system("F4")
    assert classify_diagram(f4, {0, 1, 2})[0].letter == "C"
    assert classify_diagram(f4, {1, 2, 3})[0].letter == "B"


def test_terminal():
    a3 = system("A3")
    assert a3.is_terminal(0, {0, 1, 2})
    assert not a3.is_terminal(1, {0, 1, 2})
    assert system("G2").is_terminal(1, {0, 1})
    with pytest.raises(RootSystemError):
        a3.is_terminal(2, {0, 1})


@given(st.sampled_from(["A4", "B4", "C4", "D4", "F4"]), st.data())
def test_classified_numbering_is_an_isomorphism(label, data):
    rs = system(label)
    root = data.draw(st.sampled_from(rs.positive_roots))
    comp, = classify_diagram(rs, rs.support(root))
    std = build_root_system(f"{comp.letter}{comp.rank}")
    for a, b in itertools.product(range(comp.rank), repeat=2):
        assert rs.cartan[comp.nodes[a]][comp.nodes[b]] == std.cartan[a][b]
