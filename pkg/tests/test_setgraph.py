import networkx as nx
import pytest

from oracles import setgraph_degrees_bruteforce
from pythagorean_holes.graph import format_edge_list
from pythagorean_holes.setgraph import (
    MAX_BUILD,
    SetGraphError,
    build_setgraph,
    check_degree_law,
    check_no_pythagorean_holes,
    check_triangle_inequality_lemma,
    closed_form_degree,
    count_largest_cliques,
    degree_law,
    triangle_inequality_lemma,
)


def test_n2_is_a_path():
    g = build_setgraph(2)
    assert g.names == ("{a1}", "{a2}", "{a1,a2}")
    assert sorted(g.edges()) == [(0, 2), (1, 2)]


def test_n3_degree_sequence():
    g = build_setgraph(3)
    assert g.vertex_count == 7
    assert sorted(g.degrees) == [3, 3, 3, 5, 5, 5, 6]


def test_n4_degree_bounds():
    g = build_setgraph(4)
    assert (g.vertex_count, max(g.degrees), min(g.degrees)) == (15, 14, 7)


@pytest.mark.parametrize("n", [1, 0, MAX_BUILD + 1])
def test_out_of_range(n):
    with pytest.raises(SetGraphError):
        build_setgraph(n)


def test_adjacency_is_intersection():
    g = build_setgraph(5)
    for u in range(g.vertex_count):
        for v in range(g.vertex_count):
            if u != v:
                assert g.has_edge(u, v) == bool(g.labels[u] & g.labels[v])


@pytest.mark.parametrize("n", range(2, 11))
def test_degrees_match_bruteforce_and_closed_form(n):
    g = build_setgraph(n)
    if n <= 8:
        assert list(g.degrees) == setgraph_degrees_bruteforce(n)
    for s, d in zip(g.labels, g.degrees):
        assert d == closed_form_degree(n, s.bit_count())


@pytest.mark.parametrize("n", [11, 12])
def test_closed_form_degree_large(n):
    g = build_setgraph(n)
    assert g.vertex_count == 2 ** n - 1 and g.vertex_count % 2 == 1
    by_size = {}
    for s, d in zip(g.labels, g.degrees):
        by_size.setdefault(s.bit_count(), set()).add(d)
    assert all(len(ds) == 1 for ds in by_size.values())
    assert {k: ds.pop() for k, ds in by_size.items()} == {k: closed_form_degree(n, k) for k in range(1, n + 1)}


def test_degree_law_examples():
    assert check_degree_law(2)
    law = degree_law(3)
    assert (law.max_degree, law.min_degree) == (6, 3)
    law = degree_law(5)
    assert (law.max_degree, law.min_degree, law.max_count) == (30, 15, 1)
    assert all(check_degree_law(n) for n in range(2, 9))


def test_lemma_readings():
    # distinct-value reading holds; (min, min, max) is always an equality case
    lem = triangle_inequality_lemma(2)
    assert lem.holds and lem.sequence_violations == ((1, 1, 2),)
    lem = triangle_inequality_lemma(3)
    assert lem.holds and (3, 3, 6) in lem.sequence_violations
    lem = triangle_inequality_lemma(4)
    assert lem.degree_values == (7, 11, 13, 14)
    assert lem.holds and lem.sequence_violations == ((7, 7, 14),)
    assert all(check_triangle_inequality_lemma(n) for n in range(2, 9))


@pytest.mark.parametrize("n", [2, 3, 6])
def test_no_pythagorean_holes(n):
    assert check_no_pythagorean_holes(n)


def test_census_guard():
    with pytest.raises(SetGraphError):
        check_no_pythagorean_holes(9)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_largest_cliques_against_networkx(n):
    g = build_setgraph(n)
    ref = nx.Graph(list(g.edges()))
    cliques = list(nx.find_cliques(ref))
    omega = max(map(len, cliques))
    assert count_largest_cliques(n) == (omega, sum(1 for c in cliques if len(c) == omega))


def test_largest_clique_values():
    assert count_largest_cliques(2) == (2, 2)
    assert count_largest_cliques(3) == (4, 4)
    # 12 and 81, not 6 and 8: every maximal intersecting family of size
    # 2**(n-1) counts, not just the stars and their few relatives
    assert count_largest_cliques(4) == (8, 12)
    assert count_largest_cliques(5) == (16, 81)


def test_export_has_subset_comments():
    text = format_edge_list(build_setgraph(4))
    assert "# 5 = {a1,a3}" in text
    assert sum(1 for line in text.splitlines() if not line.startswith("#")) == build_setgraph(4).edge_count
