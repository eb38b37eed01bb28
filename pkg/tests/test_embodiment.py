import networkx as nx
import pytest

from pythagorean_holes.embodiment import (
    build_embodiment,
    degree_spectrum,
    minimal_realisations,
    verify_embodiment,
)
from pythagorean_holes.graph import hole_report
from pythagorean_holes.triples import Triple, TripleError, triples_up_to

ALL_100 = triples_up_to(100)


def test_345_shape():
    g = build_embodiment((3, 4, 5))
    assert (g.vertex_count, g.edge_count) == (6, 9)
    assert g.degrees[:3] == (3, 4, 5)
    assert g.labels == (1, 2, 3, 4, 5, 6)


def test_5_12_13_shape():
    g = build_embodiment((5, 12, 13))
    assert (g.vertex_count, g.edge_count) == (14, 27)


def test_6_8_10_counts():
    g = build_embodiment(Triple(6, 8, 10))
    assert (g.vertex_count, g.edge_count, hole_report(g).h) == (11, 21, 15)


def test_rejects_non_pythagorean():
    with pytest.raises(TripleError):
        build_embodiment((2, 3, 4))


def test_verify_345_all_match():
    rep = verify_embodiment((3, 4, 5))
    assert rep.ok
    assert rep["h_p"].computed == 2
    assert all(c.status == "match" for c in rep.checks)


def test_verify_examples():
    rep = verify_embodiment((20, 21, 29))
    assert rep["h"].computed == 56 and rep["h_p"].computed == 1
    assert verify_embodiment((9, 40, 41))["independence"].computed == 39


@pytest.mark.parametrize("t", ALL_100, ids=str)
def test_closed_forms_for_every_triple_up_to_100(t):
    rep = verify_embodiment(t)
    assert rep.ok, [c for c in rep.checks if c.status != "match"]
    assert sorted(rep.graph.degrees) == degree_spectrum(t)
    assert nx.is_connected(nx.Graph(list(rep.graph.edges())))


def test_mismatch_is_reported_not_raised(monkeypatch):
    import pythagorean_holes.embodiment as emb

    monkeypatch.setitem(emb._SOLVERS, "domination", lambda g: 2)
    rep = verify_embodiment((3, 4, 5))
    assert not rep.ok
    assert rep["domination"].status == "MISMATCH"


def test_over_cap_marks_skipped(monkeypatch):
    import pythagorean_holes.invariants as inv

    monkeypatch.setattr(inv, "COLORING_CAP", 5)
    rep = verify_embodiment((3, 4, 5))
    assert rep["chromatic"].status == "skipped"
    assert rep.ok


def test_report_json_shape():
    d = verify_embodiment((3, 4, 5)).as_dict()
    assert d["triple"] == [3, 4, 5] and d["ok"] is True
    assert {c["name"] for c in d["checks"]} == {
        "order", "size", "h", "h_p", "chromatic", "independence", "cover", "domination"
    }


def test_345_minimal_order_and_size():
    n, m, graphs = minimal_realisations((3, 4, 5))
    assert (n, m) == (6, 9)
    emb = nx.Graph(list(build_embodiment((3, 4, 5)).edges()))
    classes = []
    for g in graphs:
        h = nx.Graph(list(g.edges()))
        h.add_nodes_from(range(g.vertex_count))
        if not any(nx.is_isomorphic(h, c) for c in classes):
            classes.append(h)
    assert any(nx.is_isomorphic(emb, c) for c in classes)
    # the minimum is not unique up to isomorphism: the extra neighbour of v1
    # need not be one of the extra neighbours of v2
    assert len(classes) == 2
