"""Exit criteria.  Each test prints one PASS/FAIL line and asserts the
criterion exactly as stated, including its time limit."""

import csv
import io
import time

import pytest

from conftest import random_graph
from oracles import all_triples_triangles, pythagorean_bruteforce
from pythagorean_holes import audit
from pythagorean_holes.audit import FISHER_COLUMNS, PUBLISHED_FISHER, PUBLISHED_PRIMITIVES
from pythagorean_holes.cli import main
from pythagorean_holes.graph import enumerate_triangles, format_edge_list, hole_report
from pythagorean_holes.invariants import independence_number, vertex_cover_number
from pythagorean_holes.jaco import fisher_table
from pythagorean_holes.triples import primitive_triples_up_to


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            line = f"[criterion {number}] {'PASS' if ok else 'FAIL'}: {title}"
            print("\n" + line + (f" -- {detail}" if detail else ""))

    return emit


def _first(discrepancies, k=4):
    return "; ".join(str(d) for d in discrepancies[:k]) + (" ..." if len(discrepancies) > k else "")


def test_1_fisher_table(report):
    start = time.perf_counter()
    out, err = io.StringIO(), io.StringIO()
    code = main(["fisher", "35", "--format", "csv"], out, err)
    elapsed = time.perf_counter() - start
    rows = list(csv.DictReader(io.StringIO(out.getvalue())))
    wrong = []
    for rec, pub in zip(rows, PUBLISHED_FISHER):
        for col, expected in zip(FISHER_COLUMNS, pub[1:]):
            if int(rec[col]) != expected:
                wrong.append(f"row {pub[0]} {col}: published {expected}, computed {rec[col]}")
    ok = len(rows) == 35 and not wrong and code == 0 and elapsed < 1.0
    report(1, "fisher 35 matches all published rows", ok, f"{len(wrong)} cells differ: " + "; ".join(wrong) if wrong else f"{elapsed:.2f}s")
    assert len(rows) == 35
    assert elapsed < 1.0
    assert wrong == []
    assert code == 0


def test_2_recursion(report):
    start = time.perf_counter()
    result = audit.audit_recursion(4, 500)
    elapsed = time.perf_counter() - start
    ok = result.ok and result.checked == 497 and elapsed < 30
    report(2, "recursion equals direct census for 4 <= n <= 500", ok, f"{result.checked} steps, {elapsed:.1f}s")
    assert result.checked == 497
    assert result.discrepancies == []
    assert elapsed < 30


def test_3_floor_n_over_8(report):
    law, window = audit.audit_t1_law(500, 100)
    ok = law.ok and window.ok
    detail = f"{len(law.discrepancies)} of 500 n disagree with floor(n/8); window: {len(window.discrepancies)} mismatches"
    if not ok:
        detail += "; " + _first(law.discrepancies + window.discrepancies)
    report(3, "t1 census = floor(n/8) for n <= 500, unique hole exactly on 8..15", ok, detail)
    assert law.discrepancies == []
    assert window.discrepancies == []


def test_4_embodiments(report):
    start = time.perf_counter()
    result = audit.audit_embodiments(100)
    elapsed = time.perf_counter() - start
    # 52 triples (16 primitive + 36 multiples) x 8 invariants
    ok = result.ok and result.checked == 52 * 8 and elapsed < 60
    report(4, "embodiment closed forms for every triple with c <= 100", ok, f"{result.checked} checks, {elapsed:.1f}s")
    assert result.checked == 52 * 8
    assert result.discrepancies == []
    assert elapsed < 60


def test_5_setgraphs(report):
    start = time.perf_counter()
    degree, holes, cliques = audit.audit_setgraphs(8, 5)
    elapsed = time.perf_counter() - start
    ok = degree.ok and holes.ok and cliques.ok and elapsed < 120
    detail = f"{elapsed:.1f}s"
    if not ok:
        detail += "; " + _first(degree.discrepancies + holes.discrepancies + cliques.discrepancies)
    report(5, "set-graph degree law, no Pythagorean holes, 2n-2 largest cliques", ok, detail)
    assert degree.discrepancies == []
    assert holes.discrepancies == []
    assert elapsed < 120
    assert cliques.discrepancies == []


def test_6_triples(report):
    got = tuple(t.as_tuple() for t in primitive_triples_up_to(100))
    agree = all(
        [t.as_tuple() for t in primitive_triples_up_to(c)] == pythagorean_bruteforce(c) for c in (100, 250, 500)
    )
    ok = got == PUBLISHED_PRIMITIVES and agree
    report(6, "16 published primitives in order; Euclid = brute force up to 500", ok)
    assert got == PUBLISHED_PRIMITIVES
    assert agree


def test_7_property_suites(report):
    failures = []
    for k in range(200):
        n = 10 + (k * 7) % 51
        p = (0.1, 0.3, 0.5)[k % 3]
        g = random_graph(n, p, 1000 + k)
        if [tuple(t) for t in enumerate_triangles(g)] != all_triples_triangles(n, list(g.edges())):
            failures.append(f"triangles graph {k}")
        r = hole_report(g)
        if sum(r.primitive_degree) != 3 * r.h:
            failures.append(f"handshake graph {k}")
        if r.h_p > r.h:
            failures.append(f"h^p <= h graph {k}")
        if k % 4 == 0 and n <= 40:
            if independence_number(g) + vertex_cover_number(g) != n:
                failures.append(f"gallai graph {k}")
        if format_edge_list(g) != format_edge_list(random_graph(n, p, 1000 + k)):
            failures.append(f"determinism graph {k}")
    for argv in (["fisher", "35", "--format", "json", "--extended"], ["jaco", "30", "--census"]):
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            main(argv, buf, io.StringIO())
            outs.append(buf.getvalue())
        if outs[0] != outs[1]:
            failures.append(f"determinism {' '.join(argv)}")
    report(7, "triangle oracle, handshake, Gallai, h^p <= h, determinism", not failures, _first(failures))
    assert failures == []


def test_8_fault_injection(report, tmp_path):
    rows = fisher_table(35)
    baseline = {r.i: (r.d_minus, r.d_plus, r.h, r.h_p_t1) for r in rows}
    assert audit.audit_fisher(rows, baseline).ok

    perturbed = dict(baseline)
    d_minus, d_plus, h, hp = perturbed[10]
    perturbed[10] = (d_minus, d_plus, h + 1, hp)
    result = audit.audit_fisher(rows, perturbed)
    named = [str(d) for d in result.discrepancies]

    ref = tmp_path / "ref.csv"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("i",) + FISHER_COLUMNS)
    w.writerows((i,) + v for i, v in sorted(perturbed.items()))
    ref.write_text(buf.getvalue())
    err = io.StringIO()
    code = main(["fisher", "35", "--reference", str(ref)], io.StringIO(), err)

    expected = "fisher table: row 10 column h: expected 18, computed 17"
    ok = named == [expected] and code == 1 and expected in err.getvalue()
    report(8, "perturbed reference value -> exit 1 naming the claim", ok, expected)
    assert named == [expected]
    assert code == 1
    assert expected in err.getvalue()
