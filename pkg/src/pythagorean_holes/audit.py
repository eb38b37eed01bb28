"""Published values and the checks that compare them with computation.

Every check produces :class:`ClaimResult` records; a claim fails when any
computed value differs from the published or closed-form one.  Nothing here
adjusts a published value to fit.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .embodiment import verify_embodiment
from .graph import primitive_hole_number
from .jaco import (
    T1,
    JacoGraph,
    JacoRow,
    build_jaco,
    census_of,
    hole_recursion_step,
    t1_count_formula,
    underlying_graph,
)
from .setgraph import (
    MAX_CENSUS,
    MAX_CLIQUE,
    check_no_pythagorean_holes,
    count_largest_cliques,
    degree_law,
    predicted_largest_cliques,
)
from .triples import primitive_triples_up_to, triples_up_to

# i, d_in(v_i), d_out(v_i), h(J*_i(1)), h^p_t1(J*_i(1)) as published.
PUBLISHED_FISHER = (
    (1, 0, 1, 0, 0),
    (2, 1, 1, 0, 0),
    (3, 1, 2, 0, 0),
    (4, 1, 3, 0, 0),
    (5, 2, 3, 1, 0),
    (6, 2, 4, 2, 0),
    (7, 3, 4, 5, 0),
    (8, 3, 5, 8, 1),
    (9, 3, 6, 11, 1),
    (10, 4, 6, 17, 1),
    (11, 4, 7, 23, 1),
    (12, 4, 8, 29, 1),
    (13, 5, 8, 39, 1),
    (14, 5, 9, 49, 1),
    (15, 6, 9, 64, 1),
    (16, 6, 10, 79, 2),
    (17, 6, 11, 94, 2),
    (18, 7, 11, 115, 2),
    (19, 7, 12, 136, 2),
    (20, 8, 12, 164, 2),
    (21, 8, 13, 192, 2),
    (22, 8, 14, 220, 2),
    (23, 9, 14, 256, 2),
    (24, 9, 15, 292, 3),
    (25, 9, 16, 328, 3),
    (26, 10, 16, 373, 3),
    (27, 10, 17, 418, 3),
    (28, 11, 17, 473, 3),
    (29, 11, 18, 528, 3),
    (30, 11, 19, 583, 3),
    (31, 12, 19, 649, 3),
    (32, 12, 20, 715, 4),
    (33, 12, 21, 781, 4),
    (34, 13, 21, 859, 4),
    (35, 13, 22, 937, 4),
)

FISHER_COLUMNS = ("d_minus", "d_plus", "h", "h_p_t1")

# The 16 primitive triples with c <= 100, in the published order.
PUBLISHED_PRIMITIVES = (
    (3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29), (12, 35, 37),
    (9, 40, 41), (28, 45, 53), (11, 60, 61), (16, 63, 65), (33, 56, 65), (48, 55, 73),
    (13, 84, 85), (36, 77, 85), (39, 80, 89), (65, 72, 97),
)


@dataclass(frozen=True)
class Discrepancy:
    claim: str
    where: str
    expected: object
    computed: object

    def __str__(self) -> str:
        return f"{self.claim}: {self.where}: expected {self.expected}, computed {self.computed}"


@dataclass
class ClaimResult:
    claim: str
    checked: int = 0
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def expect(self, where: str, expected: object, computed: object) -> None:
        self.checked += 1
        if expected != computed:
            self.discrepancies.append(Discrepancy(self.claim, where, expected, computed))


def reference_rows(rows: Iterable[Sequence[int]]) -> dict[int, tuple[int, int, int, int]]:
    return {r[0]: tuple(r[1:5]) for r in rows}


def read_reference_csv(text: str) -> dict[int, tuple[int, int, int, int]]:
    """Reference table as CSV with header ``i,d_minus,d_plus,h,h_p_t1``."""
    reader = csv.DictReader(io.StringIO(text))
    missing = {"i", *FISHER_COLUMNS} - set(reader.fieldnames or ())
    if missing:
        raise ValueError(f"reference CSV lacks columns {sorted(missing)}")
    out = {}
    for rec in reader:
        out[int(rec["i"])] = tuple(int(rec[c]) for c in FISHER_COLUMNS)
    return out


def audit_fisher(rows: Sequence[JacoRow], reference: dict[int, tuple[int, ...]] | None = None) -> ClaimResult:
    """Compare computed rows column by column with a reference table
    (default: the published one).  Rows without a reference are skipped."""
    reference = reference_rows(PUBLISHED_FISHER) if reference is None else reference
    result = ClaimResult("fisher table")
    for row in rows:
        ref = reference.get(row.i)
        if ref is None:
            continue
        for col, exp in zip(FISHER_COLUMNS, ref):
            result.expect(f"row {row.i} column {col}", exp, getattr(row, col))
    return result


def audit_recursion(n_from: int = 4, n_to: int = 500) -> ClaimResult:
    """Direct census of J*_{n+1}(1) against the recursion applied to J*_n(1)."""
    result = ClaimResult("hole recursion")
    j = build_jaco(n_to + 1)
    h = primitive_hole_number(underlying_graph(j, n_from))
    for n in range(n_from, n_to + 1):
        predicted = hole_recursion_step(JacoGraph(n, j.in_degrees[: n + 1]), h)
        h = primitive_hole_number(underlying_graph(j, n + 1))
        result.expect(f"n = {n} -> {n + 1}", predicted, h)
    return result


def audit_t1_law(n_to: int = 500, window_to: int = 100) -> tuple[ClaimResult, ClaimResult]:
    """t1-typed hole census of J*_n(1) against floor(n / 8), and the claim
    that exactly 8 <= n <= 15 have a single Pythagorean hole."""
    law = ClaimResult("t1 count floor(n/8)")
    window = ClaimResult("unique hole exactly for 8 <= n <= 15")
    j = build_jaco(n_to)
    for n in range(1, n_to + 1):
        holes = census_of(underlying_graph(j, n))
        law.expect(f"n = {n}", t1_count_formula(n), sum(1 for x in holes if x.kind == T1))
        if n <= window_to:
            window.expect(f"n = {n} has exactly one hole", 8 <= n <= 15, len(holes) == 1)
    return law, window


def audit_embodiments(c_max: int = 100) -> ClaimResult:
    result = ClaimResult("embodiment invariants")
    for t in triples_up_to(c_max):
        for check in verify_embodiment(t).checks:
            result.expect(f"{t} {check.name}", check.predicted, check.computed)
    return result


def audit_setgraphs(census_to: int = MAX_CENSUS, cliques_to: int = MAX_CLIQUE) -> tuple[ClaimResult, ClaimResult, ClaimResult]:
    degree = ClaimResult("set-graph max degree = 2 min degree, unique maximum")
    holes = ClaimResult("set-graph has no Pythagorean holes")
    cliques = ClaimResult("set-graph has exactly 2n-2 largest cliques K_{2^(n-1)}")
    for n in range(2, census_to + 1):
        law = degree_law(n)
        degree.expect(f"n = {n} max degree", 2 * law.min_degree, law.max_degree)
        degree.expect(f"n = {n} vertices of max degree", 1, law.max_count)
        degree.expect(f"n = {n} singletons independent", True, law.singletons_independent)
        holes.expect(f"n = {n} h^p", True, check_no_pythagorean_holes(n))
    for n in range(2, cliques_to + 1):
        cliques.expect(f"n = {n} (order, count)", predicted_largest_cliques(n), count_largest_cliques(n))
    return degree, holes, cliques


def audit_primitives(c_max: int = 100) -> ClaimResult:
    result = ClaimResult("16 primitive triples with c <= 100")
    got = tuple(t.as_tuple() for t in primitive_triples_up_to(c_max))
    result.expect(f"c <= {c_max}", PUBLISHED_PRIMITIVES, got)
    return result
