"""Graphical embodiments of Pythagorean triples.

For a triple ``(a, b, c)`` the embodiment is the triangle ``v1 v2 v3``
plus three groups of new vertices:

* ``a - 2`` vertices joined to all of ``v1, v2, v3``,
* ``b - a`` vertices joined to ``v2, v3``,
* ``c - b`` pendant vertices on ``v3``.

so that ``deg(v1), deg(v2), deg(v3) = a, b, c``.  The new vertices have
degree 3, 2 and 1 by group; the middle group is degree 2, not 3, since its
members never touch ``v1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import invariants
from .graph import Graph, hole_report
from .triples import Triple, TripleError


def embodiment_masks(a: int, b: int, c: int) -> list[int]:
    """Adjacency bitsets of the construction for any ``2 <= a <= b <= c``."""
    if not 2 <= a <= b <= c:
        raise ValueError(f"need 2 <= a <= b <= c, got ({a}, {b}, {c})")
    n = c + 1
    masks = [0] * n

    def join(u: int, v: int) -> None:
        masks[u] |= 1 << v
        masks[v] |= 1 << u

    join(0, 1)
    join(0, 2)
    join(1, 2)
    x = 3
    for _ in range(a - 2):
        join(x, 0)
        join(x, 1)
        join(x, 2)
        x += 1
    for _ in range(b - a):
        join(x, 1)
        join(x, 2)
        x += 1
    for _ in range(c - b):
        join(x, 2)
        x += 1
    assert x == n
    return masks


def build_embodiment(t: Triple | tuple[int, int, int]) -> Graph:
    """Embodiment graph; vertex labels ``1..c+1`` in construction order
    (hub ``v1, v2, v3`` first)."""
    if not isinstance(t, Triple):
        t = Triple.of(*t)
    if t.a < 3:
        raise TripleError(f"smallest leg must be at least 3, got {t}")
    masks = embodiment_masks(t.a, t.b, t.c)
    return Graph.from_masks(masks, labels=range(1, len(masks) + 1))


@dataclass(frozen=True)
class Check:
    name: str
    predicted: int
    computed: int | None  # None when the solver cap was exceeded

    @property
    def status(self) -> str:
        if self.computed is None:
            return "skipped"
        return "match" if self.computed == self.predicted else "MISMATCH"


@dataclass
class EmbodimentReport:
    triple: Triple
    graph: Graph
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != "MISMATCH" for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "triple": list(self.triple.as_tuple()),
            "ok": self.ok,
            "checks": [
                {"name": c.name, "predicted": c.predicted, "computed": c.computed, "status": c.status}
                for c in self.checks
            ],
        }


def predicted_invariants(t: Triple) -> dict[str, int]:
    a, b, c = t.as_tuple()
    return {
        "order": c + 1,
        "size": a + b + c - 3,
        "h": 2 * a + b - 5,
        "h_p": 2 if (a, b, c) == (3, 4, 5) else 1,
        "chromatic": 4,
        "independence": c - 2,
        "cover": 3,
        "domination": 1,
    }


_SOLVERS = {
    "chromatic": invariants.chromatic_number,
    "independence": invariants.independence_number,
    "cover": invariants.vertex_cover_number,
    "domination": invariants.domination_number,
}


def verify_embodiment(t: Triple | tuple[int, int, int]) -> EmbodimentReport:
    """Build the embodiment and compare every closed form with a direct
    computation.  Mismatches are reported, never raised."""
    if not isinstance(t, Triple):
        t = Triple.of(*t)
    g = build_embodiment(t)
    report = hole_report(g)
    computed: dict[str, int | None] = {
        "order": g.vertex_count,
        "size": g.edge_count,
        "h": report.h,
        "h_p": report.h_p,
    }
    for name, solver in _SOLVERS.items():
        try:
            computed[name] = solver(g)
        except invariants.InstanceTooLarge:
            computed[name] = None
    checks = [Check(name, pred, computed[name]) for name, pred in predicted_invariants(t).items()]
    return EmbodimentReport(t, g, checks)


def degree_spectrum(t: Triple) -> list[int]:
    """Degree multiset forced by the construction, sorted."""
    a, b, c = t.as_tuple()
    return sorted([a, b, c] + [3] * (a - 2) + [2] * (b - a) + [1] * (c - b))


def minimal_realisations(t: Triple | tuple[int, int, int]) -> tuple[int, int, list[Graph]]:
    """Smallest order ``n``, smallest size ``m`` at that order, and every
    labelled graph of that order and size having a triangle whose corner
    degrees are exactly ``t``.

    Exhaustive over all labelled graphs, so limited to ``c <= 5``.
    """
    if not isinstance(t, Triple):
        t = Triple.of(*t)
    if t.c > 5:
        raise invariants.InstanceTooLarge("exhaustive minimality search is limited to c <= 5")
    target = t.as_tuple()
    for n in range(3, t.c + 2):
        pairs = list(combinations(range(n), 2))
        found: dict[int, list[list[int]]] = {}
        for bits in range(1 << len(pairs)):
            masks = [0] * n
            for i, (u, v) in enumerate(pairs):
                if bits >> i & 1:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
            deg = [x.bit_count() for x in masks]
            for u, v, w in combinations(range(n), 3):
                if masks[u] >> v & 1 and masks[u] >> w & 1 and masks[v] >> w & 1:
                    if tuple(sorted((deg[u], deg[v], deg[w]))) == target:
                        found.setdefault(bits.bit_count(), []).append(masks)
                        break
        if found:
            m = min(found)
            return n, m, [Graph.from_masks(x) for x in found[m]]
    raise AssertionError("unreachable: the embodiment itself has order c + 1")
