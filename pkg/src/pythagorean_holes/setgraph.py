"""Set-graphs: non-empty subsets of an n-set, adjacent when they intersect.

Vertex ``i`` (0-based) is the subset with bitmask ``i + 1``; labels are the
bitmasks themselves, names render the subset as ``{a1,a3}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import PYTHAGOREAN, Graph, holes_matching
from .invariants import maximum_cliques

# dense bitset adjacency costs about 4**n / 8 bytes
MAX_BUILD = 14
MAX_CENSUS = 8
MAX_CLIQUE = 5


class SetGraphError(ValueError):
    pass


def _check_n(n: int, limit: int, what: str) -> None:
    if n < 2:
        raise SetGraphError(f"{what}: need n >= 2 (non-empty, non-singleton ground set), got {n}")
    if n > limit:
        raise SetGraphError(f"{what}: n = {n} exceeds size guard {limit}")


def subset_name(mask: int) -> str:
    members = [f"a{i + 1}" for i in range(mask.bit_length()) if mask >> i & 1]
    return "{" + ",".join(members) + "}"


def build_setgraph(n: int) -> Graph:
    _check_n(n, MAX_BUILD, "set-graph")
    count = (1 << n) - 1
    # vertices whose subset meets s: all indices except those of subsets
    # disjoint from s, which are the non-empty submasks of the complement
    full = (1 << count) - 1
    masks = []
    for s in range(1, count + 1):
        disjoint = 0
        rest = count ^ s
        sub = rest
        while sub:
            disjoint |= 1 << (sub - 1)
            sub = (sub - 1) & rest
        masks.append(full & ~disjoint & ~(1 << (s - 1)))
    labels = tuple(range(1, count + 1))
    # symmetric by construction; skip the O(m) validation in from_masks
    return Graph(tuple(masks), labels, tuple(subset_name(s) for s in labels))


def closed_form_degree(n: int, size: int) -> int:
    """Degree of a ``size``-element subset: all other vertices minus the
    ``2**(n - size) - 1`` non-empty subsets disjoint from it."""
    return (2 ** n - 2) - (2 ** (n - size) - 1)


@dataclass(frozen=True)
class DegreeLaw:
    n: int
    max_degree: int
    min_degree: int
    max_count: int
    singletons_independent: bool

    @property
    def holds(self) -> bool:
        return (
            self.max_degree == 2 * self.min_degree
            and self.max_count == 1
            and self.singletons_independent
        )


def degree_law(n: int) -> DegreeLaw:
    g = build_setgraph(n)
    deg = g.degrees
    top = max(deg)
    singles = [(1 << i) - 1 for i in range(n)]
    independent = not any(g.has_edge(u, v) for u, v in combinations(singles, 2))
    return DegreeLaw(n, top, min(deg), deg.count(top), independent)


def check_degree_law(n: int) -> bool:
    """Max degree is twice the min degree, attained by one vertex, and the
    singleton subsets are pairwise non-adjacent."""
    return degree_law(n).holds


@dataclass(frozen=True)
class LemmaCheck:
    n: int
    degree_values: tuple[int, ...]
    # triples of distinct degree values d1 < d2 < d3 with d1 + d2 <= d3
    distinct_violations: tuple[tuple[int, int, int], ...]
    # sorted triples drawn from the degree sequence (values may repeat) with
    # d1 + d2 <= d3; every n >= 2 has (min, min, max) here with equality
    sequence_violations: tuple[tuple[int, int, int], ...]

    @property
    def holds(self) -> bool:
        return not self.distinct_violations


def triangle_inequality_lemma(n: int) -> LemmaCheck:
    g = build_setgraph(n)
    seq = sorted(g.degrees)
    counts: dict[int, int] = {}
    for d in seq:
        counts[d] = counts.get(d, 0) + 1
    values = tuple(sorted(counts))
    distinct = tuple(t for t in combinations(values, 3) if t[0] + t[1] <= t[2])
    # value triples realisable by three different vertices
    seq_bad = []
    for i, x in enumerate(values):
        for j in range(i, len(values)):
            y = values[j]
            for z in values[j:]:
                need: dict[int, int] = {}
                for d in (x, y, z):
                    need[d] = need.get(d, 0) + 1
                if all(counts[d] >= k for d, k in need.items()) and x + y <= z:
                    seq_bad.append((x, y, z))
    return LemmaCheck(n, values, distinct, tuple(seq_bad))


def check_triangle_inequality_lemma(n: int) -> bool:
    """``d1 + d2 > d3`` for every three distinct degree values
    ``d1 < d2 < d3`` of the degree sequence.

    The repeated-value reading fails for every ``n`` at ``(min, min, max)``
    where ``max == 2 * min``; see :func:`triangle_inequality_lemma` for both.
    """
    return triangle_inequality_lemma(n).holds


def check_no_pythagorean_holes(n: int) -> bool:
    _check_n(n, MAX_CENSUS, "set-graph hole census")
    return not holes_matching(build_setgraph(n), PYTHAGOREAN)


def count_largest_cliques(n: int) -> tuple[int, int]:
    """``(clique order, number of cliques of that order)`` by direct search."""
    _check_n(n, MAX_CLIQUE, "set-graph clique census")
    return maximum_cliques(build_setgraph(n))


def predicted_largest_cliques(n: int) -> tuple[int, int]:
    return 2 ** (n - 1), 2 * n - 2
