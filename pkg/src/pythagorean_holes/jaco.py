"""Finite Jaco graphs J_n(1) and their underlying graphs J*_n(1).

Vertices are numbered from 1.  The builder is sequential: when ``v_i`` is
reached every arc into it has already been emitted, so its in-degree in the
infinite graph is final, its out-degree is ``i - d_in(i)``, and it sends
arcs to the next ``d_out(i)`` vertices.  The in-degree of ``v_{n+1}`` is
therefore known after processing ``v_n`` and is kept alongside the prefix,
since the hole recursion and the Jaconian index both need it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .graph import PYTHAGOREAN, Graph, Triangle, holes_matching, primitive_hole_number
from .triples import Triple, TripleType, classify

CENSUS_CAP = 2000


class JacoError(ValueError):
    pass


@dataclass(frozen=True)
class JacoGraph:
    n: int
    # d_in(v_i) in the infinite graph for i = 1..n+1 (one past the prefix)
    in_degrees: tuple[int, ...]

    @classmethod
    def build(cls, n: int) -> JacoGraph:
        if n < 1:
            raise JacoError(f"Jaco graph needs n >= 1, got {n}")
        # difference array over targets: arcs from v_i cover i+1 .. 2i - d_in(i)
        diff = [0] * (2 * n + 3)
        ind = []
        running = 0
        for i in range(1, n + 2):
            running += diff[i]
            ind.append(running)
            if i <= n:
                reach = 2 * i - running
                diff[i + 1] += 1
                diff[reach + 1] -= 1
        return cls(n, tuple(ind))

    def d_minus(self, i: int) -> int:
        if not 1 <= i <= self.n + 1:
            raise IndexError(f"in-degree known for v_1..v_{self.n + 1}, asked for v_{i}")
        return self.in_degrees[i - 1]

    def d_plus(self, i: int) -> int:
        """Out-degree of ``v_i`` in the infinite graph."""
        return i - self.d_minus(i)

    def reach(self, i: int) -> int:
        """Largest ``j`` with an arc ``(v_i, v_j)`` in the infinite graph."""
        return 2 * i - self.d_minus(i)

    @property
    def in_degree(self) -> tuple[int, ...]:
        return self.in_degrees[: self.n]

    @property
    def out_degree(self) -> tuple[int, ...]:
        return tuple(i - d for i, d in enumerate(self.in_degree, 1))

    @property
    def truncated_out_degree(self) -> tuple[int, ...]:
        return tuple(min(self.reach(i), self.n) - i for i in range(1, self.n + 1))

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j) for i in range(1, self.n + 1) for j in range(i + 1, min(self.reach(i), self.n) + 1)
        )


def build_jaco(n: int) -> JacoGraph:
    return JacoGraph.build(n)


def underlying_graph(j: JacoGraph, n: int | None = None) -> Graph:
    """Underlying simple graph of the prefix on ``v_1..v_n`` (default: all
    of ``j``).  Index ``i - 1`` holds ``v_i``; labels are ``1..n``.

    Reach ``2i - d_in(i)`` is non-decreasing in ``i``, so the in-neighbours
    of ``v_i`` are the ``d_in(i)`` vertices right before it and every
    neighbourhood is one contiguous block.
    """
    n = j.n if n is None else n
    if not 0 < n <= j.n:
        raise JacoError(f"prefix {n} outside 1..{j.n}")
    masks = []
    for i in range(1, n + 1):
        lo = i - j.d_minus(i)
        hi = min(j.reach(i), n)
        block = ((1 << hi) - 1) ^ ((1 << (lo - 1)) - 1)
        masks.append(block & ~(1 << (i - 1)))
    return Graph(tuple(masks), tuple(range(1, n + 1)))


def triangular(k: int) -> int:
    return k * (k + 1) // 2 if k > 0 else 0


def hole_recursion_step(j: JacoGraph, h_n: int) -> int:
    """``h(J*_{n+1}) = h(J*_n) + 1 + 2 + ... + (d_in(v_{n+1}) - 1)``.

    The new vertex closes a triangle with every pair of its in-neighbours.
    """
    return h_n + triangular(j.d_minus(j.n + 1) - 1)


def jaconian_index(j: JacoGraph) -> int:
    """``n - d_in(v_{n+1})``: the vertex just before the first in-neighbour
    of ``v_{n+1}``."""
    return j.n - j.d_minus(j.n + 1)


def jaconian_recursion_step(j: JacoGraph, h_n: int) -> int:
    """The older form of the recursion, written in terms of the Jaconian
    index ``i``: add ``sum((n - i) - k for k in 1 .. (n - i) - 1)``."""
    m = j.n - jaconian_index(j)
    return h_n + sum(m - k for k in range(1, m))


class CensusHole(NamedTuple):
    vertices: Triangle  # Jaco vertex numbers, 1-based
    degrees: tuple[int, int, int]
    kind: TripleType

    @property
    def aligned(self) -> bool:
        """Each corner's degree equals its vertex number."""
        return tuple(sorted(self.vertices)) == self.degrees


def _check_census(n: int) -> None:
    if n < 1:
        raise JacoError(f"census needs n >= 1, got {n}")
    if n > CENSUS_CAP:
        raise JacoError(f"census ceiling is n <= {CENSUS_CAP}, got {n}")


def census_of(g: Graph) -> list[CensusHole]:
    out = []
    for t, d in holes_matching(g, PYTHAGOREAN):
        verts = Triangle(*(g.labels[v] for v in t))
        out.append(CensusHole(verts, d, classify(Triple(*d))))
    return out


def pythagorean_census(n: int, j: JacoGraph | None = None) -> list[CensusHole]:
    """Every Pythagorean hole of J*_n(1), with its degree-triple type."""
    _check_census(n)
    j = j if j is not None and j.n >= n else build_jaco(n)
    return census_of(underlying_graph(j, n))


T1 = TripleType("t", 1)


def t1_count_formula(n: int) -> int:
    return n // 8


def type_count_predictor(t: Triple, n: int, j: JacoGraph | None = None) -> int:
    """``floor(n / (c + d_out(v_c)))`` for the root ``(a, b, c)`` of ``t``."""
    c = t.root.c
    j = j if j is not None and j.n >= c else build_jaco(c)
    return n // (c + j.d_plus(c))


def type_counts(holes: list[CensusHole]) -> dict[TripleType, int]:
    counts: dict[TripleType, int] = {}
    for hole in holes:
        counts[hole.kind] = counts.get(hole.kind, 0) + 1
    assert sum(counts.values()) == len(holes)
    return counts


@dataclass(frozen=True)
class JacoRow:
    i: int
    d_minus: int
    d_plus: int
    h: int
    h_p_t1: int
    # counts beyond the four table columns
    h_p: int
    h_p_t1_aligned: int
    h_recursion: int | None  # recursion applied to the previous row, from i = 5

    @property
    def recursion_ok(self) -> bool:
        return self.h_recursion is None or self.h_recursion == self.h


def fisher_table(n_max: int) -> list[JacoRow]:
    """Rows ``1..n_max``: in/out degree of ``v_i`` and hole counts of J*_i(1)."""
    _check_census(n_max)
    j = build_jaco(n_max)
    rows: list[JacoRow] = []
    prev_h = None
    for i in range(1, n_max + 1):
        g = underlying_graph(j, i)
        h = primitive_hole_number(g)
        holes = census_of(g)
        t1 = [x for x in holes if x.kind == T1]
        rec = None
        if i >= 5:
            rec = hole_recursion_step(JacoGraph(i - 1, j.in_degrees[:i]), prev_h)
        rows.append(
            JacoRow(
                i=i,
                d_minus=j.d_minus(i),
                d_plus=j.d_plus(i),
                h=h,
                h_p_t1=len(t1),
                h_p=len(holes),
                h_p_t1_aligned=sum(1 for x in t1 if x.aligned),
                h_recursion=rec,
            )
        )
        prev_h = h
    return rows


def scaled_hole_detail(t: Triangle | tuple[int, int, int], l: int, j: JacoGraph | None = None) -> tuple[bool, bool]:
    """For a triangle ``(v_i, v_j, v_k)`` of some J*_n(1) and a factor ``l``:
    ``(edge v_li v_lk exists, edges v_li v_lj and v_lj v_lk both exist)``."""
    i, m, k = sorted(t)
    top = l * k
    j = j if j is not None and j.n >= top else build_jaco(top)
    if not (m <= j.reach(i) and k <= j.reach(i)):
        raise JacoError(f"{(i, m, k)} is not a triangle of the Jaco graph")
    premise = l * k <= j.reach(l * i)
    conclusion = l * m <= j.reach(l * i) and l * k <= j.reach(l * m)
    return premise, conclusion


def scaled_hole_check(n: int, l: int, t: Triangle | tuple[int, int, int]) -> bool:
    """True when the scaled triple ``l*t`` is again a triangle in J*_{lk}(1)
    because the long edge ``v_li v_lk`` is present."""
    if max(t) > n:
        raise JacoError(f"{tuple(t)} is not inside J*_{n}(1)")
    premise, conclusion = scaled_hole_detail(t, l)
    return premise and conclusion
