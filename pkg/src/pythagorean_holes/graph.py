"""Simple undirected graphs, triangle enumeration and hole counting.

Vertices are stored as 0-based indices.  Every vertex also carries an
integer label (the name it has in an edge-list file or generator) and,
optionally, a display name used in comments.

Adjacency is kept twice: as sorted neighbour tuples (for the compact-forward
triangle listing) and as Python-int bitsets (for counting and for the exact
solvers in :mod:`pythagorean_holes.invariants`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (self-loops, bad edge-list lines)."""


class Triangle(NamedTuple):
    """Three vertex indices in strictly increasing order."""

    u: int
    v: int
    w: int


DegreeTriple = tuple[int, int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph.

    Use :func:`build_graph` or :meth:`Graph.from_masks` rather than calling
    the constructor directly.
    """

    masks: tuple[int, ...]
    labels: tuple[int, ...]
    names: tuple[str, ...] | None = None

    @classmethod
    def from_masks(
        cls,
        masks: Sequence[int],
        labels: Sequence[int] | None = None,
        names: Sequence[str] | None = None,
    ) -> Graph:
        n = len(masks)
        masks = tuple(masks)
        for v, m in enumerate(masks):
            if m >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if m >> n:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            for u in iter_bits(m):
                if not masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        labels = tuple(range(n)) if labels is None else tuple(labels)
        if len(labels) != n:
            raise GraphError("one label per vertex required")
        if names is not None:
            names = tuple(names)
            if len(names) != n:
                raise GraphError("one name per vertex required")
        return cls(masks, labels, names)

    @property
    def vertex_count(self) -> int:
        return len(self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(iter_bits(m)) for m in self.masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.masks)

    @cached_property
    def forward_masks(self) -> tuple[int, ...]:
        """Neighbours with a larger index, as bitsets."""
        return tuple(m >> (v + 1) << (v + 1) for v, m in enumerate(self.masks))

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def degree(self, v: int) -> int:
        return self.degrees[self._check(v)]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[self._check(v)]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[self._check(u)] >> self._check(v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, m in enumerate(self.forward_masks):
            for v in iter_bits(m):
                yield u, v

    def index_of(self, label: int) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"no vertex labelled {label}") from None

    @cached_property
    def _label_index(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def _check(self, v: int) -> int:
        if not 0 <= v < len(self.masks):
            raise IndexError(f"vertex {v} out of range for graph on {len(self.masks)} vertices")
        return v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.masks == other.masks and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.masks, self.labels))

    def __repr__(self) -> str:
        return f"Graph(vertices={self.vertex_count}, edges={self.edge_count})"


def build_graph(edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> Graph:
    """Build a graph from label pairs.

    The vertex set is every endpoint label plus any extra ``vertices``;
    labels are sorted ascending and compacted to indices ``0..n-1``.
    Repeated and reversed pairs collapse onto one edge.
    """
    pairs = []
    for pair in edges:
        a, b = pair
        if a == b:
            raise GraphError(f"self-loop in edge ({a}, {b})")
        pairs.append((a, b))
    labels = sorted({x for p in pairs for x in p} | set(vertices))
    index = {lab: i for i, lab in enumerate(labels)}
    masks = [0] * len(labels)
    for a, b in pairs:
        i, j = index[a], index[b]
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    return Graph(tuple(masks), tuple(labels))


# --- triangles -------------------------------------------------------------


def enumerate_triangles(g: Graph) -> list[Triangle]:
    """List every triangle once, sorted lexicographically.

    Compact-forward: vertices are ranked by ``(degree, index)`` and each
    vertex only looks at neighbours of higher rank, so every triangle is
    found exactly once from its lowest-ranked corner by merging two sorted
    forward lists.
    """
    deg = g.degrees
    order = sorted(range(g.vertex_count), key=lambda v: (deg[v], v))
    rank = [0] * g.vertex_count
    for r, v in enumerate(order):
        rank[v] = r
    forward: list[list[int]] = [[] for _ in order]
    for v in order:
        rv = rank[v]
        forward[v] = sorted((u for u in g.adjacency[v] if rank[u] > rv), key=rank.__getitem__)

    found: list[Triangle] = []
    for v in order:
        fv = forward[v]
        for u in fv:
            fu = forward[u]
            i = j = 0
            while i < len(fv) and j < len(fu):
                a, b = rank[fv[i]], rank[fu[j]]
                if a < b:
                    i += 1
                elif a > b:
                    j += 1
                else:
                    found.append(Triangle(*sorted((v, u, fv[i]))))
                    i += 1
                    j += 1
    found.sort()
    return found


def primitive_hole_number(g: Graph) -> int:
    """Number of triangles in ``g`` (bitset count, no listing)."""
    fwd = g.forward_masks
    total = 0
    for u, m in enumerate(fwd):
        for v in iter_bits(m):
            total += (m & fwd[v]).bit_count()
    return total


def primitive_degrees(g: Graph) -> list[int]:
    """Triangles through each vertex: edges inside each neighbourhood."""
    masks = g.masks
    out = []
    for v, m in enumerate(masks):
        s = 0
        for u in iter_bits(m):
            s += (masks[u] & m).bit_count()
        out.append(s // 2)
    return out


def primitive_degree(g: Graph, v: int) -> int:
    m = g.masks[g._check(v)]
    return sum((g.masks[u] & m).bit_count() for u in iter_bits(m)) // 2


# --- degree-triple predicates ------------------------------------------------


class DegreePredicate:
    """A test on the sorted degree triple ``d1 <= d2 <= d3`` of a triangle.

    Subclasses may override :meth:`completions` to list, for two corner
    degrees, every third degree that could satisfy the predicate.  When
    that list is finite, :func:`holes_matching` skips the full triangle
    listing and only looks up vertices of the candidate degrees.
    """

    def __init__(self, test: Callable[[int, int, int], bool] | None = None, name: str = "custom"):
        self._test = test
        self.name = name

    def __call__(self, d1: int, d2: int, d3: int) -> bool:
        if self._test is None:
            raise NotImplementedError
        return self._test(d1, d2, d3)

    def completions(self, x: int, y: int) -> Iterable[int] | None:
        return None

    def __repr__(self) -> str:
        return f"<DegreePredicate {self.name}>"


class PythagoreanPredicate(DegreePredicate):
    """``d1**2 + d2**2 == d3**2`` in exact integer arithmetic.

    The sort is non-strict; ``d1 == d2`` can never satisfy the equation
    because ``2 * d**2`` is not a perfect square for ``d > 0``.
    """

    def __init__(self) -> None:
        super().__init__(name="pythagorean")

    def __call__(self, d1: int, d2: int, d3: int) -> bool:
        assert d1 > 0, "triangle corners have degree >= 2"
        return d1 * d1 + d2 * d2 == d3 * d3

    def completions(self, x: int, y: int) -> list[int]:
        out = []
        s = x * x + y * y
        r = math.isqrt(s)
        if r * r == s:
            out.append(r)
        d = abs(x * x - y * y)
        r = math.isqrt(d)
        if r > 0 and r * r == d:
            out.append(r)
        return out


PYTHAGOREAN = PythagoreanPredicate()


def sorted_degrees(g: Graph, t: Sequence[int]) -> DegreeTriple:
    a, b, c = sorted(g.degrees[v] for v in t)
    return a, b, c


def holes_matching(g: Graph, predicate: DegreePredicate | Callable[[int, int, int], bool]) -> list[tuple[Triangle, DegreeTriple]]:
    """Triangles whose sorted corner-degree triple satisfies ``predicate``.

    Results are in lexicographic triangle order with the sorted degree
    triple attached.
    """
    deg = g.degrees
    completions = getattr(predicate, "completions", None)
    hits: list[tuple[Triangle, DegreeTriple]] = []
    if completions is None or completions(2, 2) is None:
        for t in enumerate_triangles(g):
            d = sorted_degrees(g, t)
            if predicate(*d):
                hits.append((t, d))
        return hits

    by_degree: dict[int, int] = {}
    for v, d in enumerate(deg):
        by_degree[d] = by_degree.get(d, 0) | 1 << v
    cache: dict[tuple[int, int], int] = {}
    fwd = g.forward_masks
    for u, mu in enumerate(fwd):
        du = deg[u]
        for v in iter_bits(mu):
            common = mu & fwd[v]
            if not common:
                continue
            key = (du, deg[v]) if du <= deg[v] else (deg[v], du)
            want = cache.get(key)
            if want is None:
                want = 0
                for z in set(completions(*key)):
                    want |= by_degree.get(z, 0)
                cache[key] = want
            for w in iter_bits(common & want):
                d = sorted_degrees(g, (u, v, w))
                if predicate(*d):
                    hits.append((Triangle(u, v, w), d))
    hits.sort()
    return hits


@dataclass(frozen=True)
class HoleReport:
    h: int
    pyth_holes: list[tuple[Triangle, DegreeTriple]]
    primitive_degree: list[int]

    @property
    def h_p(self) -> int:
        return len(self.pyth_holes)


def hole_report(g: Graph) -> HoleReport:
    return HoleReport(
        h=primitive_hole_number(g),
        pyth_holes=holes_matching(g, PYTHAGOREAN),
        primitive_degree=primitive_degrees(g),
    )


# --- edge-list I/O -----------------------------------------------------------


def parse_edge_list(text: str, source: str = "<string>") -> Graph:
    """Parse the edge-list format.

    One edge per line as two whitespace-separated non-negative integers.
    ``#`` starts a comment line; blank lines are ignored.  A line holding a
    single label declares an isolated vertex, which keeps write/read
    round-trips exact for graphs with isolated vertices.
    """
    edges = []
    lone = []
    errors = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            errors.append(f"{source}:{lineno}: expected integer labels, got {line!r}")
            continue
        if len(nums) not in (1, 2) or any(x < 0 for x in nums):
            errors.append(f"{source}:{lineno}: expected two non-negative integer labels, got {line!r}")
            continue
        if len(nums) == 1:
            lone.append(nums[0])
        elif nums[0] == nums[1]:
            errors.append(f"{source}:{lineno}: self-loop ({nums[0]}, {nums[1]})")
        else:
            edges.append((nums[0], nums[1]))
    if errors:
        raise GraphError("\n".join(errors))
    return build_graph(edges, lone)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read(), str(path))


def format_edge_list(g: Graph, header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    if g.names is not None:
        for v, name in enumerate(g.names):
            lines.append(f"# {g.labels[v]} = {name}")
    deg = g.degrees
    for v in range(g.vertex_count):
        if deg[v] == 0:
            lines.append(str(g.labels[v]))
    for u, v in g.edges():
        lines.append(f"{g.labels[u]} {g.labels[v]}")
    return "\n".join(lines) + "\n" if lines else ""


def write_edge_list(g: Graph, path, header: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g, header))
