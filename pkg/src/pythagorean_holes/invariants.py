"""Exact solvers for the NP-hard invariants quoted on small graphs.

All searches work on Python-int bitsets taken from :class:`Graph.masks`.
Instances above the vertex caps raise :class:`InstanceTooLarge` instead of
falling back to a heuristic.
"""

from __future__ import annotations

from .graph import Graph, iter_bits

CLIQUE_CAP = 128
COLORING_CAP = 128
DOMINATION_CAP = 128
COVER_CAP = 128


class InstanceTooLarge(ValueError):
    pass


def _require(g: Graph, cap: int, what: str) -> None:
    if g.vertex_count > cap:
        raise InstanceTooLarge(f"{what}: instance too large ({g.vertex_count} vertices, cap {cap})")


def _color_classes(P: int, masks: tuple[int, ...]) -> list[tuple[int, int]]:
    """Greedy sequential colouring of the candidate set ``P``.

    Returns ``(vertex, colour)`` pairs with colours 1, 2, ... in
    non-decreasing order; the colour of a vertex bounds the largest clique
    among it and everything listed before it.
    """
    out = []
    color = 0
    uncolored = P
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            uncolored ^= low
            q &= ~low & ~masks[v]
            out.append((v, color))
    return out


def _max_clique(masks, P, size, best, current, best_set):
    for v, c in reversed(_color_classes(P, masks)):
        if size + c <= best[0]:
            return
        current.append(v)
        sub = P & masks[v]
        if sub:
            _max_clique(masks, sub, size + 1, best, current, best_set)
        elif size + 1 > best[0]:
            best[0] = size + 1
            best_set[:] = current
        current.pop()
        P &= ~(1 << v)


def _clique_search(masks: tuple[int, ...]) -> list[int]:
    n = len(masks)
    if n == 0:
        return []
    best = [0]
    best_set: list[int] = []
    _max_clique(masks, (1 << n) - 1, 0, best, [], best_set)
    return sorted(best_set)


def maximum_clique(g: Graph) -> list[int]:
    """One maximum clique, as sorted vertex indices."""
    _require(g, CLIQUE_CAP, "maximum clique")
    return _clique_search(g.masks)


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))


def _count_cliques(masks, P, size, k):
    if size == k:
        return 1
    total = 0
    for v, c in reversed(_color_classes(P, masks)):
        if size + c < k:
            break
        total += _count_cliques(masks, P & masks[v], size + 1, k)
        P &= ~(1 << v)
    return total


def maximum_cliques(g: Graph) -> tuple[int, int]:
    """``(omega, number of distinct cliques of order omega)``.

    Bron-Kerbosch style branching over candidate sets, pruned by the
    colouring bound against the known clique number; every clique of
    maximum order is maximal, so nothing else needs filtering.
    """
    _require(g, CLIQUE_CAP, "maximum cliques")
    if g.vertex_count == 0:
        return 0, 1
    omega = len(_clique_search(g.masks))
    return omega, _count_cliques(g.masks, (1 << g.vertex_count) - 1, 0, omega)


def complement_masks(g: Graph) -> tuple[int, ...]:
    full = (1 << g.vertex_count) - 1
    return tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.masks))


def maximum_independent_set(g: Graph) -> list[int]:
    _require(g, CLIQUE_CAP, "independence number")
    return _clique_search(complement_masks(g))


def independence_number(g: Graph) -> int:
    return len(maximum_independent_set(g))


# --- colouring ---------------------------------------------------------------


def greedy_coloring(g: Graph) -> list[int]:
    """DSATUR greedy colouring; colours are 0-based."""
    n = g.vertex_count
    masks = g.masks
    deg = g.degrees
    colors = [-1] * n
    classes: list[int] = []
    uncolored = (1 << n) - 1
    while uncolored:
        v = max(
            iter_bits(uncolored),
            key=lambda u: (sum(1 for cm in classes if cm & masks[u]), deg[u], -u),
        )
        for c, cm in enumerate(classes):
            if not cm & masks[v]:
                break
        else:
            c = len(classes)
            classes.append(0)
        classes[c] |= 1 << v
        colors[v] = c
        uncolored &= ~(1 << v)
    return colors


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by DSATUR branch and bound.

    The search starts from a maximum clique coloured 0..omega-1 and stops
    as soon as a colouring meets that lower bound.
    """
    _require(g, COLORING_CAP, "chromatic number")
    n = g.vertex_count
    if n == 0:
        return 0
    masks = g.masks
    deg = g.degrees
    clique = _clique_search(masks)
    lower = len(clique)
    upper = max(greedy_coloring(g)) + 1
    if lower == upper:
        return upper

    best = [upper]
    classes = [1 << v for v in clique]
    uncolored = ((1 << n) - 1) & ~sum(classes)

    def search(uncolored: int, classes: list[int]) -> None:
        if len(classes) >= best[0]:
            return
        if not uncolored:
            best[0] = len(classes)
            return
        v = max(
            iter_bits(uncolored),
            key=lambda u: (sum(1 for cm in classes if cm & masks[u]), deg[u], -u),
        )
        rest = uncolored & ~(1 << v)
        for c, cm in enumerate(classes):
            if not cm & masks[v]:
                classes[c] = cm | 1 << v
                search(rest, classes)
                classes[c] = cm
                if best[0] == lower:
                    return
        if len(classes) + 1 < best[0]:
            classes.append(1 << v)
            search(rest, classes)
            classes.pop()

    search(uncolored, classes)
    return best[0]


# --- vertex cover --------------------------------------------------------------


def vertex_cover_number(g: Graph) -> int:
    """Minimum vertex cover by branching on a maximum-degree vertex.

    Either the vertex joins the cover, or all of its neighbours do.  This
    is deliberately independent of :func:`independence_number` so the two
    can be checked against each other.
    """
    _require(g, COVER_CAP, "vertex cover number")
    masks = g.masks
    n = g.vertex_count
    best = [n]

    def search(alive: int, taken: int) -> None:
        if taken >= best[0]:
            return
        # pendant vertices: taking the neighbour is never worse
        changed = True
        while changed:
            changed = False
            for v in iter_bits(alive):
                nb = masks[v] & alive
                if nb and not nb & (nb - 1):
                    u = nb.bit_length() - 1
                    alive &= ~(1 << u)
                    taken += 1
                    changed = True
                    break
        if taken >= best[0]:
            return
        top, top_deg, edges2 = -1, 0, 0
        for v in iter_bits(alive):
            d = (masks[v] & alive).bit_count()
            edges2 += d
            if d > top_deg:
                top, top_deg = v, d
        if top_deg == 0:
            best[0] = taken
            return
        # each cover vertex covers at most top_deg of the remaining edges
        if taken + -(-(edges2 // 2) // top_deg) >= best[0]:
            return
        nb = masks[top] & alive
        search(alive & ~(1 << top), taken + 1)
        search(alive & ~(1 << top) & ~nb, taken + nb.bit_count())

    search((1 << n) - 1, 0)
    return best[0]


# --- domination ---------------------------------------------------------------


def minimum_dominating_set(g: Graph) -> list[int]:
    _require(g, DOMINATION_CAP, "domination number")
    n = g.vertex_count
    if n == 0:
        raise ValueError("domination number of the empty graph is undefined")
    full = (1 << n) - 1
    closed = [m | 1 << v for v, m in enumerate(g.masks)]

    # greedy start
    dominated, greedy = 0, []
    while dominated != full:
        v = max(range(n), key=lambda u: ((closed[u] & ~dominated).bit_count(), -u))
        greedy.append(v)
        dominated |= closed[v]
    best = [list(greedy)]

    def search(dominated: int, chosen: list[int]) -> None:
        if dominated == full:
            if len(chosen) < len(best[0]):
                best[0] = list(chosen)
            return
        if len(chosen) + 1 >= len(best[0]):
            return
        open_ = full & ~dominated
        cover = max((closed[v] & open_).bit_count() for v in range(n))
        if len(chosen) + -(-open_.bit_count() // cover) >= len(best[0]):
            return
        # the undominated vertex with the fewest ways to be dominated
        u = min(iter_bits(open_), key=lambda x: (closed[x].bit_count(), x))
        options = sorted(iter_bits(closed[u]), key=lambda w: (-(closed[w] & open_).bit_count(), w))
        for w in options:
            chosen.append(w)
            search(dominated | closed[w], chosen)
            chosen.pop()

    search(0, [])
    return sorted(best[0])


def domination_number(g: Graph) -> int:
    return len(minimum_dominating_set(g))
