import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pythagorean_holes.graph import Graph, build_graph  # noqa: E402


def complete(n):
    return build_graph([(u, v) for u in range(n) for v in range(u + 1, n)], range(n))


def cycle(n):
    return build_graph([(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    return build_graph([(0, i) for i in range(1, leaves + 1)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(outer + spokes + inner)


def random_edges(n, p, seed):
    rng = random.Random(seed)
    return [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]


def random_graph(n, p, seed) -> Graph:
    return build_graph(random_edges(n, p, seed), range(n))


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def c5():
    return cycle(5)
