"""Pythagorean triples: generation, roots and type labels."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

# Primitive triples carrying a t-label, keyed by root.
T_TYPES: dict[tuple[int, int, int], int] = {
    (3, 4, 5): 1,
    (20, 21, 29): 2,
    (28, 45, 53): 3,
    (48, 55, 73): 4,
    (65, 72, 97): 5,
}

# Largest hypotenuse accepted; keeps every square below 2**63.
MAX_C = 3_000_000_000


class TripleError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Triple:
    """A Pythagorean triple ``a < b < c`` with its primitive root."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if not 0 < self.a < self.b < self.c:
            raise TripleError(f"need 0 < a < b < c, got ({self.a}, {self.b}, {self.c})")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise TripleError(
                f"not Pythagorean: {self.a}^2 + {self.b}^2 = {self.a ** 2 + self.b ** 2} != {self.c ** 2} = {self.c}^2"
            )

    @classmethod
    def of(cls, *sides: int) -> Triple:
        a, b, c = sorted(sides)
        return cls(a, b, c)

    @property
    def scale(self) -> int:
        return math.gcd(self.a, self.b, self.c)

    @property
    def root(self) -> Triple:
        k = self.scale
        return Triple(self.a // k, self.b // k, self.c // k)

    @property
    def primitive(self) -> bool:
        return self.scale == 1

    def as_tuple(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class TripleType:
    kind: str  # "t" or "e"
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def is_pythagorean(a: int, b: int, c: int) -> bool:
    if min(a, b, c) <= 0:
        raise TripleError(f"sides must be positive, got ({a}, {b}, {c})")
    a, b, c = sorted((a, b, c))
    return a * a + b * b == c * c


def primitive_triples_up_to(c_max: int) -> list[Triple]:
    """All primitive triples with ``c <= c_max``, ordered by ``(c, a)``.

    Euclid's parametrisation ``(m^2 - k^2, 2mk, m^2 + k^2)`` over coprime
    ``m > k`` of opposite parity hits every primitive exactly once.
    """
    if c_max > MAX_C:
        raise TripleError(f"c_max {c_max} exceeds {MAX_C}")
    out = []
    m = 2
    while m * m + 1 <= c_max:
        for k in range(1 + m % 2, m, 2):
            c = m * m + k * k
            if c > c_max:
                break
            if math.gcd(m, k) == 1:
                out.append(Triple.of(m * m - k * k, 2 * m * k, c))
        m += 1
    out.sort(key=lambda t: (t.c, t.a))
    return out


def triples_up_to(c_max: int) -> list[Triple]:
    """Every triple (primitive or not) with ``c <= c_max``, by ``(c, a)``."""
    out = [
        Triple(k * p.a, k * p.b, k * p.c)
        for p in primitive_triples_up_to(c_max)
        for k in range(1, c_max // p.c + 1)
    ]
    out.sort(key=lambda t: (t.c, t.a))
    return out


@lru_cache(maxsize=None)
def _e_rank(root: Triple) -> int:
    rank = 0
    for p in primitive_triples_up_to(root.c):
        if p.as_tuple() in T_TYPES:
            continue
        rank += 1
        if p == root:
            return rank
    raise AssertionError(f"{root} missing from Euclid enumeration")


def classify(t: Triple) -> TripleType:
    """Type of a triple: ``t1..t5`` for the labelled roots and their
    multiples, otherwise ``e(m)`` where ``m`` ranks the root among the
    unlabelled primitives by ascending ``(c, a)``."""
    root = t.root
    label = T_TYPES.get(root.as_tuple())
    if label is not None:
        return TripleType("t", label)
    return TripleType("e", _e_rank(root))
