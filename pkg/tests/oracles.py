"""Brute-force reference computations; deliberately naive and independent
of the bitset code under test."""

from itertools import combinations, product


def adjacency_sets(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def all_triples_triangles(n, edges):
    adj = adjacency_sets(n, edges)
    return [t for t in combinations(range(n), 3) if t[1] in adj[t[0]] and t[2] in adj[t[0]] and t[2] in adj[t[1]]]


def chromatic_bruteforce(n, edges):
    if n == 0:
        return 0
    for k in range(1, n + 1):
        for colors in product(range(k), repeat=n):
            if all(colors[u] != colors[v] for u, v in edges):
                return k


def independence_bruteforce(n, edges):
    adj = adjacency_sets(n, edges)
    for k in range(n, -1, -1):
        for s in combinations(range(n), k):
            if all(v not in adj[u] for u, v in combinations(s, 2)):
                return k


def cover_bruteforce(n, edges):
    for k in range(n + 1):
        for s in combinations(range(n), k):
            ss = set(s)
            if all(u in ss or v in ss for u, v in edges):
                return k


def domination_bruteforce(n, edges):
    adj = adjacency_sets(n, edges)
    for k in range(1, n + 1):
        for s in combinations(range(n), k):
            covered = set(s)
            for v in s:
                covered |= adj[v]
            if len(covered) == n:
                return k


def pythagorean_bruteforce(c_max, primitive_only=True):
    from math import gcd

    out = []
    for c in range(1, c_max + 1):
        for a in range(1, c):
            for b in range(a + 1, c):
                if a * a + b * b == c * c and (not primitive_only or gcd(gcd(a, b), c) == 1):
                    out.append((a, b, c))
    return sorted(out, key=lambda t: (t[2], t[0]))


def setgraph_degrees_bruteforce(n):
    subsets = range(1, 2 ** n)
    return [sum(1 for t in subsets if t != s and s & t) for s in subsets]
