"""Exhaustive brute-force oracles for cross-checking the solvers.

Deliberately naive: plain edge lists, no pruning, nothing shared with the
search code in this package. Only usable on tiny graphs.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from ..errors import CapacityError
from ..graph import Graph

ORACLE_CAP = 7


def _edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.masks[u] >> v & 1]


def _check_cap(g: Graph, cap: int = ORACLE_CAP) -> None:
    if g.n > cap:
        raise CapacityError(f"oracles are capped at {cap} vertices, got {g.n}")


def chi_oracle(g: Graph, cap: int = ORACLE_CAP) -> int:
    """Smallest k such that one of the k**n assignments is proper."""
    _check_cap(g, cap)
    edges = _edges(g)
    k = 0
    while True:
        for colors in product(range(k), repeat=g.n):
            if all(colors[u] != colors[v] for u, v in edges):
                return k
        k += 1


def _connected(vertices: list[int], edge_set: set[tuple[int, int]]) -> bool:
    seen = {vertices[0]}
    stack = [vertices[0]]
    while stack:
        x = stack.pop()
        for y in vertices:
            if y not in seen and ((x, y) in edge_set or (y, x) in edge_set):
                seen.add(y)
                stack.append(y)
    return len(seen) == len(vertices)


def _labelings(n: int, t: int):
    """Each vertex gets -1 (unused) or a part index; parts first appear in
    order 0, 1, ..., so every family of t disjoint subsets appears once."""

    def rec(i, labels, opened):
        if i == n:
            if opened == t:
                yield list(labels)
            return
        labels.append(-1)
        yield from rec(i + 1, labels, opened)
        labels.pop()
        for p in range(min(opened + 1, t)):
            labels.append(p)
            yield from rec(i + 1, labels, max(opened, p + 1))
            labels.pop()

    yield from rec(0, [], 0)


def clique_minor_oracle(g: Graph, t: int, cap: int = ORACLE_CAP) -> bool:
    """True iff some t disjoint connected vertex sets are pairwise joined by an edge."""
    _check_cap(g, cap)
    if t == 0:
        return True
    edge_set = set(_edges(g))
    for labels in _labelings(g.n, t):
        parts = [[v for v in range(g.n) if labels[v] == p] for p in range(t)]
        if not all(_connected(p, edge_set) for p in parts):
            continue
        if all(
            any((a, b) in edge_set or (b, a) in edge_set for a in parts[i] for b in parts[j])
            for i, j in combinations(range(t), 2)
        ):
            return True
    return False


def hadwiger_oracle(g: Graph) -> int:
    t = 0
    while t < g.n and clique_minor_oracle(g, t + 1):
        t += 1
    return t


def clique_number_oracle(g: Graph, cap: int = ORACLE_CAP) -> int:
    _check_cap(g, cap)
    edge_set = set(_edges(g))
    for size in range(g.n, 0, -1):
        for vs in combinations(range(g.n), size):
            if all((a, b) in edge_set for a, b in combinations(vs, 2)):
                return size
    return 0


def isomorphic_oracle(g: Graph, h: Graph) -> bool:
    """Try every bijection."""
    _check_cap(g)
    if g.n != h.n:
        return False
    eg = set(_edges(g))
    eh = set(_edges(h))
    if len(eg) != len(eh):
        return False
    for perm in permutations(range(g.n)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in eh for u, v in eg):
            return True
    return False


def homomorphism_oracle(g: Graph, h: Graph) -> bool:
    _check_cap(g)
    eg = _edges(g)
    for f in product(range(h.n), repeat=g.n):
        if all(h.masks[f[u]] >> f[v] & 1 for u, v in eg):
            return True
    return False
