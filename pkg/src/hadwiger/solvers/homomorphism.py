"""Graph homomorphism existence by backtracking with forward checking."""

from __future__ import annotations

from ..graph import Graph, bits
from ._budget import NodeBudget, as_budget
from .witnesses import HomomorphismWitness


def has_homomorphism(g: Graph, h: Graph, budget: int | NodeBudget | None = None,
                     injective: bool = False) -> HomomorphismWitness | None:
    """Find an edge-preserving map from ``g`` to ``h`` (injective if requested).

    Source vertices are tried in descending degree order; assigning ``v -> a``
    shrinks each unassigned neighbour's candidate set to the neighbours of ``a``.
    """
    if g.n == 0:
        return HomomorphismWitness(())
    if h.n == 0 or (injective and g.n > h.n):
        return None
    if g.num_edges and not h.num_edges:
        return None
    budget = as_budget(budget)
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    position = {v: i for i, v in enumerate(order)}
    domains = [h.all_mask] * g.n
    if injective:
        for v in range(g.n):
            domains[v] = sum(1 << a for a in range(h.n) if h.degree(a) >= g.degree(v))
    mapping = [-1] * g.n

    def rec(i: int, used: int) -> bool:
        if i == g.n:
            return True
        budget.tick()
        v = order[i]
        later = [u for u in bits(g.masks[v]) if position[u] > i]
        cand = domains[v] & ~used if injective else domains[v]
        for a in bits(cand):
            saved = [(u, domains[u]) for u in later]
            ok = True
            for u in later:
                domains[u] &= h.masks[a]
                if not domains[u]:
                    ok = False
                    break
            if ok:
                mapping[v] = a
                if rec(i + 1, used | (1 << a)):
                    return True
            for u, d in saved:
                domains[u] = d
        mapping[v] = -1
        return False

    if rec(0, 0):
        return HomomorphismWitness(tuple(mapping))
    return None
