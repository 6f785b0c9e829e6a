"""Exact vertex colouring: k-colourability and chromatic number."""

from __future__ import annotations

from ..graph import Graph, bits
from ._budget import NodeBudget, as_budget
from .witnesses import Coloring


def greedy_clique(g: Graph) -> list[int]:
    """A maximal clique grown greedily from every start vertex; the largest wins."""
    best: list[int] = []
    for start in range(g.n):
        clique = [start]
        cand = g.masks[start]
        while cand:
            v = max(bits(cand), key=lambda u: ((g.masks[u] & cand).bit_count(), -u))
            clique.append(v)
            cand &= g.masks[v]
        if len(clique) > len(best):
            best = sorted(clique)
    return best


def dsatur_greedy(g: Graph) -> list[int]:
    colors = [-1] * g.n
    forbidden = [0] * g.n
    uncolored = g.all_mask
    while uncolored:
        v = max(bits(uncolored), key=lambda u: (forbidden[u].bit_count(), g.degree(u), -u))
        free = ~forbidden[v]
        c = (free & -free).bit_length() - 1
        colors[v] = c
        uncolored &= ~(1 << v)
        for u in bits(g.masks[v]):
            forbidden[u] |= 1 << c
    return colors


def _search(g: Graph, k: int, clique: list[int], budget: NodeBudget) -> list[int] | None:
    n = g.n
    masks = g.masks
    full = (1 << k) - 1
    colors = [-1] * n
    forbidden = [0] * n
    uncolored = g.all_mask
    for c, v in enumerate(clique):
        colors[v] = c
        uncolored &= ~(1 << v)
        for u in bits(masks[v]):
            forbidden[u] |= 1 << c

    def rec(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        budget.tick()
        v = max(bits(uncolored), key=lambda u: (forbidden[u].bit_count(), masks[u].bit_count(), -u))
        # a fresh colour is interchangeable with any other unused one
        avail = ~forbidden[v] & full & ((1 << min(k, used + 1)) - 1)
        rest = uncolored & ~(1 << v)
        for c in bits(avail):
            colors[v] = c
            bit = 1 << c
            changed = []
            dead = False
            for u in bits(masks[v] & rest):
                if not forbidden[u] & bit:
                    forbidden[u] |= bit
                    changed.append(u)
                    if forbidden[u] & full == full:
                        dead = True
            if not dead and rec(rest, max(used, c + 1)):
                return True
            for u in changed:
                forbidden[u] &= ~bit
        colors[v] = -1
        return False

    if rec(uncolored, len(clique)):
        return colors
    return None


def is_k_colorable(g: Graph, k: int, budget: int | NodeBudget | None = None) -> Coloring | None:
    """A proper colouring with at most ``k`` colours, or ``None`` if none exists."""
    if g.n == 0:
        return Coloring(())
    if k <= 0:
        return None
    clique = greedy_clique(g)
    if len(clique) > k:
        return None
    colors = _search(g, k, clique, as_budget(budget))
    return Coloring(tuple(colors)) if colors is not None else None


def chromatic_number(g: Graph, budget: int | NodeBudget | None = None) -> tuple[int, Coloring]:
    """Smallest ``k`` admitting a proper colouring, with a witness.

    Bounds come from a greedy clique (below) and DSATUR (above); each ``k`` in
    between is settled by exact search with the clique pre-coloured.
    """
    if g.n == 0:
        return 0, Coloring(())
    budget = as_budget(budget)
    clique = greedy_clique(g)
    upper = dsatur_greedy(g)
    ub = max(upper) + 1
    for k in range(len(clique), ub):
        colors = _search(g, k, clique, budget)
        if colors is not None:
            return k, Coloring(tuple(colors))
    return ub, Coloring(tuple(upper))
