"""Clique minors, Hadwiger number and the general minor relation.

Both searches rest on the same reduction: if a component of the host holds at
least one branch set, every other vertex of that component can be absorbed
into an adjacent branch set without breaking connectivity or any existing
adjacency. So it suffices to search partitions of whole components into
exactly the required number of connected parts. Vertices are assigned in BFS
order; a partial assignment is pruned as soon as some part can no longer
become connected through the still-unassigned vertices.
"""

from __future__ import annotations

from ..errors import ContractViolation
from ..graph import Decomposition, Graph, bfs_order, bits, neighborhood, quotient, reach
from ._budget import NodeBudget, as_budget
from .coloring import greedy_clique
from .homomorphism import has_homomorphism
from .witnesses import CliqueMinorWitness, MinorWitness


def _parts_viable(masks, parts: list[int], free: int) -> bool:
    for p in parts:
        if reach(masks, p & -p, p | free) & p != p:
            return False
    return True


def _clique_partition(g: Graph, comp: int, t: int, budget: NodeBudget) -> list[int] | None:
    masks = g.masks
    order = bfs_order(g, (comp & -comp).bit_length() - 1, comp)
    parts: list[int] = []
    nbrs: list[int] = []

    def viable(free: int) -> bool:
        if t - len(parts) > free.bit_count():
            return False
        if not _parts_viable(masks, parts, free):
            return False
        free_nbrs = neighborhood(masks, free)
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                if nbrs[i] & parts[j]:
                    continue
                # some edge must still be able to join the two grown parts
                if not (nbrs[i] | free_nbrs) & (parts[j] | free):
                    return False
        return True

    def rec(i: int, free: int) -> bool:
        if i == len(order):
            return len(parts) == t
        budget.tick()
        v = order[i]
        bit = 1 << v
        free &= ~bit
        for j in range(len(parts)):
            parts[j] |= bit
            old = nbrs[j]
            nbrs[j] |= masks[v]
            if viable(free) and rec(i + 1, free):
                return True
            parts[j] &= ~bit
            nbrs[j] = old
        if len(parts) < t:
            parts.append(bit)
            nbrs.append(masks[v])
            if viable(free) and rec(i + 1, free):
                return True
            parts.pop()
            nbrs.pop()
        return False

    if rec(0, comp):
        return list(parts)
    return None


def _decomposition(g: Graph, parts: list[int]) -> Decomposition:
    return Decomposition(g, tuple(frozenset(bits(p)) for p in parts))


def has_clique_minor(g: Graph, t: int, budget: int | NodeBudget | None = None) -> CliqueMinorWitness | None:
    """Branch sets witnessing K_t as a minor of ``g``, or ``None``."""
    if t < 0:
        raise ContractViolation("t must be nonnegative")
    if t == 0:
        return CliqueMinorWitness(_decomposition(g, []))
    if t > g.n:
        return None
    if t == 1:
        return CliqueMinorWitness(_decomposition(g, [1]))
    budget = as_budget(budget)
    needed = t * (t - 1) // 2
    for comp in g.components():
        size = comp.bit_count()
        edges = sum((g.masks[v] & comp).bit_count() for v in bits(comp)) // 2
        # t connected parts covering the component use size - t edges internally
        if size < t or edges - (size - t) < needed:
            continue
        parts = _clique_partition(g, comp, t, budget)
        if parts is not None:
            parts.sort(key=lambda p: p & -p)
            return CliqueMinorWitness(_decomposition(g, parts))
    return None


def hadwiger_number(g: Graph, budget: int | NodeBudget | None = None) -> tuple[int, CliqueMinorWitness]:
    """Largest ``t`` with K_t a minor of ``g``, searching upward from a clique."""
    if g.n == 0:
        return 0, CliqueMinorWitness(_decomposition(g, []))
    budget = as_budget(budget)
    clique = greedy_clique(g)
    best = CliqueMinorWitness(_decomposition(g, [1 << v for v in clique]))
    t = len(clique) + 1
    while True:
        w = has_clique_minor(g, t, budget)
        if w is None:
            return t - 1, best
        best = w
        t += 1


def is_minor(m: Graph, g: Graph, budget: int | NodeBudget | None = None) -> MinorWitness | None:
    """A witness that ``m`` is a minor of ``g``, or ``None``.

    Raises :class:`~hadwiger.errors.SearchBudgetExceeded` when the node budget
    runs out, which is distinct from a proven ``None``.
    """
    k = m.n
    if k == 0:
        return MinorWitness(_decomposition(g, []), ())
    if k > g.n or m.num_edges > g.num_edges:
        return None
    budget = as_budget(budget)

    # subgraphs are minors with singleton branch sets
    sub = has_homomorphism(m, g, budget, injective=True)
    if sub is not None:
        return MinorWitness(_decomposition(g, [1 << v for v in sub.mapping]), tuple(range(k)))

    masks = g.masks
    order: list[int] = []
    comp_end: dict[int, int] = {}
    for comp in g.components():
        start = len(order)
        order += bfs_order(g, (comp & -comp).bit_length() - 1, comp)
        comp_end[start] = len(order)
    m_degrees = sorted((m.degree(v) for v in range(k)), reverse=True)
    parts: list[int] = []
    found: list = []

    def leaf() -> bool:
        q = quotient(_decomposition(g, parts))
        if q.num_edges < m.num_edges:
            return False
        q_degrees = sorted((q.degree(v) for v in range(k)), reverse=True)
        if any(a > b for a, b in zip(m_degrees, q_degrees)):
            return False
        emb = has_homomorphism(m, q, budget, injective=True)
        if emb is None:
            return False
        found.append(emb.mapping)
        return True

    def rec(i: int, free: int) -> bool:
        if i == len(order):
            return len(parts) == k and leaf()
        budget.tick()
        v = order[i]
        bit = 1 << v
        rest = free & ~bit
        for j in range(len(parts)):
            parts[j] |= bit
            if _parts_viable(masks, parts, rest) and rec(i + 1, rest):
                return True
            parts[j] &= ~bit
        if len(parts) < k and k - len(parts) - 1 <= rest.bit_count():
            parts.append(bit)
            if _parts_viable(masks, parts, rest) and rec(i + 1, rest):
                return True
            parts.pop()
        if i in comp_end:
            # leave this whole component out of every branch set
            end = comp_end[i]
            skipped = free
            for u in order[i:end]:
                skipped &= ~(1 << u)
            if k - len(parts) <= skipped.bit_count() and _parts_viable(masks, parts, skipped):
                if rec(end, skipped):
                    return True
        return False

    if not rec(0, g.all_mask):
        return None
    return MinorWitness(_decomposition(g, parts), tuple(found[0]))
