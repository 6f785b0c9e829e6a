"""Independent certificate checking.

These checks re-derive validity from vertex and edge membership only. They do
not call any search routine, so a bug in a solver cannot vouch for itself.
Each function returns a list of problems; an empty list means valid.
"""

from __future__ import annotations

from collections.abc import Sequence

from .graph import Graph


def _edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset((u, v)) for u in range(g.n) for v in range(g.n) if u < v and g.masks[u] >> v & 1}


def check_coloring(g: Graph, colors: Sequence[int], k: int | None = None) -> list[str]:
    problems = []
    if len(colors) != g.n:
        return [f"coloring has {len(colors)} entries for {g.n} vertices"]
    if any(c < 0 for c in colors):
        problems.append("negative colour")
    if k is not None and any(c >= k for c in colors):
        problems.append(f"colour outside [0, {k})")
    for e in _edge_set(g):
        u, v = sorted(e)
        if colors[u] == colors[v]:
            problems.append(f"edge {{{u}, {v}}} is monochromatic")
    return problems


def check_homomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> list[str]:
    if len(mapping) != g.n:
        return [f"map has {len(mapping)} entries for {g.n} source vertices"]
    problems = [f"vertex {v} maps outside target" for v, a in enumerate(mapping) if not 0 <= a < h.n]
    if problems:
        return problems
    target = _edge_set(h)
    for e in _edge_set(g):
        u, v = sorted(e)
        if frozenset((mapping[u], mapping[v])) not in target:
            problems.append(f"edge {{{u}, {v}}} maps to non-edge ({mapping[u]}, {mapping[v]})")
    return problems


def check_branch_sets(g: Graph, parts: Sequence[Sequence[int]]) -> list[str]:
    """Nonempty, pairwise disjoint, each inducing a connected subgraph."""
    problems = []
    edges = _edge_set(g)
    seen: set[int] = set()
    for i, part in enumerate(parts):
        part = set(part)
        if not part:
            problems.append(f"part {i} is empty")
            continue
        if any(not 0 <= v < g.n for v in part):
            problems.append(f"part {i} has vertices outside the host")
            continue
        if part & seen:
            problems.append(f"part {i} overlaps an earlier part")
        seen |= part
        start = min(part)
        reached = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in part - reached:
                if frozenset((x, y)) in edges:
                    reached.add(y)
                    stack.append(y)
        if reached != part:
            problems.append(f"part {i} is not connected")
    return problems


def _touch(edges: set[frozenset[int]], a: Sequence[int], b: Sequence[int]) -> bool:
    return any(frozenset((x, y)) in edges for x in a for y in b)


def check_clique_minor(g: Graph, parts: Sequence[Sequence[int]], t: int | None = None) -> list[str]:
    problems = check_branch_sets(g, parts)
    if t is not None and len(parts) != t:
        problems.append(f"expected {t} parts, got {len(parts)}")
    edges = _edge_set(g)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            if not _touch(edges, parts[i], parts[j]):
                problems.append(f"parts {i} and {j} are not connected to each other")
    return problems


def check_minor(m: Graph, g: Graph, parts: Sequence[Sequence[int]], embedding: Sequence[int]) -> list[str]:
    """``embedding`` must be an injective homomorphism from ``m`` into the quotient by ``parts``."""
    problems = check_branch_sets(g, parts)
    if len(embedding) != m.n:
        return problems + [f"embedding has {len(embedding)} entries for {m.n} minor vertices"]
    if any(not 0 <= p < len(parts) for p in embedding):
        return problems + ["embedding points outside the parts"]
    if len(set(embedding)) != len(embedding):
        problems.append("embedding is not injective")
    edges = _edge_set(g)
    for e in _edge_set(m):
        a, b = sorted(e)
        if not _touch(edges, parts[embedding[a]], parts[embedding[b]]):
            problems.append(f"minor edge {{{a}, {b}}} has no host edge between its parts")
    return problems


def check_complete(g: Graph, n: int | None = None) -> list[str]:
    problems = []
    if n is not None and g.n != n:
        problems.append(f"expected {n} vertices, got {g.n}")
    if len(_edge_set(g)) != g.n * (g.n - 1) // 2:
        problems.append("graph is not complete")
    return problems
