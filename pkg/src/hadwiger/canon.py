"""Canonical labelling by partition refinement plus individualization search.

The canonical representative is the relabelling with the lexicographically
smallest tuple of neighbour masks among all leaves of the search tree.
Automorphisms discovered at equal leaves prune sibling branches that lie in
the same orbit of the prefix stabiliser.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import CapacityError
from .graph import Graph, bits
from .graph6 import to_graph6

DEFAULT_CAP = 12


def _refine(masks: tuple[int, ...], cells: list[int]) -> list[int]:
    """Refine an ordered partition (list of cell bitmasks) until equitable.

    Each cell is split by the number of neighbours in every other cell;
    fragments are ordered by that count, which keeps the result invariant
    under relabelling.
    """
    changed = True
    while changed:
        changed = False
        for splitter in list(cells):
            out = []
            for cell in cells:
                if cell & (cell - 1) == 0:
                    out.append(cell)
                    continue
                groups: dict[int, int] = {}
                for v in bits(cell):
                    c = (masks[v] & splitter).bit_count()
                    groups[c] = groups.get(c, 0) | (1 << v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    out.extend(groups[c] for c in sorted(groups))
                    changed = True
            cells = out
            if changed:
                break
    return cells


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.best_key: tuple[int, ...] | None = None
        self.best_perm: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def leaf(self, cells: list[int]) -> None:
        perm = [0] * self.g.n
        for pos, cell in enumerate(cells):
            perm[cell.bit_length() - 1] = pos
        key = self._relabelled(perm)
        if self.best_key is None or key < self.best_key:
            self.best_key, self.best_perm = key, perm
        elif key == self.best_key:
            # best_perm^-1 . perm maps this leaf's labelling onto the best one
            inv_best = [0] * self.g.n
            for v, p in enumerate(self.best_perm):
                inv_best[p] = v
            self.automorphisms.append([inv_best[perm[v]] for v in range(self.g.n)])

    def _relabelled(self, perm: list[int]) -> tuple[int, ...]:
        masks = [0] * self.g.n
        for v, m in enumerate(self.g.masks):
            new = 0
            for u in bits(m):
                new |= 1 << perm[u]
            masks[perm[v]] = new
        return tuple(masks)

    def _orbit_roots(self, prefix: list[int], cell: int) -> dict[int, int]:
        parent = {v: v for v in bits(cell)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.automorphisms:
            if any(gamma[p] != p for p in prefix):
                continue
            for v in parent:
                w = gamma[v]
                if w in parent:
                    rv, rw = find(v), find(w)
                    if rv != rw:
                        parent[max(rv, rw)] = min(rv, rw)
        return {v: find(v) for v in parent}

    def run(self, cells: list[int], prefix: list[int]) -> None:
        cells = _refine(self.g.masks, cells)
        target_idx = None
        for i, cell in enumerate(cells):
            if cell & (cell - 1):
                if target_idx is None or cell.bit_count() < cells[target_idx].bit_count():
                    target_idx = i
        if target_idx is None:
            self.leaf(cells)
            return
        target = cells[target_idx]
        tried: set[int] = set()
        for v in bits(target):
            if tried:
                roots = self._orbit_roots(prefix, target)
                if roots[v] in {roots[w] for w in tried}:
                    continue
            tried.add(v)
            child = cells[:target_idx] + [1 << v, target & ~(1 << v)] + cells[target_idx + 1:]
            self.run(child, prefix + [v])


def canonical_form(g: Graph, cap: int = DEFAULT_CAP) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(canon, perm)`` with ``canon == g.relabel(perm)``.

    ``canon`` is the same for all graphs isomorphic to ``g``. When ``g`` is
    already canonical the identity permutation is returned.
    """
    if g.n > cap:
        raise CapacityError(f"canonical_form cap is {cap} vertices, got {g.n}")
    return _canonical_cached(g)


@lru_cache(maxsize=1 << 16)
def _canonical_cached(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    if g.n == 0:
        return g, ()
    search = _Search(g)
    search.run([g.all_mask], [])
    canon = Graph(g.n, search.best_key, check=False)
    if canon == g:
        return canon, tuple(range(g.n))
    return canon, tuple(search.best_perm)


def canonical_key(g: Graph, cap: int = DEFAULT_CAP) -> str:
    """graph6 string of the canonical form; equal keys iff isomorphic."""
    return to_graph6(canonical_form(g, cap)[0])


def is_isomorphic(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> bool:
    if g.n > cap or h.n > cap:
        raise CapacityError(f"canonical_form cap is {cap} vertices")
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_form(g, cap)[0] == canonical_form(h, cap)[0]
