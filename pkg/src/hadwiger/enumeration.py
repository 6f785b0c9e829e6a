"""Isomorphism-class enumeration of small graphs.

Graphs on ``n`` vertices are produced by attaching a new vertex, with every
possible neighbourhood, to each class on ``n - 1`` vertices and deduplicating
by canonical form. Past the built-in cap, feed graph6 from an external
generator instead.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .canon import canonical_form
from .errors import CapacityError
from .graph import Graph, reach

DEFAULT_CAP = 8


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    seen: dict[tuple[int, ...], Graph] = {}
    for base in _classes(n - 1):
        for nb in range(1 << (n - 1)):
            masks = [m | ((nb >> v & 1) << (n - 1)) for v, m in enumerate(base.masks)]
            masks.append(nb)
            canon = canonical_form(Graph(n, masks, check=False), cap=max(n, 12))[0]
            seen.setdefault(canon.masks, canon)
    return tuple(sorted(seen.values(), key=lambda g: (g.num_edges, g.masks)))


def is_connected(g: Graph) -> bool:
    return g.n == 0 or reach(g.masks, 1, g.all_mask) == g.all_mask


def enumerate_graphs(n: int, connected_only: bool = False, cap: int = DEFAULT_CAP) -> Iterator[Graph]:
    """One canonical representative per isomorphism class on exactly ``n`` vertices.

    Order is deterministic: by edge count, then by neighbour masks.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise CapacityError(f"built-in enumeration is capped at n={cap}, got {n}")
    for g in _classes(n):
        if not connected_only or is_connected(g):
            yield g


def enumerate_upto(n_max: int, connected_only: bool = False, n_min: int = 1,
                   cap: int = DEFAULT_CAP) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(n, connected_only, cap)
