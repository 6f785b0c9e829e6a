"""Finite simple graphs stored as per-vertex neighbour bitmasks.

Vertices are ``0..n-1``. Bit ``u`` of ``masks[v]`` is set iff ``{u, v}`` is an
edge. Graphs are immutable; every operation here returns a new graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ContractViolation


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    __slots__ = ("n", "masks")

    def __init__(self, n: int, masks: Sequence[int], *, check: bool = True):
        self.n = n
        self.masks = tuple(masks)
        if check:
            self._validate()

    def _validate(self) -> None:
        if self.n < 0:
            raise ContractViolation("vertex count must be nonnegative")
        if len(self.masks) != self.n:
            raise ContractViolation(f"expected {self.n} neighbourhoods, got {len(self.masks)}")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.masks):
            if mask & ~full or mask < 0:
                raise ContractViolation(f"vertex {v} has a neighbour outside [0, {self.n})")
            if mask >> v & 1:
                raise ContractViolation(f"vertex {v} is adjacent to itself")
            for u in bits(mask):
                if not self.masks[u] >> v & 1:
                    raise ContractViolation(f"edge {{{u}, {v}}} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractViolation(f"edge {{{u}, {v}}} out of range for n={n}")
            if u == v:
                raise ContractViolation(f"loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, masks, check=False)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> Graph:
        return cls(len(adj), [to_mask(nb) for nb in adj])

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(bits(m)) for m in self.masks)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.masks[v]))

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in bits(self.masks[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def is_complete(self) -> bool:
        full = self.all_mask
        return all(m == full ^ (1 << v) for v, m in enumerate(self.masks))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ContractViolation("relabelling must be a permutation of the vertices")
        masks = [0] * self.n
        for v, m in enumerate(self.masks):
            new = 0
            for u in bits(m):
                new |= 1 << perm[u]
            masks[perm[v]] = new
        return Graph(self.n, masks, check=False)

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, vertices renumbered in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep), [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        )

    def components(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = reach(self.masks, 1 << v, self.all_mask)
            comps.append(comp)
            seen |= comp
        return comps

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (_rebuild, (self.n, self.masks))


def _rebuild(n: int, masks: tuple[int, ...]) -> Graph:
    return Graph(n, masks, check=False)


def reach(masks: Sequence[int], start: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``start`` using only vertices of ``within``."""
    seen = start & within
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def neighborhood(masks: Sequence[int], vertices: int) -> int:
    out = 0
    for v in bits(vertices):
        out |= masks[v]
    return out


# -- named graphs -----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)], check=False)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n, check=False)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ContractViolation("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes ``i -- i+5``."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph.from_edges(offset, edges)


def disjoint_union_cliques(m: int) -> Graph:
    """K_1 + K_2 + ... + K_m, components laid out in that order."""
    if m < 1:
        raise ContractViolation("need m >= 1")
    return disjoint_union(*(complete_graph(k) for k in range(1, m + 1)))


# -- vertex sets and decompositions -------------------------------------------


def _check_vertices(g: Graph, s: int, name: str) -> None:
    if s & ~g.all_mask:
        raise ContractViolation(f"{name} contains vertices outside [0, {g.n})")


def connected_to_each_other(g: Graph, s: Iterable[int], t: Iterable[int]) -> bool:
    """True iff some vertex of ``s`` is adjacent to some vertex of ``t``."""
    sm, tm = to_mask(s), to_mask(t)
    _check_vertices(g, sm | tm, "vertex set")
    if sm & tm:
        raise ContractViolation("sets must be disjoint")
    return bool(neighborhood(g.masks, sm) & tm)


def is_connected_subset(g: Graph, s: Iterable[int]) -> bool:
    """True iff ``s`` is nonempty and induces a connected subgraph."""
    sm = to_mask(s)
    _check_vertices(g, sm, "vertex set")
    if not sm:
        return False
    return reach(g.masks, sm & -sm, sm) == sm


@dataclass(frozen=True)
class Decomposition:
    """Pairwise disjoint, nonempty, connected vertex subsets of ``host``.

    The parts need not cover the host's vertex set.
    """

    host: Graph
    parts: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(frozenset(p) for p in self.parts))
        used = 0
        for i, part in enumerate(self.parts):
            pm = to_mask(part)
            if not pm:
                raise ContractViolation(f"part {i} is empty")
            if pm & ~self.host.all_mask:
                raise ContractViolation(f"part {i} has vertices outside the host")
            if pm & used:
                raise ContractViolation(f"part {i} overlaps an earlier part")
            if reach(self.host.masks, pm & -pm, pm) != pm:
                raise ContractViolation(f"part {i} is not connected")
            used |= pm

    def __len__(self) -> int:
        return len(self.parts)


def quotient(d: Decomposition) -> Graph:
    """The graph with one vertex per part, parts adjacent iff connected to each other."""
    masks = [to_mask(p) for p in d.parts]
    nbrs = [neighborhood(d.host.masks, pm) for pm in masks]
    k = len(masks)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k) if nbrs[i] & masks[j]]
    return Graph.from_edges(k, edges)


# -- elementary minor operations ------------------------------------------------


def _shift_out(mask: int, v: int) -> int:
    """Drop bit ``v`` and shift the higher bits down by one."""
    low = mask & ((1 << v) - 1)
    return low | (mask >> (v + 1) << v)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise ContractViolation(f"vertex {v} not in graph on {g.n} vertices")
    masks = [_shift_out(m, v) for i, m in enumerate(g.masks) if i != v]
    return Graph(g.n - 1, masks, check=False)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ContractViolation(f"{{{u}, {v}}} is not an edge")
    masks = list(g.masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph(g.n, masks, check=False)


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """Merge the endpoints of edge ``{u, v}``.

    The merged vertex keeps index ``min(u, v)``; vertices above ``max(u, v)``
    shift down by one. Loops and parallel edges are dropped.
    """
    if not g.has_edge(u, v):
        raise ContractViolation(f"{{{u}, {v}}} is not an edge")
    lo, hi = min(u, v), max(u, v)
    masks = list(g.masks)
    merged = (masks[lo] | masks[hi]) & ~(1 << lo) & ~(1 << hi)
    masks[lo] = merged
    for w in bits(merged):
        masks[w] = (masks[w] & ~(1 << hi)) | (1 << lo)
    del masks[hi]
    return Graph(g.n - 1, [_shift_out(m, hi) for m in masks], check=False)


def remove_isolated(g: Graph) -> Graph:
    return g.induced(v for v in range(g.n) if g.masks[v])


def isolate_vertex(g: Graph, v0: int) -> Graph:
    """Remove every edge at ``v0``; the vertex set is unchanged."""
    if not 0 <= v0 < g.n:
        raise ContractViolation(f"vertex {v0} not in graph on {g.n} vertices")
    masks = [m & ~(1 << v0) for m in g.masks]
    masks[v0] = 0
    return Graph(g.n, masks, check=False)


# Operation records are plain tuples so they serialize directly:
#   ("delete_vertex", v), ("delete_edge", u, v), ("contract", u, v)
Op = tuple


def apply_op(g: Graph, op: Op) -> Graph:
    kind = op[0]
    if kind == "delete_vertex":
        return delete_vertex(g, op[1])
    if kind == "delete_edge":
        return delete_edge(g, op[1], op[2])
    if kind == "contract":
        return contract_edge(g, op[1], op[2])
    raise ContractViolation(f"unknown operation {kind!r}")


def replay(g: Graph, ops: Iterable[Op]) -> Graph:
    for op in ops:
        g = apply_op(g, op)
    return g


def elementary_minors(g: Graph) -> Iterator[tuple[Op, Graph]]:
    """Every one-step minor: vertex deletions, then edge deletions, then contractions."""
    for v in range(g.n):
        yield ("delete_vertex", v), delete_vertex(g, v)
    edges = g.edges()
    for u, v in edges:
        yield ("delete_edge", u, v), delete_edge(g, u, v)
    for u, v in edges:
        yield ("contract", u, v), contract_edge(g, u, v)


def branch_sets_after(g: Graph, ops: Iterable[Op]) -> list[frozenset[int]]:
    """Track which original vertices each current vertex stands for after ``ops``."""
    sets = [frozenset([v]) for v in range(g.n)]
    for op in ops:
        kind = op[0]
        if kind == "delete_vertex":
            del sets[op[1]]
        elif kind == "contract":
            lo, hi = min(op[1], op[2]), max(op[1], op[2])
            sets[lo] = sets[lo] | sets[hi]
            del sets[hi]
        elif kind != "delete_edge":
            raise ContractViolation(f"unknown operation {kind!r}")
    return sets


def bfs_order(g: Graph, start: int, within: int) -> list[int]:
    """Breadth-first order of the component of ``start`` inside ``within``."""
    order = [start]
    seen = 1 << start
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in bits(g.masks[v] & within & ~seen):
            seen |= 1 << u
            order.append(u)
            queue.append(u)
    return order
