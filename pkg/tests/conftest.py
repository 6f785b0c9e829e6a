from __future__ import annotations

import pytest

from hadwiger.enumeration import enumerate_upto
from hadwiger.graph import Graph


def random_graph(n: int, edge_bits: int) -> Graph:
    """Graph on n vertices whose edges are chosen by the bits of ``edge_bits``."""
    edges = []
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            if edge_bits >> k & 1:
                edges.append((u, v))
            k += 1
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def graphs_upto5() -> list[Graph]:
    return list(enumerate_upto(5))


@pytest.fixture(scope="session")
def graphs_upto6() -> list[Graph]:
    return list(enumerate_upto(6))
