from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from hadwiger import certify
from hadwiger.errors import CapacityError, ContractViolation, SearchBudgetExceeded
from hadwiger.graph import (
    Graph,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    disjoint_union_cliques,
    empty_graph,
    path_graph,
    petersen_graph,
)
from hadwiger.solvers import (
    chi_oracle,
    chromatic_number,
    clique_minor_oracle,
    hadwiger_number,
    has_clique_minor,
    has_homomorphism,
    is_k_colorable,
    is_minor,
)
from hadwiger.solvers.oracles import clique_number_oracle, hadwiger_oracle, homomorphism_oracle

from conftest import random_graph

small = st.integers(0, 6).flatmap(
    lambda n: st.integers(0, (1 << (n * (n - 1) // 2)) - 1).map(lambda b: random_graph(n, b))
)


def petersen_proper_colourings(k):
    """Count proper k-colourings of the Petersen graph over all k**10 assignments."""
    p = petersen_graph()
    edges = p.edges()
    return sum(1 for c in product(range(k), repeat=10) if all(c[u] != c[v] for u, v in edges))


def all_trees(n):
    """Labelled trees via Pruefer sequences (n >= 2)."""
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(n) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = [w for w in range(n) if degree[w] == 1]
        edges.append((u, v))
        yield Graph.from_edges(n, edges)


class TestColouring:
    def test_k4_not_3_colourable(self):
        assert is_k_colorable(complete_graph(4), 3) is None

    def test_c5_3_colourable(self):
        c = is_k_colorable(cycle_graph(5), 3)
        assert c is not None
        assert certify.check_coloring(cycle_graph(5), c.colors, 3) == []

    def test_petersen(self):
        assert petersen_proper_colourings(2) == 0
        assert petersen_proper_colourings(3) > 0
        p = petersen_graph()
        assert is_k_colorable(p, 2) is None
        c = is_k_colorable(p, 3)
        assert certify.check_coloring(p, c.colors, 3) == []
        assert chromatic_number(p)[0] == 3

    def test_edge_cases(self):
        assert is_k_colorable(complete_graph(0), 0).colors == ()
        assert is_k_colorable(empty_graph(2), 0) is None
        assert chromatic_number(complete_graph(0))[0] == 0
        assert chromatic_number(empty_graph(4))[0] == 1

    @pytest.mark.parametrize("n", range(8))
    def test_complete(self, n):
        assert chromatic_number(complete_graph(n))[0] == n

    def test_union_of_cliques(self):
        g = disjoint_union_cliques(5)
        assert chromatic_number(g)[0] == 5 == max(c.bit_count() for c in g.components())

    def test_contraction_can_raise_chi(self):
        c4 = cycle_graph(4)
        assert chi_oracle(c4) == 2 and chromatic_number(c4)[0] == 2
        k3 = contract_edge(c4, 0, 1)
        assert chi_oracle(k3) == 3 and chromatic_number(k3)[0] == 3

    def test_budget(self):
        with pytest.raises(SearchBudgetExceeded):
            chromatic_number(disjoint_union(cycle_graph(7), petersen_graph()), budget=1)

    @given(small)
    def test_witness_valid(self, g):
        k, c = chromatic_number(g)
        assert certify.check_coloring(g, c.colors, k) == []
        assert c.num_colors <= k


class TestHomomorphism:
    def test_matches_colourability(self, graphs_upto5):
        for g in graphs_upto5:
            for k in range(5):
                hom = has_homomorphism(g, complete_graph(k))
                assert (hom is not None) == (is_k_colorable(g, k) is not None)
                if hom is not None:
                    assert certify.check_homomorphism(g, complete_graph(k), hom.mapping) == []

    def test_c5_to_k2(self):
        assert has_homomorphism(cycle_graph(5), complete_graph(2)) is None

    def test_to_k1(self):
        assert has_homomorphism(path_graph(2), complete_graph(1)) is None
        assert has_homomorphism(empty_graph(3), complete_graph(1)).mapping == (0, 0, 0)

    @given(small, small)
    @settings(max_examples=80)
    def test_against_oracle(self, g, h):
        if g.n > 5 or h.n > 4:
            return
        hom = has_homomorphism(g, h)
        assert (hom is not None) == homomorphism_oracle(g, h)
        if hom is not None:
            assert certify.check_homomorphism(g, h, hom.mapping) == []

    def test_injective(self):
        assert has_homomorphism(cycle_graph(4), complete_graph(4), injective=True) is not None
        assert has_homomorphism(cycle_graph(5), complete_graph(4), injective=True) is None


class TestCliqueMinor:
    def test_petersen_five(self):
        p = petersen_graph()
        spokes = [[i, i + 5] for i in range(5)]
        assert certify.check_clique_minor(p, spokes, 5) == []
        w = has_clique_minor(p, 5)
        assert w is not None and certify.check_clique_minor(p, w.to_json(), 5) == []

    def test_petersen_six_absent(self):
        # K_6 needs 15 edges between parts; covering 10 vertices with 6 connected
        # parts uses at least 4 edges inside parts, leaving at most 11.
        p = petersen_graph()
        assert p.num_edges - (10 - 6) < 15
        assert has_clique_minor(p, 6) is None

    def test_trivial_t(self):
        assert has_clique_minor(complete_graph(0), 0).t == 0
        assert has_clique_minor(empty_graph(3), 1).t == 1
        assert has_clique_minor(complete_graph(0), 1) is None
        with pytest.raises(ContractViolation):
            has_clique_minor(path_graph(2), -1)

    def test_disconnected_host(self):
        g = disjoint_union(path_graph(3), complete_graph(4))
        w = has_clique_minor(g, 4)
        assert certify.check_clique_minor(g, w.to_json(), 4) == []
        assert has_clique_minor(g, 5) is None

    def test_monotone_and_oracle(self, graphs_upto6):
        for g in graphs_upto6:
            present = [has_clique_minor(g, t) is not None for t in range(g.n + 2)]
            assert present == [clique_minor_oracle(g, t) for t in range(g.n + 2)]
            for t in range(1, len(present)):
                assert not present[t] or present[t - 1]

    def test_truncated(self):
        w = has_clique_minor(complete_graph(5), 5)
        assert certify.check_clique_minor(complete_graph(5), w.truncated(3).to_json(), 3) == []


class TestHadwigerNumber:
    @pytest.mark.parametrize("n", range(8))
    def test_complete(self, n):
        assert hadwiger_number(complete_graph(n))[0] == n

    def test_petersen(self):
        h, w = hadwiger_number(petersen_graph())
        assert h == 5
        assert certify.check_clique_minor(petersen_graph(), w.to_json(), 5) == []

    @pytest.mark.parametrize("n", range(2, 7))
    def test_trees(self, n):
        for tree in all_trees(n):
            assert not clique_minor_oracle(tree, 3)
            assert hadwiger_number(tree)[0] == 2

    def test_bounds(self, graphs_upto6):
        for g in graphs_upto6:
            h, w = hadwiger_number(g)
            assert clique_number_oracle(g) <= h <= g.n
            assert certify.check_clique_minor(g, w.to_json(), h) == []

    def test_matches_oracle(self, graphs_upto5):
        for g in graphs_upto5:
            assert hadwiger_number(g)[0] == hadwiger_oracle(g)


class TestIsMinor:
    @given(small)
    @settings(max_examples=40)
    def test_reflexive(self, g):
        w = is_minor(g, g)
        assert w is not None
        parts = [sorted(p) for p in w.decomposition.parts]
        assert certify.check_minor(g, g, parts, w.embedding) == []

    @pytest.mark.parametrize("n", range(3, 7))
    def test_triangle_not_in_trees(self, n):
        for tree in all_trees(n):
            assert is_minor(complete_graph(3), tree) is None

    def test_c4_in_k4(self):
        w = is_minor(cycle_graph(4), complete_graph(4))
        parts = [sorted(p) for p in w.decomposition.parts]
        assert certify.check_minor(cycle_graph(4), complete_graph(4), parts, w.embedding) == []

    def test_needs_contraction(self):
        # K_4 is a minor of the Petersen graph only through contraction
        p = petersen_graph()
        assert has_homomorphism(complete_graph(4), p, injective=True) is None
        w = is_minor(complete_graph(4), p)
        parts = [sorted(x) for x in w.decomposition.parts]
        assert certify.check_minor(complete_graph(4), p, parts, w.embedding) == []

    def test_components_split_across_host(self):
        m = disjoint_union(complete_graph(3), complete_graph(3))
        g = disjoint_union(cycle_graph(5), cycle_graph(4), empty_graph(1))
        w = is_minor(m, g)
        parts = [sorted(x) for x in w.decomposition.parts]
        assert certify.check_minor(m, g, parts, w.embedding) == []
        assert is_minor(m, disjoint_union(cycle_graph(5), path_graph(4))) is None

    def test_clique_equivalence(self, graphs_upto5):
        for g in graphs_upto5:
            for t in range(6):
                assert (is_minor(complete_graph(t), g) is not None) == (has_clique_minor(g, t) is not None)

    def test_budget_is_not_absence(self):
        with pytest.raises(SearchBudgetExceeded):
            is_minor(complete_graph(6), petersen_graph(), budget=50)

    def test_empty_minor(self):
        assert is_minor(complete_graph(0), path_graph(3)).embedding == ()


class TestOracles:
    def test_values(self):
        assert chi_oracle(cycle_graph(5)) == 3
        assert clique_minor_oracle(complete_graph(4), 4)

    def test_cap(self):
        with pytest.raises(CapacityError):
            chi_oracle(empty_graph(8))
        with pytest.raises(CapacityError):
            clique_minor_oracle(empty_graph(8), 2)

    def test_chi_equivalence(self, graphs_upto6):
        for g in graphs_upto6:
            assert chromatic_number(g)[0] == chi_oracle(g)

    def test_vertex_deletion_drops_chi_by_at_most_one(self, graphs_upto6):
        for g in graphs_upto6:
            chi = chromatic_number(g)[0]
            for v in range(g.n):
                assert chromatic_number(delete_vertex(g, v))[0] in (chi - 1, chi)


class TestIndependentChecker:
    def test_rejects_bad_witnesses(self):
        g = path_graph(4)
        assert certify.check_coloring(g, [0, 0, 1, 0])
        assert certify.check_homomorphism(g, complete_graph(1), [0, 0, 0, 0])
        assert certify.check_clique_minor(g, [[0], [2]], 2)
        assert certify.check_clique_minor(g, [[0, 2], [1]], 2)
        assert certify.check_minor(complete_graph(2), g, [[0], [1]], [0, 0])
        assert certify.check_branch_sets(g, [[0, 1], [1, 2]])
