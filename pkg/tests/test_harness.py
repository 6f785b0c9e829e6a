from __future__ import annotations

import pytest

from hadwiger import certify
from hadwiger.canon import is_isomorphic
from hadwiger.errors import Graph6Error
from hadwiger.graph import (
    complete_graph,
    contract_edge,
    cycle_graph,
    disjoint_union,
    empty_graph,
    petersen_graph,
    remove_isolated,
    replay,
)
from hadwiger.graph6 import from_graph6, to_graph6
from hadwiger.harness import (
    Verdict,
    analyze,
    check_H,
    check_HomH,
    check_ModH,
    check_WeakH,
    descend_modh,
    q3_check,
    recheck_q3,
    search_question3,
    validate_minor_result,
    validate_trace,
    verify_stream,
)
from hadwiger.solvers import chromatic_number, is_minor


class TestH:
    def test_k5(self):
        verdict, w = check_H(complete_graph(5))
        assert verdict is Verdict.HOLDS
        assert sorted(map(sorted, w.decomposition.parts)) == [[v] for v in range(5)]

    def test_c5(self):
        verdict, w = check_H(cycle_graph(5))
        assert verdict is Verdict.HOLDS
        assert certify.check_clique_minor(cycle_graph(5), w.to_json(), 3) == []

    def test_timeout(self):
        assert check_H(petersen_graph(), budget=1)[0] is Verdict.TIMEOUT


class TestWeakH:
    def test_k1(self):
        verdict, w = check_WeakH(complete_graph(1))
        assert verdict is Verdict.HOLDS and w.t == 0

    def test_k0(self):
        assert check_WeakH(complete_graph(0))[0] is Verdict.HOLDS

    def test_implied_by_h(self, graphs_upto6):
        for g in graphs_upto6:
            if check_H(g)[0] is Verdict.HOLDS:
                assert check_WeakH(g)[0] is Verdict.HOLDS


class TestModH:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_complete_fails(self, n):
        assert check_ModH(complete_graph(n)).verdict is Verdict.FAILS

    def test_c5(self):
        res = check_ModH(cycle_graph(5))
        assert res.verdict is Verdict.HOLDS
        assert chromatic_number(res.minor)[0] == 3
        assert not is_isomorphic(res.minor, cycle_graph(5))
        assert replay(cycle_graph(5), res.ops) == res.minor

    def test_isolated_vertex_case(self):
        g = disjoint_union(cycle_graph(5), empty_graph(1))
        m = remove_isolated(g)
        assert chromatic_number(m)[0] == chromatic_number(g)[0]
        assert not is_isomorphic(m, g)
        assert check_ModH(g).verdict is Verdict.HOLDS

    def test_timeout(self):
        assert check_ModH(complete_graph(5), budget=3).verdict is Verdict.TIMEOUT

    def test_tampered_certificate_rejected(self):
        from hadwiger.harness import CertificateError
        res = check_ModH(cycle_graph(5))
        res.ops = res.ops[:-1]
        with pytest.raises(CertificateError):
            validate_minor_result(cycle_graph(5), res, 3)


class TestHomH:
    def test_c5_goes_to_k3(self):
        res = check_HomH(cycle_graph(5))
        assert res.verdict is Verdict.HOLDS
        assert res.minor == complete_graph(3)
        assert certify.check_homomorphism(cycle_graph(5), res.minor, res.homomorphism.mapping) == []

    @pytest.mark.parametrize("n", range(1, 6))
    def test_complete_fails(self, n):
        assert check_HomH(complete_graph(n)).verdict is Verdict.FAILS

    def test_petersen_uses_coloring(self):
        res = check_HomH(petersen_graph())
        assert res.verdict is Verdict.HOLDS and res.minor == complete_graph(3)


class TestImplications:
    def test_h_gives_modh_and_homh(self, graphs_upto6):
        for g in graphs_upto6:
            if g.is_complete():
                continue
            rep = analyze(g)
            assert rep.verdicts["H"] is Verdict.HOLDS
            assert rep.verdicts["ModH"] is Verdict.HOLDS
            assert rep.verdicts["HomH"] is Verdict.HOLDS
            assert rep.verdicts["WeakH"] is Verdict.HOLDS
            assert rep.hadwiger >= rep.chi


class TestDescent:
    def test_complete_is_fixed(self):
        tr = descend_modh(complete_graph(4))
        assert len(tr.steps) == 1 and tr.status == "complete"

    def test_c5(self):
        tr = descend_modh(cycle_graph(5))
        assert tr.steps[-1].graph == complete_graph(3)
        assert validate_trace(tr) == []

    def test_edgeless(self):
        tr = descend_modh(empty_graph(3))
        assert tr.steps[-1].graph == complete_graph(1)

    def test_exhaustive_six(self, graphs_upto6):
        for g in graphs_upto6:
            tr = descend_modh(g)
            assert tr.status == "complete"
            assert validate_trace(tr) == []
            chi = chromatic_number(g)[0]
            assert tr.steps[-1].graph == complete_graph(chi)
            for prev, step in zip(tr.steps, tr.steps[1:]):
                assert is_minor(step.graph, prev.graph) is not None

    def test_validation_catches_bad_trace(self):
        tr = descend_modh(cycle_graph(5))
        tr.steps[-1].graph = complete_graph(2)
        assert validate_trace(tr)


class TestQuestion3:
    def test_complete_graphs_satisfy_trivially(self):
        for n in range(2, 7):
            res = q3_check(complete_graph(n))
            assert res.hypothesis and not res.counterexample

    def test_c4_violates(self):
        res = q3_check(cycle_graph(4))
        assert res.hypothesis is False
        assert res.violation == [[0, 1], 3]
        assert chromatic_number(contract_edge(cycle_graph(4), 0, 1))[0] == 3

    def test_c5_reading(self):
        # every single contraction gives C_4 (chi 2 < 3); the second gives K_3 (chi 3)
        for mode in ("vs-original", "stepwise"):
            assert q3_check(cycle_graph(5), mode).hypothesis is False

    def test_recheck_accepts_complete_results(self):
        for n in range(2, 6):
            res = q3_check(complete_graph(n))
            assert recheck_q3(complete_graph(n), res, "vs-original") == []

    def test_recheck_flags_tampering(self):
        res = q3_check(complete_graph(4))
        res.single[0] = (res.single[0][0], 1)
        assert recheck_q3(complete_graph(4), res, "vs-original")

    def test_small_search_exhausts(self):
        rep = search_question3(2)
        assert rep.checked == 0 and rep.complete_skipped == 2
        assert rep.summary_json()["exhausted"]

    def test_modes_and_budget(self):
        with pytest.raises(ValueError):
            q3_check(cycle_graph(4), "sideways")
        assert q3_check(petersen_graph(), budget=1).hypothesis is None

    def test_parallel_matches_serial(self):
        a = search_question3(5, "stepwise", workers=1).summary_json()
        b = search_question3(5, "stepwise", workers=3).summary_json()
        assert a == b


class TestVerifyStream:
    def test_five_vertices(self):
        from hadwiger.enumeration import enumerate_graphs
        items = list(enumerate(enumerate_graphs(5), 1))
        assert len(items) == 34
        results, agg = verify_stream(items, ["H", "WeakH"])
        assert agg.total == 34 and agg.fails == 0 and agg.timeouts == 0

    def test_empty(self):
        results, agg = verify_stream([], ["H"])
        assert results == [] and agg.total == 0
        assert agg.to_json()["per_statement"] == {"H": {"holds": 0, "fails": 0, "timeout": 0}}

    def test_malformed_line(self):
        items = [(1, from_graph6("Bw")), (2, Graph6Error("bad", 0))]
        results, agg = verify_stream(items, ["H"])
        assert agg.total == 1 and agg.skipped == [2]
        assert results[1].to_json() == {"line": 2, "error": "bad (byte offset 0)"}

    def test_capacity_record(self):
        big = empty_graph(13)
        results, agg = verify_stream([(1, big)], ["H"])
        assert agg.capacity == [to_graph6(big)]

    def test_report_schema(self):
        rep = analyze(cycle_graph(5))
        rec = rep.to_json()
        assert list(rec) == ["id", "n", "edges", "chi", "hadwiger", "verdicts", "certificates", "budget_flags"]
        assert rec["verdicts"] == {"H": "holds", "ModH": "holds", "HomH": "holds", "WeakH": "holds"}
        assert rec["chi"] == 3 and rec["hadwiger"] == 3

    def test_complete_graph_note(self):
        rep = analyze(complete_graph(3), ["ModH"])
        assert rep.verdicts["ModH"] is Verdict.FAILS and rep.note

    def test_unknown_statement(self):
        with pytest.raises(ValueError):
            analyze(cycle_graph(5), ["Hx"])

    def test_workers_do_not_change_results(self):
        from hadwiger.enumeration import enumerate_upto
        items = list(enumerate(enumerate_upto(5), 1))
        r1, a1 = verify_stream(items, ["H", "ModH"], workers=1)
        r4, a4 = verify_stream(items, ["H", "ModH"], workers=4)
        assert [r.to_json() for r in r1] == [r.to_json() for r in r4]
        assert a1.to_json() == a4.to_json()
