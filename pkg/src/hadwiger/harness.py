"""Checkers for the four Hadwiger-type statements, the minor descent, and the
contraction-criticality search.

Statements, for a finite graph G with chromatic number chi:

* ``H``     -- K_chi is a minor of G.
* ``ModH``  -- some minor M of G with M not isomorphic to G has chi(M) = chi.
* ``HomH``  -- some minor M of G with M not isomorphic to G receives a
  homomorphism from G.
* ``WeakH`` -- K_{chi-1} is a minor of G (vacuous when chi = 0).
"""

from __future__ import annotations

import enum
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable, Iterator

from . import certify
from .canon import DEFAULT_CAP as CANON_CAP, canonical_key, is_isomorphic
from .enumeration import enumerate_upto
from .errors import CapacityError, Graph6Error, SearchBudgetExceeded
from .graph import (
    Graph,
    Op,
    branch_sets_after,
    contract_edge,
    delete_vertex,
    elementary_minors,
    replay,
)
from .graph6 import to_graph6
from .solvers import (
    NodeBudget,
    chromatic_number,
    hadwiger_number,
    has_clique_minor,
    has_homomorphism,
    is_minor,
)
from .solvers.witnesses import CliqueMinorWitness, Coloring, HomomorphismWitness

STATEMENTS = ("H", "ModH", "HomH", "WeakH")
DEFAULT_BUDGET = 1_000_000
KNOWN_EDGE_NOTE = "complete graph: every proper minor has fewer colours, so ModH/HomH fail here by construction"


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    TIMEOUT = "timeout"


class CertificateError(AssertionError):
    """A solver produced a certificate that the independent checker rejects."""


def _require(problems: list[str], what: str) -> None:
    if problems:
        raise CertificateError(f"invalid {what}: {'; '.join(problems)}")


@dataclass
class MinorResult:
    """Outcome of a (ModH)/(HomH) search."""

    verdict: Verdict
    minor: Graph | None = None
    ops: tuple[Op, ...] = ()
    homomorphism: HomomorphismWitness | None = None
    nodes: int = 0

    def certificate(self, g: Graph) -> dict | None:
        if self.minor is None:
            return None
        cert = {
            "minor": to_graph6(self.minor),
            "ops": [list(op) for op in self.ops],
            "branch_sets": [sorted(s) for s in branch_sets_after(g, self.ops)],
        }
        if self.homomorphism is not None:
            cert["homomorphism"] = list(self.homomorphism.mapping)
        return cert


def validate_minor_result(g: Graph, res: MinorResult, chi: int | None = None) -> None:
    """Replay the operations and check the minor relation from first principles."""
    if res.minor is None:
        return
    if replay(g, res.ops) != res.minor:
        raise CertificateError("operation sequence does not reproduce the minor")
    parts = branch_sets_after(g, res.ops)
    _require(certify.check_minor(res.minor, g, [sorted(p) for p in parts], list(range(res.minor.n))),
             "minor witness")
    if res.minor.n + res.minor.num_edges >= g.n + g.num_edges:
        raise CertificateError("minor is not proper")
    if res.homomorphism is not None:
        _require(certify.check_homomorphism(g, res.minor, res.homomorphism.mapping), "homomorphism")
    elif chi is not None and chromatic_number(res.minor)[0] != chi:
        raise CertificateError("minor has a different chromatic number")


# -- (H) and (WeakH) -----------------------------------------------------------


def check_H(g: Graph, chi: int | None = None, hadwiger: tuple[int, CliqueMinorWitness] | None = None,
            budget: int | None = DEFAULT_BUDGET) -> tuple[Verdict, CliqueMinorWitness | None]:
    """Holds iff K_chi is a minor; the witness has exactly chi branch sets."""
    try:
        if chi is None:
            chi = chromatic_number(g)[0]
        if hadwiger is not None:
            h, w = hadwiger
            if h < chi:
                return Verdict.FAILS, None
            witness = w.truncated(chi)
        else:
            witness = has_clique_minor(g, chi, budget)
            if witness is None:
                return Verdict.FAILS, None
    except SearchBudgetExceeded:
        return Verdict.TIMEOUT, None
    _require(certify.check_clique_minor(g, witness.to_json(), chi), "K_chi witness")
    return Verdict.HOLDS, witness


def check_WeakH(g: Graph, chi: int | None = None, hadwiger: tuple[int, CliqueMinorWitness] | None = None,
                budget: int | None = DEFAULT_BUDGET) -> tuple[Verdict, CliqueMinorWitness | None]:
    """Finite reading: if chi = t > 0 then K_{t-1} is a minor."""
    try:
        if chi is None:
            chi = chromatic_number(g)[0]
        if chi == 0:
            return Verdict.HOLDS, has_clique_minor(g, 0)
        if hadwiger is not None:
            h, w = hadwiger
            if h < chi - 1:
                return Verdict.FAILS, None
            witness = w.truncated(chi - 1)
        else:
            witness = has_clique_minor(g, chi - 1, budget)
            if witness is None:
                return Verdict.FAILS, None
    except SearchBudgetExceeded:
        return Verdict.TIMEOUT, None
    _require(certify.check_clique_minor(g, witness.to_json(), chi - 1), "K_{chi-1} witness")
    return Verdict.HOLDS, witness


# -- minor-space search for (ModH) and (HomH) -------------------------------------


def minor_space(g: Graph, budget: NodeBudget, min_vertices: int = 0,
                cap: int = CANON_CAP) -> Iterator[tuple[Graph, tuple[Op, ...]]]:
    """Breadth-first walk over the proper minors of ``g``, one per isomorphism class.

    Each yielded graph comes with the elementary operations producing it from
    ``g``. Minors with fewer than ``min_vertices`` vertices are neither
    yielded nor expanded; no minor of them can have more vertices.
    """
    if g.n > cap:
        raise CapacityError(f"minor-space search is capped at {cap} vertices, got {g.n}")
    seen = {canonical_key(g, cap)}
    queue: deque[tuple[Graph, tuple[Op, ...]]] = deque([(g, ())])
    while queue:
        cur, ops = queue.popleft()
        for op, child in elementary_minors(cur):
            if child.n < min_vertices:
                continue
            key = canonical_key(child, cap)
            if key in seen:
                continue
            seen.add(key)
            budget.tick()
            path = ops + (op,)
            yield child, path
            queue.append((child, path))


def check_ModH(g: Graph, chi: int | None = None, budget: int | None = DEFAULT_BUDGET,
               cap: int = CANON_CAP) -> MinorResult:
    """Search for a proper minor with the same chromatic number.

    Every proper minor has fewer vertices or edges than ``g`` and so is not
    isomorphic to it. Contraction can raise the chromatic number, so the walk
    does not prune on it.
    """
    if chi is None:
        chi = chromatic_number(g)[0]
    nb = NodeBudget(budget)
    try:
        for minor, ops in minor_space(g, nb, min_vertices=chi, cap=cap):
            if chromatic_number(minor)[0] == chi:
                res = MinorResult(Verdict.HOLDS, minor, ops, nodes=nb.used)
                validate_minor_result(g, res, chi)
                return res
    except SearchBudgetExceeded:
        return MinorResult(Verdict.TIMEOUT, nodes=nb.used)
    return MinorResult(Verdict.FAILS, nodes=nb.used)


def clique_minor_ops(g: Graph, witness: CliqueMinorWitness) -> tuple[Op, ...]:
    """Deletions and contractions turning ``g`` into the quotient by the witness's parts."""
    parts = witness.decomposition.parts
    owner = {v: i for i, p in enumerate(parts) for v in p}
    ops: list[Op] = []
    cur = g
    labels = list(range(g.n))  # current vertex -> part index or -1
    for v in sorted(range(g.n), reverse=True):
        if v not in owner:
            ops.append(("delete_vertex", v))
            cur = delete_vertex(cur, v)
            del labels[v]
    labels = [owner[v] for v in labels]
    while True:
        edge = next(((u, v) for u, v in cur.edges() if labels[u] == labels[v]), None)
        if edge is None:
            return tuple(ops)
        ops.append(("contract",) + edge)
        cur = contract_edge(cur, *edge)
        del labels[max(edge)]


def check_HomH(g: Graph, chi: int | None = None, coloring: Coloring | None = None,
               budget: int | None = DEFAULT_BUDGET, cap: int = CANON_CAP) -> MinorResult:
    """Search for a proper minor receiving a homomorphism from ``g``.

    A K_chi minor is tried first: a proper colouring is a homomorphism onto it.
    Otherwise the minor space is walked breadth-first.
    """
    if chi is None or coloring is None:
        chi, coloring = chromatic_number(g)
    nb = NodeBudget(budget)
    try:
        if not g.is_complete():
            witness = has_clique_minor(g, chi, nb)
            if witness is not None:
                ops = clique_minor_ops(g, witness)
                minor = replay(g, ops)
                _require(certify.check_complete(minor, chi), "K_chi minor replay")
                res = MinorResult(Verdict.HOLDS, minor, ops, HomomorphismWitness(coloring.colors), nb.used)
                validate_minor_result(g, res)
                return res
        # a homomorphism into M composes with a colouring of M, so chi(M) >= chi
        for minor, ops in minor_space(g, nb, min_vertices=chi, cap=cap):
            hom = has_homomorphism(g, minor, nb)
            if hom is not None:
                res = MinorResult(Verdict.HOLDS, minor, ops, hom, nb.used)
                validate_minor_result(g, res)
                return res
    except SearchBudgetExceeded:
        return MinorResult(Verdict.TIMEOUT, nodes=nb.used)
    return MinorResult(Verdict.FAILS, nodes=nb.used)


# -- iterated descent -------------------------------------------------------------


@dataclass
class DescentStep:
    graph: Graph
    chi: int
    ops: tuple[Op, ...] = ()

    def to_json(self) -> dict:
        return {"graph": to_graph6(self.graph), "chi": self.chi, "ops": [list(op) for op in self.ops]}


@dataclass
class DescentTrace:
    """Successive proper minors of constant chromatic number.

    ``status`` is ``complete`` when the last graph is K_chi, ``stuck`` when
    the last graph is not complete yet has no proper minor of the same
    chromatic number (a counterexample to H), or ``timeout``.
    """

    steps: list[DescentStep] = field(default_factory=list)
    status: str = "complete"

    def to_json(self) -> dict:
        return {
            "id": to_graph6(self.steps[0].graph),
            "status": self.status,
            "length": len(self.steps),
            "trace": [s.to_json() for s in self.steps],
        }


def descend_modh(g: Graph, budget: int | None = DEFAULT_BUDGET, cap: int = CANON_CAP) -> DescentTrace:
    """Repeatedly replace the graph by a proper minor of equal chromatic number.

    Each step strictly lowers vertex count plus edge count, so the loop ends.
    """
    chi = chromatic_number(g)[0]
    trace = DescentTrace([DescentStep(g, chi)])
    cur = g
    while True:
        res = check_ModH(cur, chi, budget, cap)
        if res.verdict is Verdict.TIMEOUT:
            trace.status = "timeout"
            return trace
        if res.verdict is Verdict.FAILS:
            trace.status = "complete" if cur.is_complete() else "stuck"
            return trace
        trace.steps.append(DescentStep(res.minor, chi, res.ops))
        cur = res.minor


def validate_trace(trace: DescentTrace, budget: int | None = DEFAULT_BUDGET) -> list[str]:
    """Re-check every step with the general minor solver and isomorphism test."""
    problems = []
    steps = trace.steps
    chi = chromatic_number(steps[0].graph)[0]
    for i, step in enumerate(steps):
        if chromatic_number(step.graph)[0] != chi or step.chi != chi:
            problems.append(f"step {i}: chromatic number changed")
        if i == 0:
            continue
        prev = steps[i - 1].graph
        if replay(prev, step.ops) != step.graph:
            problems.append(f"step {i}: operations do not reproduce the minor")
        w = is_minor(step.graph, prev, budget)
        if w is None:
            problems.append(f"step {i}: not a minor of its predecessor")
        else:
            problems += [f"step {i}: {p}" for p in certify.check_minor(
                step.graph, prev, [sorted(p) for p in w.decomposition.parts], w.embedding)]
        if is_isomorphic(step.graph, prev):
            problems.append(f"step {i}: isomorphic to its predecessor")
    if trace.status == "complete":
        problems += [f"last graph: {p}" for p in certify.check_complete(steps[-1].graph, chi)]
    return problems


# -- contraction criticality (one or two edges) -----------------------------------


Q3_MODES = ("vs-original", "stepwise")


@dataclass
class Q3Result:
    graph: Graph
    chi: int
    hypothesis: bool | None  # None on budget exhaustion
    single: list[tuple[tuple[int, int], int]] = field(default_factory=list)
    double: list[tuple[tuple[int, int], tuple[int, int], int]] = field(default_factory=list)
    violation: list | None = None

    @property
    def counterexample(self) -> bool:
        return bool(self.hypothesis) and not self.graph.is_complete()

    def to_json(self, mode: str) -> dict:
        return {
            "kind": "q3_counterexample",
            "mode": mode,
            "id": to_graph6(self.graph),
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "chi": self.chi,
            "single": [[list(e), c] for e, c in self.single],
            "double": [[list(e), list(f), c] for e, f, c in self.double],
        }


def q3_check(g: Graph, mode: str = "vs-original", budget: int | None = DEFAULT_BUDGET) -> Q3Result:
    """Does contracting any one edge, and any two edges in sequence, lower chi?

    ``vs-original`` compares both against chi(g); ``stepwise`` compares the
    second contraction against the graph after the first one.
    """
    if mode not in Q3_MODES:
        raise ValueError(f"unknown mode {mode!r}")
    nb = NodeBudget(budget)
    try:
        chi = chromatic_number(g, nb)[0]
        res = Q3Result(g, chi, True)
        for e in g.edges():
            g1 = contract_edge(g, *e)
            c1 = chromatic_number(g1, nb)[0]
            res.single.append((e, c1))
            if c1 >= chi:
                res.hypothesis, res.violation = False, [list(e), c1]
                return res
            bound = chi if mode == "vs-original" else c1
            for f in g1.edges():
                c2 = chromatic_number(contract_edge(g1, *f), nb)[0]
                res.double.append((e, f, c2))
                if c2 >= bound:
                    res.hypothesis, res.violation = False, [list(e), list(f), c2]
                    return res
    except SearchBudgetExceeded:
        return Q3Result(g, -1, None)
    return res


def recheck_q3(g: Graph, res: Q3Result, mode: str) -> list[str]:
    """Recompute every recorded value from contract_edge and chromatic_number alone."""
    problems = []
    chi = chromatic_number(g)[0]
    if chi != res.chi:
        problems.append("chromatic number mismatch")
    edges = g.edges()
    if [e for e, _ in res.single] != edges:
        problems.append("single contractions incomplete")
    singles = {}
    for e, c in res.single:
        singles[e] = chromatic_number(contract_edge(g, *e))[0]
        if singles[e] != c or c >= chi:
            problems.append(f"contracting {e} gives chi {singles[e]}")
    expected_pairs = [(e, f) for e in edges for f in contract_edge(g, *e).edges()]
    if [(e, f) for e, f, _ in res.double] != expected_pairs:
        problems.append("double contractions incomplete")
    for e, f, c in res.double:
        actual = chromatic_number(contract_edge(contract_edge(g, *e), *f))[0]
        bound = chi if mode == "vs-original" else singles.get(e, chi)
        if actual != c or actual >= bound:
            problems.append(f"contracting {e} then {f} gives chi {actual}")
    return problems


@dataclass
class Q3Report:
    mode: str
    n_max: int
    checked: int = 0
    complete_skipped: int = 0
    counterexamples: list[Q3Result] = field(default_factory=list)
    timeouts: list[str] = field(default_factory=list)

    def summary_json(self) -> dict:
        exhausted = not self.timeouts
        if self.counterexamples:
            statement = (f"{len(self.counterexamples)} non-complete connected graph(s) on at most "
                         f"{self.n_max} vertices satisfy the hypothesis")
        elif exhausted:
            statement = (f"exhausted all connected graphs on at most {self.n_max} vertices: "
                         "no non-complete graph satisfies the hypothesis")
        else:
            statement = "search incomplete: some graphs exceeded the budget"
        return {
            "kind": "q3_summary",
            "mode": self.mode,
            "n_max": self.n_max,
            "graphs_checked": self.checked,
            "complete_graphs_skipped": self.complete_skipped,
            "counterexamples": [to_graph6(r.graph) for r in self.counterexamples],
            "timeouts": list(self.timeouts),
            "exhausted": exhausted,
            "statement": statement,
        }


def _pool_map(fn, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (workers * 8))))


def search_question3(n_max: int, mode: str = "vs-original", budget: int | None = DEFAULT_BUDGET,
                     workers: int = 1) -> Q3Report:
    """Look for non-complete connected graphs on which every one- and two-edge
    contraction lowers the chromatic number."""
    report = Q3Report(mode, n_max)
    candidates = []
    for g in enumerate_upto(n_max, connected_only=True):
        if g.is_complete():
            report.complete_skipped += 1
        else:
            candidates.append(g)
    results = _pool_map(partial(q3_check, mode=mode, budget=budget), candidates, workers)
    for res in results:
        report.checked += 1
        if res.hypothesis is None:
            report.timeouts.append(to_graph6(res.graph))
        elif res.counterexample:
            problems = recheck_q3(res.graph, res, mode)
            if problems:
                raise CertificateError("; ".join(problems))
            report.counterexamples.append(res)
    return report


# -- per-graph reports and streams ------------------------------------------------


@dataclass
class StatementReport:
    graph: Graph
    chi: int | None
    hadwiger: int | None
    verdicts: dict[str, Verdict]
    certificates: dict[str, object] = field(default_factory=dict)
    budget_flags: list[str] = field(default_factory=list)
    note: str | None = None

    @property
    def graph_id(self) -> str:
        return to_graph6(self.graph)

    def to_json(self, with_certificates: bool = True) -> dict:
        rec = {
            "id": self.graph_id,
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges()],
            "chi": self.chi,
            "hadwiger": self.hadwiger,
            "verdicts": {s: v.value for s, v in self.verdicts.items()},
        }
        if with_certificates:
            rec["certificates"] = self.certificates
        rec["budget_flags"] = list(self.budget_flags)
        if self.note:
            rec["note"] = self.note
        return rec


def analyze(g: Graph, statements: Iterable[str] = STATEMENTS, budget: int | None = DEFAULT_BUDGET,
            cap: int = CANON_CAP) -> StatementReport:
    """Run the requested statement checks, sharing chi and the Hadwiger number."""
    requested = set(statements)
    if requested - set(STATEMENTS):
        raise ValueError(f"unknown statements {sorted(requested - set(STATEMENTS))}")
    statements = [s for s in STATEMENTS if s in requested]
    flags: list[str] = []
    try:
        chi, coloring = chromatic_number(g, budget)
    except SearchBudgetExceeded:
        return StatementReport(g, None, None, {s: Verdict.TIMEOUT for s in statements}, budget_flags=["chi"])
    _require(certify.check_coloring(g, coloring.colors, chi), "colouring")
    certs: dict[str, object] = {"coloring": list(coloring.colors)}

    had = None
    if {"H", "WeakH"} & set(statements):
        try:
            had = hadwiger_number(g, budget)
            _require(certify.check_clique_minor(g, had[1].to_json(), had[0]), "Hadwiger witness")
            certs["hadwiger_witness"] = had[1].to_json()
        except SearchBudgetExceeded:
            flags.append("hadwiger")

    verdicts: dict[str, Verdict] = {}
    for s in statements:
        if s in ("H", "WeakH"):
            check = check_H if s == "H" else check_WeakH
            verdict, witness = check(g, chi, had, budget)
            if witness is not None:
                certs[s] = {"clique_minor": witness.to_json()}
        else:
            if s == "ModH":
                res = check_ModH(g, chi, budget, cap)
            else:
                res = check_HomH(g, chi, coloring, budget, cap)
            verdict = res.verdict
            if res.minor is not None:
                certs[s] = res.certificate(g)
        if verdict is Verdict.TIMEOUT:
            flags.append(s)
        verdicts[s] = verdict

    note = None
    if g.is_complete() and any(verdicts.get(s) is Verdict.FAILS for s in ("ModH", "HomH")):
        note = KNOWN_EDGE_NOTE
    return StatementReport(g, chi, had[0] if had else None, verdicts, certs, flags, note)


def is_known_edge(report: StatementReport, statement: str) -> bool:
    return statement in ("ModH", "HomH") and report.graph.is_complete()


@dataclass
class SkipRecord:
    line: int
    error: str

    def to_json(self) -> dict:
        return {"line": self.line, "error": self.error}


@dataclass
class Aggregate:
    statements: tuple[str, ...]
    total: int = 0
    per_statement: dict[str, dict[str, int]] = field(default_factory=dict)
    counterexamples: list[str] = field(default_factory=list)
    known_edge_fails: list[str] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)
    capacity: list[str] = field(default_factory=list)

    def __post_init__(self):
        for s in self.statements:
            self.per_statement.setdefault(s, {v.value: 0 for v in Verdict})

    def add(self, item) -> None:
        if isinstance(item, SkipRecord):
            self.skipped.append(item.line)
            return
        if isinstance(item, CapacityRecord):
            self.capacity.append(item.graph_id)
            return
        self.total += 1
        for s, v in item.verdicts.items():
            self.per_statement[s][v.value] += 1
            if v is Verdict.FAILS:
                target = self.known_edge_fails if is_known_edge(item, s) else self.counterexamples
                if item.graph_id not in target:
                    target.append(item.graph_id)

    @property
    def fails(self) -> int:
        return sum(c["fails"] for c in self.per_statement.values())

    @property
    def timeouts(self) -> int:
        return sum(c["timeout"] for c in self.per_statement.values())

    def to_json(self) -> dict:
        return {
            "kind": "aggregate",
            "total": self.total,
            "per_statement": self.per_statement,
            "counterexamples": self.counterexamples,
            "known_edge_fails": self.known_edge_fails,
            "skipped_lines": self.skipped,
            "capacity_exceeded": self.capacity,
        }


@dataclass
class CapacityRecord:
    graph_id: str
    n: int
    cap: int

    def to_json(self) -> dict:
        return {"id": self.graph_id, "n": self.n, "error": f"capacity: n={self.n} exceeds cap {self.cap}"}


def _analyze_item(item, statements, budget, cap):
    lineno, g = item
    if isinstance(g, Graph6Error):
        return SkipRecord(lineno, str(g))
    if g.n > cap:
        return CapacityRecord(to_graph6(g), g.n, cap)
    return analyze(g, statements, budget, cap)


def verify_stream(graphs: Iterable[tuple[int, Graph | Graph6Error]], statements: Iterable[str] = STATEMENTS,
                  budget: int | None = DEFAULT_BUDGET, workers: int = 1,
                  cap: int = CANON_CAP) -> tuple[list, Aggregate]:
    """Analyse every graph; results come back in input order regardless of ``workers``.

    ``graphs`` yields ``(line_number, graph_or_parse_error)`` pairs.
    """
    statements = tuple(s for s in STATEMENTS if s in set(statements))
    items = list(graphs)
    results = _pool_map(partial(_analyze_item, statements=statements, budget=budget, cap=cap), items, workers)
    agg = Aggregate(statements)
    for r in results:
        agg.add(r)
    return results, agg

