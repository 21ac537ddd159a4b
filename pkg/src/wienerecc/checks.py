"""One checker per Wiener/eccentricity statement.

Every checker is a fold over a stream of graphs. ``observe`` evaluates one
graph, partial checkers built on disjoint chunks combine with ``merge``,
and ``verdict`` freezes the result into a :class:`CheckVerdict`. All bounds
are compared in integer arithmetic with denominators cleared.

Equality characterisations are checked in both directions: a graph in the
claimed equality class that misses equality, and a graph attaining equality
outside the class, are both reported as :class:`EqualityMismatch`.
"""

from __future__ import annotations

import operator
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, ClassVar, Iterable, Iterator

from .enumeration import MAX_GRAPH_ORDER, MAX_TREE_ORDER, connected_graphs, free_trees
from .families import is_kn_minus_matching
from .graph import (
    UNREACHABLE,
    Graph,
    all_pairs_distances,
    bfs_distances,
    bridges,
    complement,
    is_connected,
    is_tree,
    remove_edge,
)
from .graph6 import decode, encode
from .invariants import InvariantSummary, is_caterpillar, is_self_centered, summarize
from .transforms import contract_edge, line_graph

_RELATIONS: dict[str, Callable[[int, int], bool]] = {
    "<=": operator.le,
    ">=": operator.ge,
    "==": operator.eq,
}


@dataclass(frozen=True)
class Violation:
    graph6: str
    lhs: int
    rhs: int
    detail: str = ""


@dataclass(frozen=True)
class EqualityMismatch:
    graph6: str
    expected_member: bool
    actual_equality: bool
    lhs: int
    rhs: int
    detail: str = ""


@dataclass
class CheckVerdict:
    check_id: str
    statement: str
    population: str
    graphs_tested: int
    skipped: int
    violations: list[Violation]
    equality_mismatches: list[EqualityMismatch]
    status: str
    notes: dict[str, Any] = field(default_factory=dict)

    def to_record(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class Trial:
    """One comparison ``lhs <relation> rhs`` on one graph.

    ``member`` is whether the graph lies in the claimed equality class,
    or ``None`` when the statement has no equality characterisation.
    """

    lhs: int
    rhs: int
    relation: str
    member: bool | None = None
    detail: str = ""


# --------------------------------------------------------------------------
# small shape predicates shared by the checkers

def is_path_graph(g: Graph) -> bool:
    return is_tree(g) and all(len(nb) <= 2 for nb in g.adj)


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n and all(len(nb) == 2 for nb in g.adj) and is_connected(g)


def is_star_graph(g: Graph) -> bool:
    return is_tree(g) and any(len(nb) == g.n - 1 for nb in g.adj)


def conjecture2_bound(n: int) -> int:
    """floor(n^3/6 - 3n^2/4 + n/3 + 1/4), exactly."""
    return (2 * n**3 - 9 * n**2 + 4 * n + 3) // 12


def self_centered_bound(n: int) -> int:
    """Eight times the allowed excess W - eps for a self-centered graph of order n."""
    return n * (n - 2) ** 2 if n % 2 == 0 else n * ((n - 2) ** 2 - 1)


def _component_transmission(g: Graph, root: int) -> tuple[int, int]:
    """(sum of distances from root within its component, component order)."""
    dist = [d for d in bfs_distances(g, root) if d != UNREACHABLE]
    return sum(dist), len(dist)


# --------------------------------------------------------------------------

class Check:
    check_id: ClassVar[str]
    statement: ClassVar[str]
    kind: ClassVar[str] = "graphs"  # native population: "graphs" or "trees"
    min_order: ClassVar[int] = 1
    conjecture: ClassVar[bool] = False

    def __init__(self, sink: Callable[[str, Violation | EqualityMismatch], None] | None = None):
        self.sink = sink
        self.tested = 0
        self.skipped = 0
        self.violations: list[Violation] = []
        self.mismatches: list[EqualityMismatch] = []

    def evaluate(self, g: Graph) -> list[Trial] | None:
        """Trials for ``g``, or ``None`` if ``g`` falls outside the hypothesis."""
        raise NotImplementedError

    def observe(self, g: Graph) -> None:
        trials = self.evaluate(g)
        if trials is None:
            self.skipped += 1
            return
        self.tested += 1
        g6 = None
        for t in trials:
            holds = _RELATIONS[t.relation](t.lhs, t.rhs)
            if not holds:
                g6 = g6 or encode(g)
                self._record(Violation(g6, t.lhs, t.rhs, t.detail))
            if t.member is not None and holds and (t.lhs == t.rhs) != t.member:
                g6 = g6 or encode(g)
                self._record(
                    EqualityMismatch(g6, t.member, t.lhs == t.rhs, t.lhs, t.rhs, t.detail)
                )

    def _record(self, item: Violation | EqualityMismatch) -> None:
        if isinstance(item, Violation):
            self.violations.append(item)
        else:
            self.mismatches.append(item)
        if self.sink is not None:
            self.sink(self.check_id, item)

    def merge(self, other: "Check") -> list[Violation | EqualityMismatch]:
        """Absorb a checker that ran on a later chunk; returns the new records."""
        self.tested += other.tested
        self.skipped += other.skipped
        self.violations.extend(other.violations)
        self.mismatches.extend(other.mismatches)
        return [*other.violations, *other.mismatches]

    def finalize(self) -> None:
        """Hook for checkers whose findings only exist after the whole sweep."""

    def notes(self) -> dict[str, Any]:
        return {}

    def status(self) -> str:
        if self.violations or self.mismatches:
            return "refuted"
        return "partial" if self.conjecture else "verified"

    def verdict(self, population: str) -> CheckVerdict:
        notes = self.notes()
        if self.conjecture:
            notes = {"range": population, **notes}
        return CheckVerdict(
            check_id=self.check_id,
            statement=self.statement,
            population=population,
            graphs_tested=self.tested,
            skipped=self.skipped,
            violations=list(self.violations),
            equality_mismatches=list(self.mismatches),
            status=self.status(),
            notes=notes,
        )

    def reproduce(self, g6: str, detail: str = "") -> tuple[int, int]:
        """Recompute (lhs, rhs) of the trial named by ``detail`` on a decoded graph."""
        trials = self.evaluate(decode(g6)) or []
        for t in trials:
            if t.detail == detail:
                return t.lhs, t.rhs
        raise KeyError(f"no trial {detail!r} for {g6}")


class _ConnectedCheck(Check):
    def evaluate(self, g: Graph) -> list[Trial] | None:
        if g.n < self.min_order or not is_connected(g):
            return None
        return self.trials(g, summarize(g, all_pairs_distances(g)))

    def trials(self, g: Graph, s: InvariantSummary) -> list[Trial]:
        raise NotImplementedError


class _TreeCheck(_ConnectedCheck):
    kind = "trees"

    def evaluate(self, g: Graph) -> list[Trial] | None:
        if g.n < self.min_order or not is_tree(g):
            return None
        return self.trials(g, summarize(g, all_pairs_distances(g)))


# --------------------------------------------------------------------------
# general graphs

class T21(_ConnectedCheck):
    check_id = "T21"
    statement = "W >= eps + m - n; equality iff K_n minus a matching"
    min_order = 2

    def trials(self, g, s):
        return [Trial(s.wiener, s.total_ecc + g.m - g.n, ">=", is_kn_minus_matching(g))]


class T22(_ConnectedCheck):
    check_id = "T22"
    statement = "n >= 4: W >= eps; equality iff G in {P_4, C_4}"
    min_order = 4

    def trials(self, g, s):
        member = g.n == 4 and (is_path_graph(g) or is_cycle_graph(g))
        return [Trial(s.wiener, s.total_ecc, ">=", member)]


class DANK(_ConnectedCheck):
    check_id = "DANK"
    statement = "2W <= (n-1) eps; equality iff complete"

    def trials(self, g, s):
        complete = g.m == g.n * (g.n - 1) // 2
        return [Trial(2 * s.wiener, (g.n - 1) * s.total_ecc, "<=", complete)]


class T23i(_ConnectedCheck):
    check_id = "T23i"
    statement = "2W <= (n-1) eps - xi + 2m; equality iff diam <= 2"

    def trials(self, g, s):
        rhs = (g.n - 1) * s.total_ecc - s.ecc_connectivity + 2 * g.m
        return [Trial(2 * s.wiener, rhs, "<=", s.diameter <= 2)]


class T23ii(_ConnectedCheck):
    check_id = "T23ii"
    statement = (
        "self-centered: 8(W - eps) <= n(n-2)^2 (n even) or n((n-2)^2-1) (n odd); "
        "equality iff odd cycle"
    )
    min_order = 3

    def trials(self, g, s):
        if not is_self_centered(s):
            return None
        member = g.n % 2 == 1 and is_cycle_graph(g)
        return [Trial(8 * s.difference, self_centered_bound(g.n), "<=", member)]


class NG(_ConnectedCheck):
    check_id = "NG"
    statement = "G, co-G connected: 2(W + coW) <= n(n-1) + (n-1)(eps + coeps) - xi - coxi"

    def trials(self, g, s):
        h = complement(g)
        if not is_connected(h):
            return None
        t = summarize(h, all_pairs_distances(h))
        n = g.n
        rhs = (
            n * (n - 1)
            + (n - 1) * (s.total_ecc + t.total_ecc)
            - s.ecc_connectivity
            - t.ecc_connectivity
        )
        return [Trial(2 * (s.wiener + t.wiener), rhs, "<=")]


class TBRIDGE(_ConnectedCheck):
    check_id = "TBRIDGE"
    statement = (
        "bridge e: W(G.e) - eps(G.e) <= W(G) - eps(G), and "
        "W(G) - W(G.e) = d_Gu(u) + d_Gv(v) + n(Gu) n(Gv)"
    )
    min_order = 3

    def trials(self, g, s):
        out = []
        for u, v in bridges(g):
            h = contract_edge(g, (u, v))
            sh = summarize(h, all_pairs_distances(h))
            out.append(Trial(sh.difference, s.difference, "<=", detail=f"edge {u}-{v}"))
            split = remove_edge(g, (u, v))
            du, nu = _component_transmission(split, u)
            dv, nv = _component_transmission(split, v)
            out.append(
                Trial(s.wiener - sh.wiener, du + dv + nu * nv, "==",
                      detail=f"edge {u}-{v} identity")
            )
        return out


class CONJ1(_ConnectedCheck):
    check_id = "CONJ1"
    statement = "every edge e, n >= 3: W(G.e) - eps(G.e) <= W(G) - eps(G)"
    min_order = 3
    conjecture = True

    def trials(self, g, s):
        out = []
        for u, v in g.edges:
            h = contract_edge(g, (u, v))
            sh = summarize(h, all_pairs_distances(h))
            out.append(Trial(sh.difference, s.difference, "<=", detail=f"edge {u}-{v}"))
        return out


class CONJ2(_ConnectedCheck):
    check_id = "CONJ2"
    statement = "rad >= 4: W - eps <= floor((2n^3 - 9n^2 + 4n + 3)/12); equality iff path"
    kind = "trees"
    conjecture = True

    def __init__(self, sink=None):
        super().__init__(sink)
        self.witnesses: list[dict[str, Any]] = []

    def trials(self, g, s):
        bound = conjecture2_bound(g.n)
        path = is_path_graph(g)
        if s.radius < 4:
            if not path and s.difference >= bound:
                self.witnesses.append(
                    {"graph6": encode(g), "difference": s.difference,
                     "bound": bound, "radius": s.radius}
                )
            return None
        return [Trial(s.difference, bound, "<=", path)]

    def merge(self, other):
        self.witnesses.extend(other.witnesses)
        return super().merge(other)

    def notes(self):
        return {"boundary_witnesses": list(self.witnesses)}


# --------------------------------------------------------------------------
# trees

class TSTAR(_TreeCheck):
    check_id = "TSTAR"
    statement = "tree, n >= 3: 4W <= (2n-3) eps + 1; equality iff star"
    min_order = 3

    def trials(self, g, s):
        return [Trial(4 * s.wiener, (2 * g.n - 3) * s.total_ecc + 1, "<=", is_star_graph(g))]


class TLINE(_TreeCheck):
    check_id = "TLINE"
    statement = "tree: 2(W - eps) = 2(W(L) - eps(L)) + n(n-3) - 2r + 2"
    min_order = 2

    def trials(self, g, s):
        lg = line_graph(g)
        sl = summarize(lg, all_pairs_distances(lg))
        n = g.n
        return [Trial(2 * s.difference, 2 * sl.difference + n * (n - 3) - 2 * s.radius + 2, "==")]


class BUCK(_TreeCheck):
    check_id = "BUCK"
    statement = "tree: W(T) = W(L(T)) + C(n,2)"
    min_order = 2

    def trials(self, g, s):
        lg = line_graph(g)
        sl = summarize(lg, all_pairs_distances(lg))
        return [Trial(s.wiener, sl.wiener + g.n * (g.n - 1) // 2, "==")]


class PECC(_TreeCheck):
    check_id = "PECC"
    statement = "tree: eps = d(p) + nr (|C| = 1); 2 eps = d(p) + d(q) - n + 2nr (|C| = 2)"

    def trials(self, g, s):
        n, r = g.n, s.radius
        dist = [p.transmission for p in s.profiles]
        if len(s.center) == 1:
            (p,) = s.center
            return [Trial(s.total_ecc, dist[p] + n * r, "==", detail="|C|=1")]
        p, q = s.center
        return [Trial(2 * s.total_ecc, dist[p] + dist[q] - n + 2 * n * r, "==", detail="|C|=2")]


class TRAD(_TreeCheck):
    check_id = "TRAD"
    statement = "tree: eps >= r(n+r+1) (|C| = 1), 2 eps >= 2r(n+r) - n (|C| = 2); equality iff path"

    def trials(self, g, s):
        n, r = g.n, s.radius
        path = is_path_graph(g)
        if len(s.center) == 1:
            return [Trial(s.total_ecc, r * (n + r + 1), ">=", path, detail="|C|=1")]
        return [Trial(2 * s.total_ecc, 2 * r * (n + r) - n, ">=", path, detail="|C|=2")]


class TCAT(_TreeCheck):
    """Per order, the minimum of W - eps over caterpillars equals the global one."""

    check_id = "TCAT"
    statement = "min over trees of order n of W - eps is attained by a caterpillar"
    min_order = 2

    def __init__(self, sink=None):
        super().__init__(sink)
        # order -> [global min, its first minimiser, caterpillar min, all minimisers caterpillars]
        self.per_order: dict[int, list[Any]] = {}

    def trials(self, g, s):
        diff = s.difference
        cat = is_caterpillar(g)
        entry = self.per_order.get(g.n)
        if entry is None:
            self.per_order[g.n] = [diff, encode(g), diff if cat else None, cat]
            return []
        if diff < entry[0]:
            entry[0], entry[1], entry[3] = diff, encode(g), cat
        elif diff == entry[0]:
            entry[3] = entry[3] and cat
        if cat and (entry[2] is None or diff < entry[2]):
            entry[2] = diff
        return []

    def merge(self, other):
        for n, (gmin, g6, cmin, allcat) in other.per_order.items():
            mine = self.per_order.get(n)
            if mine is None:
                self.per_order[n] = [gmin, g6, cmin, allcat]
                continue
            if gmin < mine[0]:
                mine[0], mine[1], mine[3] = gmin, g6, allcat
            elif gmin == mine[0]:
                mine[3] = mine[3] and allcat
            if cmin is not None and (mine[2] is None or cmin < mine[2]):
                mine[2] = cmin
        return super().merge(other)

    def finalize(self):
        for n in sorted(self.per_order):
            gmin, g6, cmin, _ = self.per_order[n]
            if cmin != gmin:
                self._record(
                    Violation(g6, -1 if cmin is None else cmin, gmin,
                              f"n={n} caterpillar minimum vs global minimum")
                )

    def notes(self):
        return {
            "per_order": {
                str(n): {
                    "min_all": e[0],
                    "min_caterpillar": e[2],
                    "all_minimizers_caterpillars": e[3],
                }
                for n, e in sorted(self.per_order.items())
            }
        }


CATALOG: dict[str, type[Check]] = {
    c.check_id: c
    for c in (T21, T22, DANK, T23i, T23ii, NG, TSTAR, TCAT, TLINE, PECC, TRAD, BUCK,
              TBRIDGE, CONJ1, CONJ2)
}


def get_check(check_id: str) -> type[Check]:
    try:
        return CATALOG[check_id]
    except KeyError:
        raise ValueError(f"unknown check id {check_id!r}; known: {', '.join(CATALOG)}") from None


# --------------------------------------------------------------------------
# populations and drivers

def native_population(kind: str, max_n: int, min_n: int = 1) -> tuple[str, Iterator[Graph]]:
    """(label, stream) for connected graphs or free trees of orders min_n..max_n."""
    if kind == "graphs":
        if max_n > MAX_GRAPH_ORDER:
            raise ValueError(f"native graph enumeration stops at n = {MAX_GRAPH_ORDER}")
        gen = connected_graphs
    elif kind == "trees":
        if max_n > MAX_TREE_ORDER:
            raise ValueError(f"tree enumeration stops at n = {MAX_TREE_ORDER}")
        gen = free_trees
    else:
        raise ValueError(f"unknown population kind {kind!r}")
    label = f"{'connected_graphs' if kind == 'graphs' else 'free_trees'}(n={min_n}..{max_n})"
    stream = (g for n in range(max(min_n, 1), max_n + 1) for g in gen(n))
    return label, stream


def run_check(
    check_id: str,
    graphs: Iterable[Graph],
    population: str,
    sink: Callable[[str, Violation | EqualityMismatch], None] | None = None,
) -> CheckVerdict:
    """Sequential sweep of one checker over a population."""
    check = get_check(check_id)(sink)
    for g in graphs:
        check.observe(g)
    check.finalize()
    return check.verdict(population)


def _observe_chunk(job: tuple[str, list[str]]) -> Check:
    check_id, chunk = job
    check = get_check(check_id)()
    for g6 in chunk:
        check.observe(decode(g6))
    return check


def _chunks(graphs: Iterable[Graph], size: int) -> Iterator[list[str]]:
    batch: list[str] = []
    for g in graphs:
        batch.append(encode(g))
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def run_check_parallel(
    check_id: str,
    graphs: Iterable[Graph],
    population: str,
    jobs: int,
    sink: Callable[[str, Violation | EqualityMismatch], None] | None = None,
    chunk_size: int = 64,
) -> CheckVerdict:
    """Chunked sweep over a process pool; chunks merge in stream order, so the
    verdict is identical to :func:`run_check` whatever ``jobs`` is."""
    if jobs <= 1:
        return run_check(check_id, graphs, population, sink)
    import multiprocessing

    total = get_check(check_id)(sink)
    with multiprocessing.Pool(jobs) as pool:
        jobs_iter = ((check_id, c) for c in _chunks(graphs, chunk_size))
        for part in pool.imap(_observe_chunk, jobs_iter):
            for item in total.merge(part):
                if sink is not None:
                    sink(check_id, item)
    total.finalize()
    return total.verdict(population)
