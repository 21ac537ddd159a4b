"""Line graph, edge contraction and the leaf move that pushes trees toward caterpillars."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Edge, Graph, _from_neighbour_sets, all_pairs_distances, is_tree
from .invariants import is_caterpillar


def line_graph(g: Graph) -> Graph:
    """Vertex ``i`` of the result is ``g.edges[i]`` (lexicographic edge order)."""
    edges = g.edges
    index = {e: i for i, e in enumerate(edges)}
    nbrs: list[set[int]] = [set() for _ in edges]
    for v in range(g.n):
        incident = [index[(min(v, w), max(v, w))] for w in g.adj[v]]
        for i in incident:
            nbrs[i].update(incident)
    for i, s in enumerate(nbrs):
        s.discard(i)
    return _from_neighbour_sets(nbrs)


def contract_edge(g: Graph, e: Edge) -> Graph:
    """G.e: the endpoints merge into the smaller index, and the last vertex
    takes over the freed larger index."""
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    a, b = min(u, v), max(u, v)
    last = g.n - 1

    def relabel(x: int) -> int:
        if x == b:
            return a
        if x == last:
            return b
        return x

    nbrs: list[set[int]] = [set() for _ in range(g.n - 1)]
    for x, y in g.edges:
        rx, ry = relabel(x), relabel(y)
        if rx != ry:
            nbrs[rx].add(ry)
            nbrs[ry].add(rx)
    return _from_neighbour_sets(nbrs)


@dataclass(frozen=True)
class LeafMove:
    """Re-hang every neighbour of ``u`` other than ``v`` onto ``v``."""

    u: int
    v: int
    moved: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.moved)


def _validate_move(t: Graph, mv: LeafMove) -> None:
    if not is_tree(t):
        raise ValueError("leaf moves apply to trees only")
    if not (0 <= mv.u < t.n and 0 <= mv.v < t.n) or not t.has_edge(mv.u, mv.v):
        raise ValueError(f"u={mv.u} and v={mv.v} are not adjacent")
    expected = tuple(w for w in t.adj[mv.u] if w != mv.v)
    if tuple(sorted(mv.moved)) != expected:
        raise ValueError("moved set must be all neighbours of u except v")
    if mv.s < 1:
        raise ValueError("leaf move must move at least one vertex")
    if any(t.degree(w) != 1 for w in mv.moved):
        raise ValueError("every moved vertex must be a leaf")


def apply_leaf_move(t: Graph, mv: LeafMove) -> Graph:
    _validate_move(t, mv)
    nbrs = [set(nb) for nb in t.adj]
    for w in mv.moved:
        nbrs[mv.u].discard(w)
        nbrs[w] = {mv.v}
        nbrs[mv.v].add(w)
    return _from_neighbour_sets(nbrs)


def diametral_path(t: Graph) -> list[int]:
    """Lexicographically least vertex sequence among the diametral paths of a tree."""
    if not is_tree(t):
        raise ValueError("input is not a tree")
    d = all_pairs_distances(t).d
    diam = max(max(row) for row in d)
    best: list[int] | None = None
    for x in range(t.n):
        for y in range(t.n):
            if d[x][y] != diam:
                continue
            seq = [x]
            while seq[-1] != y:
                cur = seq[-1]
                seq.append(next(w for w in t.adj[cur] if d[w][y] < d[cur][y]))
            if best is None or seq < best:
                best = seq
    return best


def find_paper_leaf_move(t: Graph) -> LeafMove | None:
    """The move used to show caterpillars minimise W - eps.

    ``u`` is a non-leaf vertex off the diametral path at largest distance
    from it (smallest index on ties), ``v`` its neighbour toward the path.
    Returns ``None`` for caterpillars.
    """
    if is_caterpillar(t):
        return None
    on_path = diametral_path(t)
    spine = set(on_path)
    # multi-source BFS from the spine; parent points toward it
    dist = {p: 0 for p in on_path}
    parent: dict[int, int] = {}
    frontier = list(on_path)
    while frontier:
        nxt = []
        for x in frontier:
            for y in t.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    nxt.append(y)
        frontier = nxt
    candidates = [w for w in range(t.n) if w not in spine and t.degree(w) >= 2]
    u = min(candidates, key=lambda w: (-dist[w], w))
    v = parent[u]
    return LeafMove(u, v, tuple(w for w in t.adj[u] if w != v))
