"""Simple undirected graphs on dense vertex sets ``0..n-1`` and BFS distances.

Graphs are immutable. A :class:`DistanceMatrix` is computed once per graph
with :func:`all_pairs_distances` and handed to every invariant routine.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]

# Marks unreachable pairs; max of an unsigned 32-bit word.
UNREACHABLE = 2**32 - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with sorted neighbour tuples."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        total = sum(len(nb) for nb in self.adj)
        if total % 2:
            raise ValueError("neighbour relation is not symmetric")
        object.__setattr__(self, "m", total // 2)

    @property
    def edges(self) -> list[Edge]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges})"


def graph_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices from an edge list.

    Raises ``ValueError`` on out-of-range endpoints, self-loops and
    duplicate edges (in either orientation).
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            raise ValueError(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def _from_neighbour_sets(nbrs: Sequence[Iterable[int]]) -> Graph:
    # Trusted internal constructor: caller guarantees a simple symmetric relation.
    return Graph(len(nbrs), tuple(tuple(sorted(s)) for s in nbrs))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; ``UNREACHABLE`` marks disconnected pairs."""

    n: int
    d: tuple[tuple[int, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.d[u][v]


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] == UNREACHABLE:
                dist[y] = dx
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """One BFS per vertex, O(n(n+m))."""
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return UNREACHABLE not in bfs_distances(g, 0)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def complement(g: Graph) -> Graph:
    nbrs = []
    for v in range(g.n):
        present = set(g.adj[v])
        present.add(v)
        nbrs.append([w for w in range(g.n) if w not in present])
    return _from_neighbour_sets(nbrs)


def remove_edge(g: Graph, e: Edge) -> Graph:
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    nbrs = [list(nb) for nb in g.adj]
    nbrs[u].remove(v)
    nbrs[v].remove(u)
    return _from_neighbour_sets(nbrs)


def bridges(g: Graph) -> list[Edge]:
    """Bridges of a connected graph via iterative low-link DFS.

    Returned as ``(u, v)`` with ``u < v``, sorted.
    """
    if not is_connected(g):
        raise ValueError("bridges() requires a connected graph")
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[Edge] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, parent, next neighbour position)
        stack = [(root, -1, 0)]
        while stack:
            x, parent, i = stack[-1]
            if i < len(g.adj[x]):
                stack[-1] = (x, parent, i + 1)
                y = g.adj[x][i]
                if y == parent:
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = timer
                    timer += 1
                    stack.append((y, x, 0))
                else:
                    low[x] = min(low[x], disc[y])
            else:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[x])
                    if low[x] > disc[parent]:
                        found.append((min(x, parent), max(x, parent)))
    return sorted(found)


def universal_vertex_count(g: Graph) -> int:
    return sum(1 for nb in g.adj if len(nb) == g.n - 1)
