"""Distance-based invariants of connected graphs.

All arithmetic is exact integer arithmetic. ``summarize`` takes an already
computed :class:`~wienerecc.graph.DistanceMatrix` so that sweeps run BFS
once per graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import UNREACHABLE, DistanceMatrix, Graph, all_pairs_distances, is_tree


@dataclass(frozen=True)
class VertexProfile:
    vertex: int
    degree: int
    transmission: int
    eccentricity: int


@dataclass(frozen=True)
class InvariantSummary:
    wiener: int
    total_ecc: int
    ecc_connectivity: int
    radius: int
    diameter: int
    center: tuple[int, ...]
    profiles: tuple[VertexProfile, ...]

    @property
    def n(self) -> int:
        return len(self.profiles)

    @property
    def difference(self) -> int:
        """W(G) - eps(G)."""
        return self.wiener - self.total_ecc


def summarize(g: Graph, dm: DistanceMatrix | None = None) -> InvariantSummary:
    """Every per-vertex and aggregate invariant of a connected graph."""
    if dm is None:
        dm = all_pairs_distances(g)
    if g.n == 0:
        raise ValueError("summarize() needs at least one vertex")
    profiles = []
    for v, row in enumerate(dm.d):
        ecc = max(row)
        if ecc == UNREACHABLE:
            raise ValueError("summarize() requires a connected graph")
        profiles.append(VertexProfile(v, g.degree(v), sum(row), ecc))
    eccs = [p.eccentricity for p in profiles]
    radius = min(eccs)
    total_transmission = sum(p.transmission for p in profiles)
    return InvariantSummary(
        wiener=total_transmission // 2,
        total_ecc=sum(eccs),
        ecc_connectivity=sum(p.degree * p.eccentricity for p in profiles),
        radius=radius,
        diameter=max(eccs),
        center=tuple(v for v, e in enumerate(eccs) if e == radius),
        profiles=tuple(profiles),
    )


def wiener_from_pairs(dm: DistanceMatrix) -> int:
    """W(G) straight from the unordered-pair definition."""
    d = dm.d
    return sum(d[u][v] for v in range(dm.n) for u in range(v))


def wiener(g: Graph) -> int:
    return summarize(g).wiener


def is_self_centered(s: InvariantSummary) -> bool:
    return s.radius == s.diameter


def _require_tree(g: Graph) -> None:
    if not is_tree(g):
        raise ValueError("input is not a tree")


def is_caterpillar(g: Graph) -> bool:
    """True iff deleting all leaves of the tree leaves a path (or nothing)."""
    _require_tree(g)
    if g.n <= 2:
        return True
    leaves = {v for v in range(g.n) if g.degree(v) == 1}
    # the stripped tree is a path iff its maximum degree is at most 2
    return all(
        sum(1 for w in g.adj[v] if w not in leaves) <= 2
        for v in range(g.n)
        if v not in leaves
    )


def tree_center(g: Graph) -> tuple[int, ...]:
    """Center of a tree by repeated leaf stripping; one vertex or two adjacent ones."""
    _require_tree(g)
    remaining = set(range(g.n))
    deg = g.degrees()
    layer = [v for v in remaining if deg[v] <= 1]
    while len(remaining) > 2:
        nxt = []
        for v in layer:
            remaining.discard(v)
            for w in g.adj[v]:
                if w in remaining:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return tuple(sorted(remaining))
