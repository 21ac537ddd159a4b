"""Deterministically labelled graph families and named small witnesses.

Labelling conventions (kept fixed so graph6 output is reproducible):

* ``path(n)`` / ``cycle(n)``: vertices in order along the path / cycle.
* ``star(n)``: the star of order ``n``, center 0.
* ``complete_bipartite(a, b)``: parts ``0..a-1`` and ``a..a+b-1``.
* ``kn_minus_matching(n, t)``: ``K_n`` without ``(0,1), (2,3), ..., (2t-2, 2t-1)``.
* ``caterpillar(counts)``: spine ``0..k-1``, then the leaves of spine vertex 0,
  then those of spine vertex 1, and so on.
* ``spider(legs)``: hub 0, then each leg numbered outward from the hub.
* ``t7``: path ``0..5`` plus vertex 6 adjacent to 1.
* ``t8``: path ``0..6`` plus vertex 7 adjacent to 1.
* ``paw``: triangle ``{0, 1, 2}`` plus vertex 3 adjacent to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .graph import Graph, complement, graph_from_edges


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1}."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return graph_from_edges(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return graph_from_edges(n, [(u, v) for v in range(n) for u in range(v)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both parts must be non-empty")
    return graph_from_edges(a + b, [(u, a + w) for u in range(a) for w in range(b)])


def kn_minus_matching(n: int, t: int) -> Graph:
    if n < 1:
        raise ValueError("kn_minus_matching needs n >= 1")
    if not 0 <= t <= n // 2:
        raise ValueError(f"matching size {t} not in 0..{n // 2}")
    removed = {(2 * i, 2 * i + 1) for i in range(t)}
    return graph_from_edges(
        n, [(u, v) for v in range(n) for u in range(v) if (u, v) not in removed]
    )


def caterpillar(leaf_counts: Sequence[int]) -> Graph:
    k = len(leaf_counts)
    if k < 1:
        raise ValueError("caterpillar needs a spine of length >= 1")
    if any(c < 0 for c in leaf_counts):
        raise ValueError("leaf counts must be non-negative")
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for s, c in enumerate(leaf_counts):
        for _ in range(c):
            edges.append((s, nxt))
            nxt += 1
    return graph_from_edges(nxt, edges)


def spider(legs: Sequence[int]) -> Graph:
    if any(length < 1 for length in legs):
        raise ValueError("leg lengths must be >= 1")
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return graph_from_edges(nxt, edges)


def t7() -> Graph:
    return graph_from_edges(7, [(i, i + 1) for i in range(5)] + [(1, 6)])


def t8() -> Graph:
    return graph_from_edges(8, [(i, i + 1) for i in range(6)] + [(1, 7)])


def paw() -> Graph:
    return graph_from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...] = ()


# name -> (constructor, takes its params as one sequence)
_BUILDERS: dict[str, tuple[Callable[..., Graph], bool]] = {
    "path": (path, False),
    "cycle": (cycle, False),
    "star": (star, False),
    "complete": (complete, False),
    "complete_bipartite": (complete_bipartite, False),
    "kn_minus_matching": (kn_minus_matching, False),
    "caterpillar": (caterpillar, True),
    "spider": (spider, True),
    "t7": (t7, False),
    "t8": (t8, False),
    "paw": (paw, False),
}

FAMILY_NAMES = tuple(_BUILDERS)


def build(spec: FamilySpec) -> Graph:
    try:
        fn, takes_list = _BUILDERS[spec.name]
    except KeyError:
        raise ValueError(f"unknown family {spec.name!r}") from None
    if takes_list:
        return fn(list(spec.params))
    try:
        return fn(*spec.params)
    except TypeError as exc:
        raise ValueError(f"bad parameters {spec.params} for {spec.name}: {exc}") from None


def is_kn_minus_matching(g: Graph) -> bool:
    """True iff ``g`` is a complete graph with a (possibly empty) matching removed."""
    return all(len(nb) <= 1 for nb in complement(g).adj)
