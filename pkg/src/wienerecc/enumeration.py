"""Exhaustive graph populations: free trees, small connected graphs, graph6 files.

Free trees come from the constant-amortised-time successor rule on
canonical level sequences (each tree rooted at its center, the sequence
lists vertex depths in preorder). Connected graphs of order ``n <= 7`` are
produced by extending every graph of order ``n - 1`` with a new vertex in
all possible ways and keeping one canonical representative per
isomorphism class.
"""

from __future__ import annotations

import logging
import sys
from functools import lru_cache
from itertools import chain, permutations, product
from typing import Iterator, Sequence

from .graph import Graph, _from_neighbour_sets, is_connected
from .graph6 import Graph6Error, decode

log = logging.getLogger(__name__)

MAX_TREE_ORDER = 20
MAX_GRAPH_ORDER = 7


# --------------------------------------------------------------------------
# free trees

def level_sequence_to_graph(levels: Sequence[int]) -> Graph:
    """Vertex ``i`` hangs under the most recent vertex one level up."""
    nbrs: list[list[int]] = [[] for _ in levels]
    stack: list[int] = []
    for v, depth in enumerate(levels):
        del stack[depth:]
        if stack:
            p = stack[-1]
            nbrs[p].append(v)
            nbrs[v].append(p)
        stack.append(v)
    return _from_neighbour_sets(nbrs)


def _next_rooted(seq: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a rooted-tree level sequence, rewriting from position ``p``."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq: list[int]) -> tuple[list[int], list[int]]:
    """First principal subtree of the root (re-levelled) and the remainder."""
    m = len(seq)
    for i in range(2, len(seq)):
        if seq[i] == 1:
            m = i
            break
    return [x - 1 for x in seq[1:m]], [0] + seq[m:]


def _next_free(seq: list[int]) -> list[int] | None:
    """Return ``seq`` if it is the canonical form of a free tree, else jump ahead."""
    left, rest = _split(seq)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return seq
    p = len(left)
    jumped = _next_rooted(seq, p)
    if jumped is not None and seq[p] > 2:
        new_left, _ = _split(jumped)
        tail = list(range(1, max(new_left) + 2))
        jumped[-len(tail):] = tail
    return jumped


def free_tree_level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree order must be in 1..{MAX_TREE_ORDER}, got {n}")
    if n <= 2:
        yield tuple(range(n))
        return
    seq: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        if seq is not None:
            yield tuple(seq)
            seq = _next_rooted(seq)


def free_trees(n: int) -> Iterator[Graph]:
    """Each unlabelled tree of order ``n`` exactly once, in a fixed order."""
    for levels in free_tree_level_sequences(n):
        yield level_sequence_to_graph(levels)


# --------------------------------------------------------------------------
# small graphs

def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in nb) for nb in g.adj]


def _refined_cells(masks: list[int]) -> list[list[int]]:
    """Vertex cells from colour refinement, in an isomorphism-invariant order."""
    n = len(masks)
    nbrs = [[w for w in range(n) if masks[v] >> w & 1] for v in range(n)]
    colours = [len(nb) for nb in nbrs]
    while True:
        sigs = [(colours[v], tuple(sorted(colours[w] for w in nbrs[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        refined = [rank[s] for s in sigs]
        if len(rank) == len(set(colours)):
            colours = refined
            break
        colours = refined
    cells: list[list[int]] = [[] for _ in range(max(colours) + 1)] if n else []
    for v, c in enumerate(colours):
        cells[c].append(v)
    return cells


def canonical_code(masks: list[int]) -> int:
    """Minimal upper-triangle bit string (graph6 bit order, first pair most
    significant) over all labellings that respect the refined cells."""
    n = len(masks)
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    best = None
    cells = _refined_cells(masks)
    for choice in product(*(permutations(c) for c in cells)):
        order = list(chain.from_iterable(choice))
        code = 0
        for i, j in pairs:
            code = (code << 1) | (masks[order[i]] >> order[j] & 1)
        if best is None or code < best:
            best = code
    return best if best is not None else 0


def graph_from_code(n: int, code: int) -> Graph:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    k = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if code >> k & 1:
                nbrs[i].append(j)
                nbrs[j].append(i)
    return _from_neighbour_sets(nbrs)


@lru_cache(maxsize=None)
def _all_graph_codes(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    seen = set()
    for code in _all_graph_codes(n - 1):
        base = _masks(graph_from_code(n - 1, code))
        for subset in range(1 << (n - 1)):
            masks = [m | ((subset >> v & 1) << (n - 1)) for v, m in enumerate(base)]
            masks.append(subset)
            seen.add(canonical_code(masks))
    return tuple(sorted(seen))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph of order ``n`` up to isomorphism, connected or not."""
    if not 1 <= n <= MAX_GRAPH_ORDER:
        raise ValueError(f"graph order must be in 1..{MAX_GRAPH_ORDER}, got {n}")
    for code in _all_graph_codes(n):
        yield graph_from_code(n, code)


def connected_graphs(n: int) -> Iterator[Graph]:
    """Each connected graph of order ``n`` up to isomorphism, in canonical-code order."""
    for g in all_graphs(n):
        if is_connected(g):
            yield g


# --------------------------------------------------------------------------
# graph6 files

def read_g6_stream(path: str, strict: bool = False) -> Iterator[Graph]:
    """Decode a graph6 file line by line (``"-"`` reads standard input).

    Malformed lines raise :class:`Graph6Error` naming the line when
    ``strict``; otherwise they are logged and skipped.
    """
    handle = sys.stdin if path == "-" else open(path, encoding="ascii", errors="replace")
    try:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                yield decode(line)
            except Graph6Error as exc:
                if strict:
                    raise Graph6Error(f"line {lineno}: {exc}") from None
                log.warning("skipping malformed graph6 at line %d: %s", lineno, exc)
    finally:
        if handle is not sys.stdin:
            handle.close()
