"""graph6 codec.

Layout: the order header N(n), then the upper triangle of the adjacency
matrix read column by column ((0,1), (0,2), (1,2), (0,3), ...), packed six
bits per byte with an offset of 63 and zero-padded to a whole byte.
"""

from __future__ import annotations

from .graph import Graph, _from_neighbour_sets

HEADER = ">>graph6<<"
MAX_ORDER = 68719476735  # 2**36 - 1


class Graph6Error(ValueError):
    """Raised for malformed graph6 text."""


def _encode_order(n: int) -> str:
    if n < 0 or n > MAX_ORDER:
        raise ValueError(f"order {n} outside graph6 range")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_order(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise Graph6Error("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte order header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 4-byte order header")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def encode(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no trailing newline)."""
    out = [_encode_order(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (i in row)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode(text: str | bytes) -> Graph:
    """Decode one graph6 line; surrounding whitespace and a ``>>graph6<<`` prefix are allowed."""
    data = text.encode("ascii", errors="replace") if isinstance(text, str) else bytes(text)
    data = data.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} at offset {pos} outside 63..126")
    n, start = _decode_order(data)
    payload = data[start:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(payload) != expected:
        raise Graph6Error(
            f"payload has {len(payload)} bytes, order {n} needs {expected}"
        )
    nbrs: list[list[int]] = [[] for _ in range(n)]
    k = 0
    i, j = 0, 1
    for b in payload:
        v = b - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                if (v >> shift) & 1:
                    raise Graph6Error("non-zero padding bits")
                continue
            if (v >> shift) & 1:
                nbrs[i].append(j)
                nbrs[j].append(i)
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return _from_neighbour_sets(nbrs)
