"""Bit-exact graph6 codec for graphs on 1..16 vertices (short form only).

The byte layout is the standard one: chr(n + 63), then the upper triangle of
the adjacency matrix read column by column, packed six bits per byte, each
byte offset by 63.  Trailing pad bits must be zero.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graphs import MAX_VERTICES, Graph, edge_index, edge_slots

_HEADER = ">>graph6<<"


def _column_major_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def to_graph6(g: Graph) -> str:
    n = g.n
    out = [chr(n + 63)]
    stream = [(g.edges >> edge_index(n, i, j)) & 1 for i, j in _column_major_pairs(n)]
    for at in range(0, len(stream), 6):
        group = stream[at:at + 6]
        group += [0] * (6 - len(group))
        val = 0
        for bit in group:
            val = (val << 1) | bit
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"byte {ch!r} outside the graph6 alphabet")
    head = ord(s[0]) - 63
    if head == 63:
        raise GraphFormatError("long-form vertex counts are not supported")
    n = head
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
    nbits = edge_slots(n)
    need = (nbits + 5) // 6
    data = s[1:]
    if len(data) != need:
        raise GraphFormatError(f"expected {need} data bytes for n={n}, got {len(data)}")
    stream: list[int] = []
    for ch in data:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            stream.append((val >> shift) & 1)
    if any(stream[nbits:]):
        raise GraphFormatError("nonzero padding bits")
    bits = 0
    for pos, (i, j) in enumerate(_column_major_pairs(n)):
        if stream[pos]:
            bits |= 1 << edge_index(n, i, j)
    return Graph(n, bits)
