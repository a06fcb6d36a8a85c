"""Graphs as edge bitsets on at most 16 labeled vertices.

A graph stores its edge set as a single Python integer: bit k stands for the
k-th unordered pair (i, j) with i < j, pairs taken in lexicographic order.
That keeps union, complement and membership at machine speed and makes every
value hashable and immutable.  Canonical forms are computed by brute force
over vertex permutations of the non-isolated vertices, so they are only
available while that support is small (at most 10 vertices).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice, permutations
from math import comb
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .errors import BudgetError, UnknownTagError

MAX_VERTICES = 16
MAX_CANONICAL_SUPPORT = 10
MAX_ENUMERATION_VERTICES = 9

# Largest number of edge subsets a single enumeration or search level may
# visit.  Enough for every supported desk-scale call; anything bigger fails
# loudly instead of running for hours.
SUBSET_BUDGET = 600_000

_PERM_TABLE_CACHE_LIMIT = 9
_PERM_CHUNK = 1 << 16


@lru_cache(maxsize=None)
def pair_table(n: int) -> tuple[tuple[int, int], ...]:
    """All unordered pairs (i, j), i < j, in the fixed lexicographic order."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def edge_slots(n: int) -> int:
    return n * (n - 1) // 2


def edge_index(n: int, i: int, j: int) -> int:
    """Bit position of the pair (i, j) in pair_table(n)."""
    if i > j:
        i, j = j, i
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def iter_bits(bits: int) -> Iterator[int]:
    """Positions of set bits, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@lru_cache(maxsize=None)
def incident_masks(n: int) -> tuple[int, ...]:
    """Per vertex, the slot mask of its potentially incident edges."""
    inc = [0] * n
    for k, (i, j) in enumerate(pair_table(n)):
        inc[i] |= 1 << k
        inc[j] |= 1 << k
    return tuple(inc)


@dataclass(frozen=True)
class Graph:
    """Loopless simple undirected graph on vertices 0..n-1."""

    n: int
    edges: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {self.n!r}")
        if not 0 <= self.edges < 1 << edge_slots(self.n):
            raise ValueError(f"edge bitset out of range for n={self.n}")

    @property
    def edge_count(self) -> int:
        return self.edges.bit_count()

    def edge_list(self) -> list[tuple[int, int]]:
        pt = pair_table(self.n)
        return [pt[k] for k in iter_bits(self.edges)]

    def support_mask(self) -> int:
        """Bitset of non-isolated vertices."""
        pt = pair_table(self.n)
        mask = 0
        for k in iter_bits(self.edges):
            i, j = pt[k]
            mask |= (1 << i) | (1 << j)
        return mask

    def support_size(self) -> int:
        return self.support_mask().bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.edges >> edge_index(self.n, i, j) & 1)

    def complement(self) -> "Graph":
        return Graph(self.n, ((1 << edge_slots(self.n)) - 1) ^ self.edges)


def make_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicates collapse, loops are rejected."""
    if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {n!r}")
    bits = 0
    for i, j in edge_list:
        if i == j:
            raise ValueError(f"loop ({i}, {j}) is not allowed")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"vertex pair ({i}, {j}) out of range for n={n}")
        bits |= 1 << edge_index(n, i, j)
    return Graph(n, bits)


def empty(n: int) -> Graph:
    return Graph(n, 0)


def complete(n: int) -> Graph:
    return Graph(n, (1 << edge_slots(n)) - 1)


def edge_graph(n: int, pair: tuple[int, int]) -> Graph:
    return make_graph(n, [pair])


def union(g: Graph, h: Graph) -> Graph:
    if g.n != h.n:
        raise ValueError(f"vertex counts differ: {g.n} vs {h.n}")
    return Graph(g.n, g.edges | h.edges)


def relabel(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Image of g under the vertex permutation v -> perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    bits = 0
    pt = pair_table(g.n)
    for k in iter_bits(g.edges):
        i, j = pt[k]
        bits |= 1 << edge_index(g.n, perm[i], perm[j])
    return Graph(g.n, bits)


# ---------------------------------------------------------------------------
# named catalog

def _petersen_edges() -> tuple[tuple[int, int], ...]:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return tuple(outer + spokes + inner)


_NAMED: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "2k2": (4, ((0, 1), (2, 3))),
    "3k2": (6, ((0, 1), (2, 3), (4, 5))),
    "c4": (4, ((0, 1), (1, 2), (2, 3), (0, 3))),
    "triangle": (3, ((0, 1), (1, 2), (0, 2))),
    "paw": (4, ((0, 1), (1, 2), (0, 2), (2, 3))),
    "2-star": (3, ((0, 1), (1, 2))),
    "3-path": (4, ((0, 1), (1, 2), (2, 3))),
    "k13": (4, ((0, 1), (0, 2), (0, 3))),
    "petersen": (10, _petersen_edges()),
}

_ALIASES = {
    "c3": "triangle",
    "k3": "triangle",
    "triangle-pendant": "paw",
    "triangle+pendant": "paw",
    "p3": "2-star",
    "2star": "2-star",
    "2-path": "2-star",
    "p4": "3-path",
    "claw": "k13",
    "k1,3": "k13",
    "star3": "k13",
}


def named_tags() -> tuple[str, ...]:
    return tuple(sorted(_NAMED))


def named(tag: str) -> Graph:
    """Catalog lookup; see named_tags() for the canonical spellings."""
    key = tag.strip().lower()
    key = _ALIASES.get(key, key)
    if key not in _NAMED:
        raise UnknownTagError(f"unknown graph tag {tag!r}; known tags: {', '.join(named_tags())}")
    n, edges = _NAMED[key]
    return make_graph(n, edges)


# ---------------------------------------------------------------------------
# canonical forms

class CanonicalKey(NamedTuple):
    """Isomorphism-class key: support size, edge count, minimal edge bitset."""

    support: int
    edge_count: int
    bits: int


def _build_perm_maps(perms: np.ndarray, k: int) -> np.ndarray:
    """Edge-slot images, one row per vertex permutation of k vertices."""
    table = np.empty((perms.shape[0], edge_slots(k)), dtype=np.int8)
    for e, (i, j) in enumerate(pair_table(k)):
        a = perms[:, i].astype(np.int16)
        b = perms[:, j].astype(np.int16)
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        table[:, e] = (lo * (2 * k - lo - 1) // 2 + (hi - lo - 1)).astype(np.int8)
    return table


@lru_cache(maxsize=None)
def _perm_maps(k: int) -> np.ndarray:
    perms = np.array(list(permutations(range(k))), dtype=np.int8)
    return _build_perm_maps(perms, k)


def _extreme_bits(edge_idx: tuple[int, ...], k: int, maximize: bool) -> int:
    """Min (or max) edge bitset over all vertex permutations of k vertices."""
    if not edge_idx:
        return 0
    idx = list(edge_idx)
    if k <= _PERM_TABLE_CACHE_LIMIT:
        t = _perm_maps(k)[:, idx].astype(np.int64)
        vals = (np.int64(1) << t).sum(axis=1)
        return int(vals.max() if maximize else vals.min())
    best = None
    stream = permutations(range(k))
    while True:
        chunk = list(islice(stream, _PERM_CHUNK))
        if not chunk:
            break
        t = _build_perm_maps(np.array(chunk, dtype=np.int8), k)[:, idx].astype(np.int64)
        vals = (np.int64(1) << t).sum(axis=1)
        v = int(vals.max() if maximize else vals.min())
        if best is None or (v > best if maximize else v < best):
            best = v
    assert best is not None
    return best


def _canonical_key_bits(n: int, bits: int) -> CanonicalKey:
    pt = pair_table(n)
    sup = 0
    for k in iter_bits(bits):
        i, j = pt[k]
        sup |= (1 << i) | (1 << j)
    verts = list(iter_bits(sup))
    ks = len(verts)
    if ks == 0:
        return CanonicalKey(0, 0, 0)
    if ks > MAX_CANONICAL_SUPPORT:
        raise BudgetError(
            f"canonical form needs a permutation scan over {ks} support vertices; "
            f"limit is {MAX_CANONICAL_SUPPORT}"
        )
    rank = {v: r for r, v in enumerate(verts)}
    es = [edge_index(ks, rank[pt[k][0]], rank[pt[k][1]]) for k in iter_bits(bits)]
    m = len(es)
    slots = edge_slots(ks)
    if 2 * m > slots:
        # Dense side: minimizing over the graph equals maximizing over its
        # complement on the same support, which scans fewer set bits.
        comp = tuple(sorted(set(range(slots)) - set(es)))
        min_bits = ((1 << slots) - 1) ^ _extreme_bits(comp, ks, maximize=True)
    else:
        min_bits = _extreme_bits(tuple(es), ks, maximize=False)
    return CanonicalKey(ks, m, min_bits)


def canonical_form(g: Graph) -> CanonicalKey:
    """Key shared by exactly the graphs isomorphic to g after dropping isolated vertices."""
    return _canonical_key_bits(g.n, g.edges)


def canonical_representative(key: CanonicalKey, n: int) -> Graph:
    """The graph on n vertices whose support is packed at 0..support-1 with the key's bitset."""
    if key.support > n:
        raise ValueError(f"key needs {key.support} vertices but n={n}")
    pt = pair_table(key.support) if key.support >= 2 else ()
    return make_graph(n, [pt[e] for e in iter_bits(key.bits)])


@lru_cache(maxsize=None)
def enumerate_graphs(n: int, m: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class with m edges on at most n vertices.

    Classes are counted up to isomorphism after dropping isolated vertices, and
    representatives come back sorted by canonical key.  Levels above half the
    edge slots are enumerated through their complements.
    """
    if n > MAX_ENUMERATION_VERTICES:
        raise BudgetError(f"enumeration is capped at n={MAX_ENUMERATION_VERTICES}, got {n}")
    slots = edge_slots(n)
    if not 0 <= m <= slots:
        raise ValueError(f"edge count {m} out of range for n={n}")
    mm = min(m, slots - m)
    if comb(slots, mm) > SUBSET_BUDGET:
        raise BudgetError(f"level (n={n}, m={m}) has {comb(slots, mm)} subsets; budget is {SUBSET_BUDGET}")
    full = (1 << slots) - 1
    flip = mm != m
    keys = set()
    for combo in combinations(range(slots), mm):
        bits = 0
        for k in combo:
            bits |= 1 << k
        if flip:
            bits ^= full
        keys.add(_canonical_key_bits(n, bits))
    return tuple(canonical_representative(key, n) for key in sorted(keys))


def connected_on_support(g: Graph) -> bool:
    """True when the non-isolated vertices form one connected component."""
    adj: dict[int, list[int]] = {}
    for i, j in g.edge_list():
        adj.setdefault(i, []).append(j)
        adj.setdefault(j, []).append(i)
    if not adj:
        return False
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)
