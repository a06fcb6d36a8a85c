"""Shared brute-force oracles, deliberately written against the naive
definitions (explicit labelings, explicit orientation walks, explicit
permutation scans) rather than the package's bitset machinery."""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import factorial

from cordia import Graph


def support_vertices(g: Graph) -> list[int]:
    seen = set()
    for i, j in g.edge_list():
        seen.add(i)
        seen.add(j)
    return sorted(seen)


def brute_friendly_labelings(g: Graph):
    """Every friendly 0/1 labeling of the non-isolated vertices, as dicts."""
    sup = support_vertices(g)
    s = len(sup)
    sizes = {s // 2, s - s // 2}
    for size in sorted(sizes):
        for ones in combinations(sup, size):
            yield {v: (1 if v in ones else 0) for v in sup}


def brute_sum_cordial(g: Graph) -> bool:
    for lab in brute_friendly_labelings(g):
        c1 = sum(abs(lab[i] - lab[j]) for i, j in g.edge_list())
        if abs(g.edge_count - 2 * c1) <= 1:
            return True
    return False


def brute_product_cordial(g: Graph) -> bool:
    for lab in brute_friendly_labelings(g):
        c1 = sum(lab[i] * lab[j] for i, j in g.edge_list())
        if abs(g.edge_count - 2 * c1) <= 1:
            return True
    return False


def brute_23_orientable(g: Graph) -> bool:
    """Walk every orientation of every friendly labeling; m <= 12 or so only."""
    edges = g.edge_list()
    for lab in brute_friendly_labelings(g):
        for flips in product((0, 1), repeat=len(edges)):
            counts = {-1: 0, 0: 0, 1: 0}
            for (i, j), flip in zip(edges, flips):
                tail, head = (j, i) if flip else (i, j)
                counts[lab[head] - lab[tail]] += 1
            vals = list(counts.values())
            if max(vals) - min(vals) <= 1:
                return True
    return False


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    """Permutation scan on the larger ambient vertex set."""
    n = max(a.n, b.n)
    ea = {tuple(sorted(e)) for e in a.edge_list()}
    eb = {tuple(sorted(e)) for e in b.edge_list()}
    if len(ea) != len(eb):
        return False
    for perm in permutations(range(n)):
        if {tuple(sorted((perm[i], perm[j]))) for i, j in ea} == eb:
            return True
    return False


def burnside_graph_count(n: int) -> int:
    """Number of graphs on n labeled-up-to-iso vertices, by orbit counting:
    average over S_n of 2^(cycles of the induced action on vertex pairs)."""
    total = 0
    pairs = list(combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    for perm in permutations(range(n)):
        image = [index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs]
        seen = [False] * len(pairs)
        cycles = 0
        for k in range(len(pairs)):
            if not seen[k]:
                cycles += 1
                cur = k
                while not seen[cur]:
                    seen[cur] = True
                    cur = image[cur]
        total += 1 << cycles
    return total // factorial(n)
