"""Edge-count extremes for the three labeling properties.

Closed-form upper bounds on the edge count of a property-satisfying graph,
an exhaustive empirical maximum that certifies every level above its answer,
and the minimal failing isomorphism classes per edge count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import BudgetError
from .graphs import (
    SUBSET_BUDGET,
    CanonicalKey,
    Graph,
    canonical_representative,
    connected_on_support,
    edge_index,
    edge_slots,
    enumerate_graphs,
    incident_masks,
    iter_bits,
    make_graph,
    pair_table,
)
from .labeling import GraphProperty, _decide_bits

_EMPIRICAL_CAPS = {
    GraphProperty.SUM: 8,
    GraphProperty.PRODUCT: 8,
    GraphProperty.ORIENT23: 7,
}

MINIMAL_EDGE_CAP = 6


@dataclass(frozen=True)
class BoundReport:
    n: int
    property: GraphProperty
    bound: int
    alternate_bound: int | None = None
    empirical_max: int | None = None
    witness: Graph | None = None


def bound_sum_cordial(n: int) -> int:
    """Largest edge count a sum-cordial graph on n vertices can have."""
    if n < 4:
        raise ValueError("the closed form needs n >= 4")
    k = n // 2
    return 2 * k * k - 2 * k + 1 if n % 2 == 0 else 2 * k * k + 1


def bound_product_cordial(n: int) -> tuple[int, int]:
    """(stated bound, adjusted bound) for product-cordial edge counts.

    The two differ by one; small cases decide between them empirically, so
    both are reported everywhere.
    """
    if n < 4:
        raise ValueError("the closed form needs n >= 4")
    c = (n + 1) // 2
    return c * (c - 1), c * (c - 1) + 1


def bound_23_orientable(n: int) -> int:
    """Edge bound for (2,3)-orientable graphs on n >= 6 vertices."""
    if n < 6:
        raise ValueError("the closed form needs n >= 6")
    d = comb(n, 2) - comb((n + 1) // 2, 2) - comb(n // 2, 2)
    return d + (d + 1) // 2


def bounds_for(prop: GraphProperty, n: int) -> tuple[int, int | None]:
    if prop is GraphProperty.SUM:
        return bound_sum_cordial(n), None
    if prop is GraphProperty.PRODUCT:
        stated, adjusted = bound_product_cordial(n)
        return stated, adjusted
    return bound_23_orientable(n), None


def survey(prop: GraphProperty, n: int) -> BoundReport:
    """Closed-form bound plus exhaustive empirical maximum for one (prop, n) cell."""
    bound, alternate = bounds_for(prop, n)
    emp, witness = empirical_max_edges(prop, n)
    return BoundReport(n, prop, bound, alternate, emp, witness)


def empirical_max_edges(prop: GraphProperty, n: int) -> tuple[int, Graph]:
    """Largest m with a property-satisfying graph on at most n vertices, plus
    the satisfying class with the least canonical key at that m.

    Walks m downward from the complete graph.  A level is certified failing
    only after every labeled edge subset of that size has been checked.
    """
    cap = _EMPIRICAL_CAPS[prop]
    if n < 2:
        raise ValueError("need at least one potential edge")
    if n > cap:
        raise BudgetError(f"empirical search for {prop.value} is capped at n={cap}, got {n}")
    slots = edge_slots(n)
    full = (1 << slots) - 1
    inc = incident_masks(n)
    for m in range(slots, 0, -1):
        mm = min(m, slots - m)
        if comb(slots, mm) > SUBSET_BUDGET:
            raise BudgetError(
                f"level (n={n}, m={m}) has {comb(slots, mm)} subsets; budget is {SUBSET_BUDGET}"
            )
        flip = mm != m
        satisfying = []
        for combo in combinations(range(slots), mm):
            bits = 0
            for k in combo:
                bits |= 1 << k
            if flip:
                bits ^= full
            sup = 0
            for v in range(n):
                if bits & inc[v]:
                    sup |= 1 << v
            if _decide_bits(n, bits, prop, sup):
                satisfying.append((sup.bit_count(), bits, sup))
        if satisfying:
            # The satisfying set covers the full permutation orbit of each of
            # its classes, so the least canonical key can be read off the raw
            # bitsets of the minimal-support graphs sitting on a vertex prefix.
            size = min(row[0] for row in satisfying)
            prefix = (1 << size) - 1
            pt = pair_table(n)
            best = None
            for _, bits, sup in satisfying:
                if sup != prefix:
                    continue
                if size == n:
                    small = bits
                else:
                    small = 0
                    for k in iter_bits(bits):
                        i, j = pt[k]
                        small |= 1 << edge_index(size, i, j)
                if best is None or small < best:
                    best = small
            key = CanonicalKey(size, m, best)
            return m, canonical_representative(key, n)
    raise AssertionError("unreachable: a single edge satisfies every property")


@lru_cache(maxsize=None)
def _connected_classes(c: int) -> tuple[Graph, ...]:
    # Connected classes with c edges have at most c + 1 support vertices.
    return tuple(g for g in enumerate_graphs(c + 1, c) if connected_on_support(g))


def _assemble(parts: tuple[Graph, ...]) -> Graph:
    total = sum(p.support_size() for p in parts)
    edges: list[tuple[int, int]] = []
    offset = 0
    for p in parts:
        edges.extend((i + offset, j + offset) for i, j in p.edge_list())
        offset += p.support_size()
    return make_graph(total, edges)


@lru_cache(maxsize=None)
def _edge_count_classes(m: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class with exactly m edges.

    Built as multisets of connected classes, so supports up to 2m are covered
    even though direct enumeration stops at 9 ambient vertices.
    """
    catalog: list[tuple[int, Graph]] = []
    for c in range(1, m + 1):
        for rep in _connected_classes(c):
            catalog.append((c, rep))
    out: list[Graph] = []

    def grow(start: int, remaining: int, chosen: list[Graph]) -> None:
        if remaining == 0:
            out.append(_assemble(tuple(chosen)))
            return
        for idx in range(start, len(catalog)):
            c, rep = catalog[idx]
            if c <= remaining:
                chosen.append(rep)
                grow(idx, remaining - c, chosen)
                chosen.pop()

    grow(0, m, [])
    return tuple(out)


def minimal_noncordial(prop: GraphProperty, edge_cap: int) -> list[tuple[int, Graph]]:
    """Failing isomorphism classes per edge count, for all m up to edge_cap."""
    if edge_cap < 1:
        raise ValueError("edge cap must be positive")
    if edge_cap > MINIMAL_EDGE_CAP:
        raise BudgetError(f"edge cap above {MINIMAL_EDGE_CAP} exceeds the class-assembly budget")
    out = []
    for m in range(1, edge_cap + 1):
        failing = [g for g in _edge_count_classes(m) if not _decide_bits(g.n, g.edges, prop)]
        failing.sort(key=lambda g: (g.support_size(), g.edges))
        out.extend((m, g) for g in failing)
    return out
