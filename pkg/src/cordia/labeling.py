"""Friendly vertex labelings and the three labeling predicates.

A vertex labeling assigns 0 or 1 to every vertex; it is friendly when the
label class sizes differ by at most one, counted over the non-isolated
vertices only.  Isolated vertices implicitly carry label 0 and stay outside
the balance count.  The optional ambient mode instead balances the labels
over the whole vertex set, which changes which splits of the support are
reachable on graphs carrying isolated vertices.

Three predicates are decided here: sum cordiality (edge label is the label
difference mod 2), product cordiality (edge label is the label product), and
(2,3)-orientability (some orientation of the edges makes the arc labels
f(head) - f(tail), valued in {-1, 0, +1}, 3-friendly).  The orientability
checker reduces each labeling to a same/cross edge count split; an
independent oracle that walks every orientation is kept alongside it.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import BudgetError
from .graphs import Graph, incident_masks, iter_bits, pair_table

ORACLE_EDGE_LIMIT = 20


class EdgeRule(Enum):
    SUM_MOD2 = "SumMod2"
    PRODUCT = "Product"
    SIGNED_DIFFERENCE = "SignedDifference"


class GraphProperty(Enum):
    SUM = "sum"
    PRODUCT = "product"
    ORIENT23 = "orient23"


@dataclass(frozen=True)
class VertexLabeling:
    """Label bitset over the vertices; bits outside the counted support are 0."""

    labels: int
    support: int

    def __post_init__(self) -> None:
        if self.labels & ~self.support:
            raise ValueError("labels set outside the support")

    def label_of(self, v: int) -> int:
        return self.labels >> v & 1


@dataclass(frozen=True)
class Orientation:
    """One bit per present edge, in edge-index order; a set bit reverses low->high."""

    bits: int
    edge_count: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < 1 << self.edge_count:
            raise ValueError("orientation bits out of range for the edge count")


@dataclass(frozen=True)
class Verdict:
    decision: bool
    labeling: VertexLabeling | None
    orientation: Orientation | None
    labelings_examined: int


def is_k_friendly(counts: Sequence[int], k: int) -> bool:
    """True when the k class counts pairwise differ by at most one."""
    vals = list(counts)
    if len(vals) != k:
        raise ValueError(f"expected {k} counts, got {len(vals)}")
    return max(vals) - min(vals) <= 1


def _popcount_values(s: int, size: int) -> Iterator[int]:
    # Gosper iteration: ascending integers with exactly `size` of the low s bits set.
    if size == 0:
        yield 0
        return
    x = (1 << size) - 1
    top = 1 << s
    while x < top:
        yield x
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


@lru_cache(maxsize=None)
def _friendly_label_bits(mask: int) -> tuple[int, ...]:
    """All friendly label bitsets over the vertices in mask, per popcount class ascending."""
    positions = list(iter_bits(mask))
    s = len(positions)
    sizes = (s // 2,) if s % 2 == 0 else (s // 2, s - s // 2)
    out = []
    for size in sizes:
        for compact in _popcount_values(s, size):
            v = 0
            for b in iter_bits(compact):
                v |= 1 << positions[b]
            out.append(v)
    return tuple(out)


@lru_cache(maxsize=None)
def _edge_masks(n: int, labels: int) -> tuple[int, int]:
    """(cross edges, both-endpoints-one edges) as slot masks for a label bitset."""
    cross = ones = 0
    for k, (i, j) in enumerate(pair_table(n)):
        a = labels >> i & 1
        b = labels >> j & 1
        if a != b:
            cross |= 1 << k
        elif a:
            ones |= 1 << k
    return cross, ones


def _support_of_bits(n: int, bits: int) -> int:
    mask = 0
    for v, inc in enumerate(incident_masks(n)):
        if bits & inc:
            mask |= 1 << v
    return mask


def _labeling_mask(g: Graph, ambient_friendly: bool) -> int:
    if g.edges == 0:
        raise ValueError("graph has no edges; labeling predicates are undefined on it")
    if ambient_friendly:
        return (1 << g.n) - 1
    return g.support_mask()


def friendly_vertex_labelings(g: Graph, ambient_friendly: bool = False) -> Iterator[VertexLabeling]:
    """All friendly labelings of g; ambient mode balances over all n vertices."""
    mask = _labeling_mask(g, ambient_friendly)
    for lab in _friendly_label_bits(mask):
        yield VertexLabeling(lab, mask)


def induced_edge_counts(g: Graph, labeling: VertexLabeling, rule: EdgeRule) -> tuple[int, int]:
    """(count of edges labeled 0, count labeled 1) under a symmetric edge rule."""
    if rule is EdgeRule.SIGNED_DIFFERENCE:
        raise ValueError("SignedDifference labels arcs, not edges; use check_23_cordial_digraph")
    cross, ones = _edge_masks(g.n, labeling.labels)
    m = g.edge_count
    c1 = (g.edges & (cross if rule is EdgeRule.SUM_MOD2 else ones)).bit_count()
    return m - c1, c1


def orientation_feasible(same_count: int, cross_count: int) -> tuple[int, int] | None:
    """First (d_plus, d_minus) split of the cross edges, scanning d_plus upward,
    for which {same_count, d_plus, d_minus} is 3-friendly; None when no split works."""
    for dp in range(cross_count + 1):
        dm = cross_count - dp
        if max(same_count, dp, dm) - min(same_count, dp, dm) <= 1:
            return dp, dm
    return None


@lru_cache(maxsize=None)
def _split_ok(s: int, d: int) -> bool:
    return orientation_feasible(s, d) is not None


@lru_cache(maxsize=None)
def _mask_table(n: int, support: int) -> tuple[tuple[int, int], ...]:
    """(cross, ones) slot-mask pairs for every friendly labeling of the support."""
    return tuple(_edge_masks(n, lab) for lab in _friendly_label_bits(support))


def _decide_bits(n: int, bits: int, prop: GraphProperty, support: int | None = None) -> bool:
    """Early-exit decision on a raw edge bitset; the bulk-search twin of check_property."""
    if support is None:
        support = _support_of_bits(n, bits)
    m = bits.bit_count()
    table = _mask_table(n, support)
    if prop is GraphProperty.SUM:
        for cross, _ in table:
            if -1 <= m - 2 * (bits & cross).bit_count() <= 1:
                return True
        return False
    if prop is GraphProperty.PRODUCT:
        for _, ones in table:
            if -1 <= m - 2 * (bits & ones).bit_count() <= 1:
                return True
        return False
    for cross, _ in table:
        d = (bits & cross).bit_count()
        # feasible split of d into d+ and d- around s = m - d
        if (d + 1) // 2 - 1 <= m - d <= d // 2 + 1:
            return True
    return False


def has_property(g: Graph, prop: GraphProperty) -> bool:
    """Decision only; agrees with check_property(g, prop).decision."""
    mask = _labeling_mask(g, False)
    return _decide_bits(g.n, g.edges, prop, mask)


def _scan_feasible(g: Graph, feasible, mask: int) -> tuple[int | None, int]:
    """Smallest feasible label bitset (as an integer) and the number examined."""
    labs = _friendly_label_bits(mask)
    best = None
    for lab in labs:
        if feasible(lab) and (best is None or lab < best):
            best = lab
    return best, len(labs)


def check_sum_cordial(g: Graph) -> Verdict:
    """Is some friendly labeling's mod-2 difference edge labeling 2-friendly?"""
    mask = _labeling_mask(g, False)
    m = g.edge_count

    def feasible(lab: int) -> bool:
        cross, _ = _edge_masks(g.n, lab)
        return -1 <= m - 2 * (g.edges & cross).bit_count() <= 1

    best, examined = _scan_feasible(g, feasible, mask)
    if best is None:
        return Verdict(False, None, None, examined)
    return Verdict(True, VertexLabeling(best, mask), None, examined)


def check_product_cordial(g: Graph) -> Verdict:
    """Is some friendly labeling's product edge labeling 2-friendly?"""
    mask = _labeling_mask(g, False)
    m = g.edge_count

    def feasible(lab: int) -> bool:
        _, ones = _edge_masks(g.n, lab)
        return -1 <= m - 2 * (g.edges & ones).bit_count() <= 1

    best, examined = _scan_feasible(g, feasible, mask)
    if best is None:
        return Verdict(False, None, None, examined)
    return Verdict(True, VertexLabeling(best, mask), None, examined)


def _witness_orientation(g: Graph, labels: int) -> Orientation:
    # First d_plus cross edges (edge-index order) point from the 0 end to the
    # 1 end, the rest the other way; same-label edges keep the low->high arc.
    m = g.edge_count
    d = (g.edges & _edge_masks(g.n, labels)[0]).bit_count()
    split = orientation_feasible(m - d, d)
    assert split is not None
    dp, _ = split
    bits = 0
    assigned = 0
    for r, (i, j) in enumerate(g.edge_list()):
        a = labels >> i & 1
        b = labels >> j & 1
        if a == b:
            continue
        reverse = (a == 1) if assigned < dp else (a == 0)
        if reverse:
            bits |= 1 << r
        assigned += 1
    return Orientation(bits, m)


def check_23_orientable(g: Graph, ambient_friendly: bool = False) -> Verdict:
    """Does some orientation of g admit a 3-friendly arc labeling over some
    friendly vertex labeling?  Decided per labeling through the same/cross
    count split rather than by walking orientations."""
    mask = _labeling_mask(g, ambient_friendly)
    m = g.edge_count

    def feasible(lab: int) -> bool:
        d = (g.edges & _edge_masks(g.n, lab)[0]).bit_count()
        return _split_ok(m - d, d)

    best, examined = _scan_feasible(g, feasible, mask)
    if best is None:
        return Verdict(False, None, None, examined)
    return Verdict(True, VertexLabeling(best, mask), _witness_orientation(g, best), examined)


def check_property(g: Graph, prop: GraphProperty) -> Verdict:
    if prop is GraphProperty.SUM:
        return check_sum_cordial(g)
    if prop is GraphProperty.PRODUCT:
        return check_product_cordial(g)
    return check_23_orientable(g)


def check_23_cordial_digraph(g: Graph, orientation: Orientation, labeling: VertexLabeling) -> bool:
    """Are the arc labels f(head) - f(tail) of the oriented graph 3-friendly?"""
    m = g.edge_count
    if orientation.edge_count != m:
        raise ValueError(f"orientation covers {orientation.edge_count} edges, graph has {m}")
    counts = [0, 0, 0]
    labels = labeling.labels
    for r, (i, j) in enumerate(g.edge_list()):
        a = labels >> i & 1
        b = labels >> j & 1
        arc = (a - b) if (orientation.bits >> r & 1) else (b - a)
        counts[arc + 1] += 1
    return max(counts) - min(counts) <= 1


@lru_cache(maxsize=None)
def _balanced_triples(m: int) -> frozenset[int]:
    # Packed (c_minus, c_zero, c_plus) triples summing to m with pairwise gap <= 1.
    out = set()
    for a in range(m + 1):
        for b in range(m + 1 - a):
            c = m - a - b
            if max(a, b, c) - min(a, b, c) <= 1:
                out.add(a | b << 7 | c << 14)
    return frozenset(out)


def _orientation_count_table(straight: list[int], flipped: list[int]) -> list[int]:
    # Packed arc-label counts for every orientation pattern of this edge block.
    enc = {-1: 1, 0: 1 << 7, 1: 1 << 14}
    table = [0] * (1 << len(straight))
    table[0] = sum(enc[v] for v in straight)
    delta = [enc[flipped[e]] - enc[straight[e]] for e in range(len(straight))]
    for o in range(1, len(table)):
        b = o.bit_length() - 1
        table[o] = table[o - (1 << b)] + delta[b]
    return table


def oracle_23_orientable(g: Graph, ambient_friendly: bool = False) -> Verdict:
    """Brute-force orientability: every orientation of every friendly labeling.

    Kept deliberately independent of the same/cross split reduction used by
    check_23_orientable; the two must agree on every decision.
    """
    m = g.edge_count
    if m > ORACLE_EDGE_LIMIT:
        raise BudgetError(f"oracle walks 2^m orientations; m={m} exceeds {ORACLE_EDGE_LIMIT}")
    mask = _labeling_mask(g, ambient_friendly)
    labs = _friendly_label_bits(mask)
    pairs = g.edge_list()
    valid = _balanced_triples(m)
    half = m // 2
    for li, lab in enumerate(labs):
        straight = [((lab >> j) & 1) - ((lab >> i) & 1) for i, j in pairs]
        flipped = [-v for v in straight]
        low = _orientation_count_table(straight[:half], flipped[:half])
        high = _orientation_count_table(straight[half:], flipped[half:])
        for ob, vb in enumerate(high):
            for oa, va in enumerate(low):
                if va + vb in valid:
                    bits = ob << half | oa
                    return Verdict(True, VertexLabeling(lab, mask), Orientation(bits, m), li + 1)
    return Verdict(False, None, None, len(labs))
