"""Linear operators on the semimodule of graphs with a fixed vertex set.

An operator is stored by its images of the single-edge graphs; linearity
makes that table the whole map: apply(op, G) is the union of the images of
G's edges, and the empty graph always maps to itself.  Strong preservation
of a graph class means membership of G and of apply(op, G) agree for every
graph, equivalently the operator preserves the class and its complement.

Verification works against precomputed membership tables over all 2^C(n,2)
graphs, which is why the strong-preservation scans stop at n = 6.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial, isqrt
from multiprocessing import get_context
from typing import NamedTuple

from .errors import BudgetError
from .graphs import Graph, edge_index, edge_slots, iter_bits, pair_table
from .labeling import GraphProperty, _decide_bits

EXHAUSTIVE_BIJECTION_BUDGET = 4_000_000
SURVIVOR_BUDGET = 100_000
MEMBERSHIP_VERTEX_LIMIT = 6
VERTEX_ONLY_LIMIT = 8
IMAGE_SCAN_LIMIT = 5


@dataclass(frozen=True)
class LinearOperator:
    """Edge-image table; images[k] is the image of the k-th single-edge graph."""

    n: int
    images: tuple[Graph, ...]

    def __post_init__(self) -> None:
        if len(self.images) != edge_slots(self.n):
            raise ValueError(f"expected {edge_slots(self.n)} images for n={self.n}")
        for im in self.images:
            if im.n != self.n:
                raise ValueError("image vertex count differs from the operator's")


@dataclass(frozen=True)
class PreserverVerdict:
    strongly_preserves: bool
    counterexample: Graph | None


class SampleFailure(NamedTuple):
    index: int
    edge_map: tuple[int, ...]
    counterexample: Graph


@dataclass(frozen=True)
class SearchReport:
    n: int
    property: GraphProperty
    mode: str
    candidates_checked: int
    operators: tuple[LinearOperator, ...]
    discarded_vertex_induced: int = 0
    failures: tuple[SampleFailure, ...] = field(default=(), repr=False)


def apply(op: LinearOperator, g: Graph) -> Graph:
    """Union of the edge images over g's edges; the empty graph maps to itself."""
    if g.n != op.n:
        raise ValueError(f"graph on {g.n} vertices fed to an operator on {op.n}")
    bits = 0
    for k in iter_bits(g.edges):
        bits |= op.images[k].edges
    return Graph(op.n, bits)


def identity_operator(n: int) -> LinearOperator:
    return LinearOperator(n, tuple(Graph(n, 1 << k) for k in range(edge_slots(n))))


def vertex_permutation_operator(perm: tuple[int, ...]) -> LinearOperator:
    """The operator induced by relabeling vertices through perm."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError("perm is not a permutation of the vertex set")
    images = tuple(
        Graph(n, 1 << edge_index(n, perm[i], perm[j])) for i, j in pair_table(n)
    )
    return LinearOperator(n, images)


def is_vertex_permutation(op: LinearOperator) -> tuple[int, ...] | None:
    """The inducing vertex permutation, or None.

    Every image must be a single edge, and the common endpoint of each
    vertex's star images pins the permutation, which is then verified slot
    by slot.
    """
    n = op.n
    pt = pair_table(n)
    targets = []
    for im in op.images:
        if im.edge_count != 1:
            return None
        targets.append(pt[im.edges.bit_length() - 1])
    if n == 1:
        return (0,)
    if n == 2:
        return (0, 1)
    sigma = []
    for v in range(n):
        common: set[int] | None = None
        for k, (i, j) in enumerate(pt):
            if v == i or v == j:
                ends = set(targets[k])
                common = ends if common is None else common & ends
        if common is None or len(common) != 1:
            return None
        sigma.append(common.pop())
    if sorted(sigma) != list(range(n)):
        return None
    for k, (i, j) in enumerate(pt):
        a, b = sigma[i], sigma[j]
        if (min(a, b), max(a, b)) != targets[k]:
            return None
    return tuple(sigma)


def is_nonsingular(op: LinearOperator) -> bool:
    """No single edge maps to the empty graph (by linearity, no graph does)."""
    return all(im.edges for im in op.images)


def _apply_bits(images_bits: list[int], g: int) -> int:
    out = 0
    while g:
        low = g & -g
        out |= images_bits[low.bit_length() - 1]
        g ^= low
    return out


def is_injective(op: LinearOperator) -> bool:
    if op.n > IMAGE_SCAN_LIMIT:
        raise BudgetError(f"injectivity scan walks all graphs; capped at n={IMAGE_SCAN_LIMIT}")
    images_bits = [im.edges for im in op.images]
    seen: set[int] = set()
    for g in range(1 << edge_slots(op.n)):
        img = _apply_bits(images_bits, g)
        if img in seen:
            return False
        seen.add(img)
    return True


def is_surjective(op: LinearOperator) -> bool:
    if op.n > IMAGE_SCAN_LIMIT:
        raise BudgetError(f"surjectivity scan walks all graphs; capped at n={IMAGE_SCAN_LIMIT}")
    images_bits = [im.edges for im in op.images]
    total = 1 << edge_slots(op.n)
    return len({_apply_bits(images_bits, g) for g in range(total)}) == total


def compose(outer: LinearOperator, inner: LinearOperator) -> LinearOperator:
    """The operator applying inner first, then outer."""
    if outer.n != inner.n:
        raise ValueError("operators live on different vertex counts")
    return LinearOperator(outer.n, tuple(apply(outer, im) for im in inner.images))


def idempotent_power(op: LinearOperator) -> tuple[LinearOperator, int]:
    """(op^d, d) for the least d >= 1 with op^d idempotent; exists since the
    powers of any map on a finite set eventually cycle."""
    power = op
    d = 1
    while True:
        if compose(power, power) == power:
            return power, d
        power = compose(op, power)
        d += 1


# ---------------------------------------------------------------------------
# membership tables and strong preservation

@lru_cache(maxsize=None)
def membership_bitmap(n: int, prop: GraphProperty) -> int:
    """Bit g set iff Graph(n, g) satisfies prop; the edgeless graph is a non-member."""
    if n > MEMBERSHIP_VERTEX_LIMIT:
        raise BudgetError(f"membership tables are kept only up to n={MEMBERSHIP_VERTEX_LIMIT}")
    slots = edge_slots(n)
    endpoint = [(1 << i) | (1 << j) for i, j in pair_table(n)]
    support = [0] * (1 << slots)
    bitmap = 0
    for g in range(1, 1 << slots):
        low = g & -g
        sup = support[g ^ low] | endpoint[low.bit_length() - 1]
        support[g] = sup
        if _decide_bits(n, g, prop, sup):
            bitmap |= 1 << g
    return bitmap


def strongly_preserves(op: LinearOperator, prop: GraphProperty) -> PreserverVerdict:
    """Full scan over all graphs; the counterexample, if any, is the first
    membership mismatch in ascending edge-bitset order."""
    if op.n > MEMBERSHIP_VERTEX_LIMIT:
        raise BudgetError(f"strong preservation scan is capped at n={MEMBERSHIP_VERTEX_LIMIT}")
    bm = membership_bitmap(op.n, prop)
    images_bits = [im.edges for im in op.images]
    for g in range(1 << edge_slots(op.n)):
        img = _apply_bits(images_bits, g)
        if (bm >> g ^ bm >> img) & 1:
            return PreserverVerdict(False, Graph(op.n, g))
    return PreserverVerdict(True, None)


@lru_cache(maxsize=None)
def _edge_list_table(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(iter_bits(g)) for g in range(1 << edge_slots(n)))


@lru_cache(maxsize=None)
def _scan_pairs(n: int, prop: GraphProperty) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """(graph bitset, edge list) pairs covering every nonempty graph, ordered so
    that bijection mismatches surface early: edge-count levels of mixed
    membership come first, non-members leading; uniform levels follow.  A
    bijection preserves edge counts, so uniform levels only matter for the
    final full verification of survivors."""
    bm = membership_bitmap(n, prop)
    levels: dict[int, tuple[list[int], list[int]]] = {}
    for g in range(1, 1 << edge_slots(n)):
        levels.setdefault(g.bit_count(), ([], []))[bm >> g & 1].append(g)
    mixed, uniform = [], []
    for m in sorted(levels):
        non, mem = levels[m]
        (mixed if non and mem else uniform).append((non, mem))
    order: list[int] = []
    for non, mem in mixed + uniform:
        order.extend(non)
        order.extend(mem)
    table = _edge_list_table(n)
    return tuple((g, table[g]) for g in order)


def _bijection_counterexample(pi, pairs, bm) -> int | None:
    for g, ks in pairs:
        img = 0
        for k in ks:
            img |= 1 << pi[k]
        if (bm >> g ^ bm >> img) & 1:
            return g
    return None


@lru_cache(maxsize=None)
def _vertex_edge_maps(n: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Vertex permutation -> induced edge-slot permutation."""
    pt = pair_table(n)
    return {
        sigma: tuple(edge_index(n, sigma[i], sigma[j]) for i, j in pt)
        for sigma in permutations(range(n))
    }


@lru_cache(maxsize=None)
def _vertex_induced_set(n: int) -> frozenset[tuple[int, ...]]:
    return frozenset(_vertex_edge_maps(n).values())


def _operator_from_edge_map(n: int, pi: tuple[int, ...]) -> LinearOperator:
    return LinearOperator(n, tuple(Graph(n, 1 << pi[k]) for k in range(edge_slots(n))))


def _search_exhaustive(n: int, prop: GraphProperty) -> SearchReport:
    slots = edge_slots(n)
    total = factorial(slots)
    if total > EXHAUSTIVE_BIJECTION_BUDGET:
        raise BudgetError(f"{total} edge bijections at n={n}; exhaustive mode stops at n=5")
    pairs = _scan_pairs(n, prop)
    bm = membership_bitmap(n, prop)
    passing = []
    for pi in permutations(range(slots)):
        for g, ks in pairs:
            img = 0
            for k in ks:
                img |= 1 << pi[k]
            if (bm >> g ^ bm >> img) & 1:
                break
        else:
            passing.append(pi)
            if len(passing) > SURVIVOR_BUDGET:
                # Happens when membership is edge-count determined and every
                # bijection passes vacuously; the result would not fit.
                raise BudgetError(
                    f"more than {SURVIVOR_BUDGET} strong preservers at n={n}; "
                    "the class is too permissive for an exhaustive report"
                )
    ops = tuple(_operator_from_edge_map(n, pi) for pi in passing)
    return SearchReport(n, prop, "exhaustive", total, ops)


def _sample_chunk(args) -> tuple[int, list, list]:
    n, prop_name, seed, lo, hi = args
    prop = GraphProperty(prop_name)
    pairs = _scan_pairs(n, prop)
    bm = membership_bitmap(n, prop)
    vset = _vertex_induced_set(n)
    slots = edge_slots(n)
    discarded = 0
    passing = []
    failures = []
    for i in range(lo, hi):
        # One stream per index keeps results independent of chunking.
        rng = random.Random(f"{seed}:{i}")
        pi = tuple(rng.sample(range(slots), slots))
        if pi in vset:
            discarded += 1
            continue
        cex = _bijection_counterexample(pi, pairs, bm)
        if cex is None:
            passing.append((i, pi))
        else:
            failures.append((i, pi, cex))
    return discarded, passing, failures


def _search_sampled(n: int, prop: GraphProperty, count: int, seed: int, workers: int) -> SearchReport:
    if n > MEMBERSHIP_VERTEX_LIMIT:
        raise BudgetError(f"sampled search is capped at n={MEMBERSHIP_VERTEX_LIMIT}")
    if count < 1:
        raise ValueError("sample count must be positive")
    membership_bitmap(n, prop)
    _scan_pairs(n, prop)
    _vertex_induced_set(n)
    if workers > 1:
        step = -(-count // workers)
        chunks = [(n, prop.value, seed, lo, min(lo + step, count)) for lo in range(0, count, step)]
        with get_context("fork").Pool(workers) as pool:
            parts = pool.map(_sample_chunk, chunks)
    else:
        parts = [_sample_chunk((n, prop.value, seed, 0, count))]
    discarded = sum(p[0] for p in parts)
    passing = [pi for p in parts for _, pi in p[1]]
    failures = tuple(
        SampleFailure(i, pi, Graph(n, cex)) for p in parts for i, pi, cex in p[2]
    )
    ops = tuple(_operator_from_edge_map(n, pi) for pi in passing)
    return SearchReport(n, prop, "sample", count, ops, discarded, failures)


def _search_vertex_only(n: int, prop: GraphProperty, count: int, seed: int) -> SearchReport:
    if n > VERTEX_ONLY_LIMIT:
        raise BudgetError(f"vertex-only mode is capped at n={VERTEX_ONLY_LIMIT}")
    maps = _vertex_edge_maps(n)
    total = len(maps)
    failures = []
    if n <= MEMBERSHIP_VERTEX_LIMIT:
        pairs = _scan_pairs(n, prop)
        bm = membership_bitmap(n, prop)
        passing = []
        for sigma, pi in maps.items():
            cex = _bijection_counterexample(pi, pairs, bm)
            if cex is None:
                passing.append(pi)
            else:
                failures.append(SampleFailure(-1, pi, Graph(n, cex)))
        ops = tuple(_operator_from_edge_map(n, pi) for pi in passing)
        return SearchReport(n, prop, "vertex-only", total, ops, failures=tuple(failures))
    # Beyond the membership-table limit the permutations are spot-checked on
    # seeded random graphs; operators are not materialized at this size.
    samples = []
    rng = random.Random(f"{seed}:graphs")
    slots = edge_slots(n)
    want = count if count > 0 else 32
    seen = set()
    while len(samples) < want:
        g = rng.getrandbits(slots)
        if g and g not in seen:
            seen.add(g)
            samples.append(g)
    member = {g: _decide_bits(n, g, prop) for g in samples}
    table = {g: tuple(iter_bits(g)) for g in samples}
    for sigma, pi in maps.items():
        for g in samples:
            img = 0
            for k in table[g]:
                img |= 1 << pi[k]
            if _decide_bits(n, img, prop) != member[g]:
                failures.append(SampleFailure(-1, pi, Graph(n, g)))
                break
    return SearchReport(n, prop, "vertex-only", total, (), failures=tuple(failures))


def search_strong_preservers(
    n: int,
    prop: GraphProperty,
    mode: str,
    count: int | None = None,
    seed: int = 0,
    workers: int = 1,
) -> SearchReport:
    """Hunt for strong preservers of a labeling property.

    Modes: "exhaustive" walks every edge bijection (n <= 5); "vertex-only"
    verifies all n! vertex permutations (exact tables to n = 6, seeded graph
    spot checks for n = 7, 8); "sample" draws `count` seeded random edge
    bijections, discards the vertex-induced ones, and records a membership
    counterexample for every failure.
    """
    if mode == "exhaustive":
        return _search_exhaustive(n, prop)
    if mode == "vertex-only":
        return _search_vertex_only(n, prop, count or 0, seed)
    if mode == "sample":
        if count is None:
            raise ValueError("sample mode needs a count")
        return _search_sampled(n, prop, count, seed, workers)
    raise ValueError(f"unknown search mode {mode!r}")


# ---------------------------------------------------------------------------
# text form of an operator table

def operator_table(op: LinearOperator) -> str:
    """Line k: space-separated edge indices of images[k], or '-' for the empty graph."""
    lines = []
    for im in op.images:
        lines.append(" ".join(str(k) for k in iter_bits(im.edges)) if im.edges else "-")
    return "\n".join(lines) + "\n"


def parse_operator_table(text: str) -> LinearOperator:
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    count = len(rows)
    n = (1 + isqrt(1 + 8 * count)) // 2
    if edge_slots(n) != count:
        raise ValueError(f"{count} lines is not C(n, 2) for any n")
    images = []
    for row in rows:
        bits = 0
        if row != "-":
            for tok in row.split():
                k = int(tok)
                if not 0 <= k < count:
                    raise ValueError(f"edge index {k} out of range for n={n}")
                bits |= 1 << k
        images.append(Graph(n, bits))
    return LinearOperator(n, tuple(images))
