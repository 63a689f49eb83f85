"""Exponential deciders used to cross-check the polynomial pipeline on small graphs.

Normality is decided by searching clique coverings and stable-set coverings.
Only inclusion-maximal cliques and stable sets need to be considered (growing
a member keeps every intersection), and a clique family can only lose
compatible stable sets as it grows, so the search enumerates clique covers and
prunes as soon as the stable sets meeting every chosen clique stop covering
the vertex set.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from .covers import VertexCover, is_vertex_cover
from .graph_core import Edge, Graph, edge


class Decision(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag: bool) -> Decision:
        return cls.TRUE if flag else cls.FALSE

    def __str__(self):
        return self.value


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_vertices: int = 16
    max_millis: int = 60_000
    node_limit: int = 5_000_000

    def __post_init__(self):
        if min(self.max_vertices, self.max_millis, self.node_limit) <= 0:
            raise ValueError("budget values must be positive")


class _Meter:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.max_millis / 1000

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.node_limit:
            raise BudgetExceeded(f"node limit {self.budget.node_limit} reached")
        if self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"time limit {self.budget.max_millis} ms reached")


def _masks(graph: Graph) -> list[int]:
    return [sum(1 << w for w in graph.adjacency[v]) for v in range(graph.n)]


def maximal_cliques(graph: Graph) -> list[int]:
    """Bron-Kerbosch with pivoting; cliques as bitmasks, sorted."""
    nbr = _masks(graph)
    out: list[int] = []

    def bk(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot = max(_bits(p | x), key=lambda u: bin(p & nbr[u]).count("1"))
        for v in _bits(p & ~nbr[pivot]):
            bk(r | 1 << v, p & nbr[v], x & nbr[v])
            p &= ~(1 << v)
            x |= 1 << v

    if graph.n:
        bk(0, (1 << graph.n) - 1, 0)
    return sorted(out)


def maximal_stable_sets(graph: Graph) -> list[int]:
    return maximal_cliques(graph.complement())


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _cover_pair_exists(size: int, cliques: Sequence[int], stables: Sequence[int],
                       meter: _Meter) -> bool:
    """Is there a covering by ``cliques`` and one by ``stables`` (both bitmasks over
    ``size`` elements) with every chosen clique meeting every chosen stable set?"""
    full = (1 << size) - 1
    if not size:
        return True
    containing = [[c for c in cliques if c >> v & 1] for v in range(size)]

    def stable_union(chosen: list[int]) -> int:
        u = 0
        for s in stables:
            if all(s & c for c in chosen):
                u |= s
        return u

    def search(covered: int, chosen: list[int]) -> bool:
        meter.tick()
        if stable_union(chosen) != full:
            return False
        if covered == full:
            return True
        # branch on the uncovered element with the fewest candidate cliques
        v = min(_bits(full & ~covered), key=lambda i: len(containing[i]))
        for c in containing[v]:
            if search(covered | c, chosen + [c]):
                return True
        return False

    return search(0, [])


def brute_normal(graph: Graph, budget: SearchBudget | None = None) -> Decision:
    budget = budget or SearchBudget()
    if graph.n > budget.max_vertices:
        return Decision.UNKNOWN
    meter = _Meter(budget)
    try:
        return Decision.of(_cover_pair_exists(graph.n, maximal_cliques(graph),
                                              maximal_stable_sets(graph), meter))
    except BudgetExceeded:
        return Decision.UNKNOWN


def brute_normal_complement_consistency(graph: Graph, budget: SearchBudget | None = None) -> bool:
    a = brute_normal(graph, budget)
    b = brute_normal(graph.complement(), budget)
    if Decision.UNKNOWN in (a, b):
        raise BudgetExceeded("one side of the complement check was not decided")
    return a == b


def _matching_search(graph: Graph, used: frozenset[int], need: frozenset[int]) -> bool:
    todo = need - used
    if not todo:
        return True
    c = min(todo)
    for w in graph.adjacency[c]:
        if w not in used and _matching_search(graph, used | {c, w}, need):
            return True
    return False


def brute_good(graph: Graph, cover) -> bool:
    """Every edge lies in some matching whose endpoints contain the cover
    (exhaustive search per edge)."""
    c = cover.vertices if isinstance(cover, VertexCover) else frozenset(cover)
    if not is_vertex_cover(graph, c):
        return False
    return all(_matching_search(graph, frozenset(e), c) for e in graph.sorted_edges)


def enumerate_minimal_covers(graph: Graph) -> Iterator[VertexCover]:
    """Complements of the maximal independent sets, in bitmask order."""
    if graph.n > 16:
        raise ValueError("enumeration limited to 16 vertices")
    everything = frozenset(range(graph.n))
    for s in maximal_stable_sets(graph):
        yield VertexCover(everything - frozenset(_bits(s)), graph)


def brute_strongly_edge_normal(graph: Graph, budget: SearchBudget | None = None) -> Decision:
    budget = budget or SearchBudget()
    if graph.n > budget.max_vertices:
        return Decision.UNKNOWN
    deadline = time.monotonic() + budget.max_millis / 1000
    for c in enumerate_minimal_covers(graph):
        if brute_good(graph, c):
            return Decision.TRUE
        if time.monotonic() > deadline:
            return Decision.UNKNOWN
    return Decision.FALSE


def _maximal_matchings(graph: Graph) -> list[frozenset[Edge]]:
    edges = graph.sorted_edges
    found = []

    def grow(i: int, chosen: tuple[Edge, ...], used: frozenset[int]):
        if i == len(edges):
            if all(u in used or v in used for u, v in edges):
                found.append(frozenset(chosen))
            return
        u, v = edges[i]
        if u not in used and v not in used:
            grow(i + 1, chosen + (edges[i],), used | {u, v})
        grow(i + 1, chosen, used)

    grow(0, (), frozenset())
    return found


def brute_edge_normal(graph: Graph, budget: SearchBudget | None = None) -> Decision:
    """Normality of L(G), decided on G: stars and triangles against matchings."""
    budget = budget or SearchBudget()
    if graph.n > budget.max_vertices:
        return Decision.UNKNOWN
    edges = graph.sorted_edges
    if not edges:
        return Decision.TRUE
    index = {e: i for i, e in enumerate(edges)}
    groups = set()
    for v in range(graph.n):
        if graph.adjacency[v]:
            groups.add(sum(1 << index[edge(v, w)] for w in graph.adjacency[v]))
    for a, b, c in ((a, b, c) for a, b in edges for c in range(b + 1, graph.n)):
        if graph.has_edge(a, c) and graph.has_edge(b, c):
            groups.add((1 << index[(a, b)]) | (1 << index[(a, c)]) | (1 << index[(b, c)]))
    cliques = sorted(g for g in groups if not any(g != h and g & h == g for h in groups))
    stables = sorted(sum(1 << index[e] for e in m) for m in _maximal_matchings(graph))
    meter = _Meter(budget)
    try:
        return Decision.of(_cover_pair_exists(len(edges), cliques, stables, meter))
    except BudgetExceeded:
        return Decision.UNKNOWN
