"""Minimal vertex covers of cubic graphs and the matchings that make them good.

A cover C is *good* when every edge e lies in a matching S with C inside the
endpoint set of S. For a minimal cover of a cubic graph this is decided edge by
edge: delete the endpoints x, y of e, look at the odd components of what is
left of C, and ask for a *nice* matching, one edge per odd component, leaving
from an important vertex to a vertex outside the cover. That question is a
bipartite matching problem. When the answer is yes, the nice matching extends
to the full matching for e component by component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .graph_core import (
    BipartiteIncidence,
    Edge,
    Graph,
    edge,
    endpoints,
    is_matching,
    max_bipartite_matching,
)

ISOLATED, PATH, CYCLE = "isolated", "path", "cycle"


class ConstructionError(RuntimeError):
    """An internal construction produced something its own checks reject."""


def is_vertex_cover(graph: Graph, vertices: Iterable[int]) -> bool:
    s = set(vertices)
    return all(u in s or v in s for u, v in graph.edges)


def is_minimal_cover(graph: Graph, vertices: Iterable[int]) -> bool:
    s = set(vertices)
    if not is_vertex_cover(graph, s):
        return False
    # v is removable iff all of its neighbours are already in the cover
    return not any(all(w in s for w in graph.adjacency[v]) for v in s)


@dataclass(frozen=True)
class VertexCover:
    vertices: frozenset[int]
    host: Graph

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        if not is_vertex_cover(self.host, self.vertices):
            raise ValueError("not a vertex cover")

    @property
    def minimal(self) -> bool:
        return is_minimal_cover(self.host, self.vertices)

    def __iter__(self):
        return iter(sorted(self.vertices))

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.vertices

    def __repr__(self):
        return f"VertexCover({sorted(self.vertices)})"


def _vset(cover) -> frozenset[int]:
    return cover.vertices if isinstance(cover, VertexCover) else frozenset(cover)


def greedy_cover(graph: Graph) -> VertexCover:
    """Complement of the independent set grown greedily in increasing vertex id."""
    independent: set[int] = set()
    for v in range(graph.n):
        if not any(w in independent for w in graph.adjacency[v]):
            independent.add(v)
    return VertexCover(frozenset(range(graph.n)) - independent, graph)


def minimalize_cover(graph: Graph, cover, order: Iterable[int] | None = None) -> VertexCover:
    """Drop removable vertices until the cover is inclusion-minimal.

    Vertices are tried once each, lowest id first unless ``order`` is given.
    One pass suffices: removing a vertex never makes another one removable.
    """
    current = set(_vset(cover))
    if not is_vertex_cover(graph, current):
        raise ValueError("input is not a vertex cover")
    for v in (sorted(current) if order is None else list(order)):
        if v in current and all(w in current for w in graph.adjacency[v]):
            current.discard(v)
    return VertexCover(frozenset(current), graph)


# --------------------------------------------------------------------------
# components of G[U] when its maximum degree is at most 2


@dataclass(frozen=True)
class ComponentShape:
    kind: str
    vertices: tuple[int, ...]
    odd: bool
    important: frozenset[int]

    def __len__(self):
        return len(self.vertices)


def classify_components(graph: Graph, subset: Iterable[int]) -> list[ComponentShape]:
    """Split ``graph[subset]`` into isolated points, paths and cycles.

    Paths are listed from their lower-id endpoint, cycles from their lowest
    vertex towards its lower neighbour. Components come in order of their
    smallest vertex.
    """
    u = frozenset(subset)
    inner = {v: [w for w in graph.adjacency[v] if w in u] for v in u}
    bad = [v for v, ws in inner.items() if len(ws) > 2]
    if bad:
        raise ValueError(f"induced subgraph has degree > 2 at {sorted(bad)}")
    shapes = []
    for comp in graph.components(u):
        if len(comp) == 1:
            order = comp
            kind = ISOLATED
        else:
            ends = [v for v in comp if len(inner[v]) == 1]
            kind = PATH if ends else CYCLE
            start = min(ends) if ends else comp[0]
            order = [start]
            prev, cur = None, start
            while True:
                step = [w for w in sorted(inner[cur]) if w != prev]
                if not step or step[0] == start:
                    break
                prev, cur = cur, step[0]
                order.append(cur)
        odd = len(order) % 2 == 1
        if not odd:
            important = frozenset()
        elif kind == PATH:
            important = frozenset(order[0::2])
        else:
            important = frozenset(order)
        shapes.append(ComponentShape(kind, tuple(order), odd, important))
    return shapes


def delta(shape: ComponentShape) -> int:
    """Number of host edges leaving the important vertices of an odd component
    of a cubic graph: 3 for a point, 2k+1 for C_{2k+1}, k+3 for P_{2k+1}."""
    if not shape.odd:
        raise ValueError("delta is defined for odd components only")
    if shape.kind == ISOLATED:
        return 3
    if shape.kind == CYCLE:
        return len(shape)
    return (len(shape) - 1) // 2 + 3


# --------------------------------------------------------------------------
# nice matchings


@dataclass(frozen=True)
class NiceMatching:
    """One edge (x_H, y_H) per odd component H: x_H important in H, y_H outside U."""

    assignment: Mapping[ComponentShape, tuple[int, int]]

    @property
    def as_matching(self) -> frozenset[Edge]:
        return frozenset(edge(x, y) for x, y in self.assignment.values())


def nice_incidence(host: Graph, subset: Iterable[int],
                   excluded: Iterable[int] = ()) -> BipartiteIncidence:
    """Odd components of ``host[subset]`` against the vertices outside ``subset``.

    A component is joined to an outside vertex b when b is adjacent to one of
    its important vertices. Left nodes are the ``ComponentShape`` objects.
    """
    u = frozenset(subset)
    gone = frozenset(excluded)
    odd = tuple(s for s in classify_components(host, u) if s.odd)
    right = tuple(v for v in range(host.n) if v not in u and v not in gone)
    rset = set(right)
    adj = {s: frozenset(b for z in s.important for b in host.adjacency[z] if b in rset) for s in odd}
    return BipartiteIncidence(odd, right, adj)


def build_Fe(graph: Graph, cover, e: Edge) -> BipartiteIncidence:
    """The bipartite graph of odd components of G[C - {x,y}] against
    V - {x,y} - C for the edge e = {x, y}."""
    c = _vset(cover)
    if not graph.is_cubic():
        raise ValueError("host graph must be cubic")
    if not is_minimal_cover(graph, c):
        raise ValueError("cover must be a minimal vertex cover")
    x, y = e
    if not graph.has_edge(x, y):
        raise ValueError(f"{e} is not an edge")
    return nice_incidence(graph.remove_vertices((x, y)), c - {x, y}, excluded=(x, y))


def _extract_nice(host: Graph, inc: BipartiteIncidence, matched: Mapping) -> NiceMatching:
    assignment = {}
    for shape in inc.left:
        b = matched[shape]
        x = min(z for z in shape.important if host.has_edge(z, b))
        assignment[shape] = (x, b)
    return NiceMatching(assignment)


def find_nice_matching(host: Graph, subset: Iterable[int]) -> NiceMatching | None:
    """A nice matching for ``subset`` in ``host``, or None when none exists."""
    inc = nice_incidence(host, subset)
    matched = max_bipartite_matching(inc)
    if len(matched) < len(inc.left):
        return None
    return _extract_nice(host, inc, matched)


def _check_cover_args(graph: Graph, c: frozenset[int]) -> None:
    if not graph.is_cubic():
        raise ValueError("host graph must be cubic")
    if not is_minimal_cover(graph, c):
        raise ValueError("cover must be a minimal vertex cover")


def failing_edges(graph: Graph, cover) -> list[Edge]:
    """Edges for which no nice matching exists (empty iff the cover is good)."""
    c = _vset(cover)
    _check_cover_args(graph, c)
    return [e for e in graph.sorted_edges
            if find_nice_matching(graph.remove_vertices(e), c - set(e)) is None]


def is_good(graph: Graph, cover) -> bool:
    """Goodness of a minimal cover of a cubic graph via the nice-matching test."""
    c = _vset(cover)
    _check_cover_args(graph, c)
    return all(find_nice_matching(graph.remove_vertices(e), c - set(e)) is not None
               for e in graph.sorted_edges)


def complete_matching(graph: Graph, cover, e: Edge, nice: NiceMatching) -> frozenset[Edge]:
    """Extend a nice matching for C - {x,y} to a matching K with e in K and C in v(K)."""
    c = _vset(cover)
    x, y = e = edge(*e)
    if not graph.has_edge(x, y):
        raise ValueError(f"{e} is not an edge")
    rest = c - {x, y}
    host = graph.remove_vertices(e)
    shapes = classify_components(host, rest)
    odd = [s for s in shapes if s.odd]
    if set(nice.assignment) != set(odd):
        raise ValueError("nice matching must assign exactly the odd components")
    for s, (xh, yh) in nice.assignment.items():
        if xh not in s.important or yh in rest or yh in (x, y) or not graph.has_edge(xh, yh):
            raise ValueError(f"edge ({xh}, {yh}) is not nice for component {s.vertices}")
    n_edges = nice.as_matching
    if not is_matching(n_edges):
        raise ValueError("nice edges are not disjoint")
    hit = {s: xh for s, (xh, _) in nice.assignment.items()}

    m: list[Edge] = []
    for s in shapes:
        v = s.vertices
        if s.kind == ISOLATED:
            continue
        if not s.odd:
            m += [edge(v[i], v[i + 1]) for i in range(0, len(v), 2)]
        elif s.kind == CYCLE:
            j = v.index(hit[s])
            r = v[j:] + v[:j]
            m += [edge(r[i], r[i + 1]) for i in range(1, len(r) - 1, 2)]
        else:
            j = v.index(hit[s])  # even 0-based index, i.e. an odd vertex
            m += [edge(v[i], v[i + 1]) for i in range(0, j, 2)]
            m += [edge(v[i], v[i + 1]) for i in range(j + 1, len(v) - 1, 2)]

    k = frozenset([e]) | n_edges | frozenset(m)
    if not (is_matching(k) and c <= endpoints(k) and all(f in graph.edges for f in k)):
        raise ConstructionError(f"completion for edge {e} is not a covering matching")
    return k


def matching_for_edge(graph: Graph, cover, e: Edge) -> frozenset[Edge]:
    """A matching containing e whose endpoints include the whole (good) cover."""
    c = _vset(cover)
    _check_cover_args(graph, c)
    e = edge(*e)
    nice = find_nice_matching(graph.remove_vertices(e), c - set(e))
    if nice is None:
        raise ValueError(f"cover is not good: no nice matching for edge {e}")
    return complete_matching(graph, c, e, nice)
