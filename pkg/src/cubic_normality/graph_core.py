"""Simple undirected graphs, graph6/edgelist I/O and the elementary algorithms
the rest of the package is built on: bridges, bipartite matching with Hall
violators, line graphs, and a corpus of named and random cubic graphs.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from typing import Hashable, Iterable, Mapping

import numpy as np

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Base class for parse failures."""


class MalformedHeaderError(GraphFormatError):
    pass


class LoopError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


def edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form of the edge {u, v}."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; ``edges`` holds canonical ``(min, max)`` pairs.
    """

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for u, v in edges:
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            e = edge(u, v)
            if e in canon:
                raise DuplicateEdgeError(f"duplicate edge {e}")
            canon.add(e)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(canon))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in nbrs))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and edge(u, v) in self.edges

    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(a) == 3 for a in self.adjacency)

    def remove_vertices(self, removed: Iterable[int]) -> Graph:
        """Same vertex ids, with every edge touching ``removed`` deleted.

        This is how ``G[V - X]`` is represented: the removed vertices stay as
        isolated ids so that matchings and covers keep their labels.
        """
        gone = set(removed)
        return Graph(self.n, (e for e in self.edges if e[0] not in gone and e[1] not in gone))

    def remove_edges(self, removed: Iterable[Edge]) -> Graph:
        gone = {edge(*e) for e in removed}
        return Graph(self.n, self.edges - gone)

    def induced_degree(self, v: int, subset: frozenset[int] | set[int]) -> int:
        return sum(1 for w in self.adjacency[v] if w in subset)

    def components(self, subset: Iterable[int] | None = None) -> list[list[int]]:
        """Connected components of ``G[subset]`` (all of G by default), each sorted,
        listed by smallest vertex."""
        allowed = set(range(self.n)) if subset is None else set(subset)
        seen: set[int] = set()
        comps = []
        for s in sorted(allowed):
            if s in seen:
                continue
            seen.add(s)
            comp, stack = [], [s]
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if w in allowed and w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def complement(self) -> Graph:
        return Graph(self.n, ((u, v) for u in range(self.n) for v in range(u + 1, self.n)
                              if (u, v) not in self.edges))

    def relabel(self, mapping: Mapping[int, int], n: int | None = None) -> Graph:
        return Graph(len(mapping) if n is None else n,
                     ((mapping[u], mapping[v]) for u, v in self.edges))


# --------------------------------------------------------------------------
# matchings


def endpoints(edges: Iterable[Edge]) -> frozenset[int]:
    """The endpoint set v(S) of an edge set."""
    return frozenset(x for e in edges for x in e)


def is_matching(edges: Iterable[Edge]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


# --------------------------------------------------------------------------
# I/O


def _graph6_size(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise MalformedHeaderError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedHeaderError("truncated 6-byte size field")
        n = 0
        for c in data[2:8]:
            n = (n << 6) | (c - 63)
        return n, data[8:]
    if len(data) < 4:
        raise MalformedHeaderError("truncated 3-byte size field")
    n = 0
    for c in data[1:4]:
        n = (n << 6) | (c - 63)
    return n, data[4:]


def _parse_graph6(data: bytes) -> Graph:
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if any(c < 63 or c > 126 for c in data):
        raise MalformedHeaderError("graph6 bytes must lie in 63..126")
    n, body = _graph6_size(data)
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedHeaderError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = []
    for c in body:
        v = c - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[nbits:]):
        raise MalformedHeaderError("non-zero padding bits")
    return Graph(n, edges)


def _parse_edgelist(data: bytes) -> Graph:
    lines = [ln.split() for ln in data.decode().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise MalformedHeaderError("edgelist must start with a header line 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
    except ValueError as exc:
        raise MalformedHeaderError("non-integer header") from exc
    if n < 0 or m < 0 or len(lines) - 1 != m:
        raise MalformedHeaderError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    for row in lines[1:]:
        if len(row) != 2:
            raise MalformedHeaderError(f"bad edge line {' '.join(row)!r}")
        u, v = int(row[0]), int(row[1])
        if u < 0 or v < 0:
            raise VertexRangeError(f"negative vertex in ({u}, {v})")
        edges.append((u, v))
    return Graph(n, edges)


def parse_graph(data: bytes | str, format: str = "graph6") -> Graph:
    """Parse ``graph6`` or ``edgelist`` ("n m" header, then m lines "u v")."""
    if isinstance(data, str):
        data = data.encode()
    if format == "graph6":
        return _parse_graph6(data)
    if format == "edgelist":
        return _parse_edgelist(data)
    raise ValueError(f"unknown format {format!r}")


def to_graph6(graph: Graph) -> bytes:
    n = graph.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    else:
        head = bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    bits = [1 if (i, j) in graph.edges else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6))
    return head + body


def to_edgelist(graph: Graph) -> bytes:
    lines = [f"{graph.n} {graph.m}"] + [f"{u} {v}" for u, v in graph.sorted_edges]
    return ("\n".join(lines) + "\n").encode()


# --------------------------------------------------------------------------
# line graph


@dataclass(frozen=True)
class LineGraphMap:
    line: Graph
    vertex_of_edge: Mapping[Edge, int]
    edge_of_vertex: tuple[Edge, ...]


def line_graph(graph: Graph) -> LineGraphMap:
    """L(G) with line vertex i standing for the i-th edge in sorted order."""
    if not graph.edges:
        raise ValueError("line graph of an edgeless graph is empty")
    order = graph.sorted_edges
    index = {e: i for i, e in enumerate(order)}
    line_edges = []
    for v in range(graph.n):
        inc = [index[edge(v, w)] for w in graph.adjacency[v]]
        line_edges.extend((a, b) for k, a in enumerate(inc) for b in inc[k + 1:])
    return LineGraphMap(Graph(len(order), line_edges), index, order)


# --------------------------------------------------------------------------
# bridges


def bridges(graph: Graph) -> frozenset[Edge]:
    """Edges whose removal increases the number of components (iterative Tarjan)."""
    disc = [-1] * graph.n
    low = [0] * graph.n
    found = set()
    clock = 0
    for root in range(graph.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        stack = [(root, -1, iter(graph.adjacency[root]))]
        while stack:
            v, parent, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        found.add(edge(parent, v))
            elif disc[w] == -1:
                disc[w] = low[w] = clock
                clock += 1
                stack.append((w, v, iter(graph.adjacency[w])))
            elif w != parent:
                low[v] = min(low[v], disc[w])
    return frozenset(found)


# --------------------------------------------------------------------------
# bipartite matching


@dataclass(frozen=True)
class BipartiteIncidence:
    """Bipartite graph given by left ids, right ids and left -> right adjacency."""

    left: tuple[Hashable, ...]
    right: tuple[Hashable, ...]
    adj: Mapping[Hashable, frozenset]

    def __post_init__(self):
        rights = set(self.right)
        for a in self.left:
            if not self.adj.get(a, frozenset()) <= rights:
                raise ValueError(f"left node {a!r} adjacent to a non-right node")

    def neighbors(self, a) -> frozenset:
        return self.adj.get(a, frozenset())

    def neighborhood(self, xs: Iterable) -> frozenset:
        return frozenset().union(*(self.neighbors(a) for a in xs))


def max_bipartite_matching(inc: BipartiteIncidence) -> dict:
    """Maximum-cardinality matching as a ``left -> right`` dict (Hopcroft-Karp).

    Adjacency is scanned in the order of ``inc.right`` so results are deterministic.
    """
    rank = {b: i for i, b in enumerate(inc.right)}
    adj = {a: sorted(inc.neighbors(a), key=rank.__getitem__) for a in inc.left}
    match_l: dict = {}
    match_r: dict = {}
    inf = len(inc.left) + 1

    while True:
        dist = {}
        queue = deque()
        for a in inc.left:
            if a not in match_l:
                dist[a] = 0
                queue.append(a)
        limit = inf
        while queue:
            a = queue.popleft()
            if dist[a] >= limit:
                continue
            for b in adj[a]:
                a2 = match_r.get(b)
                if a2 is None:
                    limit = min(limit, dist[a] + 1)
                elif a2 not in dist:
                    dist[a2] = dist[a] + 1
                    queue.append(a2)
        if limit == inf:
            return match_l

        def augment(a) -> bool:
            for b in adj[a]:
                a2 = match_r.get(b)
                if (a2 is None and dist[a] + 1 == limit) or (
                        a2 is not None and dist.get(a2) == dist[a] + 1 and augment(a2)):
                    match_l[a] = b
                    match_r[b] = a
                    return True
            dist[a] = inf
            return False

        for a in inc.left:
            if a not in match_l:
                augment(a)


def hall_violator(inc: BipartiteIncidence, matching: Mapping | None = None) -> frozenset | None:
    """A left set X with |N(X)| < |X|, or None when some matching covers the left side.

    X is the set of left nodes reachable from unmatched left nodes by
    alternating paths (the Konig construction).
    """
    if matching is None:
        matching = max_bipartite_matching(inc)
    free = [a for a in inc.left if a not in matching]
    if not free:
        return None
    match_r = {b: a for a, b in matching.items()}
    seen = set(free)
    queue = deque(free)
    while queue:
        a = queue.popleft()
        for b in inc.neighbors(a):
            a2 = match_r[b]  # every neighbour is matched, else the matching was not maximum
            if a2 not in seen:
                seen.add(a2)
                queue.append(a2)
    return frozenset(seen)


# --------------------------------------------------------------------------
# corpus


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(k, ((i, (i + 1) % k) for i in range(k)))


def path_graph(k: int) -> Graph:
    if k < 1:
        raise ValueError("a path needs at least 1 vertex")
    return Graph(k, ((i, i + 1) for i in range(k - 1)))


def complete_graph(k: int) -> Graph:
    return Graph(k, ((i, j) for i in range(k) for j in range(i + 1, k)))


def flower_snark(k: int) -> Graph:
    """Flower snark J_k: 4k vertices, k odd >= 3.

    Vertex 4i is the star centre joined to 4i+1 (outer cycle), 4i+2 and 4i+3
    (which together form one cycle of length 2k).
    """
    if k < 3 or k % 2 == 0:
        raise ValueError("flower snark needs odd k >= 3")
    a = lambda i: 4 * (i % k)  # noqa: E731
    edges = []
    for i in range(k):
        edges += [(a(i), a(i) + 1), (a(i), a(i) + 2), (a(i), a(i) + 3), (a(i) + 1, a(i + 1) + 1)]
        if i < k - 1:
            edges += [(a(i) + 2, a(i + 1) + 2), (a(i) + 3, a(i + 1) + 3)]
    edges += [(a(k - 1) + 2, a(0) + 3), (a(k - 1) + 3, a(0) + 2)]
    return Graph(4 * k, edges)


def _petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def _tietze() -> Graph:
    # Petersen with vertex 0 replaced by the triangle {0, 10, 11}
    p = _petersen()
    edges = [e for e in p.edges if 0 not in e]
    edges += [(0, 10), (10, 11), (0, 11), (0, 1), (10, 4), (11, 5)]
    return Graph(12, edges)


# gadget used by cubic completion: a, b, c, d, w, arm u
GADGET_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5))


def gadget_chain(k: int) -> Graph:
    """k >= 2 pieces in a row joined by k - 1 bridges: a gadget body at each end
    and k - 2 diamonds (K4 minus an edge) in between."""
    if k < 2:
        raise ValueError("gadget chain needs at least 2 pieces")
    edges: list[Edge] = []
    # left gadget body: a b c d w = 0..4, w = 4 carries the outgoing bridge
    edges += [e for e in GADGET_EDGES if 5 not in e]
    tail = 4
    nxt = 5
    for _ in range(k - 2):
        a, b, c, d = range(nxt, nxt + 4)
        edges += [(a, b), (a, c), (a, d), (b, c), (b, d), (tail, c)]
        tail = d
        nxt += 4
    edges += [(u + nxt, v + nxt) for u, v in GADGET_EDGES if 5 not in (u, v)]
    edges.append((tail, nxt + 4))
    return Graph(nxt + 5, edges)


def one_arm_ladder(rungs: int, base: Graph | None = None) -> Graph:
    """A cubic graph with one arm whose body is 2-edge-connected.

    Vertex 0 carries the arm (the last vertex). It is followed by a ladder of
    ``rungs`` rungs; the last rung (or vertex 0 itself when ``rungs == 0``) is
    spliced into the lowest edge of ``base`` (K4 by default). The number of
    rungs decides which one-arm case the cover construction meets: 0 gives
    non-adjacent neighbours of the bridge endpoint, 1, 2 and 3 give the
    triangle-based cases in turn.
    """
    if not 0 <= rungs <= 3:
        raise ValueError("rungs must be in 0..3")
    base = base or complete_graph(4)
    x, w = base.sorted_edges[0]
    n_ladder = 1 + 2 * rungs
    shift = {v: v + n_ladder for v in range(base.n)}
    edges = [(shift[a], shift[b]) for a, b in base.edges if (a, b) != (x, w)]
    left = right = 0
    nxt = 1
    for _ in range(rungs):
        a, b = nxt, nxt + 1
        edges += [(left, a), (right, b), (a, b)]
        left, right = a, b
        nxt += 2
    edges += [(left, shift[x]), (right, shift[w])]
    arm = n_ladder + base.n
    edges.append((0, arm))
    return Graph(arm + 1, edges)


_NAMED = {
    "K4": lambda: complete_graph(4),
    "K33": lambda: Graph(6, [(i, j) for i in range(3) for j in range(3, 6)]),
    "prism": lambda: Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]),
    "cube": lambda: Graph(8, [(i, i ^ b) for i in range(8) for b in (1, 2, 4) if i < i ^ b]),
    "petersen": _petersen,
    "tietze": _tietze,
    "triangle": lambda: cycle_graph(3),
    "gadget": lambda: Graph(6, GADGET_EDGES),
    "gadget_completion_pair": lambda: gadget_chain(2),
}


_FAMILIES = {
    "C": cycle_graph,
    "P": path_graph,
    "J": flower_snark,
    "flower_snark": flower_snark,
    "gadget_chain": gadget_chain,
    "ladder": one_arm_ladder,
}


def named_graph(name: str, k: int | None = None) -> Graph:
    """Look up a corpus graph.

    Parametrised families accept either ``name`` plus ``k`` or an inline form:
    ``"C5"``, ``"C(5)"``, ``"P4"``, ``"flower_snark(5)"``, ``"J5"``, ``"gadget_chain(3)"``,
    ``"ladder(2)"``.
    """
    m = re.fullmatch(r"([A-Za-z_]+?)\(?(\d+)\)?", name)
    if m and m.group(1) in _FAMILIES and name not in _NAMED:
        name, k = m.group(1), int(m.group(2))
    if name in _NAMED:
        return _NAMED[name]()
    if name in _FAMILIES:
        if k is None:
            raise ValueError(f"{name} needs a size parameter")
        return _FAMILIES[name](k)
    raise KeyError(f"unknown graph {name!r}")


def random_cubic(n: int, seed: int = 0, max_tries: int = 100_000) -> Graph:
    """Uniform-pairing random connected simple cubic graph (full rejection)."""
    if n < 4 or n % 2:
        raise ValueError("cubic graphs need an even number of vertices >= 4")
    rng = np.random.default_rng(seed)
    points = np.repeat(np.arange(n), 3)
    for _ in range(max_tries):
        pairs = rng.permutation(points).reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        canon = {edge(int(u), int(v)) for u, v in pairs}
        if len(canon) != len(pairs):
            continue
        g = Graph(n, canon)
        if g.is_connected():
            return g
    raise RuntimeError(f"no simple connected pairing after {max_tries} tries")


def connected_cubic_graphs(n: int) -> list[Graph]:
    """All connected cubic graphs on n vertices, one per isomorphism class (n <= 12)."""
    if n not in (4, 6, 8, 10, 12):
        raise ValueError("stored lists cover n = 4, 6, 8, 10, 12")
    text = resources.files("cubic_normality.data").joinpath(f"cubic{n:02d}.g6").read_text()
    return [parse_graph(line) for line in text.split()]
