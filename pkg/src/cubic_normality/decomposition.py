"""Bridged cubic graphs: pieces with arms, connection, cubic completion, and
the construction of good covers and covering matchings across bridges.

A *cubic graph with arms* has a nonempty body of degree-3 vertices and arms of
degree 1 hanging off the body. Cutting a graph along all of its bridges gives
pieces of this kind whose bodies are 2-edge-connected; a good cover is found
for each piece through its cubic completion (every arm replaced by a copy of
the 6-vertex gadget), pulled back, and the piece covers are glued back.

The module also extracts the obstruction ("wrong set") that a minimal cover
which is not good must exhibit, and evaluates the four configurations a wrong
set can never contain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import covers
from .covers import ConstructionError, VertexCover
from .graph_core import (
    GADGET_EDGES,
    Edge,
    Graph,
    bridges,
    edge,
    endpoints,
    hall_violator,
    is_matching,
    max_bipartite_matching,
)

# gadget vertex roles, in GADGET_EDGES numbering
GA, GB, GC, GD, GW, GU = range(6)


@dataclass(frozen=True)
class CubicWithArms:
    """``labels[i]`` is the id vertex i had in the graph this piece was cut from."""

    graph: Graph
    body: frozenset[int]
    arms: frozenset[int]
    labels: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.graph.n)))

    def arm_neighbor(self, arm: int) -> int:
        return self.graph.adjacency[arm][0]


def as_cubic_with_arms(graph: Graph, labels: Sequence[int] = ()) -> CubicWithArms:
    body, arms = set(), set()
    for v in range(graph.n):
        d = graph.degree(v)
        if d == 3:
            body.add(v)
        elif d == 1:
            arms.add(v)
        else:
            raise ValueError(f"vertex {v} has degree {d}, expected 1 or 3")
    if not body:
        raise ValueError("body is empty: no vertex of degree 3")
    for a in arms:
        if graph.adjacency[a][0] not in body:
            raise ValueError(f"arm {a} is attached to another arm")
    return CubicWithArms(graph, frozenset(body), frozenset(arms), tuple(labels))


def gadget() -> CubicWithArms:
    """K4 minus the edge cd, an apex w joined to c and d, and the arm u at w.

    Its canonical cover {a, b, w} induces the single edge ab plus the isolated
    apex, so the P2 component avoids the bridge endpoint.
    """
    return as_cubic_with_arms(Graph(6, GADGET_EDGES))


GADGET_CANONICAL_COVER = frozenset({GA, GB, GW})


def connect(g1: CubicWithArms, v1: int, g2: CubicWithArms, v2: int) -> CubicWithArms:
    """Delete arm v1 of g1 and arm v2 of g2 and join their former neighbours.

    The result numbers V1 - {v1} first (in increasing order), then V2 - {v2}.
    """
    if v1 not in g1.arms or v2 not in g2.arms:
        raise ValueError("connection points must be arms")
    keep1 = [v for v in range(g1.graph.n) if v != v1]
    keep2 = [v for v in range(g2.graph.n) if v != v2]
    m1 = {v: i for i, v in enumerate(keep1)}
    m2 = {v: i + len(keep1) for i, v in enumerate(keep2)}
    edges = [(m1[a], m1[b]) for a, b in g1.graph.edges if v1 not in (a, b)]
    edges += [(m2[a], m2[b]) for a, b in g2.graph.edges if v2 not in (a, b)]
    edges.append((m1[g1.arm_neighbor(v1)], m2[g2.arm_neighbor(v2)]))
    return as_cubic_with_arms(Graph(len(keep1) + len(keep2), edges))


# --------------------------------------------------------------------------
# decomposition along bridges


class Link(NamedTuple):
    """A bridge of the input seen from both sides: ``arm_a`` is an arm of piece
    ``piece_a`` and the body endpoint of the bridge in ``piece_b``; vice versa
    for ``arm_b``. All ids are vertex ids of the input graph."""

    piece_a: int
    arm_a: int
    piece_b: int
    arm_b: int

    @property
    def bridge(self) -> Edge:
        return edge(self.arm_a, self.arm_b)


@dataclass(frozen=True)
class DecompositionTree:
    n: int
    pieces: tuple[CubicWithArms, ...]
    links: tuple[Link, ...]
    piece_of: Mapping[int, int] = field(repr=False)  # body vertex -> piece index


def _check_arms_graph(graph: Graph) -> None:
    if not graph.is_connected():
        raise ValueError("graph must be connected")
    bad = [v for v in range(graph.n) if graph.degree(v) not in (1, 3)]
    if bad:
        raise ValueError(f"vertices {bad} have degree outside {{1, 3}}")


def decompose(graph: Graph) -> DecompositionTree:
    _check_arms_graph(graph)
    cut = bridges(graph)
    bodies = [c for c in graph.remove_edges(cut).components() if graph.degree(c[0]) == 3]
    if not bodies:
        raise ValueError("graph has no vertex of degree 3")
    piece_of = {v: i for i, c in enumerate(bodies) for v in c}
    pieces = []
    for body in bodies:
        bset = set(body)
        arms = sorted({w for v in body for w in graph.adjacency[v] if w not in bset})
        labels = sorted(bset | set(arms))
        local = {v: i for i, v in enumerate(labels)}
        edges = [(local[u], local[v]) for u, v in graph.edges if u in bset or v in bset]
        g = Graph(len(labels), edges)
        pieces.append(CubicWithArms(g, frozenset(local[v] for v in body),
                                    frozenset(local[a] for a in arms), tuple(labels)))
    links = []
    for u, v in sorted(cut):
        if graph.degree(u) == 3 and graph.degree(v) == 3:
            links.append(Link(piece_of[v], u, piece_of[u], v))
    return DecompositionTree(graph.n, tuple(pieces), tuple(links), piece_of)


def reassemble(tree: DecompositionTree) -> Graph:
    """Glue the pieces back along their links (the inverse of ``decompose``)."""
    edges = set()
    for p in tree.pieces:
        edges |= {edge(p.labels[u], p.labels[v]) for u, v in p.graph.edges}
    return Graph(tree.n, edges)


# --------------------------------------------------------------------------
# cubic completion


@dataclass(frozen=True)
class Completion:
    """``vertex_map`` sends body vertices to their copies and each arm to the apex
    of the gadget replacing it. ``gadgets[i]`` lists (a, b, c, d, w) for the i-th
    arm in increasing order."""

    graph: Graph
    vertex_map: Mapping[int, int]
    gadgets: tuple[tuple[int, int, int, int, int], ...]

    def __iter__(self):
        # unpacks as (graph, vertex_map)
        return iter((self.graph, self.vertex_map))


def cubic_completion(piece: CubicWithArms) -> Completion:
    body = sorted(piece.body)
    vmap = {v: i for i, v in enumerate(body)}
    nxt = len(body)
    gadgets = []
    for arm in sorted(piece.arms):
        block = tuple(range(nxt, nxt + 5))
        gadgets.append(block)
        vmap[arm] = block[GW]
        nxt += 5
    edges = [(vmap[u], vmap[v]) for u, v in piece.graph.edges]
    for block in gadgets:
        edges += [(block[u], block[v]) for u, v in GADGET_EDGES if GU not in (u, v)]
    return Completion(Graph(nxt, edges), vmap, tuple(gadgets))


def pull_back_cover(piece: CubicWithArms, completion: Completion, cover) -> VertexCover:
    """(C' restricted to the piece) plus every arm neighbour, minus the arms."""
    c = cover.vertices if isinstance(cover, VertexCover) else frozenset(cover)
    if not covers.is_vertex_cover(completion.graph, c):
        raise ValueError("not a vertex cover of the completion")
    pulled = {v for v in piece.body if completion.vertex_map[v] in c}
    pulled |= {piece.arm_neighbor(a) for a in piece.arms}
    return VertexCover(frozenset(pulled), piece.graph)


# --------------------------------------------------------------------------
# good covers of pieces


def _cover_from_stable(graph: Graph, stable: Iterable[int]) -> frozenset[int]:
    """Complement of the maximal independent set grown from ``stable`` in id order."""
    ind = set(stable)
    for v in range(graph.n):
        if v not in ind and not any(w in ind for w in graph.adjacency[v]):
            ind.add(v)
    return frozenset(range(graph.n)) - ind


def _third(graph: Graph, v: int, *not_these: int) -> int | None:
    rest = [w for w in graph.adjacency[v] if w not in not_these]
    return rest[0] if len(rest) == 1 else None


def one_arm_cases(graph: Graph, p: int, apex: int) -> list[tuple[str, frozenset, frozenset]]:
    """Constraint sets (label, forced out, forced in) for a completion with one gadget.

    ``p`` is the body endpoint of the gadget bridge and ``apex`` the gadget side.
    Cases are returned in order a, b, c, d; only those whose condition holds are
    listed. Each forced-out set is stable and forces the forced-in set.
    """
    q, r = sorted(w for w in graph.adjacency[p] if w != apex)
    adj = graph.has_edge
    if not adj(q, r):
        return [("a", frozenset({q, r}), frozenset({p}))]
    s, t = _third(graph, r, p, q), _third(graph, q, p, r)
    if s is None or t is None:
        return []
    if s != t and not adj(s, t):
        return [("b", frozenset({p, s, t}), frozenset({q, r}))]
    if s == t:
        return []
    u, v = _third(graph, s, r, t), _third(graph, t, q, s)
    if u is None or v is None:
        return []
    if u == v or not adj(u, v):
        return [("c", frozenset({r, u, v}), frozenset({p, q, s, t}))]
    w, x = _third(graph, v, t, u), _third(graph, u, s, v)
    if w is not None and x is not None and w != x:
        # r, s, t, v stay in the cover; the cover component of p is the path p r s t v
        return [("d", frozenset({q, u, w}), frozenset({p, r, s, t, v}))]
    return []


@dataclass(frozen=True)
class PieceSolution:
    piece: CubicWithArms
    completion: Completion
    completion_cover: frozenset[int]
    cover: VertexCover
    case: str

    def matching_for_edge(self, e: Edge) -> frozenset[Edge]:
        """Matching of the piece containing e and covering ``cover`` (local ids)."""
        e = edge(*e)
        if e not in self.piece.graph.edges:
            raise ValueError(f"{e} is not an edge of the piece")
        vmap = self.completion.vertex_map
        back = {c: v for v, c in vmap.items()}
        s = covers.matching_for_edge(self.completion.graph, self.completion_cover,
                                     (vmap[e[0]], vmap[e[1]]))
        kept = {edge(back[a], back[b]) for a, b in s if a in back and b in back}
        used = endpoints(kept)
        for arm in self.piece.arms:
            w = self.piece.arm_neighbor(arm)
            if w not in used:
                kept.add(edge(arm, w))
        result = frozenset(kept)
        if not (e in result and is_matching(result) and self.cover.vertices <= endpoints(result)):
            raise ConstructionError(f"pulled-back matching for {e} is invalid")
        return result


def _gadget_pattern(completion: Completion) -> tuple[frozenset, frozenset]:
    out = frozenset(b[i] for b in completion.gadgets for i in (GC, GD))
    inn = frozenset(b[i] for b in completion.gadgets for i in (GA, GB, GW))
    return out, inn


def _fallback_covers(completion: Completion, limit: int = 200_000):
    """Minimal covers agreeing with the gadget pattern, by exhaustive extension."""
    g = completion.graph
    out, inn = _gadget_pattern(completion)
    free = [v for v in range(g.n) if v not in out and v not in inn]
    nodes = 0

    def extend(i, ind):
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            return
        if i == len(free):
            c = frozenset(range(g.n)) - ind
            if inn <= c and covers.is_minimal_cover(g, c):
                yield c
            return
        v = free[i]
        if not any(w in ind for w in g.adjacency[v]):
            yield from extend(i + 1, ind | {v})
        yield from extend(i + 1, ind)

    yield from extend(0, frozenset(out))


def solve_piece(piece: CubicWithArms) -> PieceSolution:
    """Good cover of a piece with a 2-edge-connected body, with the data needed
    to produce its covering matchings."""
    comp = cubic_completion(piece)
    g = comp.graph
    candidates: list[tuple[str, frozenset, frozenset]] = []
    if not piece.arms:
        candidates.append(("bridgeless", frozenset(), frozenset()))
    else:
        out, inn = _gadget_pattern(comp)
        if len(piece.arms) >= 2:
            candidates.append(("multi-arm", out, inn))
        else:
            p = comp.vertex_map[piece.arm_neighbor(next(iter(piece.arms)))]
            apex = comp.gadgets[0][GW]
            for label, o, i in one_arm_cases(g, p, apex):
                candidates.append((label, out | o, inn | i))

    def accept(c):
        return covers.is_minimal_cover(g, c) and covers.is_good(g, c)

    for label, out, inn in candidates:
        c = _cover_from_stable(g, out)
        if inn <= c and accept(c):
            return PieceSolution(piece, comp, c, pull_back_cover(piece, comp, c), label)
    for c in _fallback_covers(comp):
        if accept(c):
            return PieceSolution(piece, comp, c, pull_back_cover(piece, comp, c), "fallback")
    raise ConstructionError("no good cover found for piece")


def good_cover_piece(piece: CubicWithArms) -> VertexCover:
    return solve_piece(piece).cover


def merge_covers(tree: DecompositionTree, piece_covers: Sequence) -> VertexCover:
    """Union of the piece covers, translated to the ids of the input graph."""
    if len(piece_covers) != len(tree.pieces):
        raise ValueError("one cover per piece expected")
    merged = set()
    for piece, c in zip(tree.pieces, piece_covers):
        vs = c.vertices if isinstance(c, VertexCover) else frozenset(c)
        if not vs <= piece.body:
            raise ValueError("piece covers must lie inside the piece bodies")
        merged |= {piece.labels[v] for v in vs}
    host = reassemble(tree)
    return VertexCover(frozenset(merged), host)


# --------------------------------------------------------------------------
# whole graphs


@dataclass(frozen=True)
class CoverSolution:
    """A good cover of a connected graph with degrees in {1, 3}, plus the piece
    solutions used to build covering matchings for its edges."""

    graph: Graph
    cover: VertexCover
    tree: DecompositionTree | None
    pieces: tuple[PieceSolution, ...]

    def matching_for_edge(self, f: Edge) -> frozenset[Edge]:
        if self.tree is None:  # a single edge
            return frozenset([edge(*f)])
        return matching_for_edge_bridged(self.graph, self.cover, self.tree, f, self.pieces)


def _local_edge(piece: CubicWithArms, e: Edge) -> Edge:
    index = {v: i for i, v in enumerate(piece.labels)}
    return edge(index[e[0]], index[e[1]])


def _global_edges(piece: CubicWithArms, es: Iterable[Edge]) -> set[Edge]:
    return {edge(piece.labels[a], piece.labels[b]) for a, b in es}


def matching_for_edge_bridged(graph: Graph, cover, tree: DecompositionTree, f: Edge,
                              solutions: Sequence[PieceSolution] | None = None) -> frozenset[Edge]:
    """Matching S of ``graph`` with f in S and the merged cover inside v(S).

    Solve in the piece of f, then walk the link tree: a bridge already in the
    matching is reused on the far side; otherwise the far side is solved for an
    edge at the bridge endpoint that avoids the bridge.
    """
    if solutions is None:
        solutions = tuple(solve_piece(p) for p in tree.pieces)
    c = cover.vertices if isinstance(cover, VertexCover) else frozenset(cover)
    f = edge(*f)
    if f not in graph.edges:
        raise ValueError(f"{f} is not an edge")
    # a bridge belongs to both of its pieces; take the lower index
    start = min(tree.piece_of[x] for x in f if x in tree.piece_of)

    nbrs: dict[int, list[Link]] = {}
    for link in tree.links:
        nbrs.setdefault(link.piece_a, []).append(link)
        nbrs.setdefault(link.piece_b, []).append(Link(link.piece_b, link.arm_b, link.piece_a, link.arm_a))

    result: set[Edge] = set()
    seen = {start}
    stack = [(start, f)]
    while stack:
        i, g = stack.pop()
        piece = tree.pieces[i]
        part = _global_edges(piece, solutions[i].matching_for_edge(_local_edge(piece, g)))
        result |= part
        for link in sorted(nbrs.get(i, []), key=lambda l: l.piece_b, reverse=True):
            j = link.piece_b
            if j in seen:
                continue
            seen.add(j)
            b = link.bridge
            if b in part:
                stack.append((j, b))
            else:
                # the far endpoint has two more edges inside piece j
                far = link.arm_a
                other = min(edge(far, w) for w in graph.adjacency[far] if w != link.arm_b)
                stack.append((j, other))
    s = frozenset(result)
    if not (f in s and is_matching(s) and c <= endpoints(s)):
        raise ConstructionError(f"bridged matching for {f} is invalid")
    return s


def solve(graph: Graph, verify: bool = True) -> CoverSolution:
    """Decompose, solve each piece, and merge."""
    _check_arms_graph(graph)
    if all(d == 1 for d in graph.degrees()):  # P2
        sol = CoverSolution(graph, VertexCover(frozenset({0}), graph), None, ())
    else:
        tree = decompose(graph)
        pieces = tuple(solve_piece(p) for p in tree.pieces)
        cover = merge_covers(tree, [s.cover for s in pieces])
        sol = CoverSolution(graph, VertexCover(cover.vertices, graph), tree, pieces)
    if verify:
        _post_verify(sol)
    return sol


def _post_verify(sol: CoverSolution) -> None:
    g = sol.graph
    if g.n <= 12:
        from .oracle import brute_good
        ok = brute_good(g, sol.cover)
    else:
        ok = True
        for f in g.sorted_edges:
            s = sol.matching_for_edge(f)
            ok = ok and f in s and is_matching(s) and sol.cover.vertices <= endpoints(s)
    if not ok:
        raise ConstructionError("assembled cover failed verification")


def good_vertex_cover(graph: Graph) -> VertexCover:
    return solve(graph).cover


# --------------------------------------------------------------------------
# wrong sets


@dataclass(frozen=True)
class WrongSet:
    """Obstruction to goodness: W = U + Y + Z with a single edge leaving W.

    ``bridge`` is ordered (w, v) with w inside W. ``stats`` holds the sums of
    delta, epsilon, p and t over the Hall violator ``X`` (odd components).
    """

    W: frozenset[int]
    Z: frozenset[int]
    Y: frozenset[int]
    U: Edge
    bridge: tuple[int, int]
    type: str
    stats: tuple[int, int, int, int]
    X: tuple = ()


def exit_edges(graph: Graph, subset: Iterable[int]) -> list[Edge]:
    s = set(subset)
    return sorted(e for e in graph.edges if (e[0] in s) != (e[1] in s))


def _edges_between(graph: Graph, a: Iterable[int], b: Iterable[int]) -> int:
    bs = set(b)
    return sum(1 for v in a for w in graph.adjacency[v] if w in bs)


def find_wrong_set(graph: Graph, cover) -> WrongSet | None:
    """The wrong set built from the first edge that has no nice matching, or None."""
    c = cover.vertices if isinstance(cover, VertexCover) else frozenset(cover)
    for e in graph.sorted_edges:
        inc = covers.build_Fe(graph, c, e)
        matched = max_bipartite_matching(inc)
        violator = hall_violator(inc, matched)
        if violator is None:
            continue
        return _wrong_set_from(graph, c, e, inc, violator)
    return None


def _wrong_set_from(graph, c, e, inc, violator) -> WrongSet:
    x, y = e
    xs = tuple(s for s in inc.left if s in violator)
    nx_ = inc.neighborhood(xs)
    b_side = set(inc.right)
    d_sum = eps = p = t = 0
    for a in xs:
        d_sum += covers.delta(a)
        eps += _edges_between(graph, a.important, (x, y))
        counts: dict[int, int] = {}
        for z in a.important:
            for b in graph.adjacency[z]:
                if b in b_side:
                    counts[b] = counts.get(b, 0) + 1
        p += sum(1 for k in counts.values() if k == 2)
        t += sum(1 for k in counts.values() if k == 3)
    z_set = frozenset(v for a in xs for v in a.vertices)
    w_set = frozenset({x, y}) | nx_ | z_set
    out = exit_edges(graph, w_set)

    problems = []
    if len(xs) - 1 != len(nx_):
        problems.append(f"|X|-1 != |N(X)| ({len(xs)}, {len(nx_)})")
    if not 3 <= eps <= 4:
        problems.append(f"epsilon sum {eps} outside [3, 4]")
    if not 3 * len(xs) <= d_sum <= 3 * len(xs) + 1:
        problems.append(f"delta sum {d_sum} outside [3|X|, 3|X|+1]")
    if len(out) != 1:
        problems.append(f"{len(out)} edges leave W")
    if problems:
        raise ConstructionError("; ".join(problems))
    a_, b_ = out[0]
    bridge = (a_, b_) if a_ in w_set else (b_, a_)
    w = bridge[0]
    u_z = _edges_between(graph, (x, y), z_set)
    kinds = sorted(len(s) for s in xs if s.kind == covers.PATH)
    small = all(len(s) in (1, 3) and s.kind != covers.PATH for s in xs)
    if eps == 3:
        kind = "T1"
        ok = u_z == 3 and small and w in (x, y)
    elif d_sum == 3 * len(xs):
        kind = "T2a"
        ok = u_z == 4 and small and w in nx_
    else:
        kind = "T2b"
        p3 = [s for s in xs if s.kind == covers.PATH]
        ok = u_z == 4 and kinds == [3] and w == p3[0].vertices[1]
    if not (ok and z_set <= c and not (nx_ & c) and graph.has_edge(x, y)
            and edge(*bridge) in bridges(graph)):
        raise ConstructionError(f"wrong set at edge {e} fails the {kind} invariants")
    return WrongSet(w_set, z_set, frozenset(nx_), edge(x, y), bridge, kind, (d_sum, eps, p, t), xs)


def _path_components(graph: Graph, subset: frozenset[int]) -> list[list[int]]:
    """Components of graph[subset] that are paths, each listed end to end."""
    paths = []
    for comp in graph.components(subset):
        deg = {v: graph.induced_degree(v, subset) for v in comp}
        n_edges = sum(deg.values()) // 2
        if max(deg.values()) > 2 or n_edges != len(comp) - 1:
            continue
        if len(comp) == 1:
            paths.append(comp)
            continue
        start = min(v for v in comp if deg[v] == 1)
        order, prev = [start], None
        while len(order) < len(comp):
            nxt = [w for w in graph.adjacency[order[-1]] if w in subset and w != prev]
            prev = order[-1]
            order.append(nxt[0])
        paths.append(order)
    return paths


def check_technical_exclusions(wrong: WrongSet, graph: Graph, cover) -> list[int]:
    """Which of the four forbidden configurations hold for ``wrong`` (1-based).

    1. w in C with no neighbour in C & W;  2. a P2 component of G[C] inside
    W & C avoiding w;  3. a P4 component of G[C & W];  4. a P5 component of
    G[C & W] with w as an endpoint. Only ``wrong.W`` and ``wrong.bridge`` are read.
    """
    c = cover.vertices if isinstance(cover, VertexCover) else frozenset(cover)
    w = wrong.bridge[0]
    cw = c & wrong.W
    hits = []
    if w in c and not any(z in cw for z in graph.adjacency[w]):
        hits.append(1)
    if any(len(pth) == 2 and set(pth) <= cw and w not in pth for pth in _path_components(graph, c)):
        hits.append(2)
    local = _path_components(graph, cw)
    if any(len(pth) == 4 for pth in local):
        hits.append(3)
    if any(len(pth) == 5 and w in (pth[0], pth[-1]) for pth in local):
        hits.append(4)
    return hits


def hypothetical_wrong_set(graph: Graph, subset: Iterable[int]) -> WrongSet:
    """Wrap a vertex set with a single exit edge so the exclusion checker can be
    run on it; the (Z, Y, U) partition is left empty."""
    w_set = frozenset(subset)
    out = exit_edges(graph, w_set)
    if len(out) != 1:
        raise ValueError(f"{len(out)} edges leave the set, expected 1")
    a, b = out[0]
    bridge = (a, b) if a in w_set else (b, a)
    return WrongSet(w_set, frozenset(), frozenset(), (), bridge, "hypothesis", (0, 0, 0, 0))


def wrong_set_sweep(graphs: Iterable[Graph], minimal_covers) -> list[tuple[Graph, frozenset, WrongSet]]:
    """All wrong sets over the given graphs and their minimal covers.

    ``minimal_covers(graph)`` must yield the covers to examine.
    """
    found = []
    for g in graphs:
        for c in minimal_covers(g):
            vs = c.vertices if isinstance(c, VertexCover) else frozenset(c)
            ws = find_wrong_set(g, vs)
            if ws is not None:
                found.append((g, vs, ws))
    return found

