import itertools
import random
from collections import deque

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from cubic_normality.graph_core import (
    BipartiteIncidence,
    DuplicateEdgeError,
    Graph,
    LoopError,
    MalformedHeaderError,
    VertexRangeError,
    bridges,
    connected_cubic_graphs,
    hall_violator,
    line_graph,
    max_bipartite_matching,
    named_graph,
    parse_graph,
    random_cubic,
    to_edgelist,
    to_graph6,
)
from helpers import corpus_names, exhaustive_max_matching, from_nx, to_nx


def girth(g: Graph) -> int:
    best = float("inf")
    for s in range(g.n):
        dist, parent = {s: 0}, {s: -1}
        q = deque([s])
        while q:
            v = q.popleft()
            for w in g.adjacency[v]:
                if w not in dist:
                    dist[w], parent[w] = dist[v] + 1, v
                    q.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


@st.composite
def simple_graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


# ---------------------------------------------------------------- parsing


def test_parse_k4_graph6():
    g = parse_graph(b"C~")
    assert g.n == 4 and g.m == 6
    assert g.sorted_edges == tuple(itertools.combinations(range(4), 2))
    assert to_graph6(g) == nx.to_graph6_bytes(nx.complete_graph(4), header=False).strip()


def test_parse_single_edge_edgelist():
    g = parse_graph("2 1\n0 1", format="edgelist")
    assert g.n == 2 and g.sorted_edges == ((0, 1),)


def test_edgelist_loop_rejected():
    with pytest.raises(LoopError):
        parse_graph("3 1\n0 0", format="edgelist")


@pytest.mark.parametrize("data, error", [
    ("3 2\n0 1\n1 0", DuplicateEdgeError),
    ("3 1\n0 5", VertexRangeError),
    ("3 2\n0 1", MalformedHeaderError),
    ("x y", MalformedHeaderError),
])
def test_edgelist_errors(data, error):
    with pytest.raises(error):
        parse_graph(data, format="edgelist")


@pytest.mark.parametrize("data", [b"", b"C", b"C~~", b"\x7f", b"~??"])
def test_graph6_malformed(data):
    with pytest.raises(MalformedHeaderError):
        parse_graph(data)


def test_graph6_k4_and_single_vertex():
    assert to_graph6(named_graph("K4")) == b"C~"
    assert to_graph6(Graph(1)) == b"@"
    assert nx.to_graph6_bytes(nx.empty_graph(1), header=False).strip() == b"@"


def test_petersen_round_trip():
    g = named_graph("petersen")
    assert parse_graph(to_graph6(g)) == g


@pytest.mark.parametrize("n", [62, 63, 100])
def test_graph6_long_size_header(n):
    h = nx.cycle_graph(n)
    g = from_nx(h)
    data = to_graph6(g)
    assert data == nx.to_graph6_bytes(h, header=False).strip()
    assert (data[:1] == b"~") == (n > 62)
    assert parse_graph(data) == g


@settings(max_examples=150, deadline=None)
@given(simple_graphs())
def test_graph6_matches_networkx(g):
    assert to_graph6(g) == nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert parse_graph(to_graph6(g)) == g
    assert parse_graph(to_edgelist(g), format="edgelist") == g


@settings(max_examples=100, deadline=None)
@given(simple_graphs())
def test_adjacency_symmetric_and_handshake(g):
    assert all(v in g.adjacency[w] for v in range(g.n) for w in g.adjacency[v])
    assert sum(g.degrees()) == 2 * g.m


# ---------------------------------------------------------------- line graphs


def test_line_graph_of_p3_is_single_edge():
    lg = line_graph(Graph(3, [(0, 1), (1, 2)])).line
    assert lg.n == 2 and lg.sorted_edges == ((0, 1),)


def test_line_graph_of_k4_is_octahedron():
    lg = line_graph(named_graph("K4")).line
    assert lg.n == 6 and set(lg.degrees()) == {4}
    assert nx.is_isomorphic(to_nx(lg), nx.octahedral_graph())


def test_line_graph_of_c5_is_c5():
    assert nx.is_isomorphic(to_nx(line_graph(named_graph("C5")).line), nx.cycle_graph(5))


@settings(max_examples=100, deadline=None)
@given(simple_graphs(10))
def test_line_graph_against_shared_endpoints(g):
    if not g.m:
        with pytest.raises(ValueError):
            line_graph(g)
        return
    lm = line_graph(g)
    for i, e in enumerate(lm.edge_of_vertex):
        assert lm.vertex_of_edge[e] == i
        u, v = e
        assert lm.line.degree(i) == g.degree(u) + g.degree(v) - 2
    for i, j in itertools.combinations(range(lm.line.n), 2):
        shared = set(lm.edge_of_vertex[i]) & set(lm.edge_of_vertex[j])
        assert lm.line.has_edge(i, j) == bool(shared)


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_cubic_line_graphs_are_4_regular(n):
    for g in connected_cubic_graphs(n):
        assert set(line_graph(g).line.degrees()) == {4}


# ---------------------------------------------------------------- bridges


def removal_oracle(g: Graph) -> frozenset:
    base = len(g.components())
    return frozenset(e for e in g.sorted_edges if len(g.remove_edges([e]).components()) > base)


def test_petersen_bridgeless():
    assert bridges(named_graph("petersen")) == frozenset()


def test_gadget_pair_single_bridge():
    g = named_graph("gadget_completion_pair")
    assert bridges(g) == removal_oracle(g)
    assert len(bridges(g)) == 1


def test_tree_path_all_bridges():
    g = named_graph("P4")
    assert bridges(g) == frozenset(g.sorted_edges) and len(g.sorted_edges) == 3


@pytest.mark.parametrize("name", corpus_names())
def test_bridges_match_removal_oracle_on_corpus(name):
    g = named_graph(name)
    assert bridges(g) == removal_oracle(g)


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_bridges_match_removal_oracle_on_stored_lists(n):
    for g in connected_cubic_graphs(n):
        assert bridges(g) == removal_oracle(g)


@settings(max_examples=150, deadline=None)
@given(simple_graphs())
def test_bridges_property(g):
    assert bridges(g) == removal_oracle(g)
    assert bridges(g) == frozenset(tuple(sorted(e)) for e in nx.bridges(to_nx(g)))


# ---------------------------------------------------------------- bipartite matching


def test_matching_single_pair():
    inc = BipartiteIncidence(("a",), ("b",), {"a": {"b"}})
    assert max_bipartite_matching(inc) == {"a": "b"}
    assert hall_violator(inc) is None


def test_matching_star_and_pigeonhole_violator():
    inc = BipartiteIncidence(("a1", "a2"), ("b",), {"a1": {"b"}, "a2": {"b"}})
    assert len(max_bipartite_matching(inc)) == 1
    x = hall_violator(inc)
    assert x == {"a1", "a2"} and inc.neighborhood(x) == {"b"}


@st.composite
def bipartite_instances(draw, max_side=7):
    nl, nr = draw(st.integers(0, max_side)), draw(st.integers(0, max_side))
    pairs = [(a, b) for a in range(nl) for b in range(nr)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    adj = {a: {b + 100 for a2, b in chosen if a2 == a} for a in range(nl)}
    return BipartiteIncidence(tuple(range(nl)), tuple(range(100, 100 + nr)), adj)


def test_random_6x6_matches_exhaustive():
    rng = random.Random(6)
    for _ in range(30):
        adj = {a: {b for b in range(10, 16) if rng.random() < 0.3} for a in range(6)}
        inc = BipartiteIncidence(tuple(range(6)), tuple(range(10, 16)), adj)
        pairs = [(a, b) for a in adj for b in adj[a]]
        assert len(max_bipartite_matching(inc)) == exhaustive_max_matching(pairs, inc.left)


@settings(max_examples=200, deadline=None)
@given(bipartite_instances())
def test_matching_and_violator_duality(inc):
    m = max_bipartite_matching(inc)
    assert len(set(m.values())) == len(m)
    assert all(b in inc.adj[a] for a, b in m.items())
    pairs = [(a, b) for a in inc.left for b in inc.adj[a]]
    assert len(m) == exhaustive_max_matching(pairs, inc.left)
    x = hall_violator(inc, m)
    assert (x is None) == (len(m) == len(inc.left))
    if x is not None:
        assert len(inc.neighborhood(x)) < len(x)
        # König: the deficiency of the violator equals the unmatched count
        assert len(x) - len(inc.neighborhood(x)) == len(inc.left) - len(m)


# ---------------------------------------------------------------- corpus


def test_petersen_shape():
    g = named_graph("petersen")
    assert (g.n, g.m, girth(g)) == (10, 15, 5)
    assert nx.is_isomorphic(to_nx(g), nx.petersen_graph())


def test_flower_snark_5():
    g = named_graph("flower_snark", 5)
    assert (g.n, g.m) == (20, 30) and g.is_cubic()
    assert named_graph("flower_snark(5)") == g == named_graph("J5")


def test_c5_named():
    assert nx.is_isomorphic(to_nx(named_graph("C", 5)), nx.cycle_graph(5))
    assert named_graph("C5") == named_graph("C", 5)


def test_tietze_shape():
    g = named_graph("tietze")
    assert (g.n, g.m) == (12, 18) and g.is_cubic() and g.is_connected()
    assert sum(nx.triangles(to_nx(g)).values()) == 3


@pytest.mark.parametrize("name", ["petersen", "J3", "J5"])
def test_snarks_have_no_3_edge_colouring(name):
    # a proper 3-edge-colouring is a proper 3-colouring of the line graph
    assert not _three_colourable(to_nx(line_graph(named_graph(name)).line))
    assert _three_colourable(to_nx(line_graph(named_graph("prism")).line))


def _three_colourable(h: nx.Graph) -> bool:
    order = sorted(h.nodes, key=lambda v: -h.degree(v))
    colour = {}

    def place(i):
        if i == len(order):
            return True
        v = order[i]
        for c in range(3):
            if all(colour.get(w) != c for w in h[v]):
                colour[v] = c
                if place(i + 1):
                    return True
                del colour[v]
        return False

    return place(0)


def test_unknown_name():
    with pytest.raises(KeyError):
        named_graph("dodecahedron-ish")


def test_random_cubic_n4_is_k4():
    assert nx.is_isomorphic(to_nx(random_cubic(4, 0)), nx.complete_graph(4))


def test_random_cubic_n10_seed1():
    g = random_cubic(10, 1)
    assert g.degrees() == [3] * 10
    assert random_cubic(10, 1) == g


def test_random_cubic_hundred_samples():
    for seed in range(100):
        g = random_cubic(12, seed)
        assert g.is_cubic() and g.is_connected() and g.n == 12


@pytest.mark.parametrize("n", [3, 5, 2])
def test_random_cubic_rejects_bad_n(n):
    with pytest.raises(ValueError):
        random_cubic(n)


@pytest.mark.parametrize("n, count", [(4, 1), (6, 2), (8, 5), (10, 19), (12, 85)])
def test_stored_cubic_lists(n, count):
    gs = connected_cubic_graphs(n)
    assert len(gs) == count
    assert all(g.n == n and g.is_cubic() and g.is_connected() for g in gs)
    hs = [to_nx(g) for g in gs]
    for a, b in itertools.combinations(hs, 2):
        assert not nx.is_isomorphic(a, b)
