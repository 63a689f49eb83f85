"""Shared fixtures-in-code: corpus lists, networkx bridges and random bridged graphs."""

from __future__ import annotations

import networkx as nx
import numpy as np

from cubic_normality.decomposition import as_cubic_with_arms, connect, gadget
from cubic_normality.graph_core import Graph, GADGET_EDGES, named_graph, random_cubic

BRIDGELESS_NAMES = ["K4", "K33", "prism", "cube", "petersen", "tietze", "J3", "J5"]
BRIDGED_NAMES = ["gadget_completion_pair", "gadget_chain(3)", "gadget_chain(4)",
                 "ladder(0)", "ladder(1)", "ladder(2)", "ladder(3)"]
ARMED_NAMES = ["gadget"]

# acceptance criterion number -> "PASS ..." / "FAIL ..." line, reported by conftest
ACCEPTANCE: dict[int, str] = {}


def corpus_names():
    return BRIDGELESS_NAMES + BRIDGED_NAMES + ARMED_NAMES


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    ids = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph(len(ids), [(ids[a], ids[b]) for a, b in h.edges])


def subdivided_piece(rng: np.random.Generator, n_host: int, arms: int) -> Graph:
    """A random cubic graph with ``arms`` distinct edges subdivided, each new
    vertex carrying a pendant arm."""
    host = random_cubic(n_host, int(rng.integers(1 << 30)))
    picks = rng.choice(host.m, size=arms, replace=False)
    chosen = {host.sorted_edges[i] for i in picks}
    edges = [e for e in host.sorted_edges if e not in chosen]
    n = host.n
    for a, b in sorted(chosen):
        s, arm = n, n + 1
        edges += [(a, s), (s, b), (s, arm)]
        n += 2
    return Graph(n, edges)


def random_piece(rng: np.random.Generator) -> Graph:
    kind = int(rng.integers(4))
    if kind == 0:
        return Graph(6, GADGET_EDGES)
    if kind == 1:
        base = random_cubic(int(rng.choice([4, 6, 8])), int(rng.integers(1 << 30)))
        return named_graph("ladder", int(rng.integers(4))) if rng.random() < 0.5 else \
            _ladder_on(base, int(rng.integers(4)))
    return subdivided_piece(rng, int(rng.choice([4, 6, 8])), int(rng.integers(1, 4)))


def _ladder_on(base: Graph, rungs: int) -> Graph:
    from cubic_normality.graph_core import one_arm_ladder

    return one_arm_ladder(rungs, base)


def random_bridged(seed: int, pieces: int = 3, cap: bool = True) -> Graph:
    """Glue random pieces into a tree along arms; optionally close the leftover
    arms with gadgets so the result is cubic."""
    rng = np.random.default_rng(seed)
    acc = as_cubic_with_arms(random_piece(rng))
    for _ in range(pieces - 1):
        nxt = as_cubic_with_arms(random_piece(rng))
        a1 = sorted(acc.arms)[int(rng.integers(len(acc.arms)))]
        a2 = sorted(nxt.arms)[int(rng.integers(len(nxt.arms)))]
        acc = connect(acc, a1, nxt, a2)
        if not acc.arms:
            break
    if cap:
        while acc.arms:
            acc = connect(acc, min(acc.arms), gadget(), 5)
    return acc.graph


def exhaustive_max_matching(pairs, left) -> int:
    """Largest bipartite matching by trying every choice per left vertex."""
    adj = {a: sorted({b for a2, b in pairs if a2 == a}) for a in left}
    order = list(left)

    def best(i, used):
        if i == len(order):
            return 0
        skip = best(i + 1, used)
        take = max((1 + best(i + 1, used | {b}) for b in adj[order[i]] if b not in used), default=0)
        return max(skip, take)

    return best(0, frozenset())
