"""Normality witnesses for line graphs and their independent verification.

A good cover C with one covering matching per edge turns into a witness for
L(G) directly: the stars at the cover vertices are the cliques, the matchings
are the stable sets, and every star meets every matching because its centre is
an endpoint of the matching.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .decomposition import CoverSolution, solve
from .graph_core import (
    Edge,
    Graph,
    LineGraphMap,
    edge,
    endpoints,
    line_graph,
    parse_graph,
    to_graph6,
)

FORMAT_VERSION = 1


@dataclass(frozen=True)
class GoodCoverCertificate:
    graph: Graph
    cover: frozenset[int]
    per_edge: Mapping[Edge, frozenset[Edge]]


@dataclass(frozen=True)
class Clique:
    kind: str  # "star" or "triangle"
    center: int | None
    vertices: frozenset[int]


@dataclass(frozen=True)
class NormalityWitness:
    cliques: tuple[Clique, ...]
    stables: tuple[frozenset[int], ...]
    host: LineGraphMap


@dataclass(frozen=True)
class Report:
    ok: bool
    failure: str | None = None

    def __bool__(self):
        return self.ok


def build_certificate(graph: Graph, solution: CoverSolution | None = None) -> GoodCoverCertificate:
    sol = solution or solve(graph)
    per_edge = {e: sol.matching_for_edge(e) for e in graph.sorted_edges}
    return GoodCoverCertificate(graph, sol.cover.vertices, per_edge)


def to_normality_witness(cert: GoodCoverCertificate) -> NormalityWitness:
    g = cert.graph
    lg = line_graph(g)
    cliques = tuple(
        Clique("star", c, frozenset(lg.vertex_of_edge[edge(c, w)] for w in g.adjacency[c]))
        for c in sorted(cert.cover))
    distinct = {frozenset(lg.vertex_of_edge[f] for f in s) for s in cert.per_edge.values()}
    stables = tuple(sorted(distinct, key=sorted))
    return NormalityWitness(cliques, stables, lg)


def verify_witness(line: LineGraphMap | Graph, witness: NormalityWitness) -> Report:
    """Check the four conditions of normality for ``witness`` on ``line``."""
    lg = line.line if isinstance(line, LineGraphMap) else line
    for fam in ([c.vertices for c in witness.cliques], witness.stables):
        for s in fam:
            bad = [v for v in s if not 0 <= v < lg.n]
            if bad:
                raise ValueError(f"vertex ids {sorted(bad)} out of range")
    for i, c in enumerate(witness.cliques):
        vs = sorted(c.vertices)
        for k, a in enumerate(vs):
            for b in vs[k + 1:]:
                if not lg.has_edge(a, b):
                    return Report(False, f"clique {i}: vertices {a} and {b} not adjacent")
    for i, s in enumerate(witness.stables):
        vs = sorted(s)
        for k, a in enumerate(vs):
            for b in vs[k + 1:]:
                if lg.has_edge(a, b):
                    return Report(False, f"stable set {i}: vertices {a} and {b} adjacent")
    everything = set(range(lg.n))
    missed = everything - set().union(*(c.vertices for c in witness.cliques))
    if missed:
        return Report(False, f"coverage: cliques miss vertex {min(missed)}")
    missed = everything - set().union(*witness.stables)
    if missed:
        return Report(False, f"coverage: stable sets miss vertex {min(missed)}")
    for i, c in enumerate(witness.cliques):
        for j, s in enumerate(witness.stables):
            if not c.vertices & s:
                return Report(False, f"intersection: clique {i} and stable set {j} are disjoint")
    return Report(True)


def verify_certificate(graph: Graph, cert: GoodCoverCertificate) -> Report:
    c = set(cert.cover)
    if any(not 0 <= v < graph.n for v in c):
        return Report(False, "coverage: cover vertex id out of range")
    for u, v in graph.sorted_edges:
        if u not in c and v not in c:
            return Report(False, f"coverage: edge ({u}, {v}) not covered by the cover")
    missing = set(graph.edges) - set(cert.per_edge)
    if missing:
        return Report(False, f"coverage: no matching for edge {min(missing)}")
    for e in graph.sorted_edges:
        s = cert.per_edge[e]
        stray = [f for f in s if f not in graph.edges]
        if stray:
            return Report(False, f"matching for {e}: {min(stray)} is not an edge")
        seen: set[int] = set()
        for f in sorted(s):
            if seen & set(f):
                return Report(False, f"disjointness: matching for {e} reuses a vertex of {f}")
            seen |= set(f)
        if e not in s:
            return Report(False, f"membership: matching for {e} does not contain it")
        if not c <= endpoints(s):
            return Report(False, f"endpoint coverage: matching for {e} misses {min(c - endpoints(s))}")
    return Report(True)


# --------------------------------------------------------------------------
# certificate files


def certificate_to_json(cert: GoodCoverCertificate, witness: NormalityWitness | None = None) -> str:
    witness = witness or to_normality_witness(cert)
    g = cert.graph
    doc = {
        "graph": to_graph6(g).decode(),
        "cover": sorted(cert.cover),
        "matchings": [[list(f) for f in sorted(cert.per_edge[e])] for e in g.sorted_edges],
        "cliques": [{"center": c.center, "line_vertices": sorted(c.vertices)} for c in witness.cliques],
        "stables": [sorted(s) for s in witness.stables],
        "format_version": FORMAT_VERSION,
    }
    return json.dumps(doc) + "\n"


def certificate_from_json(text: str) -> tuple[GoodCoverCertificate, NormalityWitness]:
    doc = json.loads(text)
    if doc.get("format_version") != FORMAT_VERSION:
        raise ValueError(f"unsupported certificate format {doc.get('format_version')!r}")
    g = parse_graph(doc["graph"])
    if len(doc["matchings"]) != g.m:
        raise ValueError("one matching per edge expected")
    per_edge = {e: frozenset(edge(*f) for f in s) for e, s in zip(g.sorted_edges, doc["matchings"])}
    cert = GoodCoverCertificate(g, frozenset(doc["cover"]), per_edge)
    cliques = tuple(Clique("star", c["center"], frozenset(c["line_vertices"])) for c in doc["cliques"])
    wit = NormalityWitness(cliques, tuple(frozenset(s) for s in doc["stables"]), line_graph(g))
    return cert, wit
