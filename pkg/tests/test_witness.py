import dataclasses
import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from cubic_normality.graph_core import (
    connected_cubic_graphs,
    endpoints,
    line_graph,
    named_graph,
    random_cubic,
)
from cubic_normality.oracle import Decision, brute_normal
from cubic_normality.witness import (
    Clique,
    NormalityWitness,
    build_certificate,
    certificate_from_json,
    certificate_to_json,
    to_normality_witness,
    verify_certificate,
    verify_witness,
)
from helpers import BRIDGED_NAMES, BRIDGELESS_NAMES, random_bridged


def certify(g):
    cert = build_certificate(g)
    return cert, to_normality_witness(cert)


def test_k4_certificate():
    cert, wit = certify(named_graph("K4"))
    assert len(cert.cover) == 3 and len(cert.per_edge) == 6
    assert all(len(s) == 2 for s in cert.per_edge.values())
    assert len(wit.cliques) == 3 and all(len(c.vertices) == 3 for c in wit.cliques)
    assert len(wit.stables) <= 6 and all(len(s) == 2 for s in wit.stables)


def test_petersen_certificate():
    g = named_graph("petersen")
    cert, wit = certify(g)
    assert len(cert.per_edge) == 15
    lo = -(-len(cert.cover) // 2)
    assert all(lo <= len(s) <= 5 for s in cert.per_edge.values())
    assert len(wit.cliques) in (6, 7) and len(wit.cliques) == len(cert.cover)
    assert all(len(c.vertices) == 3 for c in wit.cliques)
    assert all(c.vertices & s for c in wit.cliques for s in wit.stables)
    assert verify_witness(wit.host, wit)


@pytest.mark.parametrize("name", BRIDGELESS_NAMES + BRIDGED_NAMES + ["gadget"])
def test_corpus_round_trip(name):
    g = named_graph(name)
    cert, wit = certify(g)
    assert verify_certificate(g, cert)
    assert verify_witness(line_graph(g), wit)
    assert all(c.kind == "star" for c in wit.cliques)
    for e, s in cert.per_edge.items():
        assert e in s and cert.cover <= endpoints(s)


def test_stars_only_and_size_law_with_arms():
    g = named_graph("gadget")
    cert, wit = certify(g)
    arms = {v for v in range(g.n) if g.degree(v) == 1}
    assert not (cert.cover & arms)
    for c in wit.cliques:
        assert c.kind == "star" and len(c.vertices) == g.degree(c.center) == 3


def test_stables_are_deduplicated_and_sorted():
    cert, wit = certify(named_graph("cube"))
    assert len(set(wit.stables)) == len(wit.stables)
    assert list(wit.stables) == sorted(wit.stables, key=sorted)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([4, 6, 8, 10, 12, 16, 20, 24, 30]))
def test_random_cubic_round_trip(seed, n):
    g = random_cubic(n, seed)
    cert, wit = certify(g)
    assert verify_certificate(g, cert)
    assert verify_witness(line_graph(g), wit)
    assert len(wit.cliques) == len(cert.cover)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4), st.booleans())
def test_random_bridged_round_trip(seed, pieces, cap):
    g = random_bridged(seed, pieces, cap=cap)
    cert, wit = certify(g)
    assert verify_certificate(g, cert) and verify_witness(line_graph(g), wit)


def test_witness_verifies_whenever_oracle_decides():
    # the exhaustive decider never contradicts a verified witness
    for g in connected_cubic_graphs(4) + connected_cubic_graphs(6):
        cert, wit = certify(g)
        assert verify_witness(wit.host, wit)
        assert brute_normal(line_graph(g).line) is Decision.TRUE


# ---------------------------------------------------------------- negative controls


def test_missing_stable_set_is_a_coverage_failure():
    g = named_graph("K4")
    cert, wit = certify(g)
    lg = line_graph(g).line
    for i in range(len(wit.stables)):
        fewer = dataclasses.replace(wit, stables=wit.stables[:i] + wit.stables[i + 1:])
        rest = set().union(*fewer.stables)
        report = verify_witness(lg, fewer)
        if len(rest) < lg.n:
            assert not report and "coverage" in report.failure
            return
    pytest.fail("every stable set was redundant")


def test_c5_has_no_witness():
    # every family of cliques and stable sets of C5 fails; search them all
    g = named_graph("C5")
    lg = line_graph(g)
    c5 = lg.line
    cliques = [frozenset(e) for e in c5.sorted_edges] + [frozenset({v}) for v in range(5)]
    stables = [frozenset(s) for r in (1, 2) for s in itertools.combinations(range(5), r)
               if not any(c5.has_edge(a, b) for a, b in itertools.combinations(s, 2))]
    found = False
    for k in range(3, 6):
        for cs in itertools.combinations(cliques, k):
            if set().union(*cs) != set(range(5)):
                continue
            ok_stables = [s for s in stables if all(s & c for c in cs)]
            if ok_stables and set().union(*ok_stables) == set(range(5)):
                wit = NormalityWitness(tuple(Clique("edge", None, c) for c in cs),
                                       tuple(ok_stables), lg)
                found = found or bool(verify_witness(c5, wit))
    assert not found
    assert brute_normal(c5) is Decision.FALSE


def test_non_clique_reported():
    g = named_graph("K4")
    cert, wit = certify(g)
    lg = line_graph(g).line
    # line vertices 0 and 5 are the disjoint edges 01 and 23
    assert not lg.has_edge(0, 5)
    bad = (Clique("star", None, frozenset({0, 5})),) + wit.cliques
    report = verify_witness(lg, dataclasses.replace(wit, cliques=bad))
    assert not report and "clique 0" in report.failure


def test_non_stable_reported():
    g = named_graph("K4")
    cert, wit = certify(g)
    report = verify_witness(line_graph(g), dataclasses.replace(
        wit, stables=(frozenset({0, 1}),) + wit.stables))
    assert not report and "stable set 0" in report.failure


def test_out_of_range_ids_raise():
    g = named_graph("K4")
    cert, wit = certify(g)
    with pytest.raises(ValueError):
        verify_witness(line_graph(g), dataclasses.replace(wit, stables=(frozenset({99}),)))


def test_valid_certificate():
    g = named_graph("prism")
    assert verify_certificate(g, build_certificate(g))


def test_overlapping_matching_is_a_disjointness_failure():
    g = named_graph("K4")
    cert = build_certificate(g)
    e = (0, 1)
    tampered = dict(cert.per_edge)
    tampered[e] = cert.per_edge[e] | {(1, 2)}
    report = verify_certificate(g, dataclasses.replace(cert, per_edge=tampered))
    assert not report and "disjointness" in report.failure


def test_dropped_cover_vertex_is_a_cover_failure():
    g = named_graph("K4")
    cert = build_certificate(g)
    smaller = frozenset(sorted(cert.cover)[1:])
    report = verify_certificate(g, dataclasses.replace(cert, cover=smaller))
    assert not report and "cover" in report.failure


def test_missing_edge_membership_reported():
    g = named_graph("K4")
    cert = build_certificate(g)
    tampered = dict(cert.per_edge)
    tampered[(0, 1)] = cert.per_edge[(2, 3)] - {(0, 1)}
    report = verify_certificate(g, dataclasses.replace(cert, per_edge=tampered))
    assert not report and "membership" in report.failure


# ---------------------------------------------------------------- files


def test_json_round_trip_and_stability():
    g = named_graph("petersen")
    text = certificate_to_json(build_certificate(g))
    assert text == certificate_to_json(build_certificate(g))
    doc = json.loads(text)
    assert list(doc) == ["graph", "cover", "matchings", "cliques", "stables", "format_version"]
    assert doc["cover"] == sorted(doc["cover"]) and doc["format_version"] == 1
    cert, wit = certificate_from_json(text)
    assert cert.graph == g
    assert verify_certificate(g, cert) and verify_witness(line_graph(g), wit)
    assert certificate_to_json(cert, wit) == text


def test_json_rejects_unknown_version():
    text = certificate_to_json(build_certificate(named_graph("K4")))
    with pytest.raises(ValueError):
        certificate_from_json(text.replace('"format_version": 1', '"format_version": 2'))
